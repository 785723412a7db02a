#include "doctest.h"

#include <hotplug/model.hpp>
#include <hotplug/schemes.hpp>
#include <hotplug/verifier.hpp>

#include <vector>
#include <stdexcept>

using namespace hotplug;

TEST_CASE("linear decoder recovers coordinates exactly when spanned") {
  PrimeField f(5);
  LinearDecoder dec(f, 4, 1);
  std::vector<Fe> r0 = {1, 0, 0, 0}, v0 = {3};
  std::vector<Fe> r1 = {0, 1, 0, 0}, v1 = {4};
  dec.add_row(r0, v0);
  dec.add_row(r1, v1);
  CHECK(dec.can_recover(0));
  CHECK(dec.can_recover(1));
  CHECK_FALSE(dec.can_recover(2));
  CHECK(dec.recover(0) == std::vector<Fe>{3});
  CHECK(dec.recover(1) == std::vector<Fe>{4});
  CHECK_FALSE(dec.recover(3).has_value());

  // A consistent dependent row is absorbed silently.
  std::vector<Fe> sum = {1, 1, 0, 0}, vsum = {2};  // 3 + 4 = 2 mod 5
  CHECK_NOTHROW(dec.add_row(sum, vsum));

  // A conflicting dependent row is a contract violation.
  std::vector<Fe> bad = {1, 1, 0, 0}, vbad = {0};
  CHECK_THROWS_AS(dec.add_row(bad, vbad), std::logic_error);

  std::vector<Fe> wrong_width = {1, 0};
  CHECK_THROWS_AS(dec.add_row(wrong_width, v0), std::invalid_argument);
}

TEST_CASE("linear decoder solves a dense system by elimination") {
  PrimeField f(5);
  LinearDecoder dec(f, 2, 1);
  // x + y = 2, x + 2y = 4  ->  x = 0, y = 2 over GF(5).
  std::vector<Fe> r0 = {1, 1}, v0 = {2};
  std::vector<Fe> r1 = {1, 2}, v1 = {4};
  dec.add_row(r0, v0);
  dec.add_row(r1, v1);
  CHECK(dec.recover(0) == std::vector<Fe>{0});
  CHECK(dec.recover(1) == std::vector<Fe>{2});
}

TEST_CASE("linear decoder carries multi-symbol value blocks") {
  PrimeField f(3);
  LinearDecoder dec(f, 2, 2);
  std::vector<Fe> r0 = {1, 1}, v0 = {1, 2};
  std::vector<Fe> r1 = {0, 1}, v1 = {2, 2};
  dec.add_row(r0, v0);
  dec.add_row(r1, v1);
  // e_0 = r0 - r1: values (1-2, 2-2) = (2, 0) mod 3.
  CHECK(dec.recover(0) == std::vector<Fe>{2, 0});
  CHECK(dec.recover(1) == std::vector<Fe>{2, 2});
}

TEST_CASE("generic decode returns a fully cached file verbatim") {
  SystemParams p{2, 1, 2, 3, PrimeField(7)};
  FileLibrary lib{{{1, 2, 3}, {4, 5, 6}}};
  // User 1 caches file 2 uncoded; the transmission is empty.
  FieldMatrix rows(3, 6, p.field);
  for (int r = 0; r < 3; ++r) rows.at(r, 3 + r) = 1;
  CachePlan plan{{{LinearPacket{"z", rows}}, {}}, rat(1)};
  Transmission tx{{}, rat(0)};
  auto got = generic_linear_decode(p, plan, tx, 1, 2, lib);
  CHECK(got == std::vector<Fe>{4, 5, 6});
  // File 1 is undetermined from this cache.
  CHECK_FALSE(generic_linear_decode(p, plan, tx, 1, 1, lib).has_value());
  // An empty cache and empty transmission decode nothing.
  auto none = generic_linear_decode(p, plan, tx, 2, 1, lib);
  CHECK_FALSE(none.has_value());
}

TEST_CASE("simulate reports per-user decode and oracle agreement") {
  auto s = make_scheme(SchemeId::new1, 3, 2, 2, 1);
  auto plan = s->place();
  auto lib = generate_library(s->params(), 99);
  auto sim = simulate(*s, plan, {{1, 2}, {1, 2}}, lib);
  REQUIRE(sim.users.size() == 2);
  for (const auto& u : sim.users) {
    CHECK(u.decoded);
    CHECK(u.oracle_decoded);
    CHECK(u.agree);
  }
  CHECK(sim.tx.load == rat(1, 2));
}

TEST_CASE("exhaustive reports are deterministic and library-independent") {
  auto s = make_scheme(SchemeId::new2, 3, 2, 2);
  auto a = exhaustive_report(*s, 123);
  auto b = exhaustive_report(*s, 123);
  auto c = exhaustive_report(*s, 456);
  CHECK(a.scenarios_checked == b.scenarios_checked);
  CHECK(a.worst_load == b.worst_load);
  CHECK(a.failure_count == b.failure_count);
  // Decodability is structural: another library realization agrees.
  CHECK(a.match == c.match);
  CHECK(a.worst_load == c.worst_load);
  CHECK(a.scenarios_checked == 12);
  CHECK(a.match);
  CHECK_FALSE(a.sampled);
}

TEST_CASE("exhaustive verification refuses oversized scenario spaces") {
  // C(8,8) * 6^8 = 1679616 scenarios exceeds the default cap.
  auto s = make_scheme(SchemeId::man, 8, 8, 6, 1);
  CHECK_THROWS_AS(exhaustive_report(*s, 1), CapExceededError);
  try {
    exhaustive_report(*s, 1);
  } catch (const CapExceededError& e) {
    CHECK(e.scenario_count == 1679616);
    CHECK(e.cap == 1000000);
    CHECK(std::string(e.what()).find("sampling") != std::string::npos);
  }
  // A raised cap allows it; a lowered one refuses earlier.
  CHECK_THROWS_AS(exhaustive_report(*s, 1, 10), CapExceededError);
}

TEST_CASE("sampled reports never set match but do count failures") {
  auto s = make_scheme(SchemeId::man, 8, 8, 6, 1);
  auto rep = sampled_report(*s, 2024, 64);
  CHECK(rep.sampled);
  CHECK(rep.scenarios_checked == 64);
  CHECK(rep.failure_count == 0);
  CHECK_FALSE(rep.match);  // sampling can refute, never certify
  CHECK(rep.worst_load <= rep.formula_load);

  auto again = sampled_report(*s, 2024, 64);
  CHECK(again.worst_load == rep.worst_load);

  // The sampler finds the known decode failures of the remark-2 example.
  auto broken = make_scheme(SchemeId::remark2_example, 6, 3, 3);
  auto brep = sampled_report(*broken, 7, 500);
  CHECK(brep.sampled);
  CHECK(brep.failure_count > 0);
  REQUIRE_FALSE(brep.decode_failures.empty());
  CHECK_FALSE(brep.match);
}

TEST_CASE("verification reports carry failure details for broken schemes") {
  auto s = make_scheme(SchemeId::remark2_example, 6, 3, 3);
  auto rep = exhaustive_report(*s, 5);
  CHECK(rep.scenarios_checked == 540);
  CHECK_FALSE(rep.match);
  CHECK(rep.failure_count > 0);
  CHECK(rep.failure_count ==
        static_cast<long long>(rep.decode_failures.size()));  // under the cap
  CHECK(rep.worst_load == rep.formula_load);  // the load claim itself holds
  CHECK(rep.oracle_disagreements == 0);
  const auto& f = rep.decode_failures.front();
  CHECK(f.scenario.active.size() == 3);
  CHECK(f.scenario.demands.size() == 3);
}
