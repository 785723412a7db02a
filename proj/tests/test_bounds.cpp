#include "doctest.h"

#include <hotplug/bounds.hpp>
#include <hotplug/schemes.hpp>

#include <algorithm>
#include <vector>
#include <stdexcept>

using namespace hotplug;

namespace {

// Independent brute-force evaluation of the Lemma-4 converse: scan every
// (s, alpha) pair and recompute the minimal admissible ell from scratch.
Rational brute_yma(const Rational& m, int files, int active, int steps) {
  int rp = std::min(files, active);
  Rational best(0);
  for (int s = 1; s <= rp; ++s) {
    for (int i = 0; i <= steps; ++i) {
      Rational alpha(i, steps);
      int ell = -1;
      for (int cand = 1; cand <= s; ++cand) {
        Rational lhs = Rational(s * (s - 1) - cand * (cand - 1), 2) + alpha * s;
        if (lhs <= Rational((files - cand + 1) * cand)) { ell = cand; break; }
      }
      REQUIRE(ell > 0);
      Rational value = Rational(s - 1) + alpha -
                       m * (Rational(s * (s - 1) - ell * (ell - 1)) +
                            2 * alpha * s) /
                           Rational(2 * (files - ell + 1));
      if (value > best) best = value;
    }
  }
  return best;
}

Rational grid_m(int files, int i, int steps) {
  return Rational(files) * i / steps;
}

}  // namespace

TEST_CASE("tradeoff curves validate, interpolate and classify shape") {
  CHECK_THROWS_AS(TradeoffCurve({}), std::invalid_argument);
  CHECK_THROWS_AS((TradeoffCurve({{rat(1), rat(1)}, {rat(1), rat(0)}})),
                  std::invalid_argument);  // M not strictly increasing

  TradeoffCurve c({{rat(0), rat(2)}, {rat(2), rat(0)}});
  CHECK(c.eval(rat(0)) == rat(2));
  CHECK(c.eval(rat(1, 2)) == rat(3, 2));
  CHECK(c.eval(rat(2)) == rat(0));
  CHECK_THROWS_AS(c.eval(rat(-1)), std::invalid_argument);
  CHECK_THROWS_AS(c.eval(rat(5, 2)), std::invalid_argument);
  CHECK(c.non_increasing());
  CHECK(c.convex());

  TradeoffCurve bumpy({{rat(0), rat(2)}, {rat(1), rat(1)}, {rat(2), rat(3, 2)}});
  CHECK_FALSE(bumpy.non_increasing());
  TradeoffCurve concave({{rat(0), rat(2)}, {rat(1), rat(19, 10)}, {rat(2), rat(0)}});
  CHECK_FALSE(concave.convex());
}

TEST_CASE("lower convex envelope drops dominated and collinear points") {
  auto env = lower_convex_envelope(
      {{rat(0), rat(2)}, {rat(1), rat(19, 10)}, {rat(2), rat(0)}});
  CHECK(env.breakpoints() ==
        std::vector<TradeoffPoint>{{rat(0), rat(2)}, {rat(2), rat(0)}});

  auto keep = lower_convex_envelope({{rat(0), rat(3)},
                                     {rat(1), rat(1)},
                                     {rat(2), rat(1, 2)},
                                     {rat(3), rat(1, 4)}});
  CHECK(keep.breakpoints().size() == 4);
  CHECK(keep.convex());
  CHECK(keep.non_increasing());

  // Duplicate memories keep the lower load; collinear middles vanish.
  auto dedup = lower_convex_envelope(
      {{rat(0), rat(2)}, {rat(0), rat(3)}, {rat(1), rat(1)}, {rat(2), rat(0)}});
  CHECK(dedup.breakpoints() ==
        std::vector<TradeoffPoint>{{rat(0), rat(2)}, {rat(2), rat(0)}});
}

TEST_CASE("achievable point sets contain the hand-computed corners") {
  auto base = achievable_points(SchemeId::baseline, 10, 5, 20);
  CHECK(base.front() == TradeoffPoint{rat(0), rat(5)});
  CHECK(base.back() == TradeoffPoint{rat(20), rat(0)});
  CHECK(std::count(base.begin(), base.end(), TradeoffPoint{rat(2), rat(7, 2)}) == 1);

  auto combined = lower_convex_envelope(combined_achievable_points(3, 2, 2));
  CHECK(combined.breakpoints() ==
        std::vector<TradeoffPoint>{{rat(0), rat(2)},
                                   {rat(1, 2), rat(1)},
                                   {rat(1), rat(1, 2)},
                                   {rat(2), rat(0)}});

  // new2 requires K' >= N and is excluded from the pool otherwise.
  CHECK_THROWS_AS(achievable_points(SchemeId::new2, 4, 2, 3), std::invalid_argument);
  for (const auto& p : combined_achievable_points(4, 2, 3)) CHECK(p.memory <= rat(3));
}

TEST_CASE("new1 t=1 corner equals the closed-form small-memory point") {
  for (int kp = 1; kp <= 8; ++kp) {
    for (int files = 1; files <= 12; ++files) {
      auto corner = theoretical_corner(SchemeId::new1, kp + 2, kp, files, 1);
      CHECK(corner.memory == Rational(files, kp));
      Rational expect = files >= kp
                            ? Rational(kp - 1, 2)
                            : Rational(files) - Rational(files * (files + 1), 2 * kp);
      CHECK(corner.load == expect);
      // The corner does not depend on K.
      CHECK(theoretical_corner(SchemeId::new1, kp, kp, files, 1) == corner);
      CHECK(theoretical_corner(SchemeId::new1, kp + 7, kp, files, 1) == corner);
    }
  }
}

TEST_CASE("new1 envelopes for K in {10,15} coincide; K = 5 adds breakpoints") {
  auto e10 = lower_convex_envelope(achievable_points(SchemeId::new1, 10, 5, 20));
  auto e15 = lower_convex_envelope(achievable_points(SchemeId::new1, 15, 5, 20));
  CHECK(e10.breakpoints() == e15.breakpoints());
  CHECK(e10.breakpoints() ==
        std::vector<TradeoffPoint>{{rat(0), rat(5)}, {rat(4), rat(2)}, {rat(20), rat(0)}});

  auto e5 = lower_convex_envelope(achievable_points(SchemeId::new1, 5, 5, 20));
  CHECK(e5.breakpoints() ==
        std::vector<TradeoffPoint>{{rat(0), rat(5)},
                                   {rat(4), rat(2)},
                                   {rat(8), rat(1)},
                                   {rat(12), rat(1, 2)},
                                   {rat(16), rat(1, 5)},
                                   {rat(20), rat(0)}});
  // All three coincide up to the shared t=1 corner.
  for (int i = 0; i <= 20; ++i) {
    Rational m = Rational(4) * i / 20;
    CHECK(e5.eval(m) == e10.eval(m));
  }
}

TEST_CASE("decentralized load matches hand values and dominates the classical envelope") {
  CHECK(decentralized_load(rat(0), 2, 2) == rat(2));
  CHECK(decentralized_load(rat(1), 2, 2) == rat(3, 4));
  CHECK(decentralized_load(rat(2), 2, 2) == rat(0));
  CHECK(decentralized_load(rat(10), 20, 5) ==
        Rational(1) * (1 - rat_pow(rat(1, 2), 5)));  // (1-u)/u = 1 at u = 1/2

  for (auto [kp, files] : {std::pair{2, 2}, std::pair{5, 20}}) {
    auto env = lower_convex_envelope(
        achievable_points(SchemeId::man, kp, kp, files));
    for (int i = 0; i <= 100; ++i) {
      Rational m = grid_m(files, i, 100);
      CHECK(decentralized_load(m, files, kp) >= env.eval(m));
    }
  }
}

TEST_CASE("cutset bound matches hand values") {
  CHECK(cutset_bound(rat(0), 2, 2) == rat(2));
  CHECK(cutset_bound(rat(1, 2), 2, 2) == rat(1));
  CHECK(cutset_bound(rat(2), 2, 2) == rat(0));
  CHECK(cutset_bound(rat(1, 3), 2, 3) == rat(4, 3));  // s = 2 cut
  CHECK(cutset_bound(rat(1), 3, 1) == rat(2, 3));
  CHECK(cutset_bound(rat(6), 6, 3) == rat(0));
}

TEST_CASE("two-user optimal curves match their closed forms") {
  CHECK(optimal_2x2(rat(0)) == rat(2));
  CHECK(optimal_2x2(rat(1, 2)) == rat(1));
  CHECK(optimal_2x2(rat(1)) == rat(1, 2));
  CHECK(optimal_2x2(rat(3, 2)) == rat(1, 4));
  CHECK(optimal_2x2(rat(2)) == rat(0));
  for (int files : {3, 4, 7}) {
    CHECK(optimal_2user(Rational(files, 2), files) == rat(1, 2));
    CHECK(optimal_2user(rat(0), files) == rat(2));
    CHECK(optimal_2user(Rational(files), files) == rat(0));
  }
}

TEST_CASE("lemma-4 converse equals a brute-force scan of (s, alpha) lines") {
  const int steps = 50;
  for (auto [files, active] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{5, 3},
                               std::pair{10, 4}, std::pair{3, 3}, std::pair{6, 3}}) {
    YmaConverse fast(files, active, steps);
    for (int i = 0; i <= 24; ++i) {
      Rational m = grid_m(files, i, 24);
      CHECK(fast.eval(m) == brute_yma(m, files, active, steps));
    }
    // Off-grid rationals exercise interior segments of the hull.
    for (auto frac : {rat(1, 3), rat(2, 7), rat(5, 9)}) {
      Rational m = Rational(files) * frac;
      CHECK(fast.eval(m) == brute_yma(m, files, active, steps));
    }
  }
  CHECK(yma_converse(rat(0), 3, 2) == rat(2));
  CHECK(yma_converse(rat(3), 3, 2) == rat(0));
}

TEST_CASE("converse bounds never exceed the achievable envelope") {
  for (auto [users, active, files] :
       {std::tuple{3, 2, 2}, std::tuple{6, 3, 3}, std::tuple{5, 2, 4}}) {
    auto env = lower_convex_envelope(
        combined_achievable_points(users, active, files));
    for (int i = 0; i <= 40; ++i) {
      Rational m = grid_m(files, i, 40);
      Rational achievable = env.eval(m);
      CHECK(cutset_bound(m, files, active) <= achievable);
      CHECK(yma_converse(m, files, active, 100) <= achievable);
    }
  }
}

TEST_CASE("optimality case reports mark applicability correctly") {
  auto rep = verify_optimality_cases(3, 2, 2);
  REQUIRE(rep.items.size() == 6);
  CHECK_FALSE(rep.items[0].applicable);  // r' = 2
  CHECK(rep.items[1].applicable);        // K' = N = 2
  CHECK(rep.items[1].holds);
  CHECK_FALSE(rep.items[2].applicable);  // needs N >= 3
  CHECK(rep.items[3].applicable);        // K' >= N
  CHECK(rep.items[3].holds);
  CHECK_FALSE(rep.items[4].applicable);  // 2N < K'(K'+1)
  CHECK(rep.items[5].applicable);
  CHECK(rep.items[5].holds);
  CHECK(rep.all_applicable_hold());

  CHECK(verify_optimality_cases(4, 1, 3).items[0].applicable);
  CHECK(verify_optimality_cases(4, 1, 3).items[0].holds);
  CHECK(verify_optimality_cases(5, 2, 4).items[2].applicable);
  CHECK(verify_optimality_cases(5, 2, 4).items[2].holds);
  CHECK(verify_optimality_cases(5, 4, 3).items[3].applicable);
  CHECK(verify_optimality_cases(5, 4, 3).items[3].holds);
  CHECK(verify_optimality_cases(5, 3, 6).items[4].applicable);
  CHECK(verify_optimality_cases(5, 3, 6).items[4].holds);
}

TEST_CASE("gap certificate freezes the (4,2,2) ratio and validates the chain") {
  auto cert = gap_certificate(4, 2, 2);
  CHECK(cert.bound == Rational(200884, 100000));
  CHECK(cert.max_ratio == rat(4, 3));  // attained at M = 1
  CHECK(cert.ok);
  CHECK(cert.chain_ok);

  auto wide = gap_certificate(7, 4, 10);
  CHECK(wide.ok);
  CHECK(wide.chain_ok);
  CHECK(wide.max_ratio > rat(1));
}

TEST_CASE("emitted tradeoff curves are convex and non-increasing") {
  for (auto [users, active, files] :
       {std::tuple{3, 2, 2}, std::tuple{6, 3, 3}, std::tuple{10, 5, 20}}) {
    for (auto id : {SchemeId::baseline, SchemeId::new1}) {
      auto env = lower_convex_envelope(achievable_points(id, users, active, files));
      CHECK(env.convex());
      CHECK(env.non_increasing());
    }
    auto env = lower_convex_envelope(
        combined_achievable_points(users, active, files));
    CHECK(env.convex());
    CHECK(env.non_increasing());
  }
}
