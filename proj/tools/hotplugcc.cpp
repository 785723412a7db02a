#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hotplug/bounds.hpp"
#include "hotplug/csv.hpp"
#include "hotplug/schemes.hpp"
#include "hotplug/verifier.hpp"

namespace {

using hotplug::Rational;

constexpr int kSampledScenarioCount = 20000;

struct Options {
  int users = 0;
  int active_users = 0;
  int files = 0;
  int t = -1;
  bool t_set = false;
  std::vector<std::string> schemes;
  int grid = 101;
  int alpha_steps = 1000;
  std::uint64_t seed = 0;
  std::uint32_t field_order = 0;
  std::string out;
  bool sample = false;
};

void add_system_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--K", opt.users, "total number of users")->required();
  cmd->add_option("--Kp", opt.active_users, "number of active users at delivery")->required();
  cmd->add_option("--N", opt.files, "number of library files")->required();
}

void add_scheme_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--scheme", opt.schemes,
                  "scheme to run: man, base, new1, new2, remark2, remark2ex (repeatable)");
  cmd->add_option("--t", opt.t, "cache parameter t (omit to sweep all admissible values)");
  cmd->add_option("--q", opt.field_order, "prime field order (default chosen per scheme)");
}

std::vector<hotplug::SchemeId> parse_schemes(const std::vector<std::string>& names) {
  std::vector<hotplug::SchemeId> ids;
  for (const auto& name : names) {
    auto id = hotplug::parse_scheme_id(name);
    if (!id) throw std::invalid_argument("unknown scheme '" + name + "'");
    ids.push_back(*id);
  }
  return ids;
}

std::vector<int> admissible_t_values(hotplug::SchemeId id, const Options& opt) {
  if (opt.t_set) return {opt.t};
  std::vector<int> values;
  switch (id) {
    case hotplug::SchemeId::man:
    case hotplug::SchemeId::baseline:
      for (int t = 0; t <= opt.users; ++t) values.push_back(t);
      break;
    case hotplug::SchemeId::new1:
      for (int t = 0; t <= opt.active_users; ++t) values.push_back(t);
      break;
    case hotplug::SchemeId::remark2:
      for (int t = 1; t <= opt.active_users - 1; ++t) values.push_back(t);
      break;
    case hotplug::SchemeId::new2:
    case hotplug::SchemeId::remark2_example:
      values.push_back(0);
      break;
  }
  return values;
}

nlohmann::json report_to_json(const hotplug::VerificationReport& rep) {
  nlohmann::json j;
  j["scheme"] = rep.scheme;
  j["K"] = rep.params.users;
  j["Kp"] = rep.params.active_users;
  j["N"] = rep.params.files;
  if (rep.t) j["t"] = *rep.t;
  j["q"] = rep.params.field.order();
  j["B"] = rep.params.symbols;
  j["scenarios"] = rep.scenarios_checked;
  j["failures"] = rep.failure_count;
  j["oracle_disagreements"] = rep.oracle_disagreements;
  j["worst_load"] = hotplug::to_fraction_string(rep.worst_load);
  j["formula_load"] = hotplug::to_fraction_string(rep.formula_load);
  j["match"] = rep.match;
  j["sampled"] = rep.sampled;
  nlohmann::json failures = nlohmann::json::array();
  std::size_t shown = std::min<std::size_t>(rep.decode_failures.size(), 16);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& f = rep.decode_failures[i];
    failures.push_back({{"active", f.scenario.active},
                        {"demands", f.scenario.demands},
                        {"user", f.user}});
  }
  j["first_failures"] = failures;
  return j;
}

void describe_failure(const hotplug::VerificationReport& rep, std::ostream& os) {
  if (rep.decode_failures.empty()) return;
  const auto& f = rep.decode_failures.front();
  os << "first failing scenario: active={";
  for (std::size_t i = 0; i < f.scenario.active.size(); ++i)
    os << (i ? "," : "") << f.scenario.active[i];
  os << "} demands=(";
  for (std::size_t i = 0; i < f.scenario.demands.size(); ++i)
    os << (i ? "," : "") << f.scenario.demands[i];
  os << ") user=" << f.user << "\n";
}

int run_verify(const Options& opt) {
  auto ids = parse_schemes(opt.schemes);
  if (ids.empty()) throw std::invalid_argument("verify requires at least one --scheme");

  std::optional<std::uint32_t> forced_q;
  if (opt.field_order != 0) forced_q = opt.field_order;

  bool all_match = true;
  nlohmann::json out_json;
  out_json["runs"] = nlohmann::json::array();
  std::optional<hotplug::VerificationReport> first_failed;

  for (auto id : ids) {
    for (int t : admissible_t_values(id, opt)) {
      auto scheme = hotplug::make_scheme(id, opt.users, opt.active_users, opt.files, t,
                                         forced_q);
      hotplug::VerificationReport rep =
          opt.sample ? hotplug::sampled_report(*scheme, opt.seed, kSampledScenarioCount)
                     : hotplug::exhaustive_report(*scheme, opt.seed);
      bool run_ok = opt.sample ? rep.failure_count == 0 : rep.match;
      std::cout << "scheme=" << rep.scheme;
      if (rep.t) std::cout << " t=" << *rep.t;
      std::cout << " K=" << rep.params.users << " Kp=" << rep.params.active_users
                << " N=" << rep.params.files << " q=" << rep.params.field.order()
                << " B=" << rep.params.symbols << " scenarios=" << rep.scenarios_checked
                << (rep.sampled ? " (sampled)" : "") << " failures=" << rep.failure_count
                << " worst_load=" << hotplug::to_fraction_string(rep.worst_load)
                << " formula_load=" << hotplug::to_fraction_string(rep.formula_load)
                << (opt.sample ? (run_ok ? " ok=true" : " ok=false")
                               : (rep.match ? " match=true" : " match=false"))
                << "\n";
      if (!run_ok) {
        all_match = false;
        if (rep.failure_count > 0 && !first_failed) first_failed = rep;
      }
      if (!opt.out.empty()) out_json["runs"].push_back(report_to_json(rep));
    }
  }

  if (first_failed) describe_failure(*first_failed, std::cout);
  if (!opt.out.empty()) {
    std::ofstream os(opt.out);
    if (!os) throw std::runtime_error("cannot open output file '" + opt.out + "'");
    os << out_json.dump(2) << "\n";
  }
  return all_match ? 0 : 1;
}

std::vector<Rational> memory_grid(int files, int steps) {
  std::vector<Rational> grid;
  for (int i = 0; i <= steps - 1; ++i) grid.push_back(Rational(files) * i / (steps - 1));
  return grid;
}

void append_curve_rows(std::vector<hotplug::CurveRow>& rows, const std::string& name,
                       const std::vector<Rational>& grid,
                       const std::function<Rational(const Rational&)>& f) {
  for (const auto& m : grid) rows.push_back({name, {m, f(m)}});
}

int run_tradeoff(const Options& opt) {
  std::vector<hotplug::SchemeId> ids = parse_schemes(opt.schemes);
  if (ids.empty()) {
    ids = {hotplug::SchemeId::baseline, hotplug::SchemeId::new1};
    if (opt.active_users >= opt.files) ids.push_back(hotplug::SchemeId::new2);
  }
  if (opt.grid < 2) throw std::invalid_argument("--grid must be at least 2");

  std::vector<hotplug::CurveRow> rows;
  for (auto id : ids) {
    auto pts = hotplug::lower_convex_envelope(
        hotplug::achievable_points(id, opt.users, opt.active_users, opt.files));
    for (const auto& p : pts.breakpoints()) rows.push_back({hotplug::to_string(id), p});
  }
  auto combined = hotplug::lower_convex_envelope(
      hotplug::combined_achievable_points(opt.users, opt.active_users, opt.files));
  for (const auto& p : combined.breakpoints()) rows.push_back({"combined", p});

  auto grid = memory_grid(opt.files, opt.grid);
  const int files = opt.files;
  const int active = opt.active_users;
  append_curve_rows(rows, "cutset", grid,
                    [&](const Rational& m) { return hotplug::cutset_bound(m, files, active); });
  hotplug::YmaConverse yma(files, active, opt.alpha_steps);
  append_curve_rows(rows, "lemma4", grid, [&](const Rational& m) { return yma.eval(m); });
  if (active == 2 && files == 2)
    append_curve_rows(rows, "optimal_2x2", grid,
                      [&](const Rational& m) { return hotplug::optimal_2x2(m); });
  if (active == 2 && files >= 3)
    append_curve_rows(rows, "optimal_2user", grid,
                      [&](const Rational& m) { return hotplug::optimal_2user(m, files); });
  append_curve_rows(rows, "decentralized", grid, [&](const Rational& m) {
    return hotplug::decentralized_load(m, files, active);
  });

  if (opt.out.empty()) {
    hotplug::write_tradeoff_csv(std::cout, rows);
  } else {
    std::ofstream os(opt.out);
    if (!os) throw std::runtime_error("cannot open output file '" + opt.out + "'");
    hotplug::write_tradeoff_csv(os, rows);
  }
  return 0;
}

int run_bounds(const Options& opt) {
  if (opt.grid < 2) throw std::invalid_argument("--grid must be at least 2");
  std::vector<hotplug::CurveRow> rows;
  auto grid = memory_grid(opt.files, opt.grid);
  const int files = opt.files;
  const int active = opt.active_users;
  append_curve_rows(rows, "cutset", grid,
                    [&](const Rational& m) { return hotplug::cutset_bound(m, files, active); });
  hotplug::YmaConverse yma(files, active, opt.alpha_steps);
  append_curve_rows(rows, "lemma4", grid, [&](const Rational& m) { return yma.eval(m); });
  if (active == 2 && files == 2)
    append_curve_rows(rows, "optimal_2x2", grid,
                      [&](const Rational& m) { return hotplug::optimal_2x2(m); });
  if (active == 2 && files >= 3)
    append_curve_rows(rows, "optimal_2user", grid,
                      [&](const Rational& m) { return hotplug::optimal_2user(m, files); });

  if (opt.out.empty()) {
    hotplug::write_tradeoff_csv(std::cout, rows);
  } else {
    std::ofstream os(opt.out);
    if (!os) throw std::runtime_error("cannot open output file '" + opt.out + "'");
    hotplug::write_tradeoff_csv(os, rows);
  }
  return 0;
}

int run_gap(const Options& opt) {
  auto cert = hotplug::gap_certificate(opt.users, opt.active_users, opt.files, opt.grid,
                                       opt.alpha_steps);
  bool ok = cert.ok && cert.chain_ok;
  std::cout << "max_ratio=" << hotplug::to_decimal_string(cert.max_ratio, 6)
            << " bound=2.00884 ok=" << (ok ? "true" : "false") << "\n";
  if (!cert.chain_ok)
    std::cout << "chain violation: achievable curve exceeds the decentralized load\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hotplug coded caching: schemes, verification, and tradeoff bounds"};
  app.require_subcommand(1);

  Options opt;

  auto* verify = app.add_subcommand("verify", "exhaustively verify decodability of a scheme");
  add_system_flags(verify, opt);
  add_scheme_flags(verify, opt);
  verify->add_option("--seed", opt.seed, "RNG seed for library contents and sampling");
  verify->add_option("--out", opt.out, "write a JSON report to this path");
  verify->add_flag("--sample", opt.sample,
                   "verify a random sample of scenarios instead of all of them");

  auto* tradeoff = app.add_subcommand("tradeoff", "emit achievable and converse curves as CSV");
  add_system_flags(tradeoff, opt);
  tradeoff->add_option("--scheme", opt.schemes,
                       "achievable scheme curves to include (repeatable)");
  tradeoff->add_option("--grid", opt.grid, "number of memory grid points");
  tradeoff->add_option("--alpha-steps", opt.alpha_steps, "alpha discretization for lemma4");
  tradeoff->add_option("--out", opt.out, "write CSV to this path instead of stdout");

  auto* bounds = app.add_subcommand("bounds", "emit converse bound curves as CSV");
  add_system_flags(bounds, opt);
  bounds->add_option("--grid", opt.grid, "number of memory grid points");
  bounds->add_option("--alpha-steps", opt.alpha_steps, "alpha discretization for lemma4");
  bounds->add_option("--out", opt.out, "write CSV to this path instead of stdout");

  auto* gap = app.add_subcommand("gap", "check the multiplicative optimality gap certificate");
  add_system_flags(gap, opt);
  gap->add_option("--grid", opt.grid, "number of memory grid points");
  gap->add_option("--alpha-steps", opt.alpha_steps, "alpha discretization for lemma4");

  CLI11_PARSE(app, argc, argv);
  opt.t_set = verify->count("--t") > 0;

  try {
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(tradeoff)) return run_tradeoff(opt);
    if (app.got_subcommand(bounds)) return run_bounds(opt);
    if (app.got_subcommand(gap)) return run_gap(opt);
  } catch (const hotplug::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
