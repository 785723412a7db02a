#pragma once

#include <hotplug/rational.hpp>
#include <hotplug/schemes.hpp>

#include <string>
#include <vector>

namespace hotplug {

/// Piecewise-linear memory-load curve through breakpoints with strictly
/// increasing M, evaluable by linear interpolation.
class TradeoffCurve {
public:
  /// Breakpoints must be nonempty and strictly increasing in M.
  explicit TradeoffCurve(std::vector<TradeoffPoint> breakpoints);

  const std::vector<TradeoffPoint>& breakpoints() const { return points_; }

  /// Linear interpolation; throws std::invalid_argument outside the
  /// breakpoint range (queries there are contract violations).
  Rational eval(const Rational& memory) const;

  bool non_increasing() const;
  bool convex() const;

private:
  std::vector<TradeoffPoint> points_;
};

/// Exact corner points of one scheme over its full t range plus the trivial
/// endpoints (0, r') and (N, 0); points with M > N are dropped. Throws
/// std::invalid_argument for new2 with Kp < N (unsupported regime).
std::vector<TradeoffPoint> achievable_points(SchemeId id, int users,
                                             int active_users, int files);

/// Union of the baseline, new1 and (when Kp >= N) new2 points: everything
/// the combined scheme family achieves by memory sharing.
std::vector<TradeoffPoint> combined_achievable_points(int users, int active_users,
                                                      int files);

/// Lower convex hull over M; dominated and collinear interior points are
/// removed. Throws std::invalid_argument on empty input.
TradeoffCurve lower_convex_envelope(std::vector<TradeoffPoint> points);

/// Decentralized-placement load ((1-u)/u)(1 - (1-u)^r') with u = M/N;
/// M = 0 returns r' by continuity. Requires 0 <= M <= N.
Rational decentralized_load(const Rational& memory, int files, int active_users);

/// Cut-set bound: max over s in [min(N,Kp)] of s - (s/floor(N/s)) M,
/// floored at 0. Requires 0 <= M <= N.
Rational cutset_bound(const Rational& memory, int files, int active_users);

/// Exact optimum for Kp = N = 2: max{2-2M, 3/2-M, 1-M/2}, floored at 0.
/// Requires 0 <= M <= 2.
Rational optimal_2x2(const Rational& memory);

/// Exact optimum for Kp = 2, N >= 3: max{2-3M/N, 1-M/N}, floored at 0.
Rational optimal_2user(const Rational& memory, int files);

/// Lemma-4 style converse, maximized over s in [min(N,Kp)] and alpha on the
/// uniform grid {i/alpha_steps : 0 <= i <= alpha_steps} (always includes the
/// exact alpha = 1). Exact rational arithmetic; grid coarseness only ever
/// weakens the bound.
class YmaConverse {
public:
  YmaConverse(int files, int active_users, int alpha_steps = 1000);

  /// Bound value at M, clamped at 0. Requires 0 <= M <= N.
  Rational eval(const Rational& memory) const;

private:
  struct Line {
    Rational intercept;  // value at M = 0
    Rational slope;      // R = intercept - slope * M
  };
  int files_;
  std::vector<Line> hull_;          // upper envelope, slopes decreasing
  std::vector<Rational> boundary_;  // hull_[i] is maximal on [boundary_[i-1], boundary_[i]]
};

/// One-shot evaluation of the Lemma-4 converse.
Rational yma_converse(const Rational& memory, int files, int active_users,
                      int alpha_steps = 1000);

/// Outcome of checking one Theorem-2 optimality item.
struct OptimalityItem {
  int item = 0;
  bool applicable = false;
  bool holds = false;   // meaningful only when applicable
  std::string detail;
};

struct OptimalityReport {
  std::vector<OptimalityItem> items;

  bool all_applicable_hold() const;
};

/// Checks, with exact rational equality at breakpoints and on a uniform grid,
/// that each applicable Theorem-2 optimality case coincides with its cited
/// converse: 1 (r'=1), 2 (Kp=N=2), 3 (Kp=2, N>=3), 4 (the (1/Kp, N(1-1/Kp))
/// corner on the s=N cut-set line), 5 (N >= Kp(Kp+1)/2 segment on the Lemma-4
/// line), 6 (last segment on R = 1 - M/N). Inapplicable items are reported
/// as skipped.
OptimalityReport verify_optimality_cases(int users, int active_users, int files,
                                         int grid_steps = 101,
                                         int alpha_steps = 1000);

/// Result of the multiplicative-gap scan.
struct GapCertificate {
  Rational max_ratio = Rational(0);
  Rational bound = Rational(0);
  bool ok = false;        // max_ratio <= bound
  bool chain_ok = false;  // baseline envelope <= decentralized load pointwise
};

/// Max over a uniform M grid of envelope(baseline) / yma_converse, asserted
/// against the 2.00884 constant; where the converse is 0 the baseline load
/// must also be 0 (only at M = N). Also asserts the baseline envelope never
/// exceeds the decentralized load (Eq.-9 chain).
GapCertificate gap_certificate(int users, int active_users, int files,
                               int grid_steps = 201, int alpha_steps = 1000);

}  // namespace hotplug
