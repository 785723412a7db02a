#pragma once

#include <hotplug/combinat.hpp>
#include <hotplug/linalg.hpp>
#include <hotplug/model.hpp>
#include <hotplug/rational.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hotplug {

/// Identifies one of the placement/delivery constructions.
enum class SchemeId {
  man,              ///< Classical MAN placement + YMA delivery (requires K' == K).
  baseline,         ///< MAN over all K users; offline demands filled in before YMA delivery.
  new1,             ///< MDS-precoded MAN placement with delivery restricted to the active set.
  new2,             ///< Single-block coded caches Z_k = G_k (F_1 + ... + F_N), M = 1/K'.
  remark2,          ///< Block-coded caches G_T per t-subset T with MAN-like delivery over the active set.
  remark2_example,  ///< Hard-coded (K, K') = (6, 3) binary construction with M/N = 2/3, R = 1/3.
};

std::string to_string(SchemeId id);

/// Parses a CLI scheme name ("man", "base", "new1", "new2", "remark2",
/// "remark2ex"); returns nullopt for anything else.
std::optional<SchemeId> parse_scheme_id(std::string_view name);

/// Number of equal pieces a file must split into, i.e. the divisor the
/// scheme requires of B.
int subfile_divisor(SchemeId id, int users, int active_users, int t);

/// Smallest prime field order that makes the scheme's generator matrices
/// constructible by Vandermonde slicing (trivial cases return 2).
std::uint32_t default_field_order(SchemeId id, int users, int active_users,
                                  int files, int t, int symbols);

/// Theoretical corner point (M, R) of the scheme at split parameter t,
/// evaluated purely from binomial formulas (no matrices are built).
TradeoffPoint theoretical_corner(SchemeId id, int users, int active_users,
                                 int files, int t);

/// A placement/delivery construction bound to concrete system parameters.
///
/// `place` is scenario-independent; `deliver` sees only (I, d[I]); `decode`
/// must reconstruct the demanded file from the user's cache packets and the
/// transmission alone (the library argument is used solely to realize packet
/// values, standing in for the symbols the user physically holds).
class Scheme {
public:
  virtual ~Scheme() = default;

  const SystemParams& params() const { return params_; }
  SchemeId id() const { return id_; }
  std::string name() const { return to_string(id_); }

  /// MAN-style split parameter; nullopt for schemes without one.
  std::optional<int> t() const { return t_; }

  /// Cache contents for every user. Placement never sees a scenario.
  virtual CachePlan place() const = 0;

  /// Multicast packets for one scenario; coefficients only.
  virtual Transmission deliver(const DemandScenario& scenario) const = 0;

  /// Recovers the user's demanded file (B symbols) or nullopt when the
  /// cache + transmission do not determine it. The default routes through
  /// the generic linear decoder; schemes with a spelled-out decoding rule
  /// override it.
  virtual std::optional<std::vector<Fe>> decode(const DemandScenario& scenario,
                                                int user, const CachePlan& plan,
                                                const Transmission& tx,
                                                const FileLibrary& library) const;

  /// True when `decode` is a scheme-specific rule rather than the generic
  /// elimination decoder (used to cross-check the two).
  virtual bool has_fast_decoder() const { return false; }

  /// Theoretical (M, R) pair this instance is built to achieve.
  TradeoffPoint corner_point() const;

protected:
  Scheme(SchemeId id, SystemParams params, std::optional<int> t);

  SystemParams params_;
  SchemeId id_;
  std::optional<int> t_;
};

/// MAN placement: each file is split into C(K, t) pieces indexed by t-subsets
/// W of [K]; user k caches piece (i, W) for every file i and every W with
/// k in W. Memory is exactly N t / K. Throws std::invalid_argument unless
/// 0 <= t <= K and C(K, t) divides B.
CachePlan man_placement(const SystemParams& params, int t);

/// YMA delivery for a full length-K demand vector: sends
/// X_S = sum_{k in S} F_{d_k, S\{k}} over all (t+1)-subsets S of [K] that
/// intersect the leader set, i.e. C(K, t+1) - C(K - r, t+1) packets where
/// r is the number of distinct demanded files.
Transmission yma_delivery(const SystemParams& params, int t,
                          const std::vector<int>& full_demand);

/// Builds a scheme instance, resolving the symbol count B (smallest legal
/// multiple of the scheme's divisor by default) and the field order (the
/// scheme's default unless forced). Throws std::invalid_argument for
/// inadmissible parameters (range, divisibility, unsupported regime, or a
/// forced field too small for the required generator matrices).
std::unique_ptr<Scheme> make_scheme(SchemeId id, int users, int active_users,
                                    int files, int t = -1,
                                    std::optional<std::uint32_t> field_order = std::nullopt,
                                    std::optional<int> symbols = std::nullopt);

}  // namespace hotplug
