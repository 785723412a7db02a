#pragma once

#include <hotplug/linalg.hpp>
#include <hotplug/model.hpp>
#include <hotplug/rational.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hotplug {

class Scheme;

/// Incremental Gaussian elimination over GF(q) used as the scheme-agnostic
/// decoding oracle. Rows live in a `width`-dimensional coefficient space and
/// each carries a block of `value_width` realized symbols; `recover` answers
/// whether a unit coordinate vector lies in the row span and, if so, returns
/// the same linear combination applied to the value blocks.
class LinearDecoder {
public:
  LinearDecoder(PrimeField field, std::size_t width, std::size_t value_width);

  /// Reduces the row into the internal RREF basis. Throws
  /// std::invalid_argument on dimension mismatch and std::logic_error if the
  /// row is linearly dependent in coefficient space but carries conflicting
  /// values (impossible for honestly realized rows).
  void add_row(std::span<const Fe> coeffs, std::span<const Fe> values);

  /// Coefficient-space-only test: is e_coordinate in the span of added rows?
  bool can_recover(std::size_t coordinate) const;

  /// Value block of the unit vector e_coordinate, or nullopt when the added
  /// rows do not determine that coordinate.
  std::optional<std::vector<Fe>> recover(std::size_t coordinate) const;

  std::size_t width() const { return width_; }
  std::size_t value_width() const { return value_width_; }

private:
  struct Row {
    std::vector<Fe> coeffs;
    std::vector<Fe> values;
  };

  PrimeField field_;
  std::size_t width_;
  std::size_t value_width_;
  std::vector<Row> rows_;        // reduced rows, one pivot column each
  std::vector<int> pivot_row_;   // column -> index into rows_, or -1
};

/// Decodes file `demanded_file` (1-based) purely from coefficient rows and
/// their realized values; returns its B symbols iff the stacked system
/// determines all of them. Coefficient rows span the N*B-dimensional
/// concatenated file space.
std::optional<std::vector<Fe>> generic_linear_decode(
    const FieldMatrix& cache_rows, std::span<const Fe> cache_values,
    const FieldMatrix& received_rows, std::span<const Fe> received_values,
    int demanded_file, const SystemParams& params);

/// Convenience overload: realizes the user's cache packets and the
/// transmission against the library, then decodes the demanded file.
std::optional<std::vector<Fe>> generic_linear_decode(
    const SystemParams& params, const CachePlan& plan, const Transmission& tx,
    int user, int demanded_file, const FileLibrary& library);

/// Outcome of decoding one (scenario, user) pair both ways.
struct UserDecodeResult {
  int user = 0;              ///< 1-based user index.
  bool decoded = false;      ///< Scheme decoder returned exactly the library file.
  bool oracle_decoded = false;  ///< Generic decoder returned exactly the library file.
  bool agree = true;         ///< Scheme and generic decoders returned the same result.
};

/// One scenario's delivery plus per-active-user decode results.
struct SimulationResult {
  Transmission tx;
  std::vector<UserDecodeResult> users;
};

/// Runs delivery for one scenario against an already-computed placement and
/// decodes with both the scheme decoder and the generic oracle. A
/// coefficient-space recoverability check (library-independent) runs as a
/// second pass and must agree with the realized decode.
SimulationResult simulate(const Scheme& scheme, const CachePlan& plan,
                          const DemandScenario& scenario,
                          const FileLibrary& library);

/// A (scenario, user) pair whose decode did not return the demanded file.
struct DecodeFailure {
  DemandScenario scenario;
  int user = 0;
};

/// Aggregate result of simulating one scheme over many scenarios.
struct VerificationReport {
  VerificationReport(std::string scheme_name, SystemParams system, std::optional<int> split)
      : scheme(std::move(scheme_name)), params(std::move(system)), t(split) {}

  std::string scheme;
  SystemParams params;
  std::optional<int> t;
  long long scenarios_checked = 0;
  std::vector<DecodeFailure> decode_failures;  ///< first kStoredFailureCap only
  long long failure_count = 0;                 ///< total, never truncated
  long long oracle_disagreements = 0;
  Rational worst_load = Rational(0);
  Rational formula_load = Rational(0);
  bool match = false;   ///< failure_count == 0 and worst_load == formula_load
  bool sampled = false; ///< true for sampled runs; match is never set then

  static constexpr long long kStoredFailureCap = 10000;
};

/// Thrown when an exhaustive run would exceed the scenario cap; carries the
/// exact scenario count so callers can report it and suggest sampling.
class CapExceededError : public std::runtime_error {
public:
  CapExceededError(long long count, long long cap);
  long long scenario_count;
  long long cap;
};

/// Iterates every scenario of the scheme's parameter space, recording decode
/// failures and the measured worst-case load. Refuses (CapExceededError) when
/// the scenario count exceeds `cap`; never silently samples.
VerificationReport exhaustive_report(const Scheme& scheme, std::uint64_t seed,
                                     long long cap = 1'000'000);

/// Simulates `samples` pseudo-random scenarios (deterministic in `seed`).
/// The report is marked sampled and its match flag stays false: sampling can
/// refute but never certify.
VerificationReport sampled_report(const Scheme& scheme, std::uint64_t seed,
                                  long long samples);

}  // namespace hotplug
