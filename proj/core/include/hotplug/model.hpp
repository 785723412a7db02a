#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hotplug/field.hpp"
#include "hotplug/linalg.hpp"
#include "hotplug/rational.hpp"

namespace hotplug {

/// Static description of one cache network instance: `users` caching users of
/// which any `active_users` may be online, `files` equal-size files of
/// `symbols` field symbols each.
struct SystemParams {
    int users;        // total caching users, labelled 1..users
    int active_users; // number simultaneously online
    int files;        // library size, labelled 1..files
    int symbols;      // symbols per file
    PrimeField field;

    /// min(files, active_users): the largest possible number of distinct
    /// demanded files in a scenario.
    int max_distinct_demands() const noexcept {
        return files < active_users ? files : active_users;
    }

    /// Dimension of the concatenated-library coefficient space.
    long long library_dim() const noexcept {
        return static_cast<long long>(files) * symbols;
    }

    /// Throws std::invalid_argument when any count is out of range.
    void validate() const;
};

/// One realization of the library: files[i] has `symbols` field elements.
struct FileLibrary {
    std::vector<std::vector<Fe>> files;

    /// All files concatenated, file 1 first.
    std::vector<Fe> flat() const;
};

/// Deterministic pseudorandom library; the same (params, seed) always yields
/// the same symbols and distinct seeds almost surely differ.
FileLibrary generate_library(const SystemParams& params, std::uint64_t seed);

/// One demand configuration: a sorted set of active users and, parallel to
/// it, the file demanded by each. Users and files are 1-based.
struct DemandScenario {
    std::vector<int> active;
    std::vector<int> demands;

    /// Demand of a given active user; throws when the user is not active.
    int demand_of(int user) const;

    bool operator==(const DemandScenario&) const = default;
};

/// Every scenario of the instance: all active sets (lex order) crossed with
/// all demand vectors (odometer order, last coordinate fastest).
std::vector<DemandScenario> enumerate_scenarios(const SystemParams& params);

/// Number of scenarios enumerate_scenarios would return.
long long count_scenarios(const SystemParams& params);

/// A labelled block of linear combinations of library symbols. Row r of
/// coeffs gives one transmitted or cached symbol as a functional on the
/// concatenated library; packets are fixed by placement/delivery structure
/// and never depend on realized file contents.
struct LinearPacket {
    std::string label;
    FieldMatrix coeffs; // rows x (files * symbols)
};

/// coeffs * flat_library, one realized symbol per packet row.
std::vector<Fe> realize(const LinearPacket& packet, const std::vector<Fe>& flat_library);

/// Placement output: per-user packet lists plus the exact memory the scheme
/// claims (in units of files). Placement happens before any scenario is
/// drawn, so nothing here may reference an active set or a demand.
struct CachePlan {
    std::vector<std::vector<LinearPacket>> user_packets; // index 0 = user 1
    Rational memory;

    long long user_rows(int user) const;
};

/// Delivery output for one scenario plus the exact load claimed for it
/// (transmitted rows / symbols per file).
struct Transmission {
    std::vector<LinearPacket> packets;
    Rational load;

    long long total_rows() const;
};

/// Smallest positive B divisible by every entry of divisors.
int choose_symbol_count(const std::vector<int>& divisors);

} // namespace hotplug
