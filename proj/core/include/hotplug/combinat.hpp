#pragma once

#include <span>
#include <vector>

namespace hotplug {

/// Binomial coefficient with the convention binom(a, b) == 0 unless
/// a >= b >= 0; binom(0, 0) == 1. Arguments are capped at a <= 62 so the
/// result always fits (desk-scale systems only).
long long binom(long long a, long long b);

/// The t-subsets of a fixed ground set in lexicographic order of their sorted
/// member tuples, with rank lookups in both directions.
class SubsetFamily {
public:
    /// ground must be strictly increasing. 0 <= t <= |ground|.
    SubsetFamily(std::vector<int> ground, int t);

    long long size() const noexcept { return static_cast<long long>(members_.size()); }
    int subset_size() const noexcept { return t_; }
    const std::vector<int>& ground() const noexcept { return ground_; }

    /// i-th subset, 0-based, as a sorted vector of ground elements.
    const std::vector<int>& member(long long i) const;

    /// Lexicographic rank of a sorted subset of the ground set.
    /// Throws std::invalid_argument when the subset is not a member.
    long long index_of(std::span<const int> subset) const;

    const std::vector<std::vector<int>>& all() const noexcept { return members_; }

private:
    std::vector<int> ground_;
    int t_;
    std::vector<std::vector<int>> members_;
};

/// All t-subsets of ground in lexicographic order.
std::vector<std::vector<int>> subsets_lex(const std::vector<int>& ground, int t);

/// Number of distinct values in a demand vector.
int demand_rank(std::span<const int> demands);

/// Extends the demands of the active users to all users 1..total_users: an
/// inactive user is assigned the demand of the lowest-indexed active user.
/// active must be a nonempty sorted subset of 1..total_users and demands its
/// parallel demand vector.
std::vector<int> fill_demands(std::span<const int> active,
                              std::span<const int> demands, int total_users);

/// One leader per distinct demanded file: the lowest-indexed user among
/// `users` demanding it. Returned sorted; |leaders| == demand_rank(demands).
std::vector<int> leaders(std::span<const int> users, std::span<const int> demands);

} // namespace hotplug
