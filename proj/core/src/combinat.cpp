#include "hotplug/combinat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hotplug {

long long binom(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    if (a > 62) throw std::invalid_argument("binom argument exceeds supported range");
    b = std::min(b, a - b);
    // Intermediates peak at C(62,31)*31 ~ 1.45e19: fits unsigned, not signed.
    unsigned long long r = 1;
    for (long long i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return static_cast<long long>(r);
}

SubsetFamily::SubsetFamily(std::vector<int> ground, int t)
    : ground_(std::move(ground)), t_(t) {
    if (t_ < 0 || t_ > static_cast<int>(ground_.size())) {
        throw std::invalid_argument("subset size out of range");
    }
    if (!std::is_sorted(ground_.begin(), ground_.end()) ||
        std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end()) {
        throw std::invalid_argument("ground set must be strictly increasing");
    }
    const int n = static_cast<int>(ground_.size());
    members_.reserve(static_cast<std::size_t>(binom(n, t_)));
    std::vector<int> idx(t_);
    for (int i = 0; i < t_; ++i) idx[i] = i;
    while (true) {
        std::vector<int> s(t_);
        for (int i = 0; i < t_; ++i) s[i] = ground_[idx[i]];
        members_.push_back(std::move(s));
        int i = t_ - 1;
        while (i >= 0 && idx[i] == n - t_ + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t_; ++j) idx[j] = idx[j - 1] + 1;
    }
}

const std::vector<int>& SubsetFamily::member(long long i) const {
    if (i < 0 || i >= size()) throw std::invalid_argument("subset rank out of range");
    return members_[static_cast<std::size_t>(i)];
}

long long SubsetFamily::index_of(std::span<const int> subset) const {
    if (static_cast<int>(subset.size()) != t_) {
        throw std::invalid_argument("subset has wrong size");
    }
    const int n = static_cast<int>(ground_.size());
    // Map members to ground positions, then accumulate the lex rank.
    long long rank = 0;
    int prev = -1;
    for (int i = 0; i < t_; ++i) {
        auto it = std::lower_bound(ground_.begin(), ground_.end(), subset[i]);
        if (it == ground_.end() || *it != subset[i]) {
            throw std::invalid_argument("subset element not in ground set");
        }
        const int p = static_cast<int>(it - ground_.begin());
        if (p <= prev) throw std::invalid_argument("subset not strictly increasing");
        for (int j = prev + 1; j < p; ++j) rank += binom(n - 1 - j, t_ - 1 - i);
        prev = p;
    }
    return rank;
}

std::vector<std::vector<int>> subsets_lex(const std::vector<int>& ground, int t) {
    return SubsetFamily(ground, t).all();
}

int demand_rank(std::span<const int> demands) {
    std::set<int> seen(demands.begin(), demands.end());
    return static_cast<int>(seen.size());
}

std::vector<int> fill_demands(std::span<const int> active,
                              std::span<const int> demands, int total_users) {
    if (active.empty() || active.size() != demands.size()) {
        throw std::invalid_argument("active set and demand vector mismatch");
    }
    if (!std::is_sorted(active.begin(), active.end())) {
        throw std::invalid_argument("active set must be sorted");
    }
    if (active.front() < 1 || active.back() > total_users) {
        throw std::invalid_argument("active user out of range");
    }
    std::vector<int> full(static_cast<std::size_t>(total_users), demands[0]);
    for (std::size_t i = 0; i < active.size(); ++i) {
        full[static_cast<std::size_t>(active[i]) - 1] = demands[i];
    }
    return full;
}

std::vector<int> leaders(std::span<const int> users, std::span<const int> demands) {
    if (users.size() != demands.size()) {
        throw std::invalid_argument("user set and demand vector mismatch");
    }
    std::map<int, int> first_for_file;
    for (std::size_t i = 0; i < users.size(); ++i) {
        auto [it, inserted] = first_for_file.try_emplace(demands[i], users[i]);
        if (!inserted && users[i] < it->second) it->second = users[i];
    }
    std::vector<int> out;
    out.reserve(first_for_file.size());
    for (const auto& [file, user] : first_for_file) out.push_back(user);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hotplug
