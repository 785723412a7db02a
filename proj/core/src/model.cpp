#include "hotplug/model.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "hotplug/combinat.hpp"

namespace hotplug {

void SystemParams::validate() const {
    if (users < 1 || active_users < 1 || active_users > users) {
        throw std::invalid_argument("need 1 <= active_users <= users");
    }
    if (files < 1) throw std::invalid_argument("need at least one file");
    if (symbols < 1) throw std::invalid_argument("need at least one symbol per file");
}

std::vector<Fe> FileLibrary::flat() const {
    std::vector<Fe> out;
    std::size_t total = 0;
    for (const auto& f : files) total += f.size();
    out.reserve(total);
    for (const auto& f : files) out.insert(out.end(), f.begin(), f.end());
    return out;
}

FileLibrary generate_library(const SystemParams& params, std::uint64_t seed) {
    params.validate();
    // Plain modular draws from a fixed-seed engine: identical on every
    // platform, unlike uniform_int_distribution.
    std::mt19937_64 rng(seed);
    FileLibrary lib;
    lib.files.assign(static_cast<std::size_t>(params.files),
                     std::vector<Fe>(static_cast<std::size_t>(params.symbols)));
    for (auto& file : lib.files) {
        for (auto& s : file) s = params.field.reduce(rng());
    }
    return lib;
}

int DemandScenario::demand_of(int user) const {
    auto it = std::lower_bound(active.begin(), active.end(), user);
    if (it == active.end() || *it != user) {
        throw std::invalid_argument("user is not active in this scenario");
    }
    return demands[static_cast<std::size_t>(it - active.begin())];
}

long long count_scenarios(const SystemParams& params) {
    long long count = binom(params.users, params.active_users);
    for (int i = 0; i < params.active_users; ++i) {
        if (count > (1LL << 62) / params.files) {
            throw std::invalid_argument("scenario count overflow");
        }
        count *= params.files;
    }
    return count;
}

std::vector<DemandScenario> enumerate_scenarios(const SystemParams& params) {
    params.validate();
    std::vector<int> all_users(static_cast<std::size_t>(params.users));
    std::iota(all_users.begin(), all_users.end(), 1);
    std::vector<DemandScenario> out;
    out.reserve(static_cast<std::size_t>(count_scenarios(params)));
    for (const auto& active : subsets_lex(all_users, params.active_users)) {
        std::vector<int> demands(static_cast<std::size_t>(params.active_users), 1);
        while (true) {
            out.push_back({active, demands});
            int i = params.active_users - 1;
            while (i >= 0 && demands[static_cast<std::size_t>(i)] == params.files) {
                demands[static_cast<std::size_t>(i)] = 1;
                --i;
            }
            if (i < 0) break;
            ++demands[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

std::vector<Fe> realize(const LinearPacket& packet, const std::vector<Fe>& flat_library) {
    const FieldMatrix& c = packet.coeffs;
    if (static_cast<std::size_t>(c.cols()) != flat_library.size()) {
        throw std::invalid_argument("library size does not match packet width");
    }
    const std::uint64_t q = c.field().order();
    std::vector<Fe> out(static_cast<std::size_t>(c.rows()));
    for (int r = 0; r < c.rows(); ++r) {
        std::uint64_t acc = 0;
        auto row = c.row(r);
        for (int j = 0; j < c.cols(); ++j) {
            acc = (acc + std::uint64_t(row[static_cast<std::size_t>(j)]) *
                             flat_library[static_cast<std::size_t>(j)]) % q;
        }
        out[static_cast<std::size_t>(r)] = static_cast<Fe>(acc);
    }
    return out;
}

long long CachePlan::user_rows(int user) const {
    const auto& packets = user_packets.at(static_cast<std::size_t>(user) - 1);
    long long rows = 0;
    for (const auto& p : packets) rows += p.coeffs.rows();
    return rows;
}

long long Transmission::total_rows() const {
    long long rows = 0;
    for (const auto& p : packets) rows += p.coeffs.rows();
    return rows;
}

int choose_symbol_count(const std::vector<int>& divisors) {
    long long b = 1;
    for (int d : divisors) {
        if (d < 1) throw std::invalid_argument("divisors must be positive");
        b = std::lcm(b, static_cast<long long>(d));
        if (b > 1'000'000) throw std::invalid_argument("symbol count too large");
    }
    return static_cast<int>(b);
}

} // namespace hotplug
