#include "hotplug/verifier.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "hotplug/schemes.hpp"

namespace hotplug {

LinearDecoder::LinearDecoder(PrimeField field, std::size_t width,
                             std::size_t value_width)
    : field_(field), width_(width), value_width_(value_width),
      pivot_row_(width, -1) {}

void LinearDecoder::add_row(std::span<const Fe> coeffs, std::span<const Fe> values) {
    if (coeffs.size() != width_ || values.size() != value_width_)
        throw std::invalid_argument("decoder row has wrong dimensions");
    Row row{std::vector<Fe>(coeffs.begin(), coeffs.end()),
            std::vector<Fe>(values.begin(), values.end())};
    for (std::size_t c = 0; c < width_; ++c) {
        Fe lead = row.coeffs[c];
        if (lead == 0) continue;
        int p = pivot_row_[c];
        if (p < 0) {
            Fe scale = field_.inv(lead);
            for (std::size_t j = c; j < width_; ++j)
                row.coeffs[j] = field_.mul(row.coeffs[j], scale);
            for (auto& v : row.values) v = field_.mul(v, scale);
            pivot_row_[c] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(row));
            return;
        }
        const Row& pivot = rows_[static_cast<std::size_t>(p)];
        for (std::size_t j = c; j < width_; ++j)
            row.coeffs[j] = field_.sub(row.coeffs[j], field_.mul(lead, pivot.coeffs[j]));
        for (std::size_t j = 0; j < value_width_; ++j)
            row.values[j] = field_.sub(row.values[j], field_.mul(lead, pivot.values[j]));
    }
    for (Fe v : row.values)
        if (v != 0)
            throw std::logic_error("linearly dependent row carries conflicting values");
}

bool LinearDecoder::can_recover(std::size_t coordinate) const {
    if (coordinate >= width_)
        throw std::invalid_argument("coordinate out of range");
    std::vector<Fe> v(width_, 0);
    v[coordinate] = 1;
    for (std::size_t c = coordinate; c < width_; ++c) {
        Fe f = v[c];
        if (f == 0) continue;
        int p = pivot_row_[c];
        if (p < 0) return false;
        const Row& pivot = rows_[static_cast<std::size_t>(p)];
        for (std::size_t j = c; j < width_; ++j)
            v[j] = field_.sub(v[j], field_.mul(f, pivot.coeffs[j]));
    }
    return true;
}

std::optional<std::vector<Fe>> LinearDecoder::recover(std::size_t coordinate) const {
    if (coordinate >= width_)
        throw std::invalid_argument("coordinate out of range");
    std::vector<Fe> v(width_, 0);
    v[coordinate] = 1;
    std::vector<Fe> acc(value_width_, 0);
    for (std::size_t c = coordinate; c < width_; ++c) {
        Fe f = v[c];
        if (f == 0) continue;
        int p = pivot_row_[c];
        if (p < 0) return std::nullopt;
        const Row& pivot = rows_[static_cast<std::size_t>(p)];
        for (std::size_t j = c; j < width_; ++j)
            v[j] = field_.sub(v[j], field_.mul(f, pivot.coeffs[j]));
        for (std::size_t j = 0; j < value_width_; ++j)
            acc[j] = field_.add(acc[j], field_.mul(f, pivot.values[j]));
    }
    return acc;
}

namespace {

void feed_matrix(LinearDecoder& dec, const FieldMatrix& rows,
                 std::span<const Fe> values) {
    if (static_cast<std::size_t>(rows.rows()) != values.size())
        throw std::invalid_argument("one value per coefficient row required");
    for (int r = 0; r < rows.rows(); ++r)
        dec.add_row(rows.row(r), values.subspan(static_cast<std::size_t>(r), 1));
}

std::optional<std::vector<Fe>> read_file(const LinearDecoder& dec, int demanded_file,
                                         const SystemParams& params) {
    std::vector<Fe> out(static_cast<std::size_t>(params.symbols));
    std::size_t base =
        static_cast<std::size_t>(demanded_file - 1) * params.symbols;
    for (int b = 0; b < params.symbols; ++b) {
        auto symbol = dec.recover(base + static_cast<std::size_t>(b));
        if (!symbol) return std::nullopt;
        out[static_cast<std::size_t>(b)] = (*symbol)[0];
    }
    return out;
}

/// Library-independent pass: is every demanded coordinate in the coefficient
/// row span of cache + transmission?
bool coefficient_space_decodable(const SystemParams& params, const CachePlan& plan,
                                 const Transmission& tx, int user,
                                 int demanded_file) {
    LinearDecoder dec(params.field, static_cast<std::size_t>(params.library_dim()), 0);
    auto feed = [&](const LinearPacket& p) {
        for (int r = 0; r < p.coeffs.rows(); ++r)
            dec.add_row(p.coeffs.row(r), {});
    };
    for (const auto& p : plan.user_packets.at(static_cast<std::size_t>(user) - 1))
        feed(p);
    for (const auto& p : tx.packets) feed(p);
    std::size_t base =
        static_cast<std::size_t>(demanded_file - 1) * params.symbols;
    for (int b = 0; b < params.symbols; ++b)
        if (!dec.can_recover(base + static_cast<std::size_t>(b))) return false;
    return true;
}

VerificationReport aggregate(const Scheme& scheme, std::uint64_t seed,
                             const std::vector<DemandScenario>& scenarios,
                             bool sampled) {
    const SystemParams& params = scheme.params();
    VerificationReport rep(scheme.name(), params, scheme.t());
    rep.sampled = sampled;
    rep.formula_load = scheme.corner_point().load;
    FileLibrary library = generate_library(params, seed);
    CachePlan plan = scheme.place();
    for (const DemandScenario& scenario : scenarios) {
        SimulationResult sim = simulate(scheme, plan, scenario, library);
        ++rep.scenarios_checked;
        if (sim.tx.load > rep.worst_load) rep.worst_load = sim.tx.load;
        for (const UserDecodeResult& u : sim.users) {
            if (!u.agree) ++rep.oracle_disagreements;
            if (!u.decoded) {
                ++rep.failure_count;
                if (rep.failure_count <= VerificationReport::kStoredFailureCap)
                    rep.decode_failures.push_back({scenario, u.user});
            }
        }
    }
    rep.match = !sampled && rep.failure_count == 0 &&
                rep.worst_load == rep.formula_load;
    return rep;
}

}  // namespace

std::optional<std::vector<Fe>> generic_linear_decode(
    const FieldMatrix& cache_rows, std::span<const Fe> cache_values,
    const FieldMatrix& received_rows, std::span<const Fe> received_values,
    int demanded_file, const SystemParams& params) {
    if (demanded_file < 1 || demanded_file > params.files)
        throw std::invalid_argument("demanded file outside 1..N");
    std::size_t width = static_cast<std::size_t>(params.library_dim());
    if ((cache_rows.rows() > 0 && static_cast<std::size_t>(cache_rows.cols()) != width) ||
        (received_rows.rows() > 0 &&
         static_cast<std::size_t>(received_rows.cols()) != width))
        throw std::invalid_argument("coefficient rows must span the library space");
    LinearDecoder dec(params.field, width, 1);
    feed_matrix(dec, cache_rows, cache_values);
    feed_matrix(dec, received_rows, received_values);
    return read_file(dec, demanded_file, params);
}

std::optional<std::vector<Fe>> generic_linear_decode(
    const SystemParams& params, const CachePlan& plan, const Transmission& tx,
    int user, int demanded_file, const FileLibrary& library) {
    if (demanded_file < 1 || demanded_file > params.files)
        throw std::invalid_argument("demanded file outside 1..N");
    std::vector<Fe> flat = library.flat();
    LinearDecoder dec(params.field, static_cast<std::size_t>(params.library_dim()), 1);
    auto feed = [&](const LinearPacket& p) {
        std::vector<Fe> values = realize(p, flat);
        feed_matrix(dec, p.coeffs, values);
    };
    for (const auto& p : plan.user_packets.at(static_cast<std::size_t>(user) - 1))
        feed(p);
    for (const auto& p : tx.packets) feed(p);
    return read_file(dec, demanded_file, params);
}

SimulationResult simulate(const Scheme& scheme, const CachePlan& plan,
                          const DemandScenario& scenario,
                          const FileLibrary& library) {
    const SystemParams& params = scheme.params();
    SimulationResult result;
    result.tx = scheme.deliver(scenario);
    result.users.reserve(scenario.active.size());
    for (std::size_t i = 0; i < scenario.active.size(); ++i) {
        int user = scenario.active[i];
        int demanded = scenario.demands[i];
        const std::vector<Fe>& truth =
            library.files.at(static_cast<std::size_t>(demanded) - 1);

        UserDecodeResult out;
        out.user = user;
        auto oracle =
            generic_linear_decode(params, plan, result.tx, user, demanded, library);
        out.oracle_decoded = oracle.has_value() && *oracle == truth;

        if (scheme.has_fast_decoder()) {
            auto fast = scheme.decode(scenario, user, plan, result.tx, library);
            out.decoded = fast.has_value() && *fast == truth;
            out.agree = fast.has_value() == oracle.has_value() &&
                        (!fast.has_value() || *fast == *oracle);
        } else {
            out.decoded = out.oracle_decoded;
            out.agree = true;
        }

        bool structural =
            coefficient_space_decodable(params, plan, result.tx, user, demanded);
        if (structural != oracle.has_value()) out.agree = false;

        result.users.push_back(std::move(out));
    }
    return result;
}

CapExceededError::CapExceededError(long long count, long long cap_value)
    : std::runtime_error("exhaustive verification refused: " +
                         std::to_string(count) + " scenarios exceed the cap of " +
                         std::to_string(cap_value) +
                         " (use sampling for instances this large)"),
      scenario_count(count), cap(cap_value) {}

VerificationReport exhaustive_report(const Scheme& scheme, std::uint64_t seed,
                                     long long cap) {
    long long count = count_scenarios(scheme.params());
    if (count > cap) throw CapExceededError(count, cap);
    return aggregate(scheme, seed, enumerate_scenarios(scheme.params()), false);
}

VerificationReport sampled_report(const Scheme& scheme, std::uint64_t seed,
                                  long long samples) {
    const SystemParams& params = scheme.params();
    std::mt19937_64 rng(seed);
    std::vector<int> pool(static_cast<std::size_t>(params.users));
    std::vector<DemandScenario> scenarios;
    scenarios.reserve(static_cast<std::size_t>(samples));
    for (long long s = 0; s < samples; ++s) {
        for (int i = 0; i < params.users; ++i)
            pool[static_cast<std::size_t>(i)] = i + 1;
        for (int i = 0; i < params.active_users; ++i) {
            std::size_t j = static_cast<std::size_t>(i) +
                            rng() % static_cast<std::uint64_t>(params.users - i);
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        }
        DemandScenario scenario;
        scenario.active.assign(pool.begin(), pool.begin() + params.active_users);
        std::sort(scenario.active.begin(), scenario.active.end());
        scenario.demands.resize(static_cast<std::size_t>(params.active_users));
        for (auto& d : scenario.demands)
            d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(params.files));
        scenarios.push_back(std::move(scenario));
    }
    return aggregate(scheme, seed, scenarios, true);
}

}  // namespace hotplug
