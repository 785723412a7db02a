#include "hotplug/schemes.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "hotplug/verifier.hpp"

namespace hotplug {

namespace {

std::vector<int> full_range(int n) {
    std::vector<int> out(n);
    std::iota(out.begin(), out.end(), 1);
    return out;
}

std::string subset_label(std::span<const int> subset) {
    std::string out = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(subset[i]);
    }
    out += '}';
    return out;
}

void check_scenario(const SystemParams& params, const DemandScenario& scenario) {
    if (static_cast<int>(scenario.active.size()) != params.active_users ||
        scenario.demands.size() != scenario.active.size())
        throw std::invalid_argument("scenario has wrong active-set or demand size");
    int prev = 0;
    for (int u : scenario.active) {
        if (u <= prev || u > params.users)
            throw std::invalid_argument("active set must be sorted within 1..K");
        prev = u;
    }
    for (int d : scenario.demands)
        if (d < 1 || d > params.files)
            throw std::invalid_argument("demand outside 1..N");
}

/// dst[r][(file-1)*B + piece*piece_rows + r] += coeff for r in [0, piece_rows).
void add_piece(FieldMatrix& dst, const SystemParams& params, int file,
               long long piece, int piece_rows, Fe coeff) {
    const PrimeField& f = dst.field();
    for (int r = 0; r < piece_rows; ++r) {
        int col = (file - 1) * params.symbols + static_cast<int>(piece) * piece_rows + r;
        dst.at(r, col) = f.add(dst.at(r, col), coeff);
    }
}

/// dst[r][(file-1)*B + c] += coeff * block[r][c] for the whole block.
void add_block(FieldMatrix& dst, const SystemParams& params, int file,
               const FieldMatrix& block, Fe coeff = 1) {
    const PrimeField& f = dst.field();
    int off = (file - 1) * params.symbols;
    for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c)
            if (Fe v = block.at(r, c); v != 0)
                dst.at(r, off + c) = f.add(dst.at(r, off + c), f.mul(coeff, v));
}

bool contains(std::span<const int> sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<int> erase_element(const std::vector<int>& sorted, int x) {
    std::vector<int> out;
    out.reserve(sorted.size() - 1);
    for (int v : sorted)
        if (v != x) out.push_back(v);
    return out;
}

void check_divides(long long divisor, int symbols, const char* what) {
    if (divisor <= 0 || symbols % divisor != 0)
        throw std::invalid_argument(std::string(what) +
                                    " must divide the symbol count B");
}

std::vector<Fe> sub_vectors(const PrimeField& f, std::vector<Fe> a,
                            std::span<const Fe> b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.sub(a[i], b[i]);
    return a;
}

// ---------------------------------------------------------------------------
// man / baseline

class ManLikeScheme final : public Scheme {
public:
    ManLikeScheme(SchemeId id, SystemParams params, int t)
        : Scheme(id, std::move(params), t) {
        if (id == SchemeId::man && params_.active_users != params_.users)
            throw std::invalid_argument("man scheme requires Kp == K");
        if (t < 0 || t > params_.users)
            throw std::invalid_argument("t must lie in [0, K]");
        check_divides(binom(params_.users, t), params_.symbols, "C(K,t)");
    }

    CachePlan place() const override { return man_placement(params_, *t_); }

    Transmission deliver(const DemandScenario& scenario) const override {
        check_scenario(params_, scenario);
        std::vector<int> full =
            fill_demands(scenario.active, scenario.demands, params_.users);
        return yma_delivery(params_, *t_, full);
    }
};

// ---------------------------------------------------------------------------
// new scheme 1: MDS-precoded placement, delivery restricted to the active set

class New1Scheme final : public Scheme {
public:
    New1Scheme(SystemParams params, int t)
        : Scheme(SchemeId::new1, std::move(params), t),
          subsets_k_(full_range(params_.users), valid_t(params_, t)),
          info_pieces_(binom(params_.active_users, t)) {
        check_divides(info_pieces_, params_.symbols, "C(Kp,t)");
        piece_rows_ = params_.symbols / static_cast<int>(info_pieces_);
        generator_ = mds_generator(static_cast<int>(subsets_k_.size()),
                                   static_cast<int>(info_pieces_), params_.field);
    }

    CachePlan place() const override {
        CachePlan plan;
        plan.user_packets.resize(params_.users);
        for (int k = 1; k <= params_.users; ++k) {
            for (int i = 1; i <= params_.files; ++i)
                for (long long w = 0; w < subsets_k_.size(); ++w)
                    if (contains(subsets_k_.member(w), k))
                        plan.user_packets[k - 1].push_back(
                            {"C_" + std::to_string(i) + subset_label(subsets_k_.member(w)),
                             coded_symbol(i, w)});
        }
        long long rows = 0;
        for (int k = 1; k <= params_.users; ++k)
            rows = std::max(rows, plan.user_rows(k));
        plan.memory = Rational(BigInt(rows), BigInt(params_.symbols));
        return plan;
    }

    Transmission deliver(const DemandScenario& scenario) const override {
        check_scenario(params_, scenario);
        Transmission tx;
        tx.load = Rational(0);
        if (*t_ == params_.active_users) return tx;
        std::vector<int> lead = leaders(scenario.active, scenario.demands);
        SubsetFamily family(scenario.active, *t_ + 1);
        for (long long s = 0; s < family.size(); ++s) {
            const std::vector<int>& subset = family.member(s);
            if (std::none_of(subset.begin(), subset.end(),
                             [&](int u) { return contains(lead, u); }))
                continue;
            FieldMatrix coeffs(piece_rows_, static_cast<int>(params_.library_dim()),
                               params_.field);
            for (int k : subset) {
                long long w = subsets_k_.index_of(erase_element(subset, k));
                accumulate_coded(coeffs, scenario.demand_of(k), w);
            }
            tx.packets.push_back({"X" + subset_label(subset), std::move(coeffs)});
        }
        tx.load = Rational(BigInt(tx.total_rows()), BigInt(params_.symbols));
        return tx;
    }

    std::optional<std::vector<Fe>> decode(const DemandScenario& scenario, int user,
                                          const CachePlan& plan, const Transmission& tx,
                                          const FileLibrary& library) const override {
        // Eq.-25 style decoder working in the formal space indexed by
        // (file, t-subset of [K]): recover the Kp-choose-t coded symbols with
        // subsets inside the active set, then invert the corresponding square
        // submatrix of the MDS generator.
        check_scenario(params_, scenario);
        const int n_codes = static_cast<int>(subsets_k_.size());
        const int demanded = scenario.demand_of(user);
        const std::vector<Fe> flat = library.flat();

        LinearDecoder dec(params_.field,
                          static_cast<std::size_t>(params_.files) * n_codes,
                          static_cast<std::size_t>(piece_rows_));
        std::vector<Fe> unit(static_cast<std::size_t>(params_.files) * n_codes, 0);
        std::size_t packet_index = 0;
        for (int i = 1; i <= params_.files; ++i)
            for (long long w = 0; w < subsets_k_.size(); ++w)
                if (contains(subsets_k_.member(w), user)) {
                    if (packet_index >= plan.user_packets[user - 1].size())
                        return std::nullopt;
                    std::size_t col = static_cast<std::size_t>(i - 1) * n_codes +
                                      static_cast<std::size_t>(w);
                    unit[col] = 1;
                    std::vector<Fe> values =
                        realize(plan.user_packets[user - 1][packet_index], flat);
                    dec.add_row(unit, values);
                    unit[col] = 0;
                    ++packet_index;
                }

        std::vector<int> lead = leaders(scenario.active, scenario.demands);
        if (*t_ < params_.active_users) {
            SubsetFamily family(scenario.active, *t_ + 1);
            std::size_t tx_index = 0;
            std::vector<Fe> row(static_cast<std::size_t>(params_.files) * n_codes, 0);
            for (long long s = 0; s < family.size(); ++s) {
                const std::vector<int>& subset = family.member(s);
                if (std::none_of(subset.begin(), subset.end(),
                                 [&](int u) { return contains(lead, u); }))
                    continue;
                if (tx_index >= tx.packets.size()) return std::nullopt;
                std::fill(row.begin(), row.end(), 0);
                for (int k : subset) {
                    long long w = subsets_k_.index_of(erase_element(subset, k));
                    std::size_t col =
                        static_cast<std::size_t>(scenario.demand_of(k) - 1) * n_codes +
                        static_cast<std::size_t>(w);
                    row[col] = params_.field.add(row[col], 1);
                }
                dec.add_row(row, realize(tx.packets[tx_index], flat));
                ++tx_index;
            }
        }

        SubsetFamily active_subsets(scenario.active, *t_);
        std::vector<int> generator_rows;
        std::vector<std::vector<Fe>> blocks;
        for (long long w = 0; w < active_subsets.size(); ++w) {
            long long global = subsets_k_.index_of(active_subsets.member(w));
            auto block = dec.recover(static_cast<std::size_t>(demanded - 1) * n_codes +
                                     static_cast<std::size_t>(global));
            if (!block) return std::nullopt;
            generator_rows.push_back(static_cast<int>(global));
            blocks.push_back(std::move(*block));
        }

        FieldMatrix square = generator_.row_subset(generator_rows);
        FieldMatrix inv;
        try {
            inv = inverse(square);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
        std::vector<Fe> file(static_cast<std::size_t>(params_.symbols), 0);
        for (int j = 0; j < inv.rows(); ++j)
            for (int l = 0; l < inv.cols(); ++l)
                if (Fe c = inv.at(j, l); c != 0)
                    for (int r = 0; r < piece_rows_; ++r) {
                        std::size_t idx =
                            static_cast<std::size_t>(j) * piece_rows_ + r;
                        file[idx] = params_.field.add(
                            file[idx], params_.field.mul(c, blocks[l][r]));
                    }
        return file;
    }

    bool has_fast_decoder() const override { return true; }

private:
    static int valid_t(const SystemParams& params, int t) {
        if (t < 0 || t > params.active_users)
            throw std::invalid_argument("t must lie in [0, Kp]");
        return t;
    }

    FieldMatrix coded_symbol(int file, long long subset_rank) const {
        FieldMatrix coeffs(piece_rows_, static_cast<int>(params_.library_dim()),
                           params_.field);
        accumulate_coded(coeffs, file, subset_rank);
        return coeffs;
    }

    void accumulate_coded(FieldMatrix& dst, int file, long long subset_rank) const {
        for (long long j = 0; j < info_pieces_; ++j)
            if (Fe c = generator_.at(static_cast<int>(subset_rank), static_cast<int>(j));
                c != 0)
                add_piece(dst, params_, file, j, piece_rows_, c);
    }

    SubsetFamily subsets_k_;
    long long info_pieces_;
    FieldMatrix generator_;
    int piece_rows_ = 1;
};

// ---------------------------------------------------------------------------
// new scheme 2: Z_k = G_k (F_1 + ... + F_N)

class New2Scheme final : public Scheme {
public:
    explicit New2Scheme(SystemParams params)
        : Scheme(SchemeId::new2, std::move(params), std::nullopt) {
        if (params_.active_users < params_.files)
            throw std::invalid_argument("new2 requires Kp >= N");
        check_divides(params_.active_users, params_.symbols, "Kp");
        block_rows_ = params_.symbols / params_.active_users;
        blocks_ = block_mds_family(params_.users, block_rows_, params_.symbols,
                                   params_.field);
    }

    CachePlan place() const override {
        CachePlan plan;
        plan.user_packets.resize(params_.users);
        for (int k = 1; k <= params_.users; ++k) {
            FieldMatrix coeffs(block_rows_, static_cast<int>(params_.library_dim()),
                               params_.field);
            for (int i = 1; i <= params_.files; ++i)
                add_block(coeffs, params_, i, blocks_[k - 1]);
            plan.user_packets[k - 1].push_back(
                {"Z_" + std::to_string(k), std::move(coeffs)});
        }
        plan.memory = Rational(BigInt(block_rows_), BigInt(params_.symbols));
        return plan;
    }

    Transmission deliver(const DemandScenario& scenario) const override {
        check_scenario(params_, scenario);
        Transmission tx;
        for (const Entry& e : schedule(scenario)) tx.packets.push_back(build(e));
        tx.load = Rational(BigInt(tx.total_rows()), BigInt(params_.symbols));
        return tx;
    }

    std::optional<std::vector<Fe>> decode(const DemandScenario& scenario, int user,
                                          const CachePlan& plan, const Transmission& tx,
                                          const FileLibrary& library) const override {
        // Appendix-C decoder: collect the active users' blocks of the demanded
        // file (own block by cache cancellation of the step-1 packets, leader
        // block via the user's own step-2 pair) and invert the stacked
        // cache-encoding matrices.
        check_scenario(params_, scenario);
        const int demanded = scenario.demand_of(user);
        const std::vector<Fe> flat = library.flat();
        std::vector<Entry> entries = schedule(scenario);
        if (entries.size() != tx.packets.size()) return std::nullopt;

        if (!entries.empty() && entries.front().kind == Entry::whole_file) {
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (entries[i].file == demanded)
                    return realize(tx.packets[i], flat);
            return std::nullopt;
        }

        auto value_of = [&](const Entry& want) -> std::optional<std::vector<Fe>> {
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (entries[i].kind == want.kind && entries[i].user == want.user &&
                    entries[i].file == want.file && entries[i].pair_user == want.pair_user)
                    return realize(tx.packets[i], flat);
            return std::nullopt;
        };

        // Own block G_user F_demanded = Z_user - sum_{m != demanded} G_user F_m.
        std::vector<Fe> own = realize(plan.user_packets[user - 1].at(0), flat);
        for (int m = 1; m <= params_.files; ++m) {
            if (m == demanded) continue;
            auto v = value_of({Entry::single, user, m, 0});
            if (!v) return std::nullopt;
            own = sub_vectors(params_.field, std::move(own), *v);
        }

        int leader = 0;
        for (int u : scenario.active)
            if (scenario.demand_of(u) == demanded) { leader = u; break; }

        std::vector<Fe> leader_block;
        if (user == leader) {
            leader_block = own;
        } else {
            auto pair = value_of({Entry::pair, leader, demanded, user});
            if (!pair) return std::nullopt;
            leader_block = sub_vectors(params_.field, std::move(*pair), own);
        }

        std::vector<FieldMatrix> stack_parts;
        std::vector<Fe> values;
        for (int u : scenario.active) {
            std::vector<Fe> block;
            if (u == user) {
                block = own;
            } else if (scenario.demand_of(u) != demanded) {
                auto v = value_of({Entry::single, u, demanded, 0});
                if (!v) return std::nullopt;
                block = std::move(*v);
            } else if (u == leader) {
                block = leader_block;
            } else {
                auto pair = value_of({Entry::pair, leader, demanded, u});
                if (!pair) return std::nullopt;
                block = sub_vectors(params_.field, std::move(*pair), leader_block);
            }
            stack_parts.push_back(blocks_[u - 1]);
            values.insert(values.end(), block.begin(), block.end());
        }

        FieldMatrix stacked = vstack(stack_parts);
        FieldMatrix rhs(static_cast<int>(values.size()), 1, params_.field);
        for (std::size_t r = 0; r < values.size(); ++r)
            rhs.at(static_cast<int>(r), 0) = values[r];
        SolveResult sol = solve(stacked, rhs);
        if (sol.status != SolveStatus::unique) return std::nullopt;
        std::vector<Fe> file(static_cast<std::size_t>(params_.symbols));
        for (int r = 0; r < params_.symbols; ++r) file[r] = sol.x.at(r, 0);
        return file;
    }

    bool has_fast_decoder() const override { return true; }

private:
    struct Entry {
        enum Kind { whole_file, single, pair };
        Kind kind;
        int user;       // single: u of G_u F_file; pair: the leader
        int file;
        int pair_user;  // pair: the non-leader j of G_leader F_file + G_j F_file
    };

    std::vector<Entry> schedule(const DemandScenario& scenario) const {
        std::vector<int> count(params_.files + 1, 0);
        for (int d : scenario.demands) ++count[d];
        bool degenerate = false;
        for (int n = 1; n <= params_.files; ++n)
            if (count[n] == 0) degenerate = true;

        std::vector<Entry> entries;
        if (degenerate) {
            for (int n = 1; n <= params_.files; ++n)
                if (count[n] > 0)
                    entries.push_back({Entry::whole_file, 0, n, 0});
            return entries;
        }
        for (int u : scenario.active)
            for (int n = 1; n <= params_.files; ++n)
                if (n != scenario.demand_of(u))
                    entries.push_back({Entry::single, u, n, 0});
        std::vector<int> lead = leaders(scenario.active, scenario.demands);
        for (int u : scenario.active) {
            if (contains(lead, u)) continue;
            int n = scenario.demand_of(u);
            int leader = 0;
            for (int v : scenario.active)
                if (scenario.demand_of(v) == n) { leader = v; break; }
            entries.push_back({Entry::pair, leader, n, u});
        }
        return entries;
    }

    LinearPacket build(const Entry& e) const {
        if (e.kind == Entry::whole_file) {
            FieldMatrix coeffs(params_.symbols,
                               static_cast<int>(params_.library_dim()), params_.field);
            add_block(coeffs, params_, e.file,
                      FieldMatrix::identity(params_.symbols, params_.field));
            return {"F_" + std::to_string(e.file), std::move(coeffs)};
        }
        FieldMatrix coeffs(block_rows_, static_cast<int>(params_.library_dim()),
                           params_.field);
        add_block(coeffs, params_, e.file, blocks_[e.user - 1]);
        std::string label = "G_" + std::to_string(e.user) + "F_" + std::to_string(e.file);
        if (e.kind == Entry::pair) {
            add_block(coeffs, params_, e.file, blocks_[e.pair_user - 1]);
            label += "+G_" + std::to_string(e.pair_user) + "F_" + std::to_string(e.file);
        }
        return {std::move(label), std::move(coeffs)};
    }

    std::vector<FieldMatrix> blocks_;
    int block_rows_ = 1;
};

// ---------------------------------------------------------------------------
// Remark 2, general t: cache-encoding blocks G_T per t-subset T of [K]

class Remark2GeneralScheme final : public Scheme {
public:
    Remark2GeneralScheme(SystemParams params, int t)
        : Scheme(SchemeId::remark2, std::move(params), t),
          subsets_k_(full_range(params_.users), valid_t(params_, t)) {
        long long d = binom(params_.active_users - 1, t) +
                      binom(params_.users - 1, t - 1);
        check_divides(d, params_.symbols, "C(Kp-1,t)+C(K-1,t-1)");
        block_rows_ = params_.symbols / static_cast<int>(d);
        blocks_ = block_mds_family(static_cast<int>(subsets_k_.size()), block_rows_,
                                   params_.symbols, params_.field);
    }

    CachePlan place() const override {
        CachePlan plan;
        plan.user_packets.resize(params_.users);
        long long rows = 0;
        for (int k = 1; k <= params_.users; ++k) {
            for (int n = 1; n <= params_.files; ++n)
                for (long long w = 0; w < subsets_k_.size(); ++w)
                    if (contains(subsets_k_.member(w), k)) {
                        FieldMatrix coeffs(block_rows_,
                                           static_cast<int>(params_.library_dim()),
                                           params_.field);
                        add_block(coeffs, params_, n, blocks_[w]);
                        plan.user_packets[k - 1].push_back(
                            {"G" + subset_label(subsets_k_.member(w)) + "F_" +
                                 std::to_string(n),
                             std::move(coeffs)});
                    }
            rows = std::max(rows, plan.user_rows(k));
        }
        plan.memory = Rational(BigInt(rows), BigInt(params_.symbols));
        return plan;
    }

    Transmission deliver(const DemandScenario& scenario) const override {
        check_scenario(params_, scenario);
        Transmission tx;
        std::vector<int> lead = leaders(scenario.active, scenario.demands);
        SubsetFamily family(scenario.active, *t_ + 1);
        for (long long s = 0; s < family.size(); ++s) {
            const std::vector<int>& subset = family.member(s);
            if (std::none_of(subset.begin(), subset.end(),
                             [&](int u) { return contains(lead, u); }))
                continue;
            FieldMatrix coeffs(block_rows_, static_cast<int>(params_.library_dim()),
                               params_.field);
            for (int j : subset) {
                long long w = subsets_k_.index_of(erase_element(subset, j));
                add_block(coeffs, params_, scenario.demand_of(j), blocks_[w]);
            }
            tx.packets.push_back({"X" + subset_label(subset), std::move(coeffs)});
        }
        tx.load = Rational(BigInt(tx.total_rows()), BigInt(params_.symbols));
        return tx;
    }

private:
    static int valid_t(const SystemParams& params, int t) {
        if (t < 1 || t > params.active_users - 1)
            throw std::invalid_argument("remark2 requires t in [1, Kp-1]");
        return t;
    }

    SubsetFamily subsets_k_;
    std::vector<FieldMatrix> blocks_;
    int block_rows_ = 1;
};

// ---------------------------------------------------------------------------
// Remark 2 worked example: K = 6, Kp = 3, binary, hard-coded matrices

class Remark2ExampleScheme final : public Scheme {
public:
    explicit Remark2ExampleScheme(SystemParams params)
        : Scheme(SchemeId::remark2_example, std::move(params), std::nullopt) {
        if (params_.users != 6 || params_.active_users != 3)
            throw std::invalid_argument("remark2ex is defined for K=6, Kp=3");
        if (params_.files < 3)
            throw std::invalid_argument("remark2ex requires N >= 3");
        if (params_.field.order() != 2)
            throw std::invalid_argument("remark2ex is a binary construction");
        check_divides(3, params_.symbols, "3");
        m_ = params_.symbols / 3;
    }

    CachePlan place() const override {
        CachePlan plan;
        plan.user_packets.resize(params_.users);
        for (int k = 1; k <= params_.users; ++k) {
            FieldMatrix block = expand(cache_patterns(k));
            for (int n = 1; n <= params_.files; ++n) {
                FieldMatrix coeffs(block.rows(), static_cast<int>(params_.library_dim()),
                                   params_.field);
                add_block(coeffs, params_, n, block);
                plan.user_packets[k - 1].push_back(
                    {"G_" + std::to_string(k) + "F_" + std::to_string(n),
                     std::move(coeffs)});
            }
        }
        plan.memory =
            Rational(BigInt(2LL * m_ * params_.files), BigInt(params_.symbols));
        return plan;
    }

    Transmission deliver(const DemandScenario& scenario) const override {
        check_scenario(params_, scenario);
        int u1 = scenario.active[0], u2 = scenario.active[1], u3 = scenario.active[2];
        FieldMatrix coeffs(m_, static_cast<int>(params_.library_dim()), params_.field);
        add_block(coeffs, params_, scenario.demands[0], expand({pair_pattern(u2, u3)}));
        add_block(coeffs, params_, scenario.demands[1], expand({pair_pattern(u1, u3)}));
        add_block(coeffs, params_, scenario.demands[2], expand({pair_pattern(u1, u2)}));
        Transmission tx;
        tx.packets.push_back({"X" + subset_label(scenario.active), std::move(coeffs)});
        tx.load = Rational(BigInt(m_), BigInt(params_.symbols));
        return tx;
    }

private:
    using Pattern = std::array<Fe, 3>;

    /// g_{ij} exactly as printed, including the alias table for users 4..6.
    static Pattern pair_pattern(int i, int j) {
        if (i > j) std::swap(i, j);
        const Pattern g12{1, 0, 0}, g13{0, 1, 0}, g23{0, 0, 1};
        const Pattern a{1, 1, 0};  // g12 + g13
        const Pattern b{1, 0, 1};  // g12 + g23
        const Pattern c{0, 1, 1};  // g13 + g23
        if (i == 1 && j == 2) return g12;
        if (i == 1 && j == 3) return g13;
        if (i == 2 && j == 3) return g23;
        if (i == 1) return a;            // g14, g15, g16
        if (i == 2) return b;            // g24, g25, g26
        if (i == 3) return c;            // g34, g35, g36
        if (i == 4 && j == 5) return c;  // g45
        if (i == 4 && j == 6) return b;  // g46
        return a;                        // g56
    }

    /// Rows of G_k exactly as printed.
    static std::vector<Pattern> cache_patterns(int k) {
        switch (k) {
            case 1: return {{1, 0, 0}, {0, 1, 0}};  // g12, g13
            case 2: return {{1, 0, 0}, {0, 0, 1}};  // g12, g23
            case 3: return {{0, 1, 0}, {0, 0, 1}};  // g13, g23
            case 4: return {{0, 1, 1}, {1, 0, 1}};
            case 5: return {{0, 1, 1}, {1, 1, 0}};
            default: return {{1, 0, 1}, {1, 1, 0}};
        }
    }

    /// pattern (rows x 3) -> (rows*m x 3m) acting block-wise on thirds of a file.
    FieldMatrix expand(const std::vector<Pattern>& patterns) const {
        FieldMatrix out(static_cast<int>(patterns.size()) * m_, 3 * m_, params_.field);
        for (std::size_t p = 0; p < patterns.size(); ++p)
            for (int third = 0; third < 3; ++third)
                if (patterns[p][third] != 0)
                    for (int r = 0; r < m_; ++r)
                        out.at(static_cast<int>(p) * m_ + r, third * m_ + r) = 1;
        return out;
    }

    int m_ = 1;
};

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(SchemeId id) {
    switch (id) {
        case SchemeId::man: return "man";
        case SchemeId::baseline: return "base";
        case SchemeId::new1: return "new1";
        case SchemeId::new2: return "new2";
        case SchemeId::remark2: return "remark2";
        case SchemeId::remark2_example: return "remark2ex";
    }
    throw std::logic_error("unknown scheme id");
}

std::optional<SchemeId> parse_scheme_id(std::string_view name) {
    if (name == "man") return SchemeId::man;
    if (name == "base" || name == "baseline") return SchemeId::baseline;
    if (name == "new1") return SchemeId::new1;
    if (name == "new2") return SchemeId::new2;
    if (name == "remark2") return SchemeId::remark2;
    if (name == "remark2ex" || name == "remark2_example") return SchemeId::remark2_example;
    return std::nullopt;
}

int subfile_divisor(SchemeId id, int users, int active_users, int t) {
    long long d = 1;
    switch (id) {
        case SchemeId::man:
        case SchemeId::baseline: d = binom(users, t); break;
        case SchemeId::new1: d = binom(active_users, t); break;
        case SchemeId::new2: d = active_users; break;
        case SchemeId::remark2:
            d = binom(active_users - 1, t) + binom(users - 1, t - 1);
            break;
        case SchemeId::remark2_example: d = 3; break;
    }
    if (d <= 0 || d > 1'000'000)
        throw std::invalid_argument("subfile divisor out of range");
    return static_cast<int>(d);
}

std::uint32_t default_field_order(SchemeId id, int users, int active_users,
                                  int files, int t, int symbols) {
    (void)files;
    switch (id) {
        case SchemeId::man:
        case SchemeId::baseline:
        case SchemeId::remark2_example:
            return 2;
        case SchemeId::new1: {
            long long n = binom(users, t);
            long long k = binom(active_users, t);
            if (k == 1 || n == k) return 2;
            return smallest_prime_at_least(static_cast<std::uint64_t>(n));
        }
        case SchemeId::new2: {
            if (users == active_users) return 2;
            long long rows = static_cast<long long>(users) *
                             (symbols / active_users);
            return smallest_prime_at_least(static_cast<std::uint64_t>(rows));
        }
        case SchemeId::remark2: {
            long long d = binom(active_users - 1, t) + binom(users - 1, t - 1);
            long long count = binom(users, t);
            if (count == d) return 2;  // identity blocks suffice
            long long rows = count * (symbols / d);
            return smallest_prime_at_least(static_cast<std::uint64_t>(rows));
        }
    }
    throw std::logic_error("unknown scheme id");
}

TradeoffPoint theoretical_corner(SchemeId id, int users, int active_users,
                                 int files, int t) {
    const long long K = users, Kp = active_users, N = files;
    const long long rp = std::min<long long>(N, Kp);
    auto point = [](BigInt mn, BigInt md, BigInt rn, BigInt rd) {
        return TradeoffPoint{Rational(std::move(mn), std::move(md)),
                             Rational(std::move(rn), std::move(rd))};
    };
    switch (id) {
        case SchemeId::man: {
            if (t < 0 || t > K) throw std::invalid_argument("t must lie in [0, K]");
            const long long r = std::min<long long>(N, K);
            return point(BigInt(N) * binom(K - 1, t - 1), BigInt(binom(K, t)),
                         BigInt(binom(K, t + 1)) - binom(K - r, t + 1),
                         BigInt(binom(K, t)));
        }
        case SchemeId::baseline: {
            if (t < 0 || t > K) throw std::invalid_argument("t must lie in [0, K]");
            return point(BigInt(N) * binom(K - 1, t - 1), BigInt(binom(K, t)),
                         BigInt(binom(K, t + 1)) - binom(K - rp, t + 1),
                         BigInt(binom(K, t)));
        }
        case SchemeId::new1: {
            if (t < 0 || t > Kp) throw std::invalid_argument("t must lie in [0, Kp]");
            return point(BigInt(N) * binom(K - 1, t - 1), BigInt(binom(Kp, t)),
                         BigInt(binom(Kp, t + 1)) - binom(Kp - rp, t + 1),
                         BigInt(binom(Kp, t)));
        }
        case SchemeId::new2: {
            if (Kp < N)
                throw std::invalid_argument("new2 point is claimed only for Kp >= N");
            return point(BigInt(1), BigInt(Kp), BigInt(N) * (Kp - 1), BigInt(Kp));
        }
        case SchemeId::remark2: {
            if (t < 1 || t > Kp - 1)
                throw std::invalid_argument("remark2 requires t in [1, Kp-1]");
            const BigInt d = BigInt(binom(Kp - 1, t)) + binom(K - 1, t - 1);
            return point(BigInt(N) * binom(K - 1, t - 1), d,
                         BigInt(binom(Kp, t + 1)) - binom(Kp - rp, t + 1), d);
        }
        case SchemeId::remark2_example: {
            if (K != 6 || Kp != 3)
                throw std::invalid_argument("remark2ex is defined for K=6, Kp=3");
            return point(BigInt(2) * N, BigInt(3), BigInt(1), BigInt(3));
        }
    }
    throw std::logic_error("unknown scheme id");
}

Scheme::Scheme(SchemeId id, SystemParams params, std::optional<int> t)
    : params_(std::move(params)), id_(id), t_(t) {
    params_.validate();
}

std::optional<std::vector<Fe>> Scheme::decode(const DemandScenario& scenario,
                                              int user, const CachePlan& plan,
                                              const Transmission& tx,
                                              const FileLibrary& library) const {
    return generic_linear_decode(params_, plan, tx, user, scenario.demand_of(user),
                                 library);
}

TradeoffPoint Scheme::corner_point() const {
    return theoretical_corner(id_, params_.users, params_.active_users, params_.files,
                              t_.value_or(0));
}

CachePlan man_placement(const SystemParams& params, int t) {
    if (t < 0 || t > params.users)
        throw std::invalid_argument("t must lie in [0, K]");
    check_divides(binom(params.users, t), params.symbols, "C(K,t)");
    SubsetFamily family(full_range(params.users), t);
    int sub = params.symbols / static_cast<int>(family.size());

    CachePlan plan;
    plan.user_packets.resize(params.users);
    long long rows = 0;
    for (int k = 1; k <= params.users; ++k) {
        for (int i = 1; i <= params.files; ++i)
            for (long long w = 0; w < family.size(); ++w)
                if (contains(family.member(w), k)) {
                    FieldMatrix coeffs(sub, static_cast<int>(params.library_dim()),
                                       params.field);
                    add_piece(coeffs, params, i, w, sub, 1);
                    plan.user_packets[k - 1].push_back(
                        {"F_" + std::to_string(i) + subset_label(family.member(w)),
                         std::move(coeffs)});
                }
        rows = std::max(rows, plan.user_rows(k));
    }
    plan.memory = Rational(BigInt(rows), BigInt(params.symbols));
    return plan;
}

Transmission yma_delivery(const SystemParams& params, int t,
                          const std::vector<int>& full_demand) {
    if (t < 0 || t > params.users)
        throw std::invalid_argument("t must lie in [0, K]");
    check_divides(binom(params.users, t), params.symbols, "C(K,t)");
    if (static_cast<int>(full_demand.size()) != params.users)
        throw std::invalid_argument("full_demand must have K entries");
    for (int d : full_demand)
        if (d < 1 || d > params.files)
            throw std::invalid_argument("demand outside 1..N");

    Transmission tx;
    tx.load = Rational(0);
    if (t == params.users) return tx;

    SubsetFamily pieces(full_range(params.users), t);
    int sub = params.symbols / static_cast<int>(pieces.size());
    std::vector<int> everyone = full_range(params.users);
    std::vector<int> lead = leaders(everyone, full_demand);
    SubsetFamily family(everyone, t + 1);
    for (long long s = 0; s < family.size(); ++s) {
        const std::vector<int>& subset = family.member(s);
        if (std::none_of(subset.begin(), subset.end(),
                         [&](int u) { return contains(lead, u); }))
            continue;
        FieldMatrix coeffs(sub, static_cast<int>(params.library_dim()), params.field);
        for (int k : subset)
            add_piece(coeffs, params, full_demand[k - 1],
                      pieces.index_of(erase_element(subset, k)), sub, 1);
        tx.packets.push_back({"X" + subset_label(subset), std::move(coeffs)});
    }
    tx.load = Rational(BigInt(tx.total_rows()), BigInt(params.symbols));
    return tx;
}

std::unique_ptr<Scheme> make_scheme(SchemeId id, int users, int active_users,
                                    int files, int t,
                                    std::optional<std::uint32_t> field_order,
                                    std::optional<int> symbols) {
    if (users < 1 || active_users < 1 || active_users > users || files < 1)
        throw std::invalid_argument("require 1 <= Kp <= K and N >= 1");
    switch (id) {
        case SchemeId::man:
        case SchemeId::baseline:
            if (t < 0 || t > users)
                throw std::invalid_argument("t must lie in [0, K]");
            break;
        case SchemeId::new1:
            if (t < 0 || t > active_users)
                throw std::invalid_argument("t must lie in [0, Kp]");
            break;
        case SchemeId::remark2:
            if (t < 1 || t > active_users - 1)
                throw std::invalid_argument("remark2 requires t in [1, Kp-1]");
            break;
        case SchemeId::new2:
        case SchemeId::remark2_example:
            t = 0;  // no split parameter
            break;
    }
    int divisor = subfile_divisor(id, users, active_users, t);
    int b = symbols.value_or(divisor);
    if (b < 1 || b % divisor != 0)
        throw std::invalid_argument("symbol count must be a positive multiple of " +
                                    std::to_string(divisor));
    std::uint32_t q = field_order.value_or(
        default_field_order(id, users, active_users, files, t, b));
    SystemParams params{users, active_users, files, b, PrimeField(q)};
    params.validate();
    switch (id) {
        case SchemeId::man:
        case SchemeId::baseline:
            return std::make_unique<ManLikeScheme>(id, params, t);
        case SchemeId::new1:
            return std::make_unique<New1Scheme>(params, t);
        case SchemeId::new2:
            return std::make_unique<New2Scheme>(params);
        case SchemeId::remark2:
            return std::make_unique<Remark2GeneralScheme>(params, t);
        case SchemeId::remark2_example:
            return std::make_unique<Remark2ExampleScheme>(params);
    }
    throw std::logic_error("unknown scheme id");
}

}  // namespace hotplug
