#include "hotplug/linalg.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace hotplug {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_same_field(const FieldMatrix& a, const FieldMatrix& b) {
    require(a.field() == b.field(), "matrices over different fields");
}

/// Calls fn with each k-combination of {0,..,n-1} until fn returns false.
/// Returns false iff some call returned false.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!fn(std::span<const int>(idx))) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// In-place RREF of [a | b]; returns the pivot column of each pivot row.
std::vector<int> eliminate(FieldMatrix& a, FieldMatrix& b) {
    const PrimeField& f = a.field();
    const int m = a.rows();
    const int n = a.cols();
    const int w = b.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i) {
            if (a.at(i, c) != 0) { piv = i; break; }
        }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(r, j));
            for (int j = 0; j < w; ++j) std::swap(b.at(piv, j), b.at(r, j));
        }
        const Fe s = f.inv(a.at(r, c));
        for (int j = 0; j < n; ++j) a.at(r, j) = f.mul(a.at(r, j), s);
        for (int j = 0; j < w; ++j) b.at(r, j) = f.mul(b.at(r, j), s);
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            const Fe v = a.at(i, c);
            if (v == 0) continue;
            for (int j = 0; j < n; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(v, a.at(r, j)));
            for (int j = 0; j < w; ++j)
                b.at(i, j) = f.sub(b.at(i, j), f.mul(v, b.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

bool rows_all_zero(const FieldMatrix& a, int row) {
    for (int j = 0; j < a.cols(); ++j) {
        if (a.at(row, j) != 0) return false;
    }
    return true;
}

} // namespace

FieldMatrix::FieldMatrix(int rows, int cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field),
      data_(std::size_t(rows) * std::size_t(cols), 0) {
    require(rows >= 0 && cols >= 0, "negative matrix dimension");
}

FieldMatrix FieldMatrix::identity(int n, PrimeField field) {
    FieldMatrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::from_rows(const std::vector<std::vector<Fe>>& rows,
                                   PrimeField field) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    FieldMatrix m(r, c, field);
    for (int i = 0; i < r; ++i) {
        require(static_cast<int>(rows[i].size()) == c, "ragged rows");
        for (int j = 0; j < c; ++j) {
            require(rows[i][j] < field.order(), "entry out of field range");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

FieldMatrix FieldMatrix::row_subset(std::span<const int> indices) const {
    FieldMatrix m(static_cast<int>(indices.size()), cols_, field_);
    for (int i = 0; i < m.rows(); ++i) {
        require(indices[i] >= 0 && indices[i] < rows_, "row index out of range");
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(indices[i], j);
    }
    return m;
}

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix m(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

int FieldMatrix::rank() const {
    FieldMatrix a = *this;
    FieldMatrix none(a.rows(), 0, field_);
    return static_cast<int>(eliminate(a, none).size());
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b);
    require(a.cols() == b.rows(), "dimension mismatch in product");
    const PrimeField& f = a.field();
    const std::uint64_t q = f.order();
    FieldMatrix m(a.rows(), b.cols(), f);
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const std::uint64_t v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                m.at(i, j) = static_cast<Fe>(
                    (m.at(i, j) + v * b.at(k, j)) % q);
            }
        }
    }
    return m;
}

FieldMatrix vstack(std::span<const FieldMatrix> parts) {
    require(!parts.empty(), "vstack of no matrices");
    int total = 0;
    for (const auto& p : parts) {
        require_same_field(p, parts[0]);
        require(p.cols() == parts[0].cols(), "vstack column mismatch");
        total += p.rows();
    }
    FieldMatrix m(total, parts[0].cols(), parts[0].field());
    int r = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rows(); ++i, ++r)
            for (int j = 0; j < p.cols(); ++j) m.at(r, j) = p.at(i, j);
    }
    return m;
}

SolveResult solve(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b);
    require(a.rows() == b.rows(), "rhs row count mismatch");
    FieldMatrix ra = a;
    FieldMatrix rb = b;
    const std::vector<int> pivots = eliminate(ra, rb);
    const int rank = static_cast<int>(pivots.size());
    for (int i = rank; i < ra.rows(); ++i) {
        if (!rows_all_zero(rb, i)) return {SolveStatus::no_solution, {}};
    }
    if (rank < a.cols()) return {SolveStatus::underdetermined, {}};
    FieldMatrix x(a.cols(), b.cols(), a.field());
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = rb.at(i, j);
    }
    return {SolveStatus::unique, std::move(x)};
}

std::optional<FieldMatrix> solve_any(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b);
    require(a.rows() == b.rows(), "rhs row count mismatch");
    FieldMatrix ra = a;
    FieldMatrix rb = b;
    const std::vector<int> pivots = eliminate(ra, rb);
    const int rank = static_cast<int>(pivots.size());
    for (int i = rank; i < ra.rows(); ++i) {
        if (!rows_all_zero(rb, i)) return std::nullopt;
    }
    FieldMatrix x(a.cols(), b.cols(), a.field());
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = rb.at(i, j);
    }
    return x;
}

FieldMatrix inverse(const FieldMatrix& a) {
    require(a.rows() == a.cols(), "inverse of non-square matrix");
    SolveResult r = solve(a, FieldMatrix::identity(a.rows(), a.field()));
    if (r.status != SolveStatus::unique) {
        throw std::domain_error("matrix is singular");
    }
    return std::move(r.x);
}

FieldMatrix vandermonde_mds(int n, int k, PrimeField field) {
    require(k >= 1 && n >= k, "need n >= k >= 1");
    if (static_cast<std::uint64_t>(n) > field.order()) {
        throw std::invalid_argument(
            "field too small for a Vandermonde generator: need q >= " +
            std::to_string(n));
    }
    FieldMatrix m(n, k, field);
    for (int i = 0; i < n; ++i) {
        Fe p = field.reduce(static_cast<std::uint64_t>(i));
        Fe v = 1;
        for (int j = 0; j < k; ++j) {
            m.at(i, j) = v;
            v = field.mul(v, p);
        }
    }
    return m;
}

namespace {

/// Greedy search for an MDS generator when the field has fewer than n
/// elements. Candidate rows are enumerated in colex order (the integer v
/// encodes the row base q, least significant digit first), which yields the
/// identity rows before mixed rows. Maintains the invariant that every subset
/// of at most k chosen rows is linearly independent.
FieldMatrix mds_greedy(int n, int k, PrimeField field) {
    const std::uint64_t q = field.order();
    std::uint64_t pool = 1;
    for (int i = 0; i < k; ++i) {
        pool *= q;
        if (pool > (1ULL << 24)) {
            throw std::invalid_argument("MDS search space too large");
        }
    }
    std::vector<std::vector<Fe>> chosen;
    long long work = 0;
    for (std::uint64_t v = 1; v < pool && static_cast<int>(chosen.size()) < n; ++v) {
        std::vector<Fe> cand(k);
        std::uint64_t x = v;
        for (int j = 0; j < k; ++j) {
            cand[j] = static_cast<Fe>(x % q);
            x /= q;
        }
        const int m = static_cast<int>(chosen.size());
        const int s = std::min(k - 1, m);
        bool ok = for_each_combination(m, s, [&](std::span<const int> idx) {
            std::vector<std::vector<Fe>> sub;
            sub.reserve(idx.size() + 1);
            for (int i : idx) sub.push_back(chosen[i]);
            sub.push_back(cand);
            work += static_cast<long long>(sub.size()) * k;
            if (work > 50'000'000LL) {
                throw std::invalid_argument("MDS search exceeded work cap");
            }
            FieldMatrix t = FieldMatrix::from_rows(sub, field);
            return t.rank() == t.rows();
        });
        if (ok) chosen.push_back(std::move(cand));
    }
    if (static_cast<int>(chosen.size()) < n) {
        throw std::invalid_argument(
            "field too small for an MDS generator with n = " + std::to_string(n) +
            ", k = " + std::to_string(k) + ", q = " + std::to_string(q));
    }
    return FieldMatrix::from_rows(chosen, field);
}

} // namespace

FieldMatrix mds_generator(int n, int k, PrimeField field) {
    require(k >= 1 && n >= k, "need n >= k >= 1");
    if (k == 1) {
        FieldMatrix ones(n, 1, field);
        for (int i = 0; i < n; ++i) ones.at(i, 0) = 1;
        return ones;
    }
    if (static_cast<std::uint64_t>(n) <= field.order()) {
        return vandermonde_mds(n, k, field);
    }
    if (n == k) return FieldMatrix::identity(n, field);
    FieldMatrix g = mds_greedy(n, k, field);
    if (!is_mds_generator(g)) {
        throw std::logic_error("greedy MDS search produced a non-MDS matrix");
    }
    return g;
}

bool is_mds_generator(const FieldMatrix& g, long long max_checks) {
    const int n = g.rows();
    const int k = g.cols();
    if (n < k || k < 1) return false;
    long long subsets = 1;
    for (int i = 0; i < k; ++i) {
        subsets = subsets * (n - i) / (i + 1);
        if (subsets > max_checks) break;
    }
    auto check = [&](std::span<const int> idx) {
        return g.row_subset(idx).rank() == k;
    };
    if (subsets <= max_checks) {
        return for_each_combination(n, k, check);
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (long long s = 0; s < max_checks; ++s) {
        for (int i = 0; i < k; ++i) {
            const int j = i + static_cast<int>(rng() % (n - i));
            std::swap(idx[i], idx[j]);
        }
        std::vector<int> pick(idx.begin(), idx.begin() + k);
        if (!check(pick)) return false;
    }
    return true;
}

std::vector<FieldMatrix> block_mds_family(int count, int block_rows, int cols,
                                          PrimeField field) {
    require(count >= 1 && block_rows >= 1 && cols >= 1, "bad block family shape");
    require(cols % block_rows == 0, "cols not divisible by block_rows");
    const int choose = cols / block_rows;
    require(count >= choose, "need at least cols/block_rows blocks");
    const int total = count * block_rows;
    FieldMatrix g = mds_generator(total, cols, field);
    std::vector<FieldMatrix> blocks;
    blocks.reserve(count);
    for (int b = 0; b < count; ++b) {
        std::vector<int> idx(block_rows);
        for (int i = 0; i < block_rows; ++i) idx[i] = b * block_rows + i;
        blocks.push_back(g.row_subset(idx));
    }
    if (!has_block_mds_property(blocks, choose)) {
        throw std::logic_error("sliced generator lost the block MDS property");
    }
    return blocks;
}

bool has_block_mds_property(const std::vector<FieldMatrix>& blocks, int choose) {
    if (blocks.empty() || choose < 1 ||
        choose > static_cast<int>(blocks.size())) {
        return false;
    }
    const int cols = blocks[0].cols();
    return for_each_combination(
        static_cast<int>(blocks.size()), choose, [&](std::span<const int> idx) {
            std::vector<FieldMatrix> parts;
            parts.reserve(idx.size());
            for (int i : idx) parts.push_back(blocks[i]);
            FieldMatrix s = vstack(parts);
            return s.rows() == cols && s.rank() == cols;
        });
}

} // namespace hotplug
