#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "hotplug/field.hpp"

namespace hotplug {

/// Dense row-major matrix over a prime field.
///
/// Matrices carry their field; mixing fields in one expression is a contract
/// violation and throws std::invalid_argument.
class FieldMatrix {
public:
    FieldMatrix() : rows_(0), cols_(0), field_(2) {}
    FieldMatrix(int rows, int cols, PrimeField field);

    static FieldMatrix identity(int n, PrimeField field);
    static FieldMatrix from_rows(const std::vector<std::vector<Fe>>& rows,
                                 PrimeField field);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    const PrimeField& field() const noexcept { return field_; }

    Fe at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
    Fe& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }

    std::span<const Fe> row(int r) const {
        return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)};
    }
    std::span<Fe> row(int r) {
        return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)};
    }

    /// New matrix from the given row indices, in the given order.
    FieldMatrix row_subset(std::span<const int> indices) const;

    FieldMatrix transposed() const;

    bool operator==(const FieldMatrix&) const noexcept = default;

    /// Row rank by Gaussian elimination over the field (exact).
    int rank() const;

private:
    int rows_;
    int cols_;
    PrimeField field_;
    std::vector<Fe> data_;
};

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);

/// All matrices stacked top to bottom; they must agree on cols and field.
FieldMatrix vstack(std::span<const FieldMatrix> parts);

enum class SolveStatus { unique, no_solution, underdetermined };

/// Result of solve(): x is meaningful only when status == unique.
struct SolveResult {
    SolveStatus status;
    FieldMatrix x;
};

/// Solves a * x = b (b may have several columns). Reports no_solution for an
/// inconsistent system and underdetermined when free columns remain.
SolveResult solve(const FieldMatrix& a, const FieldMatrix& b);

/// A particular solution of a * x = b with free variables fixed to zero, or
/// nullopt when the system is inconsistent.
std::optional<FieldMatrix> solve_any(const FieldMatrix& a, const FieldMatrix& b);

/// Inverse of a square matrix; throws std::domain_error when singular.
FieldMatrix inverse(const FieldMatrix& a);

/// n x k Vandermonde generator on evaluation points 0..n-1. Every k rows are
/// linearly independent. Requires q >= n (distinct points); otherwise throws
/// std::invalid_argument ("field too small").
FieldMatrix vandermonde_mds(int n, int k, PrimeField field);

/// n x k generator with every k rows linearly independent. Uses Vandermonde
/// when q >= n and otherwise falls back to a verified greedy search over the
/// field (small fields such as GF(2) are admitted this way). Throws
/// std::invalid_argument when no such generator is found.
FieldMatrix mds_generator(int n, int k, PrimeField field);

/// True when g has k columns, at least k rows, and every k-subset of rows is
/// invertible. Checks all subsets up to max_checks and a deterministic sample
/// beyond that.
bool is_mds_generator(const FieldMatrix& g, long long max_checks = 200000);

/// Family of K matrices, each block_rows x cols, such that any `choose`
/// distinct blocks stacked give full row rank choose*block_rows (which must
/// equal cols). Realized by slicing an mds_generator of K*block_rows rows.
std::vector<FieldMatrix> block_mds_family(int count, int block_rows, int cols,
                                          PrimeField field);

/// True when every `choose`-subset of blocks stacks to full row rank.
bool has_block_mds_property(const std::vector<FieldMatrix>& blocks, int choose);

} // namespace hotplug
