#pragma once

#include "resq/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace resq {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b);
    /// row[target] += factor * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);

    /// Submatrix on the given (sorted) row and column indices.
    IntMatrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

/// Matrix over the field with q elements; entries are residues in [0, q).
class ModMatrix {
public:
    /// Throws DomainError if q is not prime.
    ModMatrix(std::uint64_t q, std::size_t rows, std::size_t cols);
    ModMatrix(std::uint64_t q, std::initializer_list<std::initializer_list<std::uint64_t>> rows);

    std::uint64_t modulus() const { return q_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    /// Stores value mod q.
    void set(std::size_t i, std::size_t j, std::uint64_t value) { entries_[i * cols_ + j] = value % q_; }

    bool is_zero_row(std::size_t i) const;
    bool is_upper_triangular() const;

    bool operator==(const ModMatrix&) const = default;

private:
    std::uint64_t q_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> entries_;
};

/// Exact determinant by Bareiss fraction-free elimination. Throws DomainError
/// on a non-square matrix. The 0×0 determinant is 1.
Integer det_exact(const IntMatrix& a);

/// Entrywise least non-negative residues. Throws DomainError if q is not prime.
ModMatrix reduce_mod(const IntMatrix& a, std::uint64_t q);

std::size_t rank_mod(const ModMatrix& a);

/// The unique reduced row echelon form over Z_q.
ModMatrix rref_mod(const ModMatrix& a);

/// Determinant over Z_q by Gaussian elimination.
std::uint64_t det_mod(const ModMatrix& a);

struct Triangularization {
    IntMatrix reduced;
    /// det(original) = sign * det(reduced)
    int sign = 1;
};

/**
 * Reduces a square integer matrix using only row swaps and additions of
 * integer multiples of one row to another, so that the result reduced mod q
 * is in row echelon form (hence upper triangular) while det is preserved up
 * to the returned sign.
 *
 * Column by column, the first remaining row whose entry is a unit mod q is
 * swapped into pivot position; each lower row with entry a gets
 * ((-a * pivot^-1) mod q) times the pivot row added. Columns with no unit
 * below the processed rows are skipped.
 */
Triangularization triangularize_det_preserving(const IntMatrix& a, std::uint64_t q);

/// Default limit on the number of k×k minors minor_valuations will enumerate.
inline constexpr std::uint64_t kDefaultMinorCap = 100'000;

/// Minimum q-adic valuation over all k×k minors (infinite if all vanish).
/// Throws DomainError if k exceeds the matrix shape, CapExceeded if the
/// number of minors exceeds `cap`.
Valuation minor_valuations(const IntMatrix& a, std::uint64_t q, std::size_t k,
                           std::uint64_t cap = kDefaultMinorCap);

}  // namespace resq
