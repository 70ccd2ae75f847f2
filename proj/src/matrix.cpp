#include "resq/matrix.hpp"

#include "resq/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace resq {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DomainError("ragged matrix literal");
        for (long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    IntMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
    return out;
}

ModMatrix::ModMatrix(std::uint64_t q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    require_prime(q);
}

ModMatrix::ModMatrix(std::uint64_t q, std::initializer_list<std::initializer_list<std::uint64_t>> rows)
    : ModMatrix(q, rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DomainError("ragged matrix literal");
        std::size_t j = 0;
        for (std::uint64_t v : row) set(i, j++, v);
        ++i;
    }
}

bool ModMatrix::is_zero_row(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j) != 0) return false;
    }
    return true;
}

bool ModMatrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < std::min(i, cols_); ++j) {
            if ((*this)(i, j) != 0) return false;
        }
    }
    return true;
}

Integer det_exact(const IntMatrix& a) {
    if (!a.is_square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign < 0 ? Integer(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

ModMatrix reduce_mod(const IntMatrix& a, std::uint64_t q) {
    ModMatrix out(q, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, residue(a(i, j), q));
    }
    return out;
}

namespace {

struct Echelon {
    ModMatrix matrix;
    std::size_t rank;
    std::uint64_t det;  // only meaningful for square input
};

/// Gauss-Jordan elimination over Z_q. With `reduced` false only rows below
/// each pivot are cleared and pivots are left unscaled.
Echelon eliminate(ModMatrix m, bool reduced) {
    const std::uint64_t q = m.modulus();
    std::size_t row = 0;
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) {
            det = 0;
            continue;
        }
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const std::uint64_t t = m(row, j);
                m.set(row, j, m(pivot, j));
                m.set(pivot, j, t);
            }
            det = (q - det) % q;
        }
        det = mul_mod(det, m(row, col), q);
        const std::uint64_t inv = inv_mod(m(row, col), q);
        if (reduced) {
            for (std::size_t j = 0; j < m.cols(); ++j) m.set(row, j, mul_mod(m(row, j), inv, q));
        }
        for (std::size_t i = reduced ? 0 : row + 1; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const std::uint64_t factor = reduced ? m(i, col) : mul_mod(m(i, col), inv, q);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const std::uint64_t sub = mul_mod(factor, m(row, j), q);
                m.set(i, j, m(i, j) + q - sub);
            }
        }
        ++row;
    }
    if (row < m.rows()) det = 0;
    return {std::move(m), row, det};
}

}  // namespace

std::size_t rank_mod(const ModMatrix& a) { return eliminate(a, false).rank; }

ModMatrix rref_mod(const ModMatrix& a) { return eliminate(a, true).matrix; }

std::uint64_t det_mod(const ModMatrix& a) {
    if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
    if (a.rows() == 0) return 1 % a.modulus();
    return eliminate(a, false).det;
}

Triangularization triangularize_det_preserving(const IntMatrix& a, std::uint64_t q) {
    require_prime(q);
    if (!a.is_square()) throw DomainError("triangularization requires a square matrix");
    Triangularization out{a, 1};
    IntMatrix& m = out.reduced;
    const std::size_t n = m.rows();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && residue(m(pivot, col), q) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != row) {
            m.swap_rows(row, pivot);
            out.sign = -out.sign;
        }
        const std::uint64_t inv = inv_mod(residue(m(row, col), q), q);
        for (std::size_t i = row + 1; i < n; ++i) {
            const std::uint64_t entry = residue(m(i, col), q);
            if (entry == 0) continue;
            const std::uint64_t factor = mul_mod(q - entry, inv, q);
            m.add_row_multiple(i, row, Integer(static_cast<unsigned long>(factor)));
        }
        ++row;
    }
    return out;
}

Valuation minor_valuations(const IntMatrix& a, std::uint64_t q, std::size_t k, std::uint64_t cap) {
    require_prime(q);
    if (k > std::min(a.rows(), a.cols())) {
        throw DomainError("minor size " + std::to_string(k) + " exceeds matrix shape");
    }
    Integer count;
    Integer col_count;
    mpz_bin_uiui(count.get_mpz_t(), a.rows(), k);
    mpz_bin_uiui(col_count.get_mpz_t(), a.cols(), k);
    count *= col_count;
    if (count > cap) {
        throw CapExceeded(count.get_str() + " minors of size " + std::to_string(k) + " exceed the enumeration cap of " +
                          std::to_string(cap));
    }

    // Advances a sorted k-subset of [0, n) to its lexicographic successor.
    auto next_subset = [k](std::vector<std::size_t>& idx, std::size_t n) {
        for (std::size_t pos = k; pos-- > 0;) {
            if (idx[pos] < n - k + pos) {
                ++idx[pos];
                for (std::size_t t = pos + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
                return true;
            }
        }
        return false;
    };

    Valuation best = Valuation::infinite();
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    do {
        std::vector<std::size_t> cols(k);
        std::iota(cols.begin(), cols.end(), std::size_t{0});
        do {
            best = std::min(best, valuation(det_exact(a.submatrix(rows, cols)), q));
        } while (next_subset(cols, a.cols()));
    } while (next_subset(rows, a.rows()));
    return best;
}

}  // namespace resq
