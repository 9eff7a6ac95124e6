#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "posthopf/prime_field.hpp"
#include "posthopf/rational.hpp"

namespace posthopf {

inline Rational field_one(const Rational&) { return Rational(1); }
inline PrimeFieldElement field_one(const PrimeFieldElement& like) { return PrimeFieldElement(1, like.modulus()); }

/// Dense row-major matrix over an exact field (Rational or PrimeFieldElement).
/// The zero element is kept so that empty matrices still know their field.
template <class F>
class ExactMatrix {
  public:
    ExactMatrix(std::size_t rows, std::size_t cols, F zero)
        : rows_(rows), cols_(cols), zero_(zero), entries_(rows * cols, zero) {}

    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<F> entries, F zero)
        : rows_(rows), cols_(cols), zero_(std::move(zero)), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw std::invalid_argument("matrix: entry count != rows*cols");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& zero() const { return zero_; }

    F& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix: vector length mismatch");
        std::vector<F> out(rows_, zero_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

  private:
    std::size_t rows_;
    std::size_t cols_;
    F zero_;
    std::vector<F> entries_;
};

template <class F>
struct RrefResult {
    ExactMatrix<F> matrix;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class F>
RrefResult<F> rref(ExactMatrix<F> m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, col).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pr, c), m(row, c));
        F inv = field_one(m.zero()) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            F factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

/// Null-space basis read off the RREF: each free column in increasing order
/// is set to 1 (others free columns 0) and the pivot variables solved.
template <class F>
std::vector<std::vector<F>> kernel_basis(const ExactMatrix<F>& m) {
    auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), m.zero());
        v[free] = field_one(m.zero());
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace posthopf
