#ifndef NIKISHIN_LINALG_HPP
#define NIKISHIN_LINALG_HPP

#include <cstddef>
#include <vector>

#include "nikishin/scalar.hpp"

namespace nikishin {

/// Dense row-major matrix over either scalar backend.
template <typename S>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    S& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const S& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    std::vector<S> apply(const std::vector<S>& v) const {
        std::vector<S> out(rows_, S(0));
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) out[r] = out[r] + at(r, c) * v[c];
        return out;
    }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<S> a_;
};

namespace detail {

// Pivot acceptance. Exact backend: any nonzero entry. Big-float backend:
// |entry| must clear 2^(-p/2) relative to the largest entry of its row.
template <typename S>
bool pivot_usable(const S& candidate, const S& row_max) {
    if constexpr (is_exact_v<S>) {
        (void)row_max;
        return !is_zero(candidate);
    } else {
        if (is_zero(candidate)) return false;
        S scale = is_zero(row_max) ? S(1) : row_max;
        S threshold = S::pow2(-static_cast<long>(S::default_precision() / 2)) * scale;
        return abs_of(candidate) >= threshold;
    }
}

} // namespace detail

/// Basis of ker(M). Each basis vector has its first nonzero entry normalized
/// to 1; vectors are ordered by their free column, so the result is
/// deterministic. A matrix with no columns is rejected; a matrix with no rows
/// has the full standard basis as kernel.
template <typename S>
std::vector<std::vector<S>> nullspace(Matrix<S> m) {
    const size_t nr = m.rows(), nc = m.cols();
    if (nc == 0) throw error("degenerate system");

    std::vector<S> row_max(nr, S(0));
    if constexpr (!is_exact_v<S>) {
        for (size_t r = 0; r < nr; ++r)
            for (size_t c = 0; c < nc; ++c)
                if (abs_of(m.at(r, c)) > row_max[r]) row_max[r] = abs_of(m.at(r, c));
    }

    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < nc && rank < nr; ++c) {
        size_t piv = nr;
        if constexpr (is_exact_v<S>) {
            for (size_t r = rank; r < nr; ++r)
                if (!is_zero(m.at(r, c))) { piv = r; break; }
        } else {
            S best(0);
            for (size_t r = rank; r < nr; ++r) {
                S mag = abs_of(m.at(r, c));
                if (detail::pivot_usable(m.at(r, c), row_max[r]) && mag > best) {
                    best = mag;
                    piv = r;
                }
            }
        }
        if (piv == nr) continue;
        if (piv != rank) {
            for (size_t j = 0; j < nc; ++j) std::swap(m.at(piv, j), m.at(rank, j));
            std::swap(row_max[piv], row_max[rank]);
        }
        S inv_lead = S(1) / m.at(rank, c);
        for (size_t j = c; j < nc; ++j) m.at(rank, j) = m.at(rank, j) * inv_lead;
        for (size_t r = 0; r < nr; ++r) {
            if (r == rank || is_zero(m.at(r, c))) continue;
            S f = m.at(r, c);
            for (size_t j = c; j < nc; ++j) m.at(r, j) = m.at(r, j) - f * m.at(rank, j);
            m.at(r, c) = S(0);
        }
        pivot_col.push_back(c);
        ++rank;
    }

    std::vector<bool> is_pivot(nc, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<S>> basis;
    for (size_t c = 0; c < nc; ++c) {
        if (is_pivot[c]) continue;
        std::vector<S> v(nc, S(0));
        v[c] = S(1);
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m.at(i, c);
        for (auto& x : v) {
            if (!is_zero(x)) {
                S lead = x;
                for (auto& y : v) y = y / lead;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace nikishin

#endif
