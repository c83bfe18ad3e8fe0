#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qehrhart/rational.hpp"

namespace qeh {

template <class F>
struct MatT {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<F> a;

    MatT() = default;
    MatT(std::size_t r, std::size_t c, const F& fill = F()) : rows(r), cols(c), a(r * c, fill) {}

    F& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    std::vector<F> row(std::size_t i) const {
        return std::vector<F>(a.begin() + static_cast<long>(i * cols), a.begin() + static_cast<long>((i + 1) * cols));
    }

    static MatT from_rows(const std::vector<std::vector<F>>& rs, std::size_t ncols, const F& zero = F()) {
        MatT m(rs.size(), ncols, zero);
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs[i].size() != ncols) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rs[i][j];
        }
        return m;
    }
};

using Mat = MatT<Rat>;

struct RowEchelon {
    Mat echelon;                       // reduced; rank rows followed by zero rows
    std::vector<std::size_t> pivots;   // strictly increasing
    std::size_t rank() const { return pivots.size(); }
};

// Fraction-free forward elimination (Bareiss) on the integer-scaled rows,
// then exact back substitution.
RowEchelon rref(const Mat& m);
std::size_t rank(const Mat& m);
std::vector<std::vector<Rat>> nullspace(const Mat& m);
std::optional<std::vector<Rat>> solve(const Mat& a, const std::vector<Rat>& b);
std::vector<Rat> mat_vec(const Mat& a, const std::vector<Rat>& v);

// Gauss-Jordan over an arbitrary exact field; `one` carries field context.
template <class F>
std::pair<MatT<F>, std::vector<std::size_t>> rref_field(MatT<F> m, const F& one) {
    const F zero = one - one;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = r;
        while (sel < m.rows && m(sel, c) == zero) ++sel;
        if (sel == m.rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(r, j));
        F inv = one / m(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == zero) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(piv)};
}

template <class F>
std::vector<std::vector<F>> nullspace_field(const MatT<F>& m, const F& one) {
    const F zero = one - one;
    auto [e, piv] = rref_field(m, one);
    std::vector<bool> is_piv(m.cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<F> v(m.cols, zero);
        v[f] = one;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = zero - e(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qeh
