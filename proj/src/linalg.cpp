#include "qehrhart/linalg.hpp"

namespace qeh {

RowEchelon rref(const Mat& m) {
    const std::size_t R = m.rows, C = m.cols;
    std::vector<std::vector<Int>> z(R, std::vector<Int>(C));
    for (std::size_t i = 0; i < R; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < C; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) z[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }

    std::vector<std::size_t> piv;
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t sel = r;
        while (sel < R && z[sel][c] == 0) ++sel;
        if (sel == R) continue;
        std::swap(z[sel], z[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                z[i][j] = z[r][c] * z[i][j] - z[i][c] * z[r][j];
                mpz_divexact(z[i][j].get_mpz_t(), z[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            z[i][c] = 0;
        }
        prev = z[r][c];
        piv.push_back(c);
        ++r;
    }

    RowEchelon out{Mat(R, C), piv};
    Mat& e = out.echelon;
    for (std::size_t i = 0; i < piv.size(); ++i) {
        const Int& p = z[i][piv[i]];
        for (std::size_t j = 0; j < C; ++j) e(i, j) = make_rat(z[i][j], p);
    }
    for (std::size_t k = piv.size(); k-- > 0;) {
        const std::size_t c = piv[k];
        for (std::size_t i = 0; i < k; ++i) {
            if (e(i, c) == 0) continue;
            Rat f = e(i, c);
            for (std::size_t j = c; j < C; ++j) e(i, j) -= f * e(k, j);
        }
    }
    return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank(); }

std::vector<std::vector<Rat>> nullspace(const Mat& m) {
    auto ech = rref(m);
    std::vector<bool> is_piv(m.cols, false);
    for (auto c : ech.pivots) is_piv[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rat> v(m.cols);
        v[f] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.echelon(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const Mat& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows) throw std::invalid_argument("solve: size mismatch");
    Mat aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
        aug(i, a.cols) = b[i];
    }
    auto ech = rref(aug);
    if (!ech.pivots.empty() && ech.pivots.back() == a.cols) return std::nullopt;
    std::vector<Rat> x(a.cols);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.echelon(i, a.cols);
    return x;
}

std::vector<Rat> mat_vec(const Mat& a, const std::vector<Rat>& v) {
    if (v.size() != a.cols) throw std::invalid_argument("mat_vec: size mismatch");
    std::vector<Rat> out(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out[i] += a(i, j) * v[j];
    return out;
}

}  // namespace qeh
