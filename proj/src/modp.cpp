#include "qehrhart/modp.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nf_table.hpp"
#include "qehrhart/fp.hpp"
#include "qehrhart/harmonics.hpp"

namespace qeh {

namespace {

void check_prime(std::uint64_t p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

}  // namespace

DividedPoly DividedPoly::monomial(std::uint64_t p, const Exponent& a, std::uint64_t c) {
    DividedPoly f(p, static_cast<int>(a.size()));
    f.add_term(a, c);
    return f;
}

DividedPoly DividedPoly::constant(std::uint64_t p, int nvars, std::uint64_t c) {
    return monomial(p, Exponent(nvars, 0), c);
}

int DividedPoly::degree() const {
    int d = -1;
    for (const auto& [a, c] : terms_) d = std::max(d, total_degree(a));
    return d;
}

bool DividedPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
}

std::uint64_t DividedPoly::coeff(const Exponent& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? 0 : it->second;
}

void DividedPoly::add_term(const Exponent& a, std::uint64_t c) {
    if (static_cast<int>(a.size()) != n_) throw std::invalid_argument("exponent length mismatch");
    const Modulus M{p_};
    c %= p_;
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(a, c);
    if (!fresh) {
        it->second = M.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

DividedPoly DividedPoly::operator+(const DividedPoly& o) const {
    if (o.p_ != p_) throw std::invalid_argument("modulus mismatch");
    if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
    DividedPoly r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
}

DividedPoly DividedPoly::operator*(std::uint64_t s) const {
    const Modulus M{p_};
    DividedPoly r(p_, n_);
    for (const auto& [a, c] : terms_) r.add_term(a, M.mul(c, s % p_));
    return r;
}

std::string DividedPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second << "*y^(";
        for (int i = 0; i < n_; ++i) os << (i ? "," : "") << it->first[i];
        os << ")";
    }
    return os.str();
}

DividedPoly divided_mul(const DividedPoly& f, const DividedPoly& g) {
    if (f.modulus() != g.modulus()) throw std::invalid_argument("modulus mismatch");
    if (f.nvars() != g.nvars()) throw std::invalid_argument("variable count mismatch");
    const std::uint64_t p = f.modulus();
    const Modulus M{p};
    DividedPoly h(p, f.nvars());
    Exponent s(f.nvars());
    for (const auto& [a, c] : f.terms())
        for (const auto& [b, e] : g.terms()) {
            std::uint64_t w = M.mul(c, e);
            for (int i = 0; i < f.nvars() && w; ++i) {
                s[i] = a[i] + b[i];
                w = M.mul(w, binomial_mod(static_cast<std::uint64_t>(s[i]), static_cast<std::uint64_t>(a[i]), p));
            }
            if (w) h.add_term(s, w);
        }
    return h;
}

DividedPoly divided_power_linear(std::uint64_t p, const std::vector<std::uint64_t>& c, int d) {
    const int n = static_cast<int>(c.size());
    const Modulus M{p};
    DividedPoly f(p, n);
    for (const auto& a : monomials_of_degree(n, d)) {
        std::uint64_t w = 1;
        for (int i = 0; i < n; ++i) w = M.mul(w, M.pow(c[i] % p, static_cast<std::uint64_t>(a[i])));
        f.add_term(a, w);
    }
    return f;
}

PointLocus reduce_locus(const PointLocus& z, std::uint64_t p) {
    check_prime(p);
    const Modulus M{p};
    std::vector<Point> pts;
    for (const auto& x : z.points) {
        Point y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = static_cast<long long>(M.reduce(x[i]));
        pts.push_back(std::move(y));
    }
    PointLocus r(z.dim, pts);
    if (r.size() != z.size()) throw std::domain_error("points collide modulo " + std::to_string(p));
    return r;
}

PointLocus sumset_modp(const PointLocus& a, const PointLocus& b, std::uint64_t p) {
    if (a.dim != b.dim) throw std::invalid_argument("sumset: dimension mismatch");
    check_prime(p);
    const Modulus M{p};
    std::vector<Point> pts;
    for (const auto& x : a.points)
        for (const auto& y : b.points) {
            Point s(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) s[i] = static_cast<long long>(M.reduce(x[i] % static_cast<long long>(p) + y[i] % static_cast<long long>(p)));
            pts.push_back(std::move(s));
        }
    return PointLocus(a.dim, pts);
}

FpSpace::FpSpace(std::uint64_t p, int nvars, int degree) : p_(p), n_(nvars), d_(degree) {
    mons_ = monomials_of_degree(nvars, degree);
    std::reverse(mons_.begin(), mons_.end());
    for (std::size_t i = 0; i < mons_.size(); ++i) index_[mons_[i]] = i;
}

std::vector<std::uint64_t> FpSpace::to_vector(const DividedPoly& f) const {
    if (f.modulus() != p_) throw std::invalid_argument("modulus mismatch");
    std::vector<std::uint64_t> v(mons_.size(), 0);
    for (const auto& [a, c] : f.terms()) {
        auto it = index_.find(a);
        if (it == index_.end()) throw std::invalid_argument("term outside the degree of this space");
        v[it->second] = c;
    }
    return v;
}

std::vector<std::uint64_t> FpSpace::residual(std::vector<std::uint64_t> v) const {
    const Modulus M{p_};
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::uint64_t f = v[piv_[r]];
        if (!f) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (rows_[r][j]) v[j] = M.sub(v[j], M.mul(f, rows_[r][j]));
    }
    return v;
}

bool FpSpace::add(const DividedPoly& f) {
    auto v = residual(to_vector(f));
    auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (it == v.end()) return false;
    const Modulus M{p_};
    const std::size_t pv = static_cast<std::size_t>(it - v.begin());
    const std::uint64_t inv = M.inv(v[pv]);
    for (auto& x : v) x = M.mul(x, inv);
    for (auto& row : rows_) {
        const std::uint64_t c = row[pv];
        if (!c) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j]) row[j] = M.sub(row[j], M.mul(c, v[j]));
    }
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), pv) - piv_.begin();
    piv_.insert(piv_.begin() + pos, pv);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool FpSpace::contains(const DividedPoly& f) const {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous() || f.degree() != d_ || f.nvars() != n_) return false;
    auto v = residual(to_vector(f));
    return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

std::vector<DividedPoly> FpSpace::basis() const {
    std::vector<DividedPoly> out;
    for (const auto& row : rows_) {
        DividedPoly f(p_, n_);
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j]) f.add_term(mons_[j], row[j]);
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t ModpHarmonicBasis::size() const {
    std::size_t s = 0;
    for (const auto& sp : by_degree) s += sp.dim();
    return s;
}

std::vector<std::size_t> ModpHarmonicBasis::dims() const {
    std::vector<std::size_t> d;
    for (const auto& sp : by_degree) d.push_back(sp.dim());
    return d;
}

bool ModpHarmonicBasis::contains(const DividedPoly& f) const {
    if (f.is_zero()) return true;
    if (f.modulus() != p || f.nvars() != nvars) return false;
    // every homogeneous component must lie in its graded piece
    std::map<int, DividedPoly> comps;
    for (const auto& [a, c] : f.terms()) comps.try_emplace(total_degree(a), p, nvars).first->second.add_term(a, c);
    for (const auto& [d, g] : comps) {
        if (d >= static_cast<int>(by_degree.size())) return false;
        if (!by_degree[d].contains(g)) return false;
    }
    return true;
}

ModpHarmonicBasis harmonic_basis_modp(const PointLocus& z, std::uint64_t p) {
    check_prime(p);
    const PointLocus red = reduce_locus(z, p);
    BMModp r = bm_modp(red, p, BMStop::Harmonic);
    const int n = z.dim;
    std::vector<detail::TopGen<Fp>> gens;
    for (std::size_t k = 0; k < r.leading.size(); ++k) {
        const int d = total_degree(r.leading[k]);
        detail::TopGen<Fp> g{r.leading[k], {}};
        for (std::size_t j = 0; j < r.relation[k].size(); ++j)
            if (r.relation[k][j] && total_degree(r.standard[j]) == d)
                g.tail.emplace_back(r.standard[j], Fp(r.relation[k][j], p));
        gens.push_back(std::move(g));
    }
    int top = 0;
    for (const auto& s : r.standard) top = std::max(top, total_degree(s));
    ModpHarmonicBasis hb;
    hb.p = p;
    hb.nvars = n;
    for (int d = 0; d <= top; ++d) {
        auto t = detail::degree_nf<Fp>(n, d, r.standard, gens, Fp(0, p), Fp(1, p));
        FpSpace sp(p, n, d);
        for (std::size_t j = 0; j < t.std_mons.size(); ++j) {
            DividedPoly g(p, n);
            for (std::size_t i = 0; i < t.mons.size(); ++i) g.add_term(t.mons[i], t.nf[i][j].value());
            sp.add(g);
        }
        hb.by_degree.push_back(std::move(sp));
    }
    return hb;
}

ModpClosureResult closure_check_modp(const PointLocus& z, const PointLocus& z2, std::uint64_t p) {
    if (z.dim != z2.dim) throw std::invalid_argument("closure_check: dimension mismatch");
    auto a = harmonic_basis_modp(z, p), b = harmonic_basis_modp(z2, p);
    auto target = harmonic_basis_modp(sumset_modp(z, z2, p), p);
    ModpClosureResult res;
    for (const auto& sa : a.by_degree)
        for (const auto& sb : b.by_degree)
            for (const auto& f : sa.basis())
                for (const auto& g : sb.basis()) {
                    DividedPoly h = divided_mul(f, g);
                    if (!target.contains(h)) {
                        res.holds = false;
                        res.witness = h;
                        return res;
                    }
                }
    return res;
}

long beta_bound(long r, long r2, std::uint64_t p) {
    if (r < 1 || r2 < 1) throw std::invalid_argument("beta_bound needs r, r' >= 1");
    if (p == 0) return r + r2 - 1;
    check_prime(p);
    for (long n = 0;; ++n) {
        bool ok = true;
        for (long k = 0; k <= n && ok; ++k)
            if (binomial_mod(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k), p) != 0)
                ok = k >= r || n - k >= r2;
        if (ok) return n;
    }
}

}  // namespace qeh
