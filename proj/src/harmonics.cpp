#include "qehrhart/harmonics.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nf_table.hpp"
#include "qehrhart/fp.hpp"

namespace qeh {

namespace {

bool divisible_by_any(const Exponent& m, const std::vector<Exponent>& leads) {
    for (const auto& l : leads)
        if (divides(l, m)) return true;
    return false;
}

// Evaluation rows of basis polynomials at the points of a locus, as integers.
class Evaluator {
public:
    Evaluator(const PointLocus& z, EvalBasis basis) : z_(z), basis_(basis), low_(z.dim, 0) {
        for (int i = 0; i < z.dim; ++i) {
            long long lo = z.points[0][i];
            for (const auto& p : z.points) lo = std::min(lo, p[i]);
            low_[i] = lo;
        }
        cache_.assign(z.dim, std::vector<std::vector<Int>>(z.size()));
    }

    std::vector<Int> row(const Exponent& a) {
        std::vector<Int> out(z_.size(), 1);
        for (int i = 0; i < z_.dim; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < z_.size(); ++j) out[j] *= factor(i, j, a[i]);
        }
        return out;
    }

private:
    const Int& factor(int i, std::size_t j, int k) {
        auto& c = cache_[i][j];
        while (static_cast<int>(c.size()) <= k) {
            int e = static_cast<int>(c.size());
            Int v;
            if (basis_ == EvalBasis::Binomial) {
                v = binomial(static_cast<long>(z_.points[j][i] - low_[i]), e);
            } else {
                mpz_pow_ui(v.get_mpz_t(), Int(static_cast<long>(z_.points[j][i])).get_mpz_t(), static_cast<unsigned long>(e));
            }
            c.push_back(v);
        }
        return c[k];
    }

    const PointLocus& z_;
    EvalBasis basis_;
    std::vector<long long> low_;
    std::vector<std::vector<std::vector<Int>>> cache_;
};

}  // namespace

BMResult bm_exact(const PointLocus& z, EvalBasis basis, BMStop stop) {
    if (z.empty()) throw std::invalid_argument("vanishing ideal of an empty locus");
    const int n = z.dim;
    const std::size_t N = z.size();
    const bool rel = stop != BMStop::Standard;
    Evaluator ev(z, basis);
    struct Row {
        std::vector<Int> e, t;
        std::size_t piv;
    };
    std::vector<Row> rows;
    BMResult res;
    res.nvars = n;
    res.basis = basis;
    Int tmp;
    for (int deg = 0;; ++deg) {
        bool any = false;
        for (const auto& m : monomials_of_degree(n, deg)) {
            if (divisible_by_any(m, res.leading)) continue;
            any = true;
            const std::size_t r = rows.size();
            std::vector<Int> v = ev.row(m);
            std::vector<Int> t;
            if (rel) {
                t.assign(r + 1, 0);
                t[r] = 1;
            }
            Int prev = 1;
            // fraction-free elimination: every division below is exact
            for (std::size_t k = 0; k < r; ++k) {
                const Row& R = rows[k];
                const Int f = v[R.piv];
                const Int& pk = R.e[R.piv];
                const bool unit = prev == 1;
                for (std::size_t j = 0; j < N; ++j) {
                    mpz_mul(tmp.get_mpz_t(), pk.get_mpz_t(), v[j].get_mpz_t());
                    if (f != 0) mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), R.e[j].get_mpz_t());
                    if (unit) mpz_swap(v[j].get_mpz_t(), tmp.get_mpz_t());
                    else mpz_divexact(v[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
                }
                if (rel) {
                    for (std::size_t j = 0; j <= r; ++j) {
                        mpz_mul(tmp.get_mpz_t(), pk.get_mpz_t(), t[j].get_mpz_t());
                        if (f != 0 && j < R.t.size()) mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), R.t[j].get_mpz_t());
                        if (unit) mpz_swap(t[j].get_mpz_t(), tmp.get_mpz_t());
                        else mpz_divexact(t[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
                    }
                }
                prev = pk;
            }
            std::size_t piv = N;
            for (std::size_t j = 0; j < N; ++j)
                if (v[j] != 0) {
                    piv = j;
                    break;
                }
            if (piv == N) {
                res.leading.push_back(m);
                if (rel) {
                    std::vector<Rat> c(r);
                    for (std::size_t j = 0; j < r; ++j) c[j] = Rat(t[j]) / Rat(t[r]);
                    res.relation.push_back(std::move(c));
                }
            } else {
                res.standard.push_back(m);
                rows.push_back(Row{std::move(v), std::move(t), piv});
                if (stop == BMStop::Standard && rows.size() == N) return res;
            }
        }
        if (!any) break;
        if (stop == BMStop::Harmonic && rows.size() == N) break;
    }
    return res;
}

namespace {

std::vector<detail::TopGen<Rat>> top_generators(const BMResult& r) {
    if (r.basis != EvalBasis::Binomial) throw std::logic_error("top generators expect the binomial basis");
    std::vector<detail::TopGen<Rat>> gens;
    for (std::size_t k = 0; k < r.leading.size(); ++k) {
        const Exponent& m = r.leading[k];
        const int d = total_degree(m);
        const Rat mf(exponent_factorial(m));
        detail::TopGen<Rat> g{m, {}};
        for (std::size_t j = 0; j < r.relation[k].size(); ++j) {
            const Exponent& s = r.standard[j];
            if (total_degree(s) != d || r.relation[k][j] == 0) continue;
            g.tail.emplace_back(s, r.relation[k][j] * mf / Rat(exponent_factorial(s)));
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

MultiPoly gen_poly(int n, const detail::TopGen<Rat>& g) {
    MultiPoly p = MultiPoly::monomial(g.lead);
    for (const auto& [s, c] : g.tail) p.add_term(s, c);
    (void)n;
    return p;
}

}  // namespace

GBasis buchberger_moeller(const PointLocus& z) {
    BMResult r = bm_exact(z, EvalBasis::Monomial, BMStop::Full);
    GBasis g;
    g.nvars = r.nvars;
    g.standard = r.standard;
    for (std::size_t k = 0; k < r.leading.size(); ++k) {
        MultiPoly p = MultiPoly::monomial(r.leading[k]);
        for (std::size_t j = 0; j < r.relation[k].size(); ++j) p.add_term(r.standard[j], r.relation[k][j]);
        g.generators.push_back(p);
    }
    return g;
}

GBasis gr_ideal(const PointLocus& z) {
    BMResult r = bm_exact(z, EvalBasis::Binomial, BMStop::Full);
    GBasis g;
    g.nvars = r.nvars;
    g.standard = r.standard;
    for (const auto& tg : top_generators(r)) g.generators.push_back(gen_poly(r.nvars, tg));
    return g;
}

std::vector<MultiPoly> gr_component(const PointLocus& z, int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    BMResult r = bm_exact(z, EvalBasis::Binomial, BMStop::Harmonic);
    auto t = detail::degree_nf<Rat>(z.dim, d, r.standard, top_generators(r), Rat(0), Rat(1));
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < t.mons.size(); ++i) {
        if (t.std_pos[i] >= 0) continue;
        MultiPoly p = MultiPoly::monomial(t.mons[i]);
        for (std::size_t j = 0; j < t.std_mons.size(); ++j) p.add_term(t.std_mons[j], -t.nf[i][j]);
        out.push_back(p);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// ---- homogeneous subspaces ----

HomSpace::HomSpace(int nvars, int degree) : n_(nvars), d_(degree) {
    mons_ = monomials_of_degree(nvars, degree);
    std::reverse(mons_.begin(), mons_.end());
    for (std::size_t i = 0; i < mons_.size(); ++i) index_[mons_[i]] = i;
}

std::vector<Rat> HomSpace::to_vector(const MultiPoly& f) const {
    std::vector<Rat> v(mons_.size());
    for (const auto& [a, c] : f.terms()) {
        auto it = index_.find(a);
        if (it == index_.end()) throw std::invalid_argument("polynomial is not homogeneous of the space's degree");
        v[it->second] = c;
    }
    return v;
}

MultiPoly HomSpace::to_poly(const std::vector<Rat>& v) const {
    MultiPoly p(n_);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p.add_term(mons_[i], v[i]);
    return p;
}

std::vector<Rat> HomSpace::residual(std::vector<Rat> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rat f = v[piv_[k]];
        if (f == 0) continue;
        for (std::size_t j = piv_[k]; j < v.size(); ++j)
            if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
    }
    return v;
}

bool HomSpace::add_vector(std::vector<Rat> v) {
    if (v.size() != mons_.size()) throw std::invalid_argument("vector length mismatch");
    v = residual(std::move(v));
    std::size_t p = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) {
            p = j;
            break;
        }
    if (p == v.size()) return false;
    const Rat inv = Rat(1) / v[p];
    for (std::size_t j = p; j < v.size(); ++j) v[j] *= inv;
    for (auto& row : rows_) {
        const Rat f = row[p];
        if (f == 0) continue;
        for (std::size_t j = p; j < v.size(); ++j)
            if (v[j] != 0) row[j] -= f * v[j];
    }
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool HomSpace::add(const MultiPoly& f) { return add_vector(to_vector(f)); }

bool HomSpace::contains(const MultiPoly& f) const {
    auto r = residual(to_vector(f));
    return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
}

std::optional<std::vector<Rat>> HomSpace::coordinates(const MultiPoly& f) const {
    auto v = to_vector(f);
    std::vector<Rat> c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[piv_[k]];
    auto r = residual(std::move(v));
    if (!std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; })) return std::nullopt;
    return c;
}

std::vector<MultiPoly> HomSpace::basis() const {
    std::vector<MultiPoly> out;
    for (const auto& r : rows_) out.push_back(to_poly(r));
    return out;
}

std::size_t HarmonicBasis::size() const {
    std::size_t s = 0;
    for (const auto& h : by_degree) s += h.dim();
    return s;
}

QPoly HarmonicBasis::hilbert() const {
    std::vector<Rat> c;
    for (const auto& h : by_degree) c.emplace_back(static_cast<long>(h.dim()));
    return QPoly(c);
}

bool HarmonicBasis::contains(const MultiPoly& f) const {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) throw std::invalid_argument("membership test needs a homogeneous polynomial");
    const int d = f.degree();
    if (d > max_degree()) return false;
    return by_degree[d].contains(f);
}

HarmonicBasis harmonic_basis(const PointLocus& z) {
    BMResult r = bm_exact(z, EvalBasis::Binomial, BMStop::Harmonic);
    auto gens = top_generators(r);
    int top = 0;
    for (const auto& s : r.standard) top = std::max(top, total_degree(s));
    HarmonicBasis hb;
    hb.nvars = z.dim;
    for (int d = 0; d <= top; ++d) {
        auto t = detail::degree_nf<Rat>(z.dim, d, r.standard, gens, Rat(0), Rat(1));
        HomSpace sp(z.dim, d);
        // perp of gr I in degree d: pairing weight a! between x^a and y^a
        for (std::size_t j = 0; j < t.std_mons.size(); ++j) {
            const Rat sf(exponent_factorial(t.std_mons[j]));
            MultiPoly g(z.dim);
            for (std::size_t i = 0; i < t.mons.size(); ++i) {
                if (t.nf[i][j] == 0) continue;
                g.add_term(t.mons[i], t.std_pos[i] >= 0 ? Rat(1) : t.nf[i][j] * sf / Rat(exponent_factorial(t.mons[i])));
            }
            sp.add(g);
        }
        hb.by_degree.push_back(std::move(sp));
    }
    return hb;
}

ClosureResult closure_check(const PointLocus& z, const PointLocus& z2) {
    if (z.dim != z2.dim) throw std::invalid_argument("closure_check: dimension mismatch");
    auto a = harmonic_basis(z), b = harmonic_basis(z2), target = harmonic_basis(minkowski_sum(z, z2));
    ClosureResult res;
    std::vector<HomSpace> span;
    for (int d = 0; d <= target.max_degree(); ++d) span.emplace_back(z.dim, d);
    for (int d = 0; d <= a.max_degree(); ++d)
        for (int e = 0; e <= b.max_degree(); ++e)
            for (const auto& f : a.by_degree[d].basis())
                for (const auto& g : b.by_degree[e].basis()) {
                    MultiPoly h = f * g;
                    if (!target.contains(h)) {
                        res.holds = false;
                        res.witness = h;
                        return res;
                    }
                    span[d + e].add(h);
                }
    for (int d = 0; d <= target.max_degree(); ++d)
        if (span[d].dim() < target.by_degree[d].dim()) res.proper = true;
    return res;
}

// ---- Buchberger oracle ----

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& gb) {
    MultiPoly p = f, r(f.nvars());
    while (!p.is_zero()) {
        const Exponent lt = p.leading_monomial();
        const Rat lc = p.leading_coeff();
        bool reduced = false;
        for (const auto& g : gb) {
            if (g.is_zero() || !divides(g.leading_monomial(), lt)) continue;
            Exponent q(lt.size());
            for (std::size_t i = 0; i < lt.size(); ++i) q[i] = lt[i] - g.leading_monomial()[i];
            p -= g.mul_monomial(q, lc / g.leading_coeff());
            reduced = true;
            break;
        }
        if (!reduced) {
            r.add_term(lt, lc);
            p.add_term(lt, -lc);
        }
    }
    return r;
}

GBasis buchberger(const std::vector<MultiPoly>& gens) {
    std::vector<MultiPoly> g;
    for (const auto& f : gens)
        if (!f.is_zero()) g.push_back(f.monic());
    if (g.empty()) throw std::invalid_argument("buchberger: no nonzero generators");
    const int n = g[0].nvars();
    auto lcm = [](const Exponent& a, const Exponent& b) {
        Exponent c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
        return c;
    };
    std::set<std::tuple<Exponent, std::size_t, std::size_t>, std::function<bool(const std::tuple<Exponent, std::size_t, std::size_t>&, const std::tuple<Exponent, std::size_t, std::size_t>&)>>
        pairs([](const auto& x, const auto& y) {
            if (std::get<0>(x) != std::get<0>(y)) return grlex_less(std::get<0>(x), std::get<0>(y));
            return std::tie(std::get<1>(x), std::get<2>(x)) < std::tie(std::get<1>(y), std::get<2>(y));
        });
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pairs.insert({lcm(g[i].leading_monomial(), g[j].leading_monomial()), i, j});
    while (!pairs.empty()) {
        auto [l, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        const auto& a = g[i].leading_monomial();
        const auto& b = g[j].leading_monomial();
        bool coprime = true;
        for (int v = 0; v < n; ++v)
            if (a[v] > 0 && b[v] > 0) coprime = false;
        if (coprime) continue;
        Exponent qa(n), qb(n);
        for (int v = 0; v < n; ++v) {
            qa[v] = l[v] - a[v];
            qb[v] = l[v] - b[v];
        }
        MultiPoly s = g[i].mul_monomial(qa) - g[j].mul_monomial(qb);
        MultiPoly r = normal_form(s, g);
        if (r.is_zero()) continue;
        g.push_back(r.monic());
        const std::size_t k = g.size() - 1;
        for (std::size_t m = 0; m < k; ++m) pairs.insert({lcm(g[m].leading_monomial(), g[k].leading_monomial()), m, k});
    }
    // minimize, then reduce tails
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < g.size() && !drop; ++j) {
            if (i == j) continue;
            const auto& li = g[i].leading_monomial();
            const auto& lj = g[j].leading_monomial();
            if (divides(lj, li) && (lj != li || j < i)) drop = true;
        }
        if (!drop) minimal.push_back(g[i]);
    }
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly lead = MultiPoly::monomial(minimal[i].leading_monomial());
        reduced.push_back(lead + normal_form(minimal[i] - lead, others));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const MultiPoly& x, const MultiPoly& y) { return grlex_less(x.leading_monomial(), y.leading_monomial()); });
    GBasis out;
    out.nvars = n;
    out.generators = reduced;
    // standard monomials: finite only for zero-dimensional ideals; enumerate by degree until none remain
    std::vector<Exponent> leads;
    for (const auto& f : reduced) leads.push_back(f.leading_monomial());
    for (int d = 0; d < 64; ++d) {
        bool any = false;
        for (const auto& m : monomials_of_degree(n, d))
            if (!divisible_by_any(m, leads)) {
                out.standard.push_back(m);
                any = true;
            }
        if (!any) break;
    }
    return out;
}

std::vector<MultiPoly> product_gens_oracle(const PointLocus& z) {
    const int n = z.dim;
    if (z.size() > 6 || n > 3) throw std::length_error("product_gens_oracle: locus too large");
    if (z.empty()) throw std::invalid_argument("product_gens_oracle: empty locus");
    std::vector<MultiPoly> out;
    std::vector<int> choice(z.size(), 0);
    for (;;) {
        MultiPoly p = MultiPoly::constant(n, 1);
        for (std::size_t k = 0; k < z.size(); ++k) {
            int v = choice[k];
            p = p * (MultiPoly::variable(n, v) - MultiPoly::constant(n, Rat(static_cast<long>(z.points[k][v]))));
        }
        out.push_back(p);
        std::size_t k = 0;
        while (k < choice.size() && choice[k] == n - 1) choice[k++] = 0;
        if (k == choice.size()) break;
        ++choice[k];
    }
    return out;
}

// ---- modular path ----

BMModp bm_modp(const PointLocus& z, std::uint64_t p, BMStop stop) {
    if (z.empty()) throw std::invalid_argument("vanishing ideal of an empty locus");
    const Modulus M{p};
    const int n = z.dim;
    const std::size_t N = z.size();
    std::vector<std::vector<std::uint64_t>> pts(N, std::vector<std::uint64_t>(n));
    for (std::size_t j = 0; j < N; ++j)
        for (int i = 0; i < n; ++i) pts[j][i] = M.reduce(z.points[j][i]);
    {
        auto sorted = pts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::domain_error("points collide modulo " + std::to_string(p));
    }
    std::vector<std::vector<std::vector<std::uint64_t>>> pw(N, std::vector<std::vector<std::uint64_t>>(n, {1}));
    auto power = [&](std::size_t j, int i, int k) {
        auto& c = pw[j][i];
        while (static_cast<int>(c.size()) <= k) c.push_back(M.mul(c.back(), pts[j][i]));
        return c[k];
    };
    const bool rel = stop != BMStop::Standard;
    struct Row {
        std::vector<std::uint64_t> e, t;
        std::size_t piv;
    };
    std::vector<Row> rows;
    BMModp res;
    res.p = p;
    for (int deg = 0;; ++deg) {
        bool any = false;
        for (const auto& m : monomials_of_degree(n, deg)) {
            if (divisible_by_any(m, res.leading)) continue;
            any = true;
            const std::size_t r = rows.size();
            std::vector<std::uint64_t> v(N, 1), t;
            for (std::size_t j = 0; j < N; ++j)
                for (int i = 0; i < n; ++i)
                    if (m[i]) v[j] = M.mul(v[j], power(j, i, m[i]));
            if (rel) {
                t.assign(r + 1, 0);
                t[r] = 1;
            }
            for (const auto& R : rows) {
                const std::uint64_t f = v[R.piv];
                if (f == 0) continue;
                const std::uint64_t nf = M.neg(f);
                for (std::size_t j = R.piv; j < N; ++j)
                    if (R.e[j]) v[j] = M.add(v[j], M.mul(nf, R.e[j]));
                if (rel)
                    for (std::size_t j = 0; j < R.t.size(); ++j)
                        if (R.t[j]) t[j] = M.add(t[j], M.mul(nf, R.t[j]));
            }
            std::size_t piv = N;
            for (std::size_t j = 0; j < N; ++j)
                if (v[j]) {
                    piv = j;
                    break;
                }
            if (piv == N) {
                res.leading.push_back(m);
                if (rel) {
                    t.pop_back();
                    res.relation.push_back(std::move(t));
                }
            } else {
                const std::uint64_t inv = M.inv(v[piv]);
                for (auto& x : v) x = M.mul(x, inv);
                for (auto& x : t) x = M.mul(x, inv);
                res.standard.push_back(m);
                rows.push_back(Row{std::move(v), std::move(t), piv});
                if (stop == BMStop::Standard && rows.size() == N) return res;
            }
        }
        if (!any) break;
        if (stop == BMStop::Harmonic && rows.size() == N) break;
    }
    return res;
}

std::vector<Exponent> standard_monomials(const PointLocus& z) {
    return bm_exact(z, EvalBasis::Binomial, BMStop::Standard).standard;
}

QPoly hilbert_from_standard(const std::vector<Exponent>& standard) {
    std::vector<Rat> c;
    for (const auto& s : standard) {
        const auto d = static_cast<std::size_t>(total_degree(s));
        if (c.size() <= d) c.resize(d + 1);
        c[d] += 1;
    }
    return QPoly(c);
}

std::optional<QPoly> LocusCache::find(const PointLocus& z) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({z.dim, z.points});
    if (it == memo_.end()) return std::nullopt;
    return it->second;
}

void LocusCache::store(const PointLocus& z, const QPoly& h) {
    std::lock_guard<std::mutex> lock(mu_);
    memo_[{z.dim, z.points}] = h;
}

std::size_t LocusCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.size();
}

QPoly hilbert_series(const PointLocus& z, HilbertMethod method, LocusCache* cache) {
    if (cache)
        if (auto h = cache->find(z)) return *h;
    if (method == HilbertMethod::Auto) method = z.size() <= kExactHilbertLimit ? HilbertMethod::Exact : HilbertMethod::Modular;
    QPoly h;
    if (method == HilbertMethod::Exact) {
        h = hilbert_from_standard(standard_monomials(z));
    } else {
        // two independent primes; a prime dividing a critical minor can only push a
        // standard monomial later in grlex, so on disagreement the earlier set wins
        const auto& ps = word_primes(2);
        auto a = bm_modp(z, ps[0], BMStop::Standard).standard;
        auto b = bm_modp(z, ps[1], BMStop::Standard).standard;
        if (a != b) {
            auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
            if (ib != b.end() && (ia == a.end() || grlex_less(*ib, *ia))) a = b;
        }
        h = hilbert_from_standard(a);
    }
    if (cache) cache->store(z, h);
    return h;
}

std::string dump(const GBasis& g) {
    std::ostringstream os;
    for (const auto& f : g.generators) os << f.to_string('x') << "\n";
    return os.str();
}

std::string dump(const HarmonicBasis& h) {
    std::ostringstream os;
    for (const auto& sp : h.by_degree)
        for (const auto& f : sp.basis()) os << f.to_string('y') << "\n";
    return os.str();
}

}  // namespace qeh
