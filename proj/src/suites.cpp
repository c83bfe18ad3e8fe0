#include "qehrhart/suites.hpp"

#include <random>

#include "qehrhart/corpus.hpp"

namespace qeh {

void SuiteReport::check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        passed = false;
        failures.push_back(what);
    }
}

Json SuiteReport::to_json() const {
    return Json{{"suite", name}, {"passed", passed}, {"checks", checks}, {"failures", failures}, {"notes", notes}};
}

namespace {

PointLocus random_locus(std::mt19937_64& rng, int n, std::size_t maxSize, long long lo, long long hi) {
    const std::size_t k = 1 + rng() % maxSize;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < k; ++i) {
        Point p(n);
        for (auto& x : p) x = lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
        pts.push_back(p);
    }
    return PointLocus(n, pts);
}

std::string show(const PointLocus& z) {
    std::string s = "{";
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) s += ",";
        s += "(";
        for (std::size_t k = 0; k < z.points[i].size(); ++k) s += (k ? "," : "") + std::to_string(z.points[i][k]);
        s += ")";
    }
    return s + "}";
}

RatFun2 segment_character_form(int b, int eps) {
    BiPoly num = BiPoly::constant(1);
    for (int i = 0; i < b - 1; ++i) num.add_term(1, 2 + 2 * i, 1);
    for (int i = 0; i < b; ++i) num.add_term(1, 1 + 2 * i, eps);
    return RatFun2(num, {{1, 0}, {1, 2 * b}});
}

}  // namespace

std::vector<NamedPolytope> identity_corpus() {
    return {{"segment-1", segment(0, 1)},
            {"segment-2", segment(0, 2)},
            {"segment-3", segment(0, 3)},
            {"unit-square", cube(2)},
            {"simplex-1", standard_simplex(2)},
            {"simplex-2", standard_simplex(3)},
            {"triangle-47", LatticePolytope({{0, 0}, {1, 2}, {2, 1}}, "triangle-47")}};
}

SuiteReport suite_identities(const std::vector<NamedPolytope>& ps, int T, int maxDilation) {
    SuiteReport r{"identities"};
    for (const auto& [name, p] : ps)
        for (int d = 2; d <= maxDilation; ++d) r.check(check_dilation(p, d, T), "dilation " + name + " d=" + std::to_string(d));
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i; j < ps.size(); ++j) {
            const auto& P = ps[i].polytope;
            const auto& Q = ps[j].polytope;
            const std::string pair = ps[i].name + " , " + ps[j].name;
            if (P.dim() + Q.dim() <= 3) r.check(check_product(P, Q, T), "product " + pair);
            if (P.dim() + Q.dim() + 1 <= 3) r.check(check_join(P, Q, T), "join " + pair);
        }
    r.notes.push_back("T=" + std::to_string(T));
    return r;
}

SuiteReport suite_closure(const SuiteConfig& cfg) {
    SuiteReport r{"closure"};
    std::mt19937_64 rng(cfg.seed);
    long proper = 0;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const auto a = random_locus(rng, 2, 8, -3, 3), b = random_locus(rng, 2, 8, -3, 3);
        const auto res = closure_check(a, b);
        r.check(res.holds, "trial " + std::to_string(trial) + " " + show(a) + " + " + show(b));
        proper += res.proper;
    }
    r.notes.push_back(std::to_string(cfg.trials) + " pairs, " + std::to_string(proper) + " proper");
    return r;
}

SuiteReport suite_modp(const SuiteConfig& cfg) {
    SuiteReport r{"modp"};
    std::mt19937_64 rng(cfg.seed);
    for (auto p : cfg.primes) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 2);
            const auto hi = static_cast<long long>(p) - 1;
            const std::size_t cap = std::min<std::size_t>(5, p * p);
            const auto a = random_locus(rng, n, cap, 0, hi), b = random_locus(rng, n, cap, 0, hi);
            r.check(closure_check_modp(a, b, p).holds,
                    "p=" + std::to_string(p) + " trial " + std::to_string(trial) + " " + show(a) + " + " + show(b));
        }
    }
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
        for (long r1 = 1; r1 <= std::min<long>(5, p); ++r1)
            for (long r2 = 1; r2 <= std::min<long>(5, p); ++r2)
                for (std::uint64_t s1 = 1; s1 < p; ++s1)
                    for (std::uint64_t s2 = 1; s2 < p; ++s2)
                        for (std::uint64_t a0 = 0; a0 < p; ++a0) {
                            std::vector<Point> A, B;
                            for (long i = 0; i < r1; ++i) A.push_back({static_cast<long long>((i * s1) % p)});
                            for (long i = 0; i < r2; ++i) B.push_back({static_cast<long long>((a0 + i * s2) % p)});
                            const auto sum = sumset_modp(PointLocus(1, A), PointLocus(1, B), p);
                            r.check(static_cast<long>(sum.size()) >= beta_bound(r1, r2, p),
                                    "beta p=" + std::to_string(p) + " r=" + std::to_string(r1) + " r'=" + std::to_string(r2));
                        }
    return r;
}

SuiteReport suite_chainorder(int maxN, int M, bool withX) {
    SuiteReport r{"chainorder"};
    for (int n = 1; n <= maxN; ++n) {
        const auto ps = posets_up_to_iso(n);
        for (std::size_t i = 0; i < ps.size(); ++i)
            r.check(chain_order_equality(ps[i], M), "poset n=" + std::to_string(n) + " #" + std::to_string(i));
        r.notes.push_back(std::to_string(ps.size()) + " posets on " + std::to_string(n) + " elements");
    }
    if (withX) r.check(chain_order_equality(x_poset(), 2), "X-poset M=2");
    return r;
}

SuiteReport suite_equivariant(int T) {
    SuiteReport r{"equivariant"};
    for (int b = 1; b <= 3; ++b) {
        const auto P = segment(-b, b);
        const auto ch = equivariant_series(P, negation_group(1), T);
        for (auto [id, eps] : {std::pair{"e", 1}, std::pair{"s", -1}}) {
            TQSeries s(T);
            s.c = ch.per_element.at(id);
            r.check(s == expand(segment_character_form(b, eps), T), "segment b=" + std::to_string(b) + " " + id);
        }
    }
    const LatticePolytope tri({{0, 0}, {1, 2}, {2, 1}}, "triangle-47");
    const int Tt = std::min(T, 3);
    const auto form = expand(parse_ratfun("(1-q^3t^3)/((1-t)(1-q^2t)(1-q^3t^2))"), Tt);
    const auto ch = equivariant_series(tri, swap_group(), Tt);
    for (int m = 0; m <= Tt; ++m) r.check(ch.per_element.at("(12)")[m] == form[m], "triangle swap m=" + std::to_string(m));

    const std::vector<std::pair<NamedPolytope, std::vector<GroupElement>>> cases{
        {{"cross-2", cross_polytope(2)}, sign_group(2)},
        {{"segment-[-2,2]", segment(-2, 2)}, negation_group(1)},
        {{"triangle-47", tri}, swap_group()},
        {{"simplex-2", standard_simplex(3)}, permutation_group_s3()}};
    for (const auto& [np, g] : cases) {
        const auto c = equivariant_series(np.polytope, g, Tt);
        for (const auto& e : g)
            for (int m = 0; m <= Tt; ++m)
                r.check(c.per_element.at(e.id)[m].at_one() ==
                            Rat(static_cast<long>(fixed_points(np.polytope.lattice_points(m), e.matrix))),
                        "fixed points " + np.name + " " + e.id + " m=" + std::to_string(m));
    }
    return r;
}

SuiteReport suite_classical() {
    SuiteReport r{"classical"};
    for (const auto& name : corpus_names())
        for (const auto& row : corpus(name)) {
            if (row.polytope().dim() > 3) continue;
            try {
                const auto rep = classical_check(row.polytope());
                if (row.hstar) {
                    bool same = rep.hstar.h.size() >= row.hstar->size();
                    for (std::size_t i = 0; same && i < rep.hstar.h.size(); ++i) {
                        const long long want = i < row.hstar->size() ? (*row.hstar)[i] : 0;
                        same = rep.hstar.h[i] == Int(static_cast<long>(want));
                    }
                    r.check(same, row.id + " h* differs from the stored row");
                } else {
                    r.check(true, row.id);
                }
            } catch (const EnumerationInconsistency& e) {
                r.check(false, row.id + ": " + e.what());
            }
        }
    return r;
}

}  // namespace qeh
