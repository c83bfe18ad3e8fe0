#include "qehrhart/ehrhart.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "parallel.hpp"
#include "qehrhart/linalg.hpp"

namespace qeh {

namespace {

QPoly locus_hilbert(const PointLocus& z, LocusCache* cache) {
    if (z.empty()) return QPoly();
    return hilbert_series(z, HilbertMethod::Auto, cache);
}

std::vector<QPoly> parallel_map(int from, int to, int jobs, const std::function<QPoly(int)>& f) {
    std::vector<QPoly> out(static_cast<std::size_t>(std::max(0, to - from + 1)));
    // largest dilates first so the long jobs do not trail
    detail::parallel_for(from, to, jobs, [&](int m) { out[static_cast<std::size_t>(m - from)] = f(m); });
    return out;
}

long long weight(const Point& z) {
    long long s = 0;
    for (auto x : z) s += x;
    return s;
}

QPoly weight_poly(const PointLocus& z) {
    std::vector<Rat> c;
    for (const auto& x : z.points) {
        const long long w = weight(x);
        if (w < 0) throw std::invalid_argument("weight enumerator needs nonnegative coordinate sums");
        if (c.size() <= static_cast<std::size_t>(w)) c.resize(static_cast<std::size_t>(w) + 1);
        c[static_cast<std::size_t>(w)] += 1;
    }
    return QPoly(c);
}

}  // namespace

QPoly iq(const LatticePolytope& p, int m, LocusCache* cache) {
    if (m < 0) throw std::invalid_argument("iq needs m >= 0");
    return locus_hilbert(p.lattice_points(m), cache);
}

QPoly iq_interior(const LatticePolytope& p, int m, LocusCache* cache) {
    if (m < 1) throw std::invalid_argument("iq_interior needs m >= 1");
    return locus_hilbert(p.interior_lattice_points(m), cache);
}

TQSeries series_E(const LatticePolytope& p, int T, int jobs, LocusCache* cache) {
    if (T < 0) throw std::invalid_argument("negative truncation order");
    TQSeries s(T);
    s.c = parallel_map(0, T, jobs, [&](int m) { return iq(p, m, cache); });
    return s;
}

TQSeries series_Ebar(const LatticePolytope& p, int T, int jobs, LocusCache* cache) {
    if (T < 0) throw std::invalid_argument("negative truncation order");
    TQSeries s(T);
    auto v = parallel_map(1, T, jobs, [&](int m) { return iq_interior(p, m, cache); });
    for (int m = 1; m <= T; ++m) s[m] = v[static_cast<std::size_t>(m - 1)];
    return s;
}

TQSeries weight_series_W(const LatticePolytope& p, int T) {
    TQSeries s(T);
    for (int m = 0; m <= T; ++m) s[m] = weight_poly(p.lattice_points(m));
    return s;
}

TQSeries weight_series_Wbar(const LatticePolytope& p, int T) {
    TQSeries s(T);
    for (int m = 1; m <= T; ++m) s[m] = weight_poly(p.interior_lattice_points(m));
    return s;
}

SimplexNumerators simplex_numerators(const LatticePolytope& p) {
    const auto& vs = p.vertices();
    const int d = p.dim();
    if (static_cast<int>(vs.size()) != d + 1) throw NotASimplex("simplex_numerators: polytope is not a simplex");
    const int n = p.ambient_dim();
    // columns (1, v_j)
    Mat a(static_cast<std::size_t>(n) + 1, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j) {
        a(0, j) = 1;
        for (int i = 0; i < n; ++i) a(static_cast<std::size_t>(i) + 1, j) = Rat(static_cast<long>(vs[j][i]));
    }
    SimplexNumerators out;
    for (const auto& v : vs) out.den.emplace_back(1, static_cast<int>(weight(v)));
    std::sort(out.den.begin(), out.den.end());
    for (int k = 0; k <= d + 1; ++k) {
        for (const auto& x : p.lattice_points(k).points) {
            std::vector<Rat> rhs{Rat(k)};
            for (auto c : x) rhs.emplace_back(static_cast<long>(c));
            auto lam = solve(a, rhs);
            if (!lam) throw std::logic_error("lattice point of a dilate outside the cone span");
            const bool half_open = std::all_of(lam->begin(), lam->end(), [](const Rat& l) { return l >= 0 && l < 1; });
            const bool opposite = std::all_of(lam->begin(), lam->end(), [](const Rat& l) { return l > 0 && l <= 1; });
            const int w = static_cast<int>(weight(x));
            if (half_open) out.num.add_term(k, w, 1);
            if (opposite) out.num_bar.add_term(k, w, 1);
        }
    }
    return out;
}

SearchBounds default_bounds(const LatticePolytope& p) {
    SearchBounds b;
    b.bMax = 4;
    b.aMax = static_cast<int>(2 * p.max_abs_sum());
    b.nuMax = p.dim() + 3;
    b.tDegSlack = 4;
    return b;
}

std::optional<RatFun2> guess_series(const TQSeries& s, const SearchBounds& bounds) {
    auto found = denominator_search(s, bounds);
    if (found.empty()) return std::nullopt;
    return found.front();
}

std::string Verification::to_string() const {
    switch (level) {
        case Level::None: return "none";
        case Level::Truncation: return "truncation(" + std::to_string(T) + ")";
        case Level::Generated: return "generated(" + std::to_string(m0) + "," + std::to_string(T) + ")";
    }
    return "none";
}

QEhrhartRecord compute_record(const LatticePolytope& p, int T, int jobs, LocusCache* cache) {
    QEhrhartRecord r;
    r.polytope = p.name();
    r.vertices = p.input_vertices();
    r.T = T;
    r.iq = series_E(p, T, jobs, cache).c;
    r.iq_interior = series_Ebar(p, T, jobs, cache).c;
    return r;
}

void guess(QEhrhartRecord& rec, const SearchBounds& bounds) {
    TQSeries e(rec.T), eb(rec.T);
    e.c = rec.iq;
    eb.c = rec.iq_interior;
    rec.guessed_E = guess_series(e, bounds);
    bool any_interior = std::any_of(eb.c.begin(), eb.c.end(), [](const QPoly& x) { return !x.is_zero(); });
    rec.guessed_Ebar = any_interior ? guess_series(eb, bounds) : std::optional<RatFun2>(RatFun2(BiPoly(), {}));
    if (rec.guessed_E) {
        rec.verification.level = Verification::Level::Truncation;
        rec.verification.T = rec.T;
    }
}

QEhrhartRecord guess(const LatticePolytope& p, int T, const SearchBounds& bounds, int jobs, LocusCache* cache) {
    auto rec = compute_record(p, T, jobs, cache);
    guess(rec, bounds);
    return rec;
}

bool reciprocal_pair(const RatFun2& F, const RatFun2& Fbar, int d, int qShift) {
    // F(1/t,1/q) = (-1)^nu t^{sum b} q^{sum a} N(1/t,1/q) / prod(1 - t^b q^a)
    BiPoly lhs = Fbar.num.shifted(0, qShift) * F.den_poly();
    BiPoly rhs = F.num.inverted().shifted(F.sum_b(), F.sum_a()) * Fbar.den_poly();
    if ((d + 1 + F.nu()) % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

bool reciprocity_check(const RatFun2& E, const RatFun2& Ebar, int d) { return reciprocal_pair(E, Ebar, d, d); }

bool check_dilation(const LatticePolytope& p, int d, int T, LocusCache* cache) {
    if (d < 1) throw std::invalid_argument("dilation factor must be positive");
    auto direct = series_E(dilate(p, d), T, 1, cache);
    TQSeries formula(T);
    for (int m = 0; m <= T; ++m) formula[m] = iq(p, d * m, cache);
    return direct == formula;
}

bool check_product(const LatticePolytope& p, const LatticePolytope& q, int T, LocusCache* cache) {
    return series_E(product(p, q), T, 1, cache) == hadamard(series_E(p, T, 1, cache), series_E(q, T, 1, cache));
}

bool check_join(const LatticePolytope& p, const LatticePolytope& q, int T, LocusCache* cache) {
    auto direct = series_E(join(p, q), T, 1, cache);
    TQSeries one_minus_t(T), geo(T);
    one_minus_t[0] = QPoly::constant(1);
    if (T >= 1) one_minus_t[1] = QPoly::constant(-1);
    for (int k = 0; k <= T; ++k) geo[k] = QPoly::monomial(k);
    auto formula = one_minus_t * geo * series_E(p, T, 1, cache) * series_E(q, T, 1, cache);
    return direct == formula;
}

Int HStar::normalized_volume() const {
    Int s = 0;
    for (const auto& x : h) s += x;
    return s;
}

ClassicalReport classical_check(const LatticePolytope& p, LocusCache* cache) {
    const int d = p.dim();
    ClassicalReport r;
    for (int m = 0; m <= d + 3; ++m) r.counts.emplace_back(static_cast<long>(p.lattice_points(m).size()));
    // Ehrhart polynomial through m = 0..d, Newton forward differences
    std::vector<Rat> diff(r.counts.begin(), r.counts.begin() + d + 1), newton;
    for (int k = 0; k <= d; ++k) {
        newton.push_back(diff[0]);
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
    }
    std::vector<Rat> poly(static_cast<std::size_t>(d) + 1), basis{Rat(1)};
    for (int k = 0; k <= d; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i) poly[i] += newton[k] * basis[i];
        // basis *= (m - k)/(k+1)
        std::vector<Rat> nb(basis.size() + 1);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            nb[i + 1] += basis[i] / Rat(k + 1);
            nb[i] -= basis[i] * Rat(k) / Rat(k + 1);
        }
        basis = nb;
    }
    r.ehrhart_poly = poly;
    std::ostringstream os;
    auto fail = [&](const std::string& what) { throw EnumerationInconsistency(p.name() + ": " + what); };
    for (int m = d + 1; m <= d + 3; ++m) {
        Rat v = 0, pw = 1;
        for (const auto& c : poly) {
            v += c * pw;
            pw *= m;
        }
        if (v != Rat(r.counts[m])) fail("counts are not polynomial of degree " + std::to_string(d));
    }
    for (int k = 0; k <= d + 3; ++k) {
        Int hk = 0;
        for (int j = 0; j <= std::min(k, d + 1); ++j) {
            Int term = binomial(d + 1, j) * r.counts[k - j];
            if (j % 2) hk -= term;
            else hk += term;
        }
        if (k <= d) r.hstar.h.push_back(hk);
        else if (hk != 0) fail("series is not rational over (1-t)^{d+1}");
    }
    if (r.hstar.h[0] != 1) fail("h*_0 != 1");
    for (const auto& x : r.hstar.h)
        if (x < 0) fail("negative h* entry");
    if (Rat(r.hstar.normalized_volume()) != poly[d] * Rat(factorial(static_cast<unsigned>(d))))
        fail("sum of h* differs from the normalized volume");
    auto s = series_E(p, d + 3, 1, cache).at_q_one();
    for (int m = 0; m <= d + 3; ++m)
        if (s[m] != Rat(r.counts[m])) fail("q=1 specialization differs from the lattice point count");
    os << "h* =";
    for (const auto& x : r.hstar.h) os << " " << x;
    os << "; normalized volume " << r.hstar.normalized_volume();
    r.report = os.str();
    return r;
}

}  // namespace qeh
