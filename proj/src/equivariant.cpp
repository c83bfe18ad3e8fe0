#include "qehrhart/equivariant.hpp"

#include <algorithm>
#include <set>

#include "parallel.hpp"
#include "qehrhart/linalg.hpp"

namespace qeh {

namespace {

void check_square(const IntMatrix& g, int n) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("matrix size does not match the dimension");
    for (const auto& r : g)
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("matrix is not square");
}

Int determinant(const IntMatrix& g) {
    const std::size_t n = g.size();
    if (n == 0) return 1;
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(static_cast<long>(g[i][j]));
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            Rat f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det.get_num();
}

void check_unimodular(const IntMatrix& g) {
    check_square(g, static_cast<int>(g.size()));
    Int d = determinant(g);
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not invertible over the integers");
}

GroupElement perm_element(const std::string& id, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[perm[i]][i] = 1;
    return {id, m};
}

}  // namespace

IntMatrix identity_matrix(int n) {
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix c(n, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
}

Point apply(const IntMatrix& g, const Point& z) {
    Point r(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j) r[i] += g[i][j] * z[j];
    return r;
}

bool stabilizer_check(const LatticePolytope& p, const IntMatrix& g) {
    check_square(g, p.ambient_dim());
    check_unimodular(g);
    std::set<Point> vs(p.vertices().begin(), p.vertices().end()), img;
    for (const auto& v : p.vertices()) img.insert(apply(g, v));
    return img == vs;
}

void verify_group(const std::vector<GroupElement>& elements) {
    std::set<std::string> ids;
    std::set<IntMatrix> mats;
    for (const auto& e : elements) {
        check_unimodular(e.matrix);
        if (!ids.insert(e.id).second) throw std::invalid_argument("repeated element id " + e.id);
        mats.insert(e.matrix);
    }
    for (const auto& a : elements)
        for (const auto& b : elements)
            if (!mats.count(mat_mul(a.matrix, b.matrix)))
                throw std::invalid_argument("elements are not closed under products: " + a.id + "*" + b.id);
}

MultiPoly act(const IntMatrix& g, const MultiPoly& f) {
    const int n = f.nvars();
    check_square(g, n);
    // image of y_i is sum_j g_{ji} y_j
    std::vector<MultiPoly> img;
    for (int i = 0; i < n; ++i) {
        MultiPoly l(n);
        for (int j = 0; j < n; ++j)
            if (g[j][i]) l.add_term(MultiPoly::variable(n, j).leading_monomial(), Rat(static_cast<long>(g[j][i])));
        img.push_back(l);
    }
    MultiPoly out(n);
    for (const auto& [a, c] : f.terms()) {
        MultiPoly t = MultiPoly::constant(n, c);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < a[i]; ++k) t = t * img[i];
        out = out + t;
    }
    return out;
}

QPoly graded_character(const HarmonicBasis& hb, const IntMatrix& g) {
    std::vector<Rat> c;
    for (const auto& cell : hb.by_degree) {
        Rat tr = 0;
        const auto basis = cell.basis();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            auto coords = cell.coordinates(act(g, basis[k]));
            if (!coords) throw NotASymmetry("the matrix does not preserve the harmonic space");
            tr += (*coords)[k];
        }
        c.push_back(tr);
    }
    return QPoly(c);
}

QPoly graded_character(const LatticePolytope& p, const IntMatrix& g, int m) {
    if (!stabilizer_check(p, g)) throw NotASymmetry("the matrix does not map the polytope to itself");
    auto z = p.lattice_points(m);
    return graded_character(harmonic_basis(z), g);
}

GradedCharacter equivariant_series(const LatticePolytope& p, const std::vector<GroupElement>& elements, int T,
                                   int jobs) {
    for (const auto& e : elements)
        if (!stabilizer_check(p, e.matrix)) throw NotASymmetry("element " + e.id + " does not map the polytope to itself");
    GradedCharacter out;
    for (const auto& e : elements) out.ids.push_back(e.id);
    std::vector<std::vector<QPoly>> rows(static_cast<std::size_t>(T) + 1);
    detail::parallel_for(0, T, jobs, [&](int m) {
        auto hb = harmonic_basis(p.lattice_points(m));
        for (const auto& e : elements) rows[m].push_back(graded_character(hb, e.matrix));
    });
    for (std::size_t k = 0; k < elements.size(); ++k)
        for (int m = 0; m <= T; ++m) out.per_element[elements[k].id].push_back(rows[m][k]);
    return out;
}

long long fixed_points(const PointLocus& z, const IntMatrix& g) {
    return std::count_if(z.points.begin(), z.points.end(), [&](const Point& x) { return apply(g, x) == x; });
}

long CharacterTable::order() const {
    long s = 0;
    for (auto c : class_sizes) s += c;
    return s;
}

void CharacterTable::validate() const {
    const std::size_t k = classes.size();
    if (class_sizes.size() != k || irreps.size() != k || values.size() != k)
        throw std::invalid_argument("character table " + name + " is not square");
    for (const auto& r : values)
        if (r.size() != k) throw std::invalid_argument("character table " + name + " is not square");
    const Rat g(order());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Rat s = 0;
            for (std::size_t c = 0; c < k; ++c) s += Rat(class_sizes[c]) * values[i][c] * values[j][c];
            if (s != (i == j ? g : Rat(0))) throw std::invalid_argument("character table " + name + " rows are not orthonormal");
        }
}

CharacterTable table_z2() { return {"Z2", {"e", "s"}, {1, 1}, {"trivial", "eps"}, {{1, 1}, {1, -1}}}; }

CharacterTable table_s2() { return {"S2", {"e", "(12)"}, {1, 1}, {"trivial", "sign"}, {{1, 1}, {1, -1}}}; }

CharacterTable table_s3() {
    return {"S3",
            {"e", "(12)", "(123)"},
            {1, 3, 2},
            {"trivial", "sign", "standard"},
            {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}};
}

std::vector<GroupElement> negation_group(int n) {
    IntMatrix neg = identity_matrix(n);
    for (int i = 0; i < n; ++i) neg[i][i] = -1;
    return {{"e", identity_matrix(n)}, {"s", neg}};
}

std::vector<GroupElement> swap_group() { return {perm_element("e", {0, 1}), perm_element("(12)", {1, 0})}; }

std::vector<GroupElement> permutation_group_s3() {
    return {perm_element("e", {0, 1, 2}),     perm_element("(12)", {1, 0, 2}),  perm_element("(13)", {2, 1, 0}),
            perm_element("(23)", {0, 2, 1}),  perm_element("(123)", {1, 2, 0}), perm_element("(132)", {2, 0, 1})};
}

std::vector<GroupElement> sign_group(int n) {
    std::vector<GroupElement> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        IntMatrix m = identity_matrix(n);
        std::string id;
        for (int i = 0; i < n; ++i) {
            if (mask >> i & 1) m[i][i] = -1;
            id += (mask >> i & 1) ? '-' : '+';
        }
        out.push_back({id, m});
    }
    return out;
}

std::vector<QPoly> decompose(const std::vector<QPoly>& values, const CharacterTable& table) {
    table.validate();
    if (values.size() != table.classes.size()) throw std::invalid_argument("one character value per class expected");
    std::vector<QPoly> out;
    const Rat g(table.order());
    for (std::size_t i = 0; i < table.irreps.size(); ++i) {
        QPoly s;
        for (std::size_t c = 0; c < values.size(); ++c) s += values[c] * (Rat(table.class_sizes[c]) * table.values[i][c] / g);
        for (const auto& x : s.coeffs())
            if (!is_integer(x) || x < 0)
                throw NonIntegralMultiplicity("multiplicity of " + table.irreps[i] + " is " + s.to_string());
        out.push_back(s);
    }
    return out;
}

}  // namespace qeh
