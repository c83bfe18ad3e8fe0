#include "qehrhart/halgebra.hpp"

#include <algorithm>
#include <cstdint>

namespace qeh {

namespace {

HarmonicBasis basis_of(const PointLocus& z) {
    if (z.empty()) {
        HarmonicBasis hb;
        hb.nvars = z.dim;
        return hb;
    }
    return harmonic_basis(z);
}

std::vector<std::size_t> dims_of(const std::vector<HomSpace>& cells) {
    std::vector<std::size_t> d;
    for (const auto& c : cells) d.push_back(c.dim());
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

int top_of(const std::vector<std::size_t>& d) {
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
        if (d[static_cast<std::size_t>(i)]) return i;
    return -1;
}

void ensure_cells(std::vector<HomSpace>& cells, int n, int deg) {
    while (static_cast<int>(cells.size()) <= deg) cells.emplace_back(n, static_cast<int>(cells.size()));
}

// cells += span{f g : f in a, g in b}; stops early once every cell reaches `cap`.
void add_products(std::vector<HomSpace>& cells, int n, const std::vector<HomSpace>& a, const std::vector<HomSpace>& b,
                  const std::vector<std::size_t>* cap) {
    auto full = [&] {
        if (!cap) return false;
        for (std::size_t d = 0; d < cap->size(); ++d)
            if ((d < cells.size() ? cells[d].dim() : 0) < (*cap)[d]) return false;
        return true;
    };
    if (full()) return;
    for (const auto& sa : a)
        for (const auto& sb : b) {
            const int deg = sa.degree() + sb.degree();
            const std::size_t limit = cap && deg < static_cast<int>(cap->size()) ? (*cap)[deg] : SIZE_MAX;
            if (static_cast<int>(cells.size()) > deg && cells[deg].dim() >= limit) continue;
            ensure_cells(cells, n, deg);
            for (const auto& f : sa.basis()) {
                if (cells[deg].dim() >= limit) break;
                for (const auto& g : sb.basis()) {
                    cells[deg].add(f * g);
                    if (cells[deg].dim() >= limit) break;
                }
            }
            if (full()) return;
        }
}

std::vector<HomSpace> cells_of(const HarmonicBasis& hb) { return hb.by_degree; }

}  // namespace

HComponent component(const LatticePolytope& p, int m) {
    if (m < 0) throw std::invalid_argument("component needs m >= 0");
    return HComponent{m, basis_of(p.lattice_points(m))};
}

HComponent interior_component(const LatticePolytope& p, int m) {
    if (m < 1) throw std::invalid_argument("interior component needs m >= 1");
    return HComponent{m, basis_of(p.interior_lattice_points(m))};
}

int ProductSpan::top_q_degree() const { return top_of(dims); }
int ProductSpan::target_top_q_degree() const { return top_of(target_dims); }

ProductSpan product_span(const LatticePolytope& p, int m, int m2) {
    auto a = component(p, m), b = component(p, m2), target = component(p, m + m2);
    const int n = p.ambient_dim();
    std::vector<HomSpace> cells;
    for (const auto& sa : a.basis.by_degree)
        for (const auto& sb : b.basis.by_degree)
            for (const auto& f : sa.basis())
                for (const auto& g : sb.basis()) {
                    MultiPoly h = f * g;
                    if (!target.basis.contains(h))
                        throw ClosureViolation("product leaves component " + std::to_string(m + m2) + ": " + h.to_string('y'),
                                               h);
                    const int deg = sa.degree() + sb.degree();
                    ensure_cells(cells, n, deg);
                    cells[deg].add(h);
                }
    ProductSpan r;
    r.dims = dims_of(cells);
    r.target_dims = dims_of(target.basis.by_degree);
    r.equals = r.dims == r.target_dims;
    return r;
}

bool GenerationReport::fully_generated() const {
    return std::all_of(status.begin(), status.end(), [](bool b) { return b; });
}

std::optional<std::pair<int, int>> GenerationReport::first_deficiency() const {
    for (std::size_t m = 0; m < missing.size(); ++m)
        for (std::size_t d = 0; d < missing[m].size(); ++d)
            if (missing[m][d] > 0) return std::make_pair(static_cast<int>(m), static_cast<int>(d));
    return std::nullopt;
}

GenerationReport generation_check(const LatticePolytope& p, int m0, int T) {
    if (m0 < 0 || m0 > T) throw std::invalid_argument("generation_check needs 0 <= m0 <= T");
    const int n = p.ambient_dim();
    GenerationReport rep;
    rep.m0 = m0;
    rep.T = T;
    std::vector<std::vector<HomSpace>> comp(static_cast<std::size_t>(T) + 1), gen(static_cast<std::size_t>(T) + 1);
    for (int m = 0; m <= T; ++m) comp[m] = cells_of(component(p, m).basis);
    for (int m = 0; m <= T; ++m) {
        if (m <= m0) {
            gen[m] = comp[m];
        } else {
            auto cap = dims_of(comp[m]);
            // a product of generators has a first factor of t-degree <= m0
            for (int i = 1; i <= std::min(m0, m - 1); ++i) add_products(gen[m], n, comp[i], gen[m - i], &cap);
        }
        std::vector<long> miss;
        for (std::size_t d = 0; d < comp[m].size(); ++d) {
            const long have = d < gen[m].size() ? static_cast<long>(gen[m][d].dim()) : 0;
            miss.push_back(static_cast<long>(comp[m][d].dim()) - have);
        }
        for (std::size_t d = 0; d < gen[m].size(); ++d)
            for (const auto& f : gen[m][d].basis())
                if (d >= comp[m].size() || !comp[m][d].contains(f))
                    throw ClosureViolation("generated element outside component " + std::to_string(m), f);
        rep.status.push_back(std::all_of(miss.begin(), miss.end(), [](long x) { return x == 0; }));
        rep.missing.push_back(std::move(miss));
    }
    return rep;
}

TQSeries subalgebra_hilbert(const std::vector<std::pair<int, MultiPoly>>& gens, int nvars, int T) {
    if (T < 0) throw std::invalid_argument("negative truncation order");
    for (const auto& [m, f] : gens) {
        if (m < 0) throw std::invalid_argument("negative generator t-degree");
        if (f.nvars() != nvars) throw std::invalid_argument("generator has the wrong number of variables");
        if (!f.is_homogeneous()) throw std::invalid_argument("generators must be homogeneous in y");
    }
    std::vector<std::vector<HomSpace>> span(static_cast<std::size_t>(T) + 1);
    ensure_cells(span[0], nvars, 0);
    span[0][0].add(MultiPoly::constant(nvars, 1));
    for (int m = 0; m <= T; ++m) {
        for (const auto& [k, f] : gens) {
            if (k != m || f.is_zero()) continue;
            ensure_cells(span[m], nvars, f.degree());
            span[m][f.degree()].add(f);
        }
        if (m == 0) continue;
        for (const auto& [k, f] : gens) {
            if (k < 1 || k > m || f.is_zero()) continue;
            for (const auto& cell : span[m - k])
                for (const auto& g : cell.basis()) {
                    MultiPoly h = f * g;
                    ensure_cells(span[m], nvars, h.degree());
                    span[m][h.degree()].add(h);
                }
        }
    }
    TQSeries s(T);
    for (int m = 0; m <= T; ++m) {
        std::vector<Rat> c;
        for (const auto& cell : span[m]) c.emplace_back(static_cast<long>(cell.dim()));
        s[m] = QPoly(c);
    }
    return s;
}

TQSeries subalgebra_hilbert(const LatticePolytope& p, const std::vector<std::pair<int, MultiPoly>>& gens, int T) {
    for (const auto& [m, f] : gens) {
        if (m < 0) throw std::invalid_argument("negative generator t-degree");
        if (!component(p, m).basis.contains(f))
            throw NotInComponent("generator " + f.to_string('y') + " is not in component " + std::to_string(m));
    }
    return subalgebra_hilbert(gens, p.ambient_dim(), T);
}

bool chain_order_equality(const Poset& poset, int M) {
    if (M < 1) throw std::invalid_argument("chain_order_equality needs M >= 1");
    auto o = order_polytope(poset), c = chain_polytope(poset);
    for (int m = 0; m <= M; ++m) {
        if (!(component(o, m).basis == component(c, m).basis)) return false;
        if (m >= 1 && !(interior_component(o, m).basis == interior_component(c, m).basis)) return false;
    }
    return true;
}

}  // namespace qeh
