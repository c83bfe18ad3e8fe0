#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qehrhart/harmonics.hpp"
#include "qehrhart/polytope.hpp"
#include "qehrhart/series.hpp"

namespace qeh {

// t-degree m piece of the harmonic algebra; the y0^m tag is implicit.
struct HComponent {
    int m = 0;
    HarmonicBasis basis;
    QPoly hilbert() const { return basis.hilbert(); }
};

HComponent component(const LatticePolytope& p, int m);
// Interior harmonic space of mP; empty basis when mP has no interior lattice points.
HComponent interior_component(const LatticePolytope& p, int m);

class ClosureViolation : public std::logic_error {
public:
    ClosureViolation(const std::string& what, MultiPoly w) : std::logic_error(what), witness(std::move(w)) {}
    MultiPoly witness;
};

struct ProductSpan {
    std::vector<std::size_t> dims;         // per q-degree
    std::vector<std::size_t> target_dims;  // component(m + m2)
    bool contained = true;
    bool equals = false;
    int top_q_degree() const;
    int target_top_q_degree() const;
};

// Throws ClosureViolation if a product leaves component(m + m2).
ProductSpan product_span(const LatticePolytope& p, int m, int m2);

struct GenerationReport {
    int m0 = 0;
    int T = 0;
    std::vector<bool> status;                      // index m
    std::vector<std::vector<long>> missing;        // [m][q-degree] = target dim - generated dim
    bool fully_generated() const;
    // First (m, q-degree) with a deficiency.
    std::optional<std::pair<int, int>> first_deficiency() const;
};

// Subalgebra generated by components of t-degree <= m0, compared with every component up to T.
GenerationReport generation_check(const LatticePolytope& p, int m0, int T);

class NotInComponent : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Generators are (t-degree, y-homogeneous polynomial). The version taking P validates them first.
TQSeries subalgebra_hilbert(const std::vector<std::pair<int, MultiPoly>>& gens, int nvars, int T);
TQSeries subalgebra_hilbert(const LatticePolytope& p, const std::vector<std::pair<int, MultiPoly>>& gens, int T);

// Harmonic and interior harmonic spaces of the order and chain polytopes agree for m <= M.
bool chain_order_equality(const Poset& poset, int M);

}  // namespace qeh
