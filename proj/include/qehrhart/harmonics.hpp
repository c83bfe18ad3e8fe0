#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qehrhart/polytope.hpp"
#include "qehrhart/poly.hpp"
#include "qehrhart/series.hpp"

namespace qeh {

// Which polynomial basis the evaluation rows use. Binomial uses
// b_a(x) = prod C(x_i - l_i, a_i) with l_i the minimum coordinate; its grlex-initial
// spans coincide with monomial spans, so the standard monomials are the same.
enum class EvalBasis { Monomial, Binomial };

// Raw output of the incremental elimination over Q.
struct BMResult {
    int nvars = 0;
    EvalBasis basis = EvalBasis::Monomial;
    std::vector<Exponent> standard;  // grlex ascending
    std::vector<Exponent> leading;   // minimal leading terms found, grlex ascending
    // relation[k][j]: coefficient of basis element standard[j]; the function
    // basis_{leading[k]} + sum_j relation[k][j] * basis_{standard[j]} vanishes on Z.
    std::vector<std::vector<Rat>> relation;
};

// Full: every minimal leading term. Harmonic: stop after the last degree holding a
// standard monomial. Standard: stop as soon as all standard monomials are known
// (no relations recorded).
enum class BMStop { Full, Harmonic, Standard };

BMResult bm_exact(const PointLocus& z, EvalBasis basis, BMStop stop = BMStop::Full);

struct GBasis {
    int nvars = 0;
    std::vector<MultiPoly> generators;  // reduced, monic, sorted by leading monomial
    std::vector<Exponent> standard;
};

GBasis buchberger_moeller(const PointLocus& z);
GBasis gr_ideal(const PointLocus& z);
std::vector<MultiPoly> gr_component(const PointLocus& z, int d);

// Reduced grlex Groebner basis by S-pair completion; intended for small inputs.
GBasis buchberger(const std::vector<MultiPoly>& gens);
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& gb);
std::vector<MultiPoly> product_gens_oracle(const PointLocus& z);

// Subspace of degree-d homogeneous polynomials kept in reduced echelon form,
// coordinates ordered grlex-descending, pivots 1.
class HomSpace {
public:
    HomSpace() = default;
    HomSpace(int nvars, int degree);

    int nvars() const { return n_; }
    int degree() const { return d_; }
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_dim() const { return mons_.size(); }
    const std::vector<Exponent>& monomials() const { return mons_; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

    std::vector<Rat> to_vector(const MultiPoly& f) const;
    MultiPoly to_poly(const std::vector<Rat>& v) const;
    bool add(const MultiPoly& f);  // true if the dimension grew
    bool add_vector(std::vector<Rat> v);
    bool contains(const MultiPoly& f) const;
    // Coordinates w.r.t. the echelon rows, or nullopt if f is outside.
    std::optional<std::vector<Rat>> coordinates(const MultiPoly& f) const;
    std::vector<MultiPoly> basis() const;
    bool operator==(const HomSpace& o) const { return n_ == o.n_ && d_ == o.d_ && rows_ == o.rows_; }
    bool operator!=(const HomSpace& o) const { return !(*this == o); }

private:
    std::vector<Rat> residual(std::vector<Rat> v) const;
    int n_ = 0;
    int d_ = 0;
    std::vector<Exponent> mons_;
    std::map<Exponent, std::size_t> index_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> piv_;
};

struct HarmonicBasis {
    int nvars = 0;
    std::vector<HomSpace> by_degree;  // index = degree

    std::size_t size() const;
    QPoly hilbert() const;
    int max_degree() const { return static_cast<int>(by_degree.size()) - 1; }
    bool contains(const MultiPoly& f) const;  // f homogeneous
    bool operator==(const HarmonicBasis& o) const { return nvars == o.nvars && by_degree == o.by_degree; }
};

HarmonicBasis harmonic_basis(const PointLocus& z);

struct ClosureResult {
    bool holds = true;
    bool proper = false;
    std::optional<MultiPoly> witness;
};
ClosureResult closure_check(const PointLocus& z, const PointLocus& z2);

// ---- modular Hilbert functions ----

struct BMModp {
    std::uint64_t p = 0;
    std::vector<Exponent> standard;
    std::vector<Exponent> leading;
    std::vector<std::vector<std::uint64_t>> relation;  // monomial basis, same convention as BMResult
};

// Monomial-basis elimination over F_p. Points must stay distinct mod p.
BMModp bm_modp(const PointLocus& z, std::uint64_t p, BMStop stop);

std::vector<Exponent> standard_monomials(const PointLocus& z);
QPoly hilbert_from_standard(const std::vector<Exponent>& standard);

enum class HilbertMethod { Exact, Modular, Auto };
inline constexpr std::size_t kExactHilbertLimit = 400;

// Memo of Hilbert series per locus; safe to share between threads.
class LocusCache {
public:
    std::optional<QPoly> find(const PointLocus& z) const;
    void store(const PointLocus& z, const QPoly& h);
    std::size_t size() const;

private:
    mutable std::mutex mu_;
    std::map<std::pair<int, std::vector<Point>>, QPoly> memo_;
};

QPoly hilbert_series(const PointLocus& z, HilbertMethod method = HilbertMethod::Auto, LocusCache* cache = nullptr);

std::string dump(const GBasis& g);
std::string dump(const HarmonicBasis& h);

}  // namespace qeh
