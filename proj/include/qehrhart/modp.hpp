#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qehrhart/polytope.hpp"
#include "qehrhart/poly.hpp"

namespace qeh {

// sum c_a y^(a) over F_p with y^(a) y^(b) = prod C(a_i+b_i, a_i) y^(a+b).
class DividedPoly {
public:
    using Terms = std::map<Exponent, std::uint64_t, GrlexLess>;
    DividedPoly() = default;
    DividedPoly(std::uint64_t p, int nvars) : p_(p), n_(nvars) {}
    static DividedPoly monomial(std::uint64_t p, const Exponent& a, std::uint64_t c = 1);
    static DividedPoly constant(std::uint64_t p, int nvars, std::uint64_t c);

    std::uint64_t modulus() const { return p_; }
    int nvars() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    bool is_homogeneous() const;
    std::uint64_t coeff(const Exponent& a) const;
    void add_term(const Exponent& a, std::uint64_t c);

    DividedPoly operator+(const DividedPoly& o) const;
    DividedPoly operator*(std::uint64_t s) const;
    bool operator==(const DividedPoly& o) const { return p_ == o.p_ && n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const DividedPoly& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    std::uint64_t p_ = 2;
    int n_ = 0;
    Terms terms_;
};

DividedPoly divided_mul(const DividedPoly& f, const DividedPoly& g);
// Divided power l^(d) of a linear form l = sum c_i y_i: sum over |a| = d of c^a y^(a).
DividedPoly divided_power_linear(std::uint64_t p, const std::vector<std::uint64_t>& c, int d);

// Reduce coordinates into [0, p); throws std::domain_error if two points collide.
PointLocus reduce_locus(const PointLocus& z, std::uint64_t p);
// Sumset taken in F_p^n (coordinates reduced, duplicates merged).
PointLocus sumset_modp(const PointLocus& a, const PointLocus& b, std::uint64_t p);

// Degree-d subspace of divided polynomials in reduced echelon form (grlex-descending coordinates).
class FpSpace {
public:
    FpSpace() = default;
    FpSpace(std::uint64_t p, int nvars, int degree);
    std::size_t dim() const { return rows_.size(); }
    int degree() const { return d_; }
    bool add(const DividedPoly& f);
    bool contains(const DividedPoly& f) const;
    std::vector<DividedPoly> basis() const;

private:
    std::vector<std::uint64_t> to_vector(const DividedPoly& f) const;
    std::vector<std::uint64_t> residual(std::vector<std::uint64_t> v) const;
    std::uint64_t p_ = 2;
    int n_ = 0;
    int d_ = 0;
    std::vector<Exponent> mons_;
    std::map<Exponent, std::size_t> index_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> piv_;
};

struct ModpHarmonicBasis {
    std::uint64_t p = 2;
    int nvars = 0;
    std::vector<FpSpace> by_degree;
    std::size_t size() const;
    std::vector<std::size_t> dims() const;
    bool contains(const DividedPoly& f) const;
};

ModpHarmonicBasis harmonic_basis_modp(const PointLocus& z, std::uint64_t p);

struct ModpClosureResult {
    bool holds = true;
    std::optional<DividedPoly> witness;
};
ModpClosureResult closure_check_modp(const PointLocus& z, const PointLocus& z2, std::uint64_t p);

// Smallest n such that every k in [0, n] with C(n, k) nonzero in characteristic p
// has k >= r or n - k >= r2; p = 0 means characteristic zero.
long beta_bound(long r, long r2, std::uint64_t p);

}  // namespace qeh
