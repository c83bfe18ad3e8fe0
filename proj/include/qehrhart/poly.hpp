#pragma once

#include <map>
#include <string>
#include <vector>

#include "qehrhart/rational.hpp"

namespace qeh {

using Exponent = std::vector<int>;

int total_degree(const Exponent& a);
// Graded lex with x1 > x2 > ... : degree first, then lexicographic on exponents.
bool grlex_less(const Exponent& a, const Exponent& b);
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const { return grlex_less(a, b); }
};
bool divides(const Exponent& a, const Exponent& b);
// Degree-d monomials in n variables, grlex ascending.
std::vector<Exponent> monomials_of_degree(int n, int d);
Int exponent_factorial(const Exponent& a);  // a! = prod a_i!

class MultiPoly {
public:
    using Terms = std::map<Exponent, Rat, GrlexLess>;
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : n_(nvars) {}
    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly monomial(const Exponent& a, const Rat& c = 1);
    static MultiPoly variable(int nvars, int i);

    int nvars() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for zero
    bool is_homogeneous() const;
    Rat coeff(const Exponent& a) const;
    void add_term(const Exponent& a, const Rat& c);
    const Exponent& leading_monomial() const;
    const Rat& leading_coeff() const;
    MultiPoly homogeneous_part(int d) const;
    MultiPoly top() const { return homogeneous_part(degree()); }
    Rat eval(const std::vector<long long>& z) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& s) const;
    MultiPoly operator-() const { return *this * Rat(-1); }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    MultiPoly monic() const;
    MultiPoly mul_monomial(const Exponent& a, const Rat& c = 1) const;

    // "x1^2*x2"-style printing, terms grlex-descending, coefficients "p/q".
    std::string to_string(char var = 'x') const;

private:
    void check(const MultiPoly& o) const;
    int n_ = 0;
    Terms terms_;
};

// Constant term of f(d/dy) applied to g: pairs x^a with y^b as a! if a == b.
Rat apolarity_pair(const MultiPoly& f, const MultiPoly& g);

// Parses "y1^2 + y1*y2 - 3/2*y2^2" style text in variables <var>1..<var>n.
MultiPoly parse_multipoly(const std::string& text, int nvars, char var = 'y');

}  // namespace qeh
