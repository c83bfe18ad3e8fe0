#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qehrhart/rational.hpp"

namespace qeh {

// Polynomial in q; coefficient vector indexed by exponent, trailing zeros trimmed.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    static QPoly constant(const Rat& c) { return QPoly(std::vector<Rat>{c}); }
    static QPoly monomial(int exponent, const Rat& c = 1);
    static QPoly q_int(int n);  // [n]_q = 1 + q + ... + q^{n-1}
    static QPoly from_ints(const std::vector<long long>& coeffs);

    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int e) const { return e >= 0 && e < static_cast<int>(c_.size()) ? c_[e] : Rat(0); }
    Rat eval(const Rat& q) const;
    Rat at_one() const;
    bool has_integer_coeffs() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& s) const;
    QPoly operator-() const { return *this * Rat(-1); }
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Truncated power series in t with QPoly coefficients t^0..t^T.
struct TQSeries {
    int T = 0;
    std::vector<QPoly> c;

    TQSeries() : c(1) {}
    explicit TQSeries(int order) : T(order), c(static_cast<std::size_t>(order) + 1) {}

    const QPoly& operator[](int m) const { return c.at(static_cast<std::size_t>(m)); }
    QPoly& operator[](int m) { return c.at(static_cast<std::size_t>(m)); }
    TQSeries truncate(int order) const;
    std::vector<Rat> at_q_one() const;
    bool operator==(const TQSeries& o) const { return T == o.T && c == o.c; }
    bool operator!=(const TQSeries& o) const { return !(*this == o); }
};

TQSeries operator+(const TQSeries& a, const TQSeries& b);
TQSeries operator-(const TQSeries& a, const TQSeries& b);
TQSeries operator*(const TQSeries& a, const TQSeries& b);
TQSeries hadamard(const TQSeries& a, const TQSeries& b);

// Laurent polynomial in (t, q) with integer coefficients; key = (t exponent, q exponent).
class BiPoly {
public:
    using Key = std::pair<int, int>;
    BiPoly() = default;
    static BiPoly constant(const Int& c);
    static BiPoly term(int te, int qe, const Int& c = 1);

    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(int te, int qe) const;
    void add_term(int te, int qe, const Int& c);
    int t_degree() const;   // max t exponent, -1 if zero
    int t_min() const;
    int q_min() const;
    int q_max() const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Int& s) const;
    BiPoly operator-() const { return *this * Int(-1); }
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly inverted() const;                  // f(1/t, 1/q)
    BiPoly shifted(int te, int qe) const;     // t^te q^qe f
    BiPoly truncated_t(int maxT) const;       // drop t exponents > maxT
    std::map<int, Int> at_q_one() const;      // t exponent -> value at q=1
    std::string to_string() const;

private:
    std::map<Key, Int> terms_;
};

// N(t,q) / prod (1 - q^a t^b); factors stored as (b, a), kept sorted.
struct RatFun2 {
    BiPoly num;
    std::vector<std::pair<int, int>> den;

    RatFun2() = default;
    RatFun2(BiPoly n, std::vector<std::pair<int, int>> d);
    int nu() const { return static_cast<int>(den.size()); }
    int sum_b() const;
    int sum_a() const;
    BiPoly den_poly() const;
    std::string to_string() const;
};

class InsufficientTruncation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

TQSeries expand(const RatFun2& r, int T);
TQSeries expand(const BiPoly& p, int T);

// Exact identity N1*D2 == N2*D1.
bool same_function(const RatFun2& x, const RatFun2& y);

std::optional<BiPoly> fit_numerator(const TQSeries& s, const std::vector<std::pair<int, int>>& den, int tDegMax);

struct SearchBounds {
    int bMax = 4;
    int aMax = 8;
    int nuMax = 4;
    std::optional<int> tDegMax;  // absolute cap; otherwise sum(b) + tDegSlack
    int tDegSlack = 4;
};

// All denominators within bounds admitting a polynomial numerator; sorted by
// (nu, sum of a+b, lexicographic sorted (b,a) list).
std::vector<RatFun2> denominator_search(const TQSeries& s, const SearchBounds& bounds);
std::vector<RatFun2> denominator_search(const TQSeries& s, int bMax, int aMax, int nuMax, int tDegMax);

// Parsing of printed forms such as "(1+qt)(1+qt+q^2t^2)/((1-t)(1-q^2t)(1-q^3t^2))".
BiPoly parse_bipoly(const std::string& text);
RatFun2 parse_ratfun(const std::string& text);

}  // namespace qeh
