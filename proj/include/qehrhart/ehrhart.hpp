#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qehrhart/harmonics.hpp"
#include "qehrhart/polytope.hpp"
#include "qehrhart/series.hpp"

namespace qeh {

// Hilbert series of the harmonic space of Z^n cap mP (relative interior for the second).
QPoly iq(const LatticePolytope& p, int m, LocusCache* cache = nullptr);
QPoly iq_interior(const LatticePolytope& p, int m, LocusCache* cache = nullptr);

// Per-m work spreads over `jobs` threads; the result does not depend on it.
TQSeries series_E(const LatticePolytope& p, int T, int jobs = 1, LocusCache* cache = nullptr);
TQSeries series_Ebar(const LatticePolytope& p, int T, int jobs = 1, LocusCache* cache = nullptr);

// sum over m of sum over z in mP of q^{z_1+...+z_n} t^m
TQSeries weight_series_W(const LatticePolytope& p, int T);
TQSeries weight_series_Wbar(const LatticePolytope& p, int T);

class NotASimplex : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SimplexNumerators {
    BiPoly num;      // over the half-open parallelepiped
    BiPoly num_bar;  // over the opposite one
    std::vector<std::pair<int, int>> den;  // (1, |v|) per vertex, sorted
    RatFun2 W() const { return RatFun2(num, den); }
    RatFun2 Wbar() const { return RatFun2(num_bar, den); }
};
SimplexNumerators simplex_numerators(const LatticePolytope& p);

SearchBounds default_bounds(const LatticePolytope& p);
std::optional<RatFun2> guess_series(const TQSeries& s, const SearchBounds& bounds);

struct Verification {
    enum class Level { None, Truncation, Generated };
    Level level = Level::None;
    int T = 0;
    int m0 = 0;
    std::string to_string() const;
};

struct QEhrhartRecord {
    std::string polytope;
    std::vector<Point> vertices;
    int T = 0;
    std::vector<QPoly> iq;
    std::vector<QPoly> iq_interior;  // index m; entry 0 is zero
    std::optional<RatFun2> guessed_E;
    std::optional<RatFun2> guessed_Ebar;
    Verification verification;
};

QEhrhartRecord compute_record(const LatticePolytope& p, int T, int jobs = 1, LocusCache* cache = nullptr);
// Fills both guesses from the record's series; level becomes truncation(T) when E was found.
void guess(QEhrhartRecord& rec, const SearchBounds& bounds);
QEhrhartRecord guess(const LatticePolytope& p, int T, const SearchBounds& bounds, int jobs = 1,
                     LocusCache* cache = nullptr);

// q^d Ebar(t,q) == (-1)^{d+1} E(1/t,1/q) as rational functions.
bool reciprocity_check(const RatFun2& E, const RatFun2& Ebar, int d);
// q^qShift Fbar(t,q) == (-1)^{d+1} F(1/t,1/q); Laurent exponents allowed.
bool reciprocal_pair(const RatFun2& F, const RatFun2& Fbar, int d, int qShift);

bool check_dilation(const LatticePolytope& p, int d, int T, LocusCache* cache = nullptr);
bool check_product(const LatticePolytope& p, const LatticePolytope& q, int T, LocusCache* cache = nullptr);
bool check_join(const LatticePolytope& p, const LatticePolytope& q, int T, LocusCache* cache = nullptr);

struct HStar {
    std::vector<Int> h;
    Int normalized_volume() const;
};

struct ClassicalReport {
    HStar hstar;
    std::vector<Int> counts;          // i_P(m), m = 0..d+3
    std::vector<Rat> ehrhart_poly;    // coefficients in m, ascending
    std::string report;
};

class EnumerationInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Throws EnumerationInconsistency when counts, h*, and q=1 series disagree.
ClassicalReport classical_check(const LatticePolytope& p, LocusCache* cache = nullptr);

}  // namespace qeh
