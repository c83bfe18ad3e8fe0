#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qehrhart/harmonics.hpp"
#include "qehrhart/polytope.hpp"
#include "qehrhart/series.hpp"

namespace qeh {

using IntMatrix = std::vector<std::vector<long long>>;

struct GroupElement {
    std::string id;
    IntMatrix matrix;
};

class NotASymmetry : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonIntegralMultiplicity : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

IntMatrix identity_matrix(int n);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
Point apply(const IntMatrix& g, const Point& z);

// Throws std::invalid_argument unless g is square with determinant +-1.
bool stabilizer_check(const LatticePolytope& p, const IntMatrix& g);
// Throws std::invalid_argument if some product leaves the list or an id repeats.
void verify_group(const std::vector<GroupElement>& elements);

// f(y) -> f(g^T y); preserves V_Z whenever gZ = Z.
MultiPoly act(const IntMatrix& g, const MultiPoly& f);

QPoly graded_character(const HarmonicBasis& hb, const IntMatrix& g);
QPoly graded_character(const LatticePolytope& p, const IntMatrix& g, int m);

struct GradedCharacter {
    std::vector<std::string> ids;
    std::map<std::string, std::vector<QPoly>> per_element;  // index m
};
GradedCharacter equivariant_series(const LatticePolytope& p, const std::vector<GroupElement>& elements, int T,
                                   int jobs = 1);

long long fixed_points(const PointLocus& z, const IntMatrix& g);

// Real-valued character table; class representatives are element ids.
struct CharacterTable {
    std::string name;
    std::vector<std::string> classes;
    std::vector<long> class_sizes;
    std::vector<std::string> irreps;
    std::vector<std::vector<Rat>> values;  // [irrep][class]
    long order() const;
    void validate() const;  // square, orthogonal rows
};

CharacterTable table_z2();
CharacterTable table_s2();
CharacterTable table_s3();

// Matching groups for the built-in tables: -I on Z^n, and coordinate permutations.
std::vector<GroupElement> negation_group(int n);
std::vector<GroupElement> swap_group();                  // S2 on Z^2, ids "e", "(12)"
std::vector<GroupElement> permutation_group_s3();       // S3 on Z^3
std::vector<GroupElement> sign_group(int n);            // all diagonal +-1 matrices

// values[c] is the character at class c; returns per-irrep multiplicities.
std::vector<QPoly> decompose(const std::vector<QPoly>& values, const CharacterTable& table);

}  // namespace qeh
