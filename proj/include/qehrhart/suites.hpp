#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qehrhart/io.hpp"

namespace qeh {

struct SuiteReport {
    std::string name;
    bool passed = true;
    long checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    void check(bool ok, const std::string& what);
    Json to_json() const;
};

struct SuiteConfig {
    std::uint64_t seed = 0;
    int trials = 200;
    int T = 8;
    int M = 3;
    std::vector<std::uint64_t> primes{2, 3, 5};
    int jobs = 1;
};

struct NamedPolytope {
    std::string name;
    LatticePolytope polytope;
};

// segments v<=3, unit square, Delta^1, Delta^2, the case-study triangle
std::vector<NamedPolytope> identity_corpus();
// pairs with dim(P x Q) <= 3 and dim(P * Q) <= 3 respectively
SuiteReport suite_identities(const std::vector<NamedPolytope>& ps, int T, int maxDilation = 3);

// random locus pairs in Z^2, |Z| <= 8, coordinates in [-3,3]
SuiteReport suite_closure(const SuiteConfig& cfg);
// random pairs over each prime, then the beta bound on arithmetic progressions
SuiteReport suite_modp(const SuiteConfig& cfg);
// all posets up to isomorphism on <= maxN elements at dilate M, plus the X-poset at M=2
SuiteReport suite_chainorder(int maxN, int M, bool withX = true);
SuiteReport suite_equivariant(int T);
// h* and Ehrhart polynomial consistency over every corpus polytope
SuiteReport suite_classical();

}  // namespace qeh
