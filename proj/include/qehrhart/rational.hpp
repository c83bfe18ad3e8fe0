#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace qeh {

using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);
Rat parse_rat(const std::string& text);

// Reduced fraction, always with an explicit denominator: "p/q".
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

bool is_integer(const Rat& x);
Int lcm_denominators(const std::vector<Rat>& v);

Int factorial(unsigned n);
Int binomial(long n, long k);

inline long long to_ll(const Int& x) { return x.get_si(); }
bool fits_ll(const Int& x);

}  // namespace qeh
