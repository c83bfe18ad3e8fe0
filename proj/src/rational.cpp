#include "qehrhart/rational.hpp"

#include <stdexcept>

namespace qeh {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(Int(text));
    return make_rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

std::string to_string(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Int& x) { return x.get_str(); }

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Int lcm_denominators(const std::vector<Rat>& v) {
    Int l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

bool fits_ll(const Int& x) { return x.fits_slong_p(); }

}  // namespace qeh
