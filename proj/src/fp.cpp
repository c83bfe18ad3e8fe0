#include "qehrhart/fp.hpp"

#include <mutex>

namespace qeh {

std::uint64_t Modulus::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Modulus::inv(std::uint64_t a) const {
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    return pow(a, p - 2);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

const std::vector<std::uint64_t>& word_primes(std::size_t count) {
    static std::mutex mu;
    static std::vector<std::uint64_t> primes;
    std::lock_guard<std::mutex> lock(mu);
    std::uint64_t c = primes.empty() ? (1ull << 62) - 1 : primes.back() - 2;
    while (primes.size() < count) {
        if (is_prime(c)) primes.push_back(c);
        c -= 2;
    }
    return primes;
}

std::uint64_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    if (k > n) return 0;
    Modulus md{p};
    std::uint64_t r = 1 % p;
    while (n || k) {
        std::uint64_t ni = n % p, ki = k % p;
        if (ki > ni) return 0;
        // small binomial binom(ni, ki) mod p with ni < p
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < ki; ++i) {
            num = md.mul(num, (ni - i) % p);
            den = md.mul(den, (i + 1) % p);
        }
        r = md.mul(r, md.mul(num, md.inv(den)));
        n /= p;
        k /= p;
    }
    return r;
}

}  // namespace qeh
