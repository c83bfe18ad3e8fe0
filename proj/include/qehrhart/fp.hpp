#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qeh {

// Arithmetic modulo a prime p < 2^62.
struct Modulus {
    std::uint64_t p = 2;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        auto q = static_cast<std::uint64_t>(static_cast<long double>(a) * b / p);
        auto r = static_cast<std::int64_t>(a * b - q * p);
        auto sp = static_cast<std::int64_t>(p);
        while (r < 0) r += sp;
        while (r >= sp) r -= sp;
        return static_cast<std::uint64_t>(r);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t reduce(long long x) const {
        long long r = x % static_cast<long long>(p);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
    }
};

bool is_prime(std::uint64_t n);

// The `count` largest primes below 2^62, descending; deterministic.
const std::vector<std::uint64_t>& word_primes(std::size_t count);

// Field element carrying its modulus, for the generic linear algebra.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}
    static Fp from_ll(long long x, std::uint64_t p) { return Fp(Modulus{p}.reduce(x), p); }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const { return Fp(m(o).add(v_, o.v_), p_, 0); }
    Fp operator-(const Fp& o) const { return Fp(m(o).sub(v_, o.v_), p_, 0); }
    Fp operator*(const Fp& o) const { return Fp(m(o).mul(v_, o.v_), p_, 0); }
    Fp operator/(const Fp& o) const { return Fp(m(o).mul(v_, m(o).inv(o.v_)), p_, 0); }
    Fp operator-() const { return Fp(Modulus{p_}.neg(v_), p_, 0); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    Fp(std::uint64_t v, std::uint64_t p, int) : v_(v), p_(p) {}
    Modulus m(const Fp& o) const {
        if (o.p_ != p_) throw std::invalid_argument("modulus mismatch");
        return Modulus{p_};
    }
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 2;
};

// binom(n, k) mod p by Lucas's theorem.
std::uint64_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p);

}  // namespace qeh
