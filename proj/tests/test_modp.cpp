#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qehrhart/fp.hpp"
#include "qehrhart/harmonics.hpp"
#include "qehrhart/modp.hpp"

using namespace qeh;

namespace {

const std::uint64_t kBig = word_primes(1)[0];

DividedPoly random_linear(std::mt19937_64& rng, std::uint64_t p, int n, std::vector<std::uint64_t>& c) {
    c.assign(n, 0);
    for (auto& x : c) x = rng() % p;
    return divided_power_linear(p, c, 1);
}

// span of an FpSpace as vectors over monomials_of_degree(n, d)
std::vector<std::vector<std::uint64_t>> as_rows(const FpSpace& sp, int n, std::uint64_t p) {
    auto mons = monomials_of_degree(n, sp.degree());
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& f : sp.basis()) {
        std::vector<std::uint64_t> v;
        for (const auto& m : mons) v.push_back(f.coeff(m));
        rows.push_back(v);
    }
    (void)p;
    return rows;
}

}  // namespace

TEST_CASE("divided multiplication") {
    auto y1 = DividedPoly::monomial(5, {1, 0});
    auto y1sq = divided_mul(y1, y1);
    CHECK(y1sq == DividedPoly::monomial(5, {2, 0}, 2));
    // y^(2) * y^(3) = C(5,2) y^(5) = 10 y^(5) = 0 mod 5
    CHECK(divided_mul(DividedPoly::monomial(5, {2}), DividedPoly::monomial(5, {3})).is_zero());
    CHECK(divided_mul(DividedPoly::monomial(7, {2}), DividedPoly::monomial(7, {3})) == DividedPoly::monomial(7, {5}, 3));
    // y1^(1) y1^(1) = 2 y1^(2) = 0 in characteristic 2
    CHECK(divided_mul(DividedPoly::monomial(2, {1}), DividedPoly::monomial(2, {1})).is_zero());
    CHECK_THROWS_AS(divided_mul(DividedPoly::monomial(3, {1}), DividedPoly::monomial(5, {1})), std::invalid_argument);
    CHECK_THROWS_AS(DividedPoly::monomial(3, {1}) + DividedPoly::monomial(5, {1}), std::invalid_argument);
    CHECK(DividedPoly::monomial(3, {1, 2}, 2).to_string() == "2*y^(1,2)");
}

TEST_CASE("beginner's binomial theorem for divided powers") {
    std::mt19937_64 rng(71);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 1000003ull}) {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 3);
            std::vector<std::uint64_t> a, b, s(n);
            random_linear(rng, p, n, a);
            random_linear(rng, p, n, b);
            for (int i = 0; i < n; ++i) s[i] = (a[i] + b[i]) % p;
            for (int d = 0; d <= 6; ++d) {
                DividedPoly rhs(p, n);
                for (int i = 0; i <= d; ++i)
                    rhs = rhs + divided_mul(divided_power_linear(p, a, i), divided_power_linear(p, b, d - i));
                CHECK(divided_power_linear(p, s, d) == rhs);
            }
        }
    }
}

TEST_CASE("two points in F_2") {
    auto hb = harmonic_basis_modp(PointLocus(1, {{0}, {1}}), 2);
    REQUIRE(hb.dims() == std::vector<std::size_t>{1, 1});
    CHECK(hb.by_degree[0].basis()[0] == DividedPoly::constant(2, 1, 1));
    CHECK(hb.by_degree[1].basis()[0] == DividedPoly::monomial(2, {1}));
    CHECK_THROWS_AS(harmonic_basis_modp(PointLocus(1, {{0}, {2}}), 2), std::domain_error);
    CHECK_THROWS_AS(harmonic_basis_modp(PointLocus(1, {{0}}), 4), std::invalid_argument);
}

TEST_CASE("harmonics mod p agree with the defining annihilator") {
    std::mt19937_64 rng(72);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        for (int trial = 0; trial < 25; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 2);
            std::vector<Point> pts;
            const std::size_t k = 1 + rng() % std::min<std::uint64_t>(8, p * p);
            for (std::size_t i = 0; i < k; ++i) {
                Point x(n);
                for (auto& c : x) c = static_cast<long long>(rng() % p);
                pts.push_back(x);
            }
            PointLocus z(n, pts);
            auto hb = harmonic_basis_modp(z, p);
            CHECK(hb.size() == z.size());
            for (int d = 0; d < static_cast<int>(hb.by_degree.size()) + 1; ++d) {
                auto want = oracle::harmonics_modp(z, p, d);
                std::vector<std::vector<std::uint64_t>> got;
                if (d < static_cast<int>(hb.by_degree.size())) got = as_rows(hb.by_degree[d], n, p);
                REQUIRE(got.size() == want.size());
                oracle::rref_modp(want, p);
                oracle::rref_modp(got, p);
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("large characteristic matches characteristic zero") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        auto z = oracle::random_locus(rng, n, 9, 3);
        auto exact = harmonic_basis(z);
        auto hb = harmonic_basis_modp(z, kBig);
        REQUIRE(hb.by_degree.size() == exact.by_degree.size());
        const Modulus M{kBig};
        for (std::size_t d = 0; d < hb.by_degree.size(); ++d) {
            REQUIRE(hb.by_degree[d].dim() == exact.by_degree[d].basis().size());
            // y^a = a! y^(a)
            for (const auto& f : exact.by_degree[d].basis()) {
                DividedPoly g(kBig, n);
                for (const auto& [a, c] : f.terms()) {
                    Int num = c.get_num() * exponent_factorial(a), den = c.get_den();
                    std::uint64_t nm = mpz_fdiv_ui(num.get_mpz_t(), kBig), dn = mpz_fdiv_ui(den.get_mpz_t(), kBig);
                    if (num < 0) nm = M.neg(mpz_fdiv_ui(Int(-num).get_mpz_t(), kBig));
                    g.add_term(a, M.mul(nm, M.inv(dn)));
                }
                CHECK(hb.by_degree[d].contains(g));
            }
        }
    }
}

TEST_CASE("beta bound") {
    for (long r = 1; r <= 6; ++r)
        for (long s = 1; s <= 6; ++s) CHECK(beta_bound(r, s, 0) == r + s - 1);
    CHECK(beta_bound(2, 2, 2) == 2);
    CHECK(beta_bound(1, 1, 3) == 1);
    CHECK(beta_bound(3, 3, 5) == 5);
    CHECK(beta_bound(3, 3, 3) == 3);
    // never above the Cauchy-Davenport value
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull})
        for (long r = 1; r <= static_cast<long>(p); ++r)
            for (long s = 1; s <= static_cast<long>(p); ++s)
                CHECK(beta_bound(r, s, p) <= std::min<long>(static_cast<long>(p), r + s - 1));
}

TEST_CASE("sumset bound on arithmetic progressions in F_p") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        const long P = static_cast<long>(p);
        for (long r = 1; r <= std::min(5L, P); ++r)
            for (long s = 1; s <= std::min(5L, P); ++s)
                for (long a = 0; a < P; ++a)
                    for (long da = 1; da < P; ++da)
                        for (long db = 1; db < P; ++db) {
                            std::vector<Point> za, zb;
                            for (long i = 0; i < r; ++i) za.push_back({(a + i * da) % P});
                            for (long i = 0; i < s; ++i) zb.push_back({(i * db) % P});
                            PointLocus A(1, za), B(1, zb);
                            auto sum = sumset_modp(A, B, p);
                            CHECK(static_cast<long>(sum.size()) >= beta_bound(r, s, p));
                        }
    }
}

TEST_CASE("closure in characteristic p") {
    std::mt19937_64 rng(74);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (int trial = 0; trial < 15; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 2);
            auto pick = [&](std::size_t cap) {
                std::vector<Point> pts;
                const std::size_t k = 1 + rng() % cap;
                for (std::size_t i = 0; i < k; ++i) {
                    Point x(n);
                    for (auto& c : x) c = static_cast<long long>(rng() % p);
                    pts.push_back(x);
                }
                return PointLocus(n, pts);
            };
            auto r = closure_check_modp(pick(4), pick(4), p);
            CHECK(r.holds);
            CHECK(!r.witness);
        }
    }
    CHECK(closure_check_modp(PointLocus(1, {{0}, {1}}), PointLocus(1, {{0}, {1}}), 2).holds);
}
