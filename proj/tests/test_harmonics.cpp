#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qehrhart/harmonics.hpp"

using namespace qeh;

namespace {

PointLocus triangle_locus() { return PointLocus(2, {{0, 0}, {1, 1}, {2, 1}, {1, 2}}); }

MultiPoly P(const std::string& s, int n = 2, char v = 'x') { return parse_multipoly(s, n, v); }

std::vector<Exponent> E(std::initializer_list<Exponent> l) { return std::vector<Exponent>(l); }

// Reduced bases of the ideal generated by polys (used to compare ideals).
std::vector<MultiPoly> reduced(const std::vector<MultiPoly>& polys) { return buchberger(polys).generators; }

}  // namespace

TEST_CASE("grlex order and monomial lists") {
    CHECK(grlex_less({0, 2}, {1, 1}));
    CHECK(grlex_less({1, 1}, {2, 0}));
    CHECK(grlex_less({2, 0}, {0, 3}));
    CHECK(monomials_of_degree(2, 2) == E({{0, 2}, {1, 1}, {2, 0}}));
    CHECK(monomials_of_degree(3, 1) == E({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
    CHECK(P("x1^2 - x2^2").to_string() == "1/1*x1^2 + -1/1*x2^2");
    CHECK(P("3/2*x1*x2 + 1").to_string() == "3/2*x1*x2 + 1/1");
}

TEST_CASE("apolarity pairing") {
    CHECK(apolarity_pair(P("x1^2"), P("y1^2", 2, 'y')) == 2);
    CHECK(apolarity_pair(P("x1^2"), P("y1*y2", 2, 'y')) == 0);
    CHECK(apolarity_pair(P("x1*x2"), P("y1*y2", 2, 'y')) == 1);
}

TEST_CASE("segment loci") {
    for (long long v = 0; v <= 5; ++v) {
        std::vector<Point> pts;
        for (long long i = 0; i <= v; ++i) pts.push_back({i});
        PointLocus z(1, pts);
        auto g = buchberger_moeller(z);
        REQUIRE(g.generators.size() == 1);
        MultiPoly expect = MultiPoly::constant(1, 1);
        for (long long i = 0; i <= v; ++i) expect = expect * (P("x1", 1) - MultiPoly::constant(1, Rat(static_cast<long>(i))));
        CHECK(g.generators[0] == expect);
        CHECK(g.standard.size() == static_cast<std::size_t>(v + 1));
        auto gr = gr_ideal(z);
        REQUIRE(gr.generators.size() == 1);
        CHECK(gr.generators[0] == MultiPoly::monomial({static_cast<int>(v + 1)}));
        auto comp = gr_component(z, static_cast<int>(v + 1));
        REQUIRE(comp.size() == 1);
        CHECK(comp[0] == MultiPoly::monomial({static_cast<int>(v + 1)}));
    }
    CHECK(gr_component(PointLocus(1, {{0}, {1}, {2}}), 3).size() == 1);
}

TEST_CASE("single point") {
    PointLocus z(3, {{2, -1, 5}});
    auto g = buchberger_moeller(z);
    CHECK(g.standard == E({{0, 0, 0}}));
    CHECK(g.generators == std::vector<MultiPoly>{P("x3 - 5", 3), P("x2 + 1", 3), P("x1 - 2", 3)});
    CHECK(harmonic_basis(z).size() == 1);
}

TEST_CASE("worked triangle locus") {
    auto z = triangle_locus();
    auto g = buchberger_moeller(z);
    CHECK(g.standard == E({{0, 0}, {0, 1}, {1, 0}, {0, 2}}));
    auto gr = gr_ideal(z);
    CHECK(gr.standard == g.standard);
    CHECK(gr.generators == reduced({P("x1^2 - x2^2"), P("2*x1*x2 - x2^2"), P("x2^3")}));
    CHECK(gr_component(z, 2).size() == 2);
    CHECK(gr_component(z, 0).empty());
    auto hb = harmonic_basis(z);
    REQUIRE(hb.max_degree() == 2);
    CHECK(hb.by_degree[0].basis() == std::vector<MultiPoly>{P("1", 2, 'y')});
    CHECK(hb.by_degree[1].dim() == 2);
    CHECK(hb.by_degree[2].basis() == std::vector<MultiPoly>{P("y1^2 + y1*y2 + y2^2", 2, 'y')});
    CHECK(dump(hb) == "1/1\n1/1*y1\n1/1*y2\n1/1*y1^2 + 1/1*y1*y2 + 1/1*y2^2\n");
    auto z2 = minkowski_sum(z, z);
    auto hb2 = harmonic_basis(z2);
    CHECK(hb2.size() == 10);
    CHECK(hb2.hilbert() == QPoly::from_ints({1, 2, 3, 3, 1}));
    CHECK(hb2.contains(P("y1^4 + 2*y1^3*y2 + 3*y1^2*y2^2 + 2*y1*y2^3 + y2^4", 2, 'y')));
    CHECK(hb2.by_degree[4].dim() == 1);
}

TEST_CASE("shifted loci have monomial data") {
    PointLocus z(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}});
    auto gr = gr_ideal(z);
    for (const auto& f : gr.generators) CHECK(f.terms().size() == 1);
    std::vector<Exponent> std_sorted = gr.standard;
    std::vector<Exponent> pts;
    for (const auto& p : z.points) pts.push_back({static_cast<int>(p[0]), static_cast<int>(p[1])});
    std::sort(std_sorted.begin(), std_sorted.end());
    CHECK(std_sorted == pts);
    auto hb = harmonic_basis(z);
    for (const auto& sp : hb.by_degree)
        for (const auto& f : sp.basis()) {
            CHECK(f.terms().size() == 1);
            Point e(f.leading_monomial().begin(), f.leading_monomial().end());
            CHECK(z.contains(e));
        }
}

TEST_CASE("closure on the worked examples") {
    auto z = triangle_locus();
    auto r = closure_check(z, z);
    CHECK(r.holds);
    // degree 3 of the target is 3-dimensional, but only the two products quadric*y_i land there
    CHECK(r.proper);
    CHECK(harmonic_basis(minkowski_sum(z, z)).by_degree[3].dim() == 3);
    auto r2 = closure_check(PointLocus(2, {{0, 0}, {1, 0}, {0, 1}}), PointLocus(2, {{0, 0}, {1, 0}, {1, 1}}));
    CHECK(r2.holds);
    CHECK(r2.proper);
    CHECK(minkowski_sum(PointLocus(2, {{0, 0}, {1, 0}, {0, 1}}), PointLocus(2, {{0, 0}, {1, 0}, {1, 1}})).size() == 7);
    auto r3 = closure_check(z, PointLocus(2, {{0, 0}}));
    CHECK(r3.holds);
    CHECK(!r3.proper);
}

TEST_CASE("product generators") {
    auto g = product_gens_oracle(PointLocus(2, {{0, 0}, {2, 2}}));
    CHECK(g.size() == 4);
    CHECK(reduced(g) == reduced({P("x1^2 - 2*x1"), P("x1*x2 - 2*x1"), P("x1*x2 - 2*x2"), P("x2^2 - 2*x2")}));
    CHECK(product_gens_oracle(PointLocus(2, {{3, 4}})) == std::vector<MultiPoly>{P("x1 - 3"), P("x2 - 4")});
    CHECK(product_gens_oracle(PointLocus(1, {{0}, {1}})) == std::vector<MultiPoly>{P("x1^2 - x1", 1)});
    CHECK_THROWS_AS(product_gens_oracle(PointLocus(4, {{0, 0, 0, 0}})), std::length_error);
}

TEST_CASE("harmonic spaces agree with the least-space oracle") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        auto z = oracle::random_locus(rng, n, 9, 3);
        auto hb = harmonic_basis(z);
        CHECK(hb.size() == z.size());
        CHECK(hb.hilbert().at_one() == Rat(static_cast<long>(z.size())));
        CHECK(hb.max_degree() <= static_cast<int>(z.size()) - 1);
        for (int d = 0; d <= hb.max_degree() + 1; ++d) {
            auto ls = oracle::least_space(z, d);
            if (d <= hb.max_degree()) CHECK(ls == hb.by_degree[d]);
            else CHECK(ls.dim() == 0);
        }
        // perp consistency
        for (int d = 0; d <= hb.max_degree(); ++d)
            for (const auto& f : gr_component(z, d))
                for (const auto& g : hb.by_degree[d].basis()) CHECK(apolarity_pair(f, g) == 0);
    }
}

TEST_CASE("standard monomials agree between bases and with Buchberger") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 2);
        auto z = oracle::random_locus(rng, n, 12, 3);
        auto g = buchberger_moeller(z);
        auto gr = gr_ideal(z);
        CHECK(g.standard == gr.standard);
        CHECK(g.standard.size() == z.size());
        for (const auto& f : g.generators)
            for (const auto& p : z.points) CHECK(f.eval(p) == 0);
        std::vector<MultiPoly> tops;
        for (const auto& f : g.generators) tops.push_back(f.top().monic());
        CHECK(buchberger(tops).generators == gr.generators);
        if (z.size() <= 5) CHECK(buchberger(product_gens_oracle(z)).generators == g.generators);
    }
}

TEST_CASE("nested loci give nested harmonic spaces") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 20; ++trial) {
        auto big = oracle::random_locus(rng, 2, 9, 2);
        std::vector<Point> sub;
        for (const auto& p : big.points)
            if (rng() % 2) sub.push_back(p);
        if (sub.empty()) sub.push_back(big.points[0]);
        auto hs = harmonic_basis(PointLocus(2, sub)), hb = harmonic_basis(big);
        for (const auto& sp : hs.by_degree)
            for (const auto& f : sp.basis()) CHECK(hb.contains(f));
    }
}

TEST_CASE("closure holds on random pairs") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = oracle::random_locus(rng, 2, 6, 3), b = oracle::random_locus(rng, 2, 6, 3);
        CHECK(closure_check(a, b).holds);
    }
}

TEST_CASE("modular Hilbert series agree with exact ones") {
    std::mt19937_64 rng(505);
    LocusCache cache;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        auto z = oracle::random_locus(rng, n, 30, 4);
        auto exact = hilbert_series(z, HilbertMethod::Exact);
        CHECK(exact == hilbert_series(z, HilbertMethod::Modular));
        CHECK(exact == hilbert_series(z, HilbertMethod::Auto, &cache));
        CHECK(exact == hilbert_series(z, HilbertMethod::Auto, &cache));
        CHECK(exact == harmonic_basis(z).hilbert());
    }
    CHECK(cache.size() > 0);
}
