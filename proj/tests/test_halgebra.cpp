#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qehrhart/ehrhart.hpp"
#include "qehrhart/halgebra.hpp"

using namespace qeh;

namespace {

LatticePolytope tri47() { return LatticePolytope({{0, 0}, {1, 2}, {2, 1}}, "tri47"); }
MultiPoly Y(const std::string& s) { return parse_multipoly(s, 2, 'y'); }

std::vector<std::pair<int, MultiPoly>> thetas() {
    return {{1, Y("1")}, {1, Y("y1^2+y1*y2+y2^2")}, {2, Y("y1^2*y2+y1*y2^2")}};
}

std::vector<std::pair<int, MultiPoly>> nine() {
    auto g = thetas();
    for (auto& x : std::vector<std::pair<int, MultiPoly>>{{0, Y("1")},
                                                         {1, Y("y1")},
                                                         {1, Y("y2")},
                                                         {2, Y("y1^2")},
                                                         {2, Y("y2^2")},
                                                         {3, Y("y1^2*y2-y1*y2^2")}})
        g.push_back(x);
    return g;
}

std::vector<Rat> q_one(const TQSeries& s) { return s.at_q_one(); }

}  // namespace

TEST_CASE("components") {
    auto c0 = component(tri47(), 0);
    CHECK(c0.basis.size() == 1);
    CHECK(c0.basis.by_degree[0].basis()[0] == MultiPoly::constant(2, 1));
    auto c1 = component(tri47(), 1);
    CHECK(c1.basis.size() == 4);
    REQUIRE(c1.basis.by_degree.size() == 3);
    CHECK(c1.basis.by_degree[2].dim() == 1);
    CHECK(c1.basis.contains(Y("y1^2+y1*y2+y2^2")));
    auto c2 = component(tri47(), 2);
    REQUIRE(c2.basis.by_degree.size() == 5);
    CHECK(c2.basis.by_degree[4].dim() == 1);
    CHECK(c2.basis.contains(Y("y1^4+2*y1^3*y2+3*y1^2*y2^2+2*y1*y2^3+y2^4")));
    CHECK(c2.basis.contains(Y("y1^2*y2+y1*y2^2")));
    auto c3 = component(tri47(), 3);
    CHECK(c3.basis.contains(Y("y1^6+3*y1^5*y2+6*y1^4*y2^2+7*y1^3*y2^3+6*y1^2*y2^4+3*y1*y2^5+y2^6")));
    CHECK(c3.basis.contains(Y("y1^2*y2-y1*y2^2")));
    // antiblocking: monomials y^z
    auto sq = component(cube(2), 2);
    for (const auto& z : cube(2).lattice_points(2).points) CHECK(sq.basis.contains(MultiPoly::monomial({int(z[0]), int(z[1])})));
}

TEST_CASE("Hilbert identity for the algebra") {
    for (const auto& p : {tri47(), cube(2), LatticePolytope({{0, 0}, {1, 2}, {3, 1}})}) {
        auto s = series_E(p, 4);
        for (int m = 0; m <= 4; ++m) CHECK(component(p, m).hilbert() == s[m]);
    }
}

TEST_CASE("product spans") {
    LatticePolytope p({{0, 0}, {1, 2}, {3, 1}});
    CHECK(idp_check(p, 2).first);
    auto r = product_span(p, 1, 1);
    CHECK(r.contained);
    CHECK_FALSE(r.equals);
    CHECK(r.top_q_degree() == 4);
    CHECK(r.target_top_q_degree() == 5);
    auto r0 = product_span(tri47(), 2, 0);
    CHECK(r0.equals);
    auto r47 = product_span(tri47(), 1, 1);
    CHECK(r47.contained);
    CHECK_FALSE(r47.equals);
    REQUIRE(r47.target_dims.size() > 3);
    CHECK(r47.dims[3] + 1 == r47.target_dims[3]);
    for (const auto& q : {cube(2), tri47(), segment(0, 3)})
        for (int m = 0; m <= 2; ++m)
            for (int m2 = 0; m + m2 <= 3; ++m2) CHECK(product_span(q, m, m2).contained);
}

TEST_CASE("generation") {
    auto full = generation_check(tri47(), 3, 8);
    CHECK(full.fully_generated());
    CHECK(generation_check(tri47(), 2, 8).fully_generated());
    auto deficient = generation_check(tri47(), 1, 4);
    CHECK_FALSE(deficient.fully_generated());
    REQUIRE(deficient.first_deficiency());
    CHECK(*deficient.first_deficiency() == std::make_pair(2, 3));
    CHECK(deficient.missing[2][3] == 1);
    CHECK(generation_check(cube(2), 1, 6).fully_generated());
    // enlarging m0 never adds deficiencies
    for (const auto& p : {tri47(), LatticePolytope({{0, 0}, {1, 2}, {3, 1}})}) {
        GenerationReport prev = generation_check(p, 1, 5);
        for (int m0 = 2; m0 <= 4; ++m0) {
            auto cur = generation_check(p, m0, 5);
            for (int m = 0; m <= 5; ++m)
                for (std::size_t d = 0; d < cur.missing[m].size(); ++d) CHECK(cur.missing[m][d] <= prev.missing[m][d]);
            prev = cur;
        }
    }
}

TEST_CASE("subalgebras from explicit generators") {
    auto s = q_one(subalgebra_hilbert(tri47(), thetas(), 8));
    auto t = q_one(expand(parse_ratfun("1/((1-t)^2(1-t^2))"), 8));
    CHECK(s == t);
    s = q_one(subalgebra_hilbert(tri47(), nine(), 8));
    CHECK(s == q_one(expand(parse_ratfun("(1+t+t^2)/((1-t)^3)"), 8)));
    CHECK(subalgebra_hilbert(tri47(), nine(), 8) == series_E(tri47(), 8));
    auto one = subalgebra_hilbert({{0, MultiPoly::constant(2, 1)}}, 2, 4);
    CHECK(one[0] == QPoly::constant(1));
    for (int m = 1; m <= 4; ++m) CHECK(one[m].is_zero());
    CHECK_THROWS_AS(subalgebra_hilbert(tri47(), {{1, Y("y1^3")}}, 3), NotInComponent);
}

TEST_CASE("interior ideal") {
    for (const auto& p : {tri47(), cube(2), corner_simplex(2)})
        for (int m = 0; m <= 2; ++m)
            for (int m2 = 1; m + m2 <= 4; ++m2) {
                auto a = component(p, m), b = interior_component(p, m2), target = interior_component(p, m + m2);
                for (const auto& sa : a.basis.by_degree)
                    for (const auto& sb : b.basis.by_degree)
                        for (const auto& f : sa.basis())
                            for (const auto& g : sb.basis()) CHECK(target.basis.contains(f * g));
            }
}

TEST_CASE("chain and order polytopes share harmonic spaces") {
    CHECK(chain_order_equality(Poset::antichain(2), 3));
    CHECK(chain_order_equality(Poset::chain(3), 3));
    for (const auto& q : posets_up_to_iso(3)) CHECK(chain_order_equality(q, 2));
}

TEST_CASE("generation of the triangle through least-space oracle pieces") {
    // products of the oracle's pieces of 1P and 2P against the oracle's pieces of 3P
    auto p = tri47();
    auto z1 = p.lattice_points(1), z2 = p.lattice_points(2), z3 = p.lattice_points(3);
    for (int d = 0; d <= 6; ++d) {
        auto target = oracle::least_space(z3, d);
        HomSpace span(2, d);
        for (int i = 0; i <= d; ++i)
            for (const auto& f : oracle::least_space(z1, i).basis())
                for (const auto& g : oracle::least_space(z2, d - i).basis()) {
                    CHECK(target.contains(f * g));
                    span.add(f * g);
                }
        CHECK(span.dim() == target.dim());
    }
}
