#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "qehrhart/corpus.hpp"
#include "qehrhart/ehrhart.hpp"
#include "qehrhart/io.hpp"

using namespace qeh;

namespace {

int truncation_for(const CorpusRow& r) {
    const auto d = r.polytope().dim();
    return d <= 1 ? 10 : d == 2 ? 10 : 6;
}

}  // namespace

TEST_CASE("figure rows agree with the computed series") {
    for (const char* name : {"fig1", "fig2", "fig3"}) {
        const auto rows = corpus(name);
        CHECK(!rows.empty());
        for (const auto& r : rows) {
            CAPTURE(r.id);
            REQUIRE(r.form);
            const auto P = r.polytope();
            const int T = truncation_for(r);
            CHECK(expand(parse_ratfun(*r.form), T) == series_E(P, T));
            if (r.hstar) {
                const auto rep = classical_check(P);
                REQUIRE(rep.hstar.h.size() >= r.hstar->size());
                for (std::size_t i = 0; i < r.hstar->size(); ++i) CHECK(rep.hstar.h[i] == Int(static_cast<long>((*r.hstar)[i])));
            }
        }
    }
}

TEST_CASE("closed form families") {
    const auto rows = corpus("closedforms");
    CHECK(rows.size() >= 20);
    for (const auto& r : rows) {
        CAPTURE(r.id);
        REQUIRE(r.form);
        const auto P = r.polytope();
        const int T = P.dim() >= 3 ? 5 : 8;
        CHECK(expand(parse_ratfun(*r.form), T) == series_E(P, T));
    }
}

TEST_CASE("carlitz numerators") {
    CHECK(parse_bipoly(carlitz_numerator(1)) == parse_bipoly("1"));
    CHECK(parse_bipoly(carlitz_numerator(2)) == parse_bipoly("1+tq"));
    CHECK(expand(parse_bipoly(carlitz_numerator(3)), 4).at_q_one() == expand(parse_bipoly("1+4t+t^2"), 4).at_q_one());
}

TEST_CASE("guessed forms from the text hold to low truncation") {
    const auto reeve = corpus_row("reeve-3");
    REQUIRE(reeve);
    CHECK(expand(parse_ratfun(*reeve->form), 3) == series_E(reeve->polytope(), 3));

    const auto tri = corpus_row("triangle-3-7");
    REQUIRE(tri);
    REQUIRE(tri->denominator);
    int sum_b = 0;
    for (auto [b, a] : *tri->denominator) sum_b += b;
    CHECK(sum_b == 12);
    CHECK(tri->denominator->front() == std::pair<int, int>{1, 0});
    const auto rep = classical_check(tri->polytope());
    CHECK(rep.hstar.normalized_volume() == 7);
}

TEST_CASE("unknown ids") {
    CHECK(!corpus_row("no-such-row"));
    CHECK_THROWS(corpus("no-such-corpus"));
}

TEST_CASE("json values") {
    CHECK(rat_json(Rat(5)) == Json(5));
    Int big("123456789012345678901234567890");
    CHECK(rat_json(Rat(big)) == Json("123456789012345678901234567890"));
    CHECK(json_rat(rat_json(Rat(big))) == Rat(big));
    CHECK(rat_json(Rat(3, 4)) == Json("3/4"));
    CHECK(json_rat(Json("-3/4")) == Rat(-3, 4));
}

TEST_CASE("input files") {
    CHECK_THROWS_AS(parse_polytope(Json::parse(R"({"vertices": []})")), ParseError);
    CHECK_THROWS_AS(parse_polytope(Json::parse(R"({"vertices": [[0,0],[1]]})")), ParseError);
    CHECK_THROWS_AS(parse_polytope(Json::parse(R"({"name": "x"})")), ParseError);
    const auto P = parse_polytope(Json::parse(R"({"name": "sq", "vertices": [[0,0],[1,0],[0,1],[1,1]]})"));
    CHECK(P.dim() == 2);
    CHECK(parse_poset(Json::parse(R"({"size": 3, "covers": [[0,1],[1,2]]})")).n == 3);
    const auto g = parse_group(Json::parse(R"({"elements": [{"id": "e", "matrix": [[1,0],[0,1]]}, {"id": "s", "matrix": [[0,1],[1,0]]}]})"));
    CHECK(g.size() == 2);
    CHECK_THROWS_AS(parse_table(Json::parse(R"({"classes": ["e"], "class_sizes": [1], "irreps": ["a","b"], "values": [[1]]})")),
                    ParseError);
}

TEST_CASE("record serialization") {
    auto rec = guess(segment(0, 1), 6, default_bounds(segment(0, 1)));
    const auto j = record_json(rec);
    CHECK(j["T"] == 6);
    CHECK(j["iq"].size() == 7);
    CHECK(j["guess"]["den"].size() == 2);
    CHECK(j["verification"]["level"] == "truncation(6)");
}

TEST_CASE("cache round trip") {
    const auto dir = std::filesystem::temp_directory_path() / ("qeh-cache-test-" + std::to_string(std::random_device{}()));
    RecordCache c(dir);
    const auto k = RecordCache::key(Json{{"vertices", {{0}, {1}}}, {"T", 4}});
    CHECK(k.size() == 64);
    CHECK(!c.load(k));
    c.store(k, Json{{"x", 1}});
    REQUIRE(c.load(k));
    CHECK((*c.load(k))["x"] == 1);
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    std::filesystem::remove_all(dir);
}
