#include "helpers.hpp"

#include "bowforge/bow_calculus.hpp"
#include "bowforge/errors.hpp"
#include "bowforge/serialize.hpp"

#include <cstdio>
#include <fstream>

using namespace bowforge;

TEST_CASE("rationals")
{
    CHECK(to_json(Rational(3, 6)) == Json("1/2"));
    CHECK(to_json(Rational(-2)) == Json("-2"));
    CHECK(rational_from_json(Json(4)) == Rational(4));
    CHECK(rational_from_json(Json("-3/9")) == Rational(-1, 3));
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), ParseError);
}

TEST_CASE("weights round trip")
{
    AffineWeight w(3, 2, {2, 1, 0}, Rational(-5, 3));
    Json j = to_json(w);
    CHECK(j["delta"] == "-5/3");
    CHECK(weight_from_json(j) == w);
    CHECK(weight_from_json(Json::parse(R"({"n":2,"level":1,"profile":[0,0]})")) == L(2, 0));
    CHECK(weight_from_json(Json::parse(R"({"n":2,"level":1,"profile":[0,0],"delta":-1})"))
          == L(2, 0) - D(2));
    CHECK_THROWS_AS(weight_from_json(Json::parse(R"({"n":2,"profile":[0,0]})")), ParseError);
    CHECK_THROWS_AS(weight_from_json(Json::parse(R"({"n":2,"level":1,"profile":[0,"a"]})")),
                    ParseError);
    CHECK_THROWS_AS(weight_from_json(Json::parse(R"({"n":2,"level":1,"profile":[0]})")),
                    DomainError);
}

TEST_CASE("diagrams round trip")
{
    GYDiagram g(2, 3, {2, -1});
    CHECK(gyd_from_json(to_json(g)) == g);

    BowDiagram b = balanced_form(2 * L(2, 0), 2 * L(2, 0) - A(2, 0));
    CHECK(bow_from_json(to_json(b)) == b);
    BowDiagram plain = bow_from_json(Json::parse(
        R"({"shape":"circle","nodes":[{"kind":"x"},{"kind":"o"},{"kind":"x"}],"dims":[1,1,1]})"));
    CHECK(plain == balanced_from_dims({1, 0}, {1, 1}));
    CHECK_THROWS_AS(bow_from_json(Json::parse(
                        R"({"shape":"square","nodes":[{"kind":"x"}],"dims":[0]})")),
                    ParseError);
    CHECK_THROWS_AS(bow_from_json(Json::parse(
                        R"({"shape":"circle","nodes":[{"kind":"x"},{"kind":"o"}],"dims":[0,0],
                            "params":[{"sym":1},{"sym":2}]})")),
                    ParseError);
    CHECK_THROWS_AS(bow_from_json(Json::parse(
                        R"({"shape":"circle","nodes":[{"kind":"x"},{"kind":"o"}],"dims":[0]})")),
                    DomainError);

    SeparatedRecord r{2, {0}, {0, 0}, 1, {OParam{1, -1}}};
    CHECK(separated_from_json(to_json(r)) == r);

    MayaDiagram m(2, 1, {{0, 1}, {}});
    CHECK(maya_from_json(to_json(m)) == m);

    FockState s = fock_state({-1, 2});
    CHECK(fock_state_from_json(to_json(s)) == s);
    CHECK(fock_state_from_json(Json::parse("[2,-1]")) == s);
}

TEST_CASE("reports serialize")
{
    Json inv = to_json(invariants(balanced_from_dims({1, 0}, {1, 1})));
    CHECK(inv["quad_h"] == 4);
    Json a = to_json(unwind_to_a_infinity(2, {{{0, 0}, 1}, {{-1, 1}, 1}}));
    CHECK(a["minus"].size() == 2);
    CHECK(a["minus"][0]["index"] == -1);
    Json e = to_json(enumerate_fixed_points(make_query(L(2, 0), L(2, 0)), 2));
    CHECK(e["count"] == 1);
}

TEST_CASE("loading json")
{
    CHECK(load_json(R"( {"a": 1})")["a"] == 1);
    CHECK(load_json("[1,2]").size() == 2);
    CHECK_THROWS_AS(load_json("{bad"), ParseError);
    CHECK_THROWS_AS(load_json("/nonexistent/file.json"), ParseError);

    std::string path = "bowforge_serialize_test.json";
    {
        std::ofstream out(path);
        out << R"({"n":2,"level":1,"profile":[1,0]})";
    }
    CHECK(weight_from_json(load_json(path)) == L(2, 1));
    std::remove(path.c_str());
}
