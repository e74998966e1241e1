#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "katz/io.hpp"
#include "katz/ranks.hpp"

#include <random>

using namespace katz;
using namespace katz::testing;

TEST_CASE("entry parsing") {
    CHECK(parse_entry("-5*z^-2") == RationalFunction::monomial(Rat(-5), -2));
    CHECK(parse_entry("(2-2*z)/z^3") == rf("2/z^3") - rf("2/z^2"));
    CHECK(parse_entry("0").is_zero());
    CHECK(parse_entry("3/4") == RationalFunction(Rat(3, 4)));
    CHECK(parse_entry(" 1 + 2*z ") == rf("1+2*z"));
    CHECK(parse_entry("z^0") == rf("1"));
    CHECK(parse_entry("-z^2") == -rf("z^2"));
    CHECK(parse_entry("2^3") == rf("8"));
    CHECK(parse_entry("1/(1-z)") == RationalFunction(Polynomial(Rat(1)),
                                                     Polynomial({Rat(1), Rat(-1)})));
}

TEST_CASE("entry errors carry a position") {
    CHECK_THROWS_AS(parse_entry("1+"), ParseError);
    CHECK_THROWS_AS(parse_entry("(1"), ParseError);
    CHECK_THROWS_AS(parse_entry("x"), ParseError);
    CHECK_THROWS_AS(parse_entry("1/0"), ParseError);
    CHECK_THROWS_AS(parse_entry("1/(z-z)"), ParseError);
    CHECK_THROWS_AS(parse_entry("z^z"), ParseError);
    try {
        parse_entry("1 + @");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("fuzzed grammatical strings parse without crashing") {
    std::mt19937_64 rng(5150);
    const char* atoms[] = {"z", "1", "7", "2/3", "z^2", "z^-3"};
    for (int trial = 0; trial < 300; ++trial) {
        std::string s = atoms[rng() % 6];
        int ops = static_cast<int>(rng() % 4);
        for (int i = 0; i < ops; ++i) {
            const char* op[] = {"+", "-", "*"};
            s = "(" + s + op[rng() % 3] + atoms[rng() % 6] + ")";
        }
        CHECK_NOTHROW(parse_entry(s));
    }
}

TEST_CASE("JSON document") {
    SystemMatrix s = parse_document(R"({
        "form": "d/dz",
        "matrix": [["-5*z^-2", "5*z^-1", "-2*z^-1", "-9*z^-2"],
                   ["5*z^-3", "3*z^-2", "2*z^-2", "-4*z^-2"],
                   ["4*z^-1", "-5*z^-1", "-5*z^-2", "2"],
                   ["(2-2*z)/z^3", "-5*z^-1", "3*z^-2", "-6*z^-2"]]
    })");
    CHECK(s.dim() == 4);
    CHECK(poincare_rank(s) == 2);
    CHECK(s.theta_matrix() == pflugel_barkatou().theta_matrix());

    SystemMatrix one = parse_document(R"({"matrix": [["0"]]})");
    CHECK(one.dim() == 1);
    CHECK(one.theta_matrix().at(0, 0).is_zero());
}

TEST_CASE("text document") {
    SystemMatrix s = parse_document("form: theta\n0; 3*z^-3\n0; 0\n");
    CHECK(s.dim() == 2);
    CHECK(s.theta_matrix().at(0, 1) == rf("3*z^-3"));

    // default form is d/dz
    SystemMatrix d = parse_document("1/z\n");
    CHECK(d.theta_matrix().at(0, 0) == rf("1"));
}

TEST_CASE("document errors") {
    CHECK_THROWS_AS(parse_document("1; z\n0\n"), ParseError);          // not square
    CHECK_THROWS_AS(parse_document(R"({"matrix": []})"), ParseError);  // empty
    CHECK_THROWS_AS(parse_document("{ not json"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"form": "weird", "matrix": [["0"]]})"), ParseError);
    // entry errors are aggregated with coordinates
    try {
        parse_document("1; @\nz; #\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("(1,2)") != std::string::npos);
        CHECK(msg.find("(2,2)") != std::string::npos);
    }
}

TEST_CASE("serialize-parse round trip") {
    std::mt19937_64 rng(733);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng() % 3;
        SystemMatrix s = random_system(rng, n);
        SystemMatrix back = parse_document(serialize_document(s));
        CHECK(back.theta_matrix() == s.theta_matrix());
    }
}

TEST_CASE("report serialization") {
    RankReport r;
    r.poincare = 2;
    r.true_poincare = 2;
    r.katz = Rat(3, 2);
    r.n = 4;
    r.m_active = 20;
    r.witnesses = {{Rat(0), false}, {Rat(3, 2), true}};
    auto doc = nlohmann::json::parse(serialize_report(r));
    CHECK(doc["poincare_rank"] == 2);
    CHECK(doc["true_poincare_rank"] == 2);
    CHECK(doc["katz_rank"] == "3/2");
    CHECK(doc["n"] == 4);
    CHECK(doc["active_columns"] == 20);
    CHECK(doc["witnesses"].size() == 2);
    CHECK(doc["witnesses"][1]["k"] == "3/2");
    CHECK(doc["witnesses"][1]["equal"] == true);
}
