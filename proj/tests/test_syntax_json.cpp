#include "support.hpp"

#include "archlc/converse.hpp"
#include "archlc/errors.hpp"
#include "archlc/json_io.hpp"
#include "archlc/local_factors.hpp"
#include "archlc/syntax.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("parsing")
{
    CHECK(parse_param("C: chi(-2, 1/2) + chi(0, 3/2)") == complex_param({chi(-2, q(1, 2)), chi(0, q(3, 2))}));
    CHECK(parse_param("R: lambda(1, 3) + phi(-2, 1)") == real_param({lam(1, q(3)), phi(-2, q(1))}));
    CHECK(parse_param("R: lambda(0,0) + lambda(1,1)") == real_param({phi(0, q(0))}));
    CHECK(parse_param("C:").empty());
    CHECK(parse_param("  C :chi( 1 ,2-i )") == complex_param({chi(1, gq(2, 1, -1, 1))}));
    CHECK(parse_param("C: chi(0, 3/4+5/2i)") == complex_param({chi(0, gq(3, 4, 5, 2))}));
    CHECK(parse_param("C: chi(0, 0-i)") == complex_param({chi(0, gq(0, 1, -1, 1))}));
    CHECK(parse_param("C: chi(0, 2i)") == complex_param({chi(0, gq(0, 1, 2, 1))}));
    CHECK(parse_character("lambda(1, 0)") == Constituent(lam(1, q(0))));
    CHECK(parse_character("C: chi(-2, 0)") == Constituent(chi(-2, q(0))));
    CHECK(parse_constituent("phi(-3, 2)") == Constituent(phi(-3, q(2))));
}

TEST_CASE("parse errors carry positions")
{
    auto position_of = [](const char* text) -> long {
        try {
            parse_param(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(position_of("C: chi(0") == 8);
    CHECK(position_of("X: chi(0,0)") == 0);
    CHECK(position_of("C: chi(0, 0.5)") >= 10);
    CHECK(position_of("C: chi(0, 1/0)") >= 10);
    CHECK(position_of("C: chi(0,0) chi(0,0)") == 12);
    CHECK(position_of("C: psi(0,0)") == 3);
    CHECK(position_of("R: lambda(2, 0)") >= 10);
    CHECK_THROWS_AS(parse_param("C: lambda(0,0)"), FieldMismatch);
    CHECK_THROWS_AS(parse_param("R: chi(0,0)"), FieldMismatch);
    CHECK_THROWS_AS(parse_character("phi(-1, 0)"), ParseError);
    CHECK_THROWS_AS(parse_param("C: chi(0, -i)"), ParseError);
    try {
        parse_param("C: chi(0, 0.5)");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("non-rational") != std::string::npos);
    }
}

TEST_CASE("text round trip over families")
{
    SearchBounds b;
    for (Field f : {Field::Complex, Field::Real})
        for (const auto& p : enumerate_parameters(f, 3, b))
            CHECK(parse_param(to_string(p)) == p);
    Random rng;
    for (int k = 0; k < 300; ++k) {
        std::vector<Constituent> parts;
        for (int j = rng.integer(1, 3); j > 0; --j)
            parts.push_back(chi(rng.integer(-5, 5), rng.gaussq()));
        auto p = complex_param(parts);
        CHECK(parse_param(to_string(p)) == p);
        std::vector<Constituent> rparts;
        for (int j = rng.integer(1, 3); j > 0; --j) {
            if (rng.integer(0, 1))
                rparts.push_back(lam(static_cast<int>(rng.integer(0, 1)), rng.gaussq()));
            else
                rparts.push_back(phi(rng.integer(-5, 5), rng.gaussq()));
        }
        auto r = real_param(rparts);
        CHECK(parse_param(to_string(r)) == r);
    }
}

TEST_CASE("JSON forms")
{
    CHECK(to_json(Rational(3)) == "3/1");
    CHECK(to_json(frac(-1, 2)) == "-1/2");
    CHECK(rational_from_json(Json("7")) == 7);
    CHECK(gaussq_from_json(to_json(gq(1, 3, -2, 5))) == gq(1, 3, -2, 5));
    auto g = gamma_factor(complex_param({chi(0, q(0))}));
    auto j = to_json(g);
    CHECK(j["i"] == 0);
    CHECK(j["exp2"]["s"] == "2/1");
    CHECK(j["exp2"]["c"][0] == "-1/1");
    CHECK(j["num"][0]["s"] == "-1/1");
    CHECK(j["den"][0]["s"] == "1/1");
    CHECK(gamma_expr_from_json(j) == g);
    CHECK_THROWS(rational_from_json(Json("1/0")));
    CHECK_THROWS(rational_from_json(Json(0.5)));
}

TEST_CASE("JSON round trip is bit-exact")
{
    SearchBounds b;
    for (Field f : {Field::Complex, Field::Real})
        for (const auto& p : enumerate_parameters(f, 2, b)) {
            auto pj = to_json(p);
            auto back = parameter_from_json(pj);
            CHECK(back == p);
            CHECK(to_json(back).dump() == pj.dump());
            for (const auto& x : {l_factor(p), epsilon_factor(p), gamma_factor(p)}) {
                auto xj = to_json(x);
                auto y = gamma_expr_from_json(xj);
                CHECK(y == x);
                CHECK(to_json(y).dump() == xj.dump());
            }
        }
}

TEST_CASE("transcripts")
{
    SearchBounds b;
    auto p = real_param({phi(-1, q(1, 2)), lam(0, q(0))});
    auto twists = reconstruction_queries(Field::Real, b);
    auto j = transcript_json(p, twists);
    CHECK(j.size() == twists.size());
    auto oracle = oracle_from_transcript(j);
    CHECK(oracle.field == Field::Real);
    CHECK(oracle.available.size() == twists.size());
    for (const auto& x : twists)
        CHECK(oracle.query(x) == gamma_twisted(p, x));
    CHECK(transcript_json(p, twists).dump() == j.dump());
}
