#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fixtures.hpp"
#include "otri/point_io.hpp"
#include "otri/report_json.hpp"
#include "otri/verify.hpp"

using otri::Int;
using otri::parse_points;
using otri::ParseError;
using otri::Point;
using otri::Rat;

TEST_CASE("parses integers, comments and blank lines", "[point_io]") {
    std::istringstream in("# header\n\n0 0\n  1   0\n-3 7\n\n# trailing\n");
    const auto parsed = parse_points(in);
    REQUIRE(parsed.points.size() == 3);
    CHECK(parsed.scale == 1);
    CHECK(parsed.points[1] == Point{1, 0});
    CHECK(parsed.points[2] == Point{-3, 7});
}

TEST_CASE("rational input scales the whole set", "[point_io]") {
    std::istringstream in("1/2 0\n1 1/3\n0 0\n");
    const auto parsed = parse_points(in);
    CHECK(parsed.scale == 6);
    CHECK(parsed.points[0] == Point{3, 0});
    CHECK(parsed.points[1] == Point{6, 2});
    CHECK(parsed.points[2] == Point{0, 0});
}

TEST_CASE("negative rationals and big values", "[point_io]") {
    std::istringstream in("-1/2 5\n123456789012345678901234567890 -7/4\n");
    const auto parsed = parse_points(in);
    CHECK(parsed.scale == 4);
    CHECK(parsed.points[0] == Point{-2, 20});
    CHECK(parsed.points[1].y == -7);
}

TEST_CASE("explicit plus signs are accepted", "[point_io]") {
    std::istringstream in("+5 +7/2\n0 0\n");
    const auto parsed = parse_points(in);
    CHECK(parsed.scale == 2);
    CHECK(parsed.points[0] == Point{10, 7});
}

TEST_CASE("parse errors carry line numbers", "[point_io]") {
    std::istringstream three("0 0\n1 2 3\n");
    CHECK_THROWS_MATCHES(parse_points(three), ParseError,
                         Catch::Matchers::Message("line 2: expected two coordinates"));

    std::istringstream bad("0 0\n\nx 3\n");
    try {
        parse_points(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    std::istringstream zero_den("1/0 2\n");
    CHECK_THROWS_AS(parse_points(zero_den), ParseError);

    std::istringstream dup("4 4\n4 4\n");
    CHECK_THROWS_WITH(parse_points(dup), Catch::Matchers::ContainsSubstring("duplicate"));

    std::istringstream empty("# nothing\n");
    CHECK_THROWS_WITH(parse_points(empty), Catch::Matchers::ContainsSubstring("empty set"));
}

TEST_CASE("write/parse round trip", "[point_io]") {
    const auto X = fixtures::two_rail_11();
    std::ostringstream out;
    otri::write_points(out, X, {"demo header"});
    CHECK(out.str().substr(0, 2) == "# ");
    std::istringstream in(out.str());
    const auto back = parse_points(in);
    REQUIRE(back.points.size() == X.size());
    for (std::size_t i = 0; i < X.size(); ++i) CHECK(back.points[i] == X[i]);
}

TEST_CASE("fraction strings are exact", "[report_json]") {
    CHECK(otri::fraction_str(Rat(3)) == "3/1");
    CHECK(otri::fraction_str(Rat(9, 7)) == "9/7");
    CHECK(otri::fraction_str(Rat(-6, 4)) == "-3/2");
}

TEST_CASE("check report serialization shape", "[report_json]") {
    const auto map = otri::build_incidence_map(fixtures::grid3());
    const auto j = otri::to_json(otri::check_kelly_moser(map));
    CHECK(j.at("name") == "kelly_moser");
    CHECK(j.at("hypothesis_met") == true);
    CHECK(j.at("lhs") == "12/1");
    CHECK(j.at("rhs") == "27/7");
    CHECK(j.at("satisfied") == true);
    CHECK(j.at("witnesses").is_null());

    const auto failed = otri::to_json(otri::check_kelly_moser(
        otri::build_incidence_map(fixtures::collinear(4))));
    CHECK(failed.at("hypothesis_met") == false);
    CHECK(failed.at("satisfied").is_null());
    CHECK(failed.at("witnesses").at("reason") == "point set is collinear");
}

TEST_CASE("histogram serialization", "[report_json]") {
    const auto map = otri::build_incidence_map(fixtures::grid3());
    const auto h = otri::histogram_json(map);
    CHECK(h.at("2") == 12);
    CHECK(h.at("3") == 8);
    CHECK(h.size() == 2);
}
