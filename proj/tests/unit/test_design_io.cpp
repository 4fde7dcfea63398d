#include <doctest.h>

#include <string>

#include <json.hpp>

#include "pgiso/design_io.hpp"
#include "pgiso/fixtures.hpp"
#include "pgiso/signature.hpp"

using namespace pgiso;

namespace {

ParseError capture(std::string_view text) {
    try {
        parse_design(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, 0, "");
}

}  // namespace

TEST_SUITE_BEGIN("design_io");

TEST_CASE("rendering is canonical") {
    const std::string golden =
        "spread n=4 t=2\n"
        "BC D BCD\n"
        "AC AD CD\n"
        "AB C ABC\n"
        "B ACD ABCD\n"
        "A BD ABD\n";
    CHECK(render_design(fixture_spread("spreadn4t2a")) == golden);
    // rearranged input renders identically
    CHECK(render_design(parse_design(golden)) == golden);

    const std::string star_text = render_design(fixture_star("starn5t3a"));
    CHECK(star_text.starts_with("star n=5 t=3 t0=1\n"));
}

TEST_CASE("comments and blank lines are skipped") {
    const Design d = parse_design(
        "# tabulated reference design\n"
        "\n"
        "spread n=4 t=2\n"
        "\n"
        "D BC BCD\n"
        "C AB ABC\n"
        "# interior comment\n"
        "B ACD ABCD\n"
        "A BD ABD\n"
        "CD AC AD\n"
        "\n");
    CHECK(design_kind(d) == "spread");
    CHECK(design_dimension(d) == 4);
    CHECK(check_spread_equivalence(std::get<Spread>(d), fixture_spread("spreadn4t2a")));
}

TEST_CASE("every fixture round-trips through text") {
    for (const std::string_view name : fixture_names()) {
        CAPTURE(name);
        const Design d = fixture_design(name);
        const std::string rendered = render_design(d);
        const Design back = parse_design(rendered);
        CHECK(design_kind(back) == design_kind(d));
        if (const Spread* spread = std::get_if<Spread>(&d)) {
            CHECK(check_spread_equivalence(*spread, std::get<Spread>(back)));
        } else {
            const Star& star = std::get<Star>(d);
            const Star& star_back = std::get<Star>(back);
            CHECK(check_star_equivalence(star, star_back));
            CHECK(star.covering == star_back.covering);
            CHECK(star.t0 == star_back.t0);
        }
        CHECK(render_design(back) == rendered);
    }
    CHECK_FALSE(fixture_star("star_PA1").covering);
    CHECK(fixture_star("star_PA2").covering);
}

TEST_CASE("parse errors carry positions") {
    SUBCASE("unknown kind") {
        const ParseError e = capture("blob n=4 t=2\nA B AB\n");
        CHECK(e.line == 1);
        CHECK(e.column == 1);
        CHECK(std::string(e.what()).starts_with("line 1, column 1:"));
    }
    SUBCASE("missing fields") {
        CHECK(capture("spread n=4\nA B AB\n").line == 1);
        CHECK(capture("spread t=2\nA B AB\n").line == 1);
    }
    SUBCASE("duplicate field") {
        const ParseError e = capture("spread n=4 t=2 t=2\nA B AB\n");
        CHECK(e.line == 1);
        CHECK(e.column == 16);
    }
    SUBCASE("bad integer") {
        CHECK(std::string(capture("spread n=four t=2\n").what())
                  .find("expected an integer") != std::string::npos);
    }
    SUBCASE("t0 on a spread") {
        const ParseError e = capture("spread n=4 t=2 t0=1\nA B AB\n");
        CHECK(e.line == 1);
        CHECK(e.column == 16);
    }
    SUBCASE("out of range") {
        CHECK(capture("spread n=0 t=2\nA B AB\n").line == 1);
        CHECK(capture("spread n=4 t=5\nA B AB\n").line == 1);
        CHECK(capture("star n=5 t=3 t0=3\nA B AB\n").line == 1);
    }
    SUBCASE("bad label") {
        const ParseError e = capture("spread n=4 t=2\nD BC BCQ\n");
        CHECK(e.line == 2);
        CHECK(e.column == 6);
    }
    SUBCASE("label beyond the dimension") {
        const ParseError e = capture("spread n=4 t=2\nD BC BCE\n");
        CHECK(e.line == 2);
        CHECK(e.column == 6);
    }
    SUBCASE("flat not closed") {
        const ParseError e = capture("spread n=4 t=2\nA B C\n");
        CHECK(e.line == 2);
        CHECK(e.column == 1);
    }
    SUBCASE("flat size against t") {
        const ParseError e = capture("spread n=4 t=2\nA B AB\nC D CD ACD AC AD A\n");
        CHECK(e.line == 3);
    }
    SUBCASE("body fails the spread check") {
        const ParseError e = capture(
            "spread n=4 t=2\n"
            "D BC BCD\n"
            "C AB ABC\n"
            "B ACD ABCD\n"
            "A BD ABD\n"
            "A AC AC\n");
        CHECK(e.line == 6);  // repeated point breaks closure before the spread check
        const ParseError f = capture(
            "spread n=4 t=2\n"
            "D BC BCD\n"
            "C AB ABC\n"
            "B ACD ABCD\n"
            "A BD ABD\n");
        CHECK(f.line == 1);
        CHECK(std::string(f.what()).find("not a spread") != std::string::npos);
    }
    SUBCASE("star nucleus mismatch") {
        std::string text(fixture_text("starn5t3a"));
        const std::string from = "t0=1";
        text.replace(text.find(from), from.size(), "t0=2");
        const ParseError e = capture(text);
        CHECK(e.line == 1);
        CHECK(std::string(e.what()).find("does not match t0=2") != std::string::npos);
    }
    SUBCASE("star with one ray") {
        CHECK(std::string(capture("star n=4 t=2\nA B AB\n").what())
                  .find("at least two rays") != std::string::npos);
    }
    SUBCASE("empty input") {
        CHECK_THROWS_AS(parse_design(""), ParseError);
        CHECK_THROWS_AS(parse_design("# only a comment\n"), ParseError);
    }
}

TEST_CASE("JSON rendering carries the design fields") {
    const nlohmann::json spread =
        nlohmann::json::parse(render_design_json(fixture_design("spreadn4t2a")));
    CHECK(spread["kind"] == "spread");
    CHECK(spread["n"] == 4);
    CHECK(spread["t"] == 2);
    REQUIRE(spread["flats"].size() == 5);
    CHECK(spread["flats"][0] == nlohmann::json::array({"BC", "D", "BCD"}));

    const nlohmann::json star =
        nlohmann::json::parse(render_design_json(fixture_design("star_PA1")));
    CHECK(star["kind"] == "star");
    CHECK(star["n"] == 5);
    CHECK(star["t"] == 3);
    CHECK(star["t0"] == 1);
    CHECK(star["covering"] == false);
    CHECK(star["nucleus"] == nlohmann::json::array({"ABCDE"}));
    CHECK(star["flats"].size() == 3);
}

TEST_SUITE_END();
