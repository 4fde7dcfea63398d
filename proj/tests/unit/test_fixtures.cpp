#include <doctest.h>

#include <algorithm>
#include <string_view>
#include <vector>

#include "pgiso/fixtures.hpp"

using namespace pgiso;

TEST_SUITE_BEGIN("fixtures");

TEST_CASE("the bundle lists ten designs") {
    const auto names = fixture_names();
    const std::vector<std::string_view> expected = {
        "spreadn4t2a", "spreadn4t2b", "spreadn6t3a", "spreadn6t3b", "spread_IC1",
        "spread_IC2",  "starn5t3a",   "starn5t3b",   "star_PA1",    "star_PA2",
    };
    CHECK(names == expected);
    for (const auto name : names) CHECK(is_fixture(name));
    CHECK_FALSE(is_fixture("spreadn4t2c"));
    CHECK_FALSE(is_fixture(""));
}

TEST_CASE("every fixture text parses into a valid design") {
    for (const auto name : fixture_names()) {
        CAPTURE(name);
        const Design d = fixture_design(name);
        if (const Spread* spread = std::get_if<Spread>(&d)) {
            CHECK(is_spread(spread->flats, spread->n, spread->t).ok);
        } else {
            CHECK(validate_star(std::get<Star>(d)).ok);
        }
    }
}

TEST_CASE("typed accessors enforce the design kind") {
    CHECK(fixture_spread("spreadn6t3b").flat_count() == 9);
    CHECK(fixture_star("starn5t3b").ray_count() == 5);
    CHECK_THROWS_AS(fixture_spread("starn5t3a"), std::invalid_argument);
    CHECK_THROWS_AS(fixture_star("spreadn4t2a"), std::invalid_argument);
    CHECK_THROWS_AS(fixture_text("nope"), std::invalid_argument);
    CHECK_THROWS_AS(fixture_design("nope"), std::invalid_argument);
}

TEST_CASE("expected parameters of each design") {
    const Spread a = fixture_spread("spreadn4t2a");
    CHECK(a.n == 4);
    CHECK(a.t == 2);
    CHECK(a.flat_count() == 5);

    for (const std::string_view name : {"spreadn6t3a", "spreadn6t3b", "spread_IC1",
                                        "spread_IC2"}) {
        const Spread d = fixture_spread(name);
        CHECK(d.n == 6);
        CHECK(d.t == 3);
        CHECK(d.flat_count() == 9);
    }

    for (const std::string_view name : {"starn5t3a", "starn5t3b"}) {
        const Star s = fixture_star(name);
        CHECK(s.n == 5);
        CHECK(s.t == 3);
        CHECK(s.t0 == 1);
        CHECK(s.ray_count() == 5);
        CHECK(s.covering);
        CHECK(s.nucleus.size() == 1);
    }
    CHECK(fixture_star("starn5t3a").nucleus.points() ==
          std::vector<Point>{label_to_point("A", 5)});
    CHECK(fixture_star("starn5t3b").nucleus.points() ==
          std::vector<Point>{label_to_point("ABC", 5)});
}

TEST_CASE("partial families keep their nucleus data") {
    const Star pa1 = fixture_star("star_PA1");
    CHECK(pa1.n == 5);
    CHECK(pa1.t == 3);
    CHECK(pa1.t0 == 1);
    CHECK(pa1.ray_count() == 3);
    CHECK_FALSE(pa1.covering);
    CHECK(pa1.nucleus.points() == std::vector<Point>{label_to_point("ABCDE", 5)});

    const Star pa2 = fixture_star("star_PA2");
    CHECK(pa2.n == 5);
    CHECK(pa2.t == 4);
    CHECK(pa2.t0 == 3);
    CHECK(pa2.ray_count() == 3);
    CHECK(pa2.covering);
    const std::vector<Point> nucleus = {
        label_to_point("AB", 5),  label_to_point("ACD", 5),  label_to_point("BCD", 5),
        label_to_point("ACE", 5), label_to_point("BCE", 5),  label_to_point("DE", 5),
        label_to_point("ABDE", 5),
    };
    std::vector<Point> sorted = nucleus;
    std::sort(sorted.begin(), sorted.end());
    CHECK(pa2.nucleus.points() == sorted);
}

TEST_SUITE_END();
