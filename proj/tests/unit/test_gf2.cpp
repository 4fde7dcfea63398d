#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "pgiso/gf2.hpp"

using namespace pgiso;

namespace {

// Oracle: the span is every nonzero XOR over subsets, the rank its log2.
std::set<std::uint32_t> subset_xor_closure(const std::vector<Point>& pts) {
    std::set<std::uint32_t> sums = {0};
    for (const Point& p : pts) {
        std::set<std::uint32_t> next = sums;
        for (std::uint32_t s : sums) next.insert(s ^ p.mask());
        sums = std::move(next);
    }
    sums.erase(0u);
    return sums;
}

int oracle_rank(const std::vector<Point>& pts) {
    const auto closure = subset_xor_closure(pts);
    int r = 0;
    while ((std::size_t{1} << r) - 1 < closure.size()) ++r;
    return r;
}

std::vector<Point> random_points(int n, std::size_t count, std::mt19937_64& rng) {
    std::vector<Point> out;
    const std::uint32_t m = (std::uint32_t{1} << n) - 1;
    for (std::size_t i = 0; i < count; ++i)
        out.emplace_back(static_cast<std::uint32_t>(rng() % m) + 1, n);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("gf2");

TEST_CASE("labels round-trip and follow the Yates convention") {
    CHECK(label_to_point("A", 4).mask() == 1u);
    CHECK(label_to_point("B", 4).mask() == 2u);
    CHECK(label_to_point("AB", 4).mask() == 3u);
    CHECK(label_to_point("ACD", 4).mask() == 0b1101u);
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
        const Point p(mask, 4);
        CHECK(label_to_point(point_to_label(p), 4) == p);
    }
}

TEST_CASE("malformed labels are rejected") {
    CHECK_THROWS_AS(label_to_point("E", 4), std::invalid_argument);   // out of range for n
    CHECK_THROWS_AS(label_to_point("", 4), std::invalid_argument);    // zero vector
    CHECK_THROWS_AS(label_to_point("BA", 4), std::invalid_argument);  // not ascending
    CHECK_THROWS_AS(label_to_point("AA", 4), std::invalid_argument);
    CHECK_THROWS_AS(label_to_point("a", 4), std::invalid_argument);
    CHECK_THROWS_AS(point_to_label(Point::zero(4)), std::invalid_argument);
}

TEST_CASE("point sum is coordinatewise XOR") {
    CHECK(label_to_point("AB", 4) + label_to_point("BC", 4) == label_to_point("AC", 4));
    CHECK((label_to_point("A", 4) + label_to_point("A", 4)).is_zero());
    CHECK_THROWS_AS(label_to_point("A", 4) + label_to_point("A", 5), std::invalid_argument);
}

TEST_CASE("points sort in Yates order") {
    std::vector<Point> pts;
    for (std::uint32_t mask = 1; mask < 16; ++mask) pts.emplace_back(mask, 4);
    std::mt19937_64 rng(11);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(pts[i].mask() == i + 1);
}

TEST_CASE("span and rank match the subset-XOR oracle") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto pts = random_points(n, 1 + rng() % 5, rng);

        const auto closure = subset_xor_closure(pts);
        const auto spanned = span(pts);
        REQUIRE(spanned.size() == closure.size());
        std::size_t i = 0;
        for (std::uint32_t mask : closure) CHECK(spanned[i++].mask() == mask);

        CHECK(rank_of_points(pts) == oracle_rank(pts));
    }
    CHECK_THROWS_AS(span(std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("independence agrees with rank") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto pts = random_points(4, 1 + rng() % 4, rng);
        CHECK(points_independent(pts) == (rank_of_points(pts) == static_cast<int>(pts.size())));
    }
}

TEST_CASE("matrix columns, apply and multiplication are consistent") {
    const std::vector<Point> cols = {label_to_point("AB", 4), label_to_point("B", 4),
                                     label_to_point("BCD", 4), label_to_point("AD", 4)};
    const GF2Matrix m = GF2Matrix::from_columns(cols);
    for (int j = 0; j < 4; ++j) CHECK(m.column(j) == cols[static_cast<std::size_t>(j)]);

    // image of an effect is the XOR of the columns named by its letters
    CHECK(m.apply(label_to_point("A", 4)) == cols[0]);
    CHECK(m.apply(label_to_point("AC", 4)) == cols[0] + cols[2]);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        GF2Matrix a(4, 4), b(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                a.set(r, c, rng() & 1);
                b.set(r, c, rng() & 1);
            }
        const GF2Matrix ab = a * b;
        for (std::uint32_t mask = 1; mask < 16; ++mask) {
            const Point p(mask, 4);
            CHECK(ab.apply(p) == a.apply(b.apply(p)));
        }
    }
}

TEST_CASE("rank and inverse behave like Gauss elimination") {
    CHECK(GF2Matrix::identity(6).rank() == 6);

    GF2Matrix singular(3, 3);
    singular.set(0, 0, true);
    singular.set(1, 1, true);
    singular.set(2, 0, true);  // row 2 equals row 0
    singular.set(2, 1, true);  // plus row 1
    CHECK(singular.rank() == 2);
    CHECK_THROWS_AS(invert(singular), std::domain_error);

    std::mt19937_64 rng(13);
    int found = 0;
    while (found < 25) {
        GF2Matrix m(5, 5);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) m.set(r, c, rng() & 1);
        if (m.rank() != 5) continue;
        ++found;
        CHECK(m * invert(m) == GF2Matrix::identity(5));
        CHECK(invert(m) * m == GF2Matrix::identity(5));
    }
}

TEST_CASE("matrix text form round-trips") {
    const GF2Matrix m = GF2Matrix::parse_text("0 1 0 0\n1 0 0 0\n1 1 1 1\n1 0 0 1\n");
    CHECK(m.to_text() == "0 1 0 0\n1 0 0 0\n1 1 1 1\n1 0 0 1\n");
    CHECK(GF2Matrix::parse_text(m.to_text()) == m);
    CHECK_THROWS_AS(GF2Matrix::parse_text("0 1\n1"), std::invalid_argument);
    CHECK_THROWS_AS(GF2Matrix::parse_text("0 2\n1 1"), std::invalid_argument);
    CHECK_THROWS_AS(GF2Matrix::parse_text(""), std::invalid_argument);
}

TEST_SUITE_END();
