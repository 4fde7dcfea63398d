#include "pgiso/fixtures.hpp"

#include <array>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace pgiso {

namespace {

// Flats are written one per line in the order the designs are usually
// tabulated, points in the customary within-flat order; parsing does not
// depend on either.

constexpr std::string_view kSpreadN4T2A = R"(spread n=4 t=2
D BC BCD
C AB ABC
B ACD ABCD
A BD ABD
CD AC AD
)";

constexpr std::string_view kSpreadN4T2B = R"(spread n=4 t=2
A CD ACD
C ABCD ABD
D B BD
ABC AD BCD
AC AB BC
)";

constexpr std::string_view kSpreadN6T3A = R"(spread n=6 t=3
A EF AEF BCE ABCE BCF ABCF
B AF ABF CDF BCDF ACD ABCD
C AB ABC ADE ACDE BDE BCDE
D BC BCD BEF BDEF CEF CDEF
E CD CDE ACF ACEF ADF ADEF
F DE DEF ABD ABDF ABE ABEF
BD BF DF ACE ABCDE ABCEF ACDEF
AC CE AE BDF ABCDF BCDEF ABDEF
AD BE ABDE CF ACDF BCEF ABCDEF
)";

constexpr std::string_view kSpreadN6T3B = R"(spread n=6 t=3
ABC AEF BCEF ADEF BCDEF D ABCD
E ABCEF ABCF BDE BD ACDF ACDEF
DF ABCE ABCDEF C CDF ABE ABDEF
B DEF BDEF AF ABF ADE ABDE
A BDF ABDF ABCDE BCDE ACEF CEF
EF AB ABEF ACE ACF BCE BCF
BE F BEF BCDF CDEF BCD CDE
ABCDF ADF BC BF ACD ABD CF
AC AE CE DE ACDE AD CD
)";

constexpr std::string_view kStarN5T3A = R"(star n=5 t=3 t0=1
A E CDE AE ACD ACDE CD
D BC BCD AD ABC ABCD A
C BDE BCDE AC ABDE ABCDE A
B BCE CE AB ACE A ABCE
DE BD BE A ABD ABE ADE
)";

constexpr std::string_view kStarN5T3B = R"(star n=5 t=3 t0=1
ABC AC CDE B BCDE ABDE ADE
AE DE AD BCE ABCDE BCD ABC
D C CD ABCD AB ABD ABC
E ACDE ACD ABCE BD ABC BDE
CE A ACE ABC BC BE ABE
)";

using BasisList = std::initializer_list<std::initializer_list<std::string_view>>;

std::vector<Flat> flats_from_bases(int n, BasisList bases) {
    std::vector<Flat> out;
    for (const auto& basis : bases) {
        std::vector<Point> pts;
        for (std::string_view label : basis) pts.push_back(label_to_point(label, n));
        out.push_back(Flat::from_basis(pts));
    }
    return out;
}

const std::string& spread_ic1_text() {
    static const std::string text = render_design(make_spread(
        flats_from_bases(6, {{"A", "EF", "BCE"},
                             {"B", "AF", "CDF"},
                             {"C", "AB", "ADE"},
                             {"D", "BC", "BEF"},
                             {"E", "CD", "ACF"},
                             {"F", "DE", "ABD"},
                             {"BD", "BF", "ACE"},
                             {"AC", "CE", "BDF"},
                             {"AD", "BE", "CF"}}),
        6, 3));
    return text;
}

const std::string& spread_ic2_text() {
    static const std::string text = render_design(make_spread(
        flats_from_bases(6, {{"A", "BD", "CF"},
                             {"B", "AF", "CE"},
                             {"C", "BF", "DE"},
                             {"D", "AC", "BE"},
                             {"E", "AB", "DF"},
                             {"F", "AE", "CD"},
                             {"AD", "BC", "EF"},
                             {"ACE", "ADF", "BEF"},
                             {"ABC", "ADE", "CEF"}}),
        6, 3));
    return text;
}

const std::string& star_pa1_text() {
    static const std::string text = render_design(make_star(
        flats_from_bases(5, {{"A", "B", "CDE"}, {"C", "AD", "BE"}, {"D", "E", "ABC"}})));
    return text;
}

const std::string& star_pa2_text() {
    static const std::string text = render_design(make_star(flats_from_bases(
        5, {{"A", "B", "DE", "ACD"}, {"C", "AB", "DE", "ACD"}, {"D", "E", "AB", "ACD"}})));
    return text;
}

constexpr std::array<std::string_view, 10> kNames = {
    "spreadn4t2a", "spreadn4t2b", "spreadn6t3a", "spreadn6t3b", "spread_IC1",
    "spread_IC2",  "starn5t3a",   "starn5t3b",   "star_PA1",    "star_PA2",
};

}  // namespace

std::vector<std::string_view> fixture_names() {
    return std::vector<std::string_view>(kNames.begin(), kNames.end());
}

bool is_fixture(std::string_view name) {
    for (std::string_view known : kNames)
        if (known == name) return true;
    return false;
}

std::string_view fixture_text(std::string_view name) {
    if (name == "spreadn4t2a") return kSpreadN4T2A;
    if (name == "spreadn4t2b") return kSpreadN4T2B;
    if (name == "spreadn6t3a") return kSpreadN6T3A;
    if (name == "spreadn6t3b") return kSpreadN6T3B;
    if (name == "starn5t3a") return kStarN5T3A;
    if (name == "starn5t3b") return kStarN5T3B;
    if (name == "spread_IC1") return spread_ic1_text();
    if (name == "spread_IC2") return spread_ic2_text();
    if (name == "star_PA1") return star_pa1_text();
    if (name == "star_PA2") return star_pa2_text();
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

Design fixture_design(std::string_view name) { return parse_design(fixture_text(name)); }

Spread fixture_spread(std::string_view name) {
    Design d = fixture_design(name);
    if (const Spread* spread = std::get_if<Spread>(&d)) return *spread;
    throw std::invalid_argument("fixture '" + std::string(name) + "' is not a spread");
}

Star fixture_star(std::string_view name) {
    Design d = fixture_design(name);
    if (const Star* star = std::get_if<Star>(&d)) return *star;
    throw std::invalid_argument("fixture '" + std::string(name) + "' is not a star");
}

}  // namespace pgiso
