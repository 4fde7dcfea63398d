// Acceptance harness: one self-contained check per numbered criterion,
// printing a single PASS/FAIL line each. Run with no arguments for the full
// battery or with a criterion number to run just that one.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pgiso/catalog.hpp"
#include "pgiso/design_io.hpp"
#include "pgiso/fixtures.hpp"
#include "pgiso/isomorphism.hpp"
#include "pgiso/signature.hpp"

using namespace pgiso;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Check {
    std::vector<std::string> failures;

    void expect(bool condition, const std::string& what) {
        if (!condition) failures.push_back(what);
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

Outcome finish(Check& check, const std::string& pass_detail) {
    if (check.failures.empty()) return {true, pass_detail};
    std::string joined;
    for (std::size_t i = 0; i < check.failures.size(); ++i) {
        if (i) joined += "; ";
        joined += check.failures[i];
    }
    return {false, joined};
}

const char* kKnownIecN4 =
    "0 1 0 0\n"
    "1 0 0 0\n"
    "1 1 1 1\n"
    "1 0 0 1\n";

const char* kKnownIecN6 =
    "1 0 0 1 1 0\n"
    "0 1 0 1 0 0\n"
    "1 1 0 0 0 1\n"
    "1 1 1 0 0 1\n"
    "0 1 0 1 0 1\n"
    "1 1 1 1 1 0\n";

const char* kStandardizerB =
    "0 0 0 0 1\n"
    "0 0 0 1 0\n"
    "0 1 1 0 0\n"
    "1 0 1 0 0\n"
    "0 0 1 0 0\n";

const char* kReducedIec =
    "1 1 1 1\n"
    "1 0 0 1\n"
    "0 0 1 1\n"
    "1 1 1 0\n";

const char* kStarIec =
    "1 0 1 1 1\n"
    "1 1 1 0 0\n"
    "1 0 0 0 0\n"
    "0 1 0 0 1\n"
    "0 1 1 1 1\n";

const char* kReducedSpreadA =
    "spread n=4 t=2\n"
    "A ABC BC\n"
    "B CD BCD\n"
    "C ABD ABCD\n"
    "D ACD AC\n"
    "AB BD AD\n";

const char* kReducedSpreadB =
    "spread n=4 t=2\n"
    "C ABCD ABD\n"
    "AD AB BD\n"
    "B CD BCD\n"
    "A BC ABC\n"
    "D AC ACD\n";

const char* kAlternativeN4 =
    "spread n=4 t=2\n"
    "ABC D ABCD\n"
    "CD ACD A\n"
    "AD AB BD\n"
    "ABD BCD AC\n"
    "B C BC\n";

Outcome criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    SearchOptions opts;
    opts.find_all = true;
    const IsoResult all = check_spread_isomorphism(fixture_spread("spreadn4t2a"),
                                                   fixture_spread("spreadn4t2b"), opts);
    const double elapsed = seconds_since(start);

    Check check;
    check.expect(all.result, "search reported false");
    check.expect(all.collineations.size() == 360,
                 "expected 360 IECs, got " + std::to_string(all.collineations.size()));
    std::set<GF2Matrix> distinct;
    for (const Collineation& c : all.collineations) distinct.insert(c.matrix());
    check.expect(distinct.size() == all.collineations.size(), "IEC list has duplicates");
    check.expect(distinct.count(GF2Matrix::parse_text(kKnownIecN4)) == 1,
                 "documented IEC missing from the list");
    check.expect(elapsed < 10.0, "took " + format_seconds(elapsed) + ", limit 10s");
    return finish(check, "360 distinct IECs, documented matrix included, " +
                             format_seconds(elapsed));
}

Outcome criterion_2() {
    const Collineation c = Collineation::parse_text(kKnownIecN4);
    const Spread image = apply_collineation(c, fixture_spread("spreadn4t2a"));
    Check check;
    check.expect(check_spread_equivalence(image, fixture_spread("spreadn4t2b")),
                 "image is not equivalent to the target spread");
    return finish(check, "documented IEC maps spreadn4t2a onto spreadn4t2b");
}

Outcome criterion_3() {
    const Spread a = fixture_spread("spreadn6t3a");
    const Spread b = fixture_spread("spreadn6t3b");
    Check check;
    check.expect(!check_spread_equivalence(a, b), "spreads compare equivalent");

    const auto start = std::chrono::steady_clock::now();
    const IsoResult first = check_spread_isomorphism(a, b);
    const double elapsed = seconds_since(start);
    check.expect(first.result, "find-first search reported false");
    check.expect(first.collineations.size() == 1, "find-first did not report one IEC");

    const Collineation known = Collineation::parse_text(kKnownIecN6);
    check.expect(check_spread_equivalence(apply_collineation(known, a), b),
                 "documented 6x6 IEC fails verification");
    check.expect(elapsed < 300.0, "took " + format_seconds(elapsed) + ", limit 300s");
    return finish(check, "not equivalent, isomorphic, documented IEC verified, " +
                             format_seconds(elapsed));
}

Outcome criterion_4() {
    const IsoResult r = check_spread_isomorphism(fixture_spread("spread_IC1"),
                                                 fixture_spread("spread_IC2"));
    Check check;
    check.expect(r.result, "search reported false");
    check.expect(!r.collineations.empty() &&
                     check_spread_equivalence(
                         apply_collineation(r.collineations.front(),
                                            fixture_spread("spread_IC1")),
                         fixture_spread("spread_IC2")),
                 "reported IEC fails verification");
    return finish(check, "spread_IC1 is isomorphic to spread_IC2");
}

Outcome criterion_5() {
    const Star a = fixture_star("starn5t3a");
    const Star b = fixture_star("starn5t3b");
    Check check;
    check.expect(!check_star_equivalence(a, b), "stars compare equivalent");

    const IsoResult iso = check_star_isomorphism(a, b);
    check.expect(iso.result, "star isomorphism reported false");

    const StarDecomposition da = star_to_spread(a);
    const StarDecomposition db = star_to_spread(b);
    check.expect(check_spread_equivalence(da.spread,
                                          std::get<Spread>(parse_design(kReducedSpreadA))),
                 "reduced spread of starn5t3a differs from the documented one");
    check.expect(check_spread_equivalence(db.spread,
                                          std::get<Spread>(parse_design(kReducedSpreadB))),
                 "reduced spread of starn5t3b differs from the documented one");
    check.expect(db.collineation.matrix() == GF2Matrix::parse_text(kStandardizerB),
                 "standardizing collineation of starn5t3b differs from the documented one");

    const Collineation reduced = Collineation::parse_text(kReducedIec);
    check.expect(check_spread_equivalence(apply_collineation(reduced, da.spread), db.spread),
                 "documented reduced IEC fails on the reduced spreads");

    const Collineation star_iec = Collineation::parse_text(kStarIec);
    check.expect(check_star_equivalence(apply_collineation(star_iec, a), b),
                 "documented star IEC fails on the stars");
    return finish(check,
                  "reduced spreads, standardizer and both documented IECs all verified");
}

Outcome criterion_6() {
    Check check;
    const IsoResult r =
        check_star_isomorphism(fixture_star("star_PA1"), fixture_star("star_PA2"));
    check.expect(!r.result, "mismatched stars compared isomorphic");
    check.expect(r.failure == IsoFailure::parameter_mismatch, "failure reason not set");
    check.expect(r.message == "stars are not of same dimension",
                 "unexpected message '" + r.message + "'");

    const Flat n1 = nucleus_of(fixture_star("star_PA1").rays);
    check.expect(n1.points() == std::vector<Point>{label_to_point("ABCDE", 5)},
                 "nucleus of star_PA1 is not {ABCDE}");

    std::vector<Point> expected;
    for (const char* label : {"AB", "ACD", "BCD", "ACE", "BCE", "DE", "ABDE"})
        expected.push_back(label_to_point(label, 5));
    std::sort(expected.begin(), expected.end());
    const Flat n2 = nucleus_of(fixture_star("star_PA2").rays);
    check.expect(n2.points() == expected, "nucleus of star_PA2 differs from the 7 effects");
    return finish(check, "dimension mismatch reported, both nuclei match");
}

Outcome criterion_7() {
    const Spread cyclic = cyclic_spread(4, 2, PrimitivePoly::parse("11001"));
    const Spread reference = fixture_spread("spreadn4t2a");
    Check check;
    check.expect(check_spread_equivalence(cyclic, reference),
                 "cyclic spread is not equivalent to the tabulated one");
    std::vector<Flat> lhs = cyclic.flats;
    std::vector<Flat> rhs = reference.flats;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    check.expect(lhs == rhs, "cyclic spread differs flat-for-flat under the letter convention");
    return finish(check, "cyclic construction reproduces the tabulated spread exactly");
}

Outcome criterion_8() {
    Check check;
    const std::uint64_t size = equivalence_class_size(5, 2);
    check.expect(size == 933120, "got " + std::to_string(size));
    return finish(check, "equivalence_class_size(5, 2) = 933120");
}

Outcome criterion_9() {
    Check check;
    const CriterionResult a = v_criterion(fixture_spread("spreadn4t2a"));
    check.expect(a.value == Rational(2, 9), "V of spreadn4t2a is " + a.value.to_string());
    const std::vector<Rational> pa = {Rational(2, 3), Rational(2, 3), Rational(1, 3),
                                      Rational(2, 3), Rational(1)};
    check.expect(a.proportions == pa, "p vector of spreadn4t2a differs");

    const CriterionResult alt = v_criterion(std::get<Spread>(parse_design(kAlternativeN4)));
    check.expect(alt.value == Rational(4, 9),
                 "V of the alternative spread is " + alt.value.to_string());
    const std::vector<Rational> palt = {Rational(1, 3), Rational(2, 3), Rational(1),
                                        Rational(1, 3), Rational(1)};
    check.expect(alt.proportions == palt, "p vector of the alternative spread differs");
    return finish(check, "V = 2/9 and 4/9 with the expected p vectors");
}

Outcome criterion_10() {
    const auto start = std::chrono::steady_clock::now();
    CatalogOptions opts;
    opts.budget = 100000;
    opts.rng_seed = 0;
    const auto entries = catalog_search(fixture_spread("spreadn4t2a"), opts);
    const double elapsed = seconds_since(start);

    Check check;
    check.expect(entries.size() == 1,
                 "expected one isomorphism class, got " + std::to_string(entries.size()));
    check.expect(!entries.empty() && entries.front().found_count > 0,
                 "no sampled spread landed in the class");
    check.expect(elapsed < 120.0, "took " + format_seconds(elapsed) + ", limit 120s");
    const std::string hits =
        entries.empty() ? "0" : std::to_string(entries.front().found_count);
    return finish(check, "one class, " + hits + " sampled hits, " + format_seconds(elapsed));
}

Outcome criterion_11() {
    const auto start = std::chrono::steady_clock::now();
    const Spread a = fixture_spread("spreadn4t2a");
    const Spread b = fixture_spread("spreadn4t2b");

    std::set<GF2Matrix> oracle;
    std::uint64_t invertible = 0;
    for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
        GF2Matrix m(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m.set(r, c, (bits >> (4 * r + c)) & 1u);
        if (m.rank() != 4) continue;
        ++invertible;
        if (check_spread_equivalence(apply_collineation(Collineation(m), a), b))
            oracle.insert(m);
    }

    SearchOptions opts;
    opts.find_all = true;
    const IsoResult all = check_spread_isomorphism(a, b, opts);
    std::set<GF2Matrix> found;
    for (const Collineation& c : all.collineations) found.insert(c.matrix());
    const double elapsed = seconds_since(start);

    Check check;
    check.expect(invertible == 20160,
                 "expected 20160 invertible matrices, got " + std::to_string(invertible));
    check.expect(found == oracle, "search IEC set differs from the brute-force set");
    check.expect(elapsed < 60.0, "took " + format_seconds(elapsed) + ", limit 60s");
    return finish(check, "search set equals the brute-force set over all " +
                             std::to_string(invertible) + " matrices, " +
                             format_seconds(elapsed));
}

Outcome criterion_12() {
    Check check;
    std::mt19937_64 rng(20260816);

    // collineations preserve validity on every fixture
    for (const std::string_view name : fixture_names()) {
        const Design d = fixture_design(name);
        for (int trial = 0; trial < 100; ++trial) {
            const Collineation c = random_collineation(design_dimension(d), rng);
            if (const Spread* spread = std::get_if<Spread>(&d)) {
                const Spread image = apply_collineation(c, *spread);
                if (!is_spread(image.flats, image.n, image.t).ok) {
                    check.expect(false, "collineation image of " + std::string(name) +
                                            " is not a spread");
                    break;
                }
            } else {
                const Star& star = std::get<Star>(d);
                const Star image = apply_collineation(c, star);
                if (!validate_star(image).ok || image.covering != star.covering) {
                    check.expect(false, "collineation image of " + std::string(name) +
                                            " is not a matching star");
                    break;
                }
            }
        }
    }

    // reflexive on every searchable fixture, symmetric across the known pairs
    for (const std::string_view name :
         {"spreadn4t2a", "spreadn4t2b", "spreadn6t3a", "spreadn6t3b", "spread_IC1",
          "spread_IC2"})
        check.expect(check_spread_isomorphism(fixture_spread(name), fixture_spread(name)).result,
                     "isomorphism is not reflexive on " + std::string(name));
    for (const std::string_view name : {"starn5t3a", "starn5t3b", "star_PA2"})
        check.expect(check_star_isomorphism(fixture_star(name), fixture_star(name)).result,
                     "isomorphism is not reflexive on " + std::string(name));
    const auto symmetric_spreads = [&](std::string_view x, std::string_view y) {
        const bool xy = check_spread_isomorphism(fixture_spread(x), fixture_spread(y)).result;
        const bool yx = check_spread_isomorphism(fixture_spread(y), fixture_spread(x)).result;
        check.expect(xy == yx, "asymmetric verdict between " + std::string(x) + " and " +
                                   std::string(y));
    };
    symmetric_spreads("spreadn4t2a", "spreadn4t2b");
    symmetric_spreads("spread_IC1", "spread_IC2");
    check.expect(check_star_isomorphism(fixture_star("starn5t3a"), fixture_star("starn5t3b"))
                         .result ==
                     check_star_isomorphism(fixture_star("starn5t3b"), fixture_star("starn5t3a"))
                         .result,
                 "asymmetric verdict between the reference stars");

    // equivalence equals brute-force flat matching for the n=4 designs
    const auto matching_oracle = [](const Spread& x, const Spread& y) {
        if (x.n != y.n || x.flat_count() != y.flat_count()) return false;
        std::vector<std::size_t> perm(y.flats.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        do {
            bool all = true;
            for (std::size_t i = 0; i < perm.size(); ++i)
                if (!(x.flats[i].points() == y.flats[perm[i]].points())) {
                    all = false;
                    break;
                }
            if (all) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    std::vector<Spread> small = {fixture_spread("spreadn4t2a"), fixture_spread("spreadn4t2b"),
                                 cyclic_spread(4, 2)};
    for (int trial = 0; trial < 10; ++trial) {
        const Collineation c = random_collineation(4, rng);
        small.push_back(apply_collineation(c, small[static_cast<std::size_t>(trial) % 3]));
    }
    for (const Spread& x : small)
        for (const Spread& y : small)
            check.expect(check_spread_equivalence(x, y) == matching_oracle(x, y),
                         "signature equivalence disagrees with brute-force matching");

    // every reported IEC re-verifies
    SearchOptions all_opts;
    all_opts.find_all = true;
    const IsoResult n4 = check_spread_isomorphism(fixture_spread("spreadn4t2a"),
                                                  fixture_spread("spreadn4t2b"), all_opts);
    for (const Collineation& c : n4.collineations)
        if (!check_spread_equivalence(apply_collineation(c, fixture_spread("spreadn4t2a")),
                                      fixture_spread("spreadn4t2b"))) {
            check.expect(false, "an n=4 IEC fails re-verification");
            break;
        }
    const IsoResult n6 = check_spread_isomorphism(fixture_spread("spreadn6t3a"),
                                                  fixture_spread("spreadn6t3b"));
    for (const Collineation& c : n6.collineations)
        check.expect(check_spread_equivalence(
                         apply_collineation(c, fixture_spread("spreadn6t3a")),
                         fixture_spread("spreadn6t3b")),
                     "an n=6 IEC fails re-verification");
    const IsoResult stars = check_star_isomorphism(fixture_star("starn5t3a"),
                                                   fixture_star("starn5t3b"));
    for (const Collineation& c : stars.collineations)
        check.expect(check_star_equivalence(apply_collineation(c, fixture_star("starn5t3a")),
                                            fixture_star("starn5t3b")),
                     "a star IEC fails re-verification");

    return finish(check, "validity, reflexivity, symmetry, matching oracle and "
                         "re-verification all hold");
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Outcome()>> criteria = {
        criterion_1, criterion_2, criterion_3,  criterion_4,  criterion_5,  criterion_6,
        criterion_7, criterion_8, criterion_9,  criterion_10, criterion_11, criterion_12,
    };

    int only = 0;
    if (argc > 1) {
        try {
            only = std::stoi(argv[1]);
        } catch (const std::exception&) {
            only = -1;
        }
        if (argc > 2 || only < 1 || only > static_cast<int>(criteria.size())) {
            std::cerr << "usage: " << argv[0] << " [criterion 1.."
                      << criteria.size() << "]\n";
            return 2;
        }
    }

    bool all_pass = true;
    for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) {
        if (only && k != only) continue;
        Outcome outcome;
        try {
            outcome = criteria[static_cast<std::size_t>(k - 1)]();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        all_pass = all_pass && outcome.pass;
        std::cout << "criterion " << k << ": " << (outcome.pass ? "PASS" : "FAIL") << " ("
                  << outcome.detail << ")\n";
    }
    return all_pass ? 0 : 1;
}
