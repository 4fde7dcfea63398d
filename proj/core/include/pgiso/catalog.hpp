// Ranking designs and building catalogs of non-isomorphic ones by random
// search.
//
// The V criterion measures how evenly low-order effects (order <= 2) are
// shared out: with p_i the proportion of such effects in the i-th point set,
// V = sum_i (p_i - pbar)^2, computed in exact rational arithmetic. For a
// spread the point sets are the flats; for a star, each ray minus the
// nucleus.

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pgiso/geometry.hpp"
#include "pgiso/signature.hpp"

namespace pgiso {

// Exact fraction, always normalized with positive denominator. Arithmetic
// throws std::overflow_error rather than wrapping.
class Rational {
public:
    Rational() = default;
    Rational(long long num, long long den = 1);

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string to_string() const;  // "2/9", integers without the slash

    // Fixed-point decimal, rounding half away from zero: 2/9 -> "0.22".
    std::string to_decimal_string(int places) const;

private:
    long long num_ = 0;
    long long den_ = 1;
};

// Word length of the effect (how many letters), i.e. its order.
int effect_order(const Point& p);

struct CriterionResult {
    Rational value;
    std::vector<Rational> proportions;  // p_i per point set, input order
};

CriterionResult v_criterion(std::span<const std::vector<Point>> sets);
CriterionResult v_criterion(const Spread& d);
CriterionResult v_criterion(const Star& s);

// Uniform permutation of the Yates indices 1..2^n-1 by Fisher-Yates;
// rho[k-1] is the image of index k. Draws use mt19937_64 (output fixed by
// the standard) reduced modulo the remaining range, so sequences are
// identical across platforms for a given seed.
std::vector<std::uint32_t> random_point_permutation(int n, std::mt19937_64& rng);

// Applies rho to every point of d, keeping the flat grouping: group j holds
// the images of flat j's points. The result is a candidate partition only;
// closure usually breaks, so validate downstream.
std::vector<std::vector<Point>> permute_design(const Spread& d,
                                               std::span<const std::uint32_t> rho);

// nullopt unless the groups form a valid spread.
std::optional<Spread> try_make_spread(const std::vector<std::vector<Point>>& groups,
                                      int n, int t);

struct RankedDesign {
    std::variant<Spread, Star> design;
    Rational v_value;
    std::vector<Rational> p_values;
};

struct CatalogEntry {
    RankedDesign representative;    // first member found in its class
    DesignSignature signature;      // representative's signature
    std::uint64_t found_count = 0;  // sampled permutations landing in this class
    RankedDesign min_v;             // lowest-V member seen in this class
    std::vector<Rational> seen_values;  // distinct criterion values, ascending
};

using RankingFunction = std::function<CriterionResult(const Spread&)>;

struct CatalogOptions {
    std::uint64_t budget = 0;    // number of random permutations to try
    std::uint64_t rng_seed = 0;
    RankingFunction criterion;   // defaults to v_criterion
};

// Random-permutation catalog: permutation k is generated from its own
// substream (mt19937_64 seeded with splitmix64(rng_seed + k)), so results
// are reproducible and independent of evaluation order. Candidates that
// survive the spread check are deduplicated first by signature equivalence
// against existing representatives, then by a find-first isomorphism check
// (entries whose flat word-length profiles match the candidate are tried
// first; the profile is only a scheduling hint, never a verdict). Entries
// come back sorted by representative V value, ascending.
std::vector<CatalogEntry> catalog_search(const Spread& seed, const CatalogOptions& options);

// Composes each entry's spread representative with the given nucleus into a
// star (see build_star) and re-ranks with the star criterion. found_count
// carries over from the spread classes.
std::vector<CatalogEntry> star_catalog_from_spreads(std::span<const CatalogEntry> entries,
                                                    std::span<const Point> nucleus_basis);

}  // namespace pgiso
