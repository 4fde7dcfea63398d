// Flats, spreads and covering stars of PG(n-1,2), plus the cyclic spread
// construction over GF(2^n).
//
// A (t-1)-flat is the 2^t - 1 nonzero points of a t-dimensional subspace.
// A (t-1)-spread partitions the whole point set into such flats; it exists
// exactly when t divides n. A star is a family of equal-sized flats (rays)
// whose pairwise intersections all equal one common flat (the nucleus); a
// balanced covering star St(n, mu, t, t0) additionally covers every point,
// which forces mu = (2^(n-t0) - 1) / (2^(t-t0) - 1).

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pgiso/gf2.hpp"

namespace pgiso {

// Nonzero points of a subspace, stored sorted by Yates index.
class Flat {
public:
    Flat() = default;

    // Validates closure: the set plus the origin must be a subspace. Throws
    // std::invalid_argument otherwise.
    static Flat from_points(std::vector<Point> points);
    static Flat from_basis(std::span<const Point> basis);

    int dimension() const { return n_; }      // ambient n
    int t() const { return t_; }              // subspace dimension
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    bool contains(const Point& p) const;

    friend auto operator<=>(const Flat&, const Flat&) = default;

private:
    std::vector<Point> points_;
    int n_ = 0;
    int t_ = 0;
};

// Points common to both flats, sorted by Yates index (possibly empty, not
// necessarily a flat until checked).
std::vector<Point> intersect(const Flat& a, const Flat& b);

struct Spread {
    int n = 0;
    int t = 0;
    std::vector<Flat> flats;

    std::size_t flat_count() const { return flats.size(); }
};

// rays/nucleus as parsed or built; `covering` records whether the rays cover
// every point of the geometry (a balanced covering star does; sub-families
// of one, which still have a well-defined nucleus, do not).
struct Star {
    int n = 0;
    int t = 0;   // rays are (t-1)-flats
    int t0 = 0;  // nucleus is a (t0-1)-flat
    std::vector<Flat> rays;
    Flat nucleus;
    bool covering = true;

    std::size_t ray_count() const { return rays.size(); }
};

enum class DesignDefect {
    none,
    empty,
    dimension_mismatch,  // mixed ambient n
    wrong_size,          // flat sizes unequal or not 2^t - 1
    not_closed,          // some flat is not a subspace
    not_disjoint,        // spread flats overlap
    not_covering,        // union misses points
    no_common_nucleus,   // pairwise intersections disagree or are empty
    too_few_rays,        // star detection needs at least two rays
};

std::string_view to_string(DesignDefect defect);

struct SpreadCheck {
    bool ok = false;
    DesignDefect defect = DesignDefect::none;
};

// True iff the flats are pairwise disjoint (t-1)-flats of PG(n-1,2) covering
// all 2^n - 1 points. Malformed input yields false with a reason, never an
// exception.
SpreadCheck is_spread(std::span<const Flat> flats, int n, int t);

// Validating constructor; throws std::invalid_argument quoting the defect.
Spread make_spread(std::vector<Flat> flats, int n, int t);

struct StarCheck {
    bool ok = false;
    DesignDefect defect = DesignDefect::none;
    // Populated whenever the rays share a well-defined common intersection,
    // even if the family fails the covering requirement.
    std::optional<Flat> nucleus;
};

// Detection form: true iff at least two equal-sized rays have all pairwise
// intersections equal to one common flat and together cover the geometry.
StarCheck is_star(std::span<const Flat> rays);

// Construction-side validation for a star whose nucleus is already known.
// Handles the single-ray case that detection cannot.
StarCheck validate_star(const Star& s);

// Builds a Star from rays alone (nucleus auto-detected). Accepts non-covering
// families as long as the common nucleus exists; `covering` records the
// difference. Throws std::invalid_argument when no common nucleus exists.
Star make_star(std::vector<Flat> rays);

// Common intersection of all rays. Throws std::invalid_argument if it is
// empty or not a flat.
Flat nucleus_of(std::span<const Flat> rays);

// Primitive polynomial of degree n over GF(2), constant term bit 0 through
// leading term bit n. Primitivity (the root generates all of GF(2^n)*) is
// verified on construction.
class PrimitivePoly {
public:
    PrimitivePoly(std::uint32_t coefficients, int degree);

    // Bundled polynomial for each degree 2..12.
    static PrimitivePoly built_in(int degree);

    // Coefficient string, constant term first: x^4 + x + 1 is "11001".
    static PrimitivePoly parse(std::string_view bits);

    int degree() const { return degree_; }
    std::uint32_t coefficients() const { return coeff_; }
    std::string to_string() const;

private:
    std::uint32_t coeff_ = 0;
    int degree_ = 0;
};

// Product of two field elements of GF(2^n), coordinates on the polynomial
// basis {w^0, ..., w^(n-1)} with bit i-1 holding the coefficient of w^(i-1).
Point gf_multiply(const Point& a, const Point& b, const PrimitivePoly& poly);

// Cyclic (t-1)-spread of PG(n-1,2), t | n: the powers of a primitive root w
// taken in cycles of length mu = (2^n - 1)/(2^t - 1); flat j collects
// w^(j-1), w^(j-1+mu), w^(j-1+2mu), ... Field elements become geometry
// points by the fixed convention that the coefficient of w^i belongs to
// letter n-i (so w^0 maps to the last letter).
Spread cyclic_spread(int n, int t, const PrimitivePoly& poly);
Spread cyclic_spread(int n, int t);  // built-in polynomial

// Star with nucleus span(nucleus_basis): psi is a spread of PG(n-t0-1,2)
// embedded on the leading n-t0 coordinates, and each ray is the span of a
// psi-flat together with the nucleus. The basis points live in P_n and must
// be independent of the embedded subspace.
Star build_star(const Spread& psi, std::span<const Point> nucleus_basis);

}  // namespace pgiso
