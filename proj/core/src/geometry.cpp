#include "pgiso/geometry.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace pgiso {

namespace {

bool is_power_of_two_minus_one(std::size_t s) {
    return s > 0 && ((s + 1) & s) == 0;
}

int log2_size_plus_one(std::size_t s) {
    return std::bit_width(s + 1) - 1;
}

}  // namespace

Flat Flat::from_points(std::vector<Point> points) {
    if (points.empty())
        throw std::invalid_argument("a flat needs at least one point");
    const int n = points[0].dimension();
    for (const Point& p : points) {
        if (p.dimension() != n)
            throw std::invalid_argument("flat points of mixed dimensions");
        if (p.is_zero())
            throw std::invalid_argument("the zero vector is not a point of the geometry");
    }
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw std::invalid_argument("flat lists a point twice");
    // Closed under addition iff the set is as large as its span:
    // |span| = 2^rank - 1 >= |set| with equality exactly at closure.
    const int r = rank_of_points(points);
    if (points.size() != (std::size_t{1} << r) - 1)
        throw std::invalid_argument("point set is not closed under addition");
    Flat f;
    f.points_ = std::move(points);
    f.n_ = n;
    f.t_ = r;
    return f;
}

Flat Flat::from_basis(std::span<const Point> basis) {
    if (!points_independent(basis))
        throw std::invalid_argument("flat basis is not linearly independent");
    return from_points(span(basis));
}

bool Flat::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

std::vector<Point> intersect(const Flat& a, const Flat& b) {
    std::vector<Point> out;
    std::set_intersection(a.points().begin(), a.points().end(),
                          b.points().begin(), b.points().end(),
                          std::back_inserter(out));
    return out;
}

std::string_view to_string(DesignDefect defect) {
    switch (defect) {
        case DesignDefect::none: return "none";
        case DesignDefect::empty: return "empty";
        case DesignDefect::dimension_mismatch: return "dimension-mismatch";
        case DesignDefect::wrong_size: return "wrong-size";
        case DesignDefect::not_closed: return "not-closed";
        case DesignDefect::not_disjoint: return "not-disjoint";
        case DesignDefect::not_covering: return "not-covering";
        case DesignDefect::no_common_nucleus: return "no-common-nucleus";
        case DesignDefect::too_few_rays: return "too-few-rays";
    }
    return "unknown";
}

SpreadCheck is_spread(std::span<const Flat> flats, int n, int t) {
    if (flats.empty()) return {false, DesignDefect::empty};
    if (t < 1 || t > n) return {false, DesignDefect::wrong_size};
    const std::size_t flat_size = (std::size_t{1} << t) - 1;
    const std::size_t total = (std::size_t{1} << n) - 1;
    std::vector<bool> seen(total + 1, false);
    std::size_t covered = 0;
    for (const Flat& f : flats) {
        if (f.dimension() != n) return {false, DesignDefect::dimension_mismatch};
        if (f.size() != flat_size) return {false, DesignDefect::wrong_size};
        // Flat construction guarantees closure; points just get counted.
        for (const Point& p : f.points()) {
            if (seen[p.mask()]) return {false, DesignDefect::not_disjoint};
            seen[p.mask()] = true;
            ++covered;
        }
    }
    if (covered != total) return {false, DesignDefect::not_covering};
    return {true, DesignDefect::none};
}

Spread make_spread(std::vector<Flat> flats, int n, int t) {
    auto check = is_spread(flats, n, t);
    if (!check.ok)
        throw std::invalid_argument("not a spread: " + std::string(to_string(check.defect)));
    return Spread{n, t, std::move(flats)};
}

namespace {

StarCheck star_shape_check(std::span<const Flat> rays, bool need_two) {
    if (rays.empty()) return {false, DesignDefect::empty, std::nullopt};
    if (need_two && rays.size() < 2) return {false, DesignDefect::too_few_rays, std::nullopt};
    const int n = rays[0].dimension();
    const std::size_t ray_size = rays[0].size();
    for (const Flat& r : rays) {
        if (r.dimension() != n) return {false, DesignDefect::dimension_mismatch, std::nullopt};
        if (r.size() != ray_size) return {false, DesignDefect::wrong_size, std::nullopt};
    }
    return {true, DesignDefect::none, std::nullopt};
}

}  // namespace

StarCheck is_star(std::span<const Flat> rays) {
    StarCheck shape = star_shape_check(rays, /*need_two=*/true);
    if (!shape.ok) return shape;

    std::vector<Point> common = intersect(rays[0], rays[1]);
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            if (intersect(rays[i], rays[j]) != common)
                return {false, DesignDefect::no_common_nucleus, std::nullopt};
    if (common.empty())
        return {false, DesignDefect::no_common_nucleus, std::nullopt};
    if (!is_power_of_two_minus_one(common.size()) ||
        rank_of_points(common) != log2_size_plus_one(common.size()))
        return {false, DesignDefect::not_closed, std::nullopt};

    Flat nucleus = Flat::from_points(common);

    const int n = rays[0].dimension();
    std::vector<bool> seen(std::size_t{1} << n, false);
    std::size_t covered = 0;
    for (const Flat& r : rays)
        for (const Point& p : r.points())
            if (!seen[p.mask()]) { seen[p.mask()] = true; ++covered; }
    if (covered != (std::size_t{1} << n) - 1)
        return {false, DesignDefect::not_covering, nucleus};

    return {true, DesignDefect::none, nucleus};
}

StarCheck validate_star(const Star& s) {
    StarCheck shape = star_shape_check(s.rays, /*need_two=*/false);
    if (!shape.ok) return shape;
    if (s.rays[0].dimension() != s.n || s.nucleus.dimension() != s.n)
        return {false, DesignDefect::dimension_mismatch, std::nullopt};
    if (s.rays[0].size() != (std::size_t{1} << s.t) - 1 ||
        s.nucleus.size() != (std::size_t{1} << s.t0) - 1)
        return {false, DesignDefect::wrong_size, std::nullopt};

    // Every ray contains the nucleus, and pairwise intersections add nothing
    // beyond it.
    std::vector<Point> nucleus_points = s.nucleus.points();
    for (const Flat& r : s.rays)
        if (intersect(r, s.nucleus) != nucleus_points)
            return {false, DesignDefect::no_common_nucleus, std::nullopt};
    for (std::size_t i = 0; i < s.rays.size(); ++i)
        for (std::size_t j = i + 1; j < s.rays.size(); ++j)
            if (intersect(s.rays[i], s.rays[j]) != nucleus_points)
                return {false, DesignDefect::no_common_nucleus, std::nullopt};

    std::vector<bool> seen(std::size_t{1} << s.n, false);
    std::size_t covered = 0;
    for (const Flat& r : s.rays)
        for (const Point& p : r.points())
            if (!seen[p.mask()]) { seen[p.mask()] = true; ++covered; }
    const bool covers = covered == (std::size_t{1} << s.n) - 1;
    if (s.covering && !covers)
        return {false, DesignDefect::not_covering, s.nucleus};

    return {true, DesignDefect::none, s.nucleus};
}

Star make_star(std::vector<Flat> rays) {
    StarCheck shape = star_shape_check(rays, /*need_two=*/true);
    if (!shape.ok)
        throw std::invalid_argument("not a star: " + std::string(to_string(shape.defect)));
    Flat nucleus = nucleus_of(rays);

    const int n = rays[0].dimension();
    std::vector<Point> common = nucleus.points();
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            if (intersect(rays[i], rays[j]) != common)
                throw std::invalid_argument("not a star: " +
                                            std::string(to_string(DesignDefect::no_common_nucleus)));

    std::vector<bool> seen(std::size_t{1} << n, false);
    std::size_t covered = 0;
    for (const Flat& r : rays)
        for (const Point& p : r.points())
            if (!seen[p.mask()]) { seen[p.mask()] = true; ++covered; }

    Star s;
    s.n = n;
    s.t = rays[0].t();
    s.t0 = nucleus.t();
    s.rays = std::move(rays);
    s.nucleus = std::move(nucleus);
    s.covering = covered == (std::size_t{1} << n) - 1;
    return s;
}

Flat nucleus_of(std::span<const Flat> rays) {
    if (rays.empty())
        throw std::invalid_argument("nucleus of an empty ray family");
    std::vector<Point> common = rays[0].points();
    for (const Flat& r : rays.subspan(1)) {
        std::vector<Point> next;
        std::set_intersection(common.begin(), common.end(),
                              r.points().begin(), r.points().end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    if (common.empty())
        throw std::invalid_argument("rays have empty common intersection");
    if (!is_power_of_two_minus_one(common.size()) ||
        rank_of_points(common) != log2_size_plus_one(common.size()))
        throw std::invalid_argument("common intersection is not a flat");
    return Flat::from_points(std::move(common));
}

PrimitivePoly::PrimitivePoly(std::uint32_t coefficients, int degree)
    : coeff_(coefficients), degree_(degree) {
    if (degree < 1 || degree > kMaxDimension)
        throw std::invalid_argument("polynomial degree out of range");
    if ((coefficients & 1u) == 0 || ((coefficients >> degree) & 1u) == 0)
        throw std::invalid_argument("primitive polynomial needs constant and leading terms");
    if (coefficients >> (degree + 1))
        throw std::invalid_argument("polynomial has terms above its degree");
    if (degree == 1) return;  // x + 1: the group is trivial
    // Primitivity: w must generate the full multiplicative group, i.e. the
    // powers of w return to 1 only after 2^degree - 1 steps.
    const std::uint32_t one = 1u;
    const std::uint32_t period = (1u << degree) - 1;
    std::uint32_t acc = 2u;  // w itself
    std::uint32_t steps = 1;
    while (acc != one) {
        // multiply by w: shift and reduce
        acc <<= 1;
        if ((acc >> degree) & 1u) acc ^= coeff_;
        ++steps;
        if (steps > period)
            throw std::invalid_argument("polynomial is not primitive");
    }
    if (steps != period)
        throw std::invalid_argument("polynomial is not primitive");
}

PrimitivePoly PrimitivePoly::built_in(int degree) {
    // x^n + ... + 1, coefficient masks with bit i = coefficient of x^i.
    switch (degree) {
        case 2: return PrimitivePoly(0b111u, 2);                  // x^2+x+1
        case 3: return PrimitivePoly(0b1011u, 3);                 // x^3+x+1
        case 4: return PrimitivePoly(0b10011u, 4);                // x^4+x+1
        case 5: return PrimitivePoly(0b100101u, 5);               // x^5+x^2+1
        case 6: return PrimitivePoly(0b1000011u, 6);              // x^6+x+1
        case 7: return PrimitivePoly(0b10000011u, 7);             // x^7+x+1
        case 8: return PrimitivePoly(0b100011101u, 8);            // x^8+x^4+x^3+x^2+1
        case 9: return PrimitivePoly(0b1000010001u, 9);           // x^9+x^4+1
        case 10: return PrimitivePoly(0b10000001001u, 10);        // x^10+x^3+1
        case 11: return PrimitivePoly(0b100000000101u, 11);       // x^11+x^2+1
        case 12: return PrimitivePoly(0b1000001010011u, 12);      // x^12+x^6+x^4+x+1
        default:
            throw std::invalid_argument("no built-in primitive polynomial for degree " +
                                        std::to_string(degree));
    }
}

PrimitivePoly PrimitivePoly::parse(std::string_view bits) {
    if (bits.size() < 2)
        throw std::invalid_argument("polynomial needs at least degree 1");
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            mask |= 1u << i;
        else if (bits[i] != '0')
            throw std::invalid_argument("polynomial coefficients must be 0 or 1");
    }
    return PrimitivePoly(mask, static_cast<int>(bits.size()) - 1);
}

std::string PrimitivePoly::to_string() const {
    std::string out;
    for (int i = 0; i <= degree_; ++i)
        out.push_back(((coeff_ >> i) & 1u) ? '1' : '0');
    return out;
}

Point gf_multiply(const Point& a, const Point& b, const PrimitivePoly& poly) {
    const int n = poly.degree();
    if (a.dimension() != n || b.dimension() != n)
        throw std::invalid_argument("field elements must match the polynomial degree");
    // Carry-less multiply, then reduce modulo the polynomial.
    std::uint64_t acc = 0;
    for (int i = 0; i < n; ++i)
        if ((b.mask() >> i) & 1u) acc ^= static_cast<std::uint64_t>(a.mask()) << i;
    const std::uint64_t p = poly.coefficients();
    for (int d = 2 * n - 2; d >= n; --d)
        if ((acc >> d) & 1u) acc ^= p << (d - n);
    return Point(static_cast<std::uint32_t>(acc), n);
}

namespace {

// Field element (coefficients of w^0..w^(n-1), bit i = coefficient of w^i)
// to geometry point: the coefficient of w^i belongs to letter n-i.
Point field_to_point(std::uint32_t field_mask, int n) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
        if ((field_mask >> i) & 1u) mask |= 1u << (n - i - 1);
    return Point(mask, n);
}

}  // namespace

Spread cyclic_spread(int n, int t, const PrimitivePoly& poly) {
    if (poly.degree() != n)
        throw std::invalid_argument("polynomial degree must equal n");
    if (t < 1 || t > n || n % t != 0)
        throw std::invalid_argument("spreads of (t-1)-flats exist only when t divides n");

    const std::uint32_t count = (1u << n) - 1;
    const std::uint32_t mu = count / ((1u << t) - 1);

    // All powers of the primitive root; the constructor guarantees the full
    // period, so the walk visits every nonzero element exactly once.
    std::vector<std::uint32_t> powers(count);
    std::uint32_t x = 1;
    for (std::uint32_t k = 0; k < count; ++k) {
        powers[k] = x;
        x <<= 1;
        if ((x >> n) & 1u) x ^= poly.coefficients();
    }

    std::vector<Flat> flats;
    flats.reserve(mu);
    for (std::uint32_t j = 0; j < mu; ++j) {
        std::vector<Point> pts;
        pts.reserve((1u << t) - 1);
        for (std::uint32_t k = j; k < count; k += mu)
            pts.push_back(field_to_point(powers[k], n));
        flats.push_back(Flat::from_points(std::move(pts)));
    }
    return make_spread(std::move(flats), n, t);
}

Spread cyclic_spread(int n, int t) {
    return cyclic_spread(n, t, PrimitivePoly::built_in(n));
}

Star build_star(const Spread& psi, std::span<const Point> nucleus_basis) {
    if (nucleus_basis.empty())
        throw std::invalid_argument("star needs a nonempty nucleus basis");
    const int t0 = static_cast<int>(nucleus_basis.size());
    const int n = psi.n + t0;
    if (n > kMaxDimension)
        throw std::invalid_argument("star dimension exceeds the supported maximum");
    for (const Point& p : nucleus_basis)
        if (p.dimension() != n)
            throw std::invalid_argument("nucleus basis points must live in the star's geometry");
    if (!points_independent(nucleus_basis))
        throw std::invalid_argument("nucleus basis is not linearly independent");
    // Independence from the embedded subspace spanned by the leading psi.n
    // coordinates: the trailing-coordinate projections must be independent.
    {
        std::vector<Point> trailing;
        trailing.reserve(nucleus_basis.size());
        for (const Point& p : nucleus_basis)
            trailing.emplace_back(p.mask() >> psi.n, t0);
        if (rank_of_points(trailing) != t0)
            throw std::invalid_argument("nucleus basis meets the embedded subspace");
    }

    std::vector<Point> nucleus_points = span(nucleus_basis);

    std::vector<Flat> rays;
    rays.reserve(psi.flats.size());
    for (const Flat& f : psi.flats) {
        // Ray = span of the flat (reinterpreted in P_n) and the nucleus:
        // every sum of a flat point (or zero) and a nucleus point (or zero).
        std::vector<Point> pts;
        pts.reserve(((f.size() + 1) << t0) - 1);
        for (const Point& q : nucleus_points) pts.push_back(q);
        for (const Point& p : f.points()) {
            Point lifted(p.mask(), n);
            pts.push_back(lifted);
            for (const Point& q : nucleus_points) pts.push_back(lifted + q);
        }
        rays.push_back(Flat::from_points(std::move(pts)));
    }

    Star s;
    s.n = n;
    s.t = psi.t + t0;
    s.t0 = t0;
    s.rays = std::move(rays);
    s.nucleus = Flat::from_points(std::move(nucleus_points));
    s.covering = true;
    auto check = validate_star(s);
    if (!check.ok)
        throw std::invalid_argument("constructed star fails validation: " +
                                    std::string(to_string(check.defect)));
    return s;
}

}  // namespace pgiso
