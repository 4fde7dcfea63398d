#include "pgiso/collineation.hpp"

#include <stdexcept>

namespace pgiso {

Collineation::Collineation(GF2Matrix m) : matrix_(std::move(m)) {
    if (!is_collineation(matrix_))
        throw std::invalid_argument("a collineation must be a square invertible matrix");
}

Collineation Collineation::identity(int n) {
    return Collineation(GF2Matrix::identity(n));
}

Collineation Collineation::parse_text(std::string_view text) {
    return Collineation(GF2Matrix::parse_text(text));
}

bool is_collineation(const GF2Matrix& m) {
    return m.rows() > 0 && m.rows() == m.cols() && m.rank() == m.rows();
}

Collineation collineation_from_basis_map(std::span<const Point> sources,
                                         std::span<const Point> targets) {
    if (sources.empty() || sources.size() != targets.size())
        throw std::invalid_argument("basis map needs equally many sources and targets");
    const int n = sources[0].dimension();
    if (static_cast<int>(sources.size()) != n || targets[0].dimension() != n)
        throw std::invalid_argument("basis map needs n points of dimension n");
    GF2Matrix s = GF2Matrix::from_columns(sources);
    GF2Matrix t = GF2Matrix::from_columns(targets);
    if (s.rank() != n || t.rank() != n)
        throw std::invalid_argument("basis map endpoints must be linearly independent");
    return Collineation(t * invert(s));
}

Collineation compose(const Collineation& outer, const Collineation& inner) {
    return Collineation(outer.matrix() * inner.matrix());
}

Collineation invert(const Collineation& c) {
    return Collineation(invert(c.matrix()));
}

Flat apply_collineation(const Collineation& c, const Flat& f) {
    if (c.dimension() != f.dimension())
        throw std::invalid_argument("collineation and flat dimensions differ");
    std::vector<Point> pts;
    pts.reserve(f.size());
    for (const Point& p : f.points()) pts.push_back(c.apply(p));
    return Flat::from_points(std::move(pts));
}

Spread apply_collineation(const Collineation& c, const Spread& d) {
    if (c.dimension() != d.n)
        throw std::invalid_argument("collineation and spread dimensions differ");
    std::vector<Flat> flats;
    flats.reserve(d.flats.size());
    for (const Flat& f : d.flats) flats.push_back(apply_collineation(c, f));
    return make_spread(std::move(flats), d.n, d.t);
}

Star apply_collineation(const Collineation& c, const Star& s) {
    if (c.dimension() != s.n)
        throw std::invalid_argument("collineation and star dimensions differ");
    Star out;
    out.n = s.n;
    out.t = s.t;
    out.t0 = s.t0;
    out.rays.reserve(s.rays.size());
    for (const Flat& r : s.rays) out.rays.push_back(apply_collineation(c, r));
    out.nucleus = apply_collineation(c, s.nucleus);
    out.covering = s.covering;
    auto check = validate_star(out);
    if (!check.ok)
        throw std::invalid_argument("mapped star fails validation: " +
                                    std::string(to_string(check.defect)));
    return out;
}

Collineation random_collineation(int n, std::mt19937_64& rng) {
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("dimension out of range");
    const std::uint32_t row_mask = n == 32 ? ~0u : ((std::uint32_t{1} << n) - 1);
    for (;;) {
        GF2Matrix m(n, n);
        for (int r = 0; r < n; ++r) {
            const std::uint32_t bits = static_cast<std::uint32_t>(rng()) & row_mask;
            for (int c = 0; c < n; ++c) m.set(r, c, (bits >> c) & 1u);
        }
        if (is_collineation(m)) return Collineation(std::move(m));
    }
}

}  // namespace pgiso
