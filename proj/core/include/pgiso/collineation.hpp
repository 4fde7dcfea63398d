// Collineations of PG(n-1,2): invertible n x n GF(2) matrices acting on
// points. Column j of the matrix is the image of the j-th basic factor, so
// the image of any effect is the GF(2) sum of the columns picked out by its
// letters.

#pragma once

#include <random>
#include <span>
#include <string>

#include "pgiso/geometry.hpp"

namespace pgiso {

class Collineation {
public:
    Collineation() = default;
    // Throws std::invalid_argument unless m is square and invertible.
    explicit Collineation(GF2Matrix m);

    static Collineation identity(int n);

    int dimension() const { return matrix_.rows(); }
    const GF2Matrix& matrix() const { return matrix_; }

    Point apply(const Point& p) const { return matrix_.apply(p); }

    // n lines of n space-separated bits (the matrix rows).
    std::string to_text() const { return matrix_.to_text(); }
    static Collineation parse_text(std::string_view text);

    friend bool operator==(const Collineation&, const Collineation&) = default;
    friend std::strong_ordering operator<=>(const Collineation& a, const Collineation& b) {
        return a.matrix_ <=> b.matrix_;
    }

private:
    GF2Matrix matrix_;
};

bool is_collineation(const GF2Matrix& m);

// The unique collineation mapping sources[i] to targets[i]. Both spans must
// be bases of the same geometry (n independent points each); the result is
// T * S^-1 for the matrices with those points as columns.
Collineation collineation_from_basis_map(std::span<const Point> sources,
                                         std::span<const Point> targets);

// compose(outer, inner) applies inner first.
Collineation compose(const Collineation& outer, const Collineation& inner);
Collineation invert(const Collineation& c);

// Pointwise application. Outputs are revalidated; a collineation always maps
// a spread to a spread and a star to a star with the mapped nucleus.
Flat apply_collineation(const Collineation& c, const Flat& f);
Spread apply_collineation(const Collineation& c, const Spread& d);
Star apply_collineation(const Collineation& c, const Star& s);

// Uniform over GL(n,2) by rejection: sample random bit matrices, keep the
// first invertible one.
Collineation random_collineation(int n, std::mt19937_64& rng);

}  // namespace pgiso
