// Linear algebra over GF(2) for projective geometries PG(n-1,2).
//
// Points of the geometry are the nonzero binary n-vectors. Coordinates are
// tied to factor letters: bit i (0-based) is letter 'A'+i, so the label "ACD"
// is the vector with bits 0, 2, 3 set. The integer value of the bit mask is
// the Yates index of the point (A=1, B=2, AB=3, C=4, ...).

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pgiso {

inline constexpr int kMaxDimension = 20;

// A binary n-vector. The zero vector is representable (it shows up as a sum
// and as the implicit origin of every subspace) but it is not a point of the
// geometry; label and Yates conversions reject it.
class Point {
public:
    Point() = default;
    Point(std::uint32_t mask, int n);

    static Point zero(int n) { return Point(0u, n); }

    int dimension() const { return n_; }
    std::uint32_t mask() const { return mask_; }
    bool is_zero() const { return mask_ == 0; }

    // 1-based coordinate access: bit(1) is letter A.
    bool bit(int letter) const { return (mask_ >> (letter - 1)) & 1u; }

    // Number of letters in the effect word (popcount).
    int order() const;

    friend Point operator+(Point a, Point b);  // GF(2) sum (XOR)

    // Mask-major ordering; for points of one geometry this is Yates order.
    friend auto operator<=>(const Point&, const Point&) = default;

private:
    std::uint32_t mask_ = 0;
    int n_ = 0;
};

// "ACD" <-> Point. Labels use the first n uppercase letters in strictly
// ascending order. Conversion rejects the zero vector and malformed labels.
std::string point_to_label(const Point& p);
Point label_to_point(std::string_view label, int n);

// All nonzero GF(2) combinations of the given vectors, sorted by Yates index.
// The result has 2^rank - 1 elements. Throws std::invalid_argument on an
// empty set or mixed dimensions.
std::vector<Point> span(std::span<const Point> basis);

// Rank of the set viewed as rows of a GF(2) matrix.
int rank_of_points(std::span<const Point> points);

bool points_independent(std::span<const Point> points);

// Dense bit matrix over GF(2), row-major bit masks. Row r holds entry (r,c)
// at bit c, so matrix * column-vector is a parity of masked rows. Indices are
// 0-based.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(int rows, int cols);

    static GF2Matrix identity(int n);
    // Column j of the result is points[j]; rows = dimension of the points.
    static GF2Matrix from_columns(std::span<const Point> columns);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool at(int r, int c) const { return (row_bits_[static_cast<std::size_t>(r)] >> c) & 1u; }
    void set(int r, int c, bool v);
    std::uint32_t row_mask(int r) const { return row_bits_[static_cast<std::size_t>(r)]; }

    Point column(int c) const;

    // Matrix * column vector.
    Point apply(const Point& p) const;

    friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

    int rank() const;

    // Rows of '0'/'1' separated by single spaces, one row per line.
    std::string to_text() const;
    static GF2Matrix parse_text(std::string_view text);

    // Total order for deduplication and deterministic reporting.
    friend std::strong_ordering operator<=>(const GF2Matrix& a, const GF2Matrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint32_t> row_bits_;
};

// Gauss-Jordan inverse. Throws std::domain_error if the matrix is not square
// or is singular.
GF2Matrix invert(const GF2Matrix& m);

}  // namespace pgiso
