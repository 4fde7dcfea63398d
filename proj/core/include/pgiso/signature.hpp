// Rearrangement-invariant design signatures.
//
// A flat's bitstring has 2^n - 1 positions, position k (1-based, leftmost
// first) set iff the point with Yates index k belongs to the flat. Sorting a
// design's flat bitstrings lexicographically gives a signature that is
// invariant under reordering flats and reordering points within flats, so
// two designs are equivalent (equal up to such rearrangement) exactly when
// their signatures match.

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pgiso/geometry.hpp"

namespace pgiso {

// Yates index of a point: the integer whose binary digits are the point's
// coordinates, letter A least significant. Rejects the zero vector.
std::uint32_t yates_index(const Point& p);
Point point_from_yates(std::uint32_t index, int n);

class Bitstring {
public:
    explicit Bitstring(int n);
    static Bitstring of_points(std::span<const Point> points, int n);
    static Bitstring of_flat(const Flat& f);

    int geometry_dimension() const { return n_; }
    std::size_t length() const { return length_; }

    bool test(std::uint32_t position) const;  // 1-based
    void set(std::uint32_t position);
    std::size_t count() const;

    std::string to_string() const;

    // Lexicographic comparison of the rendered strings. Positions are packed
    // high-bit-first inside each word, so word order is string order.
    friend std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b);
    friend bool operator==(const Bitstring& a, const Bitstring& b);

private:
    int n_ = 0;
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

// Flat bitstrings sorted lexicographically ascending.
using DesignSignature = std::vector<Bitstring>;

DesignSignature get_bitstrings(std::span<const Flat> flats);

// Equal signatures (and, for stars, equal nuclei as point sets). Mismatched
// parameters yield false, never an error.
bool check_spread_equivalence(const Spread& a, const Spread& b);
bool check_star_equivalence(const Star& a, const Star& b);

// Number of designs equivalent to any fixed (t-1)-spread with mu flats:
// mu! * ((2^t - 1)!)^mu. Exact; throws std::overflow_error when the value
// exceeds the return type instead of wrapping.
std::uint64_t equivalence_class_size(std::uint64_t mu, std::uint64_t t);

}  // namespace pgiso
