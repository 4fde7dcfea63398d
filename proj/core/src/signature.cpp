#include "pgiso/signature.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pgiso {

std::uint32_t yates_index(const Point& p) {
    if (p.is_zero())
        throw std::invalid_argument("the zero vector has no Yates index");
    return p.mask();
}

Point point_from_yates(std::uint32_t index, int n) {
    if (index == 0 || index > ((std::uint32_t{1} << n) - 1))
        throw std::invalid_argument("Yates index out of range");
    return Point(index, n);
}

Bitstring::Bitstring(int n) : n_(n) {
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("bitstring dimension out of range");
    length_ = (std::size_t{1} << n) - 1;
    words_.assign((length_ + 63) / 64, 0);
}

Bitstring Bitstring::of_points(std::span<const Point> points, int n) {
    Bitstring b(n);
    for (const Point& p : points) {
        if (p.dimension() != n)
            throw std::invalid_argument("bitstring over points of mixed dimensions");
        b.set(yates_index(p));
    }
    return b;
}

Bitstring Bitstring::of_flat(const Flat& f) {
    return of_points(f.points(), f.dimension());
}

bool Bitstring::test(std::uint32_t position) const {
    const std::size_t j = position - 1;
    return (words_[j >> 6] >> (63 - (j & 63))) & 1u;
}

void Bitstring::set(std::uint32_t position) {
    if (position == 0 || position > length_)
        throw std::invalid_argument("bitstring position out of range");
    const std::size_t j = position - 1;
    // High bit first inside each word keeps word comparison lexicographic.
    words_[j >> 6] |= std::uint64_t{1} << (63 - (j & 63));
}

std::size_t Bitstring::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::string Bitstring::to_string() const {
    std::string out;
    out.reserve(length_);
    for (std::uint32_t pos = 1; pos <= length_; ++pos)
        out.push_back(test(pos) ? '1' : '0');
    return out;
}

std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.words_ <=> b.words_;
}

bool operator==(const Bitstring& a, const Bitstring& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
}

DesignSignature get_bitstrings(std::span<const Flat> flats) {
    DesignSignature sig;
    sig.reserve(flats.size());
    for (const Flat& f : flats) sig.push_back(Bitstring::of_flat(f));
    std::sort(sig.begin(), sig.end());
    return sig;
}

bool check_spread_equivalence(const Spread& a, const Spread& b) {
    if (a.n != b.n || a.t != b.t || a.flat_count() != b.flat_count()) return false;
    return get_bitstrings(a.flats) == get_bitstrings(b.flats);
}

bool check_star_equivalence(const Star& a, const Star& b) {
    if (a.n != b.n || a.t != b.t || a.t0 != b.t0 || a.ray_count() != b.ray_count()) return false;
    if (a.nucleus.points() != b.nucleus.points()) return false;
    return get_bitstrings(a.rays) == get_bitstrings(b.rays);
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("equivalence class size exceeds 64 bits");
    return out;
}

std::uint64_t factorial(std::uint64_t k) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 2; i <= k; ++i) out = checked_mul(out, i);
    return out;
}

}  // namespace

std::uint64_t equivalence_class_size(std::uint64_t mu, std::uint64_t t) {
    if (mu == 0 || t == 0)
        throw std::invalid_argument("equivalence class size needs mu >= 1 and t >= 1");
    if (t >= 64)
        throw std::overflow_error("equivalence class size exceeds 64 bits");
    const std::uint64_t flat_perms = factorial((std::uint64_t{1} << t) - 1);
    std::uint64_t out = factorial(mu);
    for (std::uint64_t i = 0; i < mu; ++i) out = checked_mul(out, flat_perms);
    return out;
}

}  // namespace pgiso
