#include "pgiso/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pgiso/isomorphism.hpp"

namespace pgiso {

namespace {

long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("rational arithmetic overflow");
    return out;
}

long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("rational arithmetic overflow");
    return out;
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const long long g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num_, b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("division by zero");
    return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal_string(int places) const {
    if (places < 0) throw std::invalid_argument("negative precision");
    const bool negative = num_ < 0;
    long long rem = negative ? -num_ : num_;
    std::string digits = std::to_string(rem / den_);
    rem %= den_;
    if (places > 0) digits += '.';
    for (int i = 0; i < places; ++i) {
        rem = checked_mul(rem, 10);
        digits += static_cast<char>('0' + rem / den_);
        rem %= den_;
    }
    if (2 * rem >= den_) {
        // round the last digit up, carrying leftwards past the point
        int i = static_cast<int>(digits.size()) - 1;
        for (; i >= 0; --i) {
            if (digits[static_cast<std::size_t>(i)] == '.') continue;
            if (digits[static_cast<std::size_t>(i)] != '9') {
                ++digits[static_cast<std::size_t>(i)];
                break;
            }
            digits[static_cast<std::size_t>(i)] = '0';
        }
        if (i < 0) digits.insert(digits.begin(), '1');
    }
    return negative ? "-" + digits : digits;
}

int effect_order(const Point& p) { return p.order(); }

CriterionResult v_criterion(std::span<const std::vector<Point>> sets) {
    if (sets.empty()) throw std::invalid_argument("criterion needs at least one point set");
    CriterionResult out;
    out.proportions.reserve(sets.size());
    Rational total;
    for (const auto& set : sets) {
        if (set.empty()) throw std::invalid_argument("criterion point sets must be nonempty");
        long long low = 0;
        for (const Point& p : set)
            if (effect_order(p) <= 2) ++low;
        Rational p(low, static_cast<long long>(set.size()));
        total = total + p;
        out.proportions.push_back(p);
    }
    const Rational mean = total / Rational(static_cast<long long>(sets.size()));
    for (const Rational& p : out.proportions) {
        const Rational d = p - mean;
        out.value = out.value + d * d;
    }
    return out;
}

CriterionResult v_criterion(const Spread& d) {
    std::vector<std::vector<Point>> sets;
    sets.reserve(d.flats.size());
    for (const Flat& f : d.flats) sets.push_back(f.points());
    return v_criterion(sets);
}

CriterionResult v_criterion(const Star& s) {
    std::vector<std::vector<Point>> sets;
    sets.reserve(s.rays.size());
    for (const Flat& ray : s.rays) {
        std::vector<Point> pts;
        for (const Point& p : ray.points())
            if (!s.nucleus.contains(p)) pts.push_back(p);
        sets.push_back(std::move(pts));
    }
    return v_criterion(sets);
}

std::vector<std::uint32_t> random_point_permutation(int n, std::mt19937_64& rng) {
    if (n < 1 || n > kMaxDimension) throw std::invalid_argument("dimension out of range");
    const std::uint32_t m = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> rho(m);
    for (std::uint32_t k = 0; k < m; ++k) rho[k] = k + 1;
    for (std::uint32_t i = m - 1; i > 0; --i) {
        const std::uint32_t j = static_cast<std::uint32_t>(rng() % (i + 1));
        std::swap(rho[i], rho[j]);
    }
    return rho;
}

std::vector<std::vector<Point>> permute_design(const Spread& d,
                                               std::span<const std::uint32_t> rho) {
    if (rho.size() != (std::size_t{1} << d.n) - 1)
        throw std::invalid_argument("permutation length does not match the geometry");
    std::vector<std::vector<Point>> groups;
    groups.reserve(d.flats.size());
    for (const Flat& f : d.flats) {
        std::vector<Point> pts;
        pts.reserve(f.size());
        for (const Point& p : f.points()) pts.emplace_back(rho[p.mask() - 1], d.n);
        groups.push_back(std::move(pts));
    }
    return groups;
}

std::optional<Spread> try_make_spread(const std::vector<std::vector<Point>>& groups,
                                      int n, int t) {
    std::vector<Flat> flats;
    flats.reserve(groups.size());
    try {
        for (const auto& g : groups) flats.push_back(Flat::from_points(g));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (!is_spread(flats, n, t).ok) return std::nullopt;
    return Spread{n, t, std::move(flats)};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Multiset of per-flat word-length multisets. Not an isomorphism invariant
// (collineations move word lengths around), so this only orders the entries
// a candidate is compared against.
std::vector<std::vector<int>> length_profile(const Spread& d) {
    std::vector<std::vector<int>> profile;
    profile.reserve(d.flats.size());
    for (const Flat& f : d.flats) {
        std::vector<int> lens;
        lens.reserve(f.size());
        for (const Point& p : f.points()) lens.push_back(effect_order(p));
        std::sort(lens.begin(), lens.end());
        profile.push_back(std::move(lens));
    }
    std::sort(profile.begin(), profile.end());
    return profile;
}

void insert_value(std::vector<Rational>& values, const Rational& v) {
    const auto it = std::lower_bound(values.begin(), values.end(), v);
    if (it == values.end() || !(*it == v)) values.insert(it, v);
}

}  // namespace

std::vector<CatalogEntry> catalog_search(const Spread& seed, const CatalogOptions& options) {
    {
        const auto check = is_spread(seed.flats, seed.n, seed.t);
        if (!check.ok)
            throw std::invalid_argument("catalog seed is not a spread: " +
                                        std::string(to_string(check.defect)));
    }
    const RankingFunction rank = options.criterion
                                     ? options.criterion
                                     : [](const Spread& d) { return v_criterion(d); };

    std::vector<CatalogEntry> entries;
    std::vector<std::vector<std::vector<int>>> profiles;
    auto add_entry = [&](const Spread& d, const CriterionResult& cr, std::uint64_t count) {
        RankedDesign ranked{d, cr.value, cr.proportions};
        CatalogEntry e{ranked, get_bitstrings(d.flats), count, ranked, {cr.value}};
        entries.push_back(std::move(e));
        profiles.push_back(length_profile(d));
    };
    add_entry(seed, rank(seed), 0);

    for (std::uint64_t k = 0; k < options.budget; ++k) {
        std::mt19937_64 rng(splitmix64(options.rng_seed + k));
        const auto rho = random_point_permutation(seed.n, rng);
        const auto cand = try_make_spread(permute_design(seed, rho), seed.n, seed.t);
        if (!cand) continue;

        const DesignSignature sig = get_bitstrings(cand->flats);
        std::size_t home = entries.size();
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i].signature == sig) { home = i; break; }

        if (home == entries.size()) {
            const auto profile = length_profile(*cand);
            std::vector<std::size_t> order;
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (profiles[i] == profile) order.push_back(i);
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (profiles[i] != profile) order.push_back(i);
            for (std::size_t i : order) {
                const auto& rep = std::get<Spread>(entries[i].representative.design);
                if (check_spread_isomorphism(*cand, rep, SearchOptions{}).result) {
                    home = i;
                    break;
                }
            }
        }

        const CriterionResult cr = rank(*cand);
        if (home == entries.size()) {
            add_entry(*cand, cr, 1);
        } else {
            CatalogEntry& e = entries[home];
            ++e.found_count;
            insert_value(e.seen_values, cr.value);
            if (cr.value < e.min_v.v_value)
                e.min_v = RankedDesign{*cand, cr.value, cr.proportions};
        }
    }

    std::stable_sort(entries.begin(), entries.end(),
                     [](const CatalogEntry& a, const CatalogEntry& b) {
                         return a.representative.v_value < b.representative.v_value;
                     });
    return entries;
}

std::vector<CatalogEntry> star_catalog_from_spreads(std::span<const CatalogEntry> entries,
                                                    std::span<const Point> nucleus_basis) {
    std::vector<CatalogEntry> out;
    out.reserve(entries.size());
    for (const CatalogEntry& e : entries) {
        auto lift = [&](const RankedDesign& rd) {
            const Star star = build_star(std::get<Spread>(rd.design), nucleus_basis);
            const CriterionResult cr = v_criterion(star);
            return RankedDesign{star, cr.value, cr.proportions};
        };
        CatalogEntry lifted;
        lifted.representative = lift(e.representative);
        lifted.signature =
            get_bitstrings(std::get<Star>(lifted.representative.design).rays);
        lifted.found_count = e.found_count;
        lifted.min_v = lift(e.min_v);
        insert_value(lifted.seen_values, lifted.representative.v_value);
        insert_value(lifted.seen_values, lifted.min_v.v_value);
        out.push_back(std::move(lifted));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CatalogEntry& a, const CatalogEntry& b) {
                         return a.representative.v_value < b.representative.v_value;
                     });
    return out;
}

}  // namespace pgiso
