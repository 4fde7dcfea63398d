#include "pgiso/isomorphism.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "pgiso/signature.hpp"

namespace pgiso {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::domain_error("search space size exceeds 64 bits");
    return out;
}

std::vector<Point> canonical_basis(int n) {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.emplace_back(std::uint32_t{1} << i, n);
    return out;
}

}  // namespace

std::vector<std::vector<int>> enumerate_spanning_subsets(const Spread& d, int l0) {
    const int mu = static_cast<int>(d.flat_count());
    if (l0 < 1 || l0 > mu)
        throw std::invalid_argument("subset size out of range");
    if (l0 * d.t != d.n)
        throw std::invalid_argument("need l0 * t == n for a spanning subset of flats");

    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<std::size_t>(l0));
    for (int i = 0; i < l0; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<Point> pool;
    for (;;) {
        pool.clear();
        for (int i : idx)
            for (const Point& p : d.flats[static_cast<std::size_t>(i)].points())
                pool.push_back(p);
        if (rank_of_points(pool) == d.n) out.push_back(idx);

        // next combination in lexicographic order
        int k = l0 - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == mu - l0 + k) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < l0; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

void for_each_flat_basis(const Flat& f,
                         const std::function<bool(std::span<const Point>)>& fn) {
    const int t = f.t();
    std::vector<Point> chosen(static_cast<std::size_t>(t));
    std::uint32_t pivots[kMaxDimension] = {};

    // Depth-first over basis slots; a point qualifies when it reduces to
    // nonzero against the pivots of the points already chosen.
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == t)
            return fn(std::span<const Point>(chosen.data(), chosen.size()));
        for (const Point& p : f.points()) {
            std::uint32_t m = p.mask();
            while (m) {
                const int h = std::bit_width(m) - 1;
                if (!pivots[h]) break;
                m ^= pivots[h];
            }
            if (!m) continue;
            const int h = std::bit_width(m) - 1;
            pivots[h] = m;
            chosen[static_cast<std::size_t>(depth)] = p;
            const bool keep_going = self(self, depth + 1);
            pivots[h] = 0;
            if (!keep_going) return false;
        }
        return true;
    };
    rec(rec, 0);
}

std::vector<std::vector<Point>> enumerate_flat_bases(const Flat& f) {
    std::vector<std::vector<Point>> out;
    for_each_flat_basis(f, [&](std::span<const Point> basis) {
        out.emplace_back(basis.begin(), basis.end());
        return true;
    });
    return out;
}

namespace {

int resolve_threads(const SearchOptions& options, int max_useful) {
    int threads = options.threads;
    if (threads <= 0) {
        if (const char* env = std::getenv("PGISO_THREADS")) threads = std::atoi(env);
    }
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    return std::min(threads, std::max(1, max_useful));
}

// Fixed data for one spread sweep. The first design is pre-relabeled by
// c_xb, so each candidate is just the matrix taking the basic factors to the
// chosen target bases; the subset blocks map onto the chosen flats by
// construction and are skipped by the accept test.
struct SweepPlan {
    int n = 0;
    int t = 0;
    int l0 = 0;
    GF2Matrix c_xb;
    std::vector<std::vector<std::uint32_t>> check_flats;  // pre-relabeled, non-subset
    std::vector<int> flat_of;                             // d2: point mask -> flat index
    const Spread* d2 = nullptr;
    std::vector<std::vector<int>> subsets;                // d2-side spanning subsets
    std::vector<std::vector<int>> sigmas;                 // permutations of 0..l0-1
    std::uint64_t combos_per_subset = 1;                  // B^l0
    std::uint64_t total_units = 0;                        // subsets * B^l0
};

struct WorkerResult {
    std::vector<std::pair<std::uint64_t, GF2Matrix>> accepted;  // rank -> candidate
    SearchStats stats;
};

// Sweeps subsets [lo, hi). Candidate ranks grow strictly within a worker, so
// in find-first mode a worker stops as soon as its next rank cannot beat the
// best accepted rank seen globally.
void sweep_range(const SweepPlan& plan, int lo, int hi, bool find_all,
                 std::atomic<std::uint64_t>& best_rank,
                 std::atomic<std::uint64_t>& units_done,
                 const std::function<void(double)>& progress,
                 WorkerResult& out) {
    const int n = plan.n;
    const int t = plan.t;
    const int l0 = plan.l0;
    const std::uint64_t sigma_count = plan.sigmas.size();

    std::vector<std::vector<Point>> y_stack(static_cast<std::size_t>(l0));
    std::uint32_t col_masks[kMaxDimension];
    std::uint32_t row_masks[kMaxDimension];

    for (int s = lo; s < hi; ++s) {
        const auto& subset = plan.subsets[static_cast<std::size_t>(s)];
        std::uint64_t combo_idx = 0;
        const std::uint64_t subset_base =
            static_cast<std::uint64_t>(s) * plan.combos_per_subset * sigma_count;
        if (!find_all && subset_base > best_rank.load(std::memory_order_relaxed)) return;

        // Odometer over ordered bases, one per chosen flat, earlier flats
        // cycling slowest.
        auto descend = [&](auto&& self, int depth) -> bool {
            if (depth < l0) {
                const Flat& g = plan.d2->flats[static_cast<std::size_t>(subset[static_cast<std::size_t>(depth)])];
                bool keep_going = true;
                for_each_flat_basis(g, [&](std::span<const Point> basis) {
                    y_stack[static_cast<std::size_t>(depth)].assign(basis.begin(), basis.end());
                    keep_going = self(self, depth + 1);
                    return keep_going;
                });
                return keep_going;
            }

            const std::uint64_t combo_base = subset_base + combo_idx * sigma_count;
            if (!find_all && combo_base > best_rank.load(std::memory_order_relaxed))
                return false;

            for (std::uint64_t k = 0; k < sigma_count; ++k) {
                const auto& sigma = plan.sigmas[static_cast<std::size_t>(k)];
                const std::uint64_t rank = combo_base + k;

                for (int i = 0; i < l0; ++i) {
                    const auto& basis = y_stack[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
                    for (int j = 0; j < t; ++j)
                        col_masks[t * i + j] = basis[static_cast<std::size_t>(j)].mask();
                }
                for (int r = 0; r < n; ++r) {
                    std::uint32_t row = 0;
                    for (int c = 0; c < n; ++c) row |= ((col_masks[c] >> r) & 1u) << c;
                    row_masks[r] = row;
                }
                ++out.stats.candidates;
                ++out.stats.equivalence_checks;

                bool accepted = true;
                for (const auto& flat : plan.check_flats) {
                    auto image = [&](std::uint32_t m) {
                        std::uint32_t im = 0;
                        for (int r = 0; r < n; ++r)
                            im |= static_cast<std::uint32_t>(std::popcount(row_masks[r] & m) & 1) << r;
                        return im;
                    };
                    const int target = plan.flat_of[image(flat[0])];
                    for (std::size_t pi = 1; pi < flat.size(); ++pi)
                        if (plan.flat_of[image(flat[pi])] != target) { accepted = false; break; }
                    if (!accepted) break;
                }

                if (accepted) {
                    ++out.stats.accepted;
                    GF2Matrix m(n, n);
                    for (int r = 0; r < n; ++r)
                        for (int c = 0; c < n; ++c)
                            m.set(r, c, (row_masks[r] >> c) & 1u);
                    out.accepted.emplace_back(rank, std::move(m));
                    if (!find_all) {
                        std::uint64_t prev = best_rank.load(std::memory_order_relaxed);
                        while (prev > rank &&
                               !best_rank.compare_exchange_weak(prev, rank,
                                                                std::memory_order_relaxed)) {
                        }
                        return false;
                    }
                }
            }

            ++combo_idx;
            const std::uint64_t done = units_done.fetch_add(1, std::memory_order_relaxed) + 1;
            if (progress)
                progress(100.0 * static_cast<double>(done) /
                         static_cast<double>(plan.total_units));
            return true;
        };
        if (!descend(descend, 0)) return;
    }
}

IsoResult run_spread_search(const Spread& d1, const Spread& d2,
                            const SearchOptions& options) {
    IsoResult result;
    const int n = d1.n;
    const int t = d1.t;
    const int l0 = n / t;

    SweepPlan plan;
    plan.n = n;
    plan.t = t;
    plan.l0 = l0;
    plan.d2 = &d2;

    // First design: fix the lexicographically first spanning subset and the
    // first ordered basis of each of its flats, and relabel those bases to
    // the basic factors.
    const auto subsets1 = enumerate_spanning_subsets(d1, l0);
    const auto& u = subsets1.front();
    std::vector<Point> x_points;
    x_points.reserve(static_cast<std::size_t>(n));
    for (int i : u) {
        for_each_flat_basis(d1.flats[static_cast<std::size_t>(i)],
                            [&](std::span<const Point> basis) {
                                x_points.insert(x_points.end(), basis.begin(), basis.end());
                                return false;  // first basis only
                            });
    }
    const Collineation relabel = collineation_from_basis_map(x_points, canonical_basis(n));
    plan.c_xb = relabel.matrix();

    std::set<int> subset_set(u.begin(), u.end());
    for (std::size_t i = 0; i < d1.flats.size(); ++i) {
        if (subset_set.count(static_cast<int>(i))) continue;
        std::vector<std::uint32_t> masks;
        masks.reserve(d1.flats[i].size());
        for (const Point& p : d1.flats[i].points()) masks.push_back(relabel.apply(p).mask());
        plan.check_flats.push_back(std::move(masks));
    }

    plan.flat_of.assign(std::size_t{1} << n, -1);
    for (std::size_t fi = 0; fi < d2.flats.size(); ++fi)
        for (const Point& p : d2.flats[fi].points())
            plan.flat_of[p.mask()] = static_cast<int>(fi);

    plan.subsets = enumerate_spanning_subsets(d2, l0);

    std::vector<int> sigma(static_cast<std::size_t>(l0));
    for (int i = 0; i < l0; ++i) sigma[static_cast<std::size_t>(i)] = i;
    do {
        plan.sigmas.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::uint64_t bases_per_flat = 1;
    for (int i = 0; i < t; ++i)
        bases_per_flat = checked_mul(bases_per_flat,
                                     (std::uint64_t{1} << t) - (std::uint64_t{1} << i));
    plan.combos_per_subset = 1;
    for (int i = 0; i < l0; ++i)
        plan.combos_per_subset = checked_mul(plan.combos_per_subset, bases_per_flat);
    checked_mul(checked_mul(plan.combos_per_subset, plan.subsets.size()),
                plan.sigmas.size());  // rank arithmetic must not wrap
    plan.total_units = plan.combos_per_subset * plan.subsets.size();

    std::atomic<std::uint64_t> best_rank = ~std::uint64_t{0};
    std::atomic<std::uint64_t> units_done = 0;

    const int subset_count = static_cast<int>(plan.subsets.size());
    const int threads = options.parallel ? resolve_threads(options, subset_count) : 1;

    std::vector<WorkerResult> outputs(static_cast<std::size_t>(threads));
    if (threads == 1) {
        sweep_range(plan, 0, subset_count, options.find_all, best_rank, units_done,
                    options.progress, outputs[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        const int chunk = (subset_count + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const int lo = w * chunk;
            const int hi = std::min(subset_count, lo + chunk);
            pool.emplace_back([&, lo, hi, w] {
                sweep_range(plan, lo, hi, options.find_all, best_rank, units_done,
                            options.progress, outputs[static_cast<std::size_t>(w)]);
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<std::pair<std::uint64_t, GF2Matrix>> accepted;
    for (auto& o : outputs) {
        result.stats.candidates += o.stats.candidates;
        result.stats.equivalence_checks += o.stats.equivalence_checks;
        result.stats.accepted += o.stats.accepted;
        accepted.insert(accepted.end(), o.accepted.begin(), o.accepted.end());
    }
    std::sort(accepted.begin(), accepted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::set<GF2Matrix> seen;
    for (auto& [rank, m] : accepted) {
        if (!seen.insert(m).second) continue;
        result.collineations.emplace_back(m * plan.c_xb);
        if (!options.find_all) break;
    }

    result.result = !result.collineations.empty();

    // Reported collineations must establish the equivalence they claim.
    for (const Collineation& c : result.collineations)
        if (!check_spread_equivalence(apply_collineation(c, d1), d2))
            throw std::logic_error("search accepted a collineation that fails verification");

    return result;
}

}  // namespace

IsoResult check_spread_isomorphism(const Spread& d1, const Spread& d2,
                                   const SearchOptions& options) {
    for (const Spread* d : {&d1, &d2}) {
        auto check = is_spread(d->flats, d->n, d->t);
        if (!check.ok)
            throw std::invalid_argument("input is not a spread: " +
                                        std::string(to_string(check.defect)));
    }
    if (d1.n != d2.n || d1.t != d2.t || d1.flat_count() != d2.flat_count()) {
        IsoResult result;
        result.failure = IsoFailure::parameter_mismatch;
        result.message = "spreads do not have matching parameters";
        return result;
    }
    return run_spread_search(d1, d2, options);
}

StarDecomposition star_to_spread(const Star& s) {
    auto check = validate_star(s);
    if (!check.ok)
        throw std::invalid_argument("input is not a star: " +
                                    std::string(to_string(check.defect)));
    if (!s.covering)
        throw std::invalid_argument("only covering stars decompose into spreads");

    const int n = s.n;
    const int t0 = s.t0;
    const int m = n - t0;

    // Nucleus basis: first independent nucleus points in Yates order.
    std::vector<Point> nucleus_basis;
    for (const Point& p : s.nucleus.points()) {
        nucleus_basis.push_back(p);
        if (!points_independent(nucleus_basis)) nucleus_basis.pop_back();
        if (static_cast<int>(nucleus_basis.size()) == t0) break;
    }

    // Complete to a basis of the whole geometry with the first points (in
    // Yates order) independent of everything chosen so far.
    std::vector<Point> all = nucleus_basis;
    std::vector<Point> completion;
    for (std::uint32_t mask = 1; static_cast<int>(completion.size()) < m; ++mask) {
        Point p(mask, n);
        all.push_back(p);
        if (points_independent(all))
            completion.push_back(p);
        else
            all.pop_back();
    }

    // Completion points map to the leading factors in reverse discovery
    // order; nucleus basis points map to the trailing factors in order.
    std::vector<Point> sources(static_cast<std::size_t>(n), Point());
    for (int k = 0; k < m; ++k)
        sources[static_cast<std::size_t>(m - 1 - k)] = completion[static_cast<std::size_t>(k)];
    for (int j = 0; j < t0; ++j)
        sources[static_cast<std::size_t>(m + j)] = nucleus_basis[static_cast<std::size_t>(j)];

    const Collineation c = collineation_from_basis_map(sources, canonical_basis(n));
    const Star standardized = apply_collineation(c, s);

    // The reduced spread lives on the leading coordinates: keep the points
    // of each ray whose trailing t0 coordinates vanish.
    std::vector<Flat> flats;
    flats.reserve(standardized.rays.size());
    const std::uint32_t leading = (std::uint32_t{1} << m) - 1;
    for (const Flat& ray : standardized.rays) {
        std::vector<Point> pts;
        for (const Point& p : ray.points())
            if ((p.mask() & ~leading) == 0) pts.emplace_back(p.mask(), m);
        flats.push_back(Flat::from_points(std::move(pts)));
    }

    StarDecomposition out{make_spread(std::move(flats), m, s.t - t0), c, s.nucleus};
    return out;
}

std::string format_percent(double percent) {
    const long long hundredths = std::llround(percent * 100.0);
    std::string out = std::to_string(hundredths / 100);
    const long long frac = std::llabs(hundredths % 100);
    if (frac != 0) {
        out += '.';
        out += static_cast<char>('0' + frac / 10);
        if (frac % 10 != 0) out += static_cast<char>('0' + frac % 10);
    }
    return out;
}

IsoResult check_star_isomorphism(const Star& s1, const Star& s2,
                                 const SearchOptions& options) {
    if (s1.rays.empty() || s2.rays.empty())
        throw std::invalid_argument("star isomorphism needs nonempty ray families");

    // Shallow parameters first: families with different geometry or flat
    // dimensions can never be isomorphic, whatever else is wrong with them.
    if (s1.n != s2.n || s1.ray_count() != s2.ray_count() ||
        s1.rays[0].size() != s2.rays[0].size() ||
        s1.nucleus.size() != s2.nucleus.size()) {
        IsoResult result;
        result.failure = IsoFailure::parameter_mismatch;
        result.message = "stars are not of same dimension";
        return result;
    }

    for (const Star* s : {&s1, &s2}) {
        auto check = validate_star(*s);
        if (!check.ok)
            throw std::invalid_argument("input is not a star: " +
                                        std::string(to_string(check.defect)));
        if (!s->covering)
            throw std::invalid_argument("star isomorphism needs covering stars");
    }

    const StarDecomposition dec1 = star_to_spread(s1);
    const StarDecomposition dec2 = star_to_spread(s2);

    IsoResult reduced = check_spread_isomorphism(dec1.spread, dec2.spread, options);

    IsoResult result;
    result.stats = reduced.stats;
    if (!reduced.result) return result;

    // Lift each reduced collineation block-diagonally (identity on the
    // trailing nucleus coordinates) and conjugate back through the two
    // standardizing maps.
    const int n = s1.n;
    const int m = n - s1.t0;
    const Collineation c2_inv = invert(dec2.collineation);
    for (const Collineation& reduced_c : reduced.collineations) {
        GF2Matrix lift(n, n);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) lift.set(r, c, reduced_c.matrix().at(r, c));
        for (int r = m; r < n; ++r) lift.set(r, r, true);
        const Collineation c = compose(c2_inv, compose(Collineation(std::move(lift)),
                                                       dec1.collineation));
        ++result.stats.equivalence_checks;
        if (!check_star_equivalence(apply_collineation(c, s1), s2))
            throw std::logic_error("lifted collineation fails verification");
        result.collineations.push_back(c);
    }
    result.result = !result.collineations.empty();
    return result;
}

}  // namespace pgiso
