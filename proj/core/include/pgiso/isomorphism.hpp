// Isomorphism checks for spreads and stars.
//
// Two designs are isomorphic when some collineation maps one onto a design
// equivalent to the other; any such matrix is an isomorphism-establishing
// collineation (IEC). The spread search fixes a spanning subset of l0 = n/t
// flats of the first design, relabels their chosen bases to the basic
// factors, and sweeps the second design's side: every spanning l0-subset of
// its flats, every ordered basis per chosen flat, every assignment
// permutation. Each candidate matrix is accepted iff it maps the first
// design onto the second exactly (as an equivalence of designs).
//
// Deterministic iteration order, which defines "first IEC": spanning subsets
// in lexicographic index order, ordered bases in enumerator order (flat
// points in Yates order, earlier basis slots cycling slowest), assignment
// permutations in lexicographic order. Parallel runs partition the subset
// loop and merge results back into this order, so serial and parallel
// searches report identical output.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pgiso/collineation.hpp"
#include "pgiso/geometry.hpp"

namespace pgiso {

struct SearchStats {
    std::uint64_t candidates = 0;          // candidate matrices built
    std::uint64_t equivalence_checks = 0;  // full accept tests run
    std::uint64_t accepted = 0;            // acceptances before deduplication
};

enum class IsoFailure {
    none,
    parameter_mismatch,  // dimensions/counts differ; reported distinctly
};

struct IsoResult {
    bool result = false;
    IsoFailure failure = IsoFailure::none;
    std::string message;
    // Deduplicated, in iteration order; find-first mode reports at most one.
    // Every listed collineation maps the first design onto a design
    // equivalent to the second.
    std::vector<Collineation> collineations;
    SearchStats stats;
};

struct SearchOptions {
    bool find_all = false;  // enumerate every IEC instead of stopping at one
    bool parallel = false;
    int threads = 0;        // 0: PGISO_THREADS env var, else hardware count
    // Called with percent in [0,100] as the sweep consumes each basis
    // combination. May be invoked from worker threads when parallel.
    std::function<void(double)> progress;
};

// Ascending index tuples (lexicographic order) of l0 flats whose union spans
// the whole geometry. Requires l0 * t == n.
std::vector<std::vector<int>> enumerate_spanning_subsets(const Spread& d, int l0);

// All ordered bases of the flat: prod_{i<t} (2^t - 2^i) tuples. The callback
// form stops early when the callback returns false; the vector form
// materializes everything (fine for t <= 4, large above that).
void for_each_flat_basis(const Flat& f,
                         const std::function<bool(std::span<const Point>)>& fn);
std::vector<std::vector<Point>> enumerate_flat_bases(const Flat& f);

// Spread isomorphism. Parameter mismatch (n, t, flat count) reports result
// false with failure parameter_mismatch; invalid spreads throw
// std::invalid_argument.
IsoResult check_spread_isomorphism(const Spread& d1, const Spread& d2,
                                   const SearchOptions& options = {});

struct StarDecomposition {
    Spread spread;             // reduced (t-t0-1)-spread of PG(n-t0-1,2)
    Collineation collineation; // maps the star's nucleus onto the trailing t0 factors
    Flat nucleus;              // the star's original nucleus
};

// Standardizes the star so its nucleus becomes the span of the t0 trailing
// basic factors, then reads the reduced spread off the leading coordinates.
// The nucleus basis maps to the trailing factors in Yates order; the greedy
// completion points (scanned in Yates order) map to the leading factors in
// reverse order of discovery. Throws std::invalid_argument unless the input
// is a valid covering star.
StarDecomposition star_to_spread(const Star& s);

// Star isomorphism: compares shallow parameters first (mismatch reports
// result false, failure parameter_mismatch, message "stars are not of same
// dimension"), then decomposes both stars and runs the spread search on the
// reduced spreads. Each reduced IEC C* lifts block-diagonally (identity on
// the trailing t0 coordinates) and conjugates back through the two
// standardizing collineations; every lifted IEC is re-verified against the
// original stars before being reported.
IsoResult check_star_isomorphism(const Star& s1, const Star& s2,
                                 const SearchOptions& options = {});

// Renders a progress percentage the way search drivers print it: rounded
// half away from zero to two decimals, trailing zeros (and a bare trailing
// dot) trimmed, so 0.2777 -> "0.28", 25.0 -> "25", 100.0 -> "100".
std::string format_percent(double percent);

}  // namespace pgiso
