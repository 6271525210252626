#pragma once

#include <rpcover/coloring.hpp>
#include <rpcover/hypergraph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rpcover {

/// Largest edge count the exact search handles (edge sets are fixed-width bitsets).
inline constexpr std::size_t kMaxExactEdges = 256;

struct SearchConfig {
    int x_max = 64;                           ///< deepest cover size tried
    std::uint64_t node_budget = 20'000'000;   ///< per root branch, per depth
    bool vertex_symmetry = true;              ///< only honored for complete hypergraphs
    unsigned parallel_width = 1;              ///< worker threads over root branches
    std::uint64_t max_candidates = 2'000'000; ///< cap on canonical colorings scanned
    std::uint64_t chromatic_budget = 2'000'000;
};

/// One bound with where it came from.
struct BoundEntry {
    std::string name;
    std::int64_t value;
    std::string source;
};

struct BoundsReport {
    std::vector<BoundEntry> entries;
    std::int64_t best = 1;
    std::optional<int> strong_chromatic; ///< chi(G, p) when it was computed
};

/// Strong (r,p) cover number, or an interval when the search was cut short.
struct ExactResult {
    int lower = 1;
    std::optional<int> upper;
    std::optional<Cover> witness; ///< a verified cover of size *upper
    std::uint64_t nodes = 0;
    std::vector<std::string> bounds_used;
    /// Depth whose search ran to exhaustion without finding a cover (0 if
    /// the lower bound came from a closed-form bound alone).
    int exhausted_depth = 0;

    bool exact() const noexcept { return upper && *upper == lower; }
};

/// Canonical colorings: one per color-relabeling orbit (restricted growth
/// strings with at most r blocks), or, with vertex_symmetry, one per
/// class-size multiset.
std::vector<Coloring> enumerate_canonical_colorings(int n, int r, bool vertex_symmetry);

ExactResult exact_cover_number(const Hypergraph & g, int r, int p, const SearchConfig & config = {});

/// Lower bounds on the cover number: 1, ceil(|E| / M), ceil(log_r chi(G,p)).
BoundsReport lower_bound_report(const Hypergraph & g, int r, int p,
                                std::uint64_t chromatic_budget = 2'000'000);

/// Smallest t with r^t >= value.
int ceil_log(std::int64_t value, int r);

} // namespace rpcover
