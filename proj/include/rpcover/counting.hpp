#pragma once

#include <rpcover/coloring.hpp>
#include <rpcover/hypergraph.hpp>

#include <cstdint>
#include <vector>

namespace rpcover {

/// Number of k-subsets of n_prime vertices, split into r equal classes, whose
/// vertices fall into exactly i classes. Evaluated by inclusion-exclusion
///   C(r,i) * sum_{j=0..i} (-1)^j C(i,j) C((i-j) n'/r, k)
/// with C(a,b) = 0 for a < b.
std::int64_t exactly_i_color_count(int n_prime, int k, int r, int i);

/// Bracket on M(n,k,r,p), the most k-edges one r-coloring of n vertices can
/// properly (r,p) color.
struct MBracket {
    std::int64_t lower;     ///< clamped at 0
    std::int64_t raw_lower; ///< before clamping; may be negative
    std::int64_t upper;
    int n1; ///< floor(n/r) * r
    int n2; ///< ceil(n/r) * r
};

MBracket M_bounds(int n, int k, int r, int p);

/// Properly colored k-subsets of an n-set under a coloring with the given
/// class sizes. Only the sizes matter.
std::uint64_t properly_colored_subsets(const std::vector<int> & class_sizes, int k, int p);

struct ExactM {
    std::uint64_t value;
    Coloring witness;
};

/// Default cap on the number of class-size profiles exact_M will scan.
inline constexpr std::uint64_t kExactMGuard = 10'000'000;

/// Number of class-size profiles (partitions of n into at most r parts) that
/// exact_M would scan.
std::uint64_t exact_M_search_size(int n, int r);

/// Exact M(n,k,r,p) by scanning every coloring up to vertex and color
/// relabeling. The witness is the lexicographically smallest optimal coloring
/// among the canonical (contiguous, larger classes first) representatives.
/// Throws BudgetExceeded when the scan would exceed `guard` profiles.
ExactM exact_M(int n, int k, int r, int p, std::uint64_t guard = kExactMGuard);

/// ceil(|E| / M) using exact M when the scan is within the guard, otherwise
/// the upper end of M_bounds. 0 for an edgeless hypergraph.
std::int64_t edge_lower_bound(const Hypergraph & g, int r, int p);

} // namespace rpcover
