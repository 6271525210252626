#pragma once

#include <rpcover/coloring.hpp>
#include <rpcover/hypergraph.hpp>

#include <cstdint>
#include <span>
#include <string>

namespace rpcover {

/// Closed-form size bound for the divide-and-conquer construction.
struct SizeBound {
    double value;           ///< max(raw, 1)
    double raw;             ///< formula value, may dip below 1 for tiny n
    int l;                  ///< offset with (p-1) | (k-1-l)
    std::string formula_id; ///< "r3p3", "r4p3" or "general"
};

/// Work cap (edges times colorings) for the redundancy pass.
inline constexpr std::uint64_t kPruneWork = 20'000'000;

/// Smallest l in [0, p-2] with (p-1) dividing (k-1-l).
int smallest_offset(int k, int p);

/// Balanced r-coloring of the listed vertices, indexed by position in the
/// list: classes differ in size by at most one, larger classes come first,
/// and vertices are dealt out in list order.
Coloring balanced_coloring(std::span<const Vertex> vertex_set, int r);

/// Strong (r,p) cover of the complete k-uniform hypergraph on vertex_set,
/// colorings indexed by position in the list.
///
/// A balanced coloring covers every edge that meets p classes; the edges it
/// misses lie inside the union of some p-1 classes. Each such union is
/// solved recursively, and unions in the same round-schedule group occupy
/// disjoint classes, so their j-th colorings are merged into one round
/// (shorter subcovers repeat their last coloring, idle vertices get color 0).
/// The recursion stops when one balanced coloring already puts at most k-1
/// vertices into any p-1 classes.
///
/// With `prune`, each subcover (and the result) whose edge count times
/// length stays within kPruneWork drops colorings made redundant by the rest.
Cover cover_general(std::span<const Vertex> vertex_set, int k, int r, int p, bool prune = true);

/// cover_general on vertices 0..n-1.
Cover cover_complete(int n, int k, int r, int p, bool prune = true);

SizeBound size_bound(int n, int k, int r, int p);

} // namespace rpcover
