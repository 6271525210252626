#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rpcover {

using Vertex = std::uint32_t;

/// n-vertex k-uniform hypergraph. Vertices are 0..n-1; each edge is stored
/// as a strictly increasing run of k vertices in one flat buffer. Duplicate
/// edges are dropped on construction (first occurrence wins), so edge indices
/// follow input order otherwise.
class Hypergraph {
public:
    Hypergraph(int n, int k);
    Hypergraph(int n, int k, const std::vector<std::vector<Vertex>> & edges);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    std::size_t num_edges() const noexcept { return flat_.size() / static_cast<std::size_t>(k_); }
    bool empty() const noexcept { return flat_.empty(); }

    std::span<const Vertex> edge(std::size_t i) const noexcept
    {
        return {flat_.data() + i * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
    }

    std::vector<std::vector<Vertex>> edge_list() const;

    /// True when the edge set is all C(n,k) subsets.
    bool is_complete() const;

    friend bool operator==(const Hypergraph &, const Hypergraph &) = default;

    /// Trusted construction from already sorted, duplicate-free edges.
    static Hypergraph from_flat(int n, int k, std::vector<Vertex> flat);

private:
    int n_;
    int k_;
    std::vector<Vertex> flat_;
};

/// K_n^k with edges in lexicographic order.
Hypergraph complete_hypergraph(int n, int k);

/// m distinct k-subsets drawn uniformly; deterministic in seed.
Hypergraph random_hypergraph(int n, int k, std::size_t m, std::uint64_t seed);

/// Maximum over edges of the number of other edges sharing a vertex with it.
std::size_t dependency(const Hypergraph & g);

/// Graph on the same vertices joining every pair that co-occurs in an edge,
/// returned as a 2-uniform hypergraph.
Hypergraph two_section(const Hypergraph & g);

/// Deletes `removed` and drops the uniformity by one: edges through `removed`
/// lose it, every other edge is replaced by all of its (k-1)-subsets.
/// Remaining vertices are renumbered to close the gap.
Hypergraph shrink(const Hypergraph & g, Vertex removed);

/// shrink() on the highest-indexed vertex.
Hypergraph shrink(const Hypergraph & g);

/// Calls f(span) for every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F && f)
{
    if (k < 0 || k > n)
        return;
    std::vector<Vertex> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        s[i] = static_cast<Vertex>(i);
    while (true) {
        f(std::span<const Vertex>(s));
        int i = k - 1;
        while (i >= 0 && s[i] == static_cast<Vertex>(n - k + i))
            --i;
        if (i < 0)
            return;
        ++s[i];
        for (int j = i + 1; j < k; ++j)
            s[j] = s[j - 1] + 1;
    }
}

} // namespace rpcover
