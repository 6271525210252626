#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library's search or counting code; only the plain data types are shared.

#include <rpcover/hypergraph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using rpcover::Hypergraph;
using rpcover::Vertex;

inline int distinct(const std::vector<Vertex> & edge, const std::vector<int> & colors)
{
    std::set<int> seen;
    for (auto v : edge)
        seen.insert(colors[v]);
    return static_cast<int>(seen.size());
}

/// Calls f on every map {0..n-1} -> {0..r-1}.
inline void for_each_assignment(int n, int r, const std::function<void(const std::vector<int> &)> & f)
{
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    while (true) {
        f(a);
        int i = n - 1;
        while (i >= 0 && a[i] == r - 1)
            a[i--] = 0;
        if (i < 0)
            return;
        ++a[i];
    }
}

inline std::vector<std::vector<Vertex>> subsets(int n, int k)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v < n; ++v) {
            cur.push_back(static_cast<Vertex>(v));
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

/// k-subsets of n' vertices split into r equal consecutive blocks that meet exactly i blocks.
inline std::int64_t exactly_i(int n_prime, int k, int r, int i)
{
    const int block = n_prime / r;
    std::int64_t count = 0;
    for (const auto & e : subsets(n_prime, k)) {
        std::set<int> blocks;
        for (auto v : e)
            blocks.insert(static_cast<int>(v) / block);
        count += static_cast<int>(blocks.size()) == i;
    }
    return count;
}

/// max over all r^n colorings of the number of k-subsets with >= min(p,k) colors.
inline std::int64_t max_properly_colored(int n, int k, int r, int p)
{
    const auto edges = subsets(n, k);
    const int need = std::min(p, k);
    std::int64_t best = 0;
    for_each_assignment(n, r, [&](const std::vector<int> & a) {
        std::int64_t good = 0;
        for (const auto & e : edges)
            good += distinct(e, a) >= need;
        best = std::max(best, good);
    });
    return best;
}

/// Minimum colors c such that some c-coloring gives every edge min(p,|e|) colors.
inline int strong_chromatic(const Hypergraph & g, int p)
{
    if (g.empty())
        return 1;
    const auto edges = g.edge_list();
    for (int c = 1;; ++c) {
        bool found = false;
        for_each_assignment(g.n(), c, [&](const std::vector<int> & a) {
            if (found)
                return;
            found = std::all_of(edges.begin(), edges.end(), [&](const auto & e) {
                return distinct(e, a) >= std::min<int>(p, static_cast<int>(e.size()));
            });
        });
        if (found)
            return c;
    }
}

/// Smallest x such that x colorings (from all r^n) properly color every edge.
/// Plain set cover by increasing x over distinct edge masks; no pruning
/// beyond skipping masks that add nothing.
inline int cover_number(const Hypergraph & g, int r, int p, int x_max = 8)
{
    const auto edges = g.edge_list();
    const std::size_t m = edges.size();
    if (m == 0)
        return 1;
    const int need = std::min(p, g.k());
    std::set<std::vector<bool>> masks;
    for_each_assignment(g.n(), r, [&](const std::vector<int> & a) {
        std::vector<bool> mask(m);
        for (std::size_t i = 0; i < m; ++i)
            mask[i] = distinct(edges[i], a) >= need;
        masks.insert(mask);
    });
    const std::vector<std::vector<bool>> list(masks.begin(), masks.end());
    std::function<bool(std::vector<bool> &, int, std::size_t)> rec = [&](std::vector<bool> & covered, int left,
                                                                        std::size_t from) {
        if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
            return true;
        if (left == 0)
            return false;
        for (std::size_t j = from; j < list.size(); ++j) {
            auto next = covered;
            bool gain = false;
            for (std::size_t i = 0; i < m; ++i)
                if (list[j][i] && !next[i])
                    next[i] = gain = true;
            if (gain && rec(next, left - 1, j + 1))
                return true;
        }
        return false;
    };
    for (int x = 1; x <= x_max; ++x) {
        std::vector<bool> covered(m, false);
        if (rec(covered, x, 0))
            return x;
    }
    return -1;
}

/// Number of the r^k colorings of a single k-edge that use fewer than q colors.
inline std::int64_t edge_colorings_below(int k, int r, int q)
{
    std::int64_t count = 0;
    std::vector<Vertex> edge(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        edge[i] = static_cast<Vertex>(i);
    for_each_assignment(k, r, [&](const std::vector<int> & a) { count += distinct(edge, a) < q; });
    return count;
}

} // namespace oracle
