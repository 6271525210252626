#include <rpcover/hypergraph.hpp>

#include <rpcover/binomial.hpp>
#include <rpcover/errors.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace rpcover {

namespace {

void check_shape(int n, int k)
{
    if (k < 2)
        throw InvalidArgument("edge size k must be at least 2, got " + std::to_string(k));
    if (n < k)
        throw InvalidArgument("vertex count n=" + std::to_string(n) + " is smaller than k=" + std::to_string(k));
}

} // namespace

Hypergraph::Hypergraph(int n, int k) : n_(n), k_(k) { check_shape(n, k); }

Hypergraph::Hypergraph(int n, int k, const std::vector<std::vector<Vertex>> & edges) : Hypergraph(n, k)
{
    std::set<std::vector<Vertex>> seen;
    flat_.reserve(edges.size() * static_cast<std::size_t>(k));
    for (const auto & raw : edges) {
        if (raw.size() != static_cast<std::size_t>(k))
            throw InvalidArgument("edge has " + std::to_string(raw.size()) + " vertices, expected " + std::to_string(k));
        std::vector<Vertex> e = raw;
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InvalidArgument("edge repeats a vertex");
        if (e.back() >= static_cast<Vertex>(n))
            throw InvalidArgument("edge vertex " + std::to_string(e.back()) + " out of range for n=" + std::to_string(n));
        if (seen.insert(e).second)
            flat_.insert(flat_.end(), e.begin(), e.end());
    }
}

Hypergraph Hypergraph::from_flat(int n, int k, std::vector<Vertex> flat)
{
    Hypergraph g(n, k);
    g.flat_ = std::move(flat);
    return g;
}

std::vector<std::vector<Vertex>> Hypergraph::edge_list() const
{
    std::vector<std::vector<Vertex>> out;
    out.reserve(num_edges());
    for (std::size_t i = 0; i < num_edges(); ++i) {
        auto e = edge(i);
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}

bool Hypergraph::is_complete() const
{
    auto total = binomial_checked(static_cast<std::uint64_t>(n_), static_cast<std::uint64_t>(k_));
    return total && *total == num_edges();
}

Hypergraph complete_hypergraph(int n, int k)
{
    check_shape(n, k);
    std::vector<Vertex> flat;
    if (auto total = binomial_checked(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)))
        flat.reserve(*total * static_cast<std::size_t>(k));
    for_each_subset(n, k, [&](std::span<const Vertex> s) { flat.insert(flat.end(), s.begin(), s.end()); });
    return Hypergraph::from_flat(n, k, std::move(flat));
}

Hypergraph random_hypergraph(int n, int k, std::size_t m, std::uint64_t seed)
{
    check_shape(n, k);
    auto total = binomial_checked(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    if (total && m > *total)
        throw InvalidArgument("requested " + std::to_string(m) + " edges but only " + std::to_string(*total) +
                              " " + std::to_string(k) + "-subsets exist");

    std::mt19937_64 rng(seed);
    std::set<std::vector<Vertex>> seen;
    std::vector<Vertex> flat;
    flat.reserve(m * static_cast<std::size_t>(k));

    if (total && m * 2 > *total) {
        // dense: sample which subsets to keep from the full list
        std::vector<std::vector<Vertex>> all;
        all.reserve(*total);
        for_each_subset(n, k, [&](std::span<const Vertex> s) { all.emplace_back(s.begin(), s.end()); });
        std::vector<std::size_t> idx(all.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        for (std::size_t i = 0; i < m; ++i)
            flat.insert(flat.end(), all[idx[i]].begin(), all[idx[i]].end());
        return Hypergraph::from_flat(n, k, std::move(flat));
    }

    std::vector<Vertex> pool(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        pool[v] = static_cast<Vertex>(v);
    while (seen.size() < m) {
        // partial Fisher-Yates for k distinct vertices
        for (int i = 0; i < k; ++i) {
            std::uniform_int_distribution<int> pick(i, n - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        std::vector<Vertex> e(pool.begin(), pool.begin() + k);
        std::sort(e.begin(), e.end());
        if (seen.insert(e).second)
            flat.insert(flat.end(), e.begin(), e.end());
    }
    return Hypergraph::from_flat(n, k, std::move(flat));
}

std::size_t dependency(const Hypergraph & g)
{
    const std::size_t m = g.num_edges();
    if (m <= 1)
        return 0;
    std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(g.n()));
    for (std::size_t i = 0; i < m; ++i)
        for (Vertex v : g.edge(i))
            incident[v].push_back(i);

    std::vector<std::size_t> stamp(m, m);
    std::size_t best = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t count = 0;
        stamp[i] = i;
        for (Vertex v : g.edge(i))
            for (std::size_t j : incident[v])
                if (stamp[j] != i) {
                    stamp[j] = i;
                    ++count;
                }
        best = std::max(best, count);
    }
    return best;
}

Hypergraph two_section(const Hypergraph & g)
{
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<char> adj(n * n, 0);
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        auto e = g.edge(i);
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                adj[e[a] * n + e[b]] = 1;
    }
    std::vector<Vertex> flat;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (adj[u * n + v]) {
                flat.push_back(static_cast<Vertex>(u));
                flat.push_back(static_cast<Vertex>(v));
            }
    return Hypergraph::from_flat(g.n(), 2, std::move(flat));
}

Hypergraph shrink(const Hypergraph & g, Vertex removed)
{
    if (g.k() < 3)
        throw InvalidArgument("shrink needs k >= 3 so the result is still at least 2-uniform");
    if (g.n() < g.k() + 1)
        throw InvalidArgument("shrink needs n >= k + 1");
    if (removed >= static_cast<Vertex>(g.n()))
        throw InvalidArgument("shrink vertex out of range");

    auto relabel = [removed](Vertex v) { return v > removed ? v - 1 : v; };
    const int k = g.k();
    std::vector<std::vector<Vertex>> out;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        auto e = g.edge(i);
        if (std::find(e.begin(), e.end(), removed) != e.end()) {
            std::vector<Vertex> f;
            for (Vertex v : e)
                if (v != removed)
                    f.push_back(relabel(v));
            out.push_back(std::move(f));
            continue;
        }
        for (int skip = 0; skip < k; ++skip) {
            std::vector<Vertex> f;
            for (int j = 0; j < k; ++j)
                if (j != skip)
                    f.push_back(relabel(e[j]));
            out.push_back(std::move(f));
        }
    }
    return Hypergraph(g.n() - 1, k - 1, out);
}

Hypergraph shrink(const Hypergraph & g) { return shrink(g, static_cast<Vertex>(g.n() - 1)); }

} // namespace rpcover
