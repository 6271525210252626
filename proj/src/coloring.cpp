#include <rpcover/coloring.hpp>

#include <rpcover/errors.hpp>

#include <algorithm>
#include <string>

namespace rpcover {

Coloring::Coloring(int r, std::vector<Color> colors) : r_(r), colors_(std::move(colors))
{
    if (r < 1)
        throw InvalidArgument("a coloring needs at least one color");
    for (Color c : colors_)
        if (c >= static_cast<Color>(r))
            throw InvalidArgument("color " + std::to_string(c) + " out of range for r=" + std::to_string(r));
}

std::vector<int> Coloring::class_sizes() const
{
    std::vector<int> sizes(static_cast<std::size_t>(r_), 0);
    for (Color c : colors_)
        ++sizes[c];
    return sizes;
}

Cover::Cover(std::vector<Coloring> colorings) : colorings_(std::move(colorings))
{
    if (colorings_.empty())
        throw InvalidArgument("a cover needs at least one coloring");
    for (const auto & c : colorings_)
        if (c.r() != colorings_.front().r() || c.n() != colorings_.front().n())
            throw InvalidArgument("all colorings of a cover must share r and n");
}

CoverParams CoverParams::make(int r, int p, int k)
{
    p = std::min(p, k);
    if (p < 2)
        throw InvalidArgument("p must be at least 2, got " + std::to_string(p));
    if (p > r)
        throw InvalidArgument("p=" + std::to_string(p) + " exceeds r=" + std::to_string(r) +
                              "; no edge could ever be properly colored");
    return {r, p};
}

int distinct_colors(std::span<const Vertex> edge, const Coloring & coloring, int cap)
{
    int distinct = 0;
    for (std::size_t i = 0; i < edge.size() && distinct < cap; ++i) {
        const Color c = coloring[edge[i]];
        bool fresh = true;
        for (std::size_t j = 0; j < i; ++j)
            if (coloring[edge[j]] == c) {
                fresh = false;
                break;
            }
        distinct += fresh;
    }
    return distinct;
}

bool properly_colored(std::span<const Vertex> edge, const Coloring & coloring, int p)
{
    const int need = std::min(p, static_cast<int>(edge.size()));
    return distinct_colors(edge, coloring, need) >= need;
}

std::vector<std::size_t> uncovered_edges(const Hypergraph & g, const Cover & cover, int p)
{
    if (cover.n() != g.n())
        throw InvalidArgument("cover colors " + std::to_string(cover.n()) + " vertices but the hypergraph has " +
                              std::to_string(g.n()));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        auto e = g.edge(i);
        if (std::none_of(cover.begin(), cover.end(), [&](const Coloring & c) { return properly_colored(e, c, p); }))
            out.push_back(i);
    }
    return out;
}

} // namespace rpcover
