#pragma once

#include <rpcover/hypergraph.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace rpcover {

using Color = std::uint32_t;

/// One r-coloring of n vertices. Empty color classes are allowed.
class Coloring {
public:
    Coloring(int r, std::vector<Color> colors);

    int r() const noexcept { return r_; }
    int n() const noexcept { return static_cast<int>(colors_.size()); }
    Color operator[](Vertex v) const noexcept { return colors_[v]; }
    const std::vector<Color> & colors() const noexcept { return colors_; }

    /// Sizes of the r color classes.
    std::vector<int> class_sizes() const;

    friend bool operator==(const Coloring &, const Coloring &) = default;
    friend auto operator<=>(const Coloring &, const Coloring &) = default;

private:
    int r_;
    std::vector<Color> colors_;
};

/// Nonempty ordered list of colorings sharing r and n.
class Cover {
public:
    explicit Cover(std::vector<Coloring> colorings);

    int r() const noexcept { return colorings_.front().r(); }
    int n() const noexcept { return colorings_.front().n(); }
    std::size_t size() const noexcept { return colorings_.size(); }
    const Coloring & operator[](std::size_t i) const noexcept { return colorings_[i]; }
    const std::vector<Coloring> & colorings() const noexcept { return colorings_; }

    auto begin() const noexcept { return colorings_.begin(); }
    auto end() const noexcept { return colorings_.end(); }

    friend bool operator==(const Cover &, const Cover &) = default;

private:
    std::vector<Coloring> colorings_;
};

/// (r, p) with p already clamped to the edge size: 2 <= p <= r.
struct CoverParams {
    int r;
    int p;

    /// Clamps p to min(p, k) and rejects anything outside 2 <= p <= r.
    static CoverParams make(int r, int p, int k);

    friend bool operator==(const CoverParams &, const CoverParams &) = default;
};

/// Number of distinct colors on the edge, stopping early once `cap` is reached.
int distinct_colors(std::span<const Vertex> edge, const Coloring & coloring, int cap);

/// At least min(p, |edge|) distinct colors appear on the edge.
bool properly_colored(std::span<const Vertex> edge, const Coloring & coloring, int p);

/// Edge indices of g that no coloring in the cover colors properly.
std::vector<std::size_t> uncovered_edges(const Hypergraph & g, const Cover & cover, int p);

inline bool verifies(const Hypergraph & g, const Cover & cover, int p) { return uncovered_edges(g, cover, p).empty(); }

} // namespace rpcover
