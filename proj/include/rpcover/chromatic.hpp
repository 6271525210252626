#pragma once

#include <rpcover/hypergraph.hpp>

#include <cstdint>

namespace rpcover {

inline constexpr std::uint64_t kDefaultChromaticBudget = 50'000'000;

/// True if some coloring with `colors` colors gives every edge at least
/// min(p, k) distinct colors. Throws BudgetExceeded past `node_budget`
/// search nodes.
bool p_strong_colorable(const Hypergraph & g, int p, int colors, std::uint64_t node_budget = kDefaultChromaticBudget);

/// p-strong chromatic number chi(G, p). For p >= k this is the chromatic
/// number of the 2-section. Edgeless hypergraphs need one color.
int strong_chromatic_number(const Hypergraph & g, int p, std::uint64_t node_budget = kDefaultChromaticBudget);

} // namespace rpcover
