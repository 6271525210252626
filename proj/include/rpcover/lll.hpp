#pragma once

#include <rpcover/coloring.hpp>
#include <rpcover/hypergraph.hpp>

#include <cstdint>
#include <optional>

namespace rpcover {

/// r^k / ((p-1)^k C(r, p-1)): the reciprocal of the per-coloring bound on
/// an edge seeing fewer than p colors. Thresholds only help when it exceeds 1.
double lll_base(int k, int r, int p);

/// The sufficient condition k >= 2p-1 and r >= e(p-1) under which base > 1
/// is guaranteed.
bool lll_sufficient_condition(int k, int r, int p);

/// Smallest x >= 1 with m <= base^x / 2, or nullopt when base <= 1.
std::optional<int> min_x_edge_bound(std::uint64_t m, int k, int r, int p);

/// Smallest x >= 1 with d <= base^x / e - 1, or nullopt when base <= 1.
std::optional<int> min_x_dependency_bound(std::uint64_t d, int k, int r, int p);

/// base^x / e - 1, the largest dependency the local lemma tolerates for x colorings.
double dependency_threshold(int k, int r, int p, int x);

/// base^x / 2, the largest edge count the union bound tolerates for x colorings.
double edge_threshold(int k, int r, int p, int x);

/// Exact count of the r^k colorings of one k-edge that use at most two colors,
/// from the closed form C(r,2)(2^k - 2) + r.
std::uint64_t fewer_than_three_colorings(int k, int r);

struct SampledCover {
    Cover cover;
    std::uint64_t count; ///< resamples (MTC) or full draws (union bound)
};

enum class MtcMode { guaranteed, forced };

/// Moser-Tardos resampling: draw x independent r-colorings, then while some
/// edge gets fewer than min(p,k) colors in every coloring, redraw all x colors
/// of that edge's vertices. The violated edge picked is always the lowest
/// indexed one. In guaranteed mode the dependency threshold must hold.
/// Throws InvalidArgument on a failed precondition and BudgetExceeded past
/// max_resamples.
SampledCover mtc_cover(const Hypergraph & g, int r, int p, int x, std::uint64_t seed,
                       std::uint64_t max_resamples = 100'000'000, MtcMode mode = MtcMode::guaranteed);

/// Redraws all x colorings from scratch until they form a cover.
SampledCover union_bound_cover(const Hypergraph & g, int r, int p, int x, std::uint64_t seed,
                               std::uint64_t max_iterations = 1'000'000);

} // namespace rpcover
