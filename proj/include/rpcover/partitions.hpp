#pragma once

#include <rpcover/coloring.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace rpcover {

/// Partitions of n into at most r positive parts (saturating at UINT64_MAX).
std::uint64_t count_partitions_at_most(int n, int r);

/// Visits every partition of n into at most r positive parts, parts in
/// non-increasing order, starting from {n} and moving towards {1,...,1}.
void for_each_partition_at_most(int n, int r, const std::function<void(const std::vector<int> &)> & f);

/// Coloring of n vertices that gives class c the next sizes[c] vertices in order.
/// Unused trailing vertices are impossible: sizes must sum to n.
std::vector<Color> contiguous_coloring(const std::vector<int> & sizes, int n);

/// Set partitions of n elements into at most r blocks: sum_{j<=r} S(n, j),
/// saturating at UINT64_MAX.
std::uint64_t count_set_partitions_at_most(int n, int r);

/// Visits each set partition of {0..n-1} into at most r blocks once, as a
/// restricted growth string (a[0] = 0, a[i] <= 1 + max(a[0..i-1])). Order is
/// lexicographic.
void for_each_restricted_growth(int n, int r, const std::function<void(const std::vector<Color> &)> & f);

} // namespace rpcover
