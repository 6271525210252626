#pragma once

#include <cstdint>
#include <vector>

namespace rpcover {

/// A q-subset of color classes, as a bitmask over class indices.
using ClassSet = std::uint32_t;

/// Partition of all q-subsets of {0..r-1} into groups of pairwise disjoint
/// subsets. Subproblems in one group never share a color class, so their
/// colorings can be merged into one round.
struct RoundSchedule {
    int r;
    int q;
    std::vector<std::vector<ClassSet>> groups;
};

/// ceil(C(r,q) / floor(r/q)), the number of groups Baranyai's theorem allows.
int schedule_group_count(int r, int q);

/// Schedule for the recursive step of the (r,p) construction, q = p - 1.
/// Uses the circle method for q = 2 and backtracking otherwise; always
/// returns exactly schedule_group_count(r, p - 1) groups.
RoundSchedule round_schedule(int r, int p);

} // namespace rpcover
