#include <rpcover/counting.hpp>

#include <rpcover/binomial.hpp>
#include <rpcover/errors.hpp>
#include <rpcover/partitions.hpp>

#include <string>

namespace rpcover {

std::int64_t exactly_i_color_count(int n_prime, int k, int r, int i)
{
    if (r < 1 || n_prime < 0 || n_prime % r != 0)
        throw InvalidArgument("n'=" + std::to_string(n_prime) + " is not divisible by r=" + std::to_string(r));
    if (i < 1 || i > r)
        throw InvalidArgument("class count i must lie in [1, r]");
    const std::int64_t block = n_prime / r;
    std::int64_t sum = 0;
    for (int j = 0; j <= i; ++j) {
        const auto term = static_cast<std::int64_t>(binomial(i, j) * binomial((i - j) * block, k));
        sum += (j % 2 == 0) ? term : -term;
    }
    return static_cast<std::int64_t>(binomial(r, i)) * sum;
}

MBracket M_bounds(int n, int k, int r, int p)
{
    if (k < 2 || n < k)
        throw InvalidArgument("M_bounds needs n >= k >= 2");
    p = CoverParams::make(r, p, k).p;
    MBracket b{};
    b.n1 = (n / r) * r;
    b.n2 = ((n + r - 1) / r) * r;
    const auto total = static_cast<std::int64_t>(binomial(n, k));
    std::int64_t low_sum1 = 0;
    std::int64_t low_sum2 = 0;
    for (int i = 1; i <= p - 1; ++i) {
        low_sum1 += exactly_i_color_count(b.n1, k, r, i);
        low_sum2 += exactly_i_color_count(b.n2, k, r, i);
    }
    b.upper = total - low_sum1;
    b.raw_lower = total - low_sum2;
    b.lower = b.raw_lower < 0 ? 0 : b.raw_lower;
    return b;
}

std::uint64_t properly_colored_subsets(const std::vector<int> & class_sizes, int k, int p)
{
    // ways[t][j]: choose t vertices touching exactly j classes (j capped at p)
    const auto K = static_cast<std::size_t>(k);
    const auto P = static_cast<std::size_t>(std::min(p, k));
    std::vector<std::vector<std::uint64_t>> ways(K + 1, std::vector<std::uint64_t>(P + 1, 0));
    ways[0][0] = 1;
    for (int size : class_sizes) {
        if (size == 0)
            continue;
        auto next = ways;
        for (std::size_t t = 0; t <= K; ++t)
            for (std::size_t j = 0; j <= P; ++j) {
                if (ways[t][j] == 0)
                    continue;
                for (std::size_t c = 1; c <= static_cast<std::size_t>(size) && t + c <= K; ++c)
                    next[t + c][std::min(j + 1, P)] += ways[t][j] * binomial(size, static_cast<std::int64_t>(c));
            }
        ways = std::move(next);
    }
    return ways[K][P];
}

std::uint64_t exact_M_search_size(int n, int r) { return count_partitions_at_most(n, r); }

ExactM exact_M(int n, int k, int r, int p, std::uint64_t guard)
{
    if (k < 2 || n < k)
        throw InvalidArgument("exact_M needs n >= k >= 2");
    p = CoverParams::make(r, p, k).p;
    const auto profiles = exact_M_search_size(n, r);
    if (profiles > guard)
        throw BudgetExceeded("exact_M would scan " + std::to_string(profiles) + " class-size profiles (guard " +
                             std::to_string(guard) + ")");

    std::uint64_t best = 0;
    std::vector<Color> best_colors;
    for_each_partition_at_most(n, r, [&](const std::vector<int> & sizes) {
        const auto value = properly_colored_subsets(sizes, k, p);
        auto colors = contiguous_coloring(sizes, n);
        if (best_colors.empty() || value > best || (value == best && colors < best_colors)) {
            best = value;
            best_colors = std::move(colors);
        }
    });
    return {best, Coloring(r, std::move(best_colors))};
}

std::int64_t edge_lower_bound(const Hypergraph & g, int r, int p)
{
    const auto m = static_cast<std::int64_t>(g.num_edges());
    if (m == 0)
        return 0;
    const auto params = CoverParams::make(r, p, g.k());
    std::int64_t M = 0;
    if (exact_M_search_size(g.n(), params.r) <= kExactMGuard)
        M = static_cast<std::int64_t>(exact_M(g.n(), g.k(), params.r, params.p).value);
    else
        M = M_bounds(g.n(), g.k(), params.r, params.p).upper;
    if (M <= 0)
        throw InvalidArgument("no single coloring can properly color any edge");
    return (m + M - 1) / M;
}

} // namespace rpcover
