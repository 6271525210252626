#include <rpcover/construct.hpp>

#include <rpcover/binomial.hpp>
#include <rpcover/errors.hpp>
#include <rpcover/schedule.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

namespace rpcover {

namespace {

std::vector<int> balanced_sizes(int count, int r)
{
    std::vector<int> sizes(static_cast<std::size_t>(r), count / r);
    for (int c = 0; c < count % r; ++c)
        ++sizes[c];
    return sizes;
}

std::vector<Color> balanced_colors(int count, int r)
{
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(count));
    const auto sizes = balanced_sizes(count, r);
    for (int c = 0; c < r; ++c)
        colors.insert(colors.end(), static_cast<std::size_t>(sizes[c]), static_cast<Color>(c));
    return colors;
}

using Rows = std::vector<std::vector<Color>>;

// Drops rows whose properly colored edges are all colored by some other
// kept row, trying rows with the fewest such edges first.
void prune_redundant(Rows & rows, int count, int k, int p)
{
    if (rows.size() < 2)
        return;
    std::vector<Vertex> flat;
    for_each_subset(count, k, [&](std::span<const Vertex> e) { flat.insert(flat.end(), e.begin(), e.end()); });
    const std::size_t m = flat.size() / static_cast<std::size_t>(k);
    const int need = std::min(p, k);
    auto proper = [&](const std::vector<Color> & row, std::size_t e) {
        std::uint64_t mask = 0;
        for (int t = 0; t < k; ++t)
            mask |= std::uint64_t{1} << row[flat[e * k + t]];
        return std::popcount(mask) >= need;
    };

    std::vector<std::uint32_t> times(m, 0);
    std::vector<std::size_t> weight(rows.size(), 0);
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t e = 0; e < m; ++e)
            if (proper(rows[j], e)) {
                ++times[e];
                ++weight[j];
            }
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight[a] < weight[b]; });

    std::vector<bool> keep(rows.size(), true);
    for (std::size_t j : order) {
        bool spare = true;
        for (std::size_t e = 0; e < m && spare; ++e)
            if (times[e] < 2 && proper(rows[j], e))
                spare = false;
        if (!spare)
            continue;
        keep[j] = false;
        for (std::size_t e = 0; e < m; ++e)
            if (proper(rows[j], e))
                --times[e];
    }
    Rows kept;
    for (std::size_t j = 0; j < rows.size(); ++j)
        if (keep[j])
            kept.push_back(std::move(rows[j]));
    rows = std::move(kept);
}

// Covers of K^k on `count` positions depend only on count, so each size is
// built once.
class Builder {
public:
    Builder(int k, int r, int p, bool prune) : k_(k), r_(r), p_(p), prune_(prune) {}

    const Rows & build(int count)
    {
        if (auto it = memo_.find(count); it != memo_.end())
            return it->second;
        Rows rows = compute(count);
        if (prune_ && rows.size() > 1) {
            const auto edges = binomial_checked(static_cast<std::uint64_t>(count), static_cast<std::uint64_t>(k_));
            if (edges && *edges <= kPruneWork / rows.size())
                prune_redundant(rows, count, k_, p_);
        }
        return memo_.emplace(count, std::move(rows)).first->second;
    }

private:
    Rows compute(int count)
    {
        Rows rows;
        if (count < k_)
            return rows;
        const auto sizes = balanced_sizes(count, r_);
        rows.push_back(balanced_colors(count, r_));
        // sizes are non-increasing, so the first p-1 are the largest
        const int worst = std::accumulate(sizes.begin(), sizes.begin() + (p_ - 1), 0);
        if (worst <= k_ - 1)
            return rows;

        std::vector<int> offset(static_cast<std::size_t>(r_) + 1, 0);
        for (int c = 0; c < r_; ++c)
            offset[c + 1] = offset[c] + sizes[c];

        if (!schedule_)
            schedule_ = round_schedule(r_, p_);
        for (const auto & group : schedule_->groups) {
            struct Member {
                std::vector<int> positions;
                const Rows * sub;
            };
            std::vector<Member> members;
            std::size_t rounds = 0;
            for (ClassSet set : group) {
                Member mem;
                for (int c = 0; c < r_; ++c)
                    if (set & (ClassSet{1} << c))
                        for (int pos = offset[c]; pos < offset[c + 1]; ++pos)
                            mem.positions.push_back(pos);
                if (static_cast<int>(mem.positions.size()) < k_)
                    continue;
                mem.sub = &build(static_cast<int>(mem.positions.size()));
                rounds = std::max(rounds, mem.sub->size());
                members.push_back(std::move(mem));
            }
            for (std::size_t j = 0; j < rounds; ++j) {
                std::vector<Color> merged(static_cast<std::size_t>(count), 0);
                for (const auto & mem : members) {
                    const auto & row = (*mem.sub)[std::min(j, mem.sub->size() - 1)];
                    for (std::size_t t = 0; t < mem.positions.size(); ++t)
                        merged[mem.positions[t]] = row[t];
                }
                rows.push_back(std::move(merged));
            }
        }
        return rows;
    }

    int k_;
    int r_;
    int p_;
    bool prune_;
    std::optional<RoundSchedule> schedule_;
    std::map<int, Rows> memo_;
};

} // namespace

int smallest_offset(int k, int p)
{
    for (int l = 0; l <= p - 2; ++l)
        if ((k - 1 - l) % (p - 1) == 0)
            return l;
    throw InvalidArgument("no offset l in [0, p-2] with (p-1) | (k-1-l)");
}

Coloring balanced_coloring(std::span<const Vertex> vertex_set, int r)
{
    if (vertex_set.empty())
        throw InvalidArgument("balanced_coloring needs a nonempty vertex set");
    if (r < 1)
        throw InvalidArgument("balanced_coloring needs r >= 1");
    return Coloring(r, balanced_colors(static_cast<int>(vertex_set.size()), r));
}

Cover cover_general(std::span<const Vertex> vertex_set, int k, int r, int p, bool prune)
{
    if (k < 2)
        throw InvalidArgument("cover_general needs k >= 2");
    if (vertex_set.empty())
        throw InvalidArgument("cover_general needs a nonempty vertex set");
    const auto params = CoverParams::make(r, p, k);
    const int count = static_cast<int>(vertex_set.size());
    Builder builder(k, params.r, params.p, prune);
    const Rows & rows = builder.build(count);
    std::vector<Coloring> colorings;
    if (rows.empty())
        colorings.emplace_back(params.r, balanced_colors(count, params.r));
    for (const auto & row : rows)
        colorings.emplace_back(params.r, row);
    return Cover(std::move(colorings));
}

Cover cover_complete(int n, int k, int r, int p, bool prune)
{
    std::vector<Vertex> vertices(static_cast<std::size_t>(n));
    std::iota(vertices.begin(), vertices.end(), Vertex{0});
    return cover_general(vertices, k, r, p, prune);
}

SizeBound size_bound(int n, int k, int r, int p)
{
    if (n < 1 || k < 2)
        throw InvalidArgument("size_bound needs n >= 1, k >= 2");
    const auto params = CoverParams::make(r, p, k);
    const int q = params.p - 1;
    const int l = smallest_offset(k, params.p);
    const double ratio = static_cast<double>(params.r) / q;
    const double groups = schedule_group_count(params.r, q);
    const double width = k - 1 - l;
    const double depth = std::log(n / width) / std::log(ratio);
    const double exponent = std::log(groups) / std::log(ratio);
    const double raw = std::pow(n * q / (width * params.r), exponent) + depth - 1.0;

    SizeBound b{std::max(raw, 1.0), raw, l, "general"};
    if (params.r == 3 && params.p == 3)
        b.formula_id = "r3p3";
    else if (params.r == 4 && params.p == 3)
        b.formula_id = "r4p3";
    return b;
}

} // namespace rpcover
