#include <rpcover/exact.hpp>

#include <rpcover/chromatic.hpp>
#include <rpcover/counting.hpp>
#include <rpcover/errors.hpp>
#include <rpcover/partitions.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <bitset>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

namespace rpcover {

namespace {

using Mask = std::bitset<kMaxExactEdges>;

struct Candidate {
    Mask mask;
    std::uint32_t size;
    std::size_t coloring;
};

// Everything the set-cover search needs: the deduplicated, undominated
// per-coloring edge masks and, per edge, which candidates cover it.
struct Instance {
    std::size_t m = 0;
    Mask all;
    std::vector<Coloring> colorings;
    std::vector<Candidate> candidates;
    std::vector<std::vector<std::uint32_t>> containing;
};

Mask mask_of(const Hypergraph & g, const Coloring & c, int p)
{
    Mask mask;
    for (std::size_t i = 0; i < g.num_edges(); ++i)
        if (properly_colored(g.edge(i), c, p))
            mask.set(i);
    return mask;
}

bool is_subset(const Mask & a, const Mask & b) { return (a & ~b).none(); }

Instance build_instance(const Hypergraph & g, const CoverParams & params, const SearchConfig & config)
{
    Instance inst;
    inst.m = g.num_edges();
    for (std::size_t i = 0; i < inst.m; ++i)
        inst.all.set(i);

    const auto count = count_set_partitions_at_most(g.n(), params.r);
    if (count > config.max_candidates)
        throw BudgetExceeded("exact search would scan " + std::to_string(count) + " canonical colorings (cap " +
                             std::to_string(config.max_candidates) + ")");

    std::unordered_map<Mask, std::size_t> seen;
    std::vector<Candidate> raw;
    for_each_restricted_growth(g.n(), params.r, [&](const std::vector<Color> & rgs) {
        Coloring c(params.r, rgs);
        Mask mask = mask_of(g, c, params.p);
        if (mask.none() || seen.contains(mask))
            return;
        seen.emplace(mask, raw.size());
        raw.push_back({mask, static_cast<std::uint32_t>(mask.count()), inst.colorings.size()});
        inst.colorings.push_back(std::move(c));
    });

    // Larger masks first; a mask contained in an earlier one is never needed.
    std::stable_sort(raw.begin(), raw.end(), [](const Candidate & a, const Candidate & b) { return a.size > b.size; });
    const bool prune_dominated = raw.size() <= 20000;
    for (const auto & c : raw) {
        if (prune_dominated &&
            std::any_of(inst.candidates.begin(), inst.candidates.end(),
                        [&](const Candidate & kept) { return is_subset(c.mask, kept.mask); }))
            continue;
        inst.candidates.push_back(c);
    }

    inst.containing.resize(inst.m);
    for (std::uint32_t i = 0; i < inst.candidates.size(); ++i)
        for (std::size_t e = 0; e < inst.m; ++e)
            if (inst.candidates[i].mask.test(e))
                inst.containing[e].push_back(i);
    return inst;
}

// sum over uncovered edges of 1 / (largest candidate overlap containing it);
// any cover needs at least this many sets.
int fractional_bound(const Instance & inst, const Mask & uncovered, std::vector<std::uint32_t> & overlap)
{
    overlap.resize(inst.candidates.size());
    for (std::size_t i = 0; i < inst.candidates.size(); ++i)
        overlap[i] = static_cast<std::uint32_t>((inst.candidates[i].mask & uncovered).count());
    double total = 0.0;
    for (std::size_t e = 0; e < inst.m; ++e) {
        if (!uncovered.test(e))
            continue;
        std::uint32_t best = 0;
        for (auto i : inst.containing[e])
            best = std::max(best, overlap[i]);
        if (best == 0)
            return std::numeric_limits<int>::max();
        total += 1.0 / best;
    }
    return static_cast<int>(std::ceil(total - 1e-9));
}

struct BranchBudgetHit {};

// Depth-limited set cover over the candidate masks for one root branch.
// Failed (uncovered set, depth) pairs are remembered across depths.
class BranchSearch {
public:
    explicit BranchSearch(const Instance & inst) : inst_(inst) {}

    // Returns true and fills `chosen` when `uncovered` can be covered with at
    // most `depth` candidates. Throws BranchBudgetHit past `budget` nodes.
    bool solve(const Mask & uncovered, int depth, std::uint64_t budget, std::vector<std::uint32_t> & chosen)
    {
        nodes_ = 0;
        budget_ = budget;
        chosen.clear();
        return dfs(uncovered, depth, chosen);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool dfs(const Mask & uncovered, int depth, std::vector<std::uint32_t> & chosen)
    {
        if (uncovered.none())
            return true;
        if (depth == 0)
            return false;
        if (++nodes_ > budget_)
            throw BranchBudgetHit{};
        if (auto it = failed_.find(uncovered); it != failed_.end() && it->second >= depth)
            return false;

        std::vector<std::uint32_t> overlap;
        const std::size_t left = uncovered.count();
        if (fractional_bound(inst_, uncovered, overlap) > depth)
            return remember(uncovered, depth);
        if (static_cast<std::size_t>(depth) < overlap.size()) {
            std::vector<std::uint32_t> top(overlap);
            std::nth_element(top.begin(), top.begin() + depth, top.end(), std::greater<>());
            std::size_t reach = 0;
            for (int i = 0; i < depth; ++i)
                reach += top[i];
            if (reach < left)
                return remember(uncovered, depth);
        }

        // branch on the uncovered edge with the fewest covering candidates
        std::size_t pick = inst_.m;
        for (std::size_t e = 0; e < inst_.m; ++e)
            if (uncovered.test(e) &&
                (pick == inst_.m || inst_.containing[e].size() < inst_.containing[pick].size()))
                pick = e;

        struct Option {
            Mask restricted;
            std::uint32_t size;
            std::uint32_t index;
        };
        std::vector<Option> options;
        for (auto i : inst_.containing[pick])
            options.push_back({inst_.candidates[i].mask & uncovered, overlap[i], i});
        std::stable_sort(options.begin(), options.end(),
                         [](const Option & a, const Option & b) { return a.size > b.size; });
        std::vector<Option> kept;
        for (const auto & o : options)
            if (std::none_of(kept.begin(), kept.end(),
                             [&](const Option & k) { return is_subset(o.restricted, k.restricted); }))
                kept.push_back(o);

        for (const auto & o : kept) {
            chosen.push_back(o.index);
            if (dfs(uncovered & ~o.restricted, depth - 1, chosen))
                return true;
            chosen.pop_back();
        }
        return remember(uncovered, depth);
    }

    bool remember(const Mask & uncovered, int depth)
    {
        if (failed_.size() > (1u << 22))
            failed_.clear();
        auto & slot = failed_[uncovered];
        slot = std::max(slot, depth);
        return false;
    }

    const Instance & inst_;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_ = 0;
    std::unordered_map<Mask, int> failed_;
};

struct RootBranch {
    Mask mask;
    Coloring coloring;
};

std::vector<RootBranch> root_branches(const Hypergraph & g, const CoverParams & params, const Instance & inst,
                                      bool vertex_symmetry)
{
    std::vector<RootBranch> roots;
    if (vertex_symmetry) {
        // any cover can be relabeled so that its first coloring is one of
        // these class-size representatives
        for (const auto & c : enumerate_canonical_colorings(g.n(), params.r, true)) {
            Mask mask = mask_of(g, c, params.p);
            if (mask.any())
                roots.push_back({mask, c});
        }
        std::stable_sort(roots.begin(), roots.end(),
                         [](const RootBranch & a, const RootBranch & b) { return a.mask.count() > b.mask.count(); });
        std::vector<RootBranch> kept;
        for (auto & r : roots)
            if (std::none_of(kept.begin(), kept.end(),
                             [&](const RootBranch & k) { return is_subset(r.mask, k.mask); }))
                kept.push_back(std::move(r));
        return kept;
    }

    std::size_t pick = 0;
    for (std::size_t e = 1; e < inst.m; ++e)
        if (inst.containing[e].size() < inst.containing[pick].size())
            pick = e;
    for (auto i : inst.containing[pick]) {
        const auto & c = inst.candidates[i];
        roots.push_back({c.mask, inst.colorings[c.coloring]});
    }
    return roots;
}

Cover greedy_cover(const Instance & inst)
{
    Mask uncovered = inst.all;
    std::vector<Coloring> picked;
    while (uncovered.any()) {
        std::size_t best = 0;
        std::size_t best_gain = 0;
        for (std::size_t i = 0; i < inst.candidates.size(); ++i) {
            const auto gain = (inst.candidates[i].mask & uncovered).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (best_gain == 0)
            throw std::logic_error("greedy cover stalled: some edge is never properly colored");
        picked.push_back(inst.colorings[inst.candidates[best].coloring]);
        uncovered &= ~inst.candidates[best].mask;
    }
    return Cover(std::move(picked));
}

enum class BranchStatus { pending, refuted, found, budget };

} // namespace

int ceil_log(std::int64_t value, int r)
{
    int t = 0;
    std::int64_t power = 1;
    while (power < value) {
        power *= r;
        ++t;
    }
    return t;
}

std::vector<Coloring> enumerate_canonical_colorings(int n, int r, bool vertex_symmetry)
{
    std::vector<Coloring> out;
    if (vertex_symmetry)
        for_each_partition_at_most(n, r, [&](const std::vector<int> & sizes) {
            out.emplace_back(r, contiguous_coloring(sizes, n));
        });
    else
        for_each_restricted_growth(n, r, [&](const std::vector<Color> & rgs) { out.emplace_back(r, rgs); });
    return out;
}

BoundsReport lower_bound_report(const Hypergraph & g, int r, int p, std::uint64_t chromatic_budget)
{
    const auto params = CoverParams::make(r, p, g.k());
    BoundsReport report;
    report.entries.push_back({"trivial", 1, "a cover holds at least one coloring"});
    if (!g.empty()) {
        report.entries.push_back({"edge-count", edge_lower_bound(g, params.r, params.p),
                                  "ceil(|E| / M(n,k,r,p))"});
        try {
            const int chi = strong_chromatic_number(g, params.p, chromatic_budget);
            report.strong_chromatic = chi;
            report.entries.push_back({"log-chromatic", ceil_log(chi, params.r),
                                      "ceil(log_r chi(G,p)) with chi(G,p) = " + std::to_string(chi)});
        } catch (const BudgetExceeded &) {
            // chi(G,p) out of reach; the bound is simply omitted
        }
    }
    for (const auto & e : report.entries)
        report.best = std::max(report.best, e.value);
    return report;
}

ExactResult exact_cover_number(const Hypergraph & g, int r, int p, const SearchConfig & config)
{
    const auto params = CoverParams::make(r, p, g.k());
    if (config.x_max < 1)
        throw InvalidArgument("x_max must be at least 1");

    ExactResult result;
    if (g.empty()) {
        result.lower = 1;
        result.upper = 1;
        result.witness = Cover({Coloring(params.r, std::vector<Color>(static_cast<std::size_t>(g.n()), 0))});
        result.bounds_used.push_back("edgeless hypergraph: cover number 1 by convention");
        return result;
    }
    if (g.num_edges() > kMaxExactEdges)
        throw InvalidArgument("exact search supports at most " + std::to_string(kMaxExactEdges) + " edges");

    const Instance inst = build_instance(g, params, config);

    const auto report = lower_bound_report(g, params.r, params.p, config.chromatic_budget);
    int lower = static_cast<int>(report.best);
    std::string lower_source = "trivial";
    for (const auto & e : report.entries) {
        result.bounds_used.push_back(e.name + " >= " + std::to_string(e.value));
        if (e.value == report.best)
            lower_source = e.name;
    }
    std::vector<std::uint32_t> scratch;
    const int fractional = fractional_bound(inst, inst.all, scratch);
    result.bounds_used.push_back("fractional >= " + std::to_string(fractional));
    if (fractional > lower) {
        lower = fractional;
        lower_source = "fractional";
    }

    Cover best = greedy_cover(inst);
    result.bounds_used.push_back("greedy <= " + std::to_string(best.size()));
    int upper = static_cast<int>(best.size());
    if (lower > upper)
        throw std::logic_error("lower bound exceeds a verified cover size");

    const bool symmetric = config.vertex_symmetry && g.is_complete();
    const auto roots = root_branches(g, params, inst, symmetric);
    std::vector<std::unique_ptr<BranchSearch>> searches;
    for (std::size_t i = 0; i < roots.size(); ++i)
        searches.push_back(std::make_unique<BranchSearch>(inst));

    auto finish = [&](int lo) {
        result.lower = lo;
        result.upper = upper;
        result.witness = best;
        return result;
    };

    for (int depth = lower; depth < upper; ++depth) {
        if (depth > config.x_max) {
            result.bounds_used.push_back("stopped at x_max = " + std::to_string(config.x_max));
            return finish(config.x_max + 1);
        }

        std::vector<BranchStatus> status(roots.size(), BranchStatus::pending);
        std::vector<std::vector<std::uint32_t>> chosen(roots.size());
        std::vector<std::uint64_t> nodes(roots.size(), 0);
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> first_found{roots.size()};

        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= roots.size())
                    return;
                if (i > first_found.load())
                    continue;
                try {
                    const bool ok = searches[i]->solve(inst.all & ~roots[i].mask, depth - 1, config.node_budget, chosen[i]);
                    status[i] = ok ? BranchStatus::found : BranchStatus::refuted;
                    if (ok) {
                        std::size_t cur = first_found.load();
                        while (i < cur && !first_found.compare_exchange_weak(cur, i)) {
                        }
                    }
                } catch (const BranchBudgetHit &) {
                    status[i] = BranchStatus::budget;
                }
                nodes[i] = searches[i]->nodes();
            }
        };

        const unsigned width = std::max(1u, std::min<unsigned>(config.parallel_width, static_cast<unsigned>(roots.size())));
        if (width == 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < width; ++t)
                pool.emplace_back(worker);
        }
        for (auto n : nodes)
            result.nodes += n;

        // the lowest-indexed decisive branch wins, so the outcome does not
        // depend on scheduling
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (status[i] == BranchStatus::refuted)
                continue;
            if (status[i] == BranchStatus::budget) {
                result.bounds_used.push_back("node budget exhausted at depth " + std::to_string(depth));
                return finish(depth);
            }
            std::vector<Coloring> picked{roots[i].coloring};
            for (auto c : chosen[i])
                picked.push_back(inst.colorings[inst.candidates[c].coloring]);
            best = Cover(std::move(picked));
            if (!verifies(g, best, params.p))
                throw std::logic_error("exact search produced an invalid cover");
            upper = static_cast<int>(best.size());
            result.bounds_used.push_back("search found a cover of size " + std::to_string(upper));
            if (result.exhausted_depth != depth - 1)
                result.bounds_used.push_back("optimal by " + lower_source + " bound");
            return finish(depth);
        }
        result.exhausted_depth = depth;
        result.bounds_used.push_back("search exhausted at depth " + std::to_string(depth));
    }

    if (result.exhausted_depth == 0)
        result.bounds_used.push_back("optimal by " + lower_source + " bound");
    return finish(upper);
}

} // namespace rpcover
