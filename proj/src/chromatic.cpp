#include <rpcover/chromatic.hpp>

#include <rpcover/errors.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace rpcover {

namespace {

class ColorSearch {
public:
    ColorSearch(const Hypergraph & g, int need, int colors, std::uint64_t budget)
        : g_(g), need_(need), colors_(colors), budget_(budget), assignment_(static_cast<std::size_t>(g.n()), 0),
          touching_(static_cast<std::size_t>(g.n()))
    {
        for (std::size_t i = 0; i < g.num_edges(); ++i) {
            auto e = g.edge(i);
            for (Vertex v : e)
                touching_[v].push_back(i);
        }
    }

    bool run() { return assign(0, 0); }

private:
    // Distinct colors on the assigned part of edge i plus its unassigned
    // vertices must still reach the requirement.
    bool feasible(std::size_t i, Vertex upto) const
    {
        auto e = g_.edge(i);
        int distinct = 0;
        int open = 0;
        for (std::size_t a = 0; a < e.size(); ++a) {
            if (e[a] > upto) {
                ++open;
                continue;
            }
            bool fresh = true;
            for (std::size_t b = 0; b < a; ++b)
                if (assignment_[e[b]] == assignment_[e[a]]) {
                    fresh = false;
                    break;
                }
            distinct += fresh;
        }
        return distinct + open >= need_;
    }

    bool assign(Vertex v, int used)
    {
        if (++nodes_ > budget_)
            throw BudgetExceeded("p-strong coloring search exceeded " + std::to_string(budget_) + " nodes");
        if (v == static_cast<Vertex>(g_.n()))
            return true;
        const int limit = std::min(used + 1, colors_);
        for (int c = 0; c < limit; ++c) {
            assignment_[v] = c;
            bool ok = true;
            for (std::size_t i : touching_[v])
                if (!feasible(i, v)) {
                    ok = false;
                    break;
                }
            if (ok && assign(v + 1, std::max(used, c + 1)))
                return true;
        }
        return false;
    }

    const Hypergraph & g_;
    int need_;
    int colors_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> assignment_;
    std::vector<std::vector<std::size_t>> touching_;
};

} // namespace

bool p_strong_colorable(const Hypergraph & g, int p, int colors, std::uint64_t node_budget)
{
    if (p < 2)
        throw InvalidArgument("p must be at least 2");
    const int need = std::min(p, g.k());
    if (g.empty())
        return colors >= 1;
    if (colors < need)
        return false;
    return ColorSearch(g, need, colors, node_budget).run();
}

int strong_chromatic_number(const Hypergraph & g, int p, std::uint64_t node_budget)
{
    if (p < 2)
        throw InvalidArgument("p must be at least 2");
    if (g.empty())
        return 1;
    const int need = std::min(p, g.k());
    const Hypergraph target = need == g.k() && g.k() > 2 ? two_section(g) : g;
    const int target_p = need == g.k() ? 2 : need;
    for (int colors = need; colors <= g.n(); ++colors)
        if (p_strong_colorable(target, target_p, colors, node_budget))
            return colors;
    return g.n();
}

} // namespace rpcover
