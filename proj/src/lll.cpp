#include <rpcover/lll.hpp>

#include <rpcover/binomial.hpp>
#include <rpcover/errors.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>

namespace rpcover {

namespace {

// x is capped so that an infeasible-looking but valid base near 1 still terminates
constexpr int kMaxX = 1 << 20;

template <typename Pred>
std::optional<int> smallest_x(double base, Pred && holds)
{
    if (!(base > 1.0))
        return std::nullopt;
    for (int x = 1; x <= kMaxX; ++x)
        if (holds(x))
            return x;
    return std::nullopt;
}

class Sampler {
public:
    Sampler(const Hypergraph & g, int r, int x, std::uint64_t seed)
        : g_(g), x_(x), rng_(seed), pick_(0, r - 1),
          colors_(static_cast<std::size_t>(x), std::vector<Color>(static_cast<std::size_t>(g.n()))), r_(r)
    {
    }

    void draw_all()
    {
        // vertex-major, matching the order of the resampling loop
        for (int v = 0; v < g_.n(); ++v)
            redraw(static_cast<Vertex>(v));
    }

    void redraw(Vertex v)
    {
        for (int i = 0; i < x_; ++i)
            colors_[i][v] = static_cast<Color>(pick_(rng_));
    }

    bool violated(std::size_t edge, int need) const
    {
        auto e = g_.edge(edge);
        for (const auto & row : colors_) {
            int distinct = 0;
            for (std::size_t a = 0; a < e.size() && distinct < need; ++a) {
                bool fresh = true;
                for (std::size_t b = 0; b < a; ++b)
                    if (row[e[a]] == row[e[b]]) {
                        fresh = false;
                        break;
                    }
                distinct += fresh;
            }
            if (distinct >= need)
                return false;
        }
        return true;
    }

    Cover cover() const
    {
        std::vector<Coloring> out;
        for (const auto & row : colors_)
            out.emplace_back(r_, row);
        return Cover(std::move(out));
    }

private:
    const Hypergraph & g_;
    int x_;
    std::mt19937_64 rng_;
    std::uniform_int_distribution<int> pick_;
    std::vector<std::vector<Color>> colors_;
    int r_;
};

void check_sampling_args(int x)
{
    if (x < 1)
        throw InvalidArgument("cover size x must be at least 1");
}

} // namespace

double lll_base(int k, int r, int p)
{
    const auto params = CoverParams::make(r, p, k);
    const double q = params.p - 1;
    return std::pow(static_cast<double>(params.r) / q, k) / static_cast<double>(binomial(params.r, params.p - 1));
}

bool lll_sufficient_condition(int k, int r, int p)
{
    return k >= 2 * p - 1 && r >= std::numbers::e * (p - 1);
}

double dependency_threshold(int k, int r, int p, int x)
{
    return std::pow(lll_base(k, r, p), x) / std::numbers::e - 1.0;
}

double edge_threshold(int k, int r, int p, int x) { return std::pow(lll_base(k, r, p), x) / 2.0; }

std::optional<int> min_x_edge_bound(std::uint64_t m, int k, int r, int p)
{
    const double base = lll_base(k, r, p);
    return smallest_x(base, [&](int x) { return static_cast<double>(m) <= std::pow(base, x) / 2.0; });
}

std::optional<int> min_x_dependency_bound(std::uint64_t d, int k, int r, int p)
{
    const double base = lll_base(k, r, p);
    return smallest_x(base, [&](int x) { return static_cast<double>(d) <= std::pow(base, x) / std::numbers::e - 1.0; });
}

std::uint64_t fewer_than_three_colorings(int k, int r)
{
    // two named colors: 2^k colorings minus the 2 monochromatic ones; plus r monochromatic
    return binomial(r, 2) * ((std::uint64_t{1} << k) - 2) + static_cast<std::uint64_t>(r);
}

SampledCover mtc_cover(const Hypergraph & g, int r, int p, int x, std::uint64_t seed, std::uint64_t max_resamples,
                       MtcMode mode)
{
    const auto params = CoverParams::make(r, p, g.k());
    check_sampling_args(x);
    if (mode == MtcMode::guaranteed) {
        const auto d = dependency(g);
        const double limit = dependency_threshold(g.k(), params.r, params.p, x);
        if (static_cast<double>(d) > limit)
            throw InvalidArgument("dependency " + std::to_string(d) + " exceeds the local lemma threshold " +
                                  std::to_string(limit) + " for x=" + std::to_string(x) + "; use forced mode");
    }

    Sampler sampler(g, params.r, x, seed);
    sampler.draw_all();

    std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(g.n()));
    for (std::size_t i = 0; i < g.num_edges(); ++i)
        for (Vertex v : g.edge(i))
            incident[v].push_back(i);

    std::set<std::size_t> bad;
    for (std::size_t i = 0; i < g.num_edges(); ++i)
        if (sampler.violated(i, params.p))
            bad.insert(i);

    std::uint64_t resamples = 0;
    while (!bad.empty()) {
        if (resamples >= max_resamples)
            throw BudgetExceeded("MTC exceeded " + std::to_string(max_resamples) + " resamples");
        ++resamples;
        const std::size_t target = *bad.begin();
        const auto e = g.edge(target);
        for (Vertex v : e)
            sampler.redraw(v);
        // only edges through the redrawn vertices can change status
        for (Vertex v : e)
            for (std::size_t j : incident[v]) {
                if (sampler.violated(j, params.p))
                    bad.insert(j);
                else
                    bad.erase(j);
            }
    }
    return {sampler.cover(), resamples};
}

SampledCover union_bound_cover(const Hypergraph & g, int r, int p, int x, std::uint64_t seed,
                               std::uint64_t max_iterations)
{
    const auto params = CoverParams::make(r, p, g.k());
    check_sampling_args(x);
    Sampler sampler(g, params.r, x, seed);
    for (std::uint64_t iteration = 1; iteration <= max_iterations; ++iteration) {
        sampler.draw_all();
        bool ok = true;
        for (std::size_t i = 0; i < g.num_edges() && ok; ++i)
            ok = !sampler.violated(i, params.p);
        if (ok)
            return {sampler.cover(), iteration};
    }
    throw BudgetExceeded("union-bound sampling exceeded " + std::to_string(max_iterations) + " draws");
}

} // namespace rpcover
