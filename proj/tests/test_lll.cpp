#include <doctest.h>

#include "oracles.hpp"

#include <rpcover/binomial.hpp>
#include <rpcover/errors.hpp>
#include <rpcover/lll.hpp>

#include <cmath>

using namespace rpcover;

TEST_CASE("lll base")
{
    CHECK(lll_base(5, 6, 3) == doctest::Approx(16.2));
    CHECK(lll_base(3, 3, 3) == doctest::Approx(1.125));
    CHECK(lll_sufficient_condition(5, 6, 3));
    CHECK_FALSE(lll_sufficient_condition(3, 3, 3));
}

TEST_CASE("min x for the edge bound")
{
    CHECK(min_x_edge_bound(100, 5, 6, 3) == 2);
    CHECK(min_x_edge_bound(1, 5, 6, 3) == 1);
    CHECK(min_x_edge_bound(1, 3, 3, 3) == 6);
    CHECK_FALSE(min_x_edge_bound(1, 4, 4, 4).has_value());
    for (std::uint64_t m : {1u, 10u, 100u, 1000u, 50000u}) {
        const auto x = min_x_edge_bound(m, 5, 6, 3);
        REQUIRE(x);
        CHECK(static_cast<double>(m) <= edge_threshold(5, 6, 3, *x));
        if (*x > 1)
            CHECK(static_cast<double>(m) > edge_threshold(5, 6, 3, *x - 1));
    }
}

TEST_CASE("min x for the dependency bound")
{
    CHECK(min_x_dependency_bound(0, 5, 6, 3) == 1);
    CHECK(min_x_dependency_bound(4, 5, 6, 3) == 1);
    CHECK(min_x_dependency_bound(5, 5, 6, 3) == 2);
    CHECK(dependency_threshold(5, 6, 3, 2) == doctest::Approx(262.44 / std::exp(1.0) - 1.0));
    for (std::uint64_t d : {0u, 3u, 50u, 96u, 5000u}) {
        const auto x = min_x_dependency_bound(d, 5, 6, 3);
        REQUIRE(x);
        CHECK(static_cast<double>(d) <= dependency_threshold(5, 6, 3, *x));
        if (*x > 1)
            CHECK(static_cast<double>(d) > dependency_threshold(5, 6, 3, *x - 1));
    }
}

TEST_CASE("bad event probability for p = 3")
{
    for (int k = 3; k <= 6; ++k)
        for (int r = 3; r <= 6; ++r) {
            const auto total = static_cast<double>(std::pow(r, k));
            const double formula =
                binomial(r, 2) * (std::pow(2.0 / r, k) - 2 * std::pow(1.0 / r, k)) + std::pow(1.0 / r, k - 1);
            const auto brute = oracle::edge_colorings_below(k, r, 3);
            CHECK(static_cast<std::int64_t>(fewer_than_three_colorings(k, r)) == brute);
            CHECK(formula * total == doctest::Approx(static_cast<double>(brute)));
        }
}

TEST_CASE("mtc cover")
{
    const Hypergraph single(5, 5, {{0, 1, 2, 3, 4}});
    const auto one = mtc_cover(single, 6, 3, 1, 1);
    CHECK(one.cover.size() == 1);
    CHECK(verifies(single, one.cover, 3));

    std::vector<std::vector<Vertex>> edges;
    for (Vertex t = 0; t < 6; ++t)
        edges.push_back({5 * t, 5 * t + 1, 5 * t + 2, 5 * t + 3, 5 * t + 4});
    const Hypergraph matching(30, 5, edges);
    CHECK(verifies(matching, mtc_cover(matching, 6, 3, 1, 2).cover, 3));

    const auto g = random_hypergraph(30, 5, 40, 4);
    const auto a = mtc_cover(g, 6, 3, 2, 9, 100'000'000, MtcMode::forced);
    const auto b = mtc_cover(g, 6, 3, 2, 9, 100'000'000, MtcMode::forced);
    CHECK(a.cover == b.cover);
    CHECK(a.count == b.count);
    CHECK(verifies(g, a.cover, 3));
}

TEST_CASE("mtc guaranteed mode rejects instances over the threshold")
{
    const auto g = complete_hypergraph(7, 5);
    CHECK_THROWS_AS(mtc_cover(g, 6, 3, 1, 0), InvalidArgument);
    CHECK_NOTHROW(mtc_cover(g, 6, 3, 1, 0, 100'000'000, MtcMode::forced));
}

TEST_CASE("mtc budget")
{
    const auto g = complete_hypergraph(8, 3);
    CHECK_THROWS_AS(mtc_cover(g, 3, 3, 1, 0, 1000, MtcMode::forced), BudgetExceeded);
}

TEST_CASE("union bound cover")
{
    CHECK(union_bound_cover(Hypergraph(6, 3), 3, 3, 2, 5).count == 1);
    const auto g = random_hypergraph(30, 5, 100, 8);
    const auto a = union_bound_cover(g, 6, 3, 2, 77);
    CHECK(verifies(g, a.cover, 3));
    CHECK(a.cover.size() == 2);
    CHECK(union_bound_cover(g, 6, 3, 2, 77).cover == a.cover);
}

TEST_CASE("single edge success frequency")
{
    const Hypergraph single(3, 3, {{0, 1, 2}});
    const int r = 6;
    const int p = 3;
    const double fail = binomial(r, p - 1) * std::pow(static_cast<double>(p - 1) / r, 3);
    double draws = 0;
    const int trials = 4000;
    for (int s = 0; s < trials; ++s)
        draws += static_cast<double>(union_bound_cover(single, r, p, 1, static_cast<std::uint64_t>(s)).count);
    // at least 1 - fail succeed per draw, so the mean draw count is at most 1 / (1 - fail)
    CHECK(fail < 1.0);
    CHECK(draws / trials <= 1.1 / (1.0 - fail));
}
