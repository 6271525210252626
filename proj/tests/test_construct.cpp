#include <doctest.h>

#include <rpcover/binomial.hpp>
#include <rpcover/construct.hpp>
#include <rpcover/errors.hpp>
#include <rpcover/schedule.hpp>

#include <bit>
#include <cmath>
#include <numeric>
#include <set>

using namespace rpcover;

namespace {

std::vector<int> sorted_sizes(const Coloring & c)
{
    auto s = c.class_sizes();
    std::sort(s.rbegin(), s.rend());
    return s;
}

void check_schedule(int r, int p)
{
    const auto s = round_schedule(r, p);
    const int q = p - 1;
    CHECK(static_cast<int>(s.groups.size()) == schedule_group_count(r, q));
    std::multiset<ClassSet> seen;
    for (const auto & group : s.groups) {
        ClassSet used = 0;
        for (ClassSet set : group) {
            CHECK(std::popcount(set) == q);
            CHECK((used & set) == 0);
            used |= set;
            seen.insert(set);
        }
    }
    CHECK(seen.size() == binomial(r, q));
    CHECK(std::set<ClassSet>(seen.begin(), seen.end()).size() == seen.size());
}

} // namespace

TEST_CASE("balanced_coloring")
{
    std::vector<Vertex> v(9);
    std::iota(v.begin(), v.end(), Vertex{0});
    CHECK(balanced_coloring(v, 3).class_sizes() == std::vector<int>{3, 3, 3});
    CHECK(balanced_coloring(std::span(v).first(7), 3).class_sizes() == std::vector<int>{3, 2, 2});
    CHECK(balanced_coloring(std::span(v).first(2), 3).class_sizes() == std::vector<int>{1, 1, 0});
    CHECK(balanced_coloring(std::span(v).first(7), 3).colors() == std::vector<Color>{0, 0, 0, 1, 1, 2, 2});
}

TEST_CASE("round schedules")
{
    for (int r = 2; r <= 8; ++r)
        for (int p = 2; p <= r; ++p)
            check_schedule(r, p);
    const auto s43 = round_schedule(4, 3);
    REQUIRE(s43.groups.size() == 3);
    for (const auto & g : s43.groups) {
        REQUIRE(g.size() == 2);
        CHECK((g[0] | g[1]) == 0b1111u);
    }
    const auto s33 = round_schedule(3, 3);
    CHECK(s33.groups.size() == 3);
    for (const auto & g : s33.groups)
        CHECK(g.size() == 1);
    const auto s53 = round_schedule(5, 3);
    CHECK(s53.groups.size() == 5);
    for (const auto & g : s53.groups)
        CHECK(g.size() == 2);
    CHECK_THROWS_AS(round_schedule(3, 4), InvalidArgument);
}

TEST_CASE("small constructions")
{
    CHECK(cover_complete(3, 3, 3, 3).size() == 1);
    const auto c6 = cover_complete(6, 5, 3, 3);
    REQUIRE(c6.size() == 1);
    CHECK(sorted_sizes(c6[0]) == std::vector<int>{2, 2, 2});
    CHECK(cover_complete(4, 3, 3, 3, false).size() == 3);
    CHECK(verifies(complete_hypergraph(4, 3), cover_complete(4, 3, 3, 3, false), 3));
}

TEST_CASE("constructions verify with and without pruning")
{
    const std::vector<std::pair<int, int>> rps{{3, 3}, {4, 3}, {5, 3}, {4, 4}, {5, 4}, {6, 5}};
    for (int k = 3; k <= 5; ++k)
        for (auto [r, p] : rps)
            for (int n = k; n <= 16; ++n) {
                const auto g = complete_hypergraph(n, k);
                const int need = std::min(p, k);
                const auto raw = cover_complete(n, k, r, p, false);
                const auto pruned = cover_complete(n, k, r, p);
                CHECK(verifies(g, raw, need));
                CHECK(verifies(g, pruned, need));
                CHECK(pruned.size() <= raw.size());
            }
}

TEST_CASE("construction on an arbitrary vertex list")
{
    const std::vector<Vertex> v{9, 2, 7, 4, 0, 5, 8};
    const auto c = cover_general(v, 3, 3, 3);
    CHECK(c.n() == 7);
    CHECK(verifies(complete_hypergraph(7, 3), c, 3));
}

TEST_CASE("base case holds at most k-1 vertices in any p-1 classes")
{
    for (int k = 3; k <= 6; ++k)
        for (int r = 3; r <= 6; ++r)
            for (int p = 3; p <= std::min(r, k); ++p)
                for (int n = k; n <= 20; ++n) {
                    const auto c = cover_complete(n, k, r, p, false);
                    if (c.size() != 1)
                        continue;
                    auto sizes = sorted_sizes(c[0]);
                    CHECK(std::accumulate(sizes.begin(), sizes.begin() + (p - 1), 0) <= k - 1);
                }
}

TEST_CASE("size_bound")
{
    const auto b9 = size_bound(9, 3, 3, 3);
    CHECK(b9.formula_id == "r3p3");
    CHECK(b9.l == 0);
    const double e = std::log(3.0) / std::log(1.5);
    CHECK(b9.value == doctest::Approx(std::pow(4.5, e) / 3.0 + std::log(4.5) / std::log(1.5) - 1.0));
    CHECK(b9.value == doctest::Approx(22.33).epsilon(0.001));

    const auto b16 = size_bound(16, 3, 4, 3);
    CHECK(b16.formula_id == "r4p3");
    CHECK(b16.value == doctest::Approx(11.0));

    const auto tiny = size_bound(3, 3, 5, 3);
    CHECK(tiny.value == 1.0);
    CHECK(tiny.raw < 1.0);

    CHECK(size_bound(20, 5, 5, 4).formula_id == "general");
    CHECK(size_bound(20, 5, 5, 4).l == 1);
}

TEST_CASE("smallest_offset")
{
    CHECK(smallest_offset(3, 3) == 0);
    CHECK(smallest_offset(4, 3) == 1);
    CHECK(smallest_offset(5, 4) == 1);
    CHECK(smallest_offset(7, 4) == 0);
}
