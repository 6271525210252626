#include <doctest.h>

#include "oracles.hpp"

#include <rpcover/binomial.hpp>
#include <rpcover/coloring.hpp>
#include <rpcover/errors.hpp>
#include <rpcover/hypergraph.hpp>
#include <rpcover/io.hpp>

#include <sstream>

using namespace rpcover;

namespace {

Cover fig1_cover()
{
    return Cover({Coloring(3, {0, 0, 0, 1, 1, 1, 2, 2, 2}), Coloring(3, {0, 1, 2, 0, 1, 2, 0, 1, 2}),
                  Coloring(3, {0, 2, 1, 2, 1, 0, 1, 0, 2}), Coloring(3, {0, 2, 1, 1, 0, 2, 2, 1, 0})});
}

std::size_t brute_dependency(const Hypergraph & g)
{
    std::size_t best = 0;
    const auto edges = g.edge_list();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::size_t d = 0;
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (i == j)
                continue;
            std::set<Vertex> u(edges[i].begin(), edges[i].end());
            u.insert(edges[j].begin(), edges[j].end());
            d += u.size() < edges[i].size() + edges[j].size();
        }
        best = std::max(best, d);
    }
    return best;
}

bool same_edges(const Hypergraph & a, const Hypergraph & b)
{
    auto x = a.edge_list();
    auto y = b.edge_list();
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return a.n() == b.n() && a.k() == b.k() && x == y;
}

} // namespace

TEST_CASE("binomial")
{
    CHECK(binomial(9, 3) == 84);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ULL);
    CHECK_FALSE(binomial_checked(200, 100).has_value());
    CHECK_THROWS(binomial(200, 100));
}

TEST_CASE("complete hypergraph edge counts")
{
    CHECK(complete_hypergraph(4, 3).num_edges() == 4);
    CHECK(complete_hypergraph(7, 3).num_edges() == 35);
    CHECK(complete_hypergraph(9, 3).num_edges() == 84);
    CHECK(complete_hypergraph(9, 3).is_complete());
    CHECK_FALSE(Hypergraph(9, 3, {{0, 1, 2}}).is_complete());
}

TEST_CASE("hypergraph construction validates and dedups")
{
    Hypergraph g(5, 3, {{2, 1, 0}, {0, 1, 2}, {4, 3, 0}});
    REQUIRE(g.num_edges() == 2);
    CHECK(g.edge_list()[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(g.edge_list()[1] == std::vector<Vertex>{0, 3, 4});
    CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 1}}), InvalidArgument);
    CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 1, 5}}), InvalidArgument);
    CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 1, 1}}), InvalidArgument);
}

TEST_CASE("properly_colored")
{
    const std::vector<Vertex> e{0, 1, 2};
    CHECK_FALSE(properly_colored(e, Coloring(3, {0, 0, 0}), 3));
    CHECK(properly_colored(e, Coloring(3, {0, 1, 2}), 3));
    CHECK(properly_colored(e, Coloring(3, {0, 1, 1}), 2));

    const auto fig = fig1_cover();
    const std::vector<Vertex> v124{0, 1, 3};
    CHECK_FALSE(properly_colored(v124, fig[0], 3));
    CHECK(properly_colored(v124, fig[3], 3));
}

TEST_CASE("coloring and cover validation")
{
    CHECK_THROWS_AS(Coloring(2, {0, 2}), InvalidArgument);
    CHECK_THROWS_AS(Cover({}), InvalidArgument);
    CHECK_THROWS_AS(Cover({Coloring(3, {0, 1}), Coloring(2, {0, 1})}), InvalidArgument);
    CHECK_THROWS_AS(Cover({Coloring(3, {0, 1}), Coloring(3, {0, 1, 2})}), InvalidArgument);
    CHECK(Coloring(4, {0, 0, 3}).class_sizes() == std::vector<int>{2, 0, 0, 1});
}

TEST_CASE("cover params clamp p to k and reject p > r")
{
    CHECK(CoverParams::make(4, 4, 3) == CoverParams{4, 3});
    CHECK(CoverParams::make(5, 3, 4) == CoverParams{5, 3});
    CHECK_THROWS_AS(CoverParams::make(3, 4, 5), InvalidArgument);
    CHECK_THROWS_AS(CoverParams::make(3, 1, 5), InvalidArgument);
}

TEST_CASE("uncovered_edges")
{
    const auto k9 = complete_hypergraph(9, 3);
    const auto fig = fig1_cover();
    CHECK(uncovered_edges(k9, fig, 3).empty());

    const auto missing = uncovered_edges(k9, Cover({fig[0]}), 3);
    REQUIRE_FALSE(missing.empty());
    CHECK(k9.edge_list()[missing.front()] == std::vector<Vertex>{0, 1, 2});

    CHECK(uncovered_edges(Hypergraph(9, 3), fig, 3).empty());
    CHECK_THROWS_AS(uncovered_edges(complete_hypergraph(8, 3), fig, 3), InvalidArgument);
}

TEST_CASE("dependency")
{
    CHECK(dependency(complete_hypergraph(4, 3)) == 3);
    CHECK(dependency(Hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}})) == 0);
    CHECK(dependency(complete_hypergraph(5, 3)) == 9);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = random_hypergraph(9, 3, 12, seed);
        CHECK(dependency(g) == brute_dependency(g));
        CHECK(dependency(g) < g.num_edges());
    }
}

TEST_CASE("shrink")
{
    CHECK(same_edges(shrink(complete_hypergraph(4, 3)), complete_hypergraph(3, 2)));
    CHECK(same_edges(shrink(Hypergraph(4, 3, {{0, 1, 2}})), Hypergraph(3, 2, {{0, 1}, {0, 2}, {1, 2}})));
    CHECK(shrink(Hypergraph(4, 3, {{0, 1, 3}})).edge_list() == std::vector<std::vector<Vertex>>{{0, 1}});
    for (int n = 4; n <= 7; ++n)
        for (int k = 3; k < n; ++k)
            CHECK(same_edges(shrink(complete_hypergraph(n, k)), complete_hypergraph(n - 1, k - 1)));

    // removing a middle vertex renumbers the rest
    const auto g = shrink(Hypergraph(4, 3, {{0, 1, 3}, {0, 2, 3}}), 1);
    CHECK(g.n() == 3);
    CHECK(same_edges(g, Hypergraph(3, 2, {{0, 1}, {0, 2}, {1, 2}})));
}

TEST_CASE("two_section")
{
    for (int n = 3; n <= 8; ++n)
        CHECK(same_edges(two_section(complete_hypergraph(n, 3)), complete_hypergraph(n, 2)));
    const auto g = two_section(Hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}}));
    CHECK(g.num_edges() == 6);
    CHECK(two_section(Hypergraph(5, 3)).empty());
}

TEST_CASE("random_hypergraph")
{
    CHECK(random_hypergraph(5, 3, 10, 7).is_complete());
    CHECK(random_hypergraph(6, 3, 0, 7).empty());
    CHECK(random_hypergraph(30, 5, 40, 11) == random_hypergraph(30, 5, 40, 11));
    CHECK_FALSE(random_hypergraph(30, 5, 40, 11) == random_hypergraph(30, 5, 40, 12));
    CHECK(random_hypergraph(30, 5, 40, 11).num_edges() == 40);
    CHECK_THROWS_AS(random_hypergraph(5, 3, 11, 0), InvalidArgument);
}

TEST_CASE("text and json round trips")
{
    const auto g = random_hypergraph(12, 4, 30, 5);
    std::stringstream text;
    write_hypergraph(text, g);
    CHECK(read_hypergraph(text) == g);
    std::stringstream js(to_json(g).dump());
    CHECK(read_hypergraph(js) == g);

    const auto fig = fig1_cover();
    std::stringstream ctext;
    write_cover(ctext, fig);
    CHECK(read_cover(ctext) == fig);
    CHECK(cover_from_json(to_json(fig)) == fig);
}

TEST_CASE("parse errors")
{
    std::stringstream short_edges("4 3 2\n0 1 2\n");
    CHECK_THROWS_AS(read_hypergraph(short_edges), ParseError);
    std::stringstream bad_color("3 2 1\n0 1 2\n");
    CHECK_THROWS_AS(read_cover(bad_color), ParseError);
    std::stringstream bad_json("{\"n\": 3}");
    CHECK_THROWS_AS(read_hypergraph(bad_json), ParseError);
}
