#include <rpcover/io.hpp>

#include <rpcover/errors.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace rpcover {

namespace {

bool looks_like_json(std::istream & in)
{
    in >> std::ws;
    return in.peek() == '{';
}

long long read_int(std::istream & in, const char * what)
{
    long long v = 0;
    if (!(in >> v))
        throw ParseError(std::string("expected integer for ") + what);
    return v;
}

void expect_end(std::istream & in)
{
    in >> std::ws;
    if (!in.eof())
        throw ParseError("trailing data after the declared number of rows");
}

template <typename T, typename F>
T rethrow_as_parse_error(F && f)
{
    try {
        return f();
    } catch (const InvalidArgument & e) {
        throw ParseError(e.what());
    } catch (const nlohmann::json::exception & e) {
        throw ParseError(e.what());
    }
}

} // namespace

Hypergraph read_hypergraph(std::istream & in)
{
    if (looks_like_json(in))
        return rethrow_as_parse_error<Hypergraph>([&] { return hypergraph_from_json(nlohmann::json::parse(in)); });

    const long long n = read_int(in, "n");
    const long long k = read_int(in, "k");
    const long long m = read_int(in, "m");
    if (n < 0 || k < 0 || m < 0)
        throw ParseError("negative size in hypergraph header");
    std::vector<std::vector<Vertex>> edges(static_cast<std::size_t>(m));
    for (auto & e : edges) {
        e.resize(static_cast<std::size_t>(k));
        for (auto & v : e) {
            const long long x = read_int(in, "edge vertex");
            if (x < 0 || x >= n)
                throw ParseError("edge vertex " + std::to_string(x) + " out of range");
            v = static_cast<Vertex>(x);
        }
    }
    expect_end(in);
    return rethrow_as_parse_error<Hypergraph>(
        [&] { return Hypergraph(static_cast<int>(n), static_cast<int>(k), edges); });
}

Cover read_cover(std::istream & in)
{
    if (looks_like_json(in))
        return rethrow_as_parse_error<Cover>([&] { return cover_from_json(nlohmann::json::parse(in)); });

    const long long n = read_int(in, "n");
    const long long r = read_int(in, "r");
    const long long x = read_int(in, "x");
    if (n < 0 || r < 1 || x < 1)
        throw ParseError("cover header needs n >= 0, r >= 1, x >= 1");
    std::vector<Coloring> colorings;
    for (long long i = 0; i < x; ++i) {
        std::vector<Color> colors(static_cast<std::size_t>(n));
        for (auto & c : colors) {
            const long long v = read_int(in, "color");
            if (v < 0 || v >= r)
                throw ParseError("color " + std::to_string(v) + " out of range for r=" + std::to_string(r));
            c = static_cast<Color>(v);
        }
        colorings.emplace_back(static_cast<int>(r), std::move(colors));
    }
    expect_end(in);
    return Cover(std::move(colorings));
}

void write_hypergraph(std::ostream & out, const Hypergraph & g)
{
    out << g.n() << ' ' << g.k() << ' ' << g.num_edges() << '\n';
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        auto e = g.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j)
            out << (j ? " " : "") << e[j];
        out << '\n';
    }
}

void write_cover(std::ostream & out, const Cover & cover)
{
    out << cover.n() << ' ' << cover.r() << ' ' << cover.size() << '\n';
    for (const auto & c : cover) {
        for (int v = 0; v < c.n(); ++v)
            out << (v ? " " : "") << c[static_cast<Vertex>(v)];
        out << '\n';
    }
}

nlohmann::json to_json(const Hypergraph & g)
{
    return {{"n", g.n()}, {"k", g.k()}, {"edges", g.edge_list()}};
}

nlohmann::json to_json(const Cover & cover)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto & c : cover)
        rows.push_back(c.colors());
    return {{"n", cover.n()}, {"r", cover.r()}, {"colorings", rows}};
}

Hypergraph hypergraph_from_json(const nlohmann::json & j)
{
    return Hypergraph(j.at("n").get<int>(), j.at("k").get<int>(),
                      j.at("edges").get<std::vector<std::vector<Vertex>>>());
}

Cover cover_from_json(const nlohmann::json & j)
{
    const int n = j.at("n").get<int>();
    const int r = j.at("r").get<int>();
    std::vector<Coloring> colorings;
    for (const auto & row : j.at("colorings")) {
        auto colors = row.get<std::vector<Color>>();
        if (static_cast<int>(colors.size()) != n)
            throw ParseError("coloring length " + std::to_string(colors.size()) + " does not match n=" + std::to_string(n));
        colorings.emplace_back(r, std::move(colors));
    }
    return Cover(std::move(colorings));
}

Hypergraph load_hypergraph(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    return read_hypergraph(in);
}

Cover load_cover(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    return rethrow_as_parse_error<Cover>([&] { return read_cover(in); });
}

} // namespace rpcover
