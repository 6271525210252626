#pragma once

#include <rpcover/coloring.hpp>
#include <rpcover/hypergraph.hpp>

#include <json.hpp>

#include <filesystem>
#include <iosfwd>

namespace rpcover {

// Text formats:
//   hypergraph: "n k m" then m lines of k vertex indices (0-based)
//   cover:      "n r x" then x lines of n colors in [0, r)
// JSON mirrors: {"n","k","edges"} and {"n","r","colorings"}.
// Readers accept either form and decide on the first non-blank character.

Hypergraph read_hypergraph(std::istream & in);
Cover read_cover(std::istream & in);

void write_hypergraph(std::ostream & out, const Hypergraph & g);
void write_cover(std::ostream & out, const Cover & cover);

nlohmann::json to_json(const Hypergraph & g);
nlohmann::json to_json(const Cover & cover);
Hypergraph hypergraph_from_json(const nlohmann::json & j);
Cover cover_from_json(const nlohmann::json & j);

Hypergraph load_hypergraph(const std::filesystem::path & path);
Cover load_cover(const std::filesystem::path & path);

} // namespace rpcover
