#ifndef QK_IO_HPP
#define QK_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "qk/digraph.hpp"

namespace qk {

/// Text format: first non-comment line is n, then one "u v" arc per line.
/// '#' starts a comment anywhere on a line; blank lines are ignored.
/// Throws InvalidInput on a malformed header, bad arc line, out-of-range
/// endpoint, self-loop or duplicate arc.
Digraph parse_digraph(std::string_view text);
/// Canonical text: "n\n" then arcs in lexicographic order, one per line.
std::string serialize_digraph(const Digraph& d);

/// {"n": n, "arcs": [[u, v], ...]} with arcs sorted lexicographically.
nlohmann::json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const nlohmann::json& j);

nlohmann::json vertex_set_to_json(VertexSet s);
VertexSet vertex_set_from_json(const nlohmann::json& j);
/// "0,2,5" or "{0,2,5}"; throws InvalidInput on junk.
VertexSet parse_vertex_list(std::string_view text);

/// Adjacency bit string in pair order (0,1),(1,0),(0,2),(2,0),(1,2),(2,1),(0,3),...
/// i.e. pairs grouped by their larger endpoint. The first pair is the most
/// significant bit. Printed as big-endian hex, left-padded to whole nibbles.
std::string adjacency_hex(const Digraph& d);
Digraph digraph_from_adjacency_hex(int n, std::string_view hex);

}  // namespace qk

#endif  // QK_IO_HPP
