#pragma once

#include <string>
#include <vector>

#include "graphforms/graph.hpp"
#include "json.hpp"

namespace graphforms {

// graph6 codec. Accepts an optional ">>graph6<<" header and one trailing newline.
// Parse errors report the byte offset of the offending character.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);
std::vector<Graph> read_graph6_file(const std::string& path);

// Edge-list text: "n m" on the first line, then m lines "u v". '#' starts a comment.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// {"n": 4, "edges": [[0,1],...], "labels": [...]}; labels optional.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// Resolves a command-line graph argument: an existing file (.g6/.json/.txt),
// a family spec such as "complete:5", or a literal graph6 string.
Graph load_graph(const std::string& arg);

}  // namespace graphforms
