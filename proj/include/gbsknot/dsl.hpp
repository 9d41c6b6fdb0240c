#pragma once

#include "gbsknot/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace gbsknot {

/// Parses the line-oriented graph format:
///
///   # comment
///   vertex <id>
///   edge <id> <v0> <label0> <v1> <label1>
///
/// Vertices may also be declared implicitly by an edge line; v0 == v1 makes
/// a loop. Every failure, including graph validation errors, is raised as a
/// ParseError pointing at the offending token (or at the first declaration
/// of the offending vertex/edge).
LabeledGraph parse_graph(std::string_view text);

/// parse_graph on a file's contents. Unreadable files raise ParseError at
/// line 0.
LabeledGraph parse_graph_file(const std::filesystem::path& path);

/// Canonical text: one `vertex` line per vertex, then one `edge` line per
/// edge, both in id order. parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const LabeledGraph& graph);

}  // namespace gbsknot
