#pragma once

#include "gbsknot/integer.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gbsknot {

/// A geometric edge. `source_label` is the label at endpoint 0 and
/// `target_label` the label at endpoint 1; a loop has source == target.
struct Edge {
  std::string id;
  std::string source;
  std::string target;
  Integer source_label;
  Integer target_label;

  bool is_loop() const { return source == target; }
  const std::string& endpoint(int end) const { return end == 0 ? source : target; }
  const Integer& label(int end) const { return end == 0 ? source_label : target_label; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Unchecked input to LabeledGraph::validate. Vertices that only appear as
/// edge endpoints are declared implicitly.
struct GraphDescription {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

/// Whether `id` is usable as a vertex or edge identifier: a letter or
/// underscore followed by letters, digits and any of `_ . ' ~`.
bool is_valid_id(std::string_view id);

/// Finite connected graph with a nonzero integer at each end of each edge.
/// Vertices are kept sorted by id and edges sorted by edge id; all
/// deterministic traversals follow that order. Immutable once built.
class LabeledGraph {
 public:
  /// Throws Error with ZeroLabel, Disconnected, Empty, DuplicateId or
  /// InvalidId, naming the offending element.
  static LabeledGraph validate(GraphDescription description);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(std::string_view id) const;
  bool has_edge(std::string_view id) const;
  std::size_t vertex_index(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;
  const Edge& edge(std::string_view id) const;

  /// Indices of edges touching `vertex`, in id order; a loop is listed once.
  std::vector<std::size_t> incident_edges(std::string_view vertex) const;
  /// Number of edge ends at `vertex`; a loop contributes two.
  std::size_t degree(std::string_view vertex) const;

  GraphDescription description() const { return {vertices_, edges_}; }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  LabeledGraph() = default;

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// Edge ids of a maximal subtree, sorted.
class SpanningTree {
 public:
  SpanningTree() = default;
  explicit SpanningTree(std::vector<std::string> edge_ids);

  const std::vector<std::string>& edge_ids() const { return edge_ids_; }
  bool contains(std::string_view edge_id) const;
  std::size_t size() const { return edge_ids_.size(); }

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;

 private:
  std::vector<std::string> edge_ids_;
};

/// Grows a tree from the smallest vertex id, each step adding the
/// smallest-id edge that reaches a vertex not yet in the tree.
SpanningTree spanning_tree(const LabeledGraph& graph);

/// Throws TreeMismatch unless `tree` is a spanning tree of `graph`.
void check_spanning_tree(const LabeledGraph& graph, const SpanningTree& tree);

/// |E| - |V| + 1.
std::size_t betti1(const LabeledGraph& graph);

/// True iff no non-loop edge carries a label +-1 at either end.
bool is_reduced(const LabeledGraph& graph);

struct LabelPair {
  Integer k;
  Integer l;
  friend bool operator==(const LabelPair&, const LabelPair&) = default;
};

/// Simple path a_1 - a_2 - ... - a_{s+1}. Edge e_i joins a_i and a_{i+1};
/// k_i is its label at a_i and l_i its label at a_{i+1}. `forward[i]` says
/// whether e_i is stored with endpoint 0 at a_i.
struct SegmentView {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  std::vector<LabelPair> labels;
  std::vector<bool> forward;
  friend bool operator==(const SegmentView&, const SegmentView&) = default;
};

/// Simple cycle a_1 - ... - a_s - a_1, same conventions as SegmentView with
/// e_s closing the cycle from a_s back to a_1. A single loop has s = 1.
struct CycleView {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  std::vector<LabelPair> labels;
  std::vector<bool> forward;
  friend bool operator==(const CycleView&, const CycleView&) = default;
};

struct SingleVertex {
  std::string vertex;
  friend bool operator==(const SingleVertex&, const SingleVertex&) = default;
};

struct OtherShape {
  std::string reason;
  friend bool operator==(const OtherShape&, const OtherShape&) = default;
};

using Shape = std::variant<SingleVertex, SegmentView, CycleView, OtherShape>;

/// Classifies a reduced graph. Segments are read from the end vertex with
/// the smaller id; cycles start at the smallest vertex and leave it along
/// the smaller-id edge. Throws NotReduced.
Shape shape(const LabeledGraph& graph);

/// One-line human description, e.g. "segment (2,3),(5,7)".
std::string describe(const Shape& shape);

/// The graph a view was read from (only the viewed edges and vertices).
LabeledGraph to_graph(const SegmentView& view);
LabeledGraph to_graph(const CycleView& view);

}  // namespace gbsknot
