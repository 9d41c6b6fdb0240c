#include "gbsknot/graph.hpp"

#include "gbsknot/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace gbsknot {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool is_unit(const Integer& x) { return x == 1 || x == -1; }

template <class View>
View walk(const LabeledGraph& g, const std::string& start,
          std::size_t first_edge, std::size_t edge_count) {
  View view;
  std::string current = start;
  std::size_t e = first_edge;
  for (std::size_t step = 0; step < edge_count; ++step) {
    const Edge& edge = g.edges()[e];
    const bool forward = edge.source == current;
    const std::string& next = forward ? edge.target : edge.source;
    view.vertices.push_back(current);
    view.edges.push_back(edge.id);
    view.forward.push_back(forward);
    if (forward) {
      view.labels.push_back({edge.source_label, edge.target_label});
    } else {
      view.labels.push_back({edge.target_label, edge.source_label});
    }
    current = next;
    if (step + 1 == edge_count) break;
    for (std::size_t f : g.incident_edges(current)) {
      if (f != e) {
        e = f;
        break;
      }
    }
  }
  if constexpr (std::is_same_v<View, SegmentView>) view.vertices.push_back(current);
  return view;
}

template <class View>
LabeledGraph view_to_graph(const View& view, bool closed) {
  GraphDescription d;
  d.vertices = view.vertices;
  const std::size_t s = view.edges.size();
  for (std::size_t i = 0; i < s; ++i) {
    const std::string& a = view.vertices[i];
    const std::string& b = (closed && i + 1 == s) ? view.vertices[0] : view.vertices[i + 1];
    const LabelPair& p = view.labels[i];
    if (view.forward[i]) {
      d.edges.push_back({view.edges[i], a, b, p.k, p.l});
    } else {
      d.edges.push_back({view.edges[i], b, a, p.l, p.k});
    }
  }
  return LabeledGraph::validate(std::move(d));
}

std::string pairs_to_string(const std::vector<LabelPair>& labels) {
  std::ostringstream out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out << ',';
    out << '(' << labels[i].k << ',' << labels[i].l << ')';
  }
  return out.str();
}

}  // namespace

bool is_valid_id(std::string_view id) {
  if (id.empty()) return false;
  const auto first = static_cast<unsigned char>(id.front());
  if (!std::isalpha(first) && first != '_') return false;
  return std::all_of(id.begin() + 1, id.end(), [](char ch) {
    const auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_' || c == '.' || c == '\'' || c == '~';
  });
}

LabeledGraph LabeledGraph::validate(GraphDescription description) {
  std::set<std::string> vertex_ids;
  for (const auto& v : description.vertices) {
    if (!is_valid_id(v)) throw Error(ErrorCode::InvalidId, "invalid vertex id '" + v + "'", v);
    if (!vertex_ids.insert(v).second)
      throw Error(ErrorCode::DuplicateId, "vertex '" + v + "' declared twice", v);
  }
  std::set<std::string> edge_ids;
  for (const auto& e : description.edges) {
    if (!is_valid_id(e.id)) throw Error(ErrorCode::InvalidId, "invalid edge id '" + e.id + "'", e.id);
    if (!edge_ids.insert(e.id).second)
      throw Error(ErrorCode::DuplicateId, "edge '" + e.id + "' declared twice", e.id);
    for (const std::string* v : {&e.source, &e.target}) {
      if (!is_valid_id(*v)) throw Error(ErrorCode::InvalidId, "invalid vertex id '" + *v + "'", *v);
      vertex_ids.insert(*v);
    }
    if (e.source_label == 0 || e.target_label == 0)
      throw Error(ErrorCode::ZeroLabel, "edge '" + e.id + "' has a zero label", e.id);
  }
  for (const auto& id : edge_ids) {
    if (vertex_ids.count(id))
      throw Error(ErrorCode::DuplicateId, "id '" + id + "' names both a vertex and an edge", id);
  }
  if (vertex_ids.empty()) throw Error(ErrorCode::Empty, "graph has no vertices");

  LabeledGraph g;
  g.vertices_.assign(vertex_ids.begin(), vertex_ids.end());
  g.edges_ = std::move(description.edges);
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });

  DisjointSets sets(g.vertices_.size());
  for (const auto& e : g.edges_) sets.unite(g.vertex_index(e.source), g.vertex_index(e.target));
  for (std::size_t i = 1; i < g.vertices_.size(); ++i) {
    if (sets.find(i) != sets.find(0)) {
      throw Error(ErrorCode::Disconnected,
                  "vertex '" + g.vertices_[i] + "' is not connected to '" + g.vertices_[0] + "'",
                  g.vertices_[i]);
    }
  }
  return g;
}

bool LabeledGraph::has_vertex(std::string_view id) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

bool LabeledGraph::has_edge(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, std::string_view key) { return e.id < key; });
  return it != edges_.end() && it->id == id;
}

std::size_t LabeledGraph::vertex_index(std::string_view id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id)
    throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(id) + "'", std::string(id));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t LabeledGraph::edge_index(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, std::string_view key) { return e.id < key; });
  if (it == edges_.end() || it->id != id)
    throw Error(ErrorCode::UnknownEdge, "unknown edge '" + std::string(id) + "'", std::string(id));
  return static_cast<std::size_t>(it - edges_.begin());
}

const Edge& LabeledGraph::edge(std::string_view id) const { return edges_[edge_index(id)]; }

std::vector<std::size_t> LabeledGraph::incident_edges(std::string_view vertex) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].source == vertex || edges_[i].target == vertex) out.push_back(i);
  }
  return out;
}

std::size_t LabeledGraph::degree(std::string_view vertex) const {
  std::size_t d = 0;
  for (const auto& e : edges_) {
    d += (e.source == vertex) + (e.target == vertex);
  }
  return d;
}

SpanningTree::SpanningTree(std::vector<std::string> edge_ids) : edge_ids_(std::move(edge_ids)) {
  std::sort(edge_ids_.begin(), edge_ids_.end());
}

bool SpanningTree::contains(std::string_view edge_id) const {
  return std::binary_search(edge_ids_.begin(), edge_ids_.end(), edge_id);
}

SpanningTree spanning_tree(const LabeledGraph& graph) {
  const auto& vs = graph.vertices();
  std::vector<bool> in_tree(vs.size(), false);
  in_tree[0] = true;
  std::vector<std::string> chosen;
  for (std::size_t added = 1; added < vs.size(); ++added) {
    for (const auto& e : graph.edges()) {
      const bool a = in_tree[graph.vertex_index(e.source)];
      const bool b = in_tree[graph.vertex_index(e.target)];
      if (a != b) {
        in_tree[graph.vertex_index(a ? e.target : e.source)] = true;
        chosen.push_back(e.id);
        break;
      }
    }
  }
  return SpanningTree(std::move(chosen));
}

void check_spanning_tree(const LabeledGraph& graph, const SpanningTree& tree) {
  if (tree.size() + 1 != graph.vertices().size()) {
    throw Error(ErrorCode::TreeMismatch, "spanning tree must have " +
                                             std::to_string(graph.vertices().size() - 1) + " edges");
  }
  DisjointSets sets(graph.vertices().size());
  for (const auto& id : tree.edge_ids()) {
    if (!graph.has_edge(id))
      throw Error(ErrorCode::TreeMismatch, "tree edge '" + id + "' is not in the graph", id);
    const Edge& e = graph.edge(id);
    if (!sets.unite(graph.vertex_index(e.source), graph.vertex_index(e.target)))
      throw Error(ErrorCode::TreeMismatch, "tree edge '" + id + "' closes a cycle", id);
  }
}

std::size_t betti1(const LabeledGraph& graph) {
  return graph.edges().size() + 1 - graph.vertices().size();
}

bool is_reduced(const LabeledGraph& graph) {
  return std::none_of(graph.edges().begin(), graph.edges().end(), [](const Edge& e) {
    return !e.is_loop() && (is_unit(e.source_label) || is_unit(e.target_label));
  });
}

Shape shape(const LabeledGraph& graph) {
  if (!is_reduced(graph)) throw Error(ErrorCode::NotReduced, "graph is not reduced");
  const auto& vs = graph.vertices();
  const std::size_t edge_count = graph.edges().size();
  if (edge_count == 0) return SingleVertex{vs.front()};

  const std::size_t b = betti1(graph);
  if (b >= 2) {
    return OtherShape{"first Betti number " + std::to_string(b) + " exceeds 1"};
  }
  std::vector<std::size_t> degrees;
  for (const auto& v : vs) degrees.push_back(graph.degree(v));

  if (b == 0) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (degrees[i] >= 3) {
        return OtherShape{"tree is not a segment: vertex " + vs[i] + " has degree " +
                          std::to_string(degrees[i]) + " (trident)"};
      }
    }
    std::size_t start = 0;
    while (degrees[start] != 1) ++start;
    return walk<SegmentView>(graph, vs[start], graph.incident_edges(vs[start]).front(), edge_count);
  }

  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (degrees[i] == 1) {
      return OtherShape{"not a cycle: pendant vertex " + vs[i] + " (lollipop)"};
    }
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (degrees[i] != 2) {
      return OtherShape{"not a cycle: vertex " + vs[i] + " has degree " + std::to_string(degrees[i])};
    }
  }
  return walk<CycleView>(graph, vs.front(), graph.incident_edges(vs.front()).front(), edge_count);
}

std::string describe(const Shape& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SingleVertex>) {
          return "single vertex " + v.vertex;
        } else if constexpr (std::is_same_v<T, SegmentView>) {
          return "segment " + pairs_to_string(v.labels);
        } else if constexpr (std::is_same_v<T, CycleView>) {
          return "cycle " + pairs_to_string(v.labels);
        } else {
          return "other: " + v.reason;
        }
      },
      s);
}

LabeledGraph to_graph(const SegmentView& view) { return view_to_graph(view, false); }
LabeledGraph to_graph(const CycleView& view) { return view_to_graph(view, true); }

}  // namespace gbsknot
