#include "gbsknot/moves.hpp"

#include "gbsknot/error.hpp"

#include <deque>
#include <string>
#include <utility>

namespace gbsknot {
namespace {

bool is_unit(const Integer& x) { return x == 1 || x == -1; }

bool collapsible(const Edge& e) {
  return !e.is_loop() && (is_unit(e.source_label) || is_unit(e.target_label));
}

std::string fresh_id(const LabeledGraph& g, const std::string& base, const char* tag) {
  for (std::size_t n = 1;; ++n) {
    std::string candidate = base + "." + tag + std::to_string(n);
    if (!g.has_vertex(candidate) && !g.has_edge(candidate)) return candidate;
  }
}

}  // namespace

LabeledGraph collapse(const LabeledGraph& graph, std::string_view edge_id) {
  const Edge& e = graph.edge(edge_id);
  if (!collapsible(e)) {
    throw Error(ErrorCode::NotCollapsible,
                "edge '" + e.id + (e.is_loop() ? "' is a loop" : "' has no label +-1"), e.id);
  }
  const int merged_end = is_unit(e.target_label) ? 1 : 0;
  const std::string& w = e.endpoint(merged_end);
  const std::string& u = e.endpoint(1 - merged_end);
  const Integer factor = e.label(merged_end) * e.label(1 - merged_end);

  GraphDescription d;
  for (const auto& v : graph.vertices()) {
    if (v != w) d.vertices.push_back(v);
  }
  for (const auto& f : graph.edges()) {
    if (f.id == e.id) continue;
    Edge g = f;
    if (g.source == w) {
      g.source = u;
      g.source_label *= factor;
    }
    if (g.target == w) {
      g.target = u;
      g.target_label *= factor;
    }
    d.edges.push_back(std::move(g));
  }
  return LabeledGraph::validate(std::move(d));
}

LabeledGraph expand(const LabeledGraph& graph, std::string_view edge_id, int end,
                    const Integer& m, const Integer& n) {
  const Edge& e = graph.edge(edge_id);
  if (end != 0 && end != 1)
    throw Error(ErrorCode::BadFactorization, "edge end must be 0 or 1", e.id);
  if (n == 0 || m * n != e.label(end)) {
    throw Error(ErrorCode::BadFactorization,
                "label " + to_string(e.label(end)) + " at end " + std::to_string(end) + " of '" +
                    e.id + "' is not " + to_string(m) + "*" + to_string(n),
                e.id);
  }
  const std::string x = fresh_id(graph, e.id, "v");
  const std::string f = fresh_id(graph, e.id, "e");

  GraphDescription d = graph.description();
  d.vertices.push_back(x);
  for (auto& g : d.edges) {
    if (g.id != e.id) continue;
    const std::string old = g.endpoint(end);
    if (end == 0) {
      g.source = x;
      g.source_label = n;
    } else {
      g.target = x;
      g.target_label = n;
    }
    d.edges.push_back({f, old, x, m, Integer(1)});
    break;
  }
  return LabeledGraph::validate(std::move(d));
}

LabeledGraph reduce(const LabeledGraph& graph) {
  LabeledGraph g = graph;
  for (;;) {
    const Edge* target = nullptr;
    for (const auto& e : g.edges()) {
      if (collapsible(e)) {
        target = &e;
        break;
      }
    }
    if (!target) return g;
    g = collapse(g, target->id);
  }
}

LabeledGraph canonicalize_signs(const LabeledGraph& graph) {
  const SpanningTree tree = spanning_tree(graph);
  GraphDescription d = graph.description();
  const auto& vs = graph.vertices();
  std::vector<bool> seen(vs.size(), false);
  seen[0] = true;
  std::deque<std::string> queue{vs[0]};

  auto flip = [&d](const std::string& v) {
    for (auto& e : d.edges) {
      if (e.source == v) e.source_label = -e.source_label;
      if (e.target == v) e.target_label = -e.target_label;
    }
  };

  while (!queue.empty()) {
    const std::string parent = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
      const Edge& e = d.edges[i];
      if (!tree.contains(e.id)) continue;
      int child_end;
      if (e.source == parent) {
        child_end = 1;
      } else if (e.target == parent) {
        child_end = 0;
      } else {
        continue;
      }
      const std::string child = e.endpoint(child_end);
      const std::size_t ci = graph.vertex_index(child);
      if (seen[ci]) continue;
      seen[ci] = true;
      if (e.label(child_end) < 0) flip(child);
      queue.push_back(child);
    }
  }
  return LabeledGraph::validate(std::move(d));
}

std::string_view name(ExceptionalGroup group) {
  switch (group) {
    case ExceptionalGroup::Z: return "Z";
    case ExceptionalGroup::Z2: return "Z^2";
    case ExceptionalGroup::KleinBottle: return "klein_bottle";
  }
  return "";
}

std::optional<ExceptionalGroup> exceptional_group(const LabeledGraph& reduced) {
  if (reduced.vertices().size() != 1) return std::nullopt;
  if (reduced.edges().empty()) return ExceptionalGroup::Z;
  if (reduced.edges().size() != 1) return std::nullopt;
  const Edge& e = reduced.edges().front();
  if (!is_unit(e.source_label) || !is_unit(e.target_label)) return std::nullopt;
  return e.source_label == e.target_label ? ExceptionalGroup::Z2 : ExceptionalGroup::KleinBottle;
}

}  // namespace gbsknot
