#include "gbsknot/presentation.hpp"

#include "gbsknot/error.hpp"

#include <algorithm>

namespace gbsknot {

std::vector<std::string> Presentation::generators() const {
  std::vector<std::string> out = vertex_generators;
  out.insert(out.end(), edge_generators.begin(), edge_generators.end());
  return out;
}

std::optional<std::size_t> Presentation::generator_index(std::string_view name) const {
  auto v = std::find(vertex_generators.begin(), vertex_generators.end(), name);
  if (v != vertex_generators.end()) return static_cast<std::size_t>(v - vertex_generators.begin());
  auto e = std::find(edge_generators.begin(), edge_generators.end(), name);
  if (e != edge_generators.end())
    return vertex_generators.size() + static_cast<std::size_t>(e - edge_generators.begin());
  return std::nullopt;
}

Presentation build_presentation(const LabeledGraph& graph, const SpanningTree& tree) {
  check_spanning_tree(graph, tree);
  Presentation p;
  p.vertex_generators = graph.vertices();
  for (const auto& e : graph.edges()) {
    Word r;
    if (tree.contains(e.id)) {
      r.append(e.source, e.source_label);
      r.append(e.target, -e.target_label);
    } else {
      p.edge_generators.push_back(e.id);
      r.append(e.id, -1);
      r.append(e.source, e.source_label);
      r.append(e.id, 1);
      r.append(e.target, -e.target_label);
    }
    p.relators.push_back(std::move(r));
  }
  return p;
}

Presentation build_presentation(const LabeledGraph& graph) {
  return build_presentation(graph, spanning_tree(graph));
}

std::vector<Integer> exponent_sums(const Presentation& p, const Word& word) {
  std::vector<Integer> sums(p.vertex_generators.size() + p.edge_generators.size());
  for (const auto& s : word.syllables()) {
    auto index = p.generator_index(s.generator);
    if (!index) {
      throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + s.generator + "'",
                  s.generator);
    }
    sums[*index] += s.exponent;
  }
  return sums;
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(0, p.vertex_generators.size() + p.edge_generators.size());
  for (const auto& r : p.relators) m.append_row(exponent_sums(p, r));
  return m;
}

std::string AbelianStructure::to_string() const {
  std::string out;
  if (free_rank == 1) {
    out = "Z";
  } else if (free_rank > 1) {
    out = "Z^" + std::to_string(free_rank);
  }
  for (const auto& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z_" + gbsknot::to_string(d);
  }
  return out.empty() ? "0" : out;
}

AbelianStructure abelian_structure(const SmithForm& smith) {
  AbelianStructure a;
  a.free_rank = smith.free_rank;
  for (const auto& d : smith.divisors) {
    if (d > 1) a.torsion.push_back(d);
  }
  return a;
}

AbelianStructure abelianization(const LabeledGraph& graph, const SpanningTree& tree) {
  return abelian_structure(smith_normal_form(relation_matrix(build_presentation(graph, tree))));
}

AbelianStructure abelianization(const LabeledGraph& graph) {
  return abelianization(graph, spanning_tree(graph));
}

AbelianStructure quotient_abelianization(const Presentation& p,
                                         const std::vector<Word>& extra_relators) {
  IntMatrix m = relation_matrix(p);
  for (const auto& w : extra_relators) m.append_row(exponent_sums(p, w));
  return abelian_structure(smith_normal_form(std::move(m)));
}

}  // namespace gbsknot
