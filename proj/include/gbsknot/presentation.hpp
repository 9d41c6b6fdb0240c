#pragma once

#include "gbsknot/graph.hpp"
#include "gbsknot/matrix.hpp"
#include "gbsknot/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gbsknot {

/// Finite presentation of the fundamental group of a labeled graph. Vertex
/// generators are named by vertex id and edge generators by the id of the
/// non-tree edge they belong to. One relator per geometric edge, in edge id
/// order:
///   tree edge e:      g_{src}^{lambda(e)} g_{dst}^{-lambda(e-bar)}
///   non-tree edge e:  t_e^-1 g_{src}^{lambda(e)} t_e g_{dst}^{-lambda(e-bar)}
struct Presentation {
  std::vector<std::string> vertex_generators;
  std::vector<std::string> edge_generators;
  std::vector<Word> relators;

  /// Vertex generators followed by edge generators; this is the column
  /// order of relation_matrix.
  std::vector<std::string> generators() const;
  std::optional<std::size_t> generator_index(std::string_view name) const;
};

/// Throws TreeMismatch when `tree` is not a spanning tree of `graph`.
Presentation build_presentation(const LabeledGraph& graph, const SpanningTree& tree);
Presentation build_presentation(const LabeledGraph& graph);

/// Exponent-sum vector of `word` over the presentation's generators.
/// Throws UnknownGenerator.
std::vector<Integer> exponent_sums(const Presentation& p, const Word& word);

/// Rows are relators, columns generators, entries exponent sums.
IntMatrix relation_matrix(const Presentation& p);

/// Z^free_rank + Z_{d_1} + ... with d_1 | d_2 | ..., every d_i >= 2.
struct AbelianStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_infinite_cyclic() const { return free_rank == 1 && torsion.empty(); }
  /// "Z", "Z^2 + Z_4", "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;
};

AbelianStructure abelian_structure(const SmithForm& smith);

AbelianStructure abelianization(const LabeledGraph& graph, const SpanningTree& tree);
AbelianStructure abelianization(const LabeledGraph& graph);

/// Abelianization of the quotient by the normal closure of `extra_relators`.
/// Throws UnknownGenerator.
AbelianStructure quotient_abelianization(const Presentation& p,
                                         const std::vector<Word>& extra_relators);

}  // namespace gbsknot
