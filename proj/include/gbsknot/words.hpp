#pragma once

#include "gbsknot/graph.hpp"
#include "gbsknot/presentation.hpp"
#include "gbsknot/word.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gbsknot {

struct WordEngineOptions {
  /// Maximum number of letter pushes per reduction. Exceeding it raises
  /// StepBudgetExceeded; it never turns into an answer.
  std::uint64_t step_budget = 1'000'000;

  /// Defaults, with GBSKNOT_STEP_BUDGET overriding the budget when set to
  /// a positive integer.
  static WordEngineOptions from_environment();
};

/// Word problem solver for the fundamental group of a labeled graph.
///
/// A word over the presentation generators is rewritten as a closed path in
/// the graph of groups based at the tree root: g_v becomes
/// (root->v) g_v (v->root) along the tree and t_e becomes
/// (root->src) e (dst->root). Every edge, tree or not, is then an HNN-style
/// letter and the path is reduced left to right with a stack, pinching
/// e^-1 g^(m*lambda(e)) e -> g'^(m*lambda(e-bar)) and its mirror image.
/// A reduced path with at least one edge letter is nontrivial; tree letters
/// are dropped again when the path is read back as a word.
class WordEngine {
 public:
  WordEngine(LabeledGraph graph, SpanningTree tree, WordEngineOptions options = {});
  explicit WordEngine(LabeledGraph graph, WordEngineOptions options = {});

  const LabeledGraph& graph() const { return graph_; }
  const SpanningTree& tree() const { return tree_; }
  const Presentation& presentation() const { return presentation_; }

  /// Equal to `w`, freely reduced, with no pinch left. Throws
  /// UnknownGenerator or StepBudgetExceeded.
  Word normal_form(const Word& w) const;
  bool is_identity(const Word& w) const;
  bool equal(const Word& a, const Word& b) const;
  /// Conjugate to a power of a vertex generator.
  bool is_elliptic(const Word& w) const;

  /// Every source relator, after substituting `images` for its letters, is
  /// the identity here. Throws UnknownGenerator when a source letter has
  /// no image.
  bool verify_homomorphism(const std::vector<Word>& source_relators,
                           const std::map<std::string, Word>& images) const;

 private:
  struct Letter {
    std::size_t edge;
    int direction;  // +1 runs endpoint 0 -> 1
  };
  struct Path {
    std::vector<Integer> exponents;  // exponents.size() == letters.size() + 1
    std::vector<std::size_t> at;     // vertex of each exponent
    std::vector<Letter> letters;
  };
  class Reducer;

  Path reduce(const Word& w) const;
  Word read_back(const Path& path) const;

  LabeledGraph graph_;
  SpanningTree tree_;
  WordEngineOptions options_;
  Presentation presentation_;
  std::vector<bool> in_tree_;
  std::vector<std::vector<Letter>> down_;  // root -> v along the tree
};

Word normal_form(const LabeledGraph& g, const SpanningTree& t, const Word& w);
bool is_identity(const LabeledGraph& g, const SpanningTree& t, const Word& w);
bool equal(const LabeledGraph& g, const SpanningTree& t, const Word& a, const Word& b);
bool is_elliptic(const LabeledGraph& g, const SpanningTree& t, const Word& w);
bool verify_homomorphism(const std::vector<Word>& source_relators,
                         const std::map<std::string, Word>& images, const LabeledGraph& g,
                         const SpanningTree& t);

}  // namespace gbsknot
