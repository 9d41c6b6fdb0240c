#include "gbsknot/words.hpp"

#include "gbsknot/error.hpp"

#include <cstdlib>
#include <deque>
#include <limits>
#include <utility>

namespace gbsknot {

WordEngineOptions WordEngineOptions::from_environment() {
  WordEngineOptions options;
  if (const char* raw = std::getenv("GBSKNOT_STEP_BUDGET")) {
    auto parsed = parse_integer(raw);
    if (parsed && *parsed > 0 && *parsed <= std::numeric_limits<std::uint64_t>::max()) {
      options.step_budget = static_cast<std::uint64_t>(*parsed);
    }
  }
  return options;
}

class WordEngine::Reducer {
 public:
  explicit Reducer(const WordEngine& engine) : engine_(engine) {
    path_.exponents.emplace_back(0);
    path_.at.push_back(0);
  }

  void push_generator(const std::string& name, const Integer& exponent) {
    const LabeledGraph& g = engine_.graph_;
    if (g.has_vertex(name)) {
      const std::size_t v = g.vertex_index(name);
      push_down(v);
      tick();
      path_.exponents.back() += exponent;
      push_up(v);
      return;
    }
    if (g.has_edge(name) && !engine_.in_tree_[g.edge_index(name)]) {
      const std::size_t ei = g.edge_index(name);
      const Edge& e = g.edges()[ei];
      const int direction = exponent > 0 ? 1 : -1;
      const std::size_t from = g.vertex_index(direction > 0 ? e.source : e.target);
      const std::size_t to = g.vertex_index(direction > 0 ? e.target : e.source);
      for (Integer i = abs(exponent); i > 0; --i) {
        push_down(from);
        push_letter({ei, direction});
        push_up(to);
      }
      return;
    }
    throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + name + "'", name);
  }

  void push_word(const Word& w) {
    for (const auto& s : w.syllables()) push_generator(s.generator, s.exponent);
  }

  Path take() && { return std::move(path_); }

 private:
  void tick() {
    if (++steps_ > engine_.options_.step_budget) {
      throw Error(ErrorCode::StepBudgetExceeded,
                  "word reduction exceeded " + std::to_string(engine_.options_.step_budget) +
                      " steps");
    }
  }

  void push_down(std::size_t v) {
    for (const Letter& l : engine_.down_[v]) push_letter(l);
  }

  void push_up(std::size_t v) {
    const auto& down = engine_.down_[v];
    for (auto it = down.rbegin(); it != down.rend(); ++it) push_letter({it->edge, -it->direction});
  }

  void push_letter(Letter l) {
    tick();
    const Edge& e = engine_.graph_.edges()[l.edge];
    const int from_end = l.direction > 0 ? 0 : 1;
    if (!path_.letters.empty()) {
      const Letter& prev = path_.letters.back();
      if (prev.edge == l.edge && prev.direction == -l.direction &&
          path_.exponents.back() % e.label(from_end) == 0) {
        Integer moved = path_.exponents.back() / e.label(from_end) * e.label(1 - from_end);
        path_.exponents.pop_back();
        path_.at.pop_back();
        path_.letters.pop_back();
        path_.exponents.back() += moved;
        return;
      }
    }
    path_.letters.push_back(l);
    path_.exponents.emplace_back(0);
    path_.at.push_back(engine_.graph_.vertex_index(e.endpoint(1 - from_end)));
  }

  const WordEngine& engine_;
  Path path_;
  std::uint64_t steps_ = 0;
};

WordEngine::WordEngine(LabeledGraph graph, SpanningTree tree, WordEngineOptions options)
    : graph_(std::move(graph)),
      tree_(std::move(tree)),
      options_(options),
      presentation_(build_presentation(graph_, tree_)) {
  const auto& edges = graph_.edges();
  in_tree_.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) in_tree_[i] = tree_.contains(edges[i].id);

  const std::size_t n = graph_.vertices().size();
  down_.assign(n, {});
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    const std::string& vid = graph_.vertices()[v];
    for (std::size_t ei : graph_.incident_edges(vid)) {
      if (!in_tree_[ei]) continue;
      const Edge& e = edges[ei];
      const int direction = e.source == vid ? 1 : -1;
      const std::size_t w = graph_.vertex_index(direction > 0 ? e.target : e.source);
      if (seen[w]) continue;
      seen[w] = true;
      down_[w] = down_[v];
      down_[w].push_back({ei, direction});
      queue.push_back(w);
    }
  }
}

WordEngine::WordEngine(LabeledGraph graph, WordEngineOptions options)
    : WordEngine(graph, spanning_tree(graph), options) {}

WordEngine::Path WordEngine::reduce(const Word& w) const {
  Reducer r(*this);
  r.push_word(w);
  return std::move(r).take();
}

Word WordEngine::read_back(const Path& path) const {
  Word out;
  out.append(graph_.vertices()[path.at[0]], path.exponents[0]);
  for (std::size_t i = 0; i < path.letters.size(); ++i) {
    const Letter& l = path.letters[i];
    if (!in_tree_[l.edge]) out.append(graph_.edges()[l.edge].id, l.direction);
    out.append(graph_.vertices()[path.at[i + 1]], path.exponents[i + 1]);
  }
  return out;
}

Word WordEngine::normal_form(const Word& w) const { return read_back(reduce(w)); }

bool WordEngine::is_identity(const Word& w) const {
  const Path p = reduce(w);
  return p.letters.empty() && p.exponents.front() == 0;
}

bool WordEngine::equal(const Word& a, const Word& b) const { return is_identity(a * b.inverse()); }

bool WordEngine::is_elliptic(const Word& w) const {
  Path p = reduce(w);
  // Cyclic reduction: fold the last vertex exponent into the first, then
  // pinch across the seam while the outer letters cancel.
  while (!p.letters.empty()) {
    p.exponents.front() += p.exponents.back();
    p.exponents.back() = 0;
    const std::size_t n = p.letters.size();
    const Letter first = p.letters.front();
    const Letter last = p.letters.back();
    if (n < 2 || first.edge != last.edge || first.direction != -last.direction) return false;
    const Edge& e = graph_.edges()[first.edge];
    const int from_end = first.direction > 0 ? 0 : 1;
    if (p.exponents.front() % e.label(from_end) != 0) return false;
    Integer moved = p.exponents.front() / e.label(from_end) * e.label(1 - from_end);

    Path next;
    next.exponents.assign(p.exponents.begin() + 1, p.exponents.end() - 1);
    next.at.assign(p.at.begin() + 1, p.at.end() - 1);
    next.letters.assign(p.letters.begin() + 1, p.letters.end() - 1);
    next.exponents.front() += moved;
    p = std::move(next);
  }
  return true;
}

bool WordEngine::verify_homomorphism(const std::vector<Word>& source_relators,
                                     const std::map<std::string, Word>& images) const {
  for (const Word& relator : source_relators) {
    Reducer r(*this);
    for (const auto& s : relator.syllables()) {
      auto it = images.find(s.generator);
      if (it == images.end()) {
        throw Error(ErrorCode::UnknownGenerator, "no image for source generator '" + s.generator + "'",
                    s.generator);
      }
      const Word& image = it->second;
      if (image.size() == 1) {
        const Syllable& only = image.syllables().front();
        r.push_generator(only.generator, only.exponent * s.exponent);
        continue;
      }
      const Word step = s.exponent < 0 ? image.inverse() : image;
      for (Integer i = abs(s.exponent); i > 0; --i) r.push_word(step);
    }
    const Path p = std::move(r).take();
    if (!p.letters.empty() || p.exponents.front() != 0) return false;
  }
  return true;
}

Word normal_form(const LabeledGraph& g, const SpanningTree& t, const Word& w) {
  return WordEngine(g, t).normal_form(w);
}

bool is_identity(const LabeledGraph& g, const SpanningTree& t, const Word& w) {
  return WordEngine(g, t).is_identity(w);
}

bool equal(const LabeledGraph& g, const SpanningTree& t, const Word& a, const Word& b) {
  return WordEngine(g, t).equal(a, b);
}

bool is_elliptic(const LabeledGraph& g, const SpanningTree& t, const Word& w) {
  return WordEngine(g, t).is_elliptic(w);
}

bool verify_homomorphism(const std::vector<Word>& source_relators,
                         const std::map<std::string, Word>& images, const LabeledGraph& g,
                         const SpanningTree& t) {
  return WordEngine(g, t).verify_homomorphism(source_relators, images);
}

}  // namespace gbsknot
