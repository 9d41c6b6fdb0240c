#include "gbsknot/modular.hpp"

#include "gbsknot/error.hpp"
#include "gbsknot/matrix.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace gbsknot {
namespace {

struct TreeStep {
  std::size_t edge;
  int from_end;  // end of the edge at the vertex being left
};

// Tree path from `from` to `to` as a list of edge traversals.
std::vector<TreeStep> tree_path(const LabeledGraph& g, const SpanningTree& tree,
                                const std::string& from, const std::string& to) {
  const std::size_t n = g.vertices().size();
  std::vector<std::optional<TreeStep>> arrived_by(n);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{g.vertex_index(from)};
  seen[queue.front()] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    const std::string& vid = g.vertices()[v];
    for (std::size_t ei : g.incident_edges(vid)) {
      const Edge& e = g.edges()[ei];
      if (!tree.contains(e.id)) continue;
      const int from_end = e.source == vid ? 0 : 1;
      const std::size_t w = g.vertex_index(e.endpoint(1 - from_end));
      if (seen[w]) continue;
      seen[w] = true;
      arrived_by[w] = TreeStep{ei, from_end};
      queue.push_back(w);
    }
  }
  std::vector<TreeStep> path;
  for (std::size_t v = g.vertex_index(to); arrived_by[v];) {
    const TreeStep step = *arrived_by[v];
    path.push_back(step);
    v = g.vertex_index(g.edges()[step.edge].endpoint(step.from_end));
  }
  std::reverse(path.begin(), path.end());
  return path;
}

class CoprimeBase {
 public:
  void add(const Integer& value) {
    std::vector<Integer> work{abs(value)};
    while (!work.empty()) {
      Integer x = std::move(work.back());
      work.pop_back();
      if (x <= 1) continue;
      bool split = false;
      for (std::size_t i = 0; i < base_.size(); ++i) {
        Integer g = gcd(x, base_[i]);
        if (g == 1) continue;
        Integer b = std::move(base_[i]);
        base_.erase(base_.begin() + static_cast<std::ptrdiff_t>(i));
        work.push_back(b / g);
        work.push_back(x / g);
        work.push_back(std::move(g));
        split = true;
        break;
      }
      if (!split) base_.push_back(std::move(x));
    }
  }

  std::vector<Integer> exponents(const Integer& value) const {
    Integer rest = abs(value);
    std::vector<Integer> out(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) {
      while (rest % base_[i] == 0) {
        rest /= base_[i];
        ++out[i];
      }
    }
    return out;
  }

  std::size_t size() const { return base_.size(); }

 private:
  std::vector<Integer> base_;
};

IntMatrix lattice(const std::vector<Fraction>& values, const CoprimeBase& base) {
  IntMatrix m(0, base.size() + 1);
  std::vector<Integer> two(base.size() + 1);
  two[0] = 2;
  m.append_row(two);
  for (const auto& f : values) {
    std::vector<Integer> row{Integer(f.numerator() < 0 ? 1 : 0)};
    const auto num = base.exponents(f.numerator());
    const auto den = base.exponents(f.denominator());
    for (std::size_t i = 0; i < num.size(); ++i) row.push_back(num[i] - den[i]);
    m.append_row(row);
  }
  return hermite_normal_form(std::move(m));
}

}  // namespace

Fraction::Fraction(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_ == 0 || den_ == 0) {
    throw Error(ErrorCode::PreconditionFailed, "modular values are nonzero rationals");
  }
  const Integer g = gcd(num_, den_);
  num_ /= g;
  den_ /= g;
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::string Fraction::to_string() const {
  if (den_ == 1) return gbsknot::to_string(num_);
  return gbsknot::to_string(num_) + "/" + gbsknot::to_string(den_);
}

Fraction loop_modulus(const LabeledGraph& graph, const SpanningTree& tree,
                      std::string_view edge_id) {
  const Edge& e = graph.edge(edge_id);
  if (tree.contains(e.id)) {
    throw Error(ErrorCode::EdgeInTree, "edge '" + e.id + "' belongs to the spanning tree", e.id);
  }
  Integer num = e.source_label;
  Integer den = e.target_label;
  for (const TreeStep& step : tree_path(graph, tree, e.target, e.source)) {
    const Edge& f = graph.edges()[step.edge];
    num *= f.label(step.from_end);
    den *= f.label(1 - step.from_end);
  }
  return Fraction(std::move(num), std::move(den));
}

std::string_view name(ModularTag tag) {
  switch (tag) {
    case ModularTag::Trivial: return "trivial";
    case ModularTag::PlusMinusOne: return "plus_minus_one";
    case ModularTag::General: return "general";
  }
  return "";
}

std::vector<Fraction> ModularImage::values() const {
  std::vector<Fraction> out;
  for (const auto& g : generators) out.push_back(g.value);
  return out;
}

ModularImage modular_image(const LabeledGraph& graph, const SpanningTree& tree) {
  check_spanning_tree(graph, tree);
  ModularImage image;
  bool all_one = true;
  bool all_unit = true;
  for (const auto& e : graph.edges()) {
    if (tree.contains(e.id)) continue;
    Fraction f = loop_modulus(graph, tree, e.id);
    if (f.denominator() != 1 || f.numerator() != 1) all_one = false;
    if (f.denominator() != 1 || abs(f.numerator()) != 1) all_unit = false;
    image.generators.push_back({e.id, std::move(f)});
  }
  image.tag = all_one    ? ModularTag::Trivial
              : all_unit ? ModularTag::PlusMinusOne
                         : ModularTag::General;
  return image;
}

ModularImage modular_image(const LabeledGraph& graph) {
  return modular_image(graph, spanning_tree(graph));
}

bool same_subgroup(const std::vector<Fraction>& a, const std::vector<Fraction>& b) {
  CoprimeBase base;
  for (const auto* set : {&a, &b}) {
    for (const auto& f : *set) {
      base.add(f.numerator());
      base.add(f.denominator());
    }
  }
  return lattice(a, base) == lattice(b, base);
}

}  // namespace gbsknot
