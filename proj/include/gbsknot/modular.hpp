#pragma once

#include "gbsknot/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gbsknot {

/// Nonzero rational in lowest terms with a positive denominator.
class Fraction {
 public:
  Fraction(Integer numerator, Integer denominator);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

 private:
  Integer num_;
  Integer den_;
};

/// Image of t_e under the modular homomorphism, with the convention that
/// t^-1 a^p t = a^q gives p/q. Walks the tree path from endpoint 1 of `e`
/// to endpoint 0 and then crosses `e`, multiplying
/// (label where an edge is left) / (label where it is entered).
/// Throws EdgeInTree or UnknownEdge.
Fraction loop_modulus(const LabeledGraph& graph, const SpanningTree& tree,
                      std::string_view edge_id);

enum class ModularTag { Trivial, PlusMinusOne, General };

std::string_view name(ModularTag tag);

struct ModularGenerator {
  std::string edge;
  Fraction value;
};

/// Generators of the image of the modular homomorphism in Q*, one per
/// non-tree edge.
struct ModularImage {
  std::vector<ModularGenerator> generators;
  ModularTag tag = ModularTag::Trivial;

  std::vector<Fraction> values() const;
};

ModularImage modular_image(const LabeledGraph& graph, const SpanningTree& tree);
ModularImage modular_image(const LabeledGraph& graph);

/// Whether two finite sets generate the same subgroup of Q*. Values are
/// split over a common coprime base and the generated lattices (with the
/// sign as a Z/2 coordinate) are compared in Hermite normal form.
bool same_subgroup(const std::vector<Fraction>& a, const std::vector<Fraction>& b);

}  // namespace gbsknot
