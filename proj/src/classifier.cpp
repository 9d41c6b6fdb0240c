#include "gbsknot/classifier.hpp"

#include "gbsknot/error.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <stdexcept>

namespace gbsknot {
namespace {

Integer product_k(const std::vector<LabelPair>& labels) {
  Integer p = 1;
  for (const auto& x : labels) p *= x.k;
  return p;
}

Integer product_l(const std::vector<LabelPair>& labels) {
  Integer p = 1;
  for (const auto& x : labels) p *= x.l;
  return p;
}

bool is_prime(const Integer& n) {
  return n >= 2 && boost::multiprecision::miller_rabin_test(n, 25);
}

std::string pair_string(const Integer& a, const Integer& b) {
  return "(" + to_string(a) + "," + to_string(b) + ")";
}

Witness bs_source(const Integer& k, const Integer& l) {
  Witness w;
  w.source = "BS" + pair_string(k, l);
  w.source_generators = {"a", "r"};
  w.source_relators = {Word::letter("r", -1) * Word::letter("a", k) * Word::letter("r") *
                       Word::letter("a", -l)};
  return w;
}

// Non-tree edge of a cycle graph, as the stable letter oriented a_j -> a_{j+1}.
Word stable_letter(const CycleView& view, const LabeledGraph& graph) {
  const SpanningTree tree = spanning_tree(graph);
  for (std::size_t j = 0; j < view.edges.size(); ++j) {
    if (!tree.contains(view.edges[j])) return Word::letter(view.edges[j], view.forward[j] ? 1 : -1);
  }
  throw std::logic_error("cycle has no edge outside its spanning tree");
}

OneKnotVerdict one_knot_of(const Shape& shape,
                           const std::optional<ExceptionalGroup>& exceptional,
                           const AbelianStructure& ab) {
  OneKnotVerdict v;
  if (exceptional == ExceptionalGroup::Z) {
    v.status = Status::Unknot;
    v.reason = "group is Z";
    return v;
  }
  if (exceptional) {
    v.reason = "group is " + std::string(name(*exceptional));
    return v;
  }
  const auto* segment = std::get_if<SegmentView>(&shape);
  if (!segment || segment->edges.size() != 1) {
    v.reason = "reduced graph is not a single edge: " + describe(shape);
    return v;
  }
  const Integer p = abs(segment->labels[0].k);
  const Integer q = abs(segment->labels[0].l);
  if (gcd(p, q) != 1) {
    v.reason = "labels " + to_string(p) + " and " + to_string(q) + " are not coprime";
    return v;
  }
  if (!ab.is_infinite_cyclic()) {
    v.reason = "abelianization is " + ab.to_string() + ", not Z";
    return v;
  }
  v.status = Status::Yes;
  v.p = p;
  v.q = q;
  v.both_prime = is_prime(p) && is_prime(q);
  return v;
}

struct NKnotParts {
  NKnotVerdict verdict;
  std::optional<CycleCheck> cycle;
  std::optional<CoprimeCheck> coprime;
};

NKnotParts n_knot_of(const Shape& shape, const std::optional<ExceptionalGroup>& exceptional,
                     std::size_t b1, const AbelianStructure& ab, const ClassifyOptions& options) {
  NKnotParts out;
  NKnotVerdict& v = out.verdict;
  if (exceptional == ExceptionalGroup::Z) {
    v.status = Status::Unknot;
    v.reason = "group is Z";
    return out;
  }
  if (exceptional) {
    v.reason = "group is " + std::string(name(*exceptional));
    return out;
  }
  if (b1 > 1) {
    v.reason = "first Betti number " + std::to_string(b1) + " exceeds 1, abelianization is " +
               ab.to_string();
    return out;
  }
  if (const auto* segment = std::get_if<SegmentView>(&shape)) {
    out.coprime = segment_coprime_check(*segment);
    if (!out.coprime->ok) {
      const auto& bad = *out.coprime->violation;
      v.reason = "segment labels not coprime: l_" + std::to_string(bad.l_index) + "=" +
                 to_string(bad.l) + ", k_" + std::to_string(bad.k_index) + "=" + to_string(bad.k);
      return out;
    }
    if (!ab.is_infinite_cyclic()) {
      v.reason = "abelianization is " + ab.to_string() + ", not Z";
      return out;
    }
    Witness w = torus_witness(*segment, options.words);
    if (!w.verified) throw std::logic_error("torus-knot witness failed verification");
    v.status = Status::Yes;
    v.source = ImageSource::TorusImage;
    v.k = product_k(segment->labels);
    v.l = product_l(segment->labels);
    v.witnesses.push_back(std::move(w));
    return out;
  }
  if (const auto* cycle = std::get_if<CycleView>(&shape)) {
    out.cycle = cycle_knot_check(*cycle);
    if (!out.cycle->ok) {
      v.reason = out.cycle->reason;
      return out;
    }
    const Integer k = abs(out.cycle->k_product);
    const Integer l = abs(out.cycle->l_product);
    Witness w = (k == 1 || l == 1) ? loop_identity_witness(*cycle, options.words)
                                   : bs_embedding_witness(*cycle, options.words);
    if (!w.verified) throw std::logic_error("Baumslag-Solitar witness failed verification");
    v.status = Status::Yes;
    v.source = ImageSource::BSImage;
    v.k = k;
    v.l = l;
    v.witnesses.push_back(std::move(w));
    return out;
  }
  if (const auto* other = std::get_if<OtherShape>(&shape)) {
    v.reason = other->reason;
  }
  return out;
}

}  // namespace

CoprimeCheck segment_coprime_check(const SegmentView& view) {
  CoprimeCheck check;
  const auto& labels = view.labels;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (gcd(labels[i].l, labels[j].k) != 1) {
        check.ok = false;
        check.violation = CoprimeViolation{i + 1, j + 1, labels[i].l, labels[j].k};
        return check;
      }
    }
  }
  return check;
}

CycleCheck cycle_knot_check(const CycleView& view) {
  CycleCheck check;
  check.k_product = product_k(view.labels);
  check.l_product = product_l(view.labels);
  check.strict = abs(check.k_product - check.l_product) == 1;
  check.lenient = abs(abs(check.k_product) - abs(check.l_product)) == 1 &&
                  abelianization(to_graph(view)).is_infinite_cyclic();

  const auto& labels = view.labels;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (gcd(labels[i].k, labels[j].l) != 1) {
        check.reason = "cycle labels not coprime: k_" + std::to_string(i + 1) + "=" +
                       to_string(labels[i].k) + ", l_" + std::to_string(j + 1) + "=" +
                       to_string(labels[j].l);
        return check;
      }
    }
  }
  if (!check.strict) {
    check.reason = "|prod k - prod l| = |" + to_string(check.k_product) + " - " +
                   to_string(check.l_product) + "| = " +
                   to_string(abs(check.k_product - check.l_product)) + ", not 1";
    if (check.lenient) check.reason += " (absolute products differ by 1)";
    return check;
  }
  check.ok = true;
  if (!check.lenient) check.reason = "absolute-value test disagrees with the signed test";
  return check;
}

Witness torus_witness(const SegmentView& view, WordEngineOptions options) {
  const CoprimeCheck coprime = segment_coprime_check(view);
  if (!coprime.ok) {
    throw Error(ErrorCode::PreconditionFailed, "segment labels are not pairwise coprime");
  }
  const auto& labels = view.labels;
  const std::size_t s = labels.size();
  const Integer k = product_k(labels);
  const Integer l = product_l(labels);

  Witness w;
  w.source = "T" + pair_string(k, l);
  w.source_generators = {"x", "y"};
  w.source_relators = {Word::letter("x", k) * Word::letter("y", -l)};
  const std::string& first = view.vertices.front();
  const std::string& last = view.vertices.back();
  w.images = {{"x", Word::letter(first)}, {"y", Word::letter(last)}};

  Integer k_before = labels[0].k;
  Integer l_before = labels[0].l;
  for (std::size_t i = 1; i < s; ++i) {
    Integer k_rest = 1;
    Integer l_rest = 1;
    for (std::size_t j = i; j < s; ++j) {
      k_rest *= labels[j].k;
      l_rest *= labels[j].l;
    }
    const Bezout step = extended_gcd(l_before, labels[i].k);
    const Bezout direct = extended_gcd(l_before, k_rest);
    EliminationStep e;
    e.generator = view.vertices[i];
    e.alpha = step.x;
    e.beta = step.y;
    e.step_word = Word::letter(first, step.x * k_before) *
                  Word::letter(view.vertices[i + 1], step.y * labels[i].l);
    e.word = Word::letter(first, direct.x * k_before) * Word::letter(last, direct.y * l_rest);
    w.elimination.push_back(std::move(e));
    k_before *= labels[i].k;
    l_before *= labels[i].l;
  }

  const WordEngine engine(to_graph(view), options);
  w.verified = engine.verify_homomorphism(w.source_relators, w.images);
  for (const auto& e : w.elimination) {
    const Word a = Word::letter(e.generator);
    w.verified = w.verified && engine.equal(a, e.step_word) && engine.equal(a, e.word);
  }
  return w;
}

Witness bs_embedding_witness(const CycleView& view, WordEngineOptions options) {
  const CycleCheck check = cycle_knot_check(view);
  if (!check.ok) throw Error(ErrorCode::PreconditionFailed, "cycle check failed: " + check.reason);
  const Integer& k = check.k_product;
  const Integer& l = check.l_product;
  if (abs(k) == 1 || abs(l) == 1) {
    throw Error(ErrorCode::PreconditionFailed,
                "k = " + to_string(k) + ", l = " + to_string(l) +
                    ": the group is BS(1,n) and the witness is the identity map");
  }
  const LabeledGraph graph = to_graph(view);
  const WordEngine engine(graph, options);
  const Word s = stable_letter(view, graph);
  const Word a1 = Word::letter(view.vertices.front());

  Witness w = bs_source(k, l);
  const Word conventions[] = {commutator(a1, s), a1 * s * a1.inverse() * s.inverse()};
  for (const Word& bracket : conventions) {
    w.images = {{"a", a1}, {"r", s * bracket}};
    if (engine.verify_homomorphism(w.source_relators, w.images)) {
      w.verified = true;
      return w;
    }
  }
  throw std::logic_error("no commutator convention gives a homomorphism BS" +
                         pair_string(k, l) + " -> G");
}

Witness loop_identity_witness(const CycleView& view, WordEngineOptions options) {
  if (view.edges.size() != 1) {
    throw Error(ErrorCode::PreconditionFailed, "identity witness needs a single loop");
  }
  const LabeledGraph graph = to_graph(view);
  const WordEngine engine(graph, options);
  Witness w = bs_source(view.labels[0].k, view.labels[0].l);
  w.images = {{"a", Word::letter(view.vertices.front())}, {"r", stable_letter(view, graph)}};
  w.verified = engine.verify_homomorphism(w.source_relators, w.images);
  return w;
}

std::string_view name(Status status) {
  switch (status) {
    case Status::Yes: return "yes";
    case Status::No: return "no";
    case Status::Unknot: return "unknot";
  }
  return "";
}

std::string_view name(ImageSource source) {
  switch (source) {
    case ImageSource::TorusImage: return "torus_image";
    case ImageSource::BSImage: return "bs_image";
  }
  return "";
}

OneKnotVerdict classify_1knot(const LabeledGraph& graph, ClassifyOptions) {
  const LabeledGraph reduced = reduce(graph);
  return one_knot_of(shape(reduced), exceptional_group(reduced), abelianization(reduced));
}

NKnotVerdict classify_nknot(const LabeledGraph& graph, ClassifyOptions options) {
  const LabeledGraph reduced = reduce(graph);
  return n_knot_of(shape(reduced), exceptional_group(reduced), betti1(reduced),
                   abelianization(reduced), options)
      .verdict;
}

KnotVerdict classify(const LabeledGraph& graph, ClassifyOptions options) {
  LabeledGraph reduced = reduce(graph);
  Shape s = shape(reduced);
  const auto exceptional = exceptional_group(reduced);
  const std::size_t b1 = betti1(reduced);
  AbelianStructure ab = abelianization(reduced);
  NKnotParts parts = n_knot_of(s, exceptional, b1, ab, options);
  return KnotVerdict{
      one_knot_of(s, exceptional, ab),
      std::move(parts.verdict),
      exceptional,
      reduced,
      std::move(s),
      b1,
      std::move(ab),
      modular_image(reduced),
      std::move(parts.cycle),
      std::move(parts.coprime),
  };
}

}  // namespace gbsknot
