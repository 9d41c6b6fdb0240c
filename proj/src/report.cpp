#include "gbsknot/report.hpp"

#include "gbsknot/dsl.hpp"

namespace gbsknot {
namespace {

Json labels_json(const std::vector<LabelPair>& labels) {
  Json out = Json::array();
  for (const auto& p : labels) out.push_back(Json::array({to_json(p.k), to_json(p.l)}));
  return out;
}

template <class View>
Json view_json(const char* kind, const View& view) {
  Json out;
  out["kind"] = kind;
  out["vertices"] = view.vertices;
  out["edges"] = view.edges;
  out["labels"] = labels_json(view.labels);
  return out;
}

Json word_list(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(w.to_string());
  return out;
}

}  // namespace

Json to_json(const Integer& value) {
  if (fits_int64(value)) return Json(static_cast<std::int64_t>(value));
  return Json(to_string(value));
}

Json to_json(const Shape& shape) {
  if (const auto* v = std::get_if<SingleVertex>(&shape)) {
    return Json{{"kind", "single_vertex"}, {"vertex", v->vertex}};
  }
  if (const auto* s = std::get_if<SegmentView>(&shape)) return view_json("segment", *s);
  if (const auto* c = std::get_if<CycleView>(&shape)) return view_json("cycle", *c);
  return Json{{"kind", "other"}, {"reason", std::get<OtherShape>(shape).reason}};
}

Json to_json(const AbelianStructure& ab) {
  Json torsion = Json::array();
  for (const auto& d : ab.torsion) torsion.push_back(to_json(d));
  return Json{{"rank", ab.free_rank}, {"torsion", torsion}, {"text", ab.to_string()}};
}

Json to_json(const ModularImage& image) {
  Json generators = Json::array();
  for (const auto& g : image.generators) {
    generators.push_back(Json{{"edge", g.edge}, {"value", g.value.to_string()}});
  }
  return Json{{"generators", generators}, {"tag", name(image.tag)}};
}

Json to_json(const Presentation& p) {
  return Json{{"generators", p.generators()}, {"relators", word_list(p.relators)}};
}

Json to_json(const OneKnotVerdict& v) {
  Json out;
  out["status"] = name(v.status);
  if (v.status == Status::Yes) {
    out["p"] = to_json(v.p);
    out["q"] = to_json(v.q);
    out["both_prime"] = v.both_prime;
  } else {
    out["reason"] = v.reason;
  }
  return out;
}

Json to_json(const NKnotVerdict& v) {
  Json out;
  out["status"] = name(v.status);
  if (v.status == Status::Yes) {
    out["source"] = name(v.source);
    out["k"] = to_json(v.k);
    out["l"] = to_json(v.l);
  } else {
    out["reason"] = v.reason;
  }
  return out;
}

Json to_json(const Witness& w) {
  Json out;
  out["source"] = w.source;
  out["relators"] = word_list(w.source_relators);
  Json images = Json::object();
  for (const auto& g : w.source_generators) {
    auto it = w.images.find(g);
    if (it != w.images.end()) images[g] = it->second.to_string();
  }
  out["images"] = images;
  if (!w.elimination.empty()) {
    Json steps = Json::array();
    for (const auto& e : w.elimination) {
      steps.push_back(Json{{"generator", e.generator},
                           {"alpha", to_json(e.alpha)},
                           {"beta", to_json(e.beta)},
                           {"step_word", e.step_word.to_string()},
                           {"word", e.word.to_string()}});
    }
    out["elimination"] = steps;
  }
  out["verified"] = w.verified;
  return out;
}

Json report(const std::string& input, const KnotVerdict& verdict) {
  Json out;
  out["input"] = input;
  out["reduced_graph"] = serialize_graph(verdict.reduced);
  out["shape"] = to_json(verdict.shape);
  out["betti1"] = verdict.betti1;
  out["abelianization"] = to_json(verdict.abelianization);
  out["modular"] = to_json(verdict.modular);
  out["one_knot"] = to_json(verdict.one_knot);
  out["n_knot_ge3"] = to_json(verdict.n_knot);
  out["exceptional"] = verdict.exceptional ? Json(name(*verdict.exceptional)) : Json(nullptr);
  Json witnesses = Json::array();
  for (const auto& w : verdict.n_knot.witnesses) witnesses.push_back(to_json(w));
  out["witnesses"] = witnesses;

  Json checks = Json::object();
  if (verdict.coprime_check) {
    const auto& c = *verdict.coprime_check;
    Json coprime{{"ok", c.ok}};
    if (c.violation) {
      coprime["l_index"] = c.violation->l_index;
      coprime["k_index"] = c.violation->k_index;
    }
    checks["segment_coprime"] = coprime;
  }
  if (verdict.cycle_check) {
    const auto& c = *verdict.cycle_check;
    checks["cycle"] = Json{{"ok", c.ok},
                           {"strict", c.strict},
                           {"lenient", c.lenient},
                           {"k_product", to_json(c.k_product)},
                           {"l_product", to_json(c.l_product)}};
  }
  out["checks"] = checks;
  return out;
}

}  // namespace gbsknot
