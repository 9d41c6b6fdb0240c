#include "gbsknot/error.hpp"
#include "gbsknot/graph.hpp"
#include "oracles/random_graphs.hpp"

#include <doctest.h>

#include <functional>
#include <map>

using namespace gbsknot;

namespace {

LabeledGraph make(std::vector<Edge> edges, std::vector<std::string> vertices = {}) {
  return LabeledGraph::validate({std::move(vertices), std::move(edges)});
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("validate") {
  const LabeledGraph g = make({{"e1", "a", "b", 2, 3}});
  CHECK(g.vertices() == std::vector<std::string>{"a", "b"});
  CHECK(g.edges().size() == 1);
  CHECK(code_of([] { make({{"e1", "a", "b", 0, 3}}); }) == ErrorCode::ZeroLabel);
  CHECK(code_of([] { make({}, {"a", "b"}); }) == ErrorCode::Disconnected);
  CHECK(code_of([] { make({}); }) == ErrorCode::Empty);
  CHECK(code_of([] { make({{"e1", "a", "b", 2, 3}, {"e1", "b", "c", 2, 3}}); }) ==
        ErrorCode::DuplicateId);
  CHECK(code_of([] { make({{"a", "a", "b", 2, 3}}); }) == ErrorCode::DuplicateId);
  CHECK(code_of([] { make({{"e 1", "a", "b", 2, 3}}); }) == ErrorCode::InvalidId);
  CHECK(code_of([] { make({}, {"a", "a"}); }) == ErrorCode::DuplicateId);
}

TEST_CASE("spanning tree") {
  const LabeledGraph segment = make({{"e1", "a", "b", 2, 3}, {"e2", "b", "c", 5, 7}});
  CHECK(spanning_tree(segment).edge_ids() == std::vector<std::string>{"e1", "e2"});
  const LabeledGraph loop = make({{"t", "a", "a", 2, 3}});
  CHECK(spanning_tree(loop).size() == 0);
  const LabeledGraph triangle =
      make({{"e1", "a", "b", 2, 3}, {"e2", "b", "c", 2, 3}, {"e3", "c", "a", 2, 3}});
  CHECK(spanning_tree(triangle).edge_ids() == std::vector<std::string>{"e1", "e2"});

  CHECK_NOTHROW(check_spanning_tree(triangle, SpanningTree({"e2", "e3"})));
  CHECK(code_of([&] { check_spanning_tree(triangle, SpanningTree({"e1"})); }) ==
        ErrorCode::TreeMismatch);
  CHECK(code_of([&] { check_spanning_tree(loop, SpanningTree({"t"})); }) ==
        ErrorCode::TreeMismatch);
}

TEST_CASE("betti1") {
  CHECK(betti1(make({{"e1", "a", "b", 2, 3}, {"e2", "b", "c", 2, 3}, {"e3", "c", "d", 2, 3}})) ==
        0);
  CHECK(betti1(make({{"t", "a", "a", 1, 2}})) == 1);
  CHECK(betti1(make({{"e1", "a", "b", 2, 3}, {"e2", "a", "b", 2, 3}, {"e3", "a", "b", 2, 3}})) ==
        2);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const LabeledGraph g = oracle::random_graph(rng, 6, 9, oracle::pick(rng, 4));
    const std::size_t b = betti1(g);
    CHECK(b + g.vertices().size() == g.edges().size() + 1);
    CHECK((b == 0) == (spanning_tree(g).size() == g.edges().size()));
  }
}

TEST_CASE("is_reduced") {
  CHECK_FALSE(is_reduced(make({{"e1", "a", "b", 1, 2}})));
  CHECK(is_reduced(make({{"t", "a", "a", 1, 2}})));
  CHECK(is_reduced(make({{"e1", "a", "b", 2, 3}})));
  CHECK_FALSE(is_reduced(make({{"e1", "a", "b", 2, -1}})));
}

TEST_CASE("shape") {
  const LabeledGraph segment = make({{"e1", "a1", "a2", 2, 3}, {"e2", "a2", "a3", 5, 7}});
  const Shape s = shape(segment);
  REQUIRE(std::holds_alternative<SegmentView>(s));
  const auto& view = std::get<SegmentView>(s);
  CHECK(view.vertices == std::vector<std::string>{"a1", "a2", "a3"});
  CHECK(view.labels == std::vector<LabelPair>{{2, 3}, {5, 7}});
  CHECK(describe(s) == "segment (2,3),(5,7)");
  CHECK(to_graph(view) == segment);

  const Shape loop = shape(make({{"t", "a", "a", 2, 3}}));
  REQUIRE(std::holds_alternative<CycleView>(loop));
  CHECK(std::get<CycleView>(loop).edges.size() == 1);
  CHECK(std::get<CycleView>(loop).labels == std::vector<LabelPair>{{2, 3}});

  const Shape trident =
      shape(make({{"e1", "c", "u1", 7, 2}, {"e2", "c", "u2", 11, 3}, {"e3", "c", "u3", 13, 5}}));
  REQUIRE(std::holds_alternative<OtherShape>(trident));
  CHECK(std::get<OtherShape>(trident).reason.find("vertex c has degree 3") != std::string::npos);

  const Shape lollipop = shape(make({{"t", "a", "a", 2, 3}, {"p", "a", "u", 2, 3}}));
  REQUIRE(std::holds_alternative<OtherShape>(lollipop));
  CHECK(std::get<OtherShape>(lollipop).reason.find("lollipop") != std::string::npos);

  const Shape b2 = shape(make({{"s", "a", "a", 2, 3}, {"t", "a", "a", 2, 3}}));
  REQUIRE(std::holds_alternative<OtherShape>(b2));

  CHECK(std::holds_alternative<SingleVertex>(shape(make({}, {"a"}))));
  CHECK_THROWS_AS(shape(make({{"e1", "a", "b", 1, 2}})), Error);
}

TEST_CASE("segment view reads from the smaller end") {
  // Same segment declared from the other end: view is reversed with k and l swapped.
  const LabeledGraph forward = make({{"e1", "a", "b", 2, 3}, {"e2", "b", "c", 5, 7}});
  const LabeledGraph reversed = make({{"e1", "c", "b", 7, 5}, {"e2", "b", "a", 3, 2}});
  const SegmentView v1 = std::get<SegmentView>(shape(forward));
  const SegmentView v2 = std::get<SegmentView>(shape(reversed));
  CHECK(v1.vertices == v2.vertices);
  CHECK(v1.labels == v2.labels);

  // Renaming so that c becomes the smallest id flips the reading direction.
  const LabeledGraph renamed = make({{"e1", "z", "y", 2, 3}, {"e2", "y", "x", 5, 7}});
  const SegmentView v3 = std::get<SegmentView>(shape(renamed));
  CHECK(v3.vertices == std::vector<std::string>{"x", "y", "z"});
  CHECK(v3.labels == std::vector<LabelPair>{{7, 5}, {3, 2}});
}

TEST_CASE("cycle view starts at the smallest vertex along the smaller edge") {
  const LabeledGraph g = make({{"e1", "a", "b", 2, 3}, {"e2", "a", "b", 5, 7}});
  const CycleView v = std::get<CycleView>(shape(g));
  CHECK(v.vertices == std::vector<std::string>{"a", "b"});
  CHECK(v.edges == std::vector<std::string>{"e1", "e2"});
  CHECK(v.labels == std::vector<LabelPair>{{2, 3}, {7, 5}});
  CHECK(v.forward == std::vector<bool>{true, false});
}

TEST_CASE("shape kind survives renaming") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const LabeledGraph g = oracle::random_graph(rng, 6, 9, oracle::pick(rng, 2));
    GraphDescription d = g.description();
    std::vector<std::string> names;
    for (std::size_t k = 0; k < d.vertices.size(); ++k) names.push_back("w" + std::to_string(k));
    std::shuffle(names.begin(), names.end(), rng);
    std::map<std::string, std::string> rename;
    for (std::size_t k = 0; k < d.vertices.size(); ++k) rename[d.vertices[k]] = names[k];
    for (auto& v : d.vertices) v = rename[v];
    for (auto& e : d.edges) {
      e.source = rename[e.source];
      e.target = rename[e.target];
      e.id = "f" + e.id;
    }
    const LabeledGraph h = LabeledGraph::validate(d);
    if (!is_reduced(g)) continue;
    const Shape a = shape(g);
    const Shape b = shape(h);
    CHECK(a.index() == b.index());
    if (const auto* sa = std::get_if<SegmentView>(&a)) {
      const auto& sb = std::get<SegmentView>(b);
      std::vector<LabelPair> flipped;
      for (auto it = sb.labels.rbegin(); it != sb.labels.rend(); ++it) flipped.push_back({it->l, it->k});
      CHECK((sa->labels == sb.labels || sa->labels == flipped));
    }
  }
}
