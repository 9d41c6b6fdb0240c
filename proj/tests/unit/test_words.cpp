#include "gbsknot/error.hpp"
#include "gbsknot/presentation.hpp"
#include "gbsknot/words.hpp"
#include "oracles/britton_bfs.hpp"
#include "oracles/random_graphs.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace gbsknot;

namespace {

LabeledGraph make(std::vector<Edge> edges, std::vector<std::string> vertices = {}) {
  return LabeledGraph::validate({std::move(vertices), std::move(edges)});
}

Word w(const char* text) { return Word::parse(text); }

Word from_letters(const std::string& letters) {
  Word out;
  for (char c : letters) {
    out.append(c == 'a' || c == 'A' ? "a" : "t", c == 'a' || c == 't' ? 1 : -1);
  }
  return out;
}

Word random_word(std::mt19937_64& rng, const std::vector<std::string>& generators,
                 std::size_t max_length) {
  Word out;
  const std::size_t n = oracle::pick(rng, max_length + 1);
  std::uniform_int_distribution<int> e(-3, 3);
  for (std::size_t i = 0; i < n; ++i) {
    out.append(generators[oracle::pick(rng, generators.size())], e(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("word syntax") {
  CHECK(w("t^-1 a1^2 t a1^-3").to_string() == "t^-1 a1^2 t a1^-3");
  CHECK(w("a a a^-1").to_string() == "a");
  CHECK(w("a a^-1").to_string() == "1");
  CHECK(w("1").empty());
  CHECK(w("  ").empty());
  CHECK(w("x^0 y").to_string() == "y");
  CHECK(w("a^2 b").inverse().to_string() == "b^-1 a^-2");
  CHECK(w("a b").power(-2).to_string() == "b^-1 a^-1 b^-1 a^-1");
  CHECK(commutator(w("x"), w("y")).to_string() == "x^-1 y^-1 x y");
  CHECK_THROWS_AS(w("a^"), ParseError);
  CHECK_THROWS_AS(w("a^x"), ParseError);
  CHECK_THROWS_AS(w("3a"), ParseError);
}

TEST_CASE("normal_form examples") {
  const LabeledGraph t23 = make({{"e1", "a", "b", 2, 3}});
  const WordEngine trefoil(t23);
  CHECK(trefoil.normal_form(w("a^2 b^-3")).empty());

  const WordEngine bs12(make({{"t", "a", "a", 1, 2}}));
  CHECK(bs12.normal_form(w("t^-1 a t")) == w("a^2"));

  const WordEngine bs23(make({{"t", "a", "a", 2, 3}}));
  CHECK(bs23.normal_form(w("t^-1 a t")) == w("t^-1 a t"));
}

TEST_CASE("is_identity, equal and is_elliptic examples") {
  const WordEngine trefoil(make({{"e1", "a", "b", 2, 3}}));
  const WordEngine bs12(make({{"t", "a", "a", 1, 2}}));
  const WordEngine bs23(make({{"t", "a", "a", 2, 3}}));

  CHECK(trefoil.is_identity(w("a^2 b^-3")));
  CHECK(bs23.is_identity(w("t^-1 a^2 t a^-3")));
  CHECK_FALSE(bs23.is_identity(w("t^-1 a t a^-1")));

  CHECK(bs23.equal(w("t a"), w("t a")));
  CHECK(bs12.equal(w("t^-1 a t"), w("a^2")));
  CHECK(trefoil.equal(w("a^2"), w("b^3")));

  const WordEngine seg(make({{"e1", "a1", "a2", 2, 3}, {"e2", "a2", "a3", 5, 7}}));
  CHECK(seg.is_elliptic(w("a1^5")));
  CHECK_FALSE(bs23.is_elliptic(w("t")));
  CHECK(bs23.is_elliptic(w("t^-1 a^2 t")));
  CHECK(bs23.equal(w("t^-1 a^2 t"), w("a^3")));
  CHECK_THROWS_AS(bs23.is_identity(w("b")), Error);
}

TEST_CASE("verify_homomorphism examples") {
  const LabeledGraph t23 = make({{"e1", "a", "b", 2, 3}});
  CHECK(verify_homomorphism({w("a^2 b^-3")}, {{"a", w("a")}, {"b", w("b")}}, t23,
                            spanning_tree(t23)));

  const LabeledGraph seg = make({{"e1", "a1", "a2", 2, 3}, {"e2", "a2", "a3", 5, 7}});
  CHECK(verify_homomorphism({w("x^10 y^-21")}, {{"x", w("a1")}, {"y", w("a3")}}, seg,
                            spanning_tree(seg)));
  CHECK_FALSE(verify_homomorphism({w("x^10 y^-20")}, {{"x", w("a1")}, {"y", w("a3")}}, seg,
                                  spanning_tree(seg)));

  const LabeledGraph bs23 = make({{"t", "a", "a", 2, 3}});
  const Word r = w("t") * commutator(w("a"), w("t"));
  CHECK(verify_homomorphism({w("r^-1 a^2 r a^-3")}, {{"a", w("a")}, {"r", r}}, bs23,
                            spanning_tree(bs23)));
  CHECK_THROWS_AS(verify_homomorphism({w("z")}, {}, bs23, spanning_tree(bs23)), Error);
}

TEST_CASE("cycle relation through a tree path") {
  const LabeledGraph cycle = make({{"e1", "a1", "a2", 2, 3}, {"e2", "a2", "a1", 5, 7}});
  const WordEngine engine(cycle, SpanningTree({"e1"}));
  // a1^10 = a2^15 and e2^-1 a2^5 e2 = a1^7, so e2^-1 a1^10 e2 = a1^21.
  CHECK(engine.is_identity(w("e2^-1 a1^10 e2 a1^-21")));
  CHECK_FALSE(engine.is_identity(w("e2^-1 a1^10 e2 a1^-20")));
}

TEST_CASE("defining relators are identities and normal forms are sound") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 150; ++i) {
    const LabeledGraph g = oracle::random_graph(rng, 5, 6, oracle::pick(rng, 3));
    const SpanningTree tree = oracle::random_spanning_tree(g, rng);
    const WordEngine engine(g, tree);
    const Presentation& p = engine.presentation();
    for (const Word& r : p.relators) CHECK(engine.is_identity(r));
    const AbelianStructure ab = abelianization(g, tree);
    for (int k = 0; k < 5; ++k) {
      const Word x = random_word(rng, p.generators(), 6);
      const Word nf = engine.normal_form(x);
      CHECK(engine.normal_form(nf) == nf);
      CHECK(engine.equal(x, nf));
      CHECK(quotient_abelianization(p, {x * nf.inverse()}) == ab);
    }
  }
}

TEST_CASE("conjugation preserves ellipticity") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    const LabeledGraph g = oracle::random_graph(rng, 4, 6, 1 + oracle::pick(rng, 2));
    const WordEngine engine(g);
    const auto gens = engine.presentation().generators();
    for (int k = 0; k < 5; ++k) {
      const Word x = random_word(rng, gens, 4);
      const Word u = random_word(rng, gens, 4);
      CHECK(engine.is_elliptic(x) == engine.is_elliptic(u * x * u.inverse()));
    }
    for (const auto& v : g.vertices()) {
      const Word u = random_word(rng, gens, 4);
      CHECK(engine.is_elliptic(u * Word::letter(v, 3) * u.inverse()));
    }
  }
}

TEST_CASE("is_identity agrees with the normal-closure search on short words") {
  const auto words = oracle::reduced_words(6);
  for (int p = 2; p <= 5; ++p) {
    for (int q = 2; q <= 5; ++q) {
      const std::string relator = oracle::bs_relator(p, q);
      const oracle::NormalClosureBfs closure(relator, std::max<std::size_t>(8, relator.size() + 2));
      const WordEngine engine(make({{"t", "a", "a", p, q}}));
      std::size_t trivial = 0;
      for (const auto& letters : words) {
        const bool expected = closure.contains(letters);
        trivial += expected;
        CHECK_MESSAGE(engine.is_identity(from_letters(letters)) == expected,
                      "BS(" << p << "," << q << ") word " << letters);
      }
      CHECK(trivial >= 1);
    }
  }
}

TEST_CASE("step budget") {
  const LabeledGraph g = make({{"t", "a", "a", 1, 2}});
  WordEngineOptions tiny;
  tiny.step_budget = 5;
  const WordEngine engine(g, tiny);
  try {
    engine.is_identity(w("t^-1 a t a t^-1 a t a t^-1 a t"));
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StepBudgetExceeded);
  }

  setenv("GBSKNOT_STEP_BUDGET", "123", 1);
  CHECK(WordEngineOptions::from_environment().step_budget == 123);
  unsetenv("GBSKNOT_STEP_BUDGET");
  CHECK(WordEngineOptions::from_environment().step_budget == 1'000'000);
}
