#include <catch2/catch_amalgamated.hpp>

#include "rankers/oracle.hpp"
#include "rankers/syntax.hpp"
#include "rankers/transforms/ranker_formulas.hpp"

using namespace rankers;

TEST_CASE("corpus sizes", "[oracle]") {
  CHECK(build_corpus("ab", 4, 0, 0).words.size() == 31);
  const Corpus lassos = build_corpus("ab", 0, 2, 2);
  CHECK(lassos.words.size() == 1 + 42);
  const Corpus tiny = build_corpus("a", 2, 1, 1);
  std::vector<std::string> got;
  for (const Word& w : tiny.words) got.push_back(w.to_string());
  CHECK(got == std::vector<std::string>{"_", "a", "aa", "|a", "a|a"});
}

TEST_CASE("standard corpora", "[oracle]") {
  const Corpus& ab = standard_corpus_ab();
  CHECK(ab.finite_max == 6);
  CHECK(ab.lasso_u_max == 3);
  CHECK(ab.lasso_v_max == 3);
  CHECK(ab.words.size() == 127 + 15 * 14);
  const Corpus& abc = standard_corpus_abc();
  CHECK(abc.words.size() == 364 + 13 * 39);
  CHECK(&standard_corpus_ab() == &ab);
}

TEST_CASE("corpus guard", "[oracle]") {
  CHECK_THROWS_AS(build_corpus("abcdefgh", 9, 0, 0), std::length_error);
}

TEST_CASE("corpus order is deterministic", "[oracle]") {
  const Corpus a = build_corpus("ab", 3, 2, 2), b = build_corpus("ab", 3, 2, 2);
  REQUIRE(a.words.size() == b.words.size());
  for (std::size_t i = 0; i < a.words.size(); ++i) REQUIRE(a.words[i].to_string() == b.words[i].to_string());
}

TEST_CASE("equiv finds the first disagreement", "[oracle]") {
  auto cex = equiv(accept(tl::parse("Xa(T)")), accept(tl::parse("Ya(T)")), standard_corpus(LetterSet::of("a")));
  REQUIRE(cex);
  CHECK(cex->word == Word::lasso("", "a"));
  CHECK(cex->left);
  CHECK_FALSE(cex->right);
  CHECK(cex->kind == "disagreement");
  const auto j = cex->to_json();
  CHECK(j["word"] == "|a");
  CHECK(j["left"] == true);
  for (const char* s : {"Xa(!Yb(T))", "Gn:a | Hn:b", "T"}) {
    auto f = accept(tl::parse(s));
    CHECK_FALSE(equiv(f, f, standard_corpus_abc(), true));
  }
}

TEST_CASE("FO acceptors restrict both sides to finite words", "[oracle]") {
  auto f = accept(fo::parse("E x. lab(x) = a"));
  auto t = accept(tl::parse("Xa(T)"));
  CHECK_FALSE(equiv(f, t, standard_corpus_ab()));
  auto lasso_only = accept_predicate("is lasso", [](const Word& w) { return w.is_lasso(); });
  auto never = accept_predicate("never", [](const Word&) { return false; });
  CHECK_FALSE(equiv(intersection_of({f, lasso_only}), never, standard_corpus_ab()));
}

TEST_CASE("combinators", "[oracle]") {
  auto xa = accept(tl::parse("Xa(T)"));
  auto xb = accept(tl::parse("Xb(T)"));
  CHECK_FALSE(equiv(union_of({xa, xb}), accept(tl::parse("Xa(T) | Xb(T)")), standard_corpus_ab()));
  CHECK_FALSE(equiv(intersection_of({xa, xb}), accept(tl::parse("Xa(T) & Xb(T)")), standard_corpus_ab()));
  CHECK_FALSE(equiv(complement(xa), accept(tl::parse("Gn:a")), standard_corpus_ab()));
}

TEST_CASE("re-encoding check catches representation-dependent acceptors", "[oracle]") {
  auto literal = accept_predicate("prefix empty", [](const Word& w) { return w.prefix().empty(); });
  auto same = literal;
  CHECK_FALSE(equiv(literal, same, standard_corpus_ab()));
  auto cex = equiv(literal, same, standard_corpus_ab(), true);
  REQUIRE(cex);
  CHECK(cex->kind == "representation");
}

TEST_CASE("position sweeps", "[oracle]") {
  const Ranker xa = parse_ranker("Xa");
  CHECK_FALSE(position_sweep(lemma2_rho(xa), xa, Relation::greater, standard_corpus_ab(), false));
  const Ranker xla = parse_ranker("XLa");
  CHECK_FALSE(position_sweep(lemma3_theta(xla), xla, Relation::less_eq, standard_corpus_ab(), true));
  auto cex = position_sweep(lemma2_rho(xa), parse_ranker("Xb"), Relation::greater, standard_corpus_ab(), false);
  REQUIRE(cex);
  CHECK(cex->position.has_value());
}

TEST_CASE("relations", "[oracle]") {
  const Position i = Position::inf(), one = Position::fin(1);
  CHECK(holds(Relation::less, one, i, false));
  CHECK_FALSE(holds(Relation::less, i, i, false));
  CHECK(holds(Relation::less, i, i, true));
  CHECK(holds(Relation::less_eq, i, i, false));
  CHECK(holds(Relation::greater_eq, one, one, false));
}

TEST_CASE("equiv is deterministic", "[oracle]") {
  auto a = accept(tl::parse("Xa(!Yb(T))"));
  auto b = accept(tl::parse("Gn:b | Xb(Ya(T))"));
  auto c1 = equiv(a, b, standard_corpus_abc());
  auto c2 = equiv(a, b, standard_corpus_abc());
  REQUIRE(c1);
  REQUIRE(c2);
  CHECK(c1->word == c2->word);
  CHECK(c1->to_text() == c2->to_text());
}
