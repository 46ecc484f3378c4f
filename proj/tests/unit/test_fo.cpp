#include <catch2/catch_amalgamated.hpp>

#include "rankers/enumerate.hpp"
#include "rankers/fo.hpp"
#include "rankers/oracle.hpp"
#include "rankers/syntax.hpp"
#include "rankers/transforms/first_order.hpp"

using namespace rankers;

namespace {
fo::Formula P(std::string_view s) { return fo::parse(s); }
const char* kPhi = "E x. A y. (y <= x | lab(y) != a)";
const char* kPsi = "A x. E y. (x < y & lab(y) = a)";

std::vector<Word> finite_words(const Corpus& c) {
  std::vector<Word> out;
  for (const Word& w : c.words)
    if (w.is_finite()) out.push_back(w);
  return out;
}
}  // namespace

TEST_CASE("fo_eval fixtures", "[fo]") {
  for (const Word& w : finite_words(standard_corpus_abc())) {
    // the empty word has no position to pick for x
    CHECK(fo::fo_eval(w, P(kPhi)) == !w.prefix().empty());
    if (!w.prefix().empty()) CHECK_FALSE(fo::fo_eval(w, P(kPsi)));
  }
  CHECK(fo::fo_eval(Word::finite(""), P(kPsi)));
  CHECK(fo::fo_eval(Word::finite("ab"), P("E x. lab(x) = b")));
  CHECK_FALSE(fo::fo_eval(Word::finite("aa"), P("E x. lab(x) = b")));
  CHECK(fo::fo_eval(Word::finite("ab"), P("lab(x) = b"), {{"x", 2}}));
}

TEST_CASE("fo_eval rejects lassos and unbound variables", "[fo]") {
  CHECK_THROWS(fo::fo_eval(Word::lasso("", "a"), P(kPhi)));
  CHECK_THROWS(fo::fo_eval(Word::finite("ab"), P("lab(x) = a")));
}

TEST_CASE("count_variable_names fixtures", "[fo]") {
  CHECK(fo::count_variable_names(P(kPhi)) == 2);
  CHECK(fo::count_variable_names(P("E x. lab(x) = a")) == 1);
  CHECK(fo::count_variable_names(lemma6_sigma(parse_ranker("Xa Yb Xa"))) == 4);
}

TEST_CASE("is_sigma2_shape fixtures", "[fo]") {
  CHECK(fo::is_sigma2_shape(P(kPhi)));
  CHECK_FALSE(fo::is_sigma2_shape(P(kPsi)));
  CHECK(fo::is_sigma2_shape(P("lab(x) = a & x < y")));
  CHECK(fo::is_sigma2_shape(P("E x. E y. A z. x < y | lab(z) != a")));
  CHECK_FALSE(fo::is_sigma2_shape(P("E x. (A y. y <= x) & (E z. z < x)")));
}

TEST_CASE("negation flips every verdict", "[fo]") {
  const std::vector<const char*> sentences{kPhi, kPsi, "E x. lab(x) = b", "A x. E y. y <= x & lab(y) = a",
                                           "E x. A y. x <= y | lab(y) != b"};
  for (const Word& w : finite_words(standard_corpus_ab()))
    for (const char* s : sentences) REQUIRE(fo::fo_eval(w, fo::not_(P(s))) == !fo::fo_eval(w, P(s)));
}

TEST_CASE("constructed formulas locate the ranker position", "[fo]") {
  for (const Ranker& r : enumerate::rankers(LetterSet::of("ab"), 3, {Flavor::eager, true})) {
    if (r.steps().empty() && r.tail() && !r.tail()->is_future()) continue;
    const fo::Formula mu = lemma6_mu(r);
    const fo::Formula sigma = lemma6_sigma(r);
    const std::string sv = lemma6_sigma_variable(r);
    for (const Word& w : finite_words(standard_corpus_ab())) {
      const auto pos = eval_outside(w, r);
      REQUIRE(fo::fo_eval(w, lemma6_mu_sentence(r)) == pos.has_value());
      REQUIRE(fo::fo_eval(w, lemma6_sigma_sentence(r)) == pos.has_value());
      if (r.steps().empty()) continue;
      for (std::size_t x = 1; x <= w.prefix().size(); ++x) {
        const bool here = pos && *pos == Position::fin(x);
        REQUIRE(fo::fo_eval(w, mu, {{"x", x}}) == here);
        REQUIRE(fo::fo_eval(w, sigma, {{sv, x}}) == here);
      }
    }
  }
}

TEST_CASE("the historically-no atom alone has no first-order witness formula", "[fo]") {
  CHECK_THROWS(lemma6_mu(parse_ranker("Hn:a")));
  CHECK_THROWS(lemma6_mu(parse_ranker("YLa")));
  CHECK_THROWS(lemma6_mu(Ranker()));
}
