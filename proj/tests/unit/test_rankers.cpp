#include <catch2/catch_amalgamated.hpp>

#include "rankers/enumerate.hpp"
#include "rankers/oracle.hpp"
#include "rankers/syntax.hpp"
#include "support/naive_semantics.hpp"

using namespace rankers;

namespace {
const Flavor E = Flavor::eager;
const Flavor L = Flavor::lazy;
Ranker R(std::string_view s) { return parse_ranker(s); }
}  // namespace

TEST_CASE("step_eval fixtures", "[rankers]") {
  const Word aw = Word::lasso("", "a");
  CHECK_FALSE(step_eval(aw, Y('a', E), Position::inf()));
  CHECK(step_eval(aw, Y('a', L), Position::inf()) == Position::inf());
  CHECK(step_eval(Word::finite("ba"), X('a', E), Position::start()) == Position::fin(2));
  for (const Word& w : standard_corpus_ab().words)
    for (Letter a : {'a', 'b'}) CHECK_FALSE(step_eval(w, X(a, E), Position::inf()));
  CHECK_FALSE(step_eval(Word::finite("ab"), Y('a', E), Position::start()));
  // a in alph but not im
  CHECK(step_eval(Word::lasso("xa", "b"), Y('a', E), Position::inf()) == Position::fin(2));
  CHECK_FALSE(step_eval(Word::lasso("", "b"), Y('a', L), Position::inf()));
  CHECK_FALSE(step_eval(Word::lasso("a", "b"), X('a', L), Position::inf()));
  CHECK(step_eval(Word::lasso("a", "b"), X('b', L), Position::inf()) == Position::inf());
}

TEST_CASE("eval_from and eval_outside fixtures", "[rankers]") {
  CHECK(eval_from(Word::finite("ab"), R("Xb Ya"), Position::start()) == Position::fin(1));
  for (const Word& w : standard_corpus_ab().words)
    for (Position p : {Position::start(), Position::fin(1), Position::inf()}) CHECK(eval_from(w, Ranker(), p) == p);
  CHECK(eval_from(Word::lasso("", "ab"), R("YLa XLb"), Position::inf()) == Position::inf());
  CHECK(eval_outside(Word::finite("ba"), R("Ya")) == Position::fin(2));
  CHECK_FALSE(eval_outside(Word::lasso("", "a"), R("Ya")));
  CHECK(eval_outside(Word::finite("b"), R("Gn:a")) == Position::start());
  CHECK_THROWS(eval_outside(Word::finite("b"), Ranker()));
}

TEST_CASE("defined_on fixtures", "[rankers]") {
  CHECK(defined_on(Word::finite("abc"), R("Xb Ya")));
  CHECK_FALSE(defined_on(Word::finite("bac"), R("Xb Ya")));
  CHECK(defined_on(Word::lasso("", "ab"), R("YLa")));
  for (const Word& w : standard_corpus_abc().words) CHECK(defined_on(w, Ranker()));
}

TEST_CASE("alph_gamma and classify", "[rankers]") {
  CHECK(alph_gamma(R("Xb Ya")) == LetterSet::of("ab"));
  CHECK(alph_gamma(Ranker()).empty());
  CHECK(alph_gamma(R("Gn:a")) == LetterSet::of("a"));
  CHECK(classify(R("Xb Ya")) == Classification{Rooting::x_ranker, E});
  CHECK(classify(R("YLa XLb")) == Classification{Rooting::y_ranker, L});
  CHECK(classify(R("Hn:a")) == Classification{Rooting::y_ranker, E});
  CHECK_THROWS(classify(Ranker()));
}

TEST_CASE("rankers reject mixed flavors and misplaced atoms", "[rankers]") {
  CHECK_THROWS(Ranker({X('a', E), Y('b', L)}));
  CHECK_THROWS(Ranker({X('a', E)}, G('b', L)));
  CHECK_THROWS(R("Gn:a").then(X('b')));
  CHECK_THROWS(R("Gn:a Xb"));
}

TEST_CASE("step semantics agree with linear scans", "[rankers]") {
  const auto rs = enumerate::rankers(LetterSet::of("abc"), 3, {E, true});
  const auto ls = enumerate::rankers(LetterSet::of("abc"), 3, {L, true});
  for (const Word& w : standard_corpus_abc().words) {
    for (const auto* set : {&rs, &ls})
      for (const Ranker& r : *set) {
        const Position anchor = r.starts_future() ? Position::start() : Position::inf();
        REQUIRE(eval_from(w, r, anchor) == naive::ranker(w, r, anchor));
      }
  }
}

TEST_CASE("finite-word and X-ranker eager/lazy coincidence", "[rankers]") {
  for (const Ranker& r : enumerate::rankers(LetterSet::of("ab"), 4, {E, true})) {
    const Ranker l = r.reflavored(L);
    for (const Word& w : standard_corpus_ab().words) {
      if (w.is_finite()) REQUIRE(eval_outside(w, r) == eval_outside(w, l));
      else if (r.starts_future() && !r.tail()) REQUIRE(eval_outside(w, r) == eval_outside(w, l));
    }
  }
}

TEST_CASE("eager rankers never reach infinity; lazy ones do exactly when Y-rooted inside im", "[rankers]") {
  for (const Ranker& r : enumerate::rankers(LetterSet::of("ab"), 4, {E})) {
    const Ranker l = r.reflavored(L);
    const bool y_rooted = !r.starts_future();
    for (const Word& w : standard_corpus_ab().words) {
      auto pe = eval_outside(w, r);
      if (pe) REQUIRE(pe->is_fin());
      auto pl = eval_outside(w, l);
      const bool expect_inf = y_rooted && alph_gamma(l).subset_of(w.imaginary());
      REQUIRE((pl && pl->is_inf()) == expect_inf);
    }
  }
}

TEST_CASE("eager steps move strictly", "[rankers]") {
  for (const Word& w : standard_corpus_ab().words)
    for (std::size_t p = 1; p <= position_horizon(w); ++p)
      for (Letter a : {'a', 'b'}) {
        auto n = step_eval(w, X(a), Position::fin(p));
        if (n) REQUIRE(lt_rank(Position::fin(p), *n));
        auto y = step_eval(w, Y(a), Position::fin(p));
        if (y) REQUIRE(lt_rank(*y, Position::fin(p)));
      }
}

TEST_CASE("ranker results are representation independent", "[rankers]") {
  for (const Ranker& r : enumerate::rankers(LetterSet::of("ab"), 3, {E, true}))
    for (const Word& w : standard_corpus_ab().words) {
      if (!w.is_lasso()) continue;
      REQUIRE(defined_on(w, r) == defined_on(reencode(w), r));
      REQUIRE(defined_on(w, r.reflavored(L)) == defined_on(reencode(w), r.reflavored(L)));
    }
}
