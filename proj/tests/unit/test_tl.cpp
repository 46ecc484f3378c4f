#include <catch2/catch_amalgamated.hpp>

#include "rankers/enumerate.hpp"
#include "rankers/oracle.hpp"
#include "rankers/syntax.hpp"
#include "support/naive_semantics.hpp"

using namespace rankers;

namespace {
tl::Formula P(std::string_view s) { return tl::parse(s); }

std::vector<Position> positions(const Word& w) {
  std::vector<Position> ps{Position::start(), Position::inf()};
  for (std::size_t i = 1; i <= position_horizon(w); ++i) ps.push_back(Position::fin(i));
  return ps;
}
}  // namespace

TEST_CASE("eval_at fixtures", "[tl]") {
  CHECK(tl::eval_at(Word::lasso("", "a"), P("Hn:a"), Position::inf()));
  CHECK_FALSE(tl::eval_at(Word::finite("a"), P("Hn:a"), Position::inf()));
  CHECK_FALSE(tl::eval_at(Word::finite("ba"), P("Xa(!Yb(T))"), Position::start()));
  CHECK(tl::eval_at(Word::finite("ab"), P("Xa(!Yb(T))"), Position::start()));
}

TEST_CASE("models fixtures", "[tl]") {
  CHECK(tl::models(Word::finite("ab"), P("Gn:b | Xb(Ya(T))")));
  for (const Word& w : standard_corpus_ab().words) CHECK(tl::models(w, P("T")));
  CHECK_FALSE(tl::models(Word::lasso("", "ab"), P("Ya(T)")));
  CHECK(tl::models(Word::finite(""), P("T")));
  CHECK_FALSE(tl::models(Word::finite(""), P("F")));
  // past subtrees anchor at infinity, future ones at 0
  CHECK(tl::models(Word::finite("ab"), P("Yb(T) & Xa(T)")));
  CHECK(tl::models(Word::finite("ab"), P("Ya(Xb(T)) & Xb(T)")));
}

TEST_CASE("H holds at the top level iff the letter is imaginary or absent", "[tl]") {
  for (const Corpus* c : {&standard_corpus_ab(), &standard_corpus_abc()})
    for (const Word& w : c->words)
      for (Letter a : c->alphabet.letters()) {
        const bool expected = w.imaginary().contains(a) || !w.alphabet().contains(a);
        REQUIRE(tl::models(w, tl::atom(H(a))) == expected);
      }
}

TEST_CASE("check_fragment fixtures", "[tl]") {
  const ModalitySet xyg = ModalitySet::of(ModKind::next, Flavor::eager) |
                          ModalitySet::of(ModKind::yesterday, Flavor::eager) |
                          ModalitySet::of(ModKind::globally_no, Flavor::eager);
  CHECK(tl::check_fragment(P("Gn:b | Xb(Ya(T))"), {xyg, true, false}));
  CHECK_FALSE(tl::check_fragment(P("Xa(!Yb(T))"), {ModalitySet::all(), true, false}));
  CHECK(tl::check_fragment(P("Xa(T) & (Gn:b | Xb(Ya(T))) & (Gn:c | Xc(Ya(T)))"), {xyg, true, true}));
  CHECK_FALSE(tl::check_fragment(P("Ya(T)"), {ModalitySet::all(), false, true}));
  CHECK_FALSE(tl::check_fragment(P("Hn:a"), {xyg, false, false}));
  CHECK_FALSE(tl::check_fragment(P("XLa(T)"), {xyg, false, false}));
  CHECK(tl::check_fragment(P("!Xa(Yb(T))"), {ModalitySet::all(), false, true}));
}

TEST_CASE("evaluation agrees with the naive evaluator", "[tl]") {
  const LetterSet ab = LetterSet::of("ab");
  for (Flavor fl : {Flavor::eager, Flavor::lazy}) {
    auto layers = enumerate::by_size(enumerate::tl_grammar(ab, {fl}), 4);
    for (const auto& layer : layers)
      for (const auto& f : layer)
        for (const Word& w : standard_corpus_ab().words) {
          REQUIRE(tl::models(w, f) == naive::tl_models(w, f));
          for (Position p : positions(w)) REQUIRE(tl::eval_at(w, f, p) == naive::tl_at(w, f, p));
        }
  }
}

TEST_CASE("modalities distribute over Boolean connectives", "[tl]") {
  const auto layers = enumerate::by_size(enumerate::tl_grammar(LetterSet::of("ab"), {Flavor::eager}), 2);
  std::vector<tl::Formula> small;
  for (const auto& l : layers) small.insert(small.end(), l.begin(), l.end());
  for (Flavor fl : {Flavor::eager, Flavor::lazy})
    for (Step z : {X('a', fl), Y('a', fl), X('b', fl), Y('b', fl)})
      for (const auto& f : small)
        for (const auto& g : small)
          for (const Word& w : standard_corpus_ab().words)
            for (Position p : positions(w)) {
              using namespace tl;
              REQUIRE(eval_at(w, mod(z, not_(f)), p) == eval_at(w, and_(mod(z, top()), not_(mod(z, f))), p));
              REQUIRE(eval_at(w, mod(z, or_(f, g)), p) == eval_at(w, or_(mod(z, f), mod(z, g)), p));
              REQUIRE(eval_at(w, mod(z, and_(f, g)), p) == eval_at(w, and_(mod(z, f), mod(z, g)), p));
            }
}

TEST_CASE("rankers as formulas", "[tl]") {
  for (Flavor fl : {Flavor::eager, Flavor::lazy})
    for (const Ranker& r : enumerate::rankers(LetterSet::of("ab"), 4, {fl, true}))
      for (const Word& w : standard_corpus_ab().words)
        REQUIRE(defined_on(w, r) == tl::models(w, tl::formula_of(r)));
}

TEST_CASE("atoms are negated steps", "[tl]") {
  for (Flavor fl : {Flavor::eager, Flavor::lazy})
    for (Letter a : {'a', 'b'})
      for (const Word& w : standard_corpus_ab().words)
        for (Position p : positions(w)) {
          REQUIRE(tl::eval_at(w, tl::atom(G(a, fl)), p) == !tl::eval_at(w, tl::mod(X(a, fl), tl::top()), p));
          REQUIRE(tl::eval_at(w, tl::atom(H(a, fl)), p) == !tl::eval_at(w, tl::mod(Y(a, fl), tl::top()), p));
        }
}

TEST_CASE("on finite words G and H agree at the top level", "[tl]") {
  for (const Word& w : standard_corpus_abc().words) {
    if (!w.is_finite()) continue;
    for (Letter a : {'a', 'b', 'c'}) REQUIRE(tl::models(w, tl::atom(G(a))) == tl::models(w, tl::atom(H(a))));
  }
}
