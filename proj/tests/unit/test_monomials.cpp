#include <catch2/catch_amalgamated.hpp>

#include "rankers/enumerate.hpp"
#include "rankers/monomial.hpp"
#include "rankers/oracle.hpp"
#include "rankers/syntax.hpp"
#include "support/naive_semantics.hpp"

using namespace rankers;

namespace {
Monomial M(std::string_view s) { return parse_monomial(s); }
// first a before first b before first c
const char* kOrdered = "[]* a [a]* b [ab]* c . [abc]";
// same language, literal spelling with looser gaps
const char* kOrderedLoose = "[a]* a [ab]* b [abc]* c . [abc]";
const LetterSet abc = LetterSet::of("abc");
}  // namespace

TEST_CASE("member fixtures", "[monomials]") {
  CHECK(member(Word::finite("abc"), M(kOrdered)));
  CHECK_FALSE(member(Word::finite("bac"), M(kOrdered)));
  for (const Word& w : standard_corpus_abc().words) CHECK(member(w, M("[abc]")));
  CHECK(member(Word::lasso("aab", "c"), M(kOrdered)));
  CHECK_FALSE(member(Word::lasso("", "ab"), M(kOrdered)));
  CHECK(member(Word::finite("a"), M("[]* a . []")));
  CHECK_FALSE(member(Word::finite("aa"), M("[]* a . []")));
  CHECK(member(Word::finite(""), M("[]")));
  CHECK_FALSE(member(Word::lasso("", "a"), M("[]")));
}

TEST_CASE("enumerate_factorizations fixtures", "[monomials]") {
  CHECK(enumerate_factorizations(Word::finite("aa"), M("[a]* a . [a]"), 2).size() == 2);
  auto f = enumerate_factorizations(Word::finite("abc"), M(kOrdered), 3);
  REQUIRE(f.size() == 1);
  CHECK(f.front() == Factorization{1, 2, 3});
  CHECK(enumerate_factorizations(Word::finite("b"), M("[]* a . []"), 1).empty());
  auto two = enumerate_factorizations(Word::lasso("", "a"), M("[a]* a . [a]"), 4);
  CHECK(two.size() == 4);
  CHECK(std::is_sorted(two.begin(), two.end()));
}

TEST_CASE("check_unambiguous_bounded fixtures", "[monomials]") {
  auto v = check_unambiguous_bounded(M("[a]* a . [a]"), LetterSet::of("a"), 6);
  REQUIRE(v.ambiguous());
  CHECK(enumerate_factorizations(*v.witness, M("[a]* a . [a]"), default_horizon(*v.witness, M("[a]* a . [a]"))).size() >= 2);
  CHECK_FALSE(check_unambiguous_bounded(M(kOrdered), abc, 6).ambiguous());
  auto loose = check_unambiguous_bounded(M(kOrderedLoose), abc, 6);
  REQUIRE(loose.ambiguous());
  CHECK(enumerate_factorizations(Word::finite("abcc"), M(kOrderedLoose), 4).size() == 2);
  CHECK_FALSE(check_unambiguous_bounded(M("[]"), abc, 6).ambiguous());
  CHECK_FALSE(check_unambiguous_bounded(M("[abc]"), abc, 6).ambiguous());
}

TEST_CASE("delta2_condition fixtures", "[monomials]") {
  CHECK(delta2_condition(M("[bc]* a . [abc]")));
  CHECK_FALSE(delta2_condition(M("[a]* a . [a]")));
  CHECK(delta2_condition(M("[ab]")));
  CHECK(delta2_condition(M(kOrdered)));
  CHECK_FALSE(delta2_condition(M(kOrderedLoose)));
  CHECK_FALSE(delta2_condition(M("[b]* a [ab]* b . []")));
}

TEST_CASE("both spellings of the ordered-letters monomial define the prose language", "[monomials]") {
  auto ordered = [](const Word& w) {
    auto a = w.next_occurrence('a', 0), b = w.next_occurrence('b', 0), c = w.next_occurrence('c', 0);
    return a && b && c && *a < *b && *b < *c;
  };
  for (const Word& w : standard_corpus_abc().words) {
    REQUIRE(member(w, M(kOrdered)) == ordered(w));
    REQUIRE(member(w, M(kOrderedLoose)) == ordered(w));
  }
}

TEST_CASE("member agrees with factorization search and the naive matcher", "[monomials]") {
  for (LetterSet g : {LetterSet::of("ab"), abc}) {
    const Corpus c = standard_corpus(g);
    for (const Monomial& m : enumerate::monomials(g, g.size() == 2 ? 3 : 2))
      for (const Word& w : c.words) {
        const bool in = member(w, m);
        REQUIRE(in == !enumerate_factorizations(w, m, default_horizon(w, m)).empty());
        REQUIRE(in == naive::member(w, m));
        if (w.is_lasso()) REQUIRE(in == member(reencode(w), m));
      }
  }
}

TEST_CASE("the |u| + 2|v| marker horizon is too small for degree three", "[monomials]") {
  const Monomial m = M("[]* a []* a []* a . [a]");
  const Word w = Word::lasso("", "a");
  CHECK(member(w, m));
  CHECK(enumerate_factorizations(w, m, 2).empty());
  CHECK_FALSE(enumerate_factorizations(w, m, default_horizon(w, m)).empty());
}

TEST_CASE("ambiguity witnesses really are ambiguous", "[monomials]") {
  for (const Monomial& m : enumerate::monomials(LetterSet::of("ab"), 2)) {
    auto v = check_unambiguous_bounded(m, LetterSet::of("ab"), 5);
    if (!v.ambiguous()) continue;
    const Word& w = *v.witness;
    REQUIRE(enumerate_factorizations(w, m, default_horizon(w, m) + 4 * w.period().size()).size() >= 2);
  }
}

TEST_CASE("bounded-unambiguous monomials have at most one factorization on the corpus", "[monomials]") {
  const Corpus& c = standard_corpus_ab();
  for (const Monomial& m : enumerate::monomials(LetterSet::of("ab"), 3)) {
    if (check_unambiguous_bounded(m, LetterSet::of("ab"), 6).ambiguous()) continue;
    for (const Word& w : c.words) REQUIRE(enumerate_factorizations(w, m, default_horizon(w, m)).size() <= 1);
  }
}
