#include <catch2/catch_amalgamated.hpp>

#include "rankers/oracle.hpp"
#include "rankers/words.hpp"
#include "support/naive_semantics.hpp"

using namespace rankers;

TEST_CASE("alphabet and imaginary alphabet", "[words]") {
  CHECK(alphabet_of(Word::finite("abca")) == LetterSet::of("abc"));
  CHECK(imaginary_of(Word::finite("abca")).empty());
  CHECK(alphabet_of(Word::lasso("ab", "c")) == LetterSet::of("abc"));
  CHECK(imaginary_of(Word::lasso("ab", "c")) == LetterSet::of("c"));
  CHECK(imaginary_of(Word::lasso("", "ba")) == LetterSet::of("ab"));
  CHECK(alphabet_of(Word::finite("")).empty());
}

TEST_CASE("letter_at folds lassos by period", "[words]") {
  Word w = Word::lasso("ab", "cd");
  CHECK(letter_at(w, Position::fin(1)) == 'a');
  CHECK(letter_at(w, Position::fin(3)) == 'c');
  CHECK(letter_at(w, Position::fin(6)) == 'd');
  CHECK(letter_at(w, Position::fin(101)) == 'c');
  CHECK_THROWS(letter_at(Word::finite("ab"), Position::fin(3)));
  CHECK_THROWS(letter_at(w, Position::start()));
  CHECK_THROWS(letter_at(w, Position::inf()));
}

TEST_CASE("position orders", "[words]") {
  const Position s = Position::start(), one = Position::fin(1), two = Position::fin(2), inf = Position::inf();
  CHECK(lt_rank(s, one));
  CHECK(lt_rank(one, two));
  CHECK(lt_rank(two, inf));
  CHECK_FALSE(lt_rank(inf, inf));
  CHECK(lt_itl(inf, inf));
  CHECK_FALSE(lt_itl(two, one));
  CHECK_FALSE(lt_itl(inf, two));
}

TEST_CASE("word parsing and printing", "[words]") {
  CHECK(Word::parse("ab|ca") == Word::lasso("ab", "ca"));
  CHECK(Word::parse("_") == Word::finite(""));
  CHECK(Word::parse("_|a") == Word::lasso("", "a"));
  CHECK(Word::parse("abc").to_string() == "abc");
  CHECK(Word::finite("").to_string() == "_");
  CHECK_THROWS_AS(Word::parse("ab|"), parse_error);
  CHECK_THROWS_AS(Word::parse("aB"), parse_error);
  try {
    Word::parse("ab|c1");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("lasso equality ignores representation", "[words]") {
  CHECK(Word::lasso("", "ab") == Word::lasso("a", "ba"));
  CHECK(Word::lasso("", "aa") == Word::lasso("", "a"));
  CHECK(Word::lasso("x", "ab") == Word::lasso("xab", "abab"));
  CHECK_FALSE(Word::lasso("", "ab") == Word::lasso("", "ba"));
  CHECK_FALSE(Word::finite("a") == Word::lasso("", "a"));
}

TEST_CASE("occurrence tables agree with linear scans", "[words]") {
  const Corpus& c = standard_corpus_abc();
  for (const Word& w : c.words) {
    const std::size_t far = position_horizon(w) + 2 * w.period().size() + 3;
    for (Letter a : {'a', 'b', 'c'}) {
      for (std::size_t p = 0; p <= far; ++p) {
        if (w.is_finite() && p > w.prefix().size()) break;
        auto fast = w.next_occurrence(a, p);
        auto slow = naive::next(w, a, p);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) REQUIRE(*fast == slow->index());
        auto fb = w.prev_occurrence(a, p);
        auto sb = naive::prev(w, a, p);
        REQUIRE(fb.has_value() == sb.has_value());
        if (fb) REQUIRE(*fb == sb->index());
      }
    }
  }
}

TEST_CASE("alphabet is invariant under re-encoding", "[words]") {
  for (const Word& w : standard_corpus_ab().words) {
    Word r = reencode(w);
    CHECK(alphabet_of(r) == alphabet_of(w));
    CHECK(imaginary_of(r) == imaginary_of(w));
    CHECK(r == w);
  }
}
