#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rankers/fo.hpp"
#include "rankers/itl.hpp"
#include "rankers/monomial.hpp"
#include "rankers/ranker.hpp"
#include "rankers/syntax.hpp"
#include "rankers/tl.hpp"
#include "rankers/transforms/ranker_language.hpp"

namespace rankers {

struct Corpus {
  LetterSet alphabet;
  std::size_t finite_max = 0;
  std::size_t lasso_u_max = 0;
  std::size_t lasso_v_max = 0;
  std::vector<Word> words;
};

inline constexpr std::size_t kCorpusLimit = 10'000'000;

/// Every finite word up to finite_max, then every lasso (u, v) with
/// |u| <= u_max and 1 <= |v| <= v_max. Shortest first, then lexicographic.
inline Corpus build_corpus(LetterSet gamma, std::size_t finite_max, std::size_t u_max, std::size_t v_max) {
  const std::size_t g = std::size_t(gamma.size());
  auto count_upto = [&](std::size_t n, std::size_t from) {
    long double total = 0, p = 1;
    for (std::size_t i = 0; i <= n; ++i, p *= g)
      if (i >= from) total += p;
    return total;
  };
  long double total = count_upto(finite_max, 0);
  if (v_max > 0) total += count_upto(u_max, 0) * count_upto(v_max, 1);
  if (total > kCorpusLimit) throw std::length_error("corpus too large");

  Corpus c{gamma, finite_max, u_max, v_max, {}};
  c.words.reserve(std::size_t(total));
  for (auto& s : detail::words_up_to(gamma, finite_max)) c.words.push_back(Word::finite(std::move(s)));
  if (v_max > 0) {
    auto us = detail::words_up_to(gamma, u_max);
    auto vs = detail::words_up_to(gamma, v_max, 1);
    for (const auto& u : us)
      for (const auto& v : vs) c.words.push_back(Word::lasso(u, v));
  }
  return c;
}

inline Corpus build_corpus(std::string_view gamma, std::size_t finite_max, std::size_t u_max, std::size_t v_max) {
  return build_corpus(LetterSet::of(gamma), finite_max, u_max, v_max);
}

inline const Corpus& standard_corpus_ab() {
  static const Corpus c = build_corpus("ab", 6, 3, 3);
  return c;
}
inline const Corpus& standard_corpus_abc() {
  static const Corpus c = build_corpus("abc", 5, 2, 3);
  return c;
}
/// Standard corpus for a two- or three-letter alphabet, otherwise a small one.
inline Corpus standard_corpus(LetterSet gamma) {
  if (gamma == LetterSet::of("ab")) return standard_corpus_ab();
  if (gamma == LetterSet::of("abc")) return standard_corpus_abc();
  if (gamma.size() <= 2) return build_corpus(gamma, 6, 3, 3);
  if (gamma.size() == 3) return build_corpus(gamma, 5, 2, 3);
  return build_corpus(gamma, 3, 1, 2);
}

/// Same words, each lasso (u, v) rewritten as (uv, v).
inline Word reencode(const Word& w) {
  return w.is_finite() ? w : Word::lasso(w.prefix() + w.period(), w.period());
}
inline Corpus reencode(const Corpus& c) {
  Corpus out = c;
  for (auto& w : out.words) w = reencode(w);
  return out;
}

struct Acceptor {
  std::string description;
  std::function<bool(const Word&)> accepts;
  bool finite_only = false;
};

inline Acceptor accept(const tl::Formula& f) {
  return {"TL " + tl::to_string(f), [f](const Word& w) { return tl::models(w, f); }, false};
}
inline Acceptor accept(const itl::Formula& f) {
  return {"ITL " + itl::to_string(f), [f](const Word& w) { return itl::models(w, f); }, false};
}
inline Acceptor accept(const Ranker& r) {
  return {"L(" + to_string(r) + ")", [r](const Word& w) { return defined_on(w, r); }, false};
}
inline Acceptor accept(const RankerLanguage& l) {
  return {"rankers " + to_string(l), [l](const Word& w) { return models(w, l); }, false};
}
inline Acceptor accept(const Monomial& m) {
  return {"monomial " + to_string(m), [m](const Word& w) { return member(w, m); }, false};
}
inline Acceptor accept_complement(const Monomial& m) {
  return {"complement of " + to_string(m), [m](const Word& w) { return !member(w, m); }, false};
}
inline Acceptor accept(const fo::Formula& sentence) {
  return {"FO " + fo::to_string(sentence), [sentence](const Word& w) { return fo::fo_eval(w, sentence); }, true};
}
inline Acceptor accept_predicate(std::string description, std::function<bool(const Word&)> fn) {
  return {std::move(description), std::move(fn), false};
}

inline Acceptor complement(const Acceptor& a) {
  auto fn = a.accepts;
  return {"not (" + a.description + ")", [fn](const Word& w) { return !fn(w); }, a.finite_only};
}
inline Acceptor union_of(std::vector<Acceptor> as) {
  std::string d;
  bool fin = false;
  for (const auto& a : as) {
    d += (d.empty() ? "" : " or ") + ("(" + a.description + ")");
    fin = fin || a.finite_only;
  }
  if (as.empty()) d = "NONE";
  return {d, [as](const Word& w) {
            for (const auto& a : as)
              if (a.accepts(w)) return true;
            return false;
          },
          fin};
}
inline Acceptor intersection_of(std::vector<Acceptor> as) {
  std::string d;
  bool fin = false;
  for (const auto& a : as) {
    d += (d.empty() ? "" : " and ") + ("(" + a.description + ")");
    fin = fin || a.finite_only;
  }
  if (as.empty()) d = "ALL";
  return {d, [as](const Word& w) {
            for (const auto& a : as)
              if (!a.accepts(w)) return false;
            return true;
          },
          fin};
}

struct Counterexample {
  /// "disagreement", or "representation" when one acceptor changes its
  /// verdict after a lasso is re-encoded
  std::string kind = "disagreement";
  Word word = Word::finite("");
  std::optional<Position> position;  // set by position sweeps
  bool left = false;
  bool right = false;
  std::string left_description;
  std::string right_description;

  std::string to_text() const {
    std::ostringstream o;
    o << (kind == "disagreement" ? "counterexample " : kind + " counterexample ") << word.to_string();
    if (position) o << " at " << position->to_string();
    o << ": " << left_description << " says " << (left ? "yes" : "no") << ", " << right_description << " says "
      << (right ? "yes" : "no");
    return o.str();
  }
  nlohmann::json to_json() const {
    nlohmann::json j{{"kind", kind},
                     {"word", word.to_string()},
                     {"left", left},
                     {"right", right},
                     {"acceptors", {left_description, right_description}}};
    if (position) j["position"] = position->to_string();
    return j;
  }
};

/// nullopt means the acceptors agree on the corpus.
using EquivResult = std::optional<Counterexample>;

/// First corpus word on which the acceptors differ. With check_reencoding,
/// each lasso is also re-encoded and both verdicts must survive.
inline EquivResult equiv(const Acceptor& a, const Acceptor& b, const Corpus& c, bool check_reencoding = false) {
  const bool finite_only = a.finite_only || b.finite_only;
  for (const Word& w : c.words) {
    if (finite_only && !w.is_finite()) continue;
    const bool x = a.accepts(w), y = b.accepts(w);
    if (x != y) return Counterexample{"disagreement", w, std::nullopt, x, y, a.description, b.description};
    if (check_reencoding && w.is_lasso()) {
      const Word v = reencode(w);
      const bool x2 = a.accepts(v), y2 = b.accepts(v);
      if (x2 != x) return Counterexample{"representation", w, std::nullopt, x, x2, a.description, "same on " + v.to_string()};
      if (y2 != y) return Counterexample{"representation", w, std::nullopt, y, y2, b.description, "same on " + v.to_string()};
    }
  }
  return std::nullopt;
}

enum class Relation { less, greater, less_eq, greater_eq };

inline std::string to_string(Relation r) {
  switch (r) {
    case Relation::less: return "<";
    case Relation::greater: return ">";
    case Relation::less_eq: return "<=";
    case Relation::greater_eq: return ">=";
  }
  return "?";
}

inline bool holds(Relation rel, Position x, Position y, bool itl_order) {
  auto lt = [&](Position p, Position q) { return itl_order ? lt_itl(p, q) : lt_rank(p, q); };
  switch (rel) {
    case Relation::less: return lt(x, y);
    case Relation::greater: return lt(y, x);
    case Relation::less_eq: return lt(x, y) || x == y;
    case Relation::greater_eq: return lt(y, x) || x == y;
  }
  return false;
}

/// On every word where r is defined: f holds at x iff x rel r(w), for x in
/// 1..horizon, plus infinity when use_lt_itl is set.
inline EquivResult position_sweep(const tl::Formula& f, const Ranker& r, Relation rel, const Corpus& c,
                                  bool use_lt_itl) {
  for (const Word& w : c.words) {
    auto rp = eval_outside(w, r);
    if (!rp) continue;
    std::vector<Position> xs;
    for (std::size_t i = 1; i <= position_horizon(w); ++i) xs.push_back(Position::fin(i));
    if (use_lt_itl) xs.push_back(Position::inf());
    for (Position x : xs) {
      const bool got = tl::eval_at(w, f, x);
      const bool want = holds(rel, x, *rp, use_lt_itl);
      if (got != want)
        return Counterexample{"disagreement", w, x, got, want, "TL " + tl::to_string(f),
                              "x " + to_string(rel) + " " + to_string(r) + " = " + rp->to_string()};
    }
  }
  return std::nullopt;
}

}  // namespace rankers
