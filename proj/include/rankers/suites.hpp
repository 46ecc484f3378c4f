#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "rankers/enumerate.hpp"
#include "rankers/oracle.hpp"
#include "rankers/transforms/complement.hpp"
#include "rankers/transforms/first_order.hpp"
#include "rankers/transforms/lazy.hpp"
#include "rankers/transforms/monomial_itl.hpp"
#include "rankers/transforms/ranker_formulas.hpp"
#include "rankers/transforms/ranker_language.hpp"
#include "rankers/transforms/relativize.hpp"

namespace rankers::suites {

struct Options {
  bool check_reencoding = true;
  std::size_t random_count = 500;
  std::uint64_t seed = 20240611;
  std::size_t bounded_maxlen = 6;
};

struct Report {
  std::string name;
  std::size_t cases = 0;
  std::size_t skipped = 0;
  std::size_t failure_count = 0;
  std::size_t representation_failures = 0;
  std::vector<std::string> failures;  // first few only
  std::optional<Counterexample> first;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return failure_count == 0; }

  void fail(const std::string& what, const std::optional<Counterexample>& cex = std::nullopt) {
    ++failure_count;
    if (cex && cex->kind == "representation") ++representation_failures;
    if (failures.size() < 20) failures.push_back(cex ? what + ": " + cex->to_text() : what);
    if (cex && !first) first = cex;
  }

  std::string to_text() const {
    std::ostringstream o;
    o << name << ": " << (passed() ? "PASS" : "FAIL") << " (" << cases << " cases";
    if (skipped) o << ", " << skipped << " skipped";
    o << ", " << failure_count << " failures, " << seconds << " s)\n";
    for (const auto& n : notes) o << "  note: " << n << "\n";
    for (const auto& f : failures) o << "  " << f << "\n";
    return o.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"suite", name},           {"passed", passed()},
                     {"cases", cases},          {"skipped", skipped},
                     {"failures", failure_count}, {"representation_failures", representation_failures},
                     {"messages", failures},    {"notes", notes},
                     {"seconds", seconds}};
    j["counterexample"] = first ? first->to_json() : nlohmann::json(nullptr);
    return j;
  }
};

namespace detail {

class Timer {
public:
  explicit Timer(Report& r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

private:
  Report& r_;
  std::chrono::steady_clock::time_point t0_;
};

inline bool expect_equiv(Report& rep, const std::string& label, const Acceptor& a, const Acceptor& b,
                         const Corpus& c, const Options& opt) {
  auto res = equiv(a, b, c, opt.check_reencoding);
  if (res) rep.fail(label, res);
  return !res;
}

inline bool expect(Report& rep, bool ok, const std::string& what) {
  if (!ok) rep.fail(what);
  return ok;
}

inline std::size_t count_not(const tl::Formula& f) {
  std::size_t n = 0;
  tl::any_node(f, [&](const tl::Node& x) {
    n += x.op == tl::Op::not_;
    return false;
  });
  return n;
}

template <class F>
std::vector<F> formulas_for(const enumerate::Grammar<F>& g, std::size_t exhaustive, std::size_t lo, std::size_t hi,
                            const Options& opt) {
  auto layers = enumerate::by_size(g, exhaustive);
  std::vector<F> out;
  for (auto& l : layers) out.insert(out.end(), l.begin(), l.end());
  std::mt19937_64 rng(opt.seed);
  for (std::size_t i = 0; i < opt.random_count; ++i)
    out.push_back(enumerate::random_of_size(g, lo + i % (hi - lo + 1), rng));
  return out;
}

}  // namespace detail

// --- ranker formulas -------------------------------------------------------

inline Report lemma2(const Options& opt = {}) {
  Report rep;
  rep.name = "lemma2";
  detail::Timer t(rep);
  const Corpus& c = standard_corpus_ab();
  const Corpus rc = reencode(c);
  for (const Ranker& r : enumerate::rankers(LetterSet::of("ab"), 4)) {
    ++rep.cases;
    auto b = lemma2_bounds(r);
    if (auto e = position_sweep(b.rho, r, Relation::greater, c, false)) rep.fail("rho of " + to_string(r), e);
    if (auto e = position_sweep(b.theta, r, Relation::greater_eq, c, false)) rep.fail("theta of " + to_string(r), e);
    if (opt.check_reencoding) {
      if (auto e = position_sweep(b.rho, r, Relation::greater, rc, false)) {
        e->kind = "representation";
        rep.fail("rho of " + to_string(r) + " after re-encoding", e);
      }
    }
  }
  return rep;
}

inline Report lemma3(const Options& opt = {}) {
  Report rep;
  rep.name = "lemma3";
  detail::Timer t(rep);
  const Corpus& c = standard_corpus_ab();
  const Corpus rc = reencode(c);
  for (const Ranker& r : enumerate::rankers(LetterSet::of("ab"), 4, {Flavor::lazy})) {
    ++rep.cases;
    auto b = lemma3_bounds(r);
    if (auto e = position_sweep(b.rho, r, Relation::less, c, true)) rep.fail("rho of " + to_string(r), e);
    if (auto e = position_sweep(b.theta, r, Relation::less_eq, c, true)) rep.fail("theta of " + to_string(r), e);
    if (opt.check_reencoding)
      if (auto e = position_sweep(b.theta, r, Relation::less_eq, rc, true)) {
        e->kind = "representation";
        rep.fail("theta of " + to_string(r) + " after re-encoding", e);
      }
  }
  return rep;
}

// --- relativization --------------------------------------------------------

inline Report prop1(const Options& opt = {}) {
  Report rep;
  rep.name = "prop1";
  detail::Timer t(rep);
  const LetterSet gamma = LetterSet::of("ab");
  const Corpus& c = standard_corpus_ab();
  auto g = enumerate::itl_grammar(gamma, {Flavor::eager});
  for (const auto& phi : detail::formulas_for(g, 5, 6, 7, opt)) {
    ++rep.cases;
    tl::Formula out = prop1_relativize(phi);
    const std::string s = itl::to_string(phi);
    detail::expect_equiv(rep, "prop1 on " + s, accept(phi), accept(out), c, opt);
    if (!itl::has_negation(phi)) detail::expect(rep, detail::count_not(out) == 0, "negation introduced for " + s);
    if (!itl::has_atom(phi, AtomicKind::historically_no, Flavor::eager))
      detail::expect(rep, !tl::has_atom(out, AtomicKind::historically_no, Flavor::eager), "H introduced for " + s);
    detail::expect(rep, tl::modalities(out).subset_of(ModalitySet::all_of(Flavor::eager)), "lazy output for " + s);
    if (itl::is_future_formula(phi)) detail::expect(rep, tl::future_rooted(out), "not X-rooted for future " + s);
  }
  return rep;
}

inline Report prop2(const Options& opt = {}) {
  Report rep;
  rep.name = "prop2";
  detail::Timer t(rep);
  const LetterSet gamma = LetterSet::of("ab");
  const Corpus& c = standard_corpus_ab();
  auto g = enumerate::itl_grammar(gamma, {Flavor::lazy});
  for (const auto& phi : detail::formulas_for(g, 5, 6, 7, opt)) {
    ++rep.cases;
    tl::Formula out = prop2_relativize(phi);
    const std::string s = itl::to_string(phi);
    detail::expect_equiv(rep, "prop2 on " + s, accept(phi), accept(out), c, opt);
    if (!itl::has_negation(phi)) detail::expect(rep, detail::count_not(out) == 0, "negation introduced for " + s);
    if (!itl::has_atom(phi, AtomicKind::globally_no, Flavor::lazy))
      detail::expect(rep, !tl::has_atom(out, AtomicKind::globally_no, Flavor::lazy), "G introduced for " + s);
    detail::expect(rep, tl::modalities(out).subset_of(ModalitySet::all_of(Flavor::lazy)), "eager output for " + s);
  }
  return rep;
}

// --- monomials -------------------------------------------------------------

struct MonomialCase {
  LetterSet gamma;
  Monomial m;
};

/// Bounded-checked unambiguous monomials: degree <= 3 over {a,b}, <= 2 over {a,b,c}.
inline std::vector<MonomialCase> standard_monomials(const Options& opt, std::size_t* rejected = nullptr) {
  std::vector<MonomialCase> out;
  std::size_t bad = 0;
  for (auto [g, d] : {std::pair{LetterSet::of("ab"), std::size_t{3}}, std::pair{LetterSet::of("abc"), std::size_t{2}}})
    for (const Monomial& m : enumerate::monomials(g, d)) {
      if (check_unambiguous_bounded(m, g, opt.bounded_maxlen).ambiguous()) {
        ++bad;
        continue;
      }
      out.push_back({g, m});
    }
  if (rejected) *rejected = bad;
  return out;
}

inline const ModalitySet kLemma5Fragment = ModalitySet::of(ModKind::next, Flavor::eager) |
                                           ModalitySet::of(ModKind::yesterday, Flavor::eager) |
                                           ModalitySet::of(ModKind::globally_no, Flavor::eager);
inline const ModalitySet kLemma9Fragment = ModalitySet::of(ModKind::next, Flavor::lazy) |
                                           ModalitySet::of(ModKind::yesterday, Flavor::lazy) |
                                           ModalitySet::of(ModKind::historically_no, Flavor::lazy);

inline Report lemma5(const Options& opt = {}) {
  Report rep;
  rep.name = "lemma5";
  detail::Timer t(rep);
  for (const auto& [g, m] : standard_monomials(opt, &rep.skipped)) {
    ++rep.cases;
    const std::string s = to_string(m) + " over " + g.to_string();
    try {
      itl::Formula f = lemma5_monomial_to_itl(m, g);
      detail::expect(rep, itl::check_itl_fragment(f, kLemma5Fragment, true), "fragment of " + s);
      detail::expect_equiv(rep, "lemma5 on " + s, accept(m), accept(f), standard_corpus(g), opt);
    } catch (const std::exception& e) {
      rep.fail("lemma5 threw on " + s + ": " + e.what());
    }
  }
  return rep;
}

inline Report lemma8(const Options& opt = {}) {
  Report rep;
  rep.name = "lemma8";
  detail::Timer t(rep);
  for (const auto& [g, m] : standard_monomials(opt, &rep.skipped)) {
    if (!delta2_condition(m)) {
      ++rep.skipped;
      continue;
    }
    ++rep.cases;
    const std::string s = to_string(m) + " over " + g.to_string();
    try {
      itl::Formula f = lemma8_monomial_to_future_itl(m, g);
      detail::expect(rep, itl::is_future_formula(f), "not a future formula: " + s);
      detail::expect(rep, itl::check_itl_fragment(f, kLemma5Fragment, true), "fragment of " + s);
      detail::expect_equiv(rep, "lemma8 on " + s, accept(m), accept(f), standard_corpus(g), opt);
    } catch (const std::exception& e) {
      rep.fail("lemma8 threw on " + s + ": " + e.what());
    }
  }
  return rep;
}

inline Report lemma9(const Options& opt = {}) {
  Report rep;
  rep.name = "lemma9";
  detail::Timer t(rep);
  for (const auto& [g, m] : standard_monomials(opt, &rep.skipped)) {
    ++rep.cases;
    const std::string s = to_string(m) + " over " + g.to_string();
    try {
      itl::Formula f = lemma9_complement_to_lazy_itl(m, g);
      detail::expect(rep, itl::check_itl_fragment(f, kLemma9Fragment, true), "fragment of " + s);
      detail::expect_equiv(rep, "lemma9 on " + s, accept_complement(m), accept(f), standard_corpus(g), opt);
    } catch (const std::exception& e) {
      rep.fail("lemma9 threw on " + s + ": " + e.what());
    }
  }
  return rep;
}

// --- first-order ---------------------------------------------------------

inline Report lemma6(const Options& = {}) {
  Report rep;
  rep.name = "lemma6";
  detail::Timer t(rep);
  std::vector<Word> words;
  for (const Word& w : standard_corpus_ab().words)
    if (w.is_finite()) words.push_back(w);
  for (const Ranker& r : enumerate::rankers(LetterSet::of("ab"), 3, {Flavor::eager, true})) {
    if (r.steps().empty() && r.tail()->kind == AtomicKind::historically_no) continue;
    ++rep.cases;
    const std::string s = to_string(r);
    const fo::Formula mu = lemma6_mu(r), sigma = lemma6_sigma(r);
    const fo::Formula mu_s = lemma6_mu_sentence(r), sigma_s = lemma6_sigma_sentence(r);
    const std::string sv = lemma6_sigma_variable(r);
    detail::expect(rep, fo::count_variable_names(mu) <= 2, "more than two variables in mu of " + s);
    detail::expect(rep, fo::is_sigma2_shape(sigma), "sigma of " + s + " is not Sigma2");
    detail::expect(rep, fo::is_sigma2_shape(sigma_s), "sigma sentence of " + s + " is not Sigma2");
    for (const Word& w : words) {
      auto pos = eval_outside(w, r);
      const bool mu_holds = fo::fo_eval(w, mu_s);
      if (mu_holds != pos.has_value()) {
        rep.fail("E x mu disagrees with " + s + " on " + w.to_string());
        continue;
      }
      if (fo::fo_eval(w, sigma_s) != mu_holds) rep.fail("sigma sentence disagrees with mu on " + w.to_string() + " for " + s);
      if (r.steps().empty()) continue;
      for (std::size_t i = 1; i <= w.prefix().size(); ++i) {
        const bool at = fo::fo_eval(w, mu, {{"x", i}});
        if (at != (pos && pos->is_fin() && pos->index() == i))
          rep.fail("mu of " + s + " at " + std::to_string(i) + " on " + w.to_string());
        if (fo::fo_eval(w, sigma, {{sv, i}}) != at)
          rep.fail("sigma of " + s + " at " + std::to_string(i) + " on " + w.to_string());
      }
    }
  }
  return rep;
}

// --- X-ranker complements ---------------------------------------------------

inline bool is_x_ranker(const Ranker& r) {
  if (r.empty() || !r.starts_future()) return false;
  return !r.tail() || r.tail()->kind == AtomicKind::globally_no;
}

inline Report lemma7(const Options& opt = {}) {
  Report rep;
  rep.name = "lemma7";
  detail::Timer t(rep);
  for (const Ranker& r : enumerate::rankers(LetterSet::of("abc"), 4, {Flavor::eager, true})) {
    if (!is_x_ranker(r)) continue;
    ++rep.cases;
    std::vector<Acceptor> parts;
    for (const Ranker& s : lemma7_xranker_complement(r)) {
      detail::expect(rep, !(s.steps().empty() && s.tail() && s.tail()->kind == AtomicKind::historically_no),
                     "lone H emitted for " + to_string(r));
      parts.push_back(accept(s));
    }
    for (const Corpus* c : {&standard_corpus_ab(), &standard_corpus_abc()})
      detail::expect_equiv(rep, "lemma7 on " + to_string(r), union_of(parts), complement(accept(r)), *c, opt);
  }
  return rep;
}

// --- lazy characterizations ---------------------------------------------

inline Report thm5(const Options& opt = {}) {
  Report rep;
  rep.name = "thm5";
  detail::Timer t(rep);
  const LetterSet ab = LetterSet::of("ab");
  const Corpus& c = standard_corpus_ab();

  // negation elimination, pointwise and at top level
  auto layers = enumerate::by_size(enumerate::tl_grammar(ab, {Flavor::lazy}), 6);
  for (const auto& layer : layers)
    for (const auto& f : layer) {
      ++rep.cases;
      tl::Formula g = thm5_negation_elimination(f);
      const std::string s = tl::to_string(f);
      detail::expect(rep, !tl::has_negation(g), "negation left in " + s);
      detail::expect(rep, tl::modalities(g).subset_of(ModalitySet::all_of(Flavor::lazy)), "eager modality in " + s);
      detail::expect_equiv(rep, "negation elimination on " + s, accept(f), accept(g), c, opt);
      for (const Word& w : c.words) {
        bool ok = true;
        auto check = [&](Position p) {
          if (ok && tl::eval_at(w, f, p) != tl::eval_at(w, g, p)) {
            rep.fail("negation elimination on " + s + " differs at " + p.to_string() + " of " + w.to_string());
            ok = false;
          }
        };
        check(Position::start());
        for (std::size_t i = 1; i <= position_horizon(w); ++i) check(Position::fin(i));
        check(Position::inf());
        if (!ok) break;
      }
    }

  // Y-rooted lazy rankers
  for (const Ranker& r : enumerate::rankers(ab, 4, {Flavor::lazy})) {
    if (r.starts_future()) continue;
    ++rep.cases;
    tl::Formula f = thm5_lazy_ranker_to_tl(r);
    detail::expect(rep, tl::modalities(f).subset_of(ModalitySet::all_of(Flavor::eager)), "lazy modality for " + to_string(r));
    for (const Corpus* k : {&standard_corpus_ab(), &standard_corpus_abc()})
      detail::expect_equiv(rep, "lazy ranker " + to_string(r), accept(r), accept(f), *k, opt);
  }

  // complement of A^im: which language it defines
  for (LetterSet g : {ab, LetterSet::of("abc")})
    for (LetterSet a : enumerate::subsets(g)) {
      ++rep.cases;
      itl::Formula f = thm5_complement_Aim(a, g);
      const Corpus k = standard_corpus(g);
      auto derived = accept_predicate("im not inside A, or some b of A occurs finitely often", [a](const Word& w) {
        return !w.imaginary().subset_of(a) || !(a & w.alphabet() & LetterSet(~w.imaginary().bits())).empty();
      });
      detail::expect_equiv(rep, "complement of A^im for A=" + a.to_string(), accept(f), derived, k, opt);
      auto not_exact = accept_predicate("im != A", [a](const Word& w) { return !(w.imaginary() == a); });
      auto not_sub = accept_predicate("A not inside im", [a](const Word& w) { return !a.subset_of(w.imaginary()); });
      const bool exact = !equiv(accept(f), not_exact, k);
      const bool sub = !equiv(accept(f), not_sub, k);
      rep.notes.push_back("A=" + a.to_string() + " over " + g.to_string() + ": complement of im=A " +
                          (exact ? "matches" : "differs") + ", complement of A in im " + (sub ? "matches" : "differs"));
    }
  return rep;
}

// --- pipelines -----------------------------------------------------------

inline bool x_rooted_leaves(const RankerLanguage& l) {
  for (const Ranker& r : leaves(l))
    if (!r.empty() && !r.starts_future()) return false;
  return true;
}

inline Report pipelines(const Options& opt = {}) {
  Report rep;
  rep.name = "pipelines";
  detail::Timer t(rep);
  for (LetterSet g : {LetterSet::of("a"), LetterSet::of("ab"), LetterSet::of("abc")}) {
    const Corpus k = standard_corpus(g);
    for (const Monomial& m : enumerate::monomials(g, 3)) {
      if (check_unambiguous_bounded(m, g, opt.bounded_maxlen).ambiguous()) {
        ++rep.skipped;
        continue;
      }
      ++rep.cases;
      const std::string s = to_string(m) + " over " + g.to_string();
      try {
        RankerLanguage t1 = lemma1_tl_to_rankers(prop1_relativize(lemma5_monomial_to_itl(m, g)));
        detail::expect_equiv(rep, "monomial to rankers path on " + s, accept(m), accept(t1), k, opt);
        if (delta2_condition(m)) {
          RankerLanguage t3 = lemma1_tl_to_rankers(prop1_relativize(lemma8_monomial_to_future_itl(m, g)));
          detail::expect_equiv(rep, "future path on " + s, accept(m), accept(t3), k, opt);
          detail::expect(rep, x_rooted_leaves(t3), "future path has a Y-rooted leaf for " + s);
        }
        RankerLanguage t4 = lemma1_tl_to_rankers(prop2_relativize(lemma9_complement_to_lazy_itl(m, g)));
        detail::expect_equiv(rep, "lazy complement path on " + s, accept_complement(m), accept(t4), k, opt);
      } catch (const std::exception& e) {
        rep.fail("pipeline threw on " + s + ": " + e.what());
      }
    }
  }
  return rep;
}

// --- structural invariants -------------------------------------------------

inline Report invariants(const Options& = {}) {
  Report rep;
  rep.name = "invariants";
  detail::Timer t(rep);
  const Corpus& c = standard_corpus_ab();
  for (const Ranker& r : enumerate::rankers(LetterSet::of("ab"), 4, {Flavor::eager, true})) {
    ++rep.cases;
    const Ranker lazy = r.reflavored(Flavor::lazy);
    const bool x_rooted = r.starts_future();
    for (const Word& w : c.words) {
      if (!w.is_finite() && !x_rooted) continue;
      if (eval_outside(w, r) != eval_outside(w, lazy)) {
        rep.fail(std::string(w.is_finite() ? "finite-word" : "X-ranker") + " coincidence fails for " + to_string(r) +
                 " on " + w.to_string());
        break;
      }
    }
  }
  return rep;
}

// --- mutations ------------------------------------------------------------

namespace mutate {

inline tl::Formula swap_letters(const tl::Formula& f) {
  using namespace tl;
  auto sw = [](Letter c) -> Letter { return c == 'a' ? 'b' : c == 'b' ? 'a' : c; };
  const Node& n = f.node();
  switch (n.op) {
    case Op::top:
    case Op::bottom: return f;
    case Op::not_: return not_(swap_letters(n.lhs));
    case Op::and_: return and_(swap_letters(n.lhs), swap_letters(n.rhs));
    case Op::or_: return or_(swap_letters(n.lhs), swap_letters(n.rhs));
    case Op::mod: {
      Step s = n.step;
      s.letter = sw(s.letter);
      return mod(s, swap_letters(n.lhs));
    }
    case Op::atom: {
      AtomicModality m = n.atom;
      m.letter = sw(m.letter);
      return atom(m);
    }
  }
  return f;
}

/// and(g, not h) becomes not h: the relativized negation loses its guard.
inline tl::Formula drop_guards(const tl::Formula& f) {
  using namespace tl;
  const Node& n = f.node();
  switch (n.op) {
    case Op::not_: return not_(drop_guards(n.lhs));
    case Op::and_:
      if (n.rhs.op() == Op::not_) return drop_guards(n.rhs);
      return and_(drop_guards(n.lhs), drop_guards(n.rhs));
    case Op::or_: return or_(drop_guards(n.lhs), drop_guards(n.rhs));
    case Op::mod: return mod(n.step, drop_guards(n.lhs));
    default: return f;
  }
}

inline tl::Formula flip_directions(const tl::Formula& f) {
  using namespace tl;
  const Node& n = f.node();
  switch (n.op) {
    case Op::top:
    case Op::bottom: return f;
    case Op::not_: return not_(flip_directions(n.lhs));
    case Op::and_: return and_(flip_directions(n.lhs), flip_directions(n.rhs));
    case Op::or_: return or_(flip_directions(n.lhs), flip_directions(n.rhs));
    case Op::mod: {
      Step s = n.step;
      s.direction = s.direction == Direction::next ? Direction::yesterday : Direction::next;
      return mod(s, flip_directions(n.lhs));
    }
    case Op::atom: {
      AtomicModality m = n.atom;
      m.kind = m.kind == AtomicKind::globally_no ? AtomicKind::historically_no : AtomicKind::globally_no;
      return atom(m);
    }
  }
  return f;
}

inline tl::Formula drop_atoms(const tl::Formula& f) {
  using namespace tl;
  const Node& n = f.node();
  switch (n.op) {
    case Op::atom: return bottom();
    case Op::not_: return not_(drop_atoms(n.lhs));
    case Op::and_: return and_(drop_atoms(n.lhs), drop_atoms(n.rhs));
    case Op::or_: return or_(drop_atoms(n.lhs), drop_atoms(n.rhs));
    case Op::mod: return mod(n.step, drop_atoms(n.lhs));
    default: return f;
  }
}

inline itl::Formula swap_chop(const itl::Formula& f) {
  using namespace itl;
  const Node& n = f.node();
  switch (n.op) {
    case Op::not_: return not_(swap_chop(n.lhs));
    case Op::and_: return and_(swap_chop(n.lhs), swap_chop(n.rhs));
    case Op::or_: return or_(swap_chop(n.lhs), swap_chop(n.rhs));
    case Op::first: return last(n.letter, swap_chop(n.lhs), swap_chop(n.rhs), n.flavor);
    case Op::last: return first(n.letter, swap_chop(n.lhs), swap_chop(n.rhs), n.flavor);
    default: return f;
  }
}

inline itl::Formula drop_atoms(const itl::Formula& f) {
  using namespace itl;
  const Node& n = f.node();
  switch (n.op) {
    case Op::atom: return bottom();
    case Op::not_: return not_(drop_atoms(n.lhs));
    case Op::and_: return and_(drop_atoms(n.lhs), drop_atoms(n.rhs));
    case Op::or_: return or_(drop_atoms(n.lhs), drop_atoms(n.rhs));
    case Op::first: return first(n.letter, drop_atoms(n.lhs), drop_atoms(n.rhs), n.flavor);
    case Op::last: return last(n.letter, drop_atoms(n.lhs), drop_atoms(n.rhs), n.flavor);
    default: return f;
  }
}

/// And{L(p), not X} becomes not X: the guard of a pushed negation is lost.
inline RankerLanguage drop_guards(const RankerLanguage& l) {
  using K = RankerLanguage::Kind;
  if (l.kind == K::and_ && l.children.size() == 2 && l.children[0].kind == K::leaf && l.children[1].kind == K::not_)
    return drop_guards(l.children[1]);
  RankerLanguage out = l;
  for (auto& c : out.children) c = drop_guards(c);
  return out;
}

inline fo::Formula strict_order(const fo::Formula& f) {
  using namespace fo;
  const Node& n = f.node();
  switch (n.op) {
    case Op::leq: return less(n.x, n.y);
    case Op::not_: return not_(strict_order(n.lhs));
    case Op::and_: return and_(strict_order(n.lhs), strict_order(n.rhs));
    case Op::or_: return or_(strict_order(n.lhs), strict_order(n.rhs));
    case Op::exists: return exists(n.x, strict_order(n.lhs));
    case Op::forall: return forall(n.x, strict_order(n.lhs));
    default: return f;
  }
}

}  // namespace mutate

struct Fault {
  std::string name;
  /// Runs the corrupted construction over its inputs; returns the first counterexample.
  std::function<std::optional<std::string>()> hunt;
};

inline std::vector<Fault> faults() {
  using R = std::optional<std::string>;
  const LetterSet ab = LetterSet::of("ab");
  auto ms = [] {
    static const auto v = standard_monomials(Options{});
    return v;
  };
  std::vector<Fault> out;
  out.push_back({"lemma2: letters swapped in rho", [ab]() -> R {
                   for (const Ranker& r : enumerate::rankers(ab, 2))
                     if (auto e = position_sweep(mutate::swap_letters(lemma2_rho(r)), r, Relation::greater,
                                                 standard_corpus_ab(), false))
                       return e->to_text();
                   return std::nullopt;
                 }});
  out.push_back({"lemma3: rho used as theta", [ab]() -> R {
                   for (const Ranker& r : enumerate::rankers(ab, 2, {Flavor::lazy}))
                     if (auto e = position_sweep(lemma3_rho(r), r, Relation::less_eq, standard_corpus_ab(), true))
                       return e->to_text();
                   return std::nullopt;
                 }});
  out.push_back({"prop1: negation guard dropped", [ab]() -> R {
                   for (const auto& layer : enumerate::by_size(enumerate::itl_grammar(ab), 4))
                     for (const auto& phi : layer)
                       if (auto e = equiv(accept(phi), accept(mutate::drop_guards(prop1_relativize(phi))),
                                          standard_corpus_ab()))
                         return e->to_text();
                   return std::nullopt;
                 }});
  out.push_back({"prop2: directions flipped", [ab]() -> R {
                   for (const auto& layer : enumerate::by_size(enumerate::itl_grammar(ab, {Flavor::lazy}), 3))
                     for (const auto& phi : layer)
                       if (auto e = equiv(accept(phi), accept(mutate::flip_directions(prop2_relativize(phi))),
                                          standard_corpus_ab()))
                         return e->to_text();
                   return std::nullopt;
                 }});
  out.push_back({"lemma5: F and L exchanged", [ms]() -> R {
                   for (const auto& [g, m] : ms())
                     if (auto e = equiv(accept(m), accept(mutate::swap_chop(lemma5_monomial_to_itl(m, g))),
                                        standard_corpus(g)))
                       return e->to_text();
                   return std::nullopt;
                 }});
  out.push_back({"lemma8: atoms removed", [ms]() -> R {
                   for (const auto& [g, m] : ms()) {
                     if (!delta2_condition(m)) continue;
                     auto f = simplify(mutate::drop_atoms(lemma8_monomial_to_future_itl(m, g)));
                     if (auto e = equiv(accept(m), accept(f), standard_corpus(g))) return e->to_text();
                   }
                   return std::nullopt;
                 }});
  out.push_back({"lemma9: H atoms removed", [ms]() -> R {
                   for (const auto& [g, m] : ms()) {
                     auto f = simplify(mutate::drop_atoms(lemma9_complement_to_lazy_itl(m, g)));
                     if (auto e = equiv(accept_complement(m), accept(f), standard_corpus(g))) return e->to_text();
                   }
                   return std::nullopt;
                 }});
  out.push_back({"lemma6: <= made strict", [ab]() -> R {
                   for (const Ranker& r : enumerate::rankers(ab, 2)) {
                     fo::Formula bad = fo::exists("x", mutate::strict_order(lemma6_mu(r)));
                     if (auto e = equiv(accept(bad), accept(r), standard_corpus_ab())) return e->to_text();
                   }
                   return std::nullopt;
                 }});
  out.push_back({"lemma7: last split dropped", []() -> R {
                   for (const Ranker& r : enumerate::rankers(LetterSet::of("ab"), 2, {Flavor::eager, true})) {
                     if (!is_x_ranker(r)) continue;
                     auto rs = lemma7_xranker_complement(r);
                     rs.pop_back();
                     std::vector<Acceptor> parts;
                     for (const auto& s : rs) parts.push_back(accept(s));
                     if (auto e = equiv(union_of(parts), complement(accept(r)), standard_corpus_ab())) return e->to_text();
                   }
                   return std::nullopt;
                 }});
  out.push_back({"thm5: G and H disjuncts dropped", [ab]() -> R {
                   for (const auto& layer : enumerate::by_size(enumerate::tl_grammar(ab, {Flavor::lazy}), 3))
                     for (const auto& f : layer) {
                       auto g = simplify(mutate::drop_atoms(thm5_negation_elimination(f)));
                       if (auto e = equiv(accept(f), accept(g), standard_corpus_ab())) return e->to_text();
                     }
                   return std::nullopt;
                 }});
  out.push_back({"thm5: split disjuncts dropped", [ab]() -> R {
                   for (const Ranker& r : enumerate::rankers(ab, 3, {Flavor::lazy})) {
                     if (r.starts_future()) continue;
                     auto bad = tl::formula_of(r.reflavored(Flavor::eager));
                     if (auto e = equiv(accept(r), accept(bad), standard_corpus_ab())) return e->to_text();
                   }
                   return std::nullopt;
                 }});
  out.push_back({"lemma1: negations dropped", [ab]() -> R {
                   for (const auto& layer : enumerate::by_size(enumerate::tl_grammar(ab), 4))
                     for (const auto& f : layer) {
                       RankerLanguage l = mutate::drop_guards(lemma1_tl_to_rankers(f));
                       if (auto e = equiv(accept(f), accept(l), standard_corpus_ab())) return e->to_text();
                     }
                   return std::nullopt;
                 }});
  return out;
}

inline Report mutations(const Options& = {}) {
  Report rep;
  rep.name = "mutations";
  detail::Timer t(rep);
  for (const Fault& f : faults()) {
    ++rep.cases;
    auto cex = f.hunt();
    if (cex)
      rep.notes.push_back(f.name + " caught: " + *cex);
    else
      rep.fail("fault not detected: " + f.name);
  }
  return rep;
}

// --- registry ---------------------------------------------------------------

using SuiteFn = Report (*)(const Options&);

inline const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"lemma2", &lemma2}, {"lemma3", &lemma3},   {"prop1", &prop1},         {"prop2", &prop2},
      {"lemma5", &lemma5}, {"lemma6", &lemma6},   {"lemma7", &lemma7},       {"lemma8", &lemma8},
      {"lemma9", &lemma9}, {"thm5", &thm5},       {"pipelines", &pipelines}, {"mutations", &mutations},
      {"invariants", &invariants}};
  return r;
}

inline std::optional<SuiteFn> find(const std::string& name) {
  for (const auto& [n, f] : registry())
    if (n == name) return f;
  return std::nullopt;
}

}  // namespace rankers::suites
