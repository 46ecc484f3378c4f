#pragma once

#include <stdexcept>
#include <vector>

#include "rankers/itl.hpp"
#include "rankers/tl.hpp"
#include "rankers/transforms/simplify.hpp"

namespace rankers {

namespace detail {

inline tl::Formula expand_lazy_atoms(const tl::Formula& f) {
  using namespace tl;
  const Node& n = f.node();
  switch (n.op) {
    case Op::top:
    case Op::bottom: return f;
    case Op::not_: return not_(expand_lazy_atoms(n.lhs));
    case Op::and_: return and_(expand_lazy_atoms(n.lhs), expand_lazy_atoms(n.rhs));
    case Op::or_: return or_(expand_lazy_atoms(n.lhs), expand_lazy_atoms(n.rhs));
    case Op::mod:
      if (n.step.flavor != Flavor::lazy) throw std::invalid_argument("eager modality in a lazy formula");
      return mod(n.step, expand_lazy_atoms(n.lhs));
    case Op::atom:
      if (n.atom.flavor != Flavor::lazy) throw std::invalid_argument("eager modality in a lazy formula");
      return not_(mod(defining_step(n.atom), top()));
  }
  return f;
}

// negated: produce a formula for the negation of f
inline tl::Formula push_negations(const tl::Formula& f, bool negated) {
  using namespace tl;
  const Node& n = f.node();
  switch (n.op) {
    case Op::top: return negated ? bottom() : top();
    case Op::bottom: return negated ? top() : bottom();
    case Op::not_: return push_negations(n.lhs, !negated);
    case Op::and_:
    case Op::or_: {
      Formula l = push_negations(n.lhs, negated), r = push_negations(n.rhs, negated);
      return (n.op == Op::and_) != negated ? and_(l, r) : or_(l, r);
    }
    case Op::mod: {
      Formula inner = mod(n.step, push_negations(n.lhs, negated));
      if (!negated) return inner;
      const Letter a = n.step.letter;
      AtomicModality fail = n.step.direction == Direction::next ? G(a, Flavor::lazy) : H(a, Flavor::lazy);
      return or_(atom(fail), inner);
    }
    case Op::atom: return negated ? not_(f) : f;  // unreachable after expansion
  }
  return f;
}

}  // namespace detail

/// Positive TL[X, Y, G, H] formula (lazy) equivalent at every position.
/// A formula that folds to false becomes GLn:a & XLa(T).
inline tl::Formula thm5_negation_elimination(const tl::Formula& phi) {
  tl::Formula f = simplify(detail::push_negations(detail::expand_lazy_atoms(phi), false));
  if (f.op() == tl::Op::bottom) return tl::and_(tl::atom(G('a', Flavor::lazy)), tl::mod(X('a', Flavor::lazy), tl::top()));
  return f;
}

/// a in im(alpha), for each a in A, with eager modalities.
inline tl::Formula thm5_imaginary_macro(LetterSet a) {
  std::vector<tl::Formula> parts;
  for (Letter b : a.letters())
    parts.push_back(tl::and_(tl::mod(X(b), tl::top()), tl::not_(tl::mod(Y(b), tl::top()))));
  return tl::conj(parts);
}

/// Eager TL formula defining L(r) for a Y-rooted lazy ranker r.
inline tl::Formula thm5_lazy_ranker_to_tl(const Ranker& r) {
  if (r.tail()) throw std::invalid_argument("ranker has an atomic modality");
  if (r.steps().empty()) throw std::invalid_argument("empty ranker");
  if (r.flavor() != Flavor::lazy) throw std::invalid_argument("eager ranker given to a lazy construction");
  if (r.starts_future()) throw std::invalid_argument("ranker is not Y-rooted");
  const auto& st = r.steps();
  const std::size_t k = st.size();
  std::vector<tl::Formula> parts;
  LetterSet prefix_letters;
  for (std::size_t i = 0; i <= k; ++i) {
    if (i == k || st[i].direction != Direction::next) {
      Ranker suffix = Ranker(std::vector<Step>(st.begin() + long(i), st.end())).reflavored(Flavor::eager);
      tl::Formula tail_part = tl::formula_of(suffix);
      parts.push_back(prefix_letters.empty() ? tail_part : i == k ? thm5_imaginary_macro(prefix_letters)
                                                                  : tl::and_(thm5_imaginary_macro(prefix_letters), tail_part));
    }
    if (i < k) prefix_letters = prefix_letters.with(st[i].letter);
  }
  return tl::disj(parts);
}

/// Lazy ITL formula for the complement-of-A^im construction. Its models are
/// the words with im not inside A, or with some b in A occurring finitely
/// often but at least once.
inline itl::Formula thm5_complement_Aim(LetterSet a, LetterSet gamma) {
  using namespace itl;
  const Flavor L = Flavor::lazy;
  std::vector<Formula> parts;
  for (Letter b : (gamma - a).letters()) parts.push_back(last(b, top(), first(b, top(), top(), L), L));
  for (Letter b : a.letters()) parts.push_back(last(b, top(), atom(G(b, L)), L));
  return disj(parts);
}

}  // namespace rankers
