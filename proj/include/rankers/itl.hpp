#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rankers/tl.hpp"

namespace rankers::itl {

enum class Op : std::uint8_t { top, bottom, not_, and_, or_, first, last, atom };

struct Node;

class Formula {
public:
  Formula();  // top
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  const Node& node() const { return *n_; }
  const Node* operator->() const { return n_.get(); }
  Op op() const;
  bool same(const Formula& o) const { return n_ == o.n_; }

  friend bool operator==(const Formula& x, const Formula& y);

private:
  std::shared_ptr<const Node> n_;
};

struct Node {
  Op op = Op::top;
  Flavor flavor = Flavor::eager;  // first / last
  Letter letter = 'a';            // first / last
  AtomicModality atom{};
  Formula lhs{nullptr};
  Formula rhs{nullptr};
};

inline Formula make(Op op, Flavor f, Letter a, AtomicModality m, Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{op, f, a, m, std::move(l), std::move(r)}));
}

inline Formula top() {
  static const Formula t = make(Op::top, Flavor::eager, 'a', {}, Formula(nullptr), Formula(nullptr));
  return t;
}
inline Formula::Formula() : Formula(top()) {}
inline Op Formula::op() const { return n_->op; }

inline Formula bottom() {
  static const Formula b = make(Op::bottom, Flavor::eager, 'a', {}, Formula(nullptr), Formula(nullptr));
  return b;
}
inline Formula not_(Formula f) { return make(Op::not_, Flavor::eager, 'a', {}, std::move(f), Formula(nullptr)); }
inline Formula and_(Formula f, Formula g) { return make(Op::and_, Flavor::eager, 'a', {}, std::move(f), std::move(g)); }
inline Formula or_(Formula f, Formula g) { return make(Op::or_, Flavor::eager, 'a', {}, std::move(f), std::move(g)); }
/// phi F_a psi
inline Formula first(Letter a, Formula phi, Formula psi, Flavor fl = Flavor::eager) {
  return make(Op::first, fl, a, {}, std::move(phi), std::move(psi));
}
/// phi L_a psi
inline Formula last(Letter a, Formula phi, Formula psi, Flavor fl = Flavor::eager) {
  return make(Op::last, fl, a, {}, std::move(phi), std::move(psi));
}
inline Formula atom(const AtomicModality& m) { return make(Op::atom, m.flavor, m.letter, m, Formula(nullptr), Formula(nullptr)); }

inline Formula conj(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = and_(acc, fs[i]);
  return acc;
}
inline Formula disj(const std::vector<Formula>& fs) {
  if (fs.empty()) return bottom();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = or_(acc, fs[i]);
  return acc;
}

inline bool operator==(const Formula& x, const Formula& y) {
  if (x.n_ == y.n_) return true;
  if (!x.n_ || !y.n_) return false;
  const Node& a = *x.n_;
  const Node& b = *y.n_;
  if (a.op != b.op) return false;
  switch (a.op) {
    case Op::top:
    case Op::bottom: return true;
    case Op::not_: return a.lhs == b.lhs;
    case Op::and_:
    case Op::or_: return a.lhs == b.lhs && a.rhs == b.rhs;
    case Op::first:
    case Op::last:
      return a.flavor == b.flavor && a.letter == b.letter && a.lhs == b.lhs && a.rhs == b.rhs;
    case Op::atom: return a.atom == b.atom;
  }
  return false;
}

struct Interval {
  Position lo;
  Position hi;
  bool contains(Position z) const { return lt_itl(lo, z) && lt_itl(z, hi); }
};

inline bool eval_interval(const Word& w, const Formula& f, Interval iv);

namespace detail {

inline bool first_holds(const Word& w, Flavor fl, Letter a, const Formula* phi, const Formula* psi, Interval iv) {
  auto m = step_eval(w, X(a, fl), iv.lo);
  if (!m || !lt_itl(*m, iv.hi)) return false;
  return (!phi || eval_interval(w, *phi, {iv.lo, *m})) && (!psi || eval_interval(w, *psi, {*m, iv.hi}));
}
inline bool last_holds(const Word& w, Flavor fl, Letter a, const Formula* phi, const Formula* psi, Interval iv) {
  auto m = step_eval(w, Y(a, fl), iv.hi);
  if (!m || !lt_itl(iv.lo, *m)) return false;
  return (!phi || eval_interval(w, *phi, {iv.lo, *m})) && (!psi || eval_interval(w, *psi, {*m, iv.hi}));
}

inline bool atom_holds(const Word& w, const AtomicModality& m, Interval iv) {
  if (m.kind == AtomicKind::globally_no) return !first_holds(w, m.flavor, m.letter, nullptr, nullptr, iv);
  bool no_last = !last_holds(w, m.flavor, m.letter, nullptr, nullptr, iv);
  if (m.flavor == Flavor::eager || no_last) return no_last;
  // (T L_b T) F_b T for some b; letters outside alph(w) never satisfy it
  for (Letter b : w.alphabet().letters()) {
    auto mb = step_eval(w, X(b, Flavor::lazy), iv.lo);
    if (!mb || !lt_itl(*mb, iv.hi)) continue;
    if (last_holds(w, Flavor::lazy, b, nullptr, nullptr, {iv.lo, *mb})) return true;
  }
  return false;
}

}  // namespace detail

inline bool eval_interval(const Word& w, const Formula& f, Interval iv) {
  const Node& n = f.node();
  switch (n.op) {
    case Op::top: return true;
    case Op::bottom: return false;
    case Op::not_: return !eval_interval(w, n.lhs, iv);
    case Op::and_: return eval_interval(w, n.lhs, iv) && eval_interval(w, n.rhs, iv);
    case Op::or_: return eval_interval(w, n.lhs, iv) || eval_interval(w, n.rhs, iv);
    case Op::first: return detail::first_holds(w, n.flavor, n.letter, &n.lhs, &n.rhs, iv);
    case Op::last: return detail::last_holds(w, n.flavor, n.letter, &n.lhs, &n.rhs, iv);
    case Op::atom: return detail::atom_holds(w, n.atom, iv);
  }
  return false;
}

inline bool models(const Word& w, const Formula& f) {
  return eval_interval(w, f, {Position::start(), Position::inf()});
}

inline bool any_node(const Formula& f, const std::function<bool(const Node&)>& pred) {
  const Node& n = f.node();
  if (pred(n)) return true;
  switch (n.op) {
    case Op::not_: return any_node(n.lhs, pred);
    case Op::and_:
    case Op::or_:
    case Op::first:
    case Op::last: return any_node(n.lhs, pred) || any_node(n.rhs, pred);
    default: return false;
  }
}

inline std::size_t size(const Formula& f) {
  const Node& n = f.node();
  switch (n.op) {
    case Op::not_: return 1 + size(n.lhs);
    case Op::and_:
    case Op::or_:
    case Op::first:
    case Op::last: return 1 + size(n.lhs) + size(n.rhs);
    default: return 1;
  }
}

inline bool has_negation(const Formula& f) {
  return any_node(f, [](const Node& n) { return n.op == Op::not_ || n.op == Op::bottom; });
}

inline bool has_atom(const Formula& f, AtomicKind k, Flavor fl) {
  return any_node(f, [&](const Node& n) { return n.op == Op::atom && n.atom.kind == k && n.atom.flavor == fl; });
}

/// F maps to the next-class bit, L to the yesterday-class bit.
inline ModalitySet modalities(const Formula& f) {
  ModalitySet s;
  any_node(f, [&](const Node& n) {
    if (n.op == Op::first) s = s | ModalitySet::of(ModKind::next, n.flavor);
    if (n.op == Op::last) s = s | ModalitySet::of(ModKind::yesterday, n.flavor);
    if (n.op == Op::atom) s = s | ModalitySet::of(mod_kind(n.atom), n.atom.flavor);
    return false;
  });
  return s;
}

inline bool check_itl_fragment(const Formula& f, ModalitySet allowed, bool positive) {
  if (!modalities(f).subset_of(allowed)) return false;
  return !(positive && has_negation(f));
}

namespace detail {
inline bool future_ok(const Formula& f, bool guarded) {
  const Node& n = f.node();
  switch (n.op) {
    case Op::top:
    case Op::bottom: return true;
    case Op::not_: return future_ok(n.lhs, guarded);
    case Op::and_:
    case Op::or_: return future_ok(n.lhs, guarded) && future_ok(n.rhs, guarded);
    case Op::first: return future_ok(n.lhs, true) && future_ok(n.rhs, guarded);
    case Op::last: return guarded && future_ok(n.lhs, true) && future_ok(n.rhs, true);
    case Op::atom: return guarded || n.atom.is_future();
  }
  return false;
}
}  // namespace detail

/// Every past modality sits below the left operand of some F.
inline bool is_future_formula(const Formula& f) { return detail::future_ok(f, false); }

}  // namespace rankers::itl
