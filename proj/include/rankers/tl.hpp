#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankers/ranker.hpp"

namespace rankers {

/// Modality classes, one bit per (kind, flavor).
enum class ModKind : std::uint8_t { next = 0, yesterday = 1, globally_no = 2, historically_no = 3 };

class ModalitySet {
public:
  constexpr ModalitySet() = default;
  static constexpr ModalitySet of(ModKind k, Flavor f) {
    return ModalitySet(std::uint8_t(1U << (unsigned(k) * 2 + unsigned(f))));
  }
  static constexpr ModalitySet all() { return ModalitySet(0xff); }
  static constexpr ModalitySet all_of(Flavor f) {
    return of(ModKind::next, f) | of(ModKind::yesterday, f) | of(ModKind::globally_no, f) |
           of(ModKind::historically_no, f);
  }
  constexpr bool contains(ModKind k, Flavor f) const { return (bits_ & of(k, f).bits_) != 0; }
  constexpr bool subset_of(ModalitySet o) const { return (bits_ & ~o.bits_) == 0; }
  friend constexpr ModalitySet operator|(ModalitySet x, ModalitySet y) {
    return ModalitySet(std::uint8_t(x.bits_ | y.bits_));
  }
  friend constexpr bool operator==(ModalitySet, ModalitySet) = default;

private:
  constexpr explicit ModalitySet(std::uint8_t b) : bits_(b) {}
  std::uint8_t bits_ = 0;
};

inline ModKind mod_kind(const Step& s) {
  return s.direction == Direction::next ? ModKind::next : ModKind::yesterday;
}
inline ModKind mod_kind(const AtomicModality& m) {
  return m.kind == AtomicKind::globally_no ? ModKind::globally_no : ModKind::historically_no;
}

namespace tl {

enum class Op : std::uint8_t { top, bottom, not_, and_, or_, mod, atom };

struct Node;

/// Immutable TL formula; cheap to copy.
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
  Step step{};
  AtomicModality atom{};
  Formula lhs{nullptr};
  Formula rhs{nullptr};
};

inline Formula top() {
  static const Formula t(std::make_shared<Node>(Node{Op::top, {}, {}, Formula(nullptr), Formula(nullptr)}));
  return t;
}
inline Formula::Formula() : Formula(top()) {}
inline Op Formula::op() const { return n_->op; }

inline Formula bottom() {
  static const Formula b(std::make_shared<Node>(Node{Op::bottom, {}, {}, Formula(nullptr), Formula(nullptr)}));
  return b;
}
inline Formula not_(Formula f) {
  return Formula(std::make_shared<Node>(Node{Op::not_, {}, {}, std::move(f), Formula(nullptr)}));
}
inline Formula and_(Formula f, Formula g) {
  return Formula(std::make_shared<Node>(Node{Op::and_, {}, {}, std::move(f), std::move(g)}));
}
inline Formula or_(Formula f, Formula g) {
  return Formula(std::make_shared<Node>(Node{Op::or_, {}, {}, std::move(f), std::move(g)}));
}
inline Formula mod(const Step& s, Formula f) {
  return Formula(std::make_shared<Node>(Node{Op::mod, s, {}, std::move(f), Formula(nullptr)}));
}
inline Formula atom(const AtomicModality& m) {
  return Formula(std::make_shared<Node>(Node{Op::atom, {}, m, Formula(nullptr), Formula(nullptr)}));
}

/// Left-nested conjunction; empty gives top.
inline Formula conj(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = and_(acc, fs[i]);
  return acc;
}
/// Left-nested disjunction; empty gives bottom.
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
    case Op::mod: return a.step == b.step && a.lhs == b.lhs;
    case Op::atom: return a.atom == b.atom;
  }
  return false;
}

/// Steps of `r` prefixed onto its tail atom, or onto `inner` when there is no tail.
inline Formula prefix_ranker(const Ranker& r, Formula inner = top()) {
  Formula f = r.tail() ? atom(*r.tail()) : std::move(inner);
  for (auto it = r.steps().rbegin(); it != r.steps().rend(); ++it) f = mod(*it, f);
  return f;
}
/// r followed by top: the formula whose models are exactly L(r).
inline Formula formula_of(const Ranker& r) { return prefix_ranker(r, top()); }

inline bool eval_at(const Word& w, const Formula& f, Position p) {
  const Node& n = f.node();
  switch (n.op) {
    case Op::top: return true;
    case Op::bottom: return false;
    case Op::not_: return !eval_at(w, n.lhs, p);
    case Op::and_: return eval_at(w, n.lhs, p) && eval_at(w, n.rhs, p);
    case Op::or_: return eval_at(w, n.lhs, p) || eval_at(w, n.rhs, p);
    case Op::mod: {
      auto q = step_eval(w, n.step, p);
      return q && eval_at(w, n.lhs, *q);
    }
    case Op::atom: return atomic_holds(w, n.atom, p);
  }
  return false;
}

/// Top-level satisfaction: Boolean structure is distributed, each modal
/// subtree is anchored at 0 (future) or at infinity (past).
inline bool models(const Word& w, const Formula& f) {
  const Node& n = f.node();
  switch (n.op) {
    case Op::top: return true;
    case Op::bottom: return false;
    case Op::not_: return !models(w, n.lhs);
    case Op::and_: return models(w, n.lhs) && models(w, n.rhs);
    case Op::or_: return models(w, n.lhs) || models(w, n.rhs);
    case Op::mod: return eval_at(w, f, anchor_for(n.step.is_future()));
    case Op::atom: return eval_at(w, f, anchor_for(n.atom.is_future()));
  }
  return false;
}

inline bool any_node(const Formula& f, const std::function<bool(const Node&)>& pred) {
  const Node& n = f.node();
  if (pred(n)) return true;
  switch (n.op) {
    case Op::not_:
    case Op::mod: return any_node(n.lhs, pred);
    case Op::and_:
    case Op::or_: return any_node(n.lhs, pred) || any_node(n.rhs, pred);
    default: return false;
  }
}

inline std::size_t size(const Formula& f) {
  const Node& n = f.node();
  switch (n.op) {
    case Op::not_:
    case Op::mod: return 1 + size(n.lhs);
    case Op::and_:
    case Op::or_: return 1 + size(n.lhs) + size(n.rhs);
    default: return 1;
  }
}

inline bool has_negation(const Formula& f) {
  return any_node(f, [](const Node& n) { return n.op == Op::not_ || n.op == Op::bottom; });
}

inline bool has_atom(const Formula& f, AtomicKind k, Flavor fl) {
  return any_node(f, [&](const Node& n) { return n.op == Op::atom && n.atom.kind == k && n.atom.flavor == fl; });
}

inline ModalitySet modalities(const Formula& f) {
  ModalitySet s;
  any_node(f, [&](const Node& n) {
    if (n.op == Op::mod) s = s | ModalitySet::of(mod_kind(n.step), n.step.flavor);
    if (n.op == Op::atom) s = s | ModalitySet::of(mod_kind(n.atom), n.atom.flavor);
    return false;
  });
  return s;
}

/// Every outermost modality is a future one.
inline bool future_rooted(const Formula& f) {
  const Node& n = f.node();
  switch (n.op) {
    case Op::top:
    case Op::bottom: return true;
    case Op::not_: return future_rooted(n.lhs);
    case Op::and_:
    case Op::or_: return future_rooted(n.lhs) && future_rooted(n.rhs);
    case Op::mod: return n.step.is_future();
    case Op::atom: return n.atom.is_future();
  }
  return false;
}

struct TLFragmentSpec {
  ModalitySet allowed = ModalitySet::all();
  bool positive = false;
  bool future_rooted = false;
};

inline bool check_fragment(const Formula& f, const TLFragmentSpec& spec) {
  if (!modalities(f).subset_of(spec.allowed)) return false;
  if (spec.positive && has_negation(f)) return false;
  if (spec.future_rooted && !tl::future_rooted(f)) return false;
  return true;
}

}  // namespace tl
}  // namespace rankers
