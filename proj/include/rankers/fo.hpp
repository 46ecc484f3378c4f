#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rankers/words.hpp"

namespace rankers::fo {

enum class Op : std::uint8_t { true_, false_, label, not_label, less, leq, not_, and_, or_, exists, forall };

struct Node;

class Formula {
public:
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  const Node& node() const { return *n_; }
  const Node* operator->() const { return n_.get(); }
  Op op() const;
  friend bool operator==(const Formula& x, const Formula& y);

private:
  std::shared_ptr<const Node> n_;
};

struct Node {
  Op op;
  std::string x;  // label/quantifier variable, or left of a comparison
  std::string y;  // right of a comparison
  Letter letter = 'a';
  Formula lhs{nullptr};
  Formula rhs{nullptr};
};

inline Op Formula::op() const { return n_->op; }

inline Formula make(Node n) { return Formula(std::make_shared<Node>(std::move(n))); }

inline Formula true_() { return make({Op::true_, {}, {}, 'a', Formula(nullptr), Formula(nullptr)}); }
inline Formula false_() { return make({Op::false_, {}, {}, 'a', Formula(nullptr), Formula(nullptr)}); }
/// lambda(v) = a
inline Formula label(std::string v, Letter a) { return make({Op::label, std::move(v), {}, a, Formula(nullptr), Formula(nullptr)}); }
/// lambda(v) != a
inline Formula not_label(std::string v, Letter a) {
  return make({Op::not_label, std::move(v), {}, a, Formula(nullptr), Formula(nullptr)});
}
inline Formula less(std::string v, std::string u) {
  return make({Op::less, std::move(v), std::move(u), 'a', Formula(nullptr), Formula(nullptr)});
}
inline Formula leq(std::string v, std::string u) {
  return make({Op::leq, std::move(v), std::move(u), 'a', Formula(nullptr), Formula(nullptr)});
}
inline Formula not_(Formula f) { return make({Op::not_, {}, {}, 'a', std::move(f), Formula(nullptr)}); }
inline Formula and_(Formula f, Formula g) { return make({Op::and_, {}, {}, 'a', std::move(f), std::move(g)}); }
inline Formula or_(Formula f, Formula g) { return make({Op::or_, {}, {}, 'a', std::move(f), std::move(g)}); }
inline Formula exists(std::string v, Formula f) { return make({Op::exists, std::move(v), {}, 'a', std::move(f), Formula(nullptr)}); }
inline Formula forall(std::string v, Formula f) { return make({Op::forall, std::move(v), {}, 'a', std::move(f), Formula(nullptr)}); }

inline Formula conj(const std::vector<Formula>& fs) {
  if (fs.empty()) return true_();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = and_(acc, fs[i]);
  return acc;
}
inline Formula disj(const std::vector<Formula>& fs) {
  if (fs.empty()) return false_();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = or_(acc, fs[i]);
  return acc;
}

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.n_ == b.n_) return true;
  if (!a.n_ || !b.n_) return false;
  const Node& p = *a.n_;
  const Node& q = *b.n_;
  if (p.op != q.op || p.x != q.x || p.y != q.y) return false;
  switch (p.op) {
    case Op::label:
    case Op::not_label: return p.letter == q.letter;
    case Op::not_:
    case Op::exists:
    case Op::forall: return p.lhs == q.lhs;
    case Op::and_:
    case Op::or_: return p.lhs == q.lhs && p.rhs == q.rhs;
    default: return true;
  }
}

using Env = std::map<std::string, std::size_t>;

namespace detail {

class Evaluator {
public:
  Evaluator(const std::string& word, const Env& env) : w_(word) {
    for (const auto& [k, v] : env) {
      if (v < 1 || v > w_.size())
        throw std::out_of_range("variable " + k + " bound outside 1.." + std::to_string(w_.size()));
      bound_.emplace_back(k, v);
    }
  }

  bool eval(const Formula& f) {
    const Node& n = f.node();
    switch (n.op) {
      case Op::true_: return true;
      case Op::false_: return false;
      case Op::label: return w_[lookup(n.x) - 1] == n.letter;
      case Op::not_label: return w_[lookup(n.x) - 1] != n.letter;
      case Op::less: return lookup(n.x) < lookup(n.y);
      case Op::leq: return lookup(n.x) <= lookup(n.y);
      case Op::not_: return !eval(n.lhs);
      case Op::and_: return eval(n.lhs) && eval(n.rhs);
      case Op::or_: return eval(n.lhs) || eval(n.rhs);
      case Op::exists:
      case Op::forall: {
        const bool want = n.op == Op::exists;
        bound_.emplace_back(n.x, 0);
        bool result = !want;
        for (std::size_t p = 1; p <= w_.size(); ++p) {
          bound_.back().second = p;
          if (eval(n.lhs) == want) {
            result = want;
            break;
          }
        }
        bound_.pop_back();
        return result;
      }
    }
    return false;
  }

private:
  std::size_t lookup(const std::string& v) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (it->first == v) return it->second;
    throw std::invalid_argument("unbound variable " + v);
  }

  const std::string& w_;
  std::vector<std::pair<std::string, std::size_t>> bound_;
};

}  // namespace detail

inline bool fo_eval(const Word& w, const Formula& f, const Env& env = {}) {
  if (!w.is_finite()) throw std::invalid_argument("FO evaluation restricted to finite words");
  detail::Evaluator ev(w.prefix(), env);
  return ev.eval(f);
}

inline void collect_names(const Formula& f, std::set<std::string>& out) {
  const Node& n = f.node();
  switch (n.op) {
    case Op::true_:
    case Op::false_: return;
    case Op::label:
    case Op::not_label: out.insert(n.x); return;
    case Op::less:
    case Op::leq:
      out.insert(n.x);
      out.insert(n.y);
      return;
    case Op::not_: collect_names(n.lhs, out); return;
    case Op::and_:
    case Op::or_:
      collect_names(n.lhs, out);
      collect_names(n.rhs, out);
      return;
    case Op::exists:
    case Op::forall:
      out.insert(n.x);
      collect_names(n.lhs, out);
      return;
  }
}

inline std::size_t count_variable_names(const Formula& f) {
  std::set<std::string> s;
  collect_names(f, s);
  return s.size();
}

inline bool quantifier_free(const Formula& f) {
  const Node& n = f.node();
  switch (n.op) {
    case Op::exists:
    case Op::forall: return false;
    case Op::not_: return quantifier_free(n.lhs);
    case Op::and_:
    case Op::or_: return quantifier_free(n.lhs) && quantifier_free(n.rhs);
    default: return true;
  }
}

/// Prenex E* A* with a quantifier-free matrix.
inline bool is_sigma2_shape(const Formula& f) {
  const Formula* cur = &f;
  while (cur->op() == Op::exists) cur = &cur->node().lhs;
  while (cur->op() == Op::forall) cur = &cur->node().lhs;
  return quantifier_free(*cur);
}

inline std::size_t size(const Formula& f) {
  const Node& n = f.node();
  switch (n.op) {
    case Op::not_:
    case Op::exists:
    case Op::forall: return 1 + size(n.lhs);
    case Op::and_:
    case Op::or_: return 1 + size(n.lhs) + size(n.rhs);
    default: return 1;
  }
}

}  // namespace rankers::fo
