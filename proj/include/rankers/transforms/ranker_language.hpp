#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rankers/syntax.hpp"
#include "rankers/tl.hpp"

namespace rankers {

/// Boolean combination of ranker languages L(r). And{} is everything, Or{} nothing.
struct RankerLanguage {
  enum class Kind : std::uint8_t { leaf, not_, and_, or_ };
  Kind kind = Kind::leaf;
  Ranker ranker;
  std::vector<RankerLanguage> children;

  static RankerLanguage leaf(Ranker r) { return {Kind::leaf, std::move(r), {}}; }
  static RankerLanguage negate(RankerLanguage l) { return {Kind::not_, {}, {std::move(l)}}; }
  static RankerLanguage all_of(std::vector<RankerLanguage> ls) { return {Kind::and_, {}, std::move(ls)}; }
  static RankerLanguage any_of(std::vector<RankerLanguage> ls) { return {Kind::or_, {}, std::move(ls)}; }
};

inline bool models(const Word& w, const RankerLanguage& l) {
  switch (l.kind) {
    case RankerLanguage::Kind::leaf: return defined_on(w, l.ranker);
    case RankerLanguage::Kind::not_: return !models(w, l.children.front());
    case RankerLanguage::Kind::and_:
      for (const auto& c : l.children)
        if (!models(w, c)) return false;
      return true;
    case RankerLanguage::Kind::or_:
      for (const auto& c : l.children)
        if (models(w, c)) return true;
      return false;
  }
  return false;
}

inline void collect_leaves(const RankerLanguage& l, std::vector<Ranker>& out) {
  if (l.kind == RankerLanguage::Kind::leaf) out.push_back(l.ranker);
  for (const auto& c : l.children) collect_leaves(c, out);
}
inline std::vector<Ranker> leaves(const RankerLanguage& l) {
  std::vector<Ranker> out;
  collect_leaves(l, out);
  return out;
}

inline bool is_positive(const RankerLanguage& l) {
  if (l.kind == RankerLanguage::Kind::not_) return false;
  for (const auto& c : l.children)
    if (!is_positive(c)) return false;
  return true;
}

inline std::string to_string(const RankerLanguage& l) {
  switch (l.kind) {
    case RankerLanguage::Kind::leaf: return "L(" + to_string(l.ranker) + ")";
    case RankerLanguage::Kind::not_: return "!" + to_string(l.children.front());
    case RankerLanguage::Kind::and_:
    case RankerLanguage::Kind::or_: {
      const bool is_and = l.kind == RankerLanguage::Kind::and_;
      if (l.children.empty()) return is_and ? "ALL" : "NONE";
      if (l.children.size() == 1) return to_string(l.children.front());
      std::string out = "(";
      for (std::size_t i = 0; i < l.children.size(); ++i) {
        if (i) out += is_and ? " & " : " | ";
        out += to_string(l.children[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

namespace detail {

inline Ranker make_leaf(const std::vector<Step>& prefix, std::optional<AtomicModality> tail = std::nullopt) {
  try {
    return Ranker(prefix, tail);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("eager and lazy modalities mixed along one path");
  }
}

inline RankerLanguage distribute(std::vector<Step>& prefix, const tl::Formula& f) {
  using tl::Op;
  const tl::Node& n = f.node();
  switch (n.op) {
    case Op::top: return RankerLanguage::leaf(make_leaf(prefix));
    case Op::bottom: return RankerLanguage::any_of({});
    case Op::atom: return RankerLanguage::leaf(make_leaf(prefix, n.atom));
    case Op::and_:
    case Op::or_: {
      std::vector<RankerLanguage> parts;
      parts.push_back(distribute(prefix, n.lhs));
      parts.push_back(distribute(prefix, n.rhs));
      return n.op == Op::and_ ? RankerLanguage::all_of(std::move(parts)) : RankerLanguage::any_of(std::move(parts));
    }
    case Op::not_: {
      // Z(!p) = Z T & !Z p
      if (prefix.empty()) return RankerLanguage::negate(distribute(prefix, n.lhs));
      std::vector<RankerLanguage> parts;
      parts.push_back(RankerLanguage::leaf(make_leaf(prefix)));
      parts.push_back(RankerLanguage::negate(distribute(prefix, n.lhs)));
      return RankerLanguage::all_of(std::move(parts));
    }
    case Op::mod: {
      prefix.push_back(n.step);
      RankerLanguage out = distribute(prefix, n.lhs);
      prefix.pop_back();
      return out;
    }
  }
  return RankerLanguage::any_of({});
}

}  // namespace detail

/// Pushes every Boolean connective above the modalities.
inline RankerLanguage lemma1_tl_to_rankers(const tl::Formula& f) {
  std::vector<Step> prefix;
  return detail::distribute(prefix, f);
}

}  // namespace rankers
