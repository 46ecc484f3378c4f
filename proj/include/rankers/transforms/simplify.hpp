#pragma once

#include "rankers/itl.hpp"
#include "rankers/tl.hpp"

namespace rankers {

// Bottom-up constant folding.

inline tl::Formula simplify(const tl::Formula& f) {
  using namespace tl;
  const Node& n = f.node();
  switch (n.op) {
    case Op::top:
    case Op::bottom:
    case Op::atom: return f;
    case Op::not_: {
      Formula g = simplify(n.lhs);
      if (g.op() == Op::top) return bottom();
      if (g.op() == Op::bottom) return top();
      return g.same(n.lhs) ? f : not_(g);
    }
    case Op::and_:
    case Op::or_: {
      Formula l = simplify(n.lhs), r = simplify(n.rhs);
      const bool is_and = n.op == Op::and_;
      const Op absorbing = is_and ? Op::bottom : Op::top;
      const Op neutral = is_and ? Op::top : Op::bottom;
      if (l.op() == absorbing || r.op() == absorbing) return is_and ? bottom() : top();
      if (l.op() == neutral) return r;
      if (r.op() == neutral) return l;
      if (l.same(n.lhs) && r.same(n.rhs)) return f;
      return is_and ? and_(l, r) : or_(l, r);
    }
    case Op::mod: {
      Formula g = simplify(n.lhs);
      if (g.op() == Op::bottom) return bottom();
      return g.same(n.lhs) ? f : mod(n.step, g);
    }
  }
  return f;
}

inline itl::Formula simplify(const itl::Formula& f) {
  using namespace itl;
  const Node& n = f.node();
  switch (n.op) {
    case Op::top:
    case Op::bottom:
    case Op::atom: return f;
    case Op::not_: {
      Formula g = simplify(n.lhs);
      if (g.op() == Op::top) return bottom();
      if (g.op() == Op::bottom) return top();
      return g.same(n.lhs) ? f : not_(g);
    }
    case Op::and_:
    case Op::or_: {
      Formula l = simplify(n.lhs), r = simplify(n.rhs);
      const bool is_and = n.op == Op::and_;
      const Op absorbing = is_and ? Op::bottom : Op::top;
      const Op neutral = is_and ? Op::top : Op::bottom;
      if (l.op() == absorbing || r.op() == absorbing) return is_and ? bottom() : top();
      if (l.op() == neutral) return r;
      if (r.op() == neutral) return l;
      if (l.same(n.lhs) && r.same(n.rhs)) return f;
      return is_and ? and_(l, r) : or_(l, r);
    }
    case Op::first:
    case Op::last: {
      Formula l = simplify(n.lhs), r = simplify(n.rhs);
      if (l.op() == Op::bottom || r.op() == Op::bottom) return bottom();
      if (l.same(n.lhs) && r.same(n.rhs)) return f;
      return n.op == Op::first ? first(n.letter, l, r, n.flavor) : last(n.letter, l, r, n.flavor);
    }
  }
  return f;
}

}  // namespace rankers
