#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rankers/itl.hpp"
#include "rankers/syntax.hpp"
#include "rankers/transforms/ranker_formulas.hpp"

namespace rankers {

/// Interval endpoint: 0, infinity, or the position of a ranker.
struct Boundary {
  enum class Kind : std::uint8_t { begin, end, ranker };
  Kind kind = Kind::begin;
  Ranker r;

  static Boundary begin() { return {Kind::begin, {}}; }
  static Boundary end() { return {Kind::end, {}}; }
  static Boundary at(Ranker r) {
    if (r.steps().empty() || r.tail()) throw std::invalid_argument("boundary ranker must be a non-empty step sequence");
    return {Kind::ranker, std::move(r)};
  }
  bool is_begin() const { return kind == Kind::begin; }
  bool is_end() const { return kind == Kind::end; }
  bool is_ranker() const { return kind == Kind::ranker; }

  std::string to_string() const {
    if (is_begin()) return "begin";
    if (is_end()) return "end";
    return rankers::to_string(r);
  }
};

namespace detail {

/// b followed by f. Begin and End leave f to be anchored by the top-level relation.
inline tl::Formula at(const Boundary& b, tl::Formula f) {
  if (!b.is_ranker()) return f;
  return tl::prefix_ranker(b.r, std::move(f));
}

/// Position after the first a-step from b (b is not End).
inline Boundary step_from(const Boundary& b, const Step& s) {
  if (b.is_ranker()) return Boundary::at(b.r.then(s));
  return Boundary::at(Ranker({s}));
}

inline void check_boundary_flavor(const Boundary& b, Flavor f) {
  if (b.is_ranker() && b.r.flavor() != f)
    throw std::invalid_argument(f == Flavor::eager ? "lazy boundary in eager relativization"
                                                   : "eager boundary in lazy relativization");
}

class Relativizer {
public:
  explicit Relativizer(Flavor f) : flavor_(f) {}

  tl::Formula run(const itl::Formula& phi, const Boundary& q, const Boundary& r) {
    check_boundary_flavor(q, flavor_);
    check_boundary_flavor(r, flavor_);
    return simplify(rel(phi, q, r));
  }

private:
  tl::Formula rho(const Boundary& b) {
    return flavor_ == Flavor::eager ? lemma2_rho(b.r) : lemma3_rho(b.r);
  }
  tl::Formula theta(const Boundary& b) {
    return flavor_ == Flavor::eager ? lemma2_theta(b.r) : lemma3_theta(b.r);
  }

  /// q(w), r(w) defined and q(w) < r(w).
  tl::Formula top_(const Boundary& q, const Boundary& r) {
    using namespace tl;
    std::vector<Formula> parts;
    if (q.is_ranker()) parts.push_back(formula_of(q.r));
    if (r.is_ranker()) parts.push_back(formula_of(r.r));
    if (flavor_ == Flavor::eager) {
      // r rho_q; an eager ranker position is finite, so End needs nothing
      if (q.is_ranker() && r.is_ranker()) parts.push_back(at(r, rho(q)));
    } else {
      // q rho_r; every ranker position is beyond 0, so Begin needs nothing
      if (q.is_ranker() && r.is_ranker()) parts.push_back(at(q, rho(r)));
    }
    return conj(parts);
  }

  tl::Formula rel(const itl::Formula& phi, const Boundary& q, const Boundary& r) {
    using itl::Op;
    const itl::Node& n = phi.node();
    switch (n.op) {
      case Op::top: return top_(q, r);
      case Op::bottom: return tl::bottom();
      case Op::not_: return tl::and_(top_(q, r), tl::not_(rel(n.lhs, q, r)));
      case Op::and_: return tl::and_(rel(n.lhs, q, r), rel(n.rhs, q, r));
      case Op::or_: return tl::or_(rel(n.lhs, q, r), rel(n.rhs, q, r));
      case Op::first: {
        require_flavor(n.flavor);
        Boundary m = step_from(q, X(n.letter, flavor_));
        return tl::conj({top_(q, r), rel(n.lhs, q, m), rel(n.rhs, m, r)});
      }
      case Op::last: {
        require_flavor(n.flavor);
        Boundary m = step_from(r, Y(n.letter, flavor_));
        return tl::conj({top_(q, r), rel(n.lhs, q, m), rel(n.rhs, m, r)});
      }
      case Op::atom:
        require_flavor(n.atom.flavor);
        return flavor_ == Flavor::eager ? eager_atom(n.atom, q, r) : lazy_atom(n.atom, q, r);
    }
    return tl::bottom();
  }

  void require_flavor(Flavor f) const {
    if (f != flavor_)
      throw std::invalid_argument(flavor_ == Flavor::eager ? "lazy modality in eager relativization"
                                                           : "eager modality in lazy relativization");
  }

  tl::Formula eager_atom(const AtomicModality& m, const Boundary& q, const Boundary& r) {
    using namespace tl;
    const Letter a = m.letter;
    if (r.is_end()) {
      if (m.kind == AtomicKind::globally_no) return and_(top_(q, r), at(q, atom(G(a))));
      return and_(top_(q, r), or_(atom(H(a)), at(q, atom(G(a)))));
    }
    // finite interval: G and H coincide
    return and_(top_(q, r), at(q, or_(atom(G(a)), mod(X(a), theta(r)))));
  }

  tl::Formula lazy_atom(const AtomicModality& m, const Boundary& q, const Boundary& r) {
    using namespace tl;
    const Flavor L = Flavor::lazy;
    const Letter a = m.letter;
    // r(H ∨ Y theta_q) with theta_begin = bottom
    auto no_a_back_to_q = [&]() {
      Formula inner = q.is_begin() ? atom(H(a, L)) : or_(atom(H(a, L)), mod(Y(a, L), theta(q)));
      return at(r, inner);
    };
    if (m.kind == AtomicKind::historically_no) return and_(top_(q, r), no_a_back_to_q());
    if (r.is_end()) return and_(top_(q, r), at(q, atom(G(a, L))));
    if (r.r.starts_future()) return and_(top_(q, r), no_a_back_to_q());
    std::vector<Formula> finite_r;
    for (Letter b : alph_gamma(r.r).letters()) finite_r.push_back(mod(Y(b, L), atom(G(b, L))));
    return and_(top_(q, r), or_(and_(no_a_back_to_q(), disj(finite_r)), at(q, atom(G(a, L)))));
  }

  Flavor flavor_;
};

}  // namespace detail

/// phi on the interval (q; r) as a TL formula, eager flavor.
inline tl::Formula prop1_relativize(const itl::Formula& phi, const Boundary& q = Boundary::begin(),
                                    const Boundary& r = Boundary::end()) {
  return detail::Relativizer(Flavor::eager).run(phi, q, r);
}

/// Lazy counterpart of prop1_relativize.
inline tl::Formula prop2_relativize(const itl::Formula& phi, const Boundary& q = Boundary::begin(),
                                    const Boundary& r = Boundary::end()) {
  return detail::Relativizer(Flavor::lazy).run(phi, q, r);
}

}  // namespace rankers
