#pragma once

#include <stdexcept>
#include <utility>

#include "rankers/transforms/simplify.hpp"

namespace rankers {

/// rho_r and theta_r for a non-empty tail-free ranker.
struct RankerBounds {
  tl::Formula rho;
  tl::Formula theta;
};

namespace detail {

inline void require_plain(const Ranker& r, Flavor f) {
  if (r.steps().empty()) throw std::invalid_argument("ranker must have at least one step");
  if (r.tail()) throw std::invalid_argument("ranker must not carry an atomic modality");
  if (r.flavor() != f)
    throw std::invalid_argument(f == Flavor::eager ? "expected an eager ranker" : "expected a lazy ranker");
}

}  // namespace detail

/// Eager: x |= rho iff x > r(w), x |= theta iff x >= r(w), whenever r(w) is defined.
inline RankerBounds lemma2_bounds(const Ranker& r) {
  detail::require_plain(r, Flavor::eager);
  using namespace tl;
  // the empty ranker sits in front of the word for X and behind it for Y
  Formula rho = top(), theta = bottom();
  for (const Step& s : r.steps()) {
    const Letter a = s.letter;
    if (s.direction == Direction::next) {
      rho = mod(Y(a), rho);
      theta = or_(atom(G(a)), mod(X(a), rho));
    } else {
      theta = or_(atom(G(a)), mod(X(a), theta));
      rho = mod(Y(a), theta);
    }
  }
  return {simplify(rho), simplify(theta)};
}

inline tl::Formula lemma2_rho(const Ranker& r) { return lemma2_bounds(r).rho; }
inline tl::Formula lemma2_theta(const Ranker& r) { return lemma2_bounds(r).theta; }

/// Lazy: x |= rho iff x < r(w), x |= theta iff x <= r(w), with inf < inf.
inline RankerBounds lemma3_bounds(const Ranker& r) {
  detail::require_plain(r, Flavor::lazy);
  using namespace tl;
  const Flavor L = Flavor::lazy;
  Formula rho = top(), theta = bottom();
  for (const Step& s : r.steps()) {
    const Letter a = s.letter;
    if (s.direction == Direction::next) {
      theta = or_(atom(H(a, L)), mod(Y(a, L), theta));
      rho = mod(X(a, L), theta);
    } else {
      rho = mod(X(a, L), rho);
      theta = or_(atom(H(a, L)), mod(Y(a, L), rho));
    }
  }
  return {simplify(rho), simplify(theta)};
}

inline tl::Formula lemma3_rho(const Ranker& r) { return lemma3_bounds(r).rho; }
inline tl::Formula lemma3_theta(const Ranker& r) { return lemma3_bounds(r).theta; }

}  // namespace rankers
