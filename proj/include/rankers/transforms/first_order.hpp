#pragma once

#include <stdexcept>
#include <string>

#include "rankers/fo.hpp"
#include "rankers/ranker.hpp"

namespace rankers {

namespace detail {

inline void require_lemma6_input(const Ranker& r) {
  if (r.empty()) throw std::invalid_argument("empty ranker has no defining formula");
  if (r.flavor() != Flavor::eager) throw std::invalid_argument("lazy ranker given to an eager construction");
  if (r.steps().empty() && r.tail()->kind == AtomicKind::historically_no)
    throw std::invalid_argument("lone H ranker is excluded");
}

/// x and y exchanged everywhere, bound or free.
inline fo::Formula swap_xy(const fo::Formula& f) {
  using namespace fo;
  auto sw = [](const std::string& v) -> std::string { return v == "x" ? "y" : v == "y" ? "x" : v; };
  const Node& n = f.node();
  switch (n.op) {
    case Op::true_:
    case Op::false_: return f;
    case Op::label: return label(sw(n.x), n.letter);
    case Op::not_label: return not_label(sw(n.x), n.letter);
    case Op::less: return less(sw(n.x), sw(n.y));
    case Op::leq: return leq(sw(n.x), sw(n.y));
    case Op::not_: return not_(swap_xy(n.lhs));
    case Op::and_: return and_(swap_xy(n.lhs), swap_xy(n.rhs));
    case Op::or_: return or_(swap_xy(n.lhs), swap_xy(n.rhs));
    case Op::exists: return exists(sw(n.x), swap_xy(n.lhs));
    case Op::forall: return forall(sw(n.x), swap_xy(n.lhs));
  }
  return f;
}

inline fo::Formula or3(fo::Formula a, fo::Formula b, fo::Formula c) { return fo::or_(fo::or_(a, b), c); }

// mu for the first n steps
inline fo::Formula mu_steps(const std::vector<Step>& st, std::size_t n) {
  using namespace fo;
  const Step& s = st[n - 1];
  const Letter a = s.letter;
  const bool next = s.direction == Direction::next;
  if (n == 1) return forall("y", and_(label("x", a), or_(next ? leq("x", "y") : leq("y", "x"), not_label("y", a))));
  Formula prev = mu_steps(st, n - 1);
  Formula prev_y = swap_xy(prev);
  if (next)
    return conj({label("x", a), exists("y", and_(less("y", "x"), prev_y)),
                 forall("y", or3(leq("x", "y"), not_label("y", a), exists("x", and_(leq("y", "x"), prev))))});
  return conj({label("x", a), exists("y", and_(less("x", "y"), prev_y)),
               forall("y", or3(leq("y", "x"), not_label("y", a), exists("x", and_(leq("x", "y"), prev))))});
}

inline std::string xv(std::size_t i) { return "x" + std::to_string(i); }

// quantifier-free matrix over x1..xn, y
inline fo::Formula nu_steps(const std::vector<Step>& st, std::size_t n) {
  using namespace fo;
  const Step& s = st[n - 1];
  const Letter a = s.letter;
  const bool next = s.direction == Direction::next;
  const std::string xn = xv(n);
  if (n == 1) return and_(label(xn, a), or_(next ? leq(xn, "y") : leq("y", xn), not_label("y", a)));
  const std::string xp = xv(n - 1);
  if (next)
    return conj({label(xn, a), less(xp, xn), nu_steps(st, n - 1), or3(leq("y", xp), leq(xn, "y"), not_label("y", a))});
  return conj({label(xn, a), less(xn, xp), nu_steps(st, n - 1), or3(leq(xp, "y"), leq("y", xn), not_label("y", a))});
}

}  // namespace detail

/// FO2 formula with free variable x; x is the ranker's position.
/// For a lone G ranker the formula is a sentence.
inline fo::Formula lemma6_mu(const Ranker& r) {
  using namespace fo;
  rankers::detail::require_lemma6_input(r);
  const std::size_t n = r.steps().size();
  if (n == 0) return forall("y", not_label("y", r.tail()->letter));
  Formula f = rankers::detail::mu_steps(r.steps(), n);
  if (!r.tail()) return f;
  const Letter a = r.tail()->letter;
  if (r.tail()->kind == AtomicKind::globally_no) return and_(f, forall("y", or_(leq("y", "x"), not_label("y", a))));
  return and_(f, forall("y", or_(leq("x", "y"), not_label("y", a))));
}

/// Name of sigma's free variable.
inline std::string lemma6_sigma_variable(const Ranker& r) {
  return rankers::detail::xv(std::max<std::size_t>(1, r.steps().size()));
}

/// Sigma2 formula E x_{n-1} .. E x_1 A y. nu, free in x_n.
inline fo::Formula lemma6_sigma(const Ranker& r) {
  using namespace fo;
  rankers::detail::require_lemma6_input(r);
  const std::size_t n = r.steps().size();
  if (n == 0) return forall("y", not_label("y", r.tail()->letter));
  Formula nu = rankers::detail::nu_steps(r.steps(), n);
  if (r.tail()) {
    const Letter a = r.tail()->letter;
    const std::string xn = rankers::detail::xv(n);
    nu = and_(nu, r.tail()->kind == AtomicKind::globally_no ? or_(leq("y", xn), not_label("y", a))
                                                            : or_(leq(xn, "y"), not_label("y", a)));
  }
  Formula f = forall("y", nu);
  for (std::size_t i = 1; i < n; ++i) f = exists(rankers::detail::xv(i), f);
  return f;
}

/// E x. mu, or mu itself when it has no free variable.
inline fo::Formula lemma6_mu_sentence(const Ranker& r) {
  fo::Formula f = lemma6_mu(r);
  return r.steps().empty() ? f : fo::exists("x", f);
}

inline fo::Formula lemma6_sigma_sentence(const Ranker& r) {
  fo::Formula f = lemma6_sigma(r);
  return r.steps().empty() ? f : fo::exists(lemma6_sigma_variable(r), f);
}

}  // namespace rankers
