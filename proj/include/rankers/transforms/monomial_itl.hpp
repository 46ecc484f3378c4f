#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rankers/itl.hpp"
#include "rankers/monomial.hpp"
#include "rankers/transforms/simplify.hpp"

namespace rankers {

/// Raised when a construction meets a monomial that is visibly ambiguous.
class ambiguity_error : public std::invalid_argument {
public:
  ambiguity_error(const std::string& what, Word witness)
      : std::invalid_argument(what + " (two factorizations of " + witness.to_string() + ")"),
        witness_(std::move(witness)) {}
  const Word& witness() const { return witness_; }

private:
  Word witness_;
};

/// A^inf over gamma.
inline itl::Formula lemma4_alphabet(LetterSet a, LetterSet gamma) {
  std::vector<itl::Formula> parts;
  for (Letter b : (gamma - a).letters()) parts.push_back(itl::atom(G(b)));
  return itl::conj(parts);
}

/// Every letter of A occurs infinitely often. Printed as a definition of A^im;
/// it does not pin down the letters outside A.
inline itl::Formula lemma4_imaginary(LetterSet a) {
  std::vector<itl::Formula> parts;
  for (Letter b : a.letters()) parts.push_back(itl::and_(itl::first(b, itl::top(), itl::top()), itl::atom(H(b))));
  return itl::conj(parts);
}

namespace detail {

inline Word square_witness(const Monomial& m) {
  std::string s;
  for (const auto& b : m.blocks) s.push_back(b.letter);
  return Word::finite(s + s);
}

/// Least i with a_i outside A_1, or 0.
inline std::size_t first_escape(const Monomial& m) {
  for (std::size_t i = 1; i <= m.degree(); ++i)
    if (!m.set(1).contains(m.letter(i))) return i;
  return 0;
}
/// Greatest i with a_i outside A_{k+1}, or 0.
inline std::size_t last_escape(const Monomial& m) {
  for (std::size_t i = m.degree(); i >= 1; --i)
    if (!m.tail.contains(m.letter(i))) return i;
  return 0;
}

inline LetterSet all_letters() { return LetterSet::first(kMaxLetters); }

inline itl::Formula lemma5_rec(const Monomial& m, LetterSet gamma) {
  const std::size_t k = m.degree();
  if (k == 0) return lemma4_alphabet(m.tail, gamma);
  if (std::size_t i = first_escape(m)) {
    const Letter ai = m.letter(i);
    const LetterSet no_ai = all_letters().without(ai);
    std::vector<itl::Formula> parts;
    // the first a_i is the marker
    parts.push_back(itl::first(ai, lemma5_rec(restrict(prefix_part(m, i), no_ai), gamma),
                               lemma5_rec(suffix_part(m, i + 1), gamma)));
    // the first a_i sits inside block j
    for (std::size_t j = 2; j <= i; ++j)
      if (m.set(j).contains(ai))
        parts.push_back(itl::first(ai, lemma5_rec(restrict(prefix_part(m, j), no_ai), gamma),
                                   lemma5_rec(suffix_part(m, j), gamma)));
    return itl::disj(parts);
  }
  if (std::size_t i = last_escape(m)) {
    const Letter ai = m.letter(i);
    const LetterSet no_ai = all_letters().without(ai);
    std::vector<itl::Formula> parts;
    parts.push_back(itl::last(ai, lemma5_rec(prefix_part(m, i), gamma),
                              lemma5_rec(restrict(suffix_part(m, i + 1), no_ai), gamma)));
    for (std::size_t j = i + 1; j <= k; ++j)
      if (m.set(j).contains(ai))
        parts.push_back(itl::last(ai, lemma5_rec(prefix_part(m, j), gamma),
                                  lemma5_rec(restrict(suffix_part(m, j), no_ai), gamma)));
    return itl::disj(parts);
  }
  throw ambiguity_error("marker letters all lie in A_1 and A_{k+1}", square_witness(m));
}

inline itl::Formula lemma8_rec(const Monomial& m, LetterSet gamma) {
  const std::size_t k = m.degree();
  if (k == 0) return lemma4_alphabet(m.tail, gamma);
  const std::size_t i = first_escape(m);
  if (i == 0) throw std::invalid_argument("monomial violates the delta2 condition");
  const Letter ai = m.letter(i);
  const LetterSet no_ai = all_letters().without(ai);
  std::vector<itl::Formula> parts;
  parts.push_back(itl::first(ai, lemma5_rec(restrict(prefix_part(m, i), no_ai), gamma),
                             lemma8_rec(suffix_part(m, i + 1), gamma)));
  for (std::size_t j = 2; j <= i; ++j)
    if (m.set(j).contains(ai))
      parts.push_back(itl::first(ai, lemma5_rec(restrict(prefix_part(m, j), no_ai), gamma),
                                 lemma8_rec(suffix_part(m, j), gamma)));
  return itl::disj(parts);
}

inline itl::Formula lemma9_rec(const Monomial& m, LetterSet gamma) {
  using namespace itl;
  const Flavor L = Flavor::lazy;
  const std::size_t k = m.degree();
  if (k == 0) {
    std::vector<Formula> parts;
    for (Letter b : (gamma - m.tail).letters()) parts.push_back(first(b, top(), top(), L));
    return disj(parts);
  }
  auto phi = [&](std::size_t j) { return lemma9_rec(prefix_part(m, j), gamma); };
  auto psi = [&](std::size_t j) { return lemma9_rec(suffix_part(m, j), gamma); };
  if (std::size_t i = last_escape(m)) {
    const Letter ai = m.letter(i);
    auto split = [&](Formula l, Formula r) { return or_(last(ai, l, top(), L), last(ai, top(), r, L)); };
    std::vector<Formula> all{split(phi(i), psi(i + 1))};
    for (std::size_t j = i + 1; j <= k; ++j)
      if (m.set(j).contains(ai)) all.push_back(split(phi(j), psi(j)));
    // a_i absent, or a_i infinitely often
    Formula infinitely = last(ai, top(), first(ai, top(), top(), L), L);
    return or_(or_(atom(H(ai, L)), infinitely), conj(all));
  }
  if (std::size_t i = first_escape(m)) {
    const Letter ai = m.letter(i);
    auto split = [&](Formula l, Formula r) { return or_(first(ai, l, top(), L), first(ai, top(), r, L)); };
    std::vector<Formula> all{split(phi(i), psi(i + 1))};
    for (std::size_t j = 2; j <= i; ++j)
      if (m.set(j).contains(ai)) all.push_back(split(phi(j), psi(j)));
    return or_(atom(H(ai, L)), conj(all));
  }
  throw ambiguity_error("marker letters all lie in A_1 and A_{k+1}", square_witness(m));
}

inline void check_gamma(const Monomial& m, LetterSet gamma) {
  LetterSet used = m.tail | m.marker_letters();
  for (const auto& b : m.blocks) used = used | b.set;
  if (!used.subset_of(gamma)) throw std::invalid_argument("monomial uses letters outside the alphabet");
}

}  // namespace detail

/// ITL+[F, L, G] formula for an unambiguous monomial over gamma.
inline itl::Formula lemma5_monomial_to_itl(const Monomial& m, LetterSet gamma) {
  detail::check_gamma(m, gamma);
  return simplify(detail::lemma5_rec(m, gamma));
}

/// Future formula for an unambiguous monomial satisfying the delta2 condition.
inline itl::Formula lemma8_monomial_to_future_itl(const Monomial& m, LetterSet gamma) {
  detail::check_gamma(m, gamma);
  if (!delta2_condition(m)) throw std::invalid_argument("monomial violates the delta2 condition");
  return simplify(detail::lemma8_rec(m, gamma));
}

/// Lazy ITL+[F, L, H] formula for the complement of an unambiguous monomial.
/// An empty complement comes out as (T FLa T) & HLn:a, false on every word.
inline itl::Formula lemma9_complement_to_lazy_itl(const Monomial& m, LetterSet gamma) {
  detail::check_gamma(m, gamma);
  itl::Formula f = simplify(detail::lemma9_rec(m, gamma));
  if (f.op() == itl::Op::bottom) {
    const Letter a = gamma.empty() ? 'a' : gamma.letters().front();
    return itl::and_(itl::first(a, itl::top(), itl::top(), Flavor::lazy), itl::atom(H(a, Flavor::lazy)));
  }
  return f;
}

}  // namespace rankers
