#pragma once

#include <functional>
#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "rankers/itl.hpp"
#include "rankers/monomial.hpp"
#include "rankers/ranker.hpp"
#include "rankers/tl.hpp"

namespace rankers::enumerate {

struct RankerOptions {
  Flavor flavor = Flavor::eager;
  bool tails = false;           // also append G / H atoms
  bool include_empty = false;
};

/// All rankers over gamma of length 1..max_len (length counts the tail).
inline std::vector<Ranker> rankers(LetterSet gamma, std::size_t max_len, RankerOptions opt = {}) {
  std::vector<Ranker> out;
  if (opt.include_empty) out.emplace_back();
  std::vector<Step> alphabet_steps;
  for (Letter a : gamma.letters()) {
    alphabet_steps.push_back(X(a, opt.flavor));
    alphabet_steps.push_back(Y(a, opt.flavor));
  }
  std::vector<AtomicModality> atoms;
  for (Letter a : gamma.letters()) {
    atoms.push_back(G(a, opt.flavor));
    atoms.push_back(H(a, opt.flavor));
  }
  std::vector<std::vector<Step>> layer{{}};
  for (std::size_t n = 0; n <= max_len; ++n) {
    for (const auto& st : layer) {
      if (n > 0) out.emplace_back(st);
      if (opt.tails && n + 1 <= max_len)
        for (const auto& m : atoms) out.emplace_back(st, m);
    }
    if (n == max_len) break;
    std::vector<std::vector<Step>> next;
    for (const auto& st : layer)
      for (const Step& s : alphabet_steps) {
        auto t = st;
        t.push_back(s);
        next.push_back(std::move(t));
      }
    layer = std::move(next);
  }
  return out;
}

// Exhaustive formula enumeration by exact AST size.
template <class F>
struct Grammar {
  std::vector<F> leaves;
  std::vector<std::function<F(F)>> unary;
  std::vector<std::function<F(F, F)>> binary;
};

template <class F>
std::vector<std::vector<F>> by_size(const Grammar<F>& g, std::size_t max_size) {
  std::vector<std::vector<F>> s(max_size + 1);
  if (max_size >= 1) s[1] = g.leaves;
  for (std::size_t n = 2; n <= max_size; ++n) {
    for (const auto& u : g.unary)
      for (const F& f : s[n - 1]) s[n].push_back(u(f));
    for (const auto& b : g.binary)
      for (std::size_t l = 1; l + 1 < n; ++l)
        for (const F& f : s[l])
          for (const F& h : s[n - 1 - l]) s[n].push_back(b(f, h));
  }
  return s;
}

template <class F>
bool has_size(const Grammar<F>& g, std::size_t n) {
  if (n <= 1) return n == 1;
  if (!g.unary.empty()) return true;
  return !g.binary.empty() && n % 2 == 1;
}

template <class F>
F random_of_size(const Grammar<F>& g, std::size_t n, std::mt19937_64& rng) {
  if (!has_size(g, n)) throw std::invalid_argument("grammar has no formula of size " + std::to_string(n));
  auto pick = [&](std::size_t k) { return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng); };
  if (n == 1) return g.leaves[pick(g.leaves.size())];
  std::vector<std::size_t> splits;
  for (std::size_t l = 1; l + 1 < n; ++l)
    if (has_size(g, l) && has_size(g, n - 1 - l)) splits.push_back(l);
  // unary with weight |unary|, binary with weight |binary| per split point
  const std::size_t choice = pick(g.unary.size() + g.binary.size() * splits.size());
  if (choice < g.unary.size()) return g.unary[choice](random_of_size(g, n - 1, rng));
  const std::size_t c = choice - g.unary.size();
  const std::size_t l = splits[c % splits.size()];
  F left = random_of_size(g, l, rng);
  F right = random_of_size(g, n - 1 - l, rng);
  return g.binary[c / splits.size()](left, right);
}

struct TLOptions {
  Flavor flavor = Flavor::eager;
  bool negation = true;
  bool atoms = true;
};

inline Grammar<tl::Formula> tl_grammar(LetterSet gamma, TLOptions opt = {}) {
  Grammar<tl::Formula> g;
  g.leaves.push_back(tl::top());
  if (opt.atoms)
    for (Letter a : gamma.letters()) {
      g.leaves.push_back(tl::atom(G(a, opt.flavor)));
      g.leaves.push_back(tl::atom(H(a, opt.flavor)));
    }
  if (opt.negation) g.unary.push_back([](tl::Formula f) { return tl::not_(f); });
  for (Letter a : gamma.letters()) {
    for (Step s : {X(a, opt.flavor), Y(a, opt.flavor)})
      g.unary.push_back([s](tl::Formula f) { return tl::mod(s, f); });
  }
  g.binary.push_back([](tl::Formula f, tl::Formula h) { return tl::and_(f, h); });
  g.binary.push_back([](tl::Formula f, tl::Formula h) { return tl::or_(f, h); });
  return g;
}

struct ITLOptions {
  Flavor flavor = Flavor::eager;
  bool negation = true;
  bool g_atoms = true;
  bool h_atoms = true;
};

inline Grammar<itl::Formula> itl_grammar(LetterSet gamma, ITLOptions opt = {}) {
  Grammar<itl::Formula> g;
  g.leaves.push_back(itl::top());
  for (Letter a : gamma.letters()) {
    if (opt.g_atoms) g.leaves.push_back(itl::atom(G(a, opt.flavor)));
    if (opt.h_atoms) g.leaves.push_back(itl::atom(H(a, opt.flavor)));
  }
  if (opt.negation) g.unary.push_back([](itl::Formula f) { return itl::not_(f); });
  g.binary.push_back([](itl::Formula f, itl::Formula h) { return itl::and_(f, h); });
  g.binary.push_back([](itl::Formula f, itl::Formula h) { return itl::or_(f, h); });
  const Flavor fl = opt.flavor;
  for (Letter a : gamma.letters()) {
    g.binary.push_back([a, fl](itl::Formula f, itl::Formula h) { return itl::first(a, f, h, fl); });
    g.binary.push_back([a, fl](itl::Formula f, itl::Formula h) { return itl::last(a, f, h, fl); });
  }
  return g;
}

inline std::vector<LetterSet> subsets(LetterSet gamma) {
  std::vector<LetterSet> out;
  const std::uint32_t g = gamma.bits();
  for (std::uint32_t s = g;; s = (s - 1) & g) {
    out.push_back(LetterSet(s));
    if (s == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Every monomial of degree <= max_degree with letter sets inside gamma.
inline std::vector<Monomial> monomials(LetterSet gamma, std::size_t max_degree) {
  const auto sets = subsets(gamma);
  const auto letters = gamma.letters();
  std::vector<Monomial> out;
  std::vector<std::vector<Block>> layer{{}};
  for (std::size_t k = 0; k <= max_degree; ++k) {
    for (const auto& bl : layer)
      for (LetterSet t : sets) out.push_back(Monomial{bl, t});
    if (k == max_degree) break;
    std::vector<std::vector<Block>> next;
    for (const auto& bl : layer)
      for (LetterSet s : sets)
        for (Letter a : letters) {
          auto b = bl;
          b.push_back(Block{s, a});
          next.push_back(std::move(b));
        }
    layer = std::move(next);
  }
  return out;
}

}  // namespace rankers::enumerate
