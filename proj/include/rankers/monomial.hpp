#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rankers/words.hpp"

namespace rankers {

struct Block {
  LetterSet set;
  Letter letter;
  friend bool operator==(const Block&, const Block&) = default;
};

/// A_1* a_1 ... A_k* a_k A_{k+1}^inf
struct Monomial {
  std::vector<Block> blocks;
  LetterSet tail;

  std::size_t degree() const { return blocks.size(); }
  /// A_i, 1-indexed; A_{k+1} is the tail.
  LetterSet set(std::size_t i) const { return i == blocks.size() + 1 ? tail : blocks.at(i - 1).set; }
  /// a_i, 1-indexed.
  Letter letter(std::size_t i) const { return blocks.at(i - 1).letter; }
  LetterSet marker_letters() const {
    LetterSet s;
    for (const auto& b : blocks) s = s.with(b.letter);
    return s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

using Polynomial = std::vector<Monomial>;

/// Marker positions p_1 < ... < p_k.
using Factorization = std::vector<std::size_t>;

namespace detail {

/// One NFA step on the state set (bit i = state i).
inline std::uint32_t monomial_step(const Monomial& m, std::uint32_t states, Letter c) {
  const std::size_t k = m.degree();
  std::uint32_t out = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    if (!((states >> i) & 1U)) continue;
    if (m.set(i + 1).contains(c)) out |= 1U << i;
    if (i < k && m.letter(i + 1) == c) out |= 1U << (i + 1);
  }
  return out;
}

inline LetterSet letters_of(const std::string& s) { return LetterSet::of(s); }

}  // namespace detail

inline bool member(const Word& w, const Monomial& m) {
  const std::uint32_t accept = 1U << m.degree();
  std::uint32_t st = 1;
  for (char c : w.prefix()) st = detail::monomial_step(m, st, c);
  if (w.is_finite()) return (st & accept) != 0;
  if (!detail::letters_of(w.period()).subset_of(m.tail)) return false;
  std::set<std::uint32_t> seen;
  while (st && seen.insert(st).second) {
    if (st & accept) return true;
    for (char c : w.period()) st = detail::monomial_step(m, st, c);
  }
  return false;
}

inline bool member(const Word& w, const Polynomial& p) {
  return std::any_of(p.begin(), p.end(), [&](const Monomial& m) { return member(w, m); });
}

/// |w| for finite words; |u| + max(2,k)|v| for lassos, which bounds the last
/// marker of some factorization whenever one exists.
inline std::size_t default_horizon(const Word& w, const Monomial& m) {
  if (w.is_finite()) return w.prefix().size();
  return w.prefix().size() + std::max<std::size_t>(2, m.degree()) * w.period().size();
}

/// All factorizations with markers at most `horizon`, lexicographically.
inline std::vector<Factorization> enumerate_factorizations(const Word& w, const Monomial& m, std::size_t horizon) {
  const std::size_t k = m.degree();
  std::size_t limit = horizon;
  if (w.is_finite()) limit = std::min(limit, w.prefix().size());
  // letters strictly after position p
  auto suffix_ok = [&](std::size_t p) {
    if (w.is_finite()) {
      for (std::size_t q = p + 1; q <= w.prefix().size(); ++q)
        if (!m.tail.contains(w.letter_at(Position::fin(q)))) return false;
      return true;
    }
    if (!detail::letters_of(w.period()).subset_of(m.tail)) return false;
    for (std::size_t q = p + 1; q <= w.prefix().size(); ++q)
      if (!m.tail.contains(w.letter_at(Position::fin(q)))) return false;
    return true;
  };
  std::vector<Factorization> out;
  Factorization cur;
  auto dfs = [&](auto&& self, std::size_t i, std::size_t from) -> void {
    if (i == k) {
      if (suffix_ok(from)) out.push_back(cur);
      return;
    }
    const LetterSet gap = m.set(i + 1);
    for (std::size_t p = from + 1; p <= limit; ++p) {
      Letter c = w.letter_at(Position::fin(p));
      if (c == m.letter(i + 1)) {
        cur.push_back(p);
        self(self, i + 1, p);
        cur.pop_back();
      }
      if (!gap.contains(c)) break;
    }
  };
  dfs(dfs, 0, 0);
  return out;
}

struct Verdict {
  std::optional<Word> witness;  // set iff ambiguous
  std::size_t maxlen = 0;
  bool ambiguous() const { return witness.has_value(); }
};

namespace detail {

/// Run counts per NFA state, saturating at 2.
using Counts = std::array<std::uint8_t, 8>;

inline std::uint8_t sat(unsigned x) { return static_cast<std::uint8_t>(std::min(x, 2U)); }

inline Counts count_step(const Monomial& m, const Counts& x, Letter c) {
  const std::size_t k = m.degree();
  Counts y{};
  for (std::size_t i = 0; i <= k; ++i) {
    if (!x[i]) continue;
    if (m.set(i + 1).contains(c)) y[i] = sat(y[i] + x[i]);
    if (i < k && m.letter(i + 1) == c) y[i + 1] = sat(y[i + 1] + x[i]);
  }
  return y;
}

inline std::vector<std::string> words_up_to(LetterSet gamma, std::size_t maxlen, std::size_t minlen = 0) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  auto letters = gamma.letters();
  for (std::size_t n = 0; n <= maxlen; ++n) {
    if (n >= minlen) out.insert(out.end(), layer.begin(), layer.end());
    if (n == maxlen) break;
    std::vector<std::string> next;
    next.reserve(layer.size() * letters.size());
    for (const auto& s : layer)
      for (Letter c : letters) next.push_back(s + c);
    layer = std::move(next);
  }
  return out;
}

}  // namespace detail

/// Bounded search for a word with two factorizations: finite words up to
/// `maxlen`, lassos with |u|, |v| <= maxlen.
inline Verdict check_unambiguous_bounded(const Monomial& m, LetterSet gamma, std::size_t maxlen) {
  const std::size_t k = m.degree();
  if (k == 0) return {std::nullopt, maxlen};
  if (k + 1 > detail::Counts{}.size()) throw std::invalid_argument("monomial degree too large for bounded check");
  Verdict v{std::nullopt, maxlen};

  LetterSet markers = m.marker_letters();
  if (markers.subset_of(m.set(1) & m.tail)) {
    std::string s;
    for (const auto& b : m.blocks) s.push_back(b.letter);
    v.witness = Word::finite(s + s);
    return v;
  }

  detail::Counts e0{};
  e0[0] = 1;
  auto words = detail::words_up_to(gamma, maxlen);
  for (const auto& s : words) {
    detail::Counts x = e0;
    for (char c : s) x = detail::count_step(m, x, c);
    if (x[k] >= 2) {
      v.witness = Word::finite(s);
      return v;
    }
  }

  // lassos: distinct configurations after u, distinct capped transfer matrices of v
  std::map<detail::Counts, std::string> after_u;
  for (const auto& s : words) {
    detail::Counts x = e0;
    for (char c : s) x = detail::count_step(m, x, c);
    after_u.emplace(x, s);
  }
  using Matrix = std::array<detail::Counts, 8>;
  std::map<Matrix, std::string> periods;
  for (const auto& s : words) {
    if (s.empty() || !detail::letters_of(s).subset_of(m.tail)) continue;
    Matrix mat{};
    for (std::size_t i = 0; i <= k; ++i) {
      detail::Counts row{};
      row[i] = 1;
      for (char c : s) row = detail::count_step(m, row, c);
      mat[i] = row;
    }
    periods.emplace(mat, s);
  }
  auto apply = [&](const detail::Counts& x, const Matrix& mat) {
    detail::Counts y{};
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j <= k; ++j) y[j] = detail::sat(y[j] + x[i] * mat[i][j]);
    return y;
  };
  std::optional<std::pair<std::size_t, Word>> best;
  for (const auto& [x0, u] : after_u) {
    for (const auto& [mat, per] : periods) {
      std::set<detail::Counts> seen;
      detail::Counts x = x0;
      bool amb = false;
      while (seen.insert(x).second) {
        if (x[k] >= 2) {
          amb = true;
          break;
        }
        x = apply(x, mat);
      }
      if (amb) {
        std::size_t sz = u.size() + per.size();
        if (!best || sz < best->first) best.emplace(sz, Word::lasso(u, per));
      }
    }
  }
  if (best) v.witness = best->second;
  return v;
}

inline bool delta2_condition(const Monomial& m) {
  const std::size_t k = m.degree();
  LetterSet suffix;
  for (std::size_t j = k; j >= 1; --j) {
    suffix = suffix.with(m.letter(j));
    if (suffix.subset_of(m.set(j))) return false;
  }
  return true;
}

/// A_1* a_1 ... A_{j-1}* a_{j-1} A_j^inf
inline Monomial prefix_part(const Monomial& m, std::size_t j) {
  Monomial out;
  out.blocks.assign(m.blocks.begin(), m.blocks.begin() + static_cast<std::ptrdiff_t>(j - 1));
  out.tail = m.set(j);
  return out;
}

/// A_j* a_j ... A_k* a_k A_{k+1}^inf
inline Monomial suffix_part(const Monomial& m, std::size_t j) {
  Monomial out;
  out.blocks.assign(m.blocks.begin() + static_cast<std::ptrdiff_t>(j - 1), m.blocks.end());
  out.tail = m.tail;
  return out;
}

/// Intersect every letter set with `b`.
inline Monomial restrict(Monomial m, LetterSet b) {
  for (auto& blk : m.blocks) blk.set = blk.set & b;
  m.tail = m.tail & b;
  return m;
}

}  // namespace rankers
