#pragma once

// Finite words and ultimately periodic words u.v^omega, positions in
// {0} + N + {inf}, and the two orders on positions.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rankers {

/// Letters are lowercase ASCII characters `a`..`z`.
using Letter = char;

constexpr int kMaxLetters = 26;

constexpr bool is_letter(char c) { return c >= 'a' && c <= 'z'; }
constexpr int letter_index(Letter c) { return c - 'a'; }

/// Raised for any malformed textual input; `offset` points into the source.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// A subset of the 26 letters as a bitmask.
class LetterSet {
public:
  constexpr LetterSet() = default;
  constexpr explicit LetterSet(std::uint32_t bits) : bits_(bits) {}

  static LetterSet of(std::string_view letters) {
    LetterSet s;
    for (char c : letters) {
      if (!is_letter(c))
        throw std::invalid_argument(std::string("not a letter: '") + c + "'");
      s = s.with(c);
    }
    return s;
  }
  static constexpr LetterSet single(Letter a) {
    return LetterSet(std::uint32_t{1} << letter_index(a));
  }
  /// The first `n` letters `a`, `b`, ...
  static constexpr LetterSet first(int n) {
    return LetterSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(Letter a) const {
    return is_letter(a) && ((bits_ >> letter_index(a)) & 1U) != 0;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(LetterSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr LetterSet with(Letter a) const { return *this | single(a); }
  constexpr LetterSet without(Letter a) const { return LetterSet(bits_ & ~single(a).bits_); }

  friend constexpr LetterSet operator|(LetterSet x, LetterSet y) { return LetterSet(x.bits_ | y.bits_); }
  friend constexpr LetterSet operator&(LetterSet x, LetterSet y) { return LetterSet(x.bits_ & y.bits_); }
  friend constexpr LetterSet operator-(LetterSet x, LetterSet y) { return LetterSet(x.bits_ & ~y.bits_); }
  friend constexpr bool operator==(LetterSet, LetterSet) = default;
  friend constexpr auto operator<=>(LetterSet x, LetterSet y) { return x.bits_ <=> y.bits_; }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    for (int i = 0; i < kMaxLetters; ++i)
      if ((bits_ >> i) & 1U) out.push_back(static_cast<Letter>('a' + i));
    return out;
  }
  std::string to_string() const {
    std::string s;
    for (Letter c : letters()) s.push_back(c);
    return s;
  }

private:
  std::uint32_t bits_ = 0;
};

/// A position: the anchor 0 in front of the word, a letter position n >= 1,
/// or the infinite position.
class Position {
public:
  enum class Kind : std::uint8_t { start, fin, inf };

  static constexpr Position start() { return Position(Kind::start, 0); }
  static constexpr Position fin(std::size_t n) { return Position(Kind::fin, n); }
  static constexpr Position inf() { return Position(Kind::inf, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_start() const { return kind_ == Kind::start; }
  constexpr bool is_fin() const { return kind_ == Kind::fin; }
  constexpr bool is_inf() const { return kind_ == Kind::inf; }
  /// 0 for the start anchor, n for Fin(n). Meaningless for inf.
  constexpr std::size_t index() const { return n_; }

  friend constexpr bool operator==(Position, Position) = default;

  std::string to_string() const {
    switch (kind_) {
      case Kind::start: return "0";
      case Kind::fin: return std::to_string(n_);
      case Kind::inf: return "inf";
    }
    return "?";
  }

private:
  constexpr Position(Kind k, std::size_t n) : kind_(k), n_(n) {}
  Kind kind_;
  std::size_t n_;
};

using MaybePosition = std::optional<Position>;

/// Ordinary strict order used by ranker steps: y < inf for every finite y,
/// but not inf < inf.
constexpr bool lt_rank(Position p, Position q) {
  if (p.is_inf()) return false;
  if (q.is_inf()) return true;
  return p.index() < q.index();
}

/// Interval order: as `lt_rank`, extended by inf < inf.
constexpr bool lt_itl(Position p, Position q) {
  if (p.is_inf() && q.is_inf()) return true;
  return lt_rank(p, q);
}

/// A finite word or a lasso u.v^omega with |v| >= 1.
///
/// Occurrence queries run in constant time off tables built at construction;
/// lasso tables cover u.v.v and larger positions are folded back by period.
class Word {
public:
  Word() : Word(std::string(), std::string(), false) {}

  static Word finite(std::string letters) {
    return Word(std::move(letters), std::string(), false);
  }
  static Word lasso(std::string prefix, std::string period) {
    if (period.empty()) throw std::invalid_argument("lasso period must be non-empty");
    return Word(std::move(prefix), std::move(period), true);
  }

  bool is_finite() const { return !lasso_; }
  bool is_lasso() const { return lasso_; }
  const std::string& prefix() const { return prefix_; }
  const std::string& period() const { return period_; }
  /// Length of a finite word; nullopt for lassos.
  std::optional<std::size_t> length() const {
    if (lasso_) return std::nullopt;
    return prefix_.size();
  }
  /// Number of letters in the representation (|u| for finite, |u|+|v| for lassos).
  std::size_t representation_size() const { return prefix_.size() + period_.size(); }

  LetterSet alphabet() const { return alph_; }
  LetterSet imaginary() const { return im_; }

  Letter letter_at(Position p) const {
    if (!p.is_fin()) throw std::out_of_range("no letter at anchor position");
    std::size_t n = p.index();
    if (n == 0) throw std::out_of_range("no letter at anchor position");
    if (n <= prefix_.size()) return prefix_[n - 1];
    if (!lasso_)
      throw std::out_of_range("position " + std::to_string(n) + " beyond word of length " +
                              std::to_string(prefix_.size()));
    return period_[(n - prefix_.size() - 1) % period_.size()];
  }

  /// Least a-position strictly greater than `after` (0 = start anchor).
  std::optional<std::size_t> next_occurrence(Letter a, std::size_t after) const {
    if (!is_letter(a)) return std::nullopt;
    const std::size_t u = prefix_.size(), v = period_.size();
    std::size_t shift = 0;
    if (lasso_ && after >= u + v) {
      std::size_t folded = u + (after - u) % v;
      shift = after - folded;
      after = folded;
    }
    if (after > span_) return std::nullopt;
    std::uint32_t r = tables_->next[after * kMaxLetters + letter_index(a)];
    if (r == 0) return std::nullopt;
    return r + shift;
  }

  /// Greatest a-position strictly smaller than `before`.
  std::optional<std::size_t> prev_occurrence(Letter a, std::size_t before) const {
    if (!is_letter(a) || before <= 1) return std::nullopt;
    const std::size_t u = prefix_.size(), v = period_.size();
    std::size_t shift = 0;
    if (before > span_ + 1) {
      if (!lasso_) {
        before = span_ + 1;
      } else {
        std::size_t folded = u + v + ((before - u - v - 1) % v) + 1;
        shift = before - folded;
        before = folded;
      }
    }
    std::uint32_t r = tables_->prev[before * kMaxLetters + letter_index(a)];
    if (r == 0) return std::nullopt;
    if (r > u) return r + shift;  // periodic region: moves with the fold
    return r;
  }

  /// Last a-position if `a` occurs finitely often and at least once.
  std::optional<std::size_t> last_occurrence(Letter a) const {
    if (im_.contains(a)) return std::nullopt;
    if (!is_letter(a)) return std::nullopt;
    std::uint32_t r = tables_->prev[(prefix_.size() + 1) * kMaxLetters + letter_index(a)];
    if (r == 0) return std::nullopt;
    return r;
  }

  /// Shortest prefix, primitive period. Unique per word.
  Word canonical() const {
    if (!lasso_) return *this;
    std::string u = prefix_, v = period_;
    for (std::size_t d = 1; d <= v.size(); ++d) {
      if (v.size() % d != 0) continue;
      bool ok = true;
      for (std::size_t i = d; i < v.size() && ok; ++i) ok = v[i] == v[i - d];
      if (ok) {
        v.resize(d);
        break;
      }
    }
    while (!u.empty() && u.back() == v.back()) {
      u.pop_back();
      std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
    }
    return Word(std::move(u), std::move(v), true);
  }

  /// Semantic equality (same infinite or finite word).
  friend bool operator==(const Word& x, const Word& y) {
    if (x.lasso_ != y.lasso_) return false;
    if (!x.lasso_) return x.prefix_ == y.prefix_;
    Word cx = x.canonical(), cy = y.canonical();
    return cx.prefix_ == cy.prefix_ && cx.period_ == cy.period_;
  }

  /// `abc`, `ab|ca` for ab(ca)^omega, `_` for the empty word.
  std::string to_string() const {
    if (!lasso_) return prefix_.empty() ? "_" : prefix_;
    return prefix_ + "|" + period_;
  }

  static Word parse(std::string_view text) {
    auto check = [&](std::string_view part, std::size_t base) {
      for (std::size_t i = 0; i < part.size(); ++i)
        if (!is_letter(part[i]))
          throw parse_error(std::string("unexpected character '") + part[i] + "' in word", base + i);
    };
    if (text == "_") return finite("");
    auto bar = text.find('|');
    if (bar == std::string_view::npos) {
      check(text, 0);
      return finite(std::string(text));
    }
    std::string_view u = text.substr(0, bar), v = text.substr(bar + 1);
    if (u == "_") u = {};
    check(u, 0);
    check(v, bar + 1);
    if (v.empty()) throw parse_error("lasso period must be non-empty", bar + 1);
    return lasso(std::string(u), std::string(v));
  }

private:
  struct Tables {
    std::vector<std::uint32_t> next;  // [p][c] least c-position > p, 0 if none
    std::vector<std::uint32_t> prev;  // [p][c] greatest c-position < p, 0 if none
  };

  Word(std::string u, std::string v, bool lasso)
      : prefix_(std::move(u)), period_(std::move(v)), lasso_(lasso) {
    for (char c : prefix_)
      if (!is_letter(c)) throw std::invalid_argument(std::string("not a letter: '") + c + "'");
    for (char c : period_) {
      if (!is_letter(c)) throw std::invalid_argument(std::string("not a letter: '") + c + "'");
      im_ = im_.with(c);
    }
    alph_ = im_ | LetterSet::of(prefix_);
    std::string t = prefix_ + period_ + period_;
    span_ = t.size();
    auto tables = std::make_shared<Tables>();
    tables->next.assign((span_ + 1) * kMaxLetters, 0);
    tables->prev.assign((span_ + 2) * kMaxLetters, 0);
    for (std::size_t p = span_; p-- > 0;) {
      for (int c = 0; c < kMaxLetters; ++c)
        tables->next[p * kMaxLetters + c] = tables->next[(p + 1) * kMaxLetters + c];
      tables->next[p * kMaxLetters + letter_index(t[p])] = static_cast<std::uint32_t>(p + 1);
    }
    for (std::size_t p = 2; p <= span_ + 1; ++p) {
      for (int c = 0; c < kMaxLetters; ++c)
        tables->prev[p * kMaxLetters + c] = tables->prev[(p - 1) * kMaxLetters + c];
      tables->prev[p * kMaxLetters + letter_index(t[p - 2])] = static_cast<std::uint32_t>(p - 1);
    }
    tables_ = std::move(tables);
  }

  std::string prefix_;
  std::string period_;
  bool lasso_ = false;
  LetterSet alph_;
  LetterSet im_;
  std::size_t span_ = 0;
  std::shared_ptr<const Tables> tables_;
};

inline Letter letter_at(const Word& w, Position p) { return w.letter_at(p); }
inline LetterSet alphabet_of(const Word& w) { return w.alphabet(); }
/// Letters occurring infinitely often; empty for finite words.
inline LetterSet imaginary_of(const Word& w) { return w.imaginary(); }

/// Positions worth sampling on `w`: 1..|w| for finite words, 1..|u|+2|v| for lassos.
inline std::size_t position_horizon(const Word& w) {
  return w.is_finite() ? w.prefix().size() : w.prefix().size() + 2 * w.period().size();
}

}  // namespace rankers
