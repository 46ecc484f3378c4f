#pragma once

// Textual forms of every AST. print(parse(s)) is not required to equal s,
// but parse(print(x)) == x.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankers/fo.hpp"
#include "rankers/itl.hpp"
#include "rankers/monomial.hpp"
#include "rankers/tl.hpp"

namespace rankers {

namespace syntax {

struct Token {
  enum Kind { word, sym, end } kind;
  std::string text;
  std::size_t offset;
};

inline std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':'; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_word(c)) {
      std::size_t j = i;
      while (j < s.size() && is_word(s[j])) ++j;
      out.push_back({Token::word, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if ((c == '<' || c == '>' || c == '!') && i + 1 < s.size() && s[i + 1] == '=') {
      out.push_back({Token::sym, std::string(s.substr(i, 2)), i});
      i += 2;
      continue;
    }
    if (std::string_view("()!&|.<>=[]*").find(c) != std::string_view::npos) {
      out.push_back({Token::sym, std::string(1, c), i});
      ++i;
      continue;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

class Cursor {
public:
  explicit Cursor(std::string_view s) : toks_(lex(s)) {}
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_sym(std::string_view s) const { return peek().kind == Token::sym && peek().text == s; }
  bool at_end() const { return peek().kind == Token::end; }
  bool accept(std::string_view s) {
    if (!at_sym(s)) return false;
    ++pos_;
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  void expect_end() {
    if (!at_end()) fail("trailing input");
  }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw parse_error(what + (t.kind == Token::end ? " at end of input" : ", found '" + t.text + "'"), t.offset);
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

/// Decoded modality token: Xa XLa Ya YLa Fa FLa La LLa Gn:a GLn:a Hn:a HLn:a.
struct ModToken {
  char head;  // X Y F L G H
  Flavor flavor;
  Letter letter;
};

inline std::optional<ModToken> decode(const std::string& t) {
  if (t.size() < 2) return std::nullopt;
  char h = t[0];
  if (std::string_view("XYFLGH").find(h) == std::string_view::npos) return std::nullopt;
  std::size_t i = 1;
  Flavor f = Flavor::eager;
  if (t[i] == 'L' && t.size() > 2) {
    f = Flavor::lazy;
    ++i;
  }
  if (h == 'G' || h == 'H') {
    if (t.compare(i, 2, "n:") != 0) return std::nullopt;
    i += 2;
  }
  if (i + 1 != t.size() || !is_letter(t[i])) return std::nullopt;
  return ModToken{h, f, t[i]};
}

inline std::string flavor_mark(Flavor f) { return f == Flavor::lazy ? "L" : ""; }

}  // namespace syntax

// ---- rankers -------------------------------------------------------------

inline std::string to_string(const Step& s) {
  return std::string(s.direction == Direction::next ? "X" : "Y") + syntax::flavor_mark(s.flavor) + s.letter;
}
inline std::string to_string(const AtomicModality& m) {
  return std::string(m.kind == AtomicKind::globally_no ? "G" : "H") + syntax::flavor_mark(m.flavor) + "n:" +
         m.letter;
}
inline std::string to_string(const Ranker& r) {
  if (r.empty()) return "eps";
  std::string out;
  for (const Step& s : r.steps()) {
    if (!out.empty()) out += ' ';
    out += to_string(s);
  }
  if (r.tail()) {
    if (!out.empty()) out += ' ';
    out += to_string(*r.tail());
  }
  return out;
}

inline Ranker parse_ranker(std::string_view text) {
  syntax::Cursor c(text);
  std::vector<Step> steps;
  std::optional<AtomicModality> tail;
  if (c.peek().kind == syntax::Token::word && c.peek().text == "eps") {
    c.take();
    c.expect_end();
    return Ranker();
  }
  while (!c.at_end()) {
    const auto& t = c.peek();
    auto m = t.kind == syntax::Token::word ? syntax::decode(t.text) : std::nullopt;
    if (!m || m->head == 'F' || m->head == 'L') c.fail("expected ranker modality");
    if (tail) c.fail("atomic modality must come last");
    if (m->head == 'X') steps.push_back(X(m->letter, m->flavor));
    else if (m->head == 'Y') steps.push_back(Y(m->letter, m->flavor));
    else if (m->head == 'G') tail = G(m->letter, m->flavor);
    else tail = H(m->letter, m->flavor);
    std::size_t off = t.offset;
    c.take();
    try {
      Ranker check(steps, tail);
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what(), off);
    }
  }
  return Ranker(std::move(steps), tail);
}

// ---- TL --------------------------------------------------------------------

namespace tl {

namespace detail {
inline int prec(const Formula& f) {
  switch (f.op()) {
    case Op::or_: return 1;
    case Op::and_: return 2;
    default: return 3;
  }
}
inline void print(const Formula& f, int need, std::string& out) {
  const Node& n = f.node();
  const bool paren = prec(f) < need;
  if (paren) out += '(';
  switch (n.op) {
    case Op::top: out += 'T'; break;
    case Op::bottom: out += 'F'; break;
    case Op::not_:
      out += '!';
      print(n.lhs, 3, out);
      break;
    case Op::and_:
    case Op::or_:
      print(n.lhs, prec(f), out);
      out += n.op == Op::and_ ? " & " : " | ";
      print(n.rhs, prec(f) + 1, out);
      break;
    case Op::mod:
      out += rankers::to_string(n.step);
      out += '(';
      print(n.lhs, 0, out);
      out += ')';
      break;
    case Op::atom: out += rankers::to_string(n.atom); break;
  }
  if (paren) out += ')';
}

inline Formula parse_or(syntax::Cursor& c);
inline Formula parse_unary(syntax::Cursor& c) {
  if (c.accept("!")) return not_(parse_unary(c));
  if (c.accept("(")) {
    Formula f = parse_or(c);
    c.expect(")");
    return f;
  }
  const auto& t = c.peek();
  if (t.kind != syntax::Token::word) c.fail("expected formula");
  if (t.text == "T") {
    c.take();
    return top();
  }
  if (t.text == "F") {
    c.take();
    return bottom();
  }
  auto m = syntax::decode(t.text);
  if (!m || m->head == 'F' || m->head == 'L') c.fail("expected TL formula");
  c.take();
  if (m->head == 'G') return atom(G(m->letter, m->flavor));
  if (m->head == 'H') return atom(H(m->letter, m->flavor));
  c.expect("(");
  Formula inner = parse_or(c);
  c.expect(")");
  return mod(m->head == 'X' ? X(m->letter, m->flavor) : Y(m->letter, m->flavor), inner);
}
inline Formula parse_and(syntax::Cursor& c) {
  Formula f = parse_unary(c);
  while (c.accept("&")) f = and_(f, parse_unary(c));
  return f;
}
inline Formula parse_or(syntax::Cursor& c) {
  Formula f = parse_and(c);
  while (c.accept("|")) f = or_(f, parse_and(c));
  return f;
}
}  // namespace detail

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print(f, 0, out);
  return out;
}

inline Formula parse(std::string_view text) {
  syntax::Cursor c(text);
  Formula f = detail::parse_or(c);
  c.expect_end();
  return f;
}

}  // namespace tl

// ---- ITL -------------------------------------------------------------------

namespace itl {

namespace detail {
inline int prec(const Formula& f) {
  switch (f.op()) {
    case Op::or_: return 1;
    case Op::and_: return 2;
    case Op::first:
    case Op::last: return 3;
    default: return 4;
  }
}
inline void print(const Formula& f, int need, std::string& out) {
  const Node& n = f.node();
  const bool paren = prec(f) < need;
  if (paren) out += '(';
  switch (n.op) {
    case Op::top: out += 'T'; break;
    case Op::bottom: out += 'F'; break;
    case Op::not_:
      out += '!';
      print(n.lhs, 4, out);
      break;
    case Op::and_:
    case Op::or_:
      print(n.lhs, prec(f), out);
      out += n.op == Op::and_ ? " & " : " | ";
      print(n.rhs, prec(f) + 1, out);
      break;
    case Op::first:
    case Op::last:
      print(n.lhs, 4, out);
      out += ' ';
      out += n.op == Op::first ? 'F' : 'L';
      out += syntax::flavor_mark(n.flavor);
      out += n.letter;
      out += ' ';
      print(n.rhs, 4, out);
      break;
    case Op::atom: out += rankers::to_string(n.atom); break;
  }
  if (paren) out += ')';
}

inline Formula parse_or(syntax::Cursor& c);
inline Formula parse_unary(syntax::Cursor& c) {
  if (c.accept("!")) return not_(parse_unary(c));
  if (c.accept("(")) {
    Formula f = parse_or(c);
    c.expect(")");
    return f;
  }
  const auto& t = c.peek();
  if (t.kind != syntax::Token::word) c.fail("expected formula");
  if (t.text == "T") {
    c.take();
    return top();
  }
  if (t.text == "F") {
    c.take();
    return bottom();
  }
  auto m = syntax::decode(t.text);
  if (!m || (m->head != 'G' && m->head != 'H')) c.fail("expected ITL formula");
  c.take();
  return atom(m->head == 'G' ? G(m->letter, m->flavor) : H(m->letter, m->flavor));
}
inline Formula parse_chop(syntax::Cursor& c) {
  Formula f = parse_unary(c);
  while (c.peek().kind == syntax::Token::word) {
    auto m = syntax::decode(c.peek().text);
    if (!m || (m->head != 'F' && m->head != 'L')) c.fail("expected F or L modality");
    c.take();
    Formula g = parse_unary(c);
    f = m->head == 'F' ? first(m->letter, f, g, m->flavor) : last(m->letter, f, g, m->flavor);
  }
  return f;
}
inline Formula parse_and(syntax::Cursor& c) {
  Formula f = parse_chop(c);
  while (c.accept("&")) f = and_(f, parse_chop(c));
  return f;
}
inline Formula parse_or(syntax::Cursor& c) {
  Formula f = parse_and(c);
  while (c.accept("|")) f = or_(f, parse_and(c));
  return f;
}
}  // namespace detail

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print(f, 0, out);
  return out;
}

inline Formula parse(std::string_view text) {
  syntax::Cursor c(text);
  Formula f = detail::parse_or(c);
  c.expect_end();
  return f;
}

}  // namespace itl

// ---- monomials ---------------------------------------------------------------

inline std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& b : m.blocks) out += "[" + b.set.to_string() + "]* " + b.letter + " ";
  if (!m.blocks.empty()) out += ". ";
  out += "[" + m.tail.to_string() + "]";
  return out;
}

inline Monomial parse_monomial(std::string_view text) {
  syntax::Cursor c(text);
  Monomial m;
  auto read_set = [&]() {
    c.expect("[");
    LetterSet s;
    if (c.peek().kind == syntax::Token::word) {
      const auto& t = c.peek();
      for (std::size_t i = 0; i < t.text.size(); ++i) {
        if (!is_letter(t.text[i])) throw parse_error("expected letters in set", t.offset + i);
        s = s.with(t.text[i]);
      }
      c.take();
    }
    c.expect("]");
    return s;
  };
  bool dotted = false;
  while (!c.at_end()) {
    if (c.accept(".")) {
      dotted = true;
      m.tail = read_set();
      break;
    }
    LetterSet s = read_set();
    if (!c.accept("*")) {
      m.tail = s;
      dotted = true;
      break;
    }
    const auto& t = c.peek();
    if (t.kind != syntax::Token::word || t.text.size() != 1 || !is_letter(t.text[0])) c.fail("expected marker letter");
    m.blocks.push_back({s, t.text[0]});
    c.take();
  }
  if (!dotted) c.fail("expected tail set");
  c.expect_end();
  return m;
}

// ---- FO ----------------------------------------------------------------------

namespace fo {

namespace detail {
inline int prec(const Formula& f) {
  switch (f.op()) {
    case Op::exists:
    case Op::forall: return 0;
    case Op::or_: return 1;
    case Op::and_: return 2;
    default: return 3;
  }
}
inline void print(const Formula& f, int need, std::string& out) {
  const Node& n = f.node();
  const bool paren = prec(f) < need;
  if (paren) out += '(';
  switch (n.op) {
    case Op::true_: out += 'T'; break;
    case Op::false_: out += 'F'; break;
    case Op::label: out += "lab(" + n.x + ") = " + n.letter; break;
    case Op::not_label: out += "lab(" + n.x + ") != " + n.letter; break;
    case Op::less: out += n.x + " < " + n.y; break;
    case Op::leq: out += n.x + " <= " + n.y; break;
    case Op::not_:
      out += '!';
      print(n.lhs, 3, out);
      break;
    case Op::and_:
    case Op::or_:
      print(n.lhs, prec(f), out);
      out += n.op == Op::and_ ? " & " : " | ";
      print(n.rhs, prec(f) + 1, out);
      break;
    case Op::exists:
    case Op::forall:
      out += n.op == Op::exists ? "E " : "A ";
      out += n.x + ". ";
      print(n.lhs, 0, out);
      break;
  }
  if (paren) out += ')';
}

inline bool is_var(const syntax::Token& t) {
  if (t.kind != syntax::Token::word || t.text == "E" || t.text == "A" || t.text == "T" || t.text == "F" ||
      t.text == "lab")
    return false;
  if (!std::islower(static_cast<unsigned char>(t.text[0]))) return false;
  for (char ch : t.text)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

inline Formula parse_formula(syntax::Cursor& c);
inline Formula parse_unary(syntax::Cursor& c) {
  if (c.accept("!")) return not_(parse_unary(c));
  if (c.accept("(")) {
    Formula f = parse_formula(c);
    c.expect(")");
    return f;
  }
  const auto& t = c.peek();
  if (t.kind != syntax::Token::word) c.fail("expected formula");
  if (t.text == "E" || t.text == "A") return parse_formula(c);
  if (t.text == "T") {
    c.take();
    return true_();
  }
  if (t.text == "F") {
    c.take();
    return false_();
  }
  if (t.text == "lab") {
    c.take();
    c.expect("(");
    if (!is_var(c.peek())) c.fail("expected variable");
    std::string v = c.take().text;
    c.expect(")");
    bool neg = false;
    if (c.accept("!=")) neg = true;
    else c.expect("=");
    const auto& l = c.peek();
    if (l.kind != syntax::Token::word || l.text.size() != 1 || !is_letter(l.text[0])) c.fail("expected letter");
    Letter a = c.take().text[0];
    return neg ? not_label(v, a) : label(v, a);
  }
  if (!is_var(t)) c.fail("expected variable");
  std::string x = c.take().text;
  std::string op = c.peek().text;
  if (c.peek().kind != syntax::Token::sym || (op != "<" && op != "<=" && op != ">" && op != ">="))
    c.fail("expected comparison");
  c.take();
  if (!is_var(c.peek())) c.fail("expected variable");
  std::string y = c.take().text;
  if (op == "<") return less(x, y);
  if (op == "<=") return leq(x, y);
  if (op == ">") return less(y, x);
  return leq(y, x);
}
inline Formula parse_and(syntax::Cursor& c) {
  Formula f = parse_unary(c);
  while (c.accept("&")) f = and_(f, parse_unary(c));
  return f;
}
inline Formula parse_or(syntax::Cursor& c) {
  Formula f = parse_and(c);
  while (c.accept("|")) f = or_(f, parse_and(c));
  return f;
}
inline Formula parse_formula(syntax::Cursor& c) {
  const auto& t = c.peek();
  if (t.kind == syntax::Token::word && (t.text == "E" || t.text == "A")) {
    bool ex = t.text == "E";
    c.take();
    if (!is_var(c.peek())) c.fail("expected variable");
    std::string v = c.take().text;
    c.expect(".");
    Formula body = parse_formula(c);
    return ex ? exists(v, body) : forall(v, body);
  }
  return parse_or(c);
}
}  // namespace detail

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print(f, 0, out);
  return out;
}

inline Formula parse(std::string_view text) {
  syntax::Cursor c(text);
  Formula f = detail::parse_formula(c);
  c.expect_end();
  return f;
}

}  // namespace fo

inline Word parse_word(std::string_view text) { return Word::parse(text); }
inline std::string to_string(const Word& w) { return w.to_string(); }

}  // namespace rankers
