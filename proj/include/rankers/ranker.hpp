#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankers/words.hpp"

namespace rankers {

enum class Flavor : std::uint8_t { eager, lazy };
enum class Direction : std::uint8_t { next, yesterday };
enum class AtomicKind : std::uint8_t { globally_no, historically_no };

struct Step {
  Direction direction = Direction::next;
  Flavor flavor = Flavor::eager;
  Letter letter = 'a';

  bool is_future() const { return direction == Direction::next; }
  friend bool operator==(const Step&, const Step&) = default;
};

struct AtomicModality {
  AtomicKind kind = AtomicKind::globally_no;
  Flavor flavor = Flavor::eager;
  Letter letter = 'a';

  bool is_future() const { return kind == AtomicKind::globally_no; }
  friend bool operator==(const AtomicModality&, const AtomicModality&) = default;
};

inline Step X(Letter a, Flavor f = Flavor::eager) { return {Direction::next, f, a}; }
inline Step Y(Letter a, Flavor f = Flavor::eager) { return {Direction::yesterday, f, a}; }
inline AtomicModality G(Letter a, Flavor f = Flavor::eager) { return {AtomicKind::globally_no, f, a}; }
inline AtomicModality H(Letter a, Flavor f = Flavor::eager) { return {AtomicKind::historically_no, f, a}; }

/// The step whose undefinedness an atom asserts: G -> X, H -> Y.
inline Step defining_step(const AtomicModality& m) {
  return {m.kind == AtomicKind::globally_no ? Direction::next : Direction::yesterday, m.flavor, m.letter};
}

/// A flavor-consistent sequence of steps with an optional trailing atom.
class Ranker {
public:
  Ranker() = default;
  explicit Ranker(std::vector<Step> steps, std::optional<AtomicModality> tail = std::nullopt)
      : steps_(std::move(steps)), tail_(tail) {
    std::optional<Flavor> f;
    auto see = [&](Flavor g) {
      if (f && *f != g) throw std::invalid_argument("ranker mixes eager and lazy modalities");
      f = g;
    };
    for (const Step& s : steps_) {
      if (!is_letter(s.letter)) throw std::invalid_argument("ranker step letter out of range");
      see(s.flavor);
    }
    if (tail_) {
      if (!is_letter(tail_->letter)) throw std::invalid_argument("ranker tail letter out of range");
      see(tail_->flavor);
    }
  }

  const std::vector<Step>& steps() const { return steps_; }
  const std::optional<AtomicModality>& tail() const { return tail_; }
  bool empty() const { return steps_.empty() && !tail_; }
  std::size_t length() const { return steps_.size() + (tail_ ? 1 : 0); }

  /// Flavor of the modalities; eager for the empty ranker.
  Flavor flavor() const {
    if (!steps_.empty()) return steps_.front().flavor;
    if (tail_) return tail_->flavor;
    return Flavor::eager;
  }

  /// Future-ness of the first modality. Requires a non-empty ranker.
  bool starts_future() const {
    if (!steps_.empty()) return steps_.front().is_future();
    if (tail_) return tail_->is_future();
    throw std::invalid_argument("empty ranker has no first modality");
  }

  Ranker then(const Step& s) const {
    if (tail_) throw std::invalid_argument("cannot extend a ranker past its atomic modality");
    auto st = steps_;
    st.push_back(s);
    return Ranker(std::move(st));
  }
  Ranker with_tail(const AtomicModality& m) const {
    if (tail_) throw std::invalid_argument("ranker already has an atomic modality");
    return Ranker(steps_, m);
  }
  /// Same ranker with every modality switched to `f`.
  Ranker reflavored(Flavor f) const {
    auto st = steps_;
    for (auto& s : st) s.flavor = f;
    auto t = tail_;
    if (t) t->flavor = f;
    return Ranker(std::move(st), t);
  }

  friend bool operator==(const Ranker&, const Ranker&) = default;

private:
  std::vector<Step> steps_;
  std::optional<AtomicModality> tail_;
};

/// One step from `p`. Undefined is nullopt.
inline MaybePosition step_eval(const Word& w, const Step& s, Position p) {
  const Letter a = s.letter;
  if (s.direction == Direction::next) {
    if (p.is_inf()) {
      if (s.flavor == Flavor::lazy && w.imaginary().contains(a)) return Position::inf();
      return std::nullopt;
    }
    auto n = w.next_occurrence(a, p.index());
    if (!n) return std::nullopt;
    return Position::fin(*n);
  }
  if (p.is_start()) return std::nullopt;
  if (p.is_inf()) {
    if (w.imaginary().contains(a)) {
      if (s.flavor == Flavor::lazy) return Position::inf();
      return std::nullopt;
    }
    auto n = w.last_occurrence(a);
    if (!n) return std::nullopt;
    return Position::fin(*n);
  }
  auto n = w.prev_occurrence(a, p.index());
  if (!n) return std::nullopt;
  return Position::fin(*n);
}

/// G holds iff the next step is undefined, H iff the yesterday step is.
inline bool atomic_holds(const Word& w, const AtomicModality& m, Position p) {
  return !step_eval(w, defining_step(m), p).has_value();
}

inline MaybePosition eval_from(const Word& w, const Ranker& r, Position p) {
  MaybePosition cur = p;
  for (const Step& s : r.steps()) {
    cur = step_eval(w, s, *cur);
    if (!cur) return std::nullopt;
  }
  if (r.tail() && !atomic_holds(w, *r.tail(), *cur)) return std::nullopt;
  return cur;
}

inline Position anchor_for(bool future) { return future ? Position::start() : Position::inf(); }

inline MaybePosition eval_outside(const Word& w, const Ranker& r) {
  if (r.empty()) throw std::invalid_argument("empty ranker has no anchor");
  return eval_from(w, r, anchor_for(r.starts_future()));
}

inline bool defined_on(const Word& w, const Ranker& r) {
  if (r.empty()) return true;
  return eval_outside(w, r).has_value();
}

inline LetterSet alph_gamma(const Ranker& r) {
  LetterSet s;
  for (const Step& st : r.steps()) s = s.with(st.letter);
  if (r.tail()) s = s.with(r.tail()->letter);
  return s;
}

enum class Rooting : std::uint8_t { x_ranker, y_ranker };

struct Classification {
  Rooting rooting;
  Flavor flavor;
  friend bool operator==(const Classification&, const Classification&) = default;
};

inline Classification classify(const Ranker& r) {
  if (r.empty()) throw std::invalid_argument("cannot classify the empty ranker");
  return {r.starts_future() ? Rooting::x_ranker : Rooting::y_ranker, r.flavor()};
}

}  // namespace rankers
