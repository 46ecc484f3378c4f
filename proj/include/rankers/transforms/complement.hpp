#pragma once

#include <stdexcept>
#include <vector>

#include "rankers/ranker.hpp"

namespace rankers {

/// Rankers whose languages cover the complement of L(r): for each split
/// r = p.q the first modality of q is flipped and appended to p.
inline std::vector<Ranker> lemma7_xranker_complement(const Ranker& r) {
  if (r.empty()) throw std::invalid_argument("empty ranker");
  if (r.flavor() != Flavor::eager) throw std::invalid_argument("lazy ranker given to an eager construction");
  if (!r.starts_future()) throw std::invalid_argument("not an X-ranker");
  if (r.tail() && r.tail()->kind != AtomicKind::globally_no) throw std::invalid_argument("X-ranker tail must be a G atom");
  std::vector<Ranker> out;
  std::vector<Step> p;
  for (const Step& s : r.steps()) {
    out.emplace_back(p, s.direction == Direction::next ? G(s.letter) : H(s.letter));
    p.push_back(s);
  }
  if (r.tail()) out.emplace_back(Ranker(p).then(X(r.tail()->letter)));
  return out;
}

}  // namespace rankers
