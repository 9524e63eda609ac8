#pragma once

// Reference semantics for tests: points are pushed through words one letter
// at a time using the defining formulas of the generators. Nothing here uses
// Element::compose, so agreement with it is an independent check.

#include <algorithm>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/words.hpp"

namespace oracle {

using houghton::Letter;
using houghton::Position;
using houghton::RayPoint;
using houghton::Word;

inline RayPoint apply_g(int i, int j, RayPoint x) {
  if (x.ray == i) return x.pos > 1 ? RayPoint{i, x.pos - 1} : RayPoint{j, 1};
  if (x.ray == j) return {j, x.pos + 1};
  return x;
}

inline RayPoint apply_letter(Letter l, RayPoint x) {
  if (l.is_tau()) {
    if (x == RayPoint{0, 1}) return {1, 1};
    if (x == RayPoint{1, 1}) return {0, 1};
    return x;
  }
  return apply_g(l.from, l.to, x);
}

inline RayPoint apply_word(const Word& w, RayPoint x) {
  for (Letter l : w.letters) x = apply_letter(l, x);
  return x;
}

/// Eventual translation of the word's permutation on each ray.
inline std::vector<Position> word_translations(const Word& w) {
  std::vector<Position> t(static_cast<std::size_t>(w.n), 0);
  for (Letter l : w.letters) {
    if (l.is_tau()) continue;
    --t[static_cast<std::size_t>(l.from)];
    ++t[static_cast<std::size_t>(l.to)];
  }
  return t;
}

inline Position window_of(const houghton::Element& e) {
  Position m = 0;
  for (const auto& x : e.exceptions()) m = std::max({m, x.from.pos, x.to.pos});
  for (Position t : e.translations()) m = std::max(m, t < 0 ? -t : t);
  return m;
}

/// e equals the permutation of w: same translations, and the same images on
/// a window past which both are plain translations.
inline bool equals_word(const houghton::Element& e, const Word& w) {
  if (e.rays() != w.n) return false;
  const auto t = word_translations(w);
  if (!std::equal(t.begin(), t.end(), e.translations().begin(), e.translations().end())) return false;
  const Position window = window_of(e) + 2 * static_cast<Position>(w.size()) + 2;
  for (int r = 0; r < w.n; ++r) {
    for (Position k = 1; k <= window; ++k) {
      if (e.apply({r, k}) != apply_word(w, {r, k})) return false;
    }
  }
  return true;
}

/// Images of the points with pos <= depth, ray by ray, plus translations: a
/// full description of a word's permutation when depth exceeds twice its
/// length.
inline std::vector<Position> signature(const Word& w, Position depth) {
  std::vector<Position> sig = word_translations(w);
  for (int r = 0; r < w.n; ++r) {
    for (Position k = 1; k <= depth; ++k) {
      const RayPoint y = apply_word(w, {r, k});
      sig.push_back(y.ray);
      sig.push_back(y.pos);
    }
  }
  return sig;
}

}  // namespace oracle
