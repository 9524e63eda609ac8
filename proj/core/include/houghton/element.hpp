#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "houghton/error.hpp"

namespace houghton {

using Position = std::int64_t;

// Positions and translations are kept below this bound so that sums of two
// of them never overflow.
inline constexpr Position kMaxPosition = Position{1} << 50;

/// A point (ray, pos) of the ray system; positions start at 1.
struct RayPoint {
  int ray = 0;
  Position pos = 1;

  friend auto operator<=>(const RayPoint&, const RayPoint&) = default;
};

/// One entry of the finite exception map: `from` is sent to `to`.
struct Exception {
  RayPoint from;
  RayPoint to;

  friend auto operator<=>(const Exception&, const Exception&) = default;
};

/**
 * An element of the Houghton group H_n: a permutation of n rays which is a
 * translation by t[i] on ray i outside a finite set of exceptional points.
 *
 * The stored form is canonical: exceptions are sorted by source and contain
 * exactly the points whose image differs from the translate. Two elements are
 * equal iff their canonical forms are identical. Instances are immutable.
 */
class Element {
 public:
  /// Validating constructor. Redundant exceptions are stripped.
  static Element make(int n, std::vector<Position> t, std::vector<Exception> exceptions);
  static Element identity(int n);

  int rays() const noexcept { return n_; }
  std::span<const Position> translations() const noexcept { return t_; }
  Position translation(int ray) const { return t_.at(static_cast<std::size_t>(ray)); }
  std::span<const Exception> exceptions() const noexcept { return exceptions_; }

  RayPoint apply(RayPoint x) const;
  bool is_identity() const noexcept;

  std::size_t hash() const noexcept { return hash_; }

  friend bool operator==(const Element& a, const Element& b) noexcept {
    return a.hash_ == b.hash_ && a.n_ == b.n_ && a.t_ == b.t_ && a.exceptions_ == b.exceptions_;
  }

  friend Element compose(const Element& a, const Element& b);
  friend Element inverse(const Element& e);

  // Builds from data known to describe a bijection (e.g. computed from valid
  // elements). Only canonicalizes; skips the bijectivity proof.
  static Element trusted(int n, std::vector<Position> t, std::vector<Exception> exceptions);

 private:
  Element(int n, std::vector<Position> t, std::vector<Exception> exceptions);

  RayPoint translate(RayPoint x) const;

  int n_ = 0;
  std::vector<Position> t_;
  std::vector<Exception> exceptions_;
  std::size_t hash_ = 0;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};

/// Right-action product: x(ab) = (xa)b.
Element compose(const Element& a, const Element& b);
Element inverse(const Element& e);

inline Element operator*(const Element& a, const Element& b) { return compose(a, b); }

/// g_{ij}: slides the line formed by rays i and j one step from i towards j.
Element generator(int n, int i, int j);
Element transposition(int n, RayPoint a, RayPoint b);

/// (t_0, ..., t_{n-2}), the image in Z^{n-1}.
std::vector<Position> abelianization(const Element& e);

struct ComplexityProfile {
  std::vector<Position> p;
  Position total = 0;        // P
  Position translation = 0;  // T

  ComplexityProfile(std::vector<Position> depths, std::span<const Position> t);
};

ComplexityProfile complexity(const Element& e);

bool is_finitary(const Element& e) noexcept;
/// +1 or -1; throws NotFinitary for elements with a nonzero translation.
int sign(const Element& e);

/// Checks the bijection directly on every point of the window pos <= M with
/// M = 1 + max|t_i| + max exception position.
bool window_bijective(const Element& e);

}  // namespace houghton
