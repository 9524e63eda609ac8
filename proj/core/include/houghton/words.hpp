#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "houghton/element.hpp"

namespace houghton {

/// A generator letter: g(i,j) or, in H_2 only, the transposition tau.
/// The inverse of g(i,j) is g(j,i); tau is an involution.
struct Letter {
  enum class Kind : std::uint8_t { kG, kTau };

  Kind kind = Kind::kG;
  int from = 0;
  int to = 1;

  static Letter g(int i, int j) { return {Kind::kG, i, j}; }
  static Letter tau() { return {Kind::kTau, 0, 1}; }

  Letter inverse() const { return kind == Kind::kTau ? *this : g(to, from); }
  bool is_tau() const { return kind == Kind::kTau; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Validates a letter against a ray count; throws SameRay, RayOutOfRange or
/// TauOutsideH2.
void check_letter(int n, Letter letter);
Element letter_element(int n, Letter letter);

struct Word {
  int n = 3;
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
};

Word concat(const Word& u, const Word& v);
Word power(int n, Letter letter, std::int64_t exponent);

/// Left-to-right product of the letters.
Element evaluate(const Word& w);
Word invert_word(const Word& w);
/// Cancels adjacent inverse pairs (tau tau included) until none remain.
Word free_reduce(const Word& w);

/**
 * Grammar: whitespace separated tokens `g(i,j)`, `g(i,j)^k` with k a nonzero
 * integer (a negative k repeats the inverse letter), and `t` for tau.
 * Throws Error(kParse) with the byte offset of the offending token.
 */
Word parse_word(std::string_view text, int n);
/// Canonical text: runs of an identical g letter are written g(i,j)^k.
std::string format_word(const Word& w);

enum class GeneratingSetKind { kGij, kGi, kH2 };

struct GeneratingSet {
  GeneratingSetKind kind = GeneratingSetKind::kGij;
  int n = 3;
  std::vector<Letter> letters;  // closed under inverses

  static GeneratingSet make(GeneratingSetKind kind, int n);
  std::string_view name() const;
};

GeneratingSetKind parse_generating_set_kind(std::string_view name);

/// Deterministic per seed; complexity of the result never exceeds budget.
Element random_element(int n, std::int64_t budget, std::uint64_t seed);
/// Random word of the given length over the generating set.
Word random_word(const GeneratingSet& gens, std::size_t length, std::uint64_t seed);

}  // namespace houghton
