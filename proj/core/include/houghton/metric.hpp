#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/words.hpp"

namespace houghton {

/// P(e); the word length with respect to the g_{ij} set is at least this.
Position lower_bound(const Element& e);

/// P(e * g) - P(e) for a g letter, computed by multiplying out.
int generator_complexity_step(const Element& e, Letter letter);
/// The same quantity predicted from e alone by the three-case rule on the
/// deepest exceptional points of rays i and j.
int predicted_complexity_step(const Element& e, Letter letter);

struct WordAndElement {
  Word word;
  Element element;
};

/// Appends g(i,j) with t_i > 0 > t_j (smallest such i, then j) until the
/// product is finitary. The word has length T(e).
WordAndElement reduce_translations(const Element& e);

/// For finitary e, a word mu with |mu| <= 4 P(e) such that e*mu maps every
/// ray to itself.
WordAndElement push_to_initial_segments(const Element& e);

/// For e that permutes an initial segment of each ray, a word w with
/// e*w = identity, built by a merge sort through two buffer rays.
Word sort_initial_segments(const Element& e);

/// Upper bound on the sorting word for a segment of the given size,
/// 2 m log2 m (0 for m <= 1).
double sort_length_bound(std::int64_t segment);

/// Cost of sorting one stack of labels in place (top first) into ascending
/// order, using the same planner as sort_initial_segments.
std::int64_t sort_plan_cost(const std::vector<std::int64_t>& labels);

struct SynthesisReport {
  Word word;
  Position complexity = 0;
  std::int64_t bound = 0;
  std::size_t rho_length = 0;
  std::size_t mu_length = 0;
  std::size_t sort_length = 0;
};

/// ceil(7 P log2 P) for P >= 2, P otherwise.
std::int64_t synthesis_bound(Position complexity);

/// A word over the g_{ij} letters evaluating to e with length at most
/// synthesis_bound(P(e)).
SynthesisReport synthesize_word(const Element& e);

inline constexpr std::size_t kDefaultElementCap = 5'000'000;

/**
 * Exact word lengths of every element within a radius, by breadth first
 * search in the Cayley graph. Entries are stored in discovery order, which is
 * deterministic: the frontier is expanded in order, letters in the order of
 * the generating set.
 */
class BallTable {
 public:
  struct Entry {
    Element element;
    int length;
    std::int64_t parent;  // index of the predecessor, -1 for the identity
    int letter;           // index into generators().letters
  };

  static BallTable build(const GeneratingSet& gens, int radius,
                         std::size_t element_cap = kDefaultElementCap);

  const GeneratingSet& generators() const { return gens_; }
  int radius() const { return radius_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::optional<int> length(const Element& e) const;
  /// A geodesic word for an element in the ball.
  std::optional<Word> geodesic(const Element& e) const;
  /// counts[r] = number of elements at distance exactly r.
  std::vector<std::size_t> sphere_sizes() const;

  /// `length,count` rows.
  std::string growth_csv() const;
  /// `element,length` rows with the element record quoted.
  std::string dump_csv() const;

 private:
  GeneratingSet gens_;
  int radius_ = 0;
  std::vector<Entry> entries_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
};

BallTable bfs_ball(int n, const GeneratingSet& gens, int radius,
                   std::size_t element_cap = kDefaultElementCap);

/// Exact word length by bidirectional search, exploring at most `radius_cap`
/// levels on each side. Returns nullopt if the length exceeds 2*radius_cap.
std::optional<int> exact_length(const Element& e, const GeneratingSet& gens, int radius_cap,
                                std::size_t element_cap = kDefaultElementCap);

/// True iff the positive words of length <= max_length in g(0,1), g(0,2)
/// evaluate to pairwise distinct elements (2^{L+1} - 2 of them).
struct FreeSemigroupResult {
  bool free = false;
  std::size_t words = 0;
  std::size_t distinct = 0;
};
FreeSemigroupResult free_semigroup_check(int max_length);

/// Census of the growth family: a transposition of (0,k) with (0,1)
/// composed with every permutation of the other nk-2 points of the depth-k
/// grid.
struct ComplexityFamilyCensus {
  std::size_t members = 0;
  std::size_t distinct = 0;
  std::size_t exact_complexity = 0;  // members with P == k
  Position min_complexity = 0;
  Position max_complexity = 0;
};
ComplexityFamilyCensus complexity_family_census(int n, int k);

/// Builds every element of H_n with complexity exactly k, checks each one and
/// their distinctness, and returns how many there are.
std::size_t complexity_class_witnesses(int n, int k, std::size_t cap = 1'000'000);

}  // namespace houghton
