#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "houghton/metric.hpp"
#include "houghton/morphisms.hpp"
#include "oracle.hpp"

using namespace houghton;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

const GeneratingSet& gij3() {
  static const GeneratingSet gens = GeneratingSet::make(GeneratingSetKind::kGij, 3);
  return gens;
}

const BallTable& ball6() {
  static const BallTable table = bfs_ball(3, gij3(), 6);
  return table;
}

// Sphere sizes by breadth first search over words, deduplicated by pointwise
// signatures from the oracle.
std::vector<std::size_t> oracle_spheres(const GeneratingSet& gens, int radius) {
  const Position depth = 2 * radius + 2;
  std::set<std::vector<Position>> seen;
  std::vector<Word> frontier{Word{gens.n, {}}};
  seen.insert(oracle::signature(frontier[0], depth));
  std::vector<std::size_t> spheres{1};
  for (int r = 1; r <= radius; ++r) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Letter l : gens.letters) {
        Word v = w;
        v.letters.push_back(l);
        if (seen.insert(oracle::signature(v, depth)).second) next.push_back(std::move(v));
      }
    }
    spheres.push_back(next.size());
    frontier = std::move(next);
  }
  return spheres;
}

bool ray_preserving(const Element& e) {
  if (!is_finitary(e)) return false;
  for (const Exception& x : e.exceptions()) {
    if (x.from.ray != x.to.ray) return false;
  }
  return true;
}

Element segment_permutation(int n, int ray, const std::vector<Position>& images) {
  std::vector<Exception> exc;
  for (std::size_t k = 0; k < images.size(); ++k) {
    exc.push_back({{ray, static_cast<Position>(k) + 1}, {ray, images[k]}});
  }
  return Element::make(n, std::vector<Position>(static_cast<std::size_t>(n), 0), exc);
}

}  // namespace

TEST_CASE("lower bound") {
  CHECK(lower_bound(Element::identity(3)) == 0);
  CHECK(lower_bound(generator(3, 2, 0)) == 1);
  for (const auto& entry : ball6().entries()) CHECK(lower_bound(entry.element) <= entry.length);
}

TEST_CASE("complexity step rule") {
  for (Letter l : gij3().letters) {
    CHECK(generator_complexity_step(Element::identity(3), l) == 1);
    CHECK(predicted_complexity_step(Element::identity(3), l) == 1);
    CHECK(generator_complexity_step(letter_element(3, l.inverse()), l) == -1);
  }
  // Exhaustive over the ball of radius 6: the step is in {-1,0,1} and the
  // three-case rule predicts it exactly.
  for (const auto& entry : ball6().entries()) {
    for (Letter l : gij3().letters) {
      const int step = generator_complexity_step(entry.element, l);
      CHECK(std::abs(step) <= 1);
      CHECK(step == predicted_complexity_step(entry.element, l));
    }
  }
  CHECK(code_of([] { generator_complexity_step(Element::identity(2), Letter::tau()); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("reduce translations") {
  auto [empty, same] = reduce_translations(transposition(3, {0, 2}, {1, 1}));
  CHECK(empty.empty());
  CHECK(same == transposition(3, {0, 2}, {1, 1}));
  auto [one, id] = reduce_translations(generator(3, 0, 1));
  CHECK(one.size() == 1);
  CHECK(id.is_identity());
  for (std::uint64_t s = 0; s < 500; ++s) {
    const Element e = random_element(3, 80, s);
    auto [rho, f] = reduce_translations(e);
    CHECK(static_cast<Position>(rho.size()) == complexity(e).translation);
    CHECK(is_finitary(f));
    CHECK(complexity(f).total <= complexity(e).total);
    CHECK(e * evaluate(rho) == f);
  }
  CHECK(code_of([] { reduce_translations(generator(2, 0, 1)); }) == ErrorCode::kNeedThreeRays);
}

TEST_CASE("push to initial segments") {
  auto [none, id] = push_to_initial_segments(Element::identity(3));
  CHECK(none.empty());
  CHECK(id.is_identity());

  const Element t = transposition(3, {0, 1}, {1, 1});
  auto [mu, shaped] = push_to_initial_segments(t);
  CHECK(mu.size() <= 8);
  CHECK(ray_preserving(shaped));
  CHECK(t * evaluate(mu) == shaped);

  for (std::uint64_t s = 0; s < 500; ++s) {
    const Element f = reduce_translations(random_element(3 + static_cast<int>(s % 3), 80, s)).element;
    auto [w, g] = push_to_initial_segments(f);
    const Position P = complexity(f).total;
    CHECK(static_cast<Position>(w.size()) <= 4 * P);
    CHECK(ray_preserving(g));
    CHECK(complexity(g).total <= P);
    CHECK(f * evaluate(w) == g);
  }
  CHECK(code_of([] { push_to_initial_segments(generator(3, 0, 1)); }) == ErrorCode::kNotFinitary);
}

TEST_CASE("sorting initial segments") {
  CHECK(sort_initial_segments(Element::identity(3)).empty());
  const Element rev = segment_permutation(3, 2, {4, 3, 2, 1});
  const Word w = sort_initial_segments(rev);
  CHECK(static_cast<double>(w.size()) <= 16.0);
  CHECK((rev * evaluate(w)).is_identity());
  CHECK(code_of([] { sort_initial_segments(transposition(3, {0, 1}, {1, 1})); }) == ErrorCode::kWrongShape);
  CHECK(code_of([] { sort_initial_segments(generator(3, 0, 1)); }) == ErrorCode::kWrongShape);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 2;
    std::vector<Exception> exc;
    double bound = 0;
    for (int r = 0; r < n; ++r) {
      const auto m = static_cast<Position>(std::uniform_int_distribution<int>(0, 64)(rng));
      std::vector<Position> images(static_cast<std::size_t>(m));
      std::iota(images.begin(), images.end(), 1);
      std::shuffle(images.begin(), images.end(), rng);
      for (Position k = 0; k < m; ++k) exc.push_back({{r, k + 1}, {r, images[static_cast<std::size_t>(k)]}});
      bound += sort_length_bound(m);
    }
    const Element e = Element::make(n, std::vector<Position>(static_cast<std::size_t>(n), 0), exc);
    const Word sorter = sort_initial_segments(e);
    CHECK(static_cast<double>(sorter.size()) <= bound);
    CHECK((e * evaluate(sorter)).is_identity());
  }
}

TEST_CASE("sort planner stays within 2 m log2 m") {
  for (int m = 2; m <= 8; ++m) {
    std::vector<std::int64_t> labels(static_cast<std::size_t>(m));
    std::iota(labels.begin(), labels.end(), 1);
    std::int64_t worst = 0;
    do {
      worst = std::max(worst, sort_plan_cost(labels));
    } while (std::next_permutation(labels.begin(), labels.end()));
    CAPTURE(m);
    CHECK(static_cast<double>(worst) <= sort_length_bound(m));
  }
  std::mt19937_64 rng(11);
  for (int m = 9; m <= 300; m += 7) {
    std::vector<std::int64_t> labels(static_cast<std::size_t>(m));
    std::iota(labels.begin(), labels.end(), 1);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(labels.begin(), labels.end(), rng);
      CHECK(static_cast<double>(sort_plan_cost(labels)) <= sort_length_bound(m));
    }
    std::reverse(labels.begin(), labels.end());
    std::sort(labels.begin(), labels.end(), std::greater<>());
    CHECK(static_cast<double>(sort_plan_cost(labels)) <= sort_length_bound(m));
  }
}

TEST_CASE("word synthesis") {
  CHECK(synthesize_word(Element::identity(3)).word.empty());
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      const auto r = synthesize_word(generator(4, i, j));
      CHECK(r.word.size() == 1);
      CHECK(evaluate(r.word) == generator(4, i, j));
    }
  }
  const Element s2 = sigma_n(3, 2);
  const auto r = synthesize_word(s2);
  CHECK(r.complexity == 4);
  CHECK(r.bound == 56);
  CHECK(evaluate(r.word) == s2);
  CHECK(static_cast<std::int64_t>(r.word.size()) <= 56);
  CHECK(exact_length(s2, gij3(), 7).value() <= static_cast<int>(r.word.size()));
  CHECK(synthesis_bound(2) == 14);
  CHECK(synthesis_bound(1) == 1);

  for (std::uint64_t s = 0; s < 300; ++s) {
    const Element e = random_element(3 + static_cast<int>(s % 2), 120, s);
    const auto rep = synthesize_word(e);
    if (rep.complexity < 2) continue;
    CHECK(oracle::equals_word(e, rep.word));
    CHECK(static_cast<std::int64_t>(rep.word.size()) <= rep.bound);
    const auto profile = complexity(e);
    CHECK(static_cast<Position>(rep.rho_length) == profile.translation);
  }
  CHECK(code_of([] { synthesize_word(generator(2, 0, 1)); }) == ErrorCode::kNeedThreeRays);
}

TEST_CASE("balls") {
  CHECK(bfs_ball(3, gij3(), 0).size() == 1);
  const std::vector<std::size_t> gij_spheres{1, 6, 24, 93, 351, 1280, 4575, 16095};
  const BallTable b7 = bfs_ball(3, gij3(), 7);
  CHECK(b7.sphere_sizes() == gij_spheres);
  const auto from_oracle = oracle_spheres(gij3(), 4);
  CHECK(from_oracle == std::vector<std::size_t>(gij_spheres.begin(), gij_spheres.begin() + 5));

  const GeneratingSet h2 = GeneratingSet::make(GeneratingSetKind::kH2, 2);
  const std::vector<std::size_t> h2_spheres{1, 3, 6, 12, 24, 48, 91, 172, 325, 600, 1103, 2020, 3659};
  const BallTable b12 = bfs_ball(2, h2, 12);
  CHECK(b12.sphere_sizes() == h2_spheres);
  CHECK(oracle_spheres(h2, 6) == std::vector<std::size_t>(h2_spheres.begin(), h2_spheres.begin() + 7));

  // Geodesics evaluate back, and every element has a parent one step closer.
  for (const auto& entry : ball6().entries()) {
    const auto w = ball6().geodesic(entry.element);
    REQUIRE(w.has_value());
    CHECK(static_cast<int>(w->size()) == entry.length);
    CHECK(oracle::equals_word(entry.element, *w));
    if (entry.parent >= 0) {
      CHECK(ball6().entries()[static_cast<std::size_t>(entry.parent)].length == entry.length - 1);
    }
  }
  CHECK(b7.length(generator(3, 0, 1)) == 1);
  CHECK_FALSE(ball6().length(sigma_n(3, 5)).has_value());
  CHECK(code_of([] { bfs_ball(3, gij3(), 7, 1000); }) == ErrorCode::kBudget);
}

TEST_CASE("exact length by bidirectional search") {
  const GeneratingSet h2 = GeneratingSet::make(GeneratingSetKind::kH2, 2);
  const BallTable b12 = bfs_ball(2, h2, 12);
  CHECK(exact_length(sigma_n(2, 1), h2, 12) == 1);
  CHECK(exact_length(sigma_n(2, 2), h2, 12) == 12);
  CHECK(b12.length(sigma_n(2, 2)) == 12);
  CHECK_FALSE(exact_length(sigma_n(2, 3), h2, 12).has_value());
  CHECK(exact_length(sigma_n(2, 3), h2, 16) == 31);
  CHECK(exact_length(sigma_n(2, 3), h2, 18) == 31);

  // Agreement with the one-sided ball on every element of radius 6.
  int checked = 0;
  for (const auto& entry : ball6().entries()) {
    if (entry.element.hash() % 17 != 0) continue;
    CHECK(exact_length(entry.element, gij3(), 3) == entry.length);
    ++checked;
  }
  CHECK(checked > 100);
  CHECK(exact_length(Element::identity(3), gij3(), 0) == 0);
  CHECK(code_of([] { exact_length(sigma_n(3, 4), gij3(), 7, 500); }) == ErrorCode::kBudget);
}

TEST_CASE("free subsemigroup") {
  CHECK(free_semigroup_check(1).free);
  const auto r = free_semigroup_check(10);
  CHECK(r.free);
  CHECK(r.words == 2046);
  CHECK(r.distinct == 2046);
  const auto spheres = bfs_ball(3, gij3(), 7).sphere_sizes();
  std::size_t total = 0;
  for (std::size_t k = 0; k < spheres.size(); ++k) {
    total += spheres[k];
    CHECK(total >= (std::size_t{1} << k));
  }
}

TEST_CASE("complexity classes") {
  CHECK(complexity_class_witnesses(3, 1) == 6);
  const std::size_t c2 = complexity_class_witnesses(3, 2);
  CHECK(c2 >= 24);
  // Every element of complexity 2 in H_3 lies within distance 6, so the ball
  // counts the class independently.
  std::size_t in_ball = 0;
  for (const auto& entry : ball6().entries()) in_ball += complexity(entry.element).total == 2 ? 1 : 0;
  CHECK(in_ball == c2);
  CHECK(c2 == 48);
  CHECK(complexity_class_witnesses(4, 1) == 12);
  CHECK(code_of([] { complexity_class_witnesses(3, 9); }) == ErrorCode::kTooLarge);

  const auto census = complexity_family_census(3, 2);
  CHECK(census.members == 24);
  CHECK(census.distinct == 24);
  CHECK(census.min_complexity >= 2);
  CHECK(census.exact_complexity < census.members);
}
