#include "houghton/metric.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "houghton/serialize.hpp"

namespace houghton {

Position lower_bound(const Element& e) { return complexity(e).total; }

int generator_complexity_step(const Element& e, Letter letter) {
  if (letter.is_tau()) throw Error(ErrorCode::kInvalidArgument, "complexity step needs a g letter");
  const Element next = e * letter_element(e.rays(), letter);
  return static_cast<int>(complexity(next).total - complexity(e).total);
}

int predicted_complexity_step(const Element& e, Letter letter) {
  if (letter.is_tau()) throw Error(ErrorCode::kInvalidArgument, "complexity step needs a g letter");
  check_letter(e.rays(), letter);
  const int i = letter.from;
  const int j = letter.to;
  const auto p = complexity(e).p;
  const Position pi = p[static_cast<std::size_t>(i)];
  const Position pj = p[static_cast<std::size_t>(j)];
  if (e.apply({i, pi + 1}) == RayPoint{i, 1}) return 1;
  if (pj >= 1 && e.apply({j, pj + 1}) == RayPoint{j, 1} && e.apply({j, pj}) == RayPoint{i, 1}) {
    return -1;
  }
  return 0;
}

namespace {

void require_three_rays(const Element& e) {
  if (e.rays() < 3) {
    throw Error(ErrorCode::kNeedThreeRays, "word synthesis uses the g_{ij} set on at least 3 rays");
  }
}

// Tokens sitting at the bottom of each ray. Moving with g(i,j) takes the
// token at (i,1) to (j,1); the rest of ray i slides down, ray j slides up.
class TokenStacks {
 public:
  TokenStacks(int n, Word& out) : stacks_(static_cast<std::size_t>(n)), out_(out) {}

  std::deque<std::int64_t>& at(int ray) { return stacks_[static_cast<std::size_t>(ray)]; }

  void move(int from, int to) {
    auto& src = at(from);
    if (src.empty()) throw Error(ErrorCode::kInvalidArgument, "token stack underflow");
    at(to).push_front(src.front());
    src.pop_front();
    out_.letters.push_back(Letter::g(from, to));
  }

 private:
  std::vector<std::deque<std::int64_t>> stacks_;
  Word& out_;
};

}  // namespace

WordAndElement reduce_translations(const Element& e) {
  require_three_rays(e);
  Word rho{e.rays(), {}};
  Element current = e;
  while (!is_finitary(current)) {
    int i = -1;
    int j = -1;
    for (int r = 0; r < current.rays(); ++r) {
      if (i < 0 && current.translation(r) > 0) i = r;
      if (j < 0 && current.translation(r) < 0) j = r;
    }
    const Letter l = Letter::g(i, j);
    rho.letters.push_back(l);
    current = current * letter_element(current.rays(), l);
  }
  return {std::move(rho), std::move(current)};
}

WordAndElement push_to_initial_segments(const Element& e) {
  require_three_rays(e);
  if (!is_finitary(e)) throw Error(ErrorCode::kNotFinitary, "push needs a finitary element");
  const int n = e.rays();
  const auto p = complexity(e).p;
  const Element inv = inverse(e);

  // The token at location y is the point x with x e = y; it belongs on x's ray.
  bool all_home = true;
  Word mu{n, {}};
  TokenStacks stacks(n, mu);
  for (int r = 0; r < n; ++r) {
    for (Position k = 1; k <= p[static_cast<std::size_t>(r)]; ++k) {
      const int home = inv.apply({r, k}).ray;
      all_home = all_home && home == r;
      stacks.at(r).push_back(home);
    }
  }
  if (all_home) return {std::move(mu), e};

  // Everything irregular onto ray 0.
  for (int r = 1; r < n; ++r) {
    for (Position k = 0; k < p[static_cast<std::size_t>(r)]; ++k) stacks.move(r, 0);
  }
  // Back to the home rays, with ray 0's own tokens parked on ray 1.
  while (!stacks.at(0).empty()) {
    const auto home = static_cast<int>(stacks.at(0).front());
    stacks.move(0, home == 0 ? 1 : home);
  }
  // Separate ray 1: ray 0's tokens home, ray 1's tokens aside to ray 2.
  std::size_t parked = 0;
  while (!stacks.at(1).empty()) {
    if (stacks.at(1).front() == 0) {
      stacks.move(1, 0);
    } else {
      stacks.move(1, 2);
      ++parked;
    }
  }
  for (std::size_t k = 0; k < parked; ++k) stacks.move(2, 1);

  Element shaped = e * evaluate(mu);
  return {std::move(mu), std::move(shaped)};
}

namespace {

enum class Order { kAscending, kDescending };

Order flip(Order o) { return o == Order::kAscending ? Order::kDescending : Order::kAscending; }

enum class SortStrategy { kNone, kDistribute, kTransfer };
enum class MoveStrategy { kDirect, kBounce, kSplitOnto, kSortThenDirect };

// A block is the set of labels in [lo, hi] (labels are a permutation of
// 1..m). Distributions and transfers only ever reverse a block, so its
// top-first reading is the base order restricted to [lo, hi], possibly
// reversed.
struct Block {
  std::int64_t lo;
  std::int64_t hi;
  bool reversed;

  std::int64_t size() const { return hi - lo + 1; }
  std::int64_t mid() const { return lo + size() / 2; }  // first label of the upper half
  Block lower() const { return {lo, mid() - 1, reversed}; }
  Block upper() const { return {mid(), hi, reversed}; }
  Block flipped() const { return {lo, hi, !reversed}; }
};

// Plans a merge sort of token stacks through two buffer rays, choosing per
// block among a few strategies the cheapest one.
class SortPlanner {
 public:
  explicit SortPlanner(std::vector<std::int64_t> base) : base_(std::move(base)) {}

  std::int64_t sort_cost(Block b, Order o, bool allow_transfer) {
    return sort_plan(b, o, allow_transfer).first;
  }

  std::pair<std::int64_t, SortStrategy> sort_plan(Block b, Order o, bool allow_transfer) {
    const auto key = std::make_tuple(b.lo, b.hi, b.reversed, o, allow_transfer);
    if (auto it = sort_memo_.find(key); it != sort_memo_.end()) return it->second;
    std::pair<std::int64_t, SortStrategy> best{0, SortStrategy::kNone};
    const std::int64_t m = b.size();
    if (m > 1 && !reads(b, o)) {
      best = {m + move_cost(b.lower().flipped(), o) + move_cost(b.upper().flipped(), o),
              SortStrategy::kDistribute};
      if (allow_transfer) {
        const std::int64_t transfer = m + move_cost(b.flipped(), o);
        if (transfer < best.first) best = {transfer, SortStrategy::kTransfer};
      }
    }
    sort_memo_[key] = best;
    return best;
  }

  std::int64_t move_cost(Block b, Order o) { return move_plan(b, o).first; }

  std::pair<std::int64_t, MoveStrategy> move_plan(Block b, Order o) {
    const auto key = std::make_tuple(b.lo, b.hi, b.reversed, o);
    if (auto it = move_memo_.find(key); it != move_memo_.end()) return it->second;
    const std::int64_t m = b.size();
    std::pair<std::int64_t, MoveStrategy> best{std::numeric_limits<std::int64_t>::max(),
                                               MoveStrategy::kDirect};
    if (reads(b.flipped(), o)) {
      best = {m, MoveStrategy::kDirect};
    } else {
      if (reads(b, o)) best = {2 * m, MoveStrategy::kBounce};
      const Block deep = o == Order::kAscending ? b.upper() : b.lower();
      const Block shallow = o == Order::kAscending ? b.lower() : b.upper();
      const std::int64_t onto =
          m + sort_cost(deep.flipped(), o, true) + move_cost(shallow.flipped(), o);
      if (onto < best.first) best = {onto, MoveStrategy::kSplitOnto};
      const std::int64_t presort = sort_cost(b, flip(o), false) + m;
      if (presort < best.first) best = {presort, MoveStrategy::kSortThenDirect};
    }
    move_memo_[key] = best;
    return best;
  }

  bool in_block(std::int64_t label, Block b) const { return label >= b.lo && label <= b.hi; }

 private:
  // Whether the top-first reading of b is monotone in the given order.
  bool reads(Block b, Order o) {
    auto key = std::make_pair(b.lo, b.hi);
    auto it = monotone_.find(key);
    if (it == monotone_.end()) {
      bool inc = true;
      bool dec = true;
      std::int64_t prev = 0;
      bool have = false;
      for (std::int64_t v : base_) {
        if (v < b.lo || v > b.hi) continue;
        if (have) {
          inc = inc && v > prev;
          dec = dec && v < prev;
        }
        prev = v;
        have = true;
      }
      it = monotone_.emplace(key, std::make_pair(inc, dec)).first;
    }
    const bool asc = b.reversed ? it->second.second : it->second.first;
    const bool desc = b.reversed ? it->second.first : it->second.second;
    return o == Order::kAscending ? asc : desc;
  }

  std::vector<std::int64_t> base_;
  std::map<std::tuple<std::int64_t, std::int64_t, bool, Order, bool>,
           std::pair<std::int64_t, SortStrategy>>
      sort_memo_;
  std::map<std::tuple<std::int64_t, std::int64_t, bool, Order>,
           std::pair<std::int64_t, MoveStrategy>>
      move_memo_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::pair<bool, bool>> monotone_;
};

class SortEmitter {
 public:
  SortEmitter(SortPlanner& planner, TokenStacks& stacks) : planner_(planner), stacks_(stacks) {}

  // Rearranges block b, on top of ray r, into order o in place.
  void sort(Block b, Order o, bool allow_transfer, int r, int x, int y) {
    const auto strategy = planner_.sort_plan(b, o, allow_transfer).second;
    const std::int64_t m = b.size();
    switch (strategy) {
      case SortStrategy::kNone:
        return;
      case SortStrategy::kDistribute: {
        const Block lower = b.lower();
        for (std::int64_t k = 0; k < m; ++k) {
          stacks_.move(r, planner_.in_block(stacks_.at(r).front(), lower) ? x : y);
        }
        if (o == Order::kAscending) {
          move(b.upper().flipped(), o, y, r, x);
          move(lower.flipped(), o, x, r, y);
        } else {
          move(lower.flipped(), o, x, r, y);
          move(b.upper().flipped(), o, y, r, x);
        }
        return;
      }
      case SortStrategy::kTransfer:
        for (std::int64_t k = 0; k < m; ++k) stacks_.move(r, x);
        move(b.flipped(), o, x, r, y);
        return;
    }
  }

  // Places block b, on top of src, onto dst in order o.
  void move(Block b, Order o, int src, int dst, int third) {
    const auto strategy = planner_.move_plan(b, o).second;
    const std::int64_t m = b.size();
    switch (strategy) {
      case MoveStrategy::kDirect:
        for (std::int64_t k = 0; k < m; ++k) stacks_.move(src, dst);
        return;
      case MoveStrategy::kBounce:
        for (std::int64_t k = 0; k < m; ++k) stacks_.move(src, third);
        for (std::int64_t k = 0; k < m; ++k) stacks_.move(third, dst);
        return;
      case MoveStrategy::kSplitOnto: {
        const Block deep = o == Order::kAscending ? b.upper() : b.lower();
        const Block shallow = o == Order::kAscending ? b.lower() : b.upper();
        for (std::int64_t k = 0; k < m; ++k) {
          stacks_.move(src, planner_.in_block(stacks_.at(src).front(), deep) ? dst : third);
        }
        sort(deep.flipped(), o, true, dst, src, third);
        move(shallow.flipped(), o, third, dst, src);
        return;
      }
      case MoveStrategy::kSortThenDirect:
        sort(b, flip(o), false, src, dst, third);
        for (std::int64_t k = 0; k < m; ++k) stacks_.move(src, dst);
        return;
    }
  }

 private:
  SortPlanner& planner_;
  TokenStacks& stacks_;
};

std::vector<std::int64_t> ranks(const std::vector<std::int64_t>& labels) {
  std::vector<std::int64_t> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "labels must be distinct");
  }
  std::vector<std::int64_t> out;
  out.reserve(labels.size());
  for (std::int64_t v : labels) {
    out.push_back(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin() + 1);
  }
  return out;
}

}  // namespace

double sort_length_bound(std::int64_t segment) {
  if (segment <= 1) return 0.0;
  const auto m = static_cast<double>(segment);
  return 2.0 * m * std::log2(m);
}

std::int64_t sort_plan_cost(const std::vector<std::int64_t>& labels) {
  if (labels.size() <= 1) return 0;
  SortPlanner planner(ranks(labels));
  return planner.sort_cost({1, static_cast<std::int64_t>(labels.size()), false},
                           Order::kAscending, true);
}

Word sort_initial_segments(const Element& e) {
  require_three_rays(e);
  const int n = e.rays();
  if (!is_finitary(e)) throw Error(ErrorCode::kWrongShape, "element has nonzero translations");
  for (const Exception& x : e.exceptions()) {
    if (x.from.ray != x.to.ray) {
      throw Error(ErrorCode::kWrongShape, "element moves a point to another ray");
    }
  }
  const auto p = complexity(e).p;
  const Element inv = inverse(e);
  Word w{n, {}};
  for (int r = 0; r < n; ++r) {
    const Position m = p[static_cast<std::size_t>(r)];
    if (m <= 1) continue;
    // The token at (r,k) is the point (r,k) e^{-1}; it must return there.
    std::vector<std::int64_t> base;
    base.reserve(static_cast<std::size_t>(m));
    for (Position k = 1; k <= m; ++k) base.push_back(inv.apply({r, k}).pos);
    SortPlanner planner(base);
    TokenStacks stacks(n, w);
    stacks.at(r).assign(base.begin(), base.end());
    SortEmitter emitter(planner, stacks);
    emitter.sort({1, m, false}, Order::kAscending, true, r, (r + 1) % n, (r + 2) % n);
    const auto& done = stacks.at(r);
    for (std::size_t k = 0; k < done.size(); ++k) {
      if (done[k] != static_cast<std::int64_t>(k) + 1) {
        throw Error(ErrorCode::kInvalidArgument, "sorting plan left ray unsorted");
      }
    }
  }
  return w;
}

std::int64_t synthesis_bound(Position complexity) {
  if (complexity <= 1) return complexity;
  const auto p = static_cast<double>(complexity);
  return static_cast<std::int64_t>(std::ceil(7.0 * p * std::log2(p) - 1e-9));
}

SynthesisReport synthesize_word(const Element& e) {
  require_three_rays(e);
  const int n = e.rays();
  SynthesisReport report;
  report.complexity = complexity(e).total;
  report.bound = synthesis_bound(report.complexity);
  report.word = Word{n, {}};
  if (report.complexity == 0) return report;
  if (report.complexity == 1) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && generator(n, i, j) == e) {
          report.word.letters.push_back(Letter::g(i, j));
          return report;
        }
      }
    }
    throw Error(ErrorCode::kInvalidArgument, "complexity one element is not a generator");
  }
  auto [rho, finitary] = reduce_translations(e);
  auto [mu, shaped] = push_to_initial_segments(finitary);
  const Word sorter = sort_initial_segments(shaped);
  report.rho_length = rho.size();
  report.mu_length = mu.size();
  report.sort_length = sorter.size();
  // e * rho * mu * sorter is the identity.
  report.word = invert_word(concat(concat(rho, mu), sorter));
  return report;
}

BallTable BallTable::build(const GeneratingSet& gens, int radius, std::size_t element_cap) {
  if (radius < 0) throw Error(ErrorCode::kInvalidArgument, "negative radius");
  BallTable table;
  table.gens_ = gens;
  table.radius_ = radius;
  std::vector<Element> letters;
  for (Letter l : gens.letters) letters.push_back(letter_element(gens.n, l));

  table.entries_.push_back({Element::identity(gens.n), 0, -1, -1});
  table.index_.emplace(table.entries_.back().element, 0);
  std::size_t begin = 0;
  for (int r = 1; r <= radius; ++r) {
    const std::size_t end = table.entries_.size();
    for (std::size_t idx = begin; idx < end; ++idx) {
      for (std::size_t k = 0; k < letters.size(); ++k) {
        Element next = table.entries_[idx].element * letters[k];
        if (table.index_.contains(next)) continue;
        if (table.entries_.size() >= element_cap) {
          throw Error(ErrorCode::kBudget, "ball exceeds " + std::to_string(element_cap) + " elements");
        }
        table.index_.emplace(next, table.entries_.size());
        table.entries_.push_back({std::move(next), r, static_cast<std::int64_t>(idx), static_cast<int>(k)});
      }
    }
    begin = end;
  }
  return table;
}

std::optional<int> BallTable::length(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second].length;
}

std::optional<Word> BallTable::geodesic(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  Word w{gens_.n, {}};
  for (std::int64_t idx = static_cast<std::int64_t>(it->second); entries_[static_cast<std::size_t>(idx)].parent >= 0;
       idx = entries_[static_cast<std::size_t>(idx)].parent) {
    w.letters.push_back(gens_.letters[static_cast<std::size_t>(entries_[static_cast<std::size_t>(idx)].letter)]);
  }
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

std::vector<std::size_t> BallTable::sphere_sizes() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(radius_) + 1, 0);
  for (const Entry& entry : entries_) ++counts[static_cast<std::size_t>(entry.length)];
  return counts;
}

std::string BallTable::growth_csv() const {
  std::ostringstream out;
  out << "length,count\n";
  const auto counts = sphere_sizes();
  for (std::size_t r = 0; r < counts.size(); ++r) out << r << ',' << counts[r] << '\n';
  return out.str();
}

std::string BallTable::dump_csv() const {
  std::ostringstream out;
  out << "element,length\n";
  for (const Entry& entry : entries_) {
    std::string record = element_to_record(entry.element);
    std::string quoted;
    for (char c : record) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    out << '"' << quoted << "\"," << entry.length << '\n';
  }
  return out.str();
}

BallTable bfs_ball(int n, const GeneratingSet& gens, int radius, std::size_t element_cap) {
  if (gens.n != n) throw Error(ErrorCode::kRayCountMismatch, "generating set is for a different ray count");
  return BallTable::build(gens, radius, element_cap);
}

std::optional<int> exact_length(const Element& e, const GeneratingSet& gens, int radius_cap,
                                std::size_t element_cap) {
  if (e.rays() != gens.n) throw Error(ErrorCode::kRayCountMismatch, "generating set is for a different ray count");
  if (radius_cap < 0) throw Error(ErrorCode::kInvalidArgument, "negative radius cap");
  if (e.is_identity()) return 0;

  std::vector<Element> letters;
  for (Letter l : gens.letters) letters.push_back(letter_element(gens.n, l));

  struct Side {
    std::unordered_map<Element, int, ElementHash> dist;
    std::vector<Element> frontier;
    int depth = 0;
  };
  Side from_identity;
  Side from_target;
  from_identity.dist.emplace(Element::identity(gens.n), 0);
  from_identity.frontier.push_back(Element::identity(gens.n));
  from_target.dist.emplace(e, 0);
  from_target.frontier.push_back(e);

  int best = std::numeric_limits<int>::max();
  while (best > from_identity.depth + from_target.depth) {
    const bool grow_identity =
        from_target.depth >= radius_cap ||
        (from_identity.depth < radius_cap && from_identity.frontier.size() <= from_target.frontier.size());
    if (from_identity.depth >= radius_cap && from_target.depth >= radius_cap) break;
    Side& side = grow_identity ? from_identity : from_target;
    const Side& other = grow_identity ? from_target : from_identity;
    std::vector<Element> next;
    const int depth = side.depth + 1;
    for (const Element& x : side.frontier) {
      for (const Element& g : letters) {
        Element y = x * g;
        if (side.dist.contains(y)) continue;
        if (auto hit = other.dist.find(y); hit != other.dist.end()) {
          best = std::min(best, depth + hit->second);
        }
        side.dist.emplace(y, depth);
        next.push_back(std::move(y));
        if (from_identity.dist.size() + from_target.dist.size() > element_cap) {
          throw Error(ErrorCode::kBudget, "search exceeds " + std::to_string(element_cap) + " elements");
        }
      }
    }
    side.frontier = std::move(next);
    side.depth = depth;
    if (side.frontier.empty()) break;
  }
  if (best <= from_identity.depth + from_target.depth) return best;
  return std::nullopt;
}

FreeSemigroupResult free_semigroup_check(int max_length) {
  if (max_length < 1) throw Error(ErrorCode::kInvalidArgument, "length must be at least 1");
  if (max_length > 22) throw Error(ErrorCode::kTooLarge, "too many words to enumerate");
  const Element a = generator(3, 0, 1);
  const Element b = generator(3, 0, 2);
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> level{Element::identity(3)};
  FreeSemigroupResult result;
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Element> next;
    next.reserve(level.size() * 2);
    for (const Element& x : level) {
      next.push_back(x * a);
      next.push_back(x * b);
    }
    result.words += next.size();
    seen.insert(next.begin(), next.end());
    level = std::move(next);
  }
  result.distinct = seen.size();
  result.free = result.distinct == result.words;
  return result;
}

namespace {

std::size_t factorial_capped(std::int64_t m, std::size_t cap) {
  std::size_t f = 1;
  for (std::int64_t k = 2; k <= m; ++k) {
    f *= static_cast<std::size_t>(k);
    if (f > cap) return cap + 1;
  }
  return f;
}

}  // namespace

ComplexityFamilyCensus complexity_family_census(int n, int k) {
  if (n < 3 || k < 1) throw Error(ErrorCode::kInvalidArgument, "needs n >= 3 and k >= 1");
  const std::size_t cap = 1'000'000;
  if (factorial_capped(static_cast<std::int64_t>(n) * k - 2, cap) > cap) {
    throw Error(ErrorCode::kTooLarge, "(nk-2)! exceeds 10^6");
  }
  const RayPoint pinned{0, k};
  const RayPoint partner = k >= 2 ? RayPoint{0, 1} : RayPoint{1, 1};
  const Element pin = transposition(n, pinned, partner);
  std::vector<RayPoint> free_points;
  for (int r = 0; r < n; ++r) {
    for (Position m = 1; m <= k; ++m) {
      const RayPoint x{r, m};
      if (x != pinned && x != partner) free_points.push_back(x);
    }
  }
  std::vector<std::size_t> perm(free_points.size());
  std::iota(perm.begin(), perm.end(), 0);
  ComplexityFamilyCensus census;
  census.min_complexity = std::numeric_limits<Position>::max();
  std::unordered_set<Element, ElementHash> seen;
  do {
    std::vector<Exception> exc;
    for (std::size_t q = 0; q < perm.size(); ++q) exc.push_back({free_points[q], free_points[perm[q]]});
    const Element member = pin * Element::make(n, std::vector<Position>(static_cast<std::size_t>(n), 0), exc);
    const Position P = complexity(member).total;
    ++census.members;
    census.exact_complexity += P == k ? 1 : 0;
    census.min_complexity = std::min(census.min_complexity, P);
    census.max_complexity = std::max(census.max_complexity, P);
    seen.insert(member);
  } while (std::next_permutation(perm.begin(), perm.end()));
  census.distinct = seen.size();
  return census;
}

std::size_t complexity_class_witnesses(int n, int k, std::size_t cap) {
  if (n < 3 || k < 1) throw Error(ErrorCode::kInvalidArgument, "needs n >= 3 and k >= 1");

  // Depth vectors p with sum k, and translations t with t_i >= -p_i summing
  // to zero. Ray i then has p_i + t_i holes at its bottom which the k
  // exceptional points must fill bijectively.
  std::vector<std::vector<Position>> depths;
  std::vector<Position> current(static_cast<std::size_t>(n), 0);
  auto compose_depths = [&](auto&& self, int ray, Position left) -> void {
    if (ray == n - 1) {
      current[static_cast<std::size_t>(ray)] = left;
      depths.push_back(current);
      return;
    }
    for (Position v = 0; v <= left; ++v) {
      current[static_cast<std::size_t>(ray)] = v;
      self(self, ray + 1, left - v);
    }
  };
  compose_depths(compose_depths, 0, k);

  std::vector<std::pair<std::vector<Position>, std::vector<Position>>> shapes;
  for (const auto& p : depths) {
    std::vector<Position> t(static_cast<std::size_t>(n), 0);
    auto choose = [&](auto&& self, int ray, Position sum) -> void {
      if (ray == n) {
        if (sum == 0) shapes.emplace_back(p, t);
        return;
      }
      for (Position v = -p[static_cast<std::size_t>(ray)]; v <= k; ++v) {
        t[static_cast<std::size_t>(ray)] = v;
        self(self, ray + 1, sum + v);
      }
    };
    choose(choose, 0, 0);
  }
  const std::size_t per_shape = factorial_capped(k, cap);
  if (per_shape > cap || shapes.size() * per_shape > cap) {
    throw Error(ErrorCode::kTooLarge, "complexity class too large to enumerate");
  }

  std::unordered_set<Element, ElementHash> seen;
  for (const auto& [p, t] : shapes) {
    std::vector<RayPoint> domain;
    std::vector<RayPoint> holes;
    for (int r = 0; r < n; ++r) {
      const auto ri = static_cast<std::size_t>(r);
      for (Position m = 1; m <= p[ri]; ++m) domain.push_back({r, m});
      for (Position q = 1; q <= p[ri] + t[ri]; ++q) holes.push_back({r, q});
    }
    std::vector<std::size_t> perm(holes.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool deepest_irregular = true;
      std::vector<Exception> exc;
      for (std::size_t q = 0; q < domain.size(); ++q) {
        const RayPoint x = domain[q];
        const RayPoint y = holes[perm[q]];
        const auto ri = static_cast<std::size_t>(x.ray);
        if (x.pos == p[ri] && y == RayPoint{x.ray, x.pos + t[ri]}) deepest_irregular = false;
        exc.push_back({x, y});
      }
      if (!deepest_irregular) continue;
      Element member = Element::make(n, t, std::move(exc));
      const auto profile = complexity(member);
      if (profile.total != k || profile.p != p) {
        throw Error(ErrorCode::kInvalidArgument, "enumerated element has the wrong complexity");
      }
      seen.insert(std::move(member));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return seen.size();
}

}  // namespace houghton
