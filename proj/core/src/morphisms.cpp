#include "houghton/morphisms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace houghton {

namespace {

std::vector<Position> zero_t(int n) { return std::vector<Position>(static_cast<std::size_t>(n), 0); }

Position max_exception_pos(const Element& e) {
  Position m = 0;
  for (const Exception& x : e.exceptions()) m = std::max({m, x.from.pos, x.to.pos});
  return m;
}

Position max_abs_translation(const Element& e) {
  Position m = 0;
  for (Position t : e.translations()) m = std::max(m, t < 0 ? -t : t);
  return m;
}

void check_p(int p) {
  if (p < 1) throw Error(ErrorCode::kBadP, "p must be at least 1, got " + std::to_string(p));
}

Element power_of(const Element& g, Position k) {
  Element base = k < 0 ? inverse(g) : g;
  Position e = k < 0 ? -k : k;
  Element acc = Element::identity(g.rays());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace

RayPermutation RayPermutation::make(std::vector<int> perm) {
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k)) {
      throw Error(ErrorCode::kInvalidArgument, "not a permutation of the ray labels");
    }
  }
  return RayPermutation(std::move(perm));
}

RayPermutation RayPermutation::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return RayPermutation(std::move(perm));
}

RayPermutation RayPermutation::then(const RayPermutation& next) const {
  if (next.size() != size()) throw Error(ErrorCode::kSizeMismatch, "ray permutations of different sizes");
  std::vector<int> out(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) out[i] = next(perm_[i]);
  return RayPermutation(std::move(out));
}

RayPermutation RayPermutation::inverse() const {
  std::vector<int> out(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) out[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
  return RayPermutation(std::move(out));
}

Element include_rays(const Element& e, int m) {
  if (m < e.rays()) {
    throw Error(ErrorCode::kShrinking, "cannot include H_" + std::to_string(e.rays()) + " in H_" +
                                           std::to_string(m));
  }
  std::vector<Position> t(e.translations().begin(), e.translations().end());
  t.resize(static_cast<std::size_t>(m), 0);
  return Element::trusted(m, std::move(t), {e.exceptions().begin(), e.exceptions().end()});
}

Element sigma_n(int rays, std::int64_t k) {
  if (rays < 2) throw Error(ErrorCode::kInvalidArgument, "sigma_n needs at least 2 rays");
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "sigma_n needs k >= 1");
  std::vector<Exception> exc;
  exc.reserve(static_cast<std::size_t>(2 * k));
  for (Position j = 1; j <= k; ++j) {
    exc.push_back({{0, j}, {1, j}});
    exc.push_back({{1, j}, {0, j}});
  }
  return Element::make(rays, zero_t(rays), std::move(exc));
}

Element cohopf_double(const Element& e) {
  std::vector<Position> t;
  for (Position v : e.translations()) t.push_back(2 * v);
  std::vector<Exception> exc;
  exc.reserve(2 * e.exceptions().size());
  for (const Exception& x : e.exceptions()) {
    exc.push_back({{x.from.ray, 2 * x.from.pos - 1}, {x.to.ray, 2 * x.to.pos - 1}});
    exc.push_back({{x.from.ray, 2 * x.from.pos}, {x.to.ray, 2 * x.to.pos}});
  }
  return Element::trusted(e.rays(), std::move(t), std::move(exc));
}

std::optional<Element> is_in_double_image(const Element& e) {
  const int n = e.rays();
  std::vector<Position> half;
  for (Position v : e.translations()) {
    if (v % 2 != 0) return std::nullopt;
    half.push_back(v / 2);
  }
  // Beyond the exceptional window e translates by an even amount, which
  // keeps the pairs {2k-1, 2k} together.
  const Position window = max_exception_pos(e) / 2 + 1;
  std::vector<Exception> exc;
  for (int r = 0; r < n; ++r) {
    for (Position k = 1; k <= window; ++k) {
      const RayPoint a = e.apply({r, 2 * k - 1});
      const RayPoint b = e.apply({r, 2 * k});
      if (a.pos % 2 == 0 || b != RayPoint{a.ray, a.pos + 1}) return std::nullopt;
      exc.push_back({{r, k}, {a.ray, (a.pos + 1) / 2}});
    }
  }
  try {
    Element pre = Element::make(n, std::move(half), std::move(exc));
    if (cohopf_double(pre) != e) return std::nullopt;
    return pre;
  } catch (const Error&) {
    return std::nullopt;
  }
}

Element stabilizer_embed(const Element& e, RayPoint q) {
  const int n = e.rays();
  if (q.ray < 0 || q.ray >= n) throw Error(ErrorCode::kRayOutOfRange, "stabilized point off the rays");
  if (q.pos < 1) throw Error(ErrorCode::kBadPoint, "stabilized point has position < 1");
  auto beta = [q](RayPoint x) {
    if (x.ray == q.ray && x.pos >= q.pos) ++x.pos;
    return x;
  };
  // Past this window e is a translation on each ray and both a point and its
  // image sit beyond q, where beta is a shift by one on q's ray.
  const Position window = max_exception_pos(e) + max_abs_translation(e) + q.pos + 1;
  std::vector<Exception> exc;
  exc.push_back({q, q});
  for (int r = 0; r < n; ++r) {
    for (Position k = 1; k <= window; ++k) {
      const RayPoint x{r, k};
      exc.push_back({beta(x), beta(e.apply(x))});
    }
  }
  return Element::make(n, {e.translations().begin(), e.translations().end()}, std::move(exc));
}

Element conj_by_ray_perm(const Element& e, const RayPermutation& r) {
  if (r.size() != e.rays()) throw Error(ErrorCode::kSizeMismatch, "ray permutation size differs from ray count");
  std::vector<Position> t(static_cast<std::size_t>(e.rays()));
  for (int i = 0; i < e.rays(); ++i) t[static_cast<std::size_t>(r(i))] = e.translation(i);
  std::vector<Exception> exc;
  exc.reserve(e.exceptions().size());
  for (const Exception& x : e.exceptions()) {
    exc.push_back({{r(x.from.ray), x.from.pos}, {r(x.to.ray), x.to.pos}});
  }
  return Element::trusted(e.rays(), std::move(t), std::move(exc));
}

Element translation_residue(const Element& e) {
  const int n = e.rays();
  Element acc = e;
  Position prefix = 0;
  for (int i = 0; i + 1 < n; ++i) {
    prefix += e.translation(i);
    acc = acc * power_of(generator(n, i, i + 1), prefix);
  }
  return acc;
}

namespace {

// U_p meets FSym in FAlt exactly when every finitary relator among the
// g_i^p is even: the commutators [g_i^p, g_j^p] and the cyclic product.
bool parity_matters(int n, int p) {
  std::vector<Element> powers;
  for (int i = 0; i < n; ++i) powers.push_back(power_of(generator(n, i, (i + 1) % n), p));
  Element cyclic = Element::identity(n);
  for (const Element& g : powers) cyclic = cyclic * g;
  if (sign(cyclic) == -1) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Element& a = powers[static_cast<std::size_t>(i)];
      const Element& b = powers[static_cast<std::size_t>(j)];
      if (sign(inverse(a) * inverse(b) * a * b) == -1) return false;
    }
  }
  return true;
}

}  // namespace

bool up_parity_restricted(int n, int p) {
  check_p(p);
  return parity_matters(n, p);
}

bool up_member(const Element& e, int p) {
  check_p(p);
  for (Position t : e.translations()) {
    if (t % p != 0) return false;
  }
  if (!parity_matters(e.rays(), p)) return true;
  return sign(translation_residue(e)) == 1;
}

std::int64_t up_state_bound(int n, int p) {
  check_p(p);
  std::int64_t bound = parity_matters(n, p) ? 2 : 1;
  for (int i = 0; i + 1 < n; ++i) {
    bound *= p;
    if (bound > (std::int64_t{1} << 40)) return bound;
  }
  return bound;
}

namespace {

struct CosetState {
  std::vector<Position> residues;  // t_0..t_{n-2} mod p
  int bit = 0;

  friend auto operator<=>(const CosetState&, const CosetState&) = default;
};

// The canonical translation element for a residue vector: prod g_i^{S_i}
// inverted, which has translations c_i on rays 0..n-2.
Element canonical_translation(int n, const std::vector<Position>& c) {
  std::vector<Position> t(c.begin(), c.end());
  Position sum = std::accumulate(c.begin(), c.end(), Position{0});
  t.push_back(-sum);
  Element acc = Element::identity(n);
  Position prefix = 0;
  for (int i = 0; i + 1 < n; ++i) {
    prefix += t[static_cast<std::size_t>(i)];
    acc = acc * power_of(generator(n, i, i + 1), prefix);
  }
  return inverse(acc);
}

CosetState coset_state(const Element& e, int p) {
  const int n = e.rays();
  CosetState s;
  for (int i = 0; i + 1 < n; ++i) {
    Position r = e.translation(i) % p;
    if (r < 0) r += p;
    s.residues.push_back(r);
  }
  if (parity_matters(n, p)) {
    const Element shifted = e * inverse(canonical_translation(n, s.residues));
    s.bit = up_member(shifted, p) ? 0 : 1;
  }
  return s;
}

}  // namespace

Element random_up_element(int n, int p, std::uint64_t seed) {
  check_p(p);
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const Position depth = uniform(1, 4);
  std::vector<RayPoint> grid;
  for (int r = 0; r < n; ++r) {
    for (Position k = 1; k <= depth; ++k) grid.push_back({r, k});
  }
  std::vector<RayPoint> images = grid;
  std::shuffle(images.begin(), images.end(), rng);
  std::vector<Exception> exc;
  for (std::size_t k = 0; k < grid.size(); ++k) exc.push_back({grid[k], images[k]});
  Element acc = Element::make(n, zero_t(n), std::move(exc));
  if (parity_matters(n, p) && sign(acc) == -1) acc = acc * transposition(n, {0, 1}, {1, 1});
  for (int i = 0; i < n; ++i) {
    const Position q = uniform(-3, 3);
    acc = acc * power_of(generator(n, i, (i + 1) % n), q * p);
  }
  return acc;
}

std::int64_t up_index(int n, int p, std::uint64_t seed) {
  check_p(p);
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "ray count must be at least 2");
  if (up_state_bound(n, p) > 1'000'000) {
    throw Error(ErrorCode::kTooLarge, "more than 10^6 coset states");
  }
  std::vector<Element> letters;
  if (n == 2) {
    letters = {generator(2, 0, 1), generator(2, 1, 0), transposition(2, {0, 1}, {1, 1})};
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) letters.push_back(generator(n, i, j));
      }
    }
  }

  std::map<CosetState, std::size_t> index;
  std::vector<Element> reps{Element::identity(n)};
  index.emplace(coset_state(reps[0], p), 0);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (const Element& g : letters) {
      Element next = reps[k] * g;
      CosetState s = coset_state(next, p);
      if (!index.contains(s)) {
        index.emplace(std::move(s), reps.size());
        reps.push_back(std::move(next));
      }
    }
  }

  // Coset states must be constant on U_p rep and the generator action must
  // not depend on the representative.
  std::uint64_t draw = seed;
  for (const Element& rep : reps) {
    for (int trial = 0; trial < 2; ++trial) {
      const Element u = random_up_element(n, p, draw++);
      if (!up_member(u, p)) throw Error(ErrorCode::kInvalidArgument, "sampled element outside U_p");
      const Element moved = u * rep;
      if (coset_state(moved, p) != coset_state(rep, p)) {
        throw Error(ErrorCode::kInvalidArgument, "coset state not constant on a coset");
      }
      for (const Element& g : letters) {
        if (coset_state(moved * g, p) != coset_state(rep * g, p)) {
          throw Error(ErrorCode::kInvalidArgument, "generator action depends on the representative");
        }
      }
    }
  }
  return static_cast<std::int64_t>(reps.size());
}

RayPoint split_point(RayPoint x, int p) {
  return {x.ray * p + static_cast<int>((x.pos - 1) % p), (x.pos - 1) / p + 1};
}

RayPoint unsplit_point(RayPoint x, int p) {
  return {x.ray / p, (x.pos - 1) * p + x.ray % p + 1};
}

namespace {

Element split_unchecked(const Element& e, int p) {
  const int n = e.rays();
  std::vector<Position> t;
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < p; ++r) t.push_back(e.translation(i) / p);
  }
  std::vector<Exception> exc;
  exc.reserve(e.exceptions().size());
  for (const Exception& x : e.exceptions()) exc.push_back({split_point(x.from, p), split_point(x.to, p)});
  return Element::trusted(n * p, std::move(t), std::move(exc));
}

}  // namespace

Element split_rays(const Element& e, int p) {
  check_p(p);
  if (!up_member(e, p)) throw Error(ErrorCode::kNotInUp, "element is not in U_" + std::to_string(p));
  return split_unchecked(e, p);
}

Element unsplit_rays(const Element& e, int p) {
  check_p(p);
  if (e.rays() % p != 0) throw Error(ErrorCode::kSizeMismatch, "ray count is not a multiple of p");
  const int n = e.rays() / p;
  std::vector<Position> t;
  for (int i = 0; i < n; ++i) {
    const Position a = e.translation(i * p);
    for (int r = 1; r < p; ++r) {
      if (e.translation(i * p + r) != a) {
        throw Error(ErrorCode::kInvalidArgument, "translations differ on equivalent rays");
      }
    }
    t.push_back(a * p);
  }
  std::vector<Exception> exc;
  for (const Exception& x : e.exceptions()) exc.push_back({unsplit_point(x.from, p), unsplit_point(x.to, p)});
  return Element::make(n, std::move(t), std::move(exc));
}

NpElement NpElement::make(int n, int p, Element base, std::vector<int> blocks) {
  if (p < 2 || p % 2 != 0) throw Error(ErrorCode::kBadP, "p must be even and at least 2");
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "ray count must be at least 2");
  const int np = n * p;
  if (base.rays() != np) throw Error(ErrorCode::kRayCountMismatch, "base must live in H_{np}");
  if (blocks.size() != static_cast<std::size_t>(np)) {
    throw Error(ErrorCode::kSizeMismatch, "blocks must permute np rays");
  }
  RayPermutation::make(blocks);
  for (int i = 0; i < n; ++i) {
    const int target = blocks[static_cast<std::size_t>(i * p)] / p;
    for (int r = 1; r < p; ++r) {
      if (blocks[static_cast<std::size_t>(i * p + r)] / p != target) {
        throw Error(ErrorCode::kInvalidArgument, "blocks split an equivalence class");
      }
    }
  }
  return NpElement(n, p, std::move(base), std::move(blocks));
}

NpElement NpElement::from_element(const Element& e, int p) {
  const int n = e.rays();
  if (p < 2 || p % 2 != 0) throw Error(ErrorCode::kBadP, "p must be even and at least 2");
  const int np = n * p;
  std::vector<int> blocks(static_cast<std::size_t>(np));
  std::vector<Position> t(static_cast<std::size_t>(np));
  for (int i = 0; i < n; ++i) {
    const Position ti = e.translation(i);
    for (int r = 0; r < p; ++r) {
      Position shifted = r + ti;
      Position q = shifted / p;
      Position m = shifted % p;
      if (m < 0) {
        m += p;
        --q;
      }
      blocks[static_cast<std::size_t>(i * p + r)] = i * p + static_cast<int>(m);
      t[static_cast<std::size_t>(i * p + r)] = q;
    }
  }
  // base = (split action) followed by the inverse relabeling.
  const Position window = (max_exception_pos(e) + max_abs_translation(e)) / p + 2;
  std::vector<int> unblock(static_cast<std::size_t>(np));
  for (int r = 0; r < np; ++r) unblock[static_cast<std::size_t>(blocks[static_cast<std::size_t>(r)])] = r;
  std::vector<Exception> exc;
  for (int r = 0; r < np; ++r) {
    for (Position k = 1; k <= window; ++k) {
      RayPoint y = split_point(e.apply(unsplit_point({r, k}, p)), p);
      y.ray = unblock[static_cast<std::size_t>(y.ray)];
      exc.push_back({{r, k}, y});
    }
  }
  return make(n, p, Element::make(np, std::move(t), std::move(exc)), std::move(blocks));
}

NpElement NpElement::translate_archetype(int n, int p) {
  std::vector<int> blocks(static_cast<std::size_t>(n * p));
  std::iota(blocks.begin(), blocks.end(), 0);
  return make(n, p, generator(n * p, 0, p), std::move(blocks));
}

NpElement NpElement::swap_archetype(int n, int p) {
  std::vector<int> blocks(static_cast<std::size_t>(n * p));
  std::iota(blocks.begin(), blocks.end(), 0);
  for (int r = 0; r < p; ++r) std::swap(blocks[static_cast<std::size_t>(r)], blocks[static_cast<std::size_t>(p + r)]);
  return make(n, p, Element::identity(n * p), std::move(blocks));
}

NpElement NpElement::finitary_archetype(int n, int p) {
  std::vector<int> blocks(static_cast<std::size_t>(n * p));
  std::iota(blocks.begin(), blocks.end(), 0);
  // (0,1) and (0,2) of R_n are the first points of split rays 0 and 1.
  return make(n, p, transposition(n * p, {0, 1}, {1, 1}), std::move(blocks));
}

RayPoint NpElement::apply_split(RayPoint x) const {
  RayPoint y = base_.apply(x);
  y.ray = blocks_[static_cast<std::size_t>(y.ray)];
  return y;
}

RayPoint NpElement::apply_split_inverse(RayPoint x) const {
  const auto it = std::find(blocks_.begin(), blocks_.end(), x.ray);
  x.ray = static_cast<int>(it - blocks_.begin());
  return inverse(base_).apply(x);
}

RayPoint NpElement::apply(RayPoint x) const { return unsplit_point(apply_split(split_point(x, p_)), p_); }

bool NpElement::blocks_trivial() const {
  for (std::size_t r = 0; r < blocks_.size(); ++r) {
    if (blocks_[r] != static_cast<int>(r)) return false;
  }
  return true;
}

bool NpElement::is_identity() const { return blocks_trivial() && base_.is_identity(); }

std::string_view qi_case_name(QiCase c) {
  switch (c) {
    case QiCase::kTranslatedRay: return "translated-ray";
    case QiCase::kRayPermuting: return "ray-permuting";
    case QiCase::kFinitary: return "finitary";
  }
  return "?";
}

Element conjugate_by(const Element& sigma, const NpElement& phi) {
  if (sigma.rays() != phi.rays()) throw Error(ErrorCode::kRayCountMismatch, "phi acts on a different ray count");
  if (is_finitary(sigma)) {
    // (x phi) sigma^phi = (x sigma) phi on the support; fixed elsewhere.
    std::vector<Exception> exc;
    for (const Exception& x : sigma.exceptions()) exc.push_back({phi.apply(x.from), phi.apply(x.to)});
    return Element::make(sigma.rays(), zero_t(sigma.rays()), std::move(exc));
  }
  if (!phi.blocks_trivial() || !is_finitary(phi.base())) {
    throw Error(ErrorCode::kInvalidArgument, "conjugating a translation needs a finitary phi");
  }
  const Element f = unsplit_rays(phi.base(), phi.p());
  return inverse(f) * sigma * f;
}

namespace {

Position certify(const Element& sigma, const Element& conjugate) {
  return complexity(inverse(sigma) * conjugate).total;
}

// Walks transpositions ((ray,m),(ray,m+1)) for m >= N until one is moved far
// enough; returns the best found.
std::optional<QiWitness> search_transpositions(const NpElement& phi, QiCase which, int ray, Position N) {
  const Position reach = N + 4 * static_cast<Position>(phi.p()) +
                         static_cast<Position>(phi.p()) *
                             (max_exception_pos(phi.base()) + max_abs_translation(phi.base()) + 2);
  std::optional<QiWitness> best;
  for (Position m = N; m <= reach; ++m) {
    const Element sigma = transposition(phi.rays(), {ray, m}, {ray, m + 1});
    const Element conj = conjugate_by(sigma, phi);
    const Position cert = certify(sigma, conj);
    if (!best || cert > best->certificate) best = QiWitness{which, sigma, conj, cert};
    if (cert >= N) break;
  }
  return best;
}

}  // namespace

QiWitness qi_witness(const NpElement& phi, Position N) {
  if (N < 1) throw Error(ErrorCode::kInvalidArgument, "distance must be positive");
  if (phi.is_identity()) throw Error(ErrorCode::kTrivialPhi, "phi acts trivially");
  const int n = phi.rays();
  const int p = phi.p();

  std::optional<int> moved_class;
  std::optional<int> shifted_class;
  for (int i = 0; i < n; ++i) {
    const int target = phi.blocks()[static_cast<std::size_t>(i * p)] / p;
    if (target != i && !moved_class) moved_class = target;
    bool touched = false;
    for (int r = 0; r < p; ++r) {
      touched = touched || phi.blocks()[static_cast<std::size_t>(i * p + r)] != i * p + r ||
                phi.base().translation(i * p + r) != 0;
    }
    if (touched && !shifted_class) shifted_class = i;
  }

  if (moved_class || shifted_class) {
    const QiCase which = moved_class ? QiCase::kRayPermuting : QiCase::kTranslatedRay;
    const int preferred = moved_class ? *moved_class : *shifted_class;
    std::optional<QiWitness> best = search_transpositions(phi, which, preferred, N);
    for (int r = 0; r < n && best->certificate < N; ++r) {
      if (r == preferred) continue;
      auto other = search_transpositions(phi, which, r, N);
      if (other->certificate > best->certificate) best = other;
    }
    return *best;
  }

  // phi is conjugation by a finitary f. Push the whole grid containing f's
  // support onto ray 0, then beyond position N there.
  const Element f = unsplit_rays(phi.base(), p);
  const Position depth = std::max<Position>(max_exception_pos(f), 1);
  Element sigma = Element::identity(n);
  for (int r = 1; r < n; ++r) sigma = sigma * power_of(generator(n, r, 0), depth);
  sigma = sigma * power_of(generator(n, 1, 0), depth + N);
  const Element conj = conjugate_by(sigma, phi);
  return {QiCase::kFinitary, sigma, conj, certify(sigma, conj)};
}

}  // namespace houghton
