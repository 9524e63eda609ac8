#include "houghton/element.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>

namespace houghton {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroSumViolation: return "ZeroSumViolation";
    case ErrorCode::kNotBijective: return "NotBijective";
    case ErrorCode::kBadPoint: return "BadPoint";
    case ErrorCode::kSameRay: return "SameRay";
    case ErrorCode::kEqualPoints: return "EqualPoints";
    case ErrorCode::kRayOutOfRange: return "RayOutOfRange";
    case ErrorCode::kRayCountMismatch: return "RayCountMismatch";
    case ErrorCode::kNotFinitary: return "NotFinitary";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kTauOutsideH2: return "TauOutsideH2";
    case ErrorCode::kBadRecord: return "BadRecord";
    case ErrorCode::kNeedThreeRays: return "NeedThreeRays";
    case ErrorCode::kUnsupportedGeneratingSet: return "UnsupportedGeneratingSet";
    case ErrorCode::kWrongShape: return "WrongShape";
    case ErrorCode::kBudget: return "Budget";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kShrinking: return "Shrinking";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kBadP: return "BadP";
    case ErrorCode::kNotInUp: return "NotInUp";
    case ErrorCode::kTrivialPhi: return "TrivialPhi";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

void hash_combine(std::size_t& seed, std::uint64_t v) {
  seed ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

void check_ray_count(int n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "ray count must be at least 2, got " + std::to_string(n));
  }
}

void check_point(int n, RayPoint x) {
  if (x.ray < 0 || x.ray >= n) {
    throw Error(ErrorCode::kRayOutOfRange,
                "ray " + std::to_string(x.ray) + " not in [0," + std::to_string(n) + ")");
  }
  if (x.pos < 1) {
    throw Error(ErrorCode::kBadPoint, "position " + std::to_string(x.pos) + " < 1");
  }
  if (x.pos > kMaxPosition) {
    throw Error(ErrorCode::kOverflow, "position " + std::to_string(x.pos) + " too large");
  }
}

bool by_source(const Exception& a, const Exception& b) { return a.from < b.from; }

const Exception* find_source(std::span<const Exception> exc, RayPoint x) {
  auto it = std::lower_bound(exc.begin(), exc.end(), x,
                             [](const Exception& e, RayPoint p) { return e.from < p; });
  if (it != exc.end() && it->from == x) return &*it;
  return nullptr;
}

}  // namespace

Element::Element(int n, std::vector<Position> t, std::vector<Exception> exceptions)
    : n_(n), t_(std::move(t)), exceptions_(std::move(exceptions)) {
  std::size_t h = static_cast<std::size_t>(n_);
  for (Position v : t_) hash_combine(h, static_cast<std::uint64_t>(v));
  for (const Exception& e : exceptions_) {
    hash_combine(h, (static_cast<std::uint64_t>(e.from.ray) << 48) ^
                        static_cast<std::uint64_t>(e.from.pos));
    hash_combine(h, (static_cast<std::uint64_t>(e.to.ray) << 48) ^
                        static_cast<std::uint64_t>(e.to.pos));
  }
  hash_ = h;
}

Element Element::identity(int n) {
  check_ray_count(n);
  return Element(n, std::vector<Position>(static_cast<std::size_t>(n), 0), {});
}

Element Element::make(int n, std::vector<Position> t, std::vector<Exception> exceptions) {
  check_ray_count(n);
  if (t.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kSizeMismatch, "translation vector has " + std::to_string(t.size()) +
                                              " entries, expected " + std::to_string(n));
  }
  for (Position v : t) {
    if (v > kMaxPosition || v < -kMaxPosition) {
      throw Error(ErrorCode::kOverflow, "translation out of range");
    }
  }
  if (std::accumulate(t.begin(), t.end(), Position{0}) != 0) {
    throw Error(ErrorCode::kZeroSumViolation, "translations must sum to zero");
  }
  for (const Exception& e : exceptions) {
    check_point(n, e.from);
    check_point(n, e.to);
  }
  std::sort(exceptions.begin(), exceptions.end(), by_source);
  for (std::size_t k = 1; k < exceptions.size(); ++k) {
    if (exceptions[k].from == exceptions[k - 1].from) {
      throw Error(ErrorCode::kNotBijective, "point listed twice in exception map");
    }
  }

  // Points whose translate would fall off the bottom of the ray must be listed.
  Position forced = 0;
  for (Position v : t) forced += v < 0 ? -v : 0;
  if (forced > static_cast<Position>(exceptions.size())) {
    throw Error(ErrorCode::kNotBijective, "negative translation without enough exceptions");
  }
  for (int i = 0; i < n; ++i) {
    for (Position k = 1; k <= -t[static_cast<std::size_t>(i)]; ++k) {
      if (!find_source(exceptions, {i, k})) {
        throw Error(ErrorCode::kNotBijective, "point (" + std::to_string(i) + "," +
                                                  std::to_string(k) + ") has no image");
      }
    }
  }

  // Each listed image must be a point not already hit by a translated point,
  // and no two listed images may coincide. Together with the zero sum this is
  // equivalent to bijectivity.
  std::vector<RayPoint> images;
  images.reserve(exceptions.size());
  for (const Exception& e : exceptions) {
    const RayPoint y = e.to;
    const Position back = y.pos - t[static_cast<std::size_t>(y.ray)];
    if (back >= 1 && !find_source(exceptions, {y.ray, back})) {
      throw Error(ErrorCode::kNotBijective, "image (" + std::to_string(y.ray) + "," +
                                                std::to_string(y.pos) + ") is hit twice");
    }
    images.push_back(y);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    throw Error(ErrorCode::kNotBijective, "two points share an image");
  }
  return trusted(n, std::move(t), std::move(exceptions));
}

Element Element::trusted(int n, std::vector<Position> t, std::vector<Exception> exceptions) {
  if (!std::is_sorted(exceptions.begin(), exceptions.end(), by_source)) {
    std::sort(exceptions.begin(), exceptions.end(), by_source);
  }
  for (Position v : t) {
    if (v > kMaxPosition || v < -kMaxPosition) {
      throw Error(ErrorCode::kOverflow, "translation out of range");
    }
  }
  std::erase_if(exceptions, [&](const Exception& e) {
    return e.to.ray == e.from.ray && e.to.pos == e.from.pos + t[static_cast<std::size_t>(e.from.ray)];
  });
  for (const Exception& e : exceptions) {
    if (e.from.pos > kMaxPosition || e.to.pos > kMaxPosition) {
      throw Error(ErrorCode::kOverflow, "position out of range");
    }
  }
  return Element(n, std::move(t), std::move(exceptions));
}

RayPoint Element::translate(RayPoint x) const {
  return {x.ray, x.pos + t_[static_cast<std::size_t>(x.ray)]};
}

RayPoint Element::apply(RayPoint x) const {
  check_point(n_, x);
  if (const Exception* e = find_source(exceptions_, x)) return e->to;
  return translate(x);
}

bool Element::is_identity() const noexcept {
  return exceptions_.empty() && std::all_of(t_.begin(), t_.end(), [](Position v) { return v == 0; });
}

Element compose(const Element& a, const Element& b) {
  if (a.n_ != b.n_) {
    throw Error(ErrorCode::kRayCountMismatch,
                std::to_string(a.n_) + " rays vs " + std::to_string(b.n_) + " rays");
  }
  const int n = a.n_;
  std::vector<RayPoint> candidates;
  candidates.reserve(a.exceptions_.size() + b.exceptions_.size());
  for (const Exception& e : a.exceptions_) candidates.push_back(e.from);
  for (const Exception& e : b.exceptions_) {
    const Position pre = e.from.pos - a.t_[static_cast<std::size_t>(e.from.ray)];
    if (pre >= 1) candidates.push_back({e.from.ray, pre});
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Position> t(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = a.t_[i] + b.t_[i];

  std::vector<Exception> exc;
  exc.reserve(candidates.size());
  for (RayPoint x : candidates) {
    const Exception* ea = find_source(a.exceptions_, x);
    const RayPoint mid = ea ? ea->to : a.translate(x);
    const Exception* eb = find_source(b.exceptions_, mid);
    const RayPoint y = eb ? eb->to : b.translate(mid);
    if (y.ray != x.ray || y.pos != x.pos + t[static_cast<std::size_t>(x.ray)]) {
      exc.push_back({x, y});
    }
  }
  for (const Exception& e : exc) {
    if (e.to.pos > kMaxPosition) throw Error(ErrorCode::kOverflow, "position out of range");
  }
  for (Position v : t) {
    if (v > kMaxPosition || v < -kMaxPosition) {
      throw Error(ErrorCode::kOverflow, "translation out of range");
    }
  }
  return Element(n, std::move(t), std::move(exc));
}

Element inverse(const Element& e) {
  std::vector<Position> t(e.t_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = -e.t_[i];
  // A canonical entry x -> y is never the translate, so y -> x never is either.
  std::vector<Exception> exc;
  exc.reserve(e.exceptions_.size());
  for (const Exception& x : e.exceptions_) exc.push_back({x.to, x.from});
  std::sort(exc.begin(), exc.end(), by_source);
  return Element(e.n_, std::move(t), std::move(exc));
}

Element generator(int n, int i, int j) {
  check_ray_count(n);
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw Error(ErrorCode::kRayOutOfRange, "generator index out of range");
  }
  if (i == j) throw Error(ErrorCode::kSameRay, "g(" + std::to_string(i) + "," + std::to_string(i) + ")");
  std::vector<Position> t(static_cast<std::size_t>(n), 0);
  t[static_cast<std::size_t>(i)] = -1;
  t[static_cast<std::size_t>(j)] = 1;
  return Element::make(n, std::move(t), {{{i, 1}, {j, 1}}});
}

Element transposition(int n, RayPoint a, RayPoint b) {
  check_ray_count(n);
  if (a == b) throw Error(ErrorCode::kEqualPoints, "transposition of a point with itself");
  return Element::make(n, std::vector<Position>(static_cast<std::size_t>(n), 0), {{a, b}, {b, a}});
}

std::vector<Position> abelianization(const Element& e) {
  auto t = e.translations();
  return {t.begin(), t.end() - 1};
}

ComplexityProfile::ComplexityProfile(std::vector<Position> depths, std::span<const Position> t)
    : p(std::move(depths)) {
  total = std::accumulate(p.begin(), p.end(), Position{0});
  Position abs_sum = 0;
  for (Position v : t) abs_sum += v < 0 ? -v : v;
  translation = abs_sum / 2;
  if (total < translation) {
    throw Error(ErrorCode::kInvalidArgument, "complexity below translation amount");
  }
}

ComplexityProfile complexity(const Element& e) {
  std::vector<Position> p(static_cast<std::size_t>(e.rays()), 0);
  for (const Exception& x : e.exceptions()) {
    auto& slot = p[static_cast<std::size_t>(x.from.ray)];
    slot = std::max(slot, x.from.pos);
  }
  return ComplexityProfile(std::move(p), e.translations());
}

bool is_finitary(const Element& e) noexcept {
  auto t = e.translations();
  return std::all_of(t.begin(), t.end(), [](Position v) { return v == 0; });
}

int sign(const Element& e) {
  if (!is_finitary(e)) throw Error(ErrorCode::kNotFinitary, "sign of a non-finitary element");
  auto exc = e.exceptions();
  std::vector<bool> seen(exc.size(), false);
  std::size_t cycles = 0;
  for (std::size_t k = 0; k < exc.size(); ++k) {
    if (seen[k]) continue;
    ++cycles;
    std::size_t cur = k;
    while (!seen[cur]) {
      seen[cur] = true;
      const Exception* next = find_source(exc, exc[cur].to);
      cur = static_cast<std::size_t>(next - exc.data());
    }
  }
  return (exc.size() - cycles) % 2 == 0 ? 1 : -1;
}

bool window_bijective(const Element& e) {
  Position max_t = 0;
  for (Position v : e.translations()) max_t = std::max(max_t, v < 0 ? -v : v);
  Position max_pos = 0;
  for (const Exception& x : e.exceptions()) max_pos = std::max({max_pos, x.from.pos, x.to.pos});
  const Position window = 1 + max_t + max_pos;

  std::vector<RayPoint> images;
  for (int i = 0; i < e.rays(); ++i) {
    for (Position k = 1; k <= window; ++k) {
      const Exception* ex = find_source(e.exceptions(), {i, k});
      RayPoint y = ex ? ex->to : RayPoint{i, k + e.translation(i)};
      if (y.pos < 1) return false;
      images.push_back(y);
    }
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  // Points beyond the window cover exactly (i, q) with q > window + t_i.
  std::vector<RayPoint> expected;
  for (int i = 0; i < e.rays(); ++i) {
    for (Position q = 1; q <= window + e.translation(i); ++q) expected.push_back({i, q});
  }
  return images == expected;
}

}  // namespace houghton
