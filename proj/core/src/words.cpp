#include "houghton/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <random>
#include <sstream>

namespace houghton {

void check_letter(int n, Letter letter) {
  if (letter.is_tau()) {
    if (n != 2) throw Error(ErrorCode::kTauOutsideH2, "tau is only a generator of H_2");
    return;
  }
  if (letter.from < 0 || letter.from >= n || letter.to < 0 || letter.to >= n) {
    throw Error(ErrorCode::kRayOutOfRange, "g(" + std::to_string(letter.from) + "," +
                                               std::to_string(letter.to) + ") with " +
                                               std::to_string(n) + " rays");
  }
  if (letter.from == letter.to) {
    throw Error(ErrorCode::kSameRay, "g(" + std::to_string(letter.from) + "," +
                                         std::to_string(letter.to) + ")");
  }
}

Element letter_element(int n, Letter letter) {
  check_letter(n, letter);
  if (letter.is_tau()) return transposition(2, {0, 1}, {1, 1});
  return generator(n, letter.from, letter.to);
}

Word concat(const Word& u, const Word& v) {
  if (u.n != v.n) throw Error(ErrorCode::kRayCountMismatch, "concatenating words over different ray counts");
  Word w{u.n, u.letters};
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

Word power(int n, Letter letter, std::int64_t exponent) {
  check_letter(n, letter);
  Word w{n, {}};
  const Letter l = exponent < 0 ? letter.inverse() : letter;
  const std::int64_t count = exponent < 0 ? -exponent : exponent;
  w.letters.assign(static_cast<std::size_t>(count), l);
  return w;
}

Element evaluate(const Word& w) {
  if (w.empty()) return Element::identity(w.n);
  std::map<Letter, Element> cache;
  std::vector<Element> level;
  level.reserve(w.size());
  for (Letter l : w.letters) {
    auto it = cache.find(l);
    if (it == cache.end()) it = cache.emplace(l, letter_element(w.n, l)).first;
    level.push_back(it->second);
  }
  // Balanced product tree keeps intermediate supports proportional to the
  // length of the subword they come from.
  while (level.size() > 1) {
    std::vector<Element> next;
    next.reserve(level.size() / 2 + 1);
    for (std::size_t k = 0; k + 1 < level.size(); k += 2) next.push_back(level[k] * level[k + 1]);
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

Word invert_word(const Word& w) {
  Word out{w.n, {}};
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(it->inverse());
  return out;
}

Word free_reduce(const Word& w) {
  Word out{w.n, {}};
  for (Letter l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == l.inverse()) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

namespace {

class WordScanner {
 public:
  WordScanner(std::string_view text, int n) : text_(text), n_(n) {}

  Word run() {
    Word w{n_, {}};
    skip_space();
    while (pos_ < text_.size()) {
      const std::size_t start = pos_;
      if (text_[pos_] == 't') {
        ++pos_;
        expect_token_end(start);
        checked(Letter::tau(), start);
        w.letters.push_back(Letter::tau());
      } else if (text_[pos_] == 'g') {
        ++pos_;
        expect('(', start);
        const int i = static_cast<int>(integer(start));
        expect(',', start);
        const int j = static_cast<int>(integer(start));
        expect(')', start);
        std::int64_t exponent = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          exponent = integer(start);
          if (exponent == 0) fail(start, "exponent must be nonzero");
        }
        expect_token_end(start);
        const Letter l = Letter::g(i, j);
        checked(l, start);
        const Word run = power(n_, l, exponent);
        w.letters.insert(w.letters.end(), run.letters.begin(), run.letters.end());
      } else {
        fail(start, "unexpected character '" + std::string(1, text_[pos_]) + "'");
      }
      skip_space();
    }
    return w;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw Error(ErrorCode::kParse, "at offset " + std::to_string(at) + ": " + msg);
  }

  void checked(Letter l, std::size_t at) const {
    try {
      check_letter(n_, l);
    } catch (const Error& e) {
      throw Error(e.code(), "at offset " + std::to_string(at) + ": " + e.what());
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c, std::size_t start) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(start, std::string("expected '") + c + "' at offset " + std::to_string(pos_));
    }
    ++pos_;
  }

  void expect_token_end(std::size_t start) {
    if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      fail(start, "trailing characters in token");
    }
  }

  std::int64_t integer(std::size_t start) {
    std::int64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) fail(start, "expected an integer at offset " + std::to_string(pos_));
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "ray count must be at least 2");
  return WordScanner(text, n).run();
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < w.size();) {
    const Letter l = w.letters[k];
    std::size_t run = 1;
    if (!l.is_tau()) {
      while (k + run < w.size() && w.letters[k + run] == l) ++run;
    }
    if (!first) out << ' ';
    first = false;
    if (l.is_tau()) {
      out << 't';
    } else {
      out << "g(" << l.from << ',' << l.to << ')';
      if (run > 1) out << '^' << run;
    }
    k += run;
  }
  return out.str();
}

GeneratingSet GeneratingSet::make(GeneratingSetKind kind, int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "ray count must be at least 2");
  GeneratingSet gens{kind, n, {}};
  switch (kind) {
    case GeneratingSetKind::kGij:
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i != j) gens.letters.push_back(Letter::g(i, j));
        }
      }
      break;
    case GeneratingSetKind::kGi:
      if (n < 3) {
        throw Error(ErrorCode::kUnsupportedGeneratingSet, "the g_i set needs at least 3 rays");
      }
      for (int i = 0; i < n; ++i) {
        gens.letters.push_back(Letter::g(i, (i + 1) % n));
        gens.letters.push_back(Letter::g((i + 1) % n, i));
      }
      break;
    case GeneratingSetKind::kH2:
      if (n != 2) throw Error(ErrorCode::kUnsupportedGeneratingSet, "the h2 set needs exactly 2 rays");
      gens.letters = {Letter::g(0, 1), Letter::g(1, 0), Letter::tau()};
      break;
  }
  return gens;
}

std::string_view GeneratingSet::name() const {
  switch (kind) {
    case GeneratingSetKind::kGij: return "gij";
    case GeneratingSetKind::kGi: return "gi";
    case GeneratingSetKind::kH2: return "h2";
  }
  return "?";
}

GeneratingSetKind parse_generating_set_kind(std::string_view name) {
  if (name == "gij") return GeneratingSetKind::kGij;
  if (name == "gi") return GeneratingSetKind::kGi;
  if (name == "h2") return GeneratingSetKind::kH2;
  throw Error(ErrorCode::kInvalidArgument, "unknown generating set '" + std::string(name) + "'");
}

Element random_element(int n, std::int64_t budget, std::uint64_t seed) {
  if (budget < 0) throw Error(ErrorCode::kInvalidArgument, "negative complexity budget");
  Element::identity(n);  // validates n
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };

  // Mode 0: finitary only; 1: translations only; 2: both.
  const int mode = static_cast<int>(uniform(0, 2));
  const std::int64_t max_depth = budget / (2 * n);
  const std::int64_t depth = mode == 1 ? 0 : uniform(0, max_depth);
  const std::int64_t shift = mode == 0 ? 0 : uniform(0, budget / 2);

  std::vector<RayPoint> grid;
  for (int i = 0; i < n; ++i) {
    for (std::int64_t k = 1; k <= depth; ++k) grid.push_back({i, k});
  }
  std::vector<RayPoint> images = grid;
  std::shuffle(images.begin(), images.end(), rng);
  std::vector<Exception> exc;
  exc.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) exc.push_back({grid[k], images[k]});
  Element prefix = Element::make(n, std::vector<Position>(static_cast<std::size_t>(n), 0), std::move(exc));

  // Each letter g(j,i) with j a source and i a sink adds one unit of
  // translation, and raises complexity by at most one.
  std::vector<int> rays(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rays[static_cast<std::size_t>(i)] = i;
  std::shuffle(rays.begin(), rays.end(), rng);
  const auto sinks = static_cast<std::size_t>(uniform(1, n - 1));
  Word w{n, {}};
  for (std::int64_t k = 0; k < shift; ++k) {
    const int sink = rays[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(sinks) - 1))];
    const int source = rays[static_cast<std::size_t>(uniform(static_cast<std::int64_t>(sinks), n - 1))];
    w.letters.push_back(Letter::g(source, sink));
  }
  Element result = prefix * evaluate(w);
  if (complexity(result).total > budget) {
    throw Error(ErrorCode::kInvalidArgument, "random element exceeded its complexity budget");
  }
  return result;
}

Word random_word(const GeneratingSet& gens, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.letters.size() - 1);
  Word w{gens.n, {}};
  w.letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) w.letters.push_back(gens.letters[pick(rng)]);
  return w;
}

}  // namespace houghton
