#include "doctest.h"
#include "houghton/morphisms.hpp"
#include "houghton/words.hpp"
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

}  // namespace

TEST_CASE("evaluate") {
  CHECK(evaluate(Word{3, {}}) == Element::identity(3));
  CHECK(evaluate(parse_word("g(0,1) g(1,0)", 3)).is_identity());
  // g02^n g12^n g20^n g21^n with g20 = g02^-1.
  const Word w = parse_word("g(0,2)^2 g(1,2)^2 g(2,0)^2 g(2,1)^2", 3);
  CHECK(evaluate(w) == sigma_n(3, 2));
  CHECK(oracle::equals_word(sigma_n(3, 2), w));
  CHECK(code_of([] { letter_element(3, Letter::tau()); }) == ErrorCode::kTauOutsideH2);
}

TEST_CASE("inversion and free reduction") {
  CHECK(format_word(invert_word(parse_word("g(0,1) g(1,2)", 3))) == "g(2,1) g(1,0)");
  CHECK(free_reduce(parse_word("g(0,1) g(1,0)", 3)).empty());
  CHECK(format_word(free_reduce(parse_word("g(0,1) g(1,2) g(2,1)", 3))) == "g(0,1)");
  CHECK(free_reduce(parse_word("t t", 2)).empty());
  const GeneratingSet gens = GeneratingSet::make(GeneratingSetKind::kGij, 4);
  for (std::uint64_t s = 0; s < 500; ++s) {
    const Word u = random_word(gens, 20, s);
    const Word v = random_word(gens, 15, s + 7919);
    CHECK(evaluate(invert_word(u)) == inverse(evaluate(u)));
    CHECK(evaluate(free_reduce(u)) == evaluate(u));
    CHECK(evaluate(concat(u, v)) == evaluate(u) * evaluate(v));
  }
}

TEST_CASE("word grammar") {
  CHECK(parse_word("g(0,1)^2 t", 2).size() == 3);
  CHECK(parse_word("  g(0,1)^-3 ", 3) == parse_word("g(1,0) g(1,0) g(1,0)", 3));
  CHECK(code_of([] { parse_word("g(0,2)^3 t", 2); }) == ErrorCode::kRayOutOfRange);
  CHECK(code_of([] { parse_word("g(0,1) t", 3); }) == ErrorCode::kTauOutsideH2);
  CHECK(code_of([] { parse_word("g(0,0)", 3); }) == ErrorCode::kSameRay);
  CHECK(code_of([] { parse_word("g(0,1)^0", 3); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_word("g(0,1", 3); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_word("gg", 3); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_word("g(0,1)x", 3); }) == ErrorCode::kParse);
  try {
    parse_word("g(0,1) h", 3);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("offset 7") != std::string::npos);
  }
  for (const char* canonical : {"g(0,1)", "g(0,1)^2 t g(1,0)", "t t", "g(2,1)^17 g(1,2)"}) {
    const int n = std::string(canonical).find('t') != std::string::npos ? 2 : 3;
    CHECK(format_word(parse_word(canonical, n)) == canonical);
  }
}

TEST_CASE("generating sets") {
  CHECK(GeneratingSet::make(GeneratingSetKind::kGij, 3).letters.size() == 6);
  CHECK(GeneratingSet::make(GeneratingSetKind::kGij, 5).letters.size() == 20);
  CHECK(GeneratingSet::make(GeneratingSetKind::kGi, 4).letters.size() == 8);
  CHECK(GeneratingSet::make(GeneratingSetKind::kH2, 2).letters.size() == 3);
  CHECK(code_of([] { GeneratingSet::make(GeneratingSetKind::kH2, 3); }) == ErrorCode::kUnsupportedGeneratingSet);
  CHECK(code_of([] { GeneratingSet::make(GeneratingSetKind::kGi, 2); }) == ErrorCode::kUnsupportedGeneratingSet);
  for (auto kind : {GeneratingSetKind::kGij, GeneratingSetKind::kGi}) {
    const GeneratingSet gens = GeneratingSet::make(kind, 4);
    for (Letter l : gens.letters) {
      CHECK(std::find(gens.letters.begin(), gens.letters.end(), l.inverse()) != gens.letters.end());
    }
  }
}

TEST_CASE("random elements") {
  CHECK(random_element(3, 0, 17).is_identity());
  bool saw_finitary = false;
  bool saw_translation = false;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const Element e = random_element(3, 50, s);
    CHECK(complexity(e).total <= 50);
    saw_finitary = saw_finitary || (is_finitary(e) && !e.is_identity());
    saw_translation = saw_translation || complexity(e).translation >= 10;
  }
  CHECK(saw_finitary);
  CHECK(saw_translation);
  CHECK(random_element(4, 100, 5) == random_element(4, 100, 5));
}
