#include "doctest.h"
#include "houghton/serialize.hpp"
#include "houghton/words.hpp"
#include "json.hpp"

using namespace houghton;
using nlohmann::json;

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

TEST_CASE("element records") {
  CHECK(element_to_record(generator(3, 0, 1)) == R"({"map":[[[0,1],[1,1]]],"n":3,"t":[-1,1,0]})");
  CHECK(element_to_record(Element::identity(2)) == R"({"map":[],"n":2,"t":[0,0]})");
  CHECK(element_from_record(R"({"n":3,"t":[-1,1,0],"map":[[[0,1],[1,1]]]})") == generator(3, 0, 1));
  // Redundant entries and any order are accepted.
  CHECK(element_from_record(R"({"map":[[[2,1],[1,1]],[[0,3],[0,3]],[[1,1],[2,1]]],"t":[0,0,0],"n":3})") ==
        transposition(3, {1, 1}, {2, 1}));
  for (std::uint64_t s = 0; s < 300; ++s) {
    const Element e = random_element(3 + static_cast<int>(s % 3), 60, s);
    const std::string rec = element_to_record(e);
    CHECK(element_from_record(rec) == e);
    CHECK(element_to_record(element_from_record(rec)) == rec);
  }
}

TEST_CASE("report records carry the complexity profile") {
  const json j = json::parse(element_report_record(transposition(3, {0, 5}, {1, 1})));
  CHECK(j["P"] == 6);
  CHECK(j["T"] == 0);
  CHECK(j["p"] == json::array({5, 1, 0}));
  CHECK(element_from_record(j.dump()) == transposition(3, {0, 5}, {1, 1}));
}

TEST_CASE("malformed records") {
  CHECK(code_of([] { element_from_record("{"); }) == ErrorCode::kBadRecord);
  CHECK(code_of([] { element_from_record("[1,2]"); }) == ErrorCode::kBadRecord);
  CHECK(code_of([] { element_from_record(R"({"n":3,"t":[0,0,0]})"); }) == ErrorCode::kBadRecord);
  CHECK(code_of([] { element_from_record(R"({"n":"3","t":[0,0,0],"map":[]})"); }) == ErrorCode::kBadRecord);
  CHECK(code_of([] { element_from_record(R"({"n":3,"t":[0,0,0],"map":[[[0,1]]]})"); }) == ErrorCode::kBadRecord);
  CHECK(code_of([] { element_from_record(R"({"n":3,"t":[0,0.5,0],"map":[]})"); }) == ErrorCode::kBadRecord);
  CHECK(code_of([] { element_from_record(R"({"n":3,"t":[1,0,0],"map":[]})"); }) == ErrorCode::kZeroSumViolation);
  CHECK(code_of([] { element_from_record(R"({"n":3,"t":[0,0],"map":[]})"); }) == ErrorCode::kSizeMismatch);
  CHECK(code_of([] { element_from_record(R"({"n":3,"t":[0,0,0],"map":[[[0,1],[0,2]]]})"); }) ==
        ErrorCode::kNotBijective);
  CHECK(code_of([] { element_from_record(R"({"n":3,"t":[0,0,0],"map":[[[-1,1],[0,1]]]})"); }) ==
        ErrorCode::kRayOutOfRange);
}

TEST_CASE("commensuration records") {
  for (const NpElement& phi : {NpElement::translate_archetype(3, 2), NpElement::swap_archetype(3, 2),
                               NpElement::finitary_archetype(4, 2)}) {
    const std::string rec = np_to_record(phi);
    CHECK(np_from_record(rec) == phi);
  }
  const json j = json::parse(np_to_record(NpElement::swap_archetype(3, 2)));
  CHECK(j["p"] == 2);
  CHECK(j["blocks"] == json::array({2, 3, 0, 1, 4, 5}));
  CHECK(code_of([] { np_from_record(R"({"p":2,"blocks":[0,1,2,3,4,5]})"); }) == ErrorCode::kBadRecord);
  CHECK(code_of([] {
          np_from_record(R"({"p":2,"base":{"n":5,"t":[0,0,0,0,0],"map":[]},"blocks":[0,1,2,3,4]})");
        }) == ErrorCode::kSizeMismatch);
}

TEST_CASE("synthesis records") {
  const SynthesisReport rep = synthesize_word(transposition(3, {0, 1}, {1, 1}));
  const json j = json::parse(synthesis_to_record(rep));
  CHECK(j["length"] == rep.word.size());
  CHECK(j["P"] == 2);
  CHECK(j["bound"] == 14);
  CHECK(evaluate(parse_word(j["word"].get<std::string>(), 3)) == transposition(3, {0, 1}, {1, 1}));
  CHECK(j["phases"].size() == 3);
}
