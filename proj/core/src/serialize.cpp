#include "houghton/serialize.hpp"

#include "json.hpp"

#include "houghton/words.hpp"

namespace houghton {

using nlohmann::json;

namespace {

json element_json(const Element& e) {
  json map = json::array();
  for (const Exception& x : e.exceptions()) {
    map.push_back({{x.from.ray, x.from.pos}, {x.to.ray, x.to.pos}});
  }
  return {{"n", e.rays()},
          {"t", std::vector<Position>(e.translations().begin(), e.translations().end())},
          {"map", std::move(map)}};
}

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::kBadRecord, msg); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    bad(err.what());
  }
}

std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

RayPoint point(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("a point is a [ray, pos] pair");
  const std::int64_t ray = integer(j[0], "ray");
  if (ray < 0 || ray > (1 << 20)) throw Error(ErrorCode::kRayOutOfRange, "ray " + std::to_string(ray));
  return {static_cast<int>(ray), integer(j[1], "pos")};
}

Element element_from_json(const json& j) {
  if (!j.is_object()) bad("element record must be an object");
  const std::int64_t n = integer(field(j, "n"), "n");
  if (n < 2 || n > (1 << 20)) throw Error(ErrorCode::kInvalidArgument, "ray count out of range");
  const json& tj = field(j, "t");
  if (!tj.is_array()) bad("t must be an array");
  std::vector<Position> t;
  for (const json& v : tj) t.push_back(integer(v, "translation"));
  const json& mj = field(j, "map");
  if (!mj.is_array()) bad("map must be an array");
  std::vector<Exception> exc;
  for (const json& pair : mj) {
    if (!pair.is_array() || pair.size() != 2) bad("map entries are [source, target] pairs");
    exc.push_back({point(pair[0]), point(pair[1])});
  }
  return Element::make(static_cast<int>(n), std::move(t), std::move(exc));
}

}  // namespace

std::string element_to_record(const Element& e) { return element_json(e).dump(); }

Element element_from_record(std::string_view text) { return element_from_json(parse_json(text)); }

std::string element_report_record(const Element& e) {
  json j = element_json(e);
  const auto profile = complexity(e);
  j["p"] = profile.p;
  j["P"] = profile.total;
  j["T"] = profile.translation;
  return j.dump();
}

std::string np_to_record(const NpElement& phi) {
  return json{{"p", phi.p()}, {"base", element_json(phi.base())}, {"blocks", phi.blocks()}}.dump();
}

NpElement np_from_record(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) bad("record must be an object");
  const std::int64_t p = integer(field(j, "p"), "p");
  if (p < 1 || p > (1 << 20)) throw Error(ErrorCode::kBadP, "p out of range");
  Element base = element_from_json(field(j, "base"));
  const json& bj = field(j, "blocks");
  if (!bj.is_array()) bad("blocks must be an array");
  std::vector<int> blocks;
  for (const json& v : bj) blocks.push_back(static_cast<int>(integer(v, "block")));
  if (base.rays() % p != 0) throw Error(ErrorCode::kSizeMismatch, "base ray count is not a multiple of p");
  const int n = base.rays() / static_cast<int>(p);
  return NpElement::make(n, static_cast<int>(p), std::move(base), std::move(blocks));
}

std::string synthesis_to_record(const SynthesisReport& report) {
  return json{{"word", format_word(report.word)},
              {"length", report.word.size()},
              {"P", report.complexity},
              {"bound", report.bound},
              {"phases", {report.rho_length, report.mu_length, report.sort_length}}}
      .dump();
}

}  // namespace houghton
