#include "houghton/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "houghton/metric.hpp"
#include "houghton/morphisms.hpp"
#include "houghton/serialize.hpp"
#include "json.hpp"

namespace houghton {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json body_json(const ExperimentReport& r) {
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return {{"experiment", r.experiment},
          {"params", std::move(params)},
          {"columns", r.columns},
          {"rows", r.rows},
          {"passed", r.passed}};
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

void ExperimentReport::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw Error(ErrorCode::kInvalidArgument, "row width differs from header");
  rows.push_back(std::move(row));
}

std::string ExperimentReport::checksum() const {
  const std::string text = body_json(*this).dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ExperimentReport::to_table() const {
  std::ostringstream out;
  out << "# " << experiment;
  for (const auto& [k, v] : params) out << ' ' << k << '=' << v;
  out << '\n';
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    width[c] = columns[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << "  ";
      out << cells[c];
      if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size(), ' ');
    }
    out << '\n';
  };
  line(columns);
  for (const auto& row : rows) line(row);
  out << "# " << (passed ? "PASS" : "FAIL") << " checksum=" << checksum() << '\n';
  return out.str();
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << csv_cell(columns[c]);
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
    out << '\n';
  }
  return out.str();
}

std::string ExperimentReport::to_json() const {
  ordered_json j = body_json(*this);
  j["checksum"] = checksum();
  return j.dump(2) + "\n";
}

ExperimentReport growth_experiment(const GrowthOptions& opts) {
  const GeneratingSet gens = GeneratingSet::make(opts.genset, opts.n);
  const BallTable ball = bfs_ball(opts.n, gens, opts.radius, opts.cap);
  ExperimentReport report;
  report.experiment = "growth";
  report.params = {{"n", std::to_string(opts.n)},
                   {"genset", std::string(gens.name())},
                   {"radius", std::to_string(opts.radius)}};
  report.columns = {"r", "sphere", "ball", "ratio", "floor_2^r", "floor_ok"};
  const auto spheres = ball.sphere_sizes();
  std::size_t total = 0;
  std::size_t previous = 0;
  for (std::size_t r = 0; r < spheres.size(); ++r) {
    total += spheres[r];
    const std::size_t floor = std::size_t{1} << r;
    const bool floor_ok = total >= floor;
    const bool increasing = r == 0 || total > previous;
    report.passed = report.passed && floor_ok && increasing;
    report.add_row({std::to_string(r), std::to_string(spheres[r]), std::to_string(total),
                    r == 0 ? "-" : fixed(static_cast<double>(total) / static_cast<double>(previous), 4),
                    std::to_string(floor), yes_no(floor_ok)});
    previous = total;
  }
  return report;
}

ExperimentReport distortion_experiment(const DistortionOptions& opts) {
  if (opts.max_k < 1) throw Error(ErrorCode::kInvalidArgument, "max_k must be at least 1");
  const GeneratingSet h2 = GeneratingSet::make(GeneratingSetKind::kH2, 2);
  const GeneratingSet h3 = GeneratingSet::make(GeneratingSetKind::kGij, 3);
  ExperimentReport report;
  report.experiment = "distortion";

  // sigma_k = g02^k g12^k g02^-k g12^-k in H_3, a word of length 4k.
  bool identity_ok = true;
  const int checked = std::max(opts.identity_k, opts.max_k);
  for (int k = 1; k <= checked; ++k) {
    Word w{3, {}};
    for (const Word& part : {power(3, Letter::g(0, 2), k), power(3, Letter::g(1, 2), k),
                             power(3, Letter::g(0, 2), -k), power(3, Letter::g(1, 2), -k)}) {
      w = concat(w, part);
    }
    identity_ok = identity_ok && w.size() == static_cast<std::size_t>(4 * k) && evaluate(w) == sigma_n(3, k);
  }
  report.params = {{"max_k", std::to_string(opts.max_k)},
                   {"h2_cap", std::to_string(opts.h2_cap)},
                   {"h3_cap", std::to_string(opts.h3_cap)},
                   {"identity_k", std::to_string(checked)},
                   {"identity_ok", yes_no(identity_ok)}};
  report.columns = {"k", "h2_length", "h2_length_over_k", "h3_word_length", "h3_lower_bound", "h3_exact"};

  bool superlinear = true;
  double last_ratio = 0.0;
  for (int k = 1; k <= opts.max_k; ++k) {
    const auto h2_len = exact_length(sigma_n(2, k), h2, opts.h2_cap, opts.element_cap);
    const auto h3_len = exact_length(sigma_n(3, k), h3, opts.h3_cap, opts.element_cap);
    std::string ratio = "-";
    if (h2_len) {
      const double r = static_cast<double>(*h2_len) / k;
      superlinear = superlinear && (k == 1 || r > last_ratio);
      last_ratio = r;
      ratio = fixed(r, 4);
    } else {
      superlinear = false;
    }
    if (k == 1 && h2_len != 1) superlinear = false;
    report.add_row({std::to_string(k),
                    h2_len ? std::to_string(*h2_len) : "unknown>" + std::to_string(2 * opts.h2_cap), ratio,
                    std::to_string(4 * k), std::to_string(complexity(sigma_n(3, k)).total),
                    h3_len ? std::to_string(*h3_len) : "unknown>" + std::to_string(2 * opts.h3_cap)});
  }
  report.passed = identity_ok && superlinear;
  return report;
}

ExperimentReport cosets_experiment(int n, int p, std::uint64_t seed) {
  const std::int64_t index = up_index(n, p, seed);
  ExperimentReport report;
  report.experiment = "cosets";
  report.params = {{"n", std::to_string(n)}, {"p", std::to_string(p)}, {"seed", std::to_string(seed)}};
  report.columns = {"n", "p", "index", "formula", "match"};
  std::string formula = "-";
  std::string match = "-";
  if (n >= 3) {
    std::int64_t expected = p % 2 == 0 ? 2 : 1;
    for (int i = 0; i + 1 < n; ++i) expected *= p;
    formula = std::to_string(expected);
    match = yes_no(expected == index);
    report.passed = expected == index;
  }
  report.add_row({std::to_string(n), std::to_string(p), std::to_string(index), formula, match});
  return report;
}

ExperimentReport split_experiment(int n, int p, std::uint64_t seed, int pairs) {
  ExperimentReport report;
  report.experiment = "split";
  report.params = {{"n", std::to_string(n)},
                   {"p", std::to_string(p)},
                   {"seed", std::to_string(seed)},
                   {"pairs", std::to_string(pairs)}};
  report.columns = {"check", "samples", "failures"};
  int hom = 0;
  int equal_t = 0;
  int injective = 0;
  int round_trip = 0;
  for (int k = 0; k < pairs; ++k) {
    const Element a = random_up_element(n, p, seed + 2 * static_cast<std::uint64_t>(k));
    const Element b = random_up_element(n, p, seed + 2 * static_cast<std::uint64_t>(k) + 1);
    const Element sa = split_rays(a, p);
    const Element sb = split_rays(b, p);
    const Element sab = split_rays(a * b, p);
    if (sab != sa * sb) ++hom;
    for (const Element* img : {&sa, &sb, &sab}) {
      for (int i = 0; i < n; ++i) {
        for (int r = 1; r < p; ++r) {
          if (img->translation(i * p + r) != img->translation(i * p)) {
            ++equal_t;
            goto next_image;
          }
        }
      }
    next_image:;
    }
    if (!a.is_identity() && sa.is_identity()) ++injective;
    if (unsplit_rays(sa, p) != a) ++round_trip;
  }
  report.add_row({"homomorphism", std::to_string(pairs), std::to_string(hom)});
  report.add_row({"equal_translations_on_classes", std::to_string(3 * pairs), std::to_string(equal_t)});
  report.add_row({"nontrivial_image", std::to_string(pairs), std::to_string(injective)});
  report.add_row({"unsplit_round_trip", std::to_string(pairs), std::to_string(round_trip)});
  report.passed = hom == 0 && equal_t == 0 && injective == 0 && round_trip == 0;
  return report;
}

ExperimentReport qi_experiment(const std::string& archetype, int n, int p, std::int64_t distance) {
  std::vector<std::string> names;
  if (archetype == "all") {
    names = {"translate", "swap", "finitary"};
  } else if (archetype == "translate" || archetype == "swap" || archetype == "finitary") {
    names = {archetype};
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown archetype '" + archetype + "'");
  }
  ExperimentReport report;
  report.experiment = "qi";
  report.params = {{"archetype", archetype},
                   {"n", std::to_string(n)},
                   {"p", std::to_string(p)},
                   {"distance", std::to_string(distance)}};
  report.columns = {"archetype", "case", "sigma", "certificate", "ok"};
  for (const std::string& name : names) {
    const NpElement phi = name == "translate" ? NpElement::translate_archetype(n, p)
                          : name == "swap"    ? NpElement::swap_archetype(n, p)
                                              : NpElement::finitary_archetype(n, p);
    const QiWitness w = qi_witness(phi, distance);
    const bool ok = w.certificate >= distance;
    report.passed = report.passed && ok;
    report.add_row({name, std::string(qi_case_name(w.which)), element_to_record(w.sigma),
                    std::to_string(w.certificate), yes_no(ok)});
  }
  return report;
}

ExperimentReport cohopf_experiment(int n, std::uint64_t seed, int pairs) {
  ExperimentReport report;
  report.experiment = "check-cohopf";
  report.params = {{"n", std::to_string(n)}, {"seed", std::to_string(seed)}, {"pairs", std::to_string(pairs)}};
  report.columns = {"check", "samples", "failures"};
  int hom = 0;
  int trip = 0;
  int stab_hom = 0;
  int stab_fix = 0;
  int stab_nontrivial = 0;
  for (int k = 0; k < pairs; ++k) {
    const std::uint64_t s = seed + 2 * static_cast<std::uint64_t>(k);
    const Element a = random_element(n, 30, s);
    const Element b = random_element(n, 30, s + 1);
    const Element fa = cohopf_double(a);
    if (cohopf_double(a * b) != fa * cohopf_double(b)) ++hom;
    const auto pre = is_in_double_image(fa);
    if (!pre || *pre != a) ++trip;
    const RayPoint q{static_cast<int>(s % static_cast<std::uint64_t>(n)), static_cast<Position>(1 + s % 7)};
    const Element ea = stabilizer_embed(a, q);
    if (stabilizer_embed(a * b, q) != ea * stabilizer_embed(b, q)) ++stab_hom;
    if (ea.apply(q) != q) ++stab_fix;
    if (!a.is_identity() && ea.is_identity()) ++stab_nontrivial;
  }
  const bool witness_rejected = !is_in_double_image(transposition(n, {0, 2}, {0, 3}));
  const bool identity_in_image = is_in_double_image(Element::identity(n)).has_value();
  report.add_row({"double_homomorphism", std::to_string(pairs), std::to_string(hom)});
  report.add_row({"double_round_trip", std::to_string(pairs), std::to_string(trip)});
  report.add_row({"non_image_witness_rejected", "1", witness_rejected ? "0" : "1"});
  report.add_row({"identity_in_image", "1", identity_in_image ? "0" : "1"});
  report.add_row({"stabilizer_homomorphism", std::to_string(pairs), std::to_string(stab_hom)});
  report.add_row({"stabilizer_fixes_point", std::to_string(pairs), std::to_string(stab_fix)});
  report.add_row({"stabilizer_nontrivial_image", std::to_string(pairs), std::to_string(stab_nontrivial)});
  report.passed = hom == 0 && trip == 0 && witness_rejected && identity_in_image && stab_hom == 0 &&
                  stab_fix == 0 && stab_nontrivial == 0;
  return report;
}

ExperimentReport free_experiment(int max_length) {
  const FreeSemigroupResult r = free_semigroup_check(max_length);
  ExperimentReport report;
  report.experiment = "check-free";
  report.params = {{"max_length", std::to_string(max_length)}};
  report.columns = {"max_length", "words", "distinct", "free"};
  report.add_row({std::to_string(max_length), std::to_string(r.words), std::to_string(r.distinct), yes_no(r.free)});
  report.passed = r.free;
  return report;
}

}  // namespace houghton
