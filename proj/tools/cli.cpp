#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "houghton/experiments.hpp"
#include "houghton/metric.hpp"
#include "houghton/morphisms.hpp"
#include "houghton/serialize.hpp"
#include "houghton/words.hpp"

namespace houghton::cli {

namespace {

constexpr int kH2LengthCap = 12;
constexpr int kGijLengthCap = 7;
constexpr int kDistortionH2Cap = 16;

struct Common {
  int n = 3;
  std::string genset;
  int radius = 7;
  std::optional<int> cap;
  std::size_t element_cap = kDefaultElementCap;
  std::uint64_t seed = 1;
  std::string csv;
  std::string json;
};

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNeedThreeRays:
    case ErrorCode::kUnsupportedGeneratingSet:
      return kUnsupported;
    case ErrorCode::kBudget:
    case ErrorCode::kTooLarge:
      return kOverBudget;
    default:
      return kInputError;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

std::string trimmed(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// An element given as a record, a file holding a record or a word, or word
// text over n rays.
Element read_element(const std::string& input, int n) {
  std::string text = trimmed(input);
  if (!text.empty() && text.front() != '{' && text.find('(') == std::string::npos &&
      std::filesystem::is_regular_file(text)) {
    text = trimmed(slurp(text));
  }
  if (!text.empty() && text.front() == '{') return element_from_record(text);
  return evaluate(parse_word(text, n));
}

NpElement read_np(const std::string& input) {
  std::string text = trimmed(input);
  if (!text.empty() && text.front() != '{') text = trimmed(slurp(text));
  return np_from_record(text);
}

GeneratingSet genset_for(const Common& c, int n) {
  if (c.genset.empty()) {
    return GeneratingSet::make(n == 2 ? GeneratingSetKind::kH2 : GeneratingSetKind::kGij, n);
  }
  return GeneratingSet::make(parse_generating_set_kind(c.genset), n);
}

int emit(const ExperimentReport& report, const Common& c, std::ostream& out) {
  out << report.to_table();
  if (!c.csv.empty()) write_file(c.csv, report.to_csv());
  if (!c.json.empty()) write_file(c.json, report.to_json());
  return report.passed ? kOk : kCheckFailed;
}

void add_genset(CLI::App* cmd, Common& c) {
  cmd->add_option("--genset", c.genset, "generating set: gij, gi or h2 (default gij, h2 for n=2)")
      ->check(CLI::IsMember({"gij", "gi", "h2"}));
}

void add_outputs(CLI::App* cmd, Common& c) {
  cmd->add_option("--csv", c.csv, "also write the report as CSV to this path");
  cmd->add_option("--json", c.json, "also write the report as JSON to this path");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in Houghton groups H_n", "houghton"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "houghton 0.1.0");

  Common c;
  std::string input;
  std::function<int()> action;

  auto* eval = app.add_subcommand("eval", "evaluate a word and print the element record");
  eval->add_option("-n", c.n, "number of rays")->check(CLI::Range(2, 1 << 16));
  eval->add_option("word", input, "word text, e.g. \"g(0,1)^2 g(1,2)\"");
  eval->callback([&] {
    action = [&] {
      out << element_report_record(evaluate(parse_word(input, c.n))) << '\n';
      return int{kOk};
    };
  });

  auto* synth = app.add_subcommand("synth", "synthesize a word of length at most 7 P log2 P");
  synth->add_option("-n", c.n, "number of rays when the input is a word")->check(CLI::Range(2, 1 << 16));
  synth->add_option("element", input, "element record, file, or word")->required();
  add_outputs(synth, c);
  synth->callback([&] {
    action = [&] {
      const Element e = read_element(input, c.n);
      const SynthesisReport report = synthesize_word(e);
      const bool verified = evaluate(report.word) == e;
      const bool within = static_cast<std::int64_t>(report.word.size()) <= report.bound;
      std::string record = synthesis_to_record(report);
      record.pop_back();
      record += std::string(",\"verified\":") + (verified ? "true" : "false") +
                ",\"within_bound\":" + (within ? "true" : "false") + "}";
      out << record << '\n';
      if (!c.json.empty()) write_file(c.json, record + "\n");
      return verified && within ? int{kOk} : int{kCheckFailed};
    };
  });

  auto* length = app.add_subcommand("length", "exact word length by bidirectional search");
  length->add_option("-n", c.n, "number of rays when the input is a word")->check(CLI::Range(2, 1 << 16));
  length->add_option("element", input, "element record, file, or word")->required();
  add_genset(length, c);
  length->add_option("--cap", c.cap, "search levels per side (default 12 for h2, 7 otherwise)");
  length->add_option("--element-cap", c.element_cap, "maximum number of stored elements");
  length->callback([&] {
    action = [&] {
      const Element e = read_element(input, c.n);
      const GeneratingSet gens = genset_for(c, e.rays());
      const int cap = c.cap.value_or(gens.kind == GeneratingSetKind::kH2 ? kH2LengthCap : kGijLengthCap);
      const auto len = exact_length(e, gens, cap, c.element_cap);
      out << "{\"genset\":\"" << gens.name() << "\",\"P\":" << complexity(e).total << ",\"length\":";
      if (len) {
        out << *len;
      } else {
        out << "\"Unknown(" << cap << ")\"";
      }
      out << "}\n";
      return int{kOk};
    };
  });

  std::string dump;
  auto* ball = app.add_subcommand("ball", "breadth first ball with sphere sizes");
  ball->add_option("-n", c.n, "number of rays")->check(CLI::Range(2, 1 << 16));
  add_genset(ball, c);
  ball->add_option("--radius", c.radius, "ball radius")->check(CLI::NonNegativeNumber);
  ball->add_option("--cap", c.element_cap, "maximum number of elements");
  ball->add_option("--csv", c.csv, "write length,count rows to this path");
  ball->add_option("--dump", dump, "write element,length rows to this path");
  ball->callback([&] {
    action = [&] {
      const BallTable table = bfs_ball(c.n, genset_for(c, c.n), c.radius, c.element_cap);
      const std::string growth = table.growth_csv();
      out << growth;
      if (!c.csv.empty()) write_file(c.csv, growth);
      if (!dump.empty()) write_file(dump, table.dump_csv());
      return int{kOk};
    };
  });

  auto* growth = app.add_subcommand("growth", "ball growth report with the 2^r floor");
  growth->add_option("-n", c.n, "number of rays")->check(CLI::Range(2, 1 << 16));
  add_genset(growth, c);
  growth->add_option("--radius", c.radius, "ball radius")->check(CLI::NonNegativeNumber);
  growth->add_option("--cap", c.element_cap, "maximum number of elements");
  add_outputs(growth, c);
  growth->callback([&] {
    action = [&] {
      GrowthOptions opts;
      opts.n = c.n;
      opts.genset = genset_for(c, c.n).kind;
      opts.radius = c.radius;
      opts.cap = c.element_cap;
      return emit(growth_experiment(opts), c, out);
    };
  });

  DistortionOptions dist;
  dist.h2_cap = kDistortionH2Cap;
  auto* distortion = app.add_subcommand("distortion", "lengths of sigma_k in H_2 and H_3");
  distortion->add_option("--max-k", dist.max_k, "largest k searched exactly")->check(CLI::Range(1, 64));
  distortion->add_option("--cap", dist.h2_cap, "H_2 search levels per side")->check(CLI::NonNegativeNumber);
  distortion->add_option("--h3-cap", dist.h3_cap, "H_3 search levels per side")->check(CLI::NonNegativeNumber);
  distortion->add_option("--identity-k", dist.identity_k, "check the H_3 word identity up to this k")
      ->check(CLI::Range(1, 100000));
  distortion->add_option("--element-cap", dist.element_cap, "maximum number of stored elements");
  add_outputs(distortion, c);
  distortion->callback([&] { action = [&] { return emit(distortion_experiment(dist), c, out); }; });

  int cos_n = 3;
  int cos_p = 2;
  auto* cosets = app.add_subcommand("cosets", "index of U_p in H_n by coset enumeration");
  cosets->add_option("n", cos_n, "number of rays")->required()->check(CLI::Range(2, 64));
  cosets->add_option("p", cos_p, "exponent p")->required()->check(CLI::Range(1, 1 << 20));
  cosets->add_option("--seed", c.seed, "seed for the sampled subgroup elements");
  add_outputs(cosets, c);
  cosets->callback([&] { action = [&] { return emit(cosets_experiment(cos_n, cos_p, c.seed), c, out); }; });

  int p = 2;
  int pairs = 200;
  auto* split = app.add_subcommand("split", "split rays of U_p elements into H_{np}");
  split->add_option("element", input, "element to split (omit to run the homomorphism checks)");
  split->add_option("-n", c.n, "number of rays")->check(CLI::Range(2, 1 << 16));
  split->add_option("-p", p, "exponent p")->check(CLI::Range(1, 1 << 20));
  split->add_option("--seed", c.seed, "seed");
  split->add_option("--pairs", pairs, "number of random pairs")->check(CLI::Range(1, 1 << 20));
  add_outputs(split, c);
  split->callback([&] {
    action = [&] {
      if (!input.empty()) {
        out << element_report_record(split_rays(read_element(input, c.n), p)) << '\n';
        return int{kOk};
      }
      return emit(split_experiment(c.n, p, c.seed, pairs), c, out);
    };
  });

  std::string archetype = "all";
  std::int64_t distance = 50;
  auto* qi = app.add_subcommand("qi", "elements moved far by a commensuration");
  qi->add_option("phi", input, "NpElement record or file (omit to use --archetype)");
  qi->add_option("--archetype", archetype, "translate, swap, finitary or all")
      ->check(CLI::IsMember({"translate", "swap", "finitary", "all"}));
  qi->add_option("--distance", distance, "required distance N")->check(CLI::PositiveNumber);
  qi->add_option("-n", c.n, "number of rays")->check(CLI::Range(2, 1 << 16));
  qi->add_option("-p", p, "even exponent p")->check(CLI::Range(2, 1 << 20));
  add_outputs(qi, c);
  qi->callback([&] {
    action = [&] {
      if (input.empty()) return emit(qi_experiment(archetype, c.n, p, distance), c, out);
      const QiWitness w = qi_witness(read_np(input), distance);
      ExperimentReport report;
      report.experiment = "qi";
      report.params = {{"distance", std::to_string(distance)}};
      report.columns = {"case", "sigma", "certificate", "ok"};
      report.add_row({std::string(qi_case_name(w.which)), element_to_record(w.sigma),
                      std::to_string(w.certificate), w.certificate >= distance ? "yes" : "no"});
      report.passed = w.certificate >= distance;
      return emit(report, c, out);
    };
  });

  auto* cohopf = app.add_subcommand("check-cohopf", "doubling map and point stabilizer checks");
  cohopf->add_option("-n", c.n, "number of rays")->check(CLI::Range(2, 1 << 16));
  cohopf->add_option("--seed", c.seed, "seed");
  cohopf->add_option("--pairs", pairs, "number of random pairs")->check(CLI::Range(1, 1 << 20));
  add_outputs(cohopf, c);
  cohopf->callback([&] { action = [&] { return emit(cohopf_experiment(c.n, c.seed, pairs), c, out); }; });

  int max_length = 10;
  auto* free = app.add_subcommand("check-free", "positive words in g(0,1), g(0,2) are distinct");
  free->add_option("--max-length", max_length, "longest word")->check(CLI::Range(1, 22));
  add_outputs(free, c);
  free->callback([&] { action = [&] { return emit(free_experiment(max_length), c, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.code());
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kOverBudget;
  }
}

}  // namespace houghton::cli
