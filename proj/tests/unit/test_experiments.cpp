#include "doctest.h"
#include "houghton/experiments.hpp"
#include "json.hpp"

using namespace houghton;
using nlohmann::json;

TEST_CASE("growth report") {
  const ExperimentReport r = growth_experiment({3, GeneratingSetKind::kGij, 5});
  CHECK(r.passed);
  REQUIRE(r.rows.size() == 6);
  const std::vector<std::string> spheres{"1", "6", "24", "93", "351", "1280"};
  for (std::size_t i = 0; i < spheres.size(); ++i) CHECK(r.rows[i][1] == spheres[i]);
  CHECK(r.rows[5][2] == "1755");
  CHECK(r.rows[0][3] == "-");
  CHECK(r.rows[1][3] == "7.0000");
  CHECK(r.to_csv().rfind("r,sphere,ball,ratio,floor_2^r,floor_ok\n0,1,1,-,1,yes\n", 0) == 0);
}

TEST_CASE("reports are deterministic") {
  const ExperimentReport a = growth_experiment({3, GeneratingSetKind::kGij, 4});
  const ExperimentReport b = growth_experiment({3, GeneratingSetKind::kGij, 4});
  CHECK(a.to_json() == b.to_json());
  CHECK(a.checksum() == b.checksum());
  CHECK(a.checksum().size() == 16);
  CHECK(growth_experiment({3, GeneratingSetKind::kGi, 4}).checksum() != a.checksum());
  CHECK(split_experiment(3, 2, 5, 20).to_json() == split_experiment(3, 2, 5, 20).to_json());

  const json j = json::parse(a.to_json());
  CHECK(j["experiment"] == "growth");
  CHECK(j["passed"] == true);
  CHECK(j["checksum"] == a.checksum());
  CHECK(j["params"]["genset"] == "gij");
  CHECK(j["rows"].size() == 5);
}

TEST_CASE("checksum covers the body") {
  ExperimentReport r;
  r.experiment = "x";
  r.columns = {"a"};
  r.add_row({"1"});
  const std::string before = r.checksum();
  r.rows[0][0] = "2";
  CHECK(r.checksum() != before);
  CHECK_THROWS_AS(r.add_row({"1", "2"}), Error);
}

TEST_CASE("csv quoting") {
  ExperimentReport r;
  r.columns = {"a", "b"};
  r.add_row({"x,y", "say \"hi\""});
  CHECK(r.to_csv() == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
  CHECK(r.to_table().find("# PASS checksum=") != std::string::npos);
}

TEST_CASE("distortion report") {
  DistortionOptions opts;
  opts.max_k = 2;
  opts.identity_k = 10;
  const ExperimentReport r = distortion_experiment(opts);
  CHECK(r.passed);
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0][1] == "1");
  CHECK(r.rows[1][1] == "12");
  CHECK(r.rows[1][3] == "8");
  CHECK(r.rows[1][5] == "7");

  opts.h2_cap = 3;
  CHECK_FALSE(distortion_experiment(opts).passed);
}

TEST_CASE("morphism reports") {
  CHECK(split_experiment(3, 2, 1, 50).passed);
  CHECK(split_experiment(4, 2, 1, 50).passed);
  CHECK(cohopf_experiment(3, 1, 50).passed);
  CHECK(free_experiment(8).passed);
  const ExperimentReport qi = qi_experiment("all", 3, 2, 50);
  CHECK(qi.passed);
  CHECK(qi.rows.size() == 3);
}

TEST_CASE("coset reports") {
  const ExperimentReport ok = cosets_experiment(3, 3, 1);
  CHECK(ok.passed);
  CHECK(ok.rows[0][2] == "9");
  CHECK(cosets_experiment(4, 2, 1).passed);
  // The even-p formula overcounts when n is odd and p = 2 mod 4.
  const ExperimentReport bad = cosets_experiment(3, 2, 1);
  CHECK_FALSE(bad.passed);
  CHECK(bad.rows[0][2] == "4");
  CHECK(bad.rows[0][3] == "8");
  CHECK(cosets_experiment(2, 3, 1).rows[0][3] == "-");
}
