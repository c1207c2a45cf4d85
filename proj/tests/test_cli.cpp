#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "prym/cli.hpp"

using prym::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify exit codes") {
  const Run ok = cli({"verify", "--p", "3", "--r", "4", "--format", "json"});
  CHECK(ok.code == 0);
  const auto doc = nlohmann::json::parse(ok.out);
  CHECK(doc["verdict"] == "Deterministic");
  bool found = false;
  for (const auto& c : doc["claims"]) found = found || c["statement"] == "End = Z[zeta_3]";
  CHECK(found);
  CHECK(doc["run_config"]["samples"] == 2000);
  CHECK(doc["run_config"]["command"] == "verify");

  const Run descent = cli({"verify", "--p", "5", "--r", "4", "--format", "json"});
  CHECK(descent.code == 2);
  CHECK(nlohmann::json::parse(descent.out)["failed_premise"].get<std::string>().find("condition (3)") != std::string::npos);

  const Run sampled = cli({"verify", "--p", "3", "--r", "2", "--samples", "300"});
  CHECK(sampled.code == 2);
  CHECK(sampled.out.find("verdict: Probabilistic") != std::string::npos);

  CHECK(cli({"verify", "--p", "4", "--r", "2"}).code == 3);
  CHECK(cli({"verify", "--p", "3"}).code == 3);
  CHECK(cli({"verify", "--p", "3", "--r", "4", "--samples", "3"}).code == 3);
  CHECK(cli({"verify", "--p", "x", "--r", "4"}).code == 3);
  CHECK(cli({}).code == 3);
  CHECK(cli({"frobnicate"}).code == 3);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("output is byte-identical across runs") {
  const Run a = cli({"verify", "--p", "3", "--r", "4", "--format", "json", "--samples", "500"});
  const Run b = cli({"verify", "--p", "3", "--r", "4", "--format", "json", "--samples", "500"});
  CHECK(a.out == b.out);
  const Run s1 = cli({"galois", "--m", "5", "--mode", "sample", "--samples", "300", "--seed", "9", "--format", "json"});
  const Run s2 = cli({"galois", "--m", "5", "--mode", "sample", "--samples", "300", "--seed", "9", "--format", "json"});
  CHECK(s1.out == s2.out);
}

TEST_CASE("scan") {
  const Run csv = cli({"scan", "--p-max", "5", "--r-max", "4"});
  CHECK(csv.code == 0);
  CHECK(csv.out ==
        "p,r,m,cond1,cond2,cond3,det_eligible,dim_prym\n"
        "3,2,5,true,true,true,false,5\n"
        "3,4,11,true,false,true,true,11\n"
        "5,2,9,true,true,true,true,18\n"
        "5,4,19,false,false,false,true,38\n");
  const Run json = cli({"scan", "--p-max", "5", "--r-max", "4", "--format", "json"});
  CHECK(nlohmann::json::parse(json.out)["rows"].size() == 4);
  const Run text = cli({"scan", "--p-max", "3", "--r-max", "2", "--format", "text"});
  CHECK(text.out.find("pass") != std::string::npos);
  CHECK(cli({"scan", "--p-max", "1", "--r-max", "4"}).code == 3);
}

TEST_CASE("galois") {
  CHECK(cli({"galois", "--m", "11", "--c", "1", "--mode", "certify"}).code == 0);
  const Run consistent = cli({"galois", "--poly", "x^6-x^2-1", "--mode", "sample", "--samples", "2000", "--format", "json"});
  CHECK(consistent.code == 2);
  const auto doc = nlohmann::json::parse(consistent.out);
  CHECK(doc["verdict"] == "ConsistentWith");
  CHECK(doc["target"] == "W(D_3)");
  const Run refuted = cli({"galois", "--poly", "x^6-x-1", "--mode", "sample", "--format", "json"});
  CHECK(refuted.code == 1);
  CHECK(nlohmann::json::parse(refuted.out)["verdict"] == "Refuted");
  CHECK(cli({"galois", "--poly", "x^6-x^2-1", "--mode", "certify", "--samples", "200"}).code == 2);
  CHECK(cli({"galois", "--poly", "x^6 - x - 1", "--mode", "certify"}).code == 3);
  CHECK(cli({"galois", "--poly", "x^^6", "--mode", "sample"}).code == 3);
  CHECK(cli({"galois", "--poly", "x^5-x-1", "--mode", "sample"}).code == 3);
  CHECK(cli({"galois", "--m", "11", "--mode", "sample"}).code == 3);
  CHECK(cli({"galois", "--mode", "bogus", "--m", "5"}).code == 3);
}

TEST_CASE("invariants") {
  const Run table = cli({"invariants", "--p", "3", "--r", "2", "--format", "json"});
  CHECK(table.code == 0);
  const auto doc = nlohmann::json::parse(table.out);
  CHECK(doc["multiplicities"] == nlohmann::json{{"1", 1}, {"2", 4}});
  CHECK(doc["gcd"] == 1);
  const Run odd = cli({"invariants", "--p", "3", "--r", "3"});
  CHECK(odd.code == 0);
  CHECK(odd.out.find("gcd: 2") != std::string::npos);
  CHECK(odd.out.find("r odd: coprimality fails") != std::string::npos);
  CHECK(cli({"invariants", "--p", "2", "--r", "2"}).code == 3);
}

TEST_CASE("replay from a written certificate") {
  const auto dir = std::filesystem::temp_directory_path() / "prymcert-test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "cert.json").string();
  CHECK(cli({"verify", "--p", "3", "--r", "4", "--out", path, "--samples", "300"}).code == 0);
  CHECK(cli({"replay", path}).code == 0);
  std::ifstream in(path);
  auto doc = nlohmann::json::parse(in);
  in.close();
  doc["claim"] = "something else";
  std::ofstream(path) << doc.dump();
  const Run bad = cli({"replay", path});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("field claim") != std::string::npos);
  CHECK(cli({"replay", (dir / "missing.json").string()}).code == 3);
  std::filesystem::remove_all(dir);
}
