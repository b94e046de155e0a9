#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "corpus.hpp"
#include "stralg/cli.hpp"

using stralg::cli::execute;
using testsupport::data_path;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = execute(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  auto r = run(args);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == stralg::cli::kSchemaVersion);
  CHECK(j["exit_code"] == r.code);
  return j;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(run({"validate", data_path("lambda3.alg")}).code == 0);
  auto r = run({"validate", data_path("bad_loop.alg")});
  CHECK(r.code == 1);
  CHECK(r.out.find("III") != std::string::npos);
  auto j = run_json({"validate", data_path("gamma.alg")});
  CHECK(j["is_string_algebra"] == true);
  CHECK(j["is_gentle"] == false);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"validate", data_path("missing.alg")}).code == 2);
  CHECK(run({"check-string-brick", data_path("lambda3.alg"), "b2 a1"}).code == 2);
  CHECK(run({"check-string-brick", data_path("lambda3.alg"), "b1", "--method", "magic"}).code == 2);
  CHECK(run({"strings", data_path("lambda3.alg"), "--max-len", "99"}).code == 3);
}

TEST_CASE("string and band bricks") {
  auto a = run({"check-string-brick", data_path("lambda3.alg"), "b1 a1'", "--method", "all"});
  CHECK(a.code == 0);
  auto ab = run({"check-string-brick", data_path("lambda3.alg"), "b1 a1' a2' b2"});
  CHECK(ab.code == 1);
  auto l2 = run({"check-band-brick", data_path("lambda3.alg"), "a2' b2", "--l", "2"});
  CHECK(l2.code == 1);
  CHECK(l2.out.find("l must be 1") != std::string::npos);
  CHECK(run({"check-band-brick", data_path("lambda3.alg"), "a2' b2", "--l", "1", "--lambda", "3"}).code == 0);
  auto j = run_json({"check-string-brick", data_path("lambda3.alg"), "b1 a1'", "--method", "all"});
  CHECK(j["agree"] == true);
  CHECK(j["reports"].size() == 3);
}

TEST_CASE("human and structured verdicts match") {
  const std::vector<std::vector<std::string>> matrix = {
      {"validate", data_path("lambda3.alg")},
      {"validate", data_path("bad_successor.alg")},
      {"check-string-brick", data_path("lambda3.alg"), "b1 a1'"},
      {"check-string-brick", data_path("lambda3.alg"), "b1 a1' a2' b2", "--method", "direct"},
      {"check-string-brick", data_path("gamma.alg"), "a3 b", "--method", "endo"},
      {"check-band-brick", data_path("lambda3.alg"), "a2' b2", "--l", "2"},
      {"sturmian", "--directive", "1,(1)", "--prefix", "200", "--check"},
      {"sturmian", "--directive", "1,(1)", "--prefix", "200", "--drop", "1", "--bridge", "--right-infinite"},
      {"roundtrip", data_path("gamma.alg")},
  };
  for (const auto& args : matrix) {
    CAPTURE(args[0]);
    auto human = run(args);
    auto j = run_json(args);
    CHECK(j["exit_code"] == human.code);
  }
}

TEST_CASE("listing commands") {
  auto j = run_json({"strings", data_path("lambda3.alg"), "--max-len", "2"});
  CHECK(j["count"] == j["strings"].size());
  auto b = run_json({"bands", data_path("lambda3.alg"), "--max-len", "4"});
  CHECK(b["bands"].size() >= 2);
  auto e = run_json({"enumerate-bricks", data_path("lambda3.alg"), "--max-len", "4"});
  CHECK(e["string_bricks"].size() > 0);
  auto s = run_json({"signs", data_path("lambda3.alg")});
  CHECK(s["signs"].size() == 4);
}

TEST_CASE("automaton, recovery and roundtrip") {
  auto m = run_json({"build-mia", data_path("gamma.alg")});
  CHECK(m["states"] == 28);
  CHECK(m["initial_states"] == 12);
  auto bin = run({"build-mia", data_path("lambda3.alg"), "--parity"});
  REQUIRE(bin.code == 0);
  const std::string path = (std::filesystem::temp_directory_path() / "stralg_lambda3_parity.mia").string();
  {
    std::ofstream f(path);
    f << bin.out;
  }
  auto rec = run_json({"recover", path});
  CHECK(rec["presentation"]["vertices"].size() == 3);
  CHECK(rec["presentation"]["relations"].size() == 2);
  std::remove(path.c_str());
  auto rt = run({"roundtrip", data_path("gamma.alg")});
  CHECK(rt.code == 0);
  CHECK(rt.out.find("isomorphic") != std::string::npos);
}

TEST_CASE("sturmian command") {
  auto p = run({"sturmian", "--directive", "1,(1)", "--prefix", "8"});
  CHECK(p.code == 0);
  CHECK(p.out == "abaababa\n");
  auto br = run_json({"sturmian", "--directive", "1,(1)", "--prefix", "500", "--bridge"});
  CHECK(br["bridge"]["consistent"] == true);
  CHECK(br["exit_code"] == 0);
  CHECK(run({"sturmian", "--directive", "1,0", "--prefix", "8"}).code == 2);
}
