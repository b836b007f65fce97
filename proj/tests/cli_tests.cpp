#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "choiceaudit/documents.hpp"

#ifndef CLI_PATH
#error "CLI_PATH must point at the command-line binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string scratch(const std::string& name) { return std::string(SCRATCH_DIR) + "/" + name; }

std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

// Runs `prefix <cli> args` through the shell, capturing exit code and both streams.
RunResult run(const std::string& args, const std::string& prefix = "") {
  const std::string out_path = scratch("last_stdout.txt");
  const std::string err_path = scratch("last_stderr.txt");
  std::string cmd = prefix;
  if (!cmd.empty()) cmd += " ";
  cmd += std::string("\"") + CLI_PATH + "\" " + args + " > \"" + out_path + "\" 2> \"" +
         err_path + "\"";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("audit reports axiom failures with exit code 1") {
  const auto r = run("audit \"" + fixture_path("example2.json") + "\"");
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.out);
  bool warp_failed = false;
  for (const auto& v : j.at("verdicts"))
    if (v.at("axiom") == "WARP") {
      warp_failed = v.at("holds") == false;
      CHECK_FALSE(v.at("witness").is_null());
    }
  CHECK(warp_failed);
}

TEST_CASE("audit exits 0 when every axiom holds") {
  const auto r = run("audit \"" + fixture_path("example1.json") + "\"");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& v : j.at("verdicts")) {
    CHECK(v.at("holds") == true);
    if (v.at("axiom") == "CCI") CHECK(v.at("vacuous") == true);
  }
}

TEST_CASE("audit renders text when asked") {
  const auto r = run("audit \"" + fixture_path("example2.json") + "\" --format text");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "WARP: FAILS"));
  CHECK(contains(r.out, "NSC: holds"));
  CHECK(contains(r.out, "raic: member"));
}

TEST_CASE("audit rejects malformed input with exit code 2") {
  const auto r = run("audit \"" + fixture_path("bad_choice.json") + "\"");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "unknown alternative"));

  const auto missing = run("audit \"" + scratch("no_such_file.json") + "\"");
  CHECK(missing.exit_code == 2);
  CHECK(contains(missing.err, "cannot read file"));
}

TEST_CASE("identify prints revealed structure") {
  const auto r1 = run("identify \"" + fixture_path("example1.json") + "\" --class aic");
  CHECK(r1.exit_code == 0);
  CHECK(contains(r1.out, "class-established: yes"));
  CHECK(contains(r1.out, "revealed preference (one step): x>y"));
  CHECK(contains(r1.out, "identified preference: UNIDENTIFIED"));

  const auto r2 = run("identify \"" + fixture_path("example2.json") + "\" --class raic");
  CHECK(r2.exit_code == 0);
  CHECK(contains(r2.out, "identified preference: x > y > z"));
  CHECK(contains(r2.out, "I({x}) = {y}"));

  const auto r3 = run("identify \"" + fixture_path("example2.json") + "\" --class graic");
  CHECK(r3.exit_code == 1);
  CHECK(contains(r3.out, "class-established: no"));
}

TEST_CASE("rationalize writes a verifiable agent") {
  const std::string out_path = scratch("example2.agent_out.json");
  const auto r = run("rationalize \"" + fixture_path("example2.json") + "\" --class raic --out \"" +
                     out_path + "\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "scope: TOTAL"));
  CHECK(contains(r.out, "wrote "));

  const auto j = nlohmann::json::parse(slurp(out_path));
  CHECK(j.at("preference") == nlohmann::json({"x", "y", "z"}));
  bool found = false;
  for (const auto& entry : j.at("operator"))
    if (entry.at("menu") == nlohmann::json({"x"})) {
      CHECK(entry.at("image") == nlohmann::json({"y"}));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("rationalize explains refusals") {
  const auto r = run("rationalize \"" + fixture_path("cycle.json") + "\" --class aic");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "NONE"));
  CHECK(contains(r.out, "cyclic"));
  CHECK(contains(r.out, "blocking axiom: NSC"));
}

TEST_CASE("rationalize streams the agent when no output path is given") {
  const auto r = run("rationalize \"" + fixture_path("example1.json") + "\" --class aic");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);  // stdout carries only the document
  CHECK(j.contains("operator"));
  CHECK(contains(r.err, "OBSERVED-ONLY"));
}

TEST_CASE("oracle adjudicates characterization claims") {
  const auto ok = run("oracle --theorem thm1 --n 2");
  CHECK(ok.exit_code == 0);
  CHECK(nlohmann::json::parse(ok.out).at("equivalence-holds") == true);

  const auto dual = run("oracle --theorem thm3 --n 2");
  CHECK(dual.exit_code == 1);
  const auto j = nlohmann::json::parse(dual.out);
  CHECK(j.at("literal").at("holds") == false);
  CHECK(j.at("repaired").at("holds") == true);

  const auto sufficiency_gap = run("oracle --theorem thm2 --n 3");
  CHECK(sufficiency_gap.exit_code == 1);
  CHECK(nlohmann::json::parse(sufficiency_gap.out).at("equivalence-holds") == false);

  const auto too_big = run("oracle --theorem thm1 --n 9");
  CHECK(too_big.exit_code == 2);
}

TEST_CASE("oracle output is byte-stable across runs and thread counts") {
  const std::string f1 = scratch("oracle_t1.json");
  const std::string f2 = scratch("oracle_t4.json");
  const std::string f3 = scratch("oracle_t1_again.json");
  CHECK(run("oracle --theorem thm1 --n 3 --threads 1 --out \"" + f1 + "\"").exit_code == 0);
  CHECK(run("oracle --theorem thm1 --n 3 --threads 4 --out \"" + f2 + "\"").exit_code == 0);
  CHECK(run("oracle --theorem thm1 --n 3 --threads 1 --out \"" + f3 + "\"").exit_code == 0);
  const std::string once = slurp(f1);
  CHECK_FALSE(once.empty());
  CHECK(once == slurp(f2));
  CHECK(once == slurp(f3));
}

TEST_CASE("simulate emits a dataset and its generating agent") {
  const std::string out_path = scratch("sim_graic.json");
  const auto r = run("simulate --seed 1 --class graic --n 3 --out \"" + out_path + "\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "wrote " + out_path));

  const std::string agent_path = scratch("sim_graic.agent.json");
  CHECK(contains(r.out, "wrote " + agent_path));

  const auto dataset_doc = choiceaudit::parse_dataset_document(slurp(out_path));
  CHECK(dataset_doc.observations.size() == 7);
  const auto agent_doc = choiceaudit::parse_agent_document(slurp(agent_path));
  CHECK(agent_doc.preference.size() == 3);

  // Identity-operator agents produce fully rational data: the audit passes.
  const auto audit_run = run("audit \"" + out_path + "\"");
  CHECK(audit_run.exit_code == 0);

  // Same seed, same bytes.
  const std::string again = scratch("sim_graic_again.json");
  CHECK(run("simulate --seed 1 --class graic --n 3 --out \"" + again + "\"").exit_code == 0);
  CHECK(slurp(out_path) == slurp(again));
}

TEST_CASE("align compares revealed preference with a stated order") {
  const auto r1 = run("align \"" + fixture_path("example1.json") + "\" --dm \"x>y>z\"");
  CHECK(r1.exit_code == 0);
  CHECK(contains(r1.out, "x,y: ALIGNED"));
  CHECK(contains(r1.out, "UNDETERMINED"));
  CHECK(contains(r1.out, "aligned: 1  misaligned: 0  undetermined: 2"));

  const auto r2 = run("align \"" + fixture_path("example2.json") + "\" --dm \"x>y>z\"");
  CHECK(r2.exit_code == 0);
  CHECK(contains(r2.out, "aligned: 3  misaligned: 0  undetermined: 0"));

  const auto r3 = run("align \"" + fixture_path("example2.json") + "\" --dm \"z>y>x\"");
  CHECK(r3.exit_code == 1);
  CHECK(contains(r3.out, "x,y: MISALIGNED (revealed x>y)"));

  const auto r4 = run("align \"" + fixture_path("example2.json") + "\" --dm \"x>x>y\"");
  CHECK(r4.exit_code == 2);
}

TEST_CASE("the size cap environment variable only lowers limits") {
  const std::string base = "oracle --theorem thm1 --n ";
  CHECK(run(base + "3", "CHOICE_AUDIT_MAX_N=2").exit_code == 2);
  CHECK(run(base + "2", "CHOICE_AUDIT_MAX_N=abc").exit_code == 2);
  CHECK(run(base + "2", "CHOICE_AUDIT_MAX_N=5").exit_code == 0);
  CHECK(run("simulate --seed 3 --class aic --n 3 --out \"" + scratch("capped.json") + "\"",
            "CHOICE_AUDIT_MAX_N=2")
            .exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("audit").exit_code == 2);                       // missing input
  CHECK(run("identify \"" + fixture_path("example1.json") + "\" --class quux").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("shipped fixtures are in canonical serialization") {
  for (const std::string name : {"example1.json", "example2.json"}) {
    const std::string text = slurp(fixture_path(name));
    const auto doc = choiceaudit::parse_dataset_document(text);
    CHECK(choiceaudit::serialize(doc) == text);
  }
  const std::string agent_text = slurp(fixture_path("example2_agent.json"));
  CHECK(choiceaudit::serialize(choiceaudit::parse_agent_document(agent_text)) == agent_text);
}
