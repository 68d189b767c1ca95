// Drives the installed command line binary end to end: golden outputs, every
// exit code, format switches, determinism. The binary path arrives as argv[1].

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "avoidlab/binary_tree.hpp"
#include "avoidlab/permutation.hpp"

namespace {

std::string g_cli;
int g_failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      "\"" + g_cli + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << "\n";
    result.exit_code = -1;
    return result;
  }
  char buffer[4096];
  while (size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

void expect_output(const std::string& args, const std::string& expected) {
  const RunResult r = run(args);
  expect(r.exit_code == 0, args + " exits 0 (got " + std::to_string(r.exit_code) + ")");
  expect(r.output == expected,
         args + " prints expected output (got: " + r.output + ")");
}

void expect_exit(const std::string& args, int code) {
  const RunResult r = run(args);
  expect(r.exit_code == code, args + " exits " + std::to_string(code) + " (got " +
                                  std::to_string(r.exit_code) + ")");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-avoidlab>\n";
    return 1;
  }
  g_cli = argv[1];

  // Bijection golden values, both notations.
  expect_output("phi 2341", "675849231\n");
  expect_output("phi --inverse 675849231", "2341\n");
  expect_output("phi 5647231", "12,13,11,14,9,10,8,15,5,6,4,7,2,3,1\n");
  expect_output("phi 4312", "896734251\n");
  expect_output("phi --inverse 896734251", "4312\n");
  expect_output("phi \"\"", "1\n");
  {
    const RunResult r = run("phi 132", true);
    expect(r.exit_code == 3, "phi 132 exits 3");
    expect(r.output.find("(1,2,3)") != std::string::npos,
           "phi 132 names the offending occurrence");
  }
  {
    const RunResult r = run("phi --format json 2341");
    expect(r.exit_code == 0, "phi json exits 0");
    const auto doc = nlohmann::json::parse(r.output);
    expect(doc["schema_version"] == 1, "phi json schema_version");
    expect(doc["output"].size() == 9, "phi json output length");
  }

  // Enumeration: structural and raw paths agree, listings are lexicographic.
  expect_output("enumerate --length 5 --alternating --avoid 132 --count-only", "2\n");
  expect_output("enumerate --length 3 --avoid 132", "123\n213\n231\n312\n321\n");
  expect_output("enumerate --length 7 --alternating --avoid 132,3412 --count-only",
                "1\n");
  expect_output("enumerate --length 5 --alternating --avoid 132 --count-only --raw",
                "2\n");
  expect_output("enumerate --length 6 --alternating --avoid 132 --count-only", "5\n");
  expect_output("enumerate --length 0 --avoid 132", "\n");
  {
    const RunResult structural = run("enumerate --length 6 --avoid 132");
    const RunResult brute = run("enumerate --length 6 --avoid 132 --raw");
    expect(structural.exit_code == 0 && brute.exit_code == 0,
           "length-6 listings exit 0");
    expect(structural.output == brute.output,
           "structural and raw listings are identical");
  }
  {
    const RunResult r = run("enumerate --length 4 --avoid 132 --format csv");
    expect(r.exit_code == 0, "enumerate csv exits 0");
    expect(r.output.substr(0, 8) == "1,2,3,4\n", "enumerate csv first record");
  }
  // Even-length alternating class through the parity reduction.
  expect_output("enumerate --length 6 --alternating --avoid 132",
                "342516\n452316\n453612\n562314\n563412\n");
  {
    const RunResult structural = run("enumerate --length 6 --alternating --avoid 132");
    const RunResult brute = run("enumerate --length 6 --alternating --avoid 132 --raw");
    expect(structural.output == brute.output,
           "even-length alternating listings agree between paths");
  }
  // Patterns already containing 132 are dropped with a stderr notice.
  {
    const RunResult r = run("enumerate --length 4 --avoid 132,1432 --count-only", true);
    expect(r.exit_code == 0, "dropped-pattern count exits 0");
    expect(r.output.find("14") != std::string::npos, "dropped pattern leaves catalan count");
    expect(r.output.find("notice") != std::string::npos, "dropped pattern emits a notice");
  }
  {
    const RunResult r = run("enumerate --length 4 --avoid 132,1432 --count-only");
    expect(r.output == "14\n", "notices stay off stdout");
  }
  {
    const RunResult r = run("enumerate --length 3 --avoid 132 --format json");
    expect(r.exit_code == 0, "enumerate json exits 0");
    const auto doc = nlohmann::json::parse(r.output);
    expect(doc["count"] == 5, "enumerate json count");
    expect(doc["items"].size() == 5, "enumerate json items");
  }
  {
    const RunResult once = run("enumerate --length 5 --avoid 132 --format json");
    const RunResult twice = run("enumerate --length 5 --avoid 132 --format json");
    expect(once.output == twice.output, "enumerate json output is byte-stable");
  }

  // Tree dumps match the library renderings.
  {
    using namespace avoidlab;
    const auto tree = build_decreasing_tree(parse_permutation("2341"));
    expect_output("tree 2341", tree.to_paren() + "\n");
    const auto completed = canonical_label(complete(erase_labels(tree)));
    expect_output("tree 2341 --complete", tree.to_paren() + "\n" +
                                              completed.to_paren() + "\n");
    expect_output("tree 1", LabeledBinaryTree::leaf(1).to_paren() + "\n");
    const RunResult r = run("tree 2341 --complete --format json");
    expect(r.exit_code == 0, "tree json exits 0");
    const auto doc = nlohmann::json::parse(r.output);
    expect(doc["tree"]["label"] == 4, "tree json root label");
    expect(doc["completed"]["label"] == 9, "tree json completed root label");
  }

  // Sequences.
  expect_output("sequence --family catalan --terms 6", "1 1 2 5 14 42\n");
  expect_output("sequence --family quadratic --terms 5", "1 2 4 7 11\n");
  expect_output("sequence --family even-fibonacci --terms 4", "1 2 5 13\n");
  expect_output("sequence --family pow2-ceiling --terms 5", "1 1 2 4 8\n");
  expect_output("sequence --family quadratic --terms 3 --format csv", "1,1\n2,2\n3,4\n");

  {
    const RunResult r = run("sequence --family catalan --terms 3 --format json");
    expect(r.exit_code == 0, "sequence json exits 0");
    const auto doc = nlohmann::json::parse(r.output);
    expect(doc["schema_version"] == 1, "sequence json schema_version");
    expect(doc["terms"] == nlohmann::json::array({1, 1, 2}), "sequence json terms");
  }

  // Verify suites.
  expect_exit("verify --suite all --max-n 0", 0);
  expect_exit("verify --suite bijection --max-n 0", 0);
  expect_exit("verify --suite bijection --max-n 6", 0);
  expect_exit("verify --suite recursions --max-n 8", 0);
  expect_exit("verify --suite transport --max-n 4 --k 3", 0);
  expect_exit("verify --suite theorem --max-n 4", 0);
  expect_exit("verify --suite parity --max-n 4", 0);
  expect_exit("verify --suite corollary-12k --max-n 5", 0);
  expect_exit("verify --suite corollary-21k --k 2 --max-n 5", 0);
  {
    const RunResult r = run("verify --suite corollary-k21 --k 3 --max-n 6");
    expect(r.exit_code == 0, "corollary-k21 verify exits 0");
    expect(r.output.find("1,1,2,4,7,11,16") != std::string::npos,
           "corollary-k21 counts surface in the report");
  }
  {
    const RunResult r = run("verify --suite all --max-n 4 --format json");
    expect(r.exit_code == 0, "verify all (reduced) exits 0");
    const auto doc = nlohmann::json::parse(r.output);
    expect(doc["schema_version"] == 1, "verify json schema_version");
    expect(doc["pass"] == true, "verify json aggregate pass");
    bool coverage = false;
    for (const auto& rep : doc["reports"]) {
      if (rep["claim_id"] == "coverage") coverage = rep["pass"] == true;
    }
    expect(coverage, "coverage claim present and passing");
    const RunResult again = run("verify --suite all --max-n 4 --format json");
    expect(r.output == again.output, "verify json output is byte-stable");
  }
  {
    const RunResult r = run("verify --suite all --max-n 3 --selftest-corrupt");
    expect(r.exit_code == 1, "corrupted self-test exits 1");
    expect(r.output.find("witness") != std::string::npos,
           "corrupted self-test shows a witness");
  }

  // Exit codes: usage (2), validation (3), guard (4).
  expect_exit("enumerate", 2);
  expect_exit("nonsense", 2);
  expect_exit("", 2);
  expect_exit("phi 2341 --format csv", 2);
  expect_exit("verify --suite nonsense", 2);
  expect_exit("sequence --family nonsense --terms 3", 3);
  expect_exit("phi 12,34", 3);
  expect_exit("phi --inverse 12", 3);
  expect_exit("phi --inverse \"\"", 3);
  expect_exit("tree \"\"", 3);
  expect_exit("enumerate --length 3 --avoid 0", 3);
  expect_exit("enumerate --length 3 --avoid 132,", 3);
  expect_exit("enumerate --length 11 --raw --count-only", 4);
  expect_exit("enumerate --length 17 --avoid 132 --count-only", 4);
  expect_exit("enumerate --length 3 --avoid 132 --guard-structural 18", 4);
  expect_exit("enumerate --length 3 --avoid 132 --guard-structural 18 --ack-guards", 0);

  // Environment-variable guard: lowering needs no acknowledgment and bites.
  {
    const std::string prefix = "AVOIDLAB_MAX_N=4 ";
    RunResult r;
    {
      const std::string cmd = prefix + "\"" + g_cli +
                              "\" enumerate --length 5 --avoid 132 --count-only "
                              "2>/dev/null";
      FILE* pipe = popen(cmd.c_str(), "r");
      char buffer[256];
      while (fread(buffer, 1, sizeof(buffer), pipe) > 0) {
      }
      const int status = pclose(pipe);
      r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    expect(r.exit_code == 4, "AVOIDLAB_MAX_N=4 blocks a length-5 enumeration");
  }

  if (g_failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cout << "cli_tests: " << g_failures << " checks failed\n";
  return 1;
}
