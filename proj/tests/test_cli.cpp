#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct CliRun {
  int exit = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(GVEC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliRun r;
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(GVEC_FIXTURES) + "/" + name + ".json"; }

std::string writeTemp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("gvec_cli_" + name + ".json");
  std::ofstream(path) << body;
  return path.string();
}

Json machine(const std::string& args) {
  const CliRun r = run(args + " --machine --seed 7");
  EXPECT_EQ(r.exit, 0) << args;
  return Json::parse(r.out);
}

// every number must sit under a {"value", "semantics"} wrapper
void expectTagged(const Json& j, bool inside, const std::string& where) {
  static const std::set<std::string> kinds = {"exact", "upper-bound-whp", "bounded-exhausted"};
  if (j.is_object() && j.contains("semantics")) {
    EXPECT_TRUE(kinds.count(j["semantics"].get<std::string>())) << where;
    ASSERT_TRUE(j.contains("value")) << where;
    expectTagged(j["value"], true, where);
    return;
  }
  if (j.is_number()) {
    EXPECT_TRUE(inside) << "untagged number at " << where;
    return;
  }
  if (j.is_object())
    for (auto it = j.begin(); it != j.end(); ++it) expectTagged(it.value(), inside, where + "." + it.key());
  if (j.is_array())
    for (std::size_t i = 0; i < j.size(); ++i) expectTagged(j[i], inside, where + "[" + std::to_string(i) + "]");
}

}  // namespace

TEST(Cli, AlgebraCheckHuman) {
  const CliRun a2 = run("algebra-check -a " + fixture("a2"));
  EXPECT_EQ(a2.exit, 0);
  EXPECT_NE(a2.out.find("dimension: 3"), std::string::npos) << a2.out;
  EXPECT_NE(a2.out.find("[[1,0],[1,1]]"), std::string::npos) << a2.out;
  EXPECT_NE(run("algebra-check -a " + fixture("k3")).out.find("dimension: 5"), std::string::npos);
  EXPECT_NE(run("algebra-check -a " + fixture("a3rel")).out.find("dimension: 5"), std::string::npos);
}

TEST(Cli, AlgebraCheckMachine) {
  const Json j = machine("algebra-check -a " + fixture("a3rel"));
  EXPECT_EQ(j["dimension"]["value"], 5);
  EXPECT_EQ(j["projectives"][0]["value"], Json::parse("[1,1,0]"));
  EXPECT_EQ(j["projectives"][1]["value"], Json::parse("[0,1,1]"));
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("algebra-check -a /nonexistent/file.json").exit, 2);
  const auto notAdmissible = writeTemp("na", R"({"vertices": 3, "arrows": [{"name": "a", "source": 1, "target": 2},
      {"name": "b", "source": 2, "target": 3}], "relations": [], "nilpotency": 2})");
  EXPECT_EQ(run("algebra-check -a " + notAdmissible).exit, 2);
  const auto badRelation = writeTemp("mr", R"({"vertices": 3, "arrows": [{"name": "a", "source": 1, "target": 2},
      {"name": "b", "source": 2, "target": 3}], "relations": [[{"coeff": 1, "path": ["a", "b"]}]], "nilpotency": 3})");
  EXPECT_EQ(run("algebra-check -a " + badRelation).exit, 2);
  const auto notJson = writeTemp("nj", "{ vertices: ");
  EXPECT_EQ(run("algebra-check -a " + notJson).exit, 2);
  EXPECT_EQ(run("gdecomp -a " + fixture("a2") + " --g 1,2,3").exit, 2);
  EXPECT_EQ(run("gdecomp -a " + fixture("a2") + " --g 1,x").exit, 2);
  EXPECT_EQ(run("gdecomp -a " + fixture("a2") + " --g=1,-1 --prime 15").exit, 2);
  EXPECT_EQ(run("bogus").exit, 2);
}

TEST(Cli, MachineModeRequiresSeed) {
  EXPECT_EQ(run("gdecomp -a " + fixture("a2") + " --g=2,-1 --machine").exit, 2);
  EXPECT_EQ(run("gdecomp -a " + fixture("a2") + " --g=2,-1 --machine --seed 1").exit, 0);
}

TEST(Cli, LowConfidenceExitThree) {
  const std::string args = "gdecomp -a " + fixture("k2") + " --g=2,-3 --prime 2 --seed 1 --samples 5 --cross-primes 1";
  EXPECT_EQ(run(args).exit, 3);
  EXPECT_EQ(run(args + " --allow-low-confidence").exit, 0);
}

TEST(Cli, Gdecomp) {
  const Json a2 = machine("gdecomp -a " + fixture("a2") + " --g=2,-1");
  ASSERT_EQ(a2["summands"].size(), 2u);
  EXPECT_EQ(a2["summands"][0]["g"]["value"], Json::parse("[1,-1]"));
  EXPECT_EQ(a2["summands"][1]["g"]["value"], Json::parse("[1,0]"));
  const Json pos = machine("gdecomp -a " + fixture("a3rel") + " --g=3,0,0");
  ASSERT_EQ(pos["summands"].size(), 1u);
  EXPECT_EQ(pos["summands"][0]["multiplicity"]["value"], 3);
  const Json k3 = machine("gdecomp -a " + fixture("k3") + " --g=1,-1");
  ASSERT_EQ(k3["summands"].size(), 1u);
  EXPECT_EQ(k3["summands"][0]["indecomposable"], true);
  EXPECT_EQ(k3["config"]["seed"]["value"], 7);
}

TEST(Cli, ComponentAndFriends) {
  const Json k3 = machine("component -a " + fixture("k3") + " --g=1,-1");
  EXPECT_EQ(k3["pairing"]["value"], -1);
  EXPECT_EQ(k3["verdict"], "wild");
  const Json a2 = machine("component -a " + fixture("a2") + " --g=1,-1");
  EXPECT_EQ(a2["verdict"], "tame");
  EXPECT_EQ(a2["dimZ"]["value"], 0);
  const Json neg = machine("component -a " + fixture("a2") + " --g=0,-1");
  EXPECT_EQ(neg["componentCount"]["value"], 0);
  EXPECT_EQ(neg["d"]["value"], Json::parse("[0,0]"));
  EXPECT_EQ(machine("dvec -a " + fixture("k3") + " --g=1,-1")["d"]["value"], Json::parse("[1,2]"));
  EXPECT_EQ(machine("zdim -a " + fixture("k3") + " --g=1,-1")["dimZ"]["value"], 6);
  EXPECT_EQ(machine("pairing -a " + fixture("k3") + " --g=1,-1 --d 1,2")["pairing"]["value"], -1);
  EXPECT_EQ(machine("tame -a " + fixture("k3") + " --g=1,-1")["tame"], false);
  EXPECT_EQ(machine("einv -a " + fixture("a2") + " --g=1,-1 --h=1,-1")["e"]["value"], 0);
}

TEST(Cli, Conditions) {
  const Json tame = machine("conditions -a " + fixture("k2") + " --g=2,-2 --tmax 3");
  EXPECT_EQ(tame["ray"]["status"], "pass");
  EXPECT_EQ(tame["regularity"]["status"], "pass");
  EXPECT_EQ(tame["nonDecreasing"]["status"], "pass");
  const Json k3 = machine("conditions -a " + fixture("k3") + " --g=1,-1 --tmax 4");
  EXPECT_EQ(k3["nonDecreasing"]["status"], "exhausted");
  EXPECT_EQ(k3["indCountDecrease"], false);
  EXPECT_EQ(k3["indCounts"]["semantics"], "bounded-exhausted");
}

TEST(Cli, Hunt) {
  const Json empty = machine("hunt --budget 0");
  EXPECT_TRUE(empty["findings"].empty());
  EXPECT_EQ(empty["examined"]["value"], 0);
  const Json fixtures = machine("hunt --budget 4 -a " + fixture("a2") + " -a " + fixture("k3"));
  EXPECT_TRUE(fixtures["findings"].empty());
}

TEST(Cli, EveryNumberIsTagged) {
  const std::vector<std::string> cmds = {
      "algebra-check -a " + fixture("a3rel"),         "gdecomp -a " + fixture("k2") + " --g=2,-2",
      "einv -a " + fixture("k3") + " --g=1,-1 --h=1,-1", "tame -a " + fixture("a2") + " --g=1,-1",
      "dvec -a " + fixture("a3") + " --g=1,0,-1",     "zdim -a " + fixture("k2") + " --g=1,-1",
      "pairing -a " + fixture("a2") + " --g=1,-1",    "component -a " + fixture("a2") + " --g=2,-1",
      "conditions -a " + fixture("k3") + " --g=1,-1 --tmax 2", "hunt --budget 2"};
  for (const auto& c : cmds) expectTagged(machine(c), false, c);
}

TEST(Cli, MachineOutputDeterministic) {
  const std::vector<std::string> cmds = {"gdecomp -a " + fixture("k3") + " --g=2,-3",
                                         "component -a " + fixture("a3rel") + " --g=1,-1,1", "hunt --budget 3"};
  for (const auto& c : cmds) {
    const std::string args = c + " --machine --seed 11";
    const CliRun a = run(args), b = run(args), d = run(args);
    EXPECT_EQ(a.out, b.out) << c;
    EXPECT_EQ(a.out, d.out) << c;
    EXPECT_FALSE(a.out.empty());
  }
}
