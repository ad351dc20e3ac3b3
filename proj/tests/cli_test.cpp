#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "arqlab/algcore.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run_raw(const std::string& cmd) {
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Result run(const std::string& args) { return run_raw(std::string(ARQLAB_CLI) + " " + args + " 2>/dev/null"); }

std::string sample(const std::string& name) { return std::string(ARQLAB_SAMPLES_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("arqlab_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

int count(const std::string& hay, const std::string& needle) {
  int c = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++c;
  return c;
}

}  // namespace

TEST(Cli, MakeNakayama) {
  auto r = run("make nakayama 3 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("vertices 3"), std::string::npos);
  EXPECT_EQ(count(r.out, "arrow "), 3);
  EXPECT_EQ(count(r.out, "relation "), 3);
}

TEST(Cli, MakeLinear) {
  auto r = run("make linear 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("vertices 3"), std::string::npos);
  EXPECT_EQ(count(r.out, "arrow "), 2);
  EXPECT_EQ(count(r.out, "relation "), 0);
}

TEST(Cli, RoundTrip) {
  using Q = arqlab::exactla::Rational;
  for (const std::string& args : std::vector<std::string>{"make nakayama 4 3", "make trivext " + sample("a3.alg") + " 2", "make brauer star 2 2",
                                 "make opext " + sample("a2.alg") + " P 1", "make reflect " + sample("a3.alg")}) {
    auto r = run(args);
    ASSERT_EQ(r.code, 0) << args;
    auto a = arqlab::algcore::build_algebra<Q>(arqlab::algcore::parse_algebra_file(r.out));
    EXPECT_EQ(arqlab::algcore::emit_algebra(*a), r.out) << args;
  }
}

TEST(Cli, MakeErrors) {
  EXPECT_EQ(run("make nakayama 0 2").code, 2);
  EXPECT_EQ(run("make nakayama x 2").code, 2);
  EXPECT_EQ(run("make widget 3").code, 2);
  EXPECT_EQ(run("make linear").code, 2);
  EXPECT_EQ(run("make reflect " + sample("n63.alg")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, ShortCyclesExample) {
  auto r = run("short-cycles " + sample("example3.alg"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("witness P(1) -> P(4) -> P(1)"), std::string::npos);
  auto j = run("short-cycles --format json " + sample("example3.alg"));
  EXPECT_EQ(j.code, 3);
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["verdict"], "has-short-cycle");
  EXPECT_EQ(doc["witnesses"][0]["image_xy"], nlohmann::json({1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(doc["witnesses"][0]["image_yx"], nlohmann::json({0, 0, 0, 1, 0, 0}));
}

TEST(Cli, ShortCycleFree) {
  auto r = run("short-cycles " + sample("n63.alg"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "short-cycle-free\n");
}

TEST(Cli, TheoremCheckPipe) {
  const std::string cli = ARQLAB_CLI;
  Result r;
  if (std::filesystem::exists("/bin/bash")) {
    r = run_raw("/bin/bash -c '" + cli + " theorem-check <(" + cli + " make trivext " + sample("a3.alg") + " 3)'");
  } else {
    r = run("theorem-check " + temp_file("t3.alg", run("make trivext " + sample("a3.alg") + " 3").out));
  }
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "short-cycle-free");
  EXPECT_EQ(doc["hereditary_type"], "A3");
  for (const auto& c : doc["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
}

TEST(Cli, TheoremCheckStdin) {
  auto r = run("theorem-check - < " + sample("n63.alg"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["hereditary_type"], "A2");
  EXPECT_EQ(run("theorem-check " + sample("example3.alg")).code, 3);
  EXPECT_EQ(run("theorem-check " + sample("a3.alg")).code, 2);
}

TEST(Cli, Indec) {
  auto made = run("make nakayama 3 2");
  auto r = run("indec " + temp_file("n32.alg", made.out));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count(r.out, "\n"), 6);
}

TEST(Cli, ExportDot) {
  auto r = run("export --format dot " + sample("example3.alg"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count(r.out, "shape=box"), 6);
  EXPECT_EQ(count(r.out, "[label="), 24);
  EXPECT_GT(count(r.out, "style=dashed"), 0);
  auto semi = run("export --format dot " + temp_file("kk.alg", "arqlab v1\nvertices 2\n"));
  EXPECT_EQ(semi.code, 0);
  EXPECT_EQ(count(semi.out, "[label="), 2);
  EXPECT_EQ(count(semi.out, "->"), 0);
}

TEST(Cli, ExportJson) {
  auto r = run("export " + sample("example3.alg"));
  EXPECT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["nodes"].size(), 24u);
  EXPECT_EQ(doc["orbits"].size(), 3u);
  auto c = run("export --certificate " + sample("example3.alg"));
  EXPECT_EQ(c.code, 3);
  EXPECT_EQ(nlohmann::json::parse(c.out)["witness"]["x"], "P(1)");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("indec " + temp_file("bad.alg", "arqlab v1\nvertices 2\narrow a 1 3\n")).code, 2);
  EXPECT_EQ(run("indec /nonexistent/file.alg").code, 2);
  EXPECT_EQ(run("short-cycles --budget-nodes 5 " + sample("example3.alg")).code, 4);
  EXPECT_EQ(run("short-cycles --budget-nodes 0 " + sample("example3.alg")).code, 2);
  EXPECT_EQ(run("short-cycles --format yaml " + sample("example3.alg")).code, 2);
  // char 7 does not exceed dim 20
  EXPECT_EQ(run("indec --field gf:7 " + sample("example3.alg")).code, 2);
  EXPECT_EQ(run("indec --field gf:8 " + sample("example3.alg")).code, 2);
}

TEST(Cli, FiniteField) {
  auto r = run("short-cycles --field gf:101 " + sample("example3.alg"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("witness P(1) -> P(4) -> P(1)"), std::string::npos);
  auto m = run("make nakayama 3 2 --field gf:7");
  EXPECT_NE(m.out.find("field GF(7)"), std::string::npos);
}

TEST(Cli, Deterministic) {
  for (const std::string& args : std::vector<std::string>{"ar-quiver " + sample("example3.alg"), "slices --format json " + sample("example3.alg"),
                                 "theorem-check " + sample("trivext_a3_3.alg")}) {
    auto a = run(args);
    auto b = run(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, Slices) {
  auto r = run("slices " + sample("example3.alg"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("24 stable slices\n", 0), 0u);
  EXPECT_EQ(count(r.out, "double-tau-rigid"), 24);
}

TEST(Cli, AllWitnesses) {
  auto one = run("short-cycles --format json " + sample("brauer_star_2_2.alg"));
  auto all = run("short-cycles --format json --all-witnesses " + sample("brauer_star_2_2.alg"));
  EXPECT_EQ(nlohmann::json::parse(one.out)["witnesses"].size(), 1u);
  EXPECT_GT(nlohmann::json::parse(all.out)["witnesses"].size(), 1u);
}
