#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout only; stderr goes to /dev/null
Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" KOSZULDUAL_EXE "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const char* name) { return std::string("'" KOSZULDUAL_CORPUS_DIR "/") + name + ".quiver'"; }

fs::path scratch(const std::string& name, const std::string& body) {
  fs::path dir = fs::temp_directory_path() / "koszuldual_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("decide-equiv on Example 4") {
  auto r = run("decide-equiv " + corpus("ex4") + " --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "equivalent");
  CHECK(j["rule"] == "theorem-2");
  CHECK(j["class"]["r"] == 1);
  CHECK(j["class"]["n"] == 4);
  CHECK(j["class"]["m"] == 4);
  CHECK(j["schema_version"] == 1);
  // global flags may also come before the subcommand
  auto before = run("--format json decide-equiv " + corpus("ex4"));
  CHECK(before.out == r.out);
}

TEST_CASE("corpus table") {
  auto t0 = std::chrono::steady_clock::now();
  auto r = run("corpus");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(r.code == 0);
  CHECK(r.out.find("8/8") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(secs < 10.0);
  auto j = nlohmann::json::parse(run("corpus --format json").out);
  CHECK(j["passed"] == 8);
  CHECK(j["rows"].size() == 8);
}

TEST_CASE("dual of Example 6") {
  auto r = run("dual " + corpus("ex6") + " --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dual"]["relations"].size() == 2);
  CHECK(j["dual_finite"]["finite"] == "finite");
  auto dot = run("dual " + corpus("ex6") + " --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("json output is byte stable") {
  for (const char* cmd : {"classify", "decide-equiv", "pi1", "resolve", "koszul", "dual"}) {
    INFO(cmd);
    auto a = run(std::string(cmd) + " " + corpus("ex3") + " --format json");
    auto b = run(std::string(cmd) + " " + corpus("ex3") + " --format json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::ordered_json::parse(a.out);
    CHECK(j.items().begin().key() == "command");
    CHECK((--j.end()).key() == "schema_version");
  }
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate x").code == 2);
  CHECK(run("classify /nonexistent/file.quiver").code == 2);
  auto bad = scratch("bad.quiver", "quiver bad\nvertices: 1 2\narrows: a: 1 -> 3\n");
  CHECK(run("classify '" + bad.string() + "'").code == 2);
  auto syntax = scratch("syntax.quiver", "quiver s\nvertices: 1 2\narrows: a 1 2\n");
  CHECK(run("dual '" + syntax.string() + "'").code == 2);
  CHECK(run("classify " + corpus("ex4") + " --format dot").code == 2);
  CHECK(run("classify " + corpus("ex4") + " --format yaml").code == 2);
  CHECK(run("koszul " + corpus("ex1") + " --cutoff -3").code == 2);
  // analysis errors: pi1 needs an acyclic quiver
  CHECK(run("pi1 " + corpus("ex5")).code == 1);
  CHECK(run("reflect " + corpus("ex2") + " +2").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("output file, field and colour") {
  auto out = fs::temp_directory_path() / "koszuldual_cli_test" / "ex4.json";
  fs::create_directories(out.parent_path());
  fs::remove(out);
  auto r = run("classify " + corpus("ex4") + " --format json --out '" + out.string() + "'");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(nlohmann::json::parse(ss.str())["class"]["class"] == "discrete");

  auto gf = run("dual " + corpus("ex1") + " --field GF:7 --format json");
  CHECK(nlohmann::json::parse(gf.out)["dual"]["field"] == "GF(7)");

  auto coloured = run("decide-equiv " + corpus("ex4"), "KOSZULDUAL_COLOR=1");
  CHECK(coloured.out.find("\x1b[") != std::string::npos);
  auto plain = run("decide-equiv " + corpus("ex4"), "KOSZULDUAL_COLOR=0");
  CHECK(plain.out.find("\x1b[") == std::string::npos);
  CHECK(plain.out.find("equivalent") != std::string::npos);
  // colour never reaches json
  auto j = run("decide-equiv " + corpus("ex4") + " --format json", "KOSZULDUAL_COLOR=1");
  CHECK(j.out.find("\x1b[") == std::string::npos);
}

TEST_CASE("smash, reflect, equiv-quiver, resolve") {
  auto s = run("smash " + corpus("ex2") + " --group zk:3 --weights 'alpha=1' --format json");
  REQUIRE(s.code == 0);
  auto j = nlohmann::json::parse(s.out);
  CHECK(j["component_count"] == 3);
  CHECK(j["dual_smash"]["commutes"] == true);
  CHECK(run("smash " + corpus("ex2") + " --group zk:3 --weights 'nosuch=1'").code == 2);
  auto z = nlohmann::json::parse(run("smash " + corpus("ex2") + " --group z --weights 'alpha=1' --window 2 --format json").out);
  CHECK(z["window"] == 2);

  auto rf = run("reflect " + corpus("ex2") + " +4 -1 --format json");
  REQUIRE(rf.code == 0);
  auto rj = nlohmann::json::parse(rf.out);
  CHECK(rj["word"].size() == 2);
  CHECK(rj["quiver"]["relations"].empty());

  auto a = scratch("c32.quiver", "quiver a\nvertices: 0 1 2 3 4\narrows: a: 0 -> 1; b: 1 -> 2; c: 2 -> 3; d: 0 -> 4; e: 4 -> 3\n");
  auto b = scratch("c41.quiver", "quiver b\nvertices: 0 1 2 3 4\narrows: a: 0 -> 1; b: 1 -> 2; c: 2 -> 3; d: 3 -> 4; e: 0 -> 4\n");
  auto c = scratch("c32b.quiver", "quiver c\nvertices: 0 1 2 3 4\narrows: a: 1 -> 0; b: 2 -> 1; c: 3 -> 2; d: 4 -> 0; e: 3 -> 4\n");
  auto ne = nlohmann::json::parse(run("equiv-quiver '" + a.string() + "' '" + b.string() + "' --format json").out);
  CHECK(ne["verdict"] == "not-equivalent");
  auto eq = nlohmann::json::parse(run("equiv-quiver '" + a.string() + "' '" + c.string() + "' --format json").out);
  CHECK(eq["verdict"] == "equivalent");
  auto shallow = nlohmann::json::parse(
      run("equiv-quiver '" + a.string() + "' '" + b.string() + "' --max-depth 0 --format json").out);
  CHECK(shallow["verdict"] == "depth-exceeded");

  auto res = nlohmann::json::parse(run("resolve " + corpus("ex1") + " --simple 1 --cutoff 6 --format json").out);
  CHECK(res["cutoff"] == 6);
  REQUIRE(res["simples"].size() == 1);
  CHECK(res["simples"][0]["projective_dimension"] == 3);
  CHECK(res["simples"][0]["steps"].size() <= 6);
}
