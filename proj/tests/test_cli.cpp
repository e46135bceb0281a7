#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "multilat/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MULTILAT_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

fs::path tmp_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "multilat-cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("builtin then verify") {
  fs::path rml7 = tmp_dir() / "rml7.json";
  auto w = run_cli("builtin rml7 -o " + q(rml7));
  CHECK(w.exit_code == 0);

  auto v = run_cli("verify rml " + q(rml7));
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("PASS adjointness") != std::string::npos);

  auto p = run_cli("verify pocrim " + q(rml7));
  CHECK(p.exit_code == 0);
}

TEST_CASE("verify rejects a mutated table with exit 1") {
  fs::path rml7 = tmp_dir() / "rml7.json";
  run_cli("builtin rml7 -o " + q(rml7));
  auto j = multilat::parse_file(rml7);
  j["mul"][5][5] = "⊥";  // e*e
  multilat::write_file(tmp_dir() / "rml7-mutated.json", j);

  auto v = run_cli("verify pocrim " + q(tmp_dir() / "rml7-mutated.json"));
  CHECK(v.exit_code == 1);
  CHECK(v.output.find("FAIL adjointness") != std::string::npos);
}

TEST_CASE("parse problems exit 2") {
  fs::path cyc = tmp_dir() / "cyclic.json";
  std::ofstream(cyc) << R"({"name":"c","elements":["x","y"],"covers":[["x","y"],["y","x"]]})";
  auto v = run_cli("verify poset " + q(cyc));
  CHECK(v.exit_code == 2);
  CHECK(v.output.find("CycleDetected") != std::string::npos);

  auto missing = run_cli("verify rml " + q(tmp_dir() / "nope.json"));
  CHECK(missing.exit_code == 2);
}

TEST_CASE("classify output") {
  fs::path ml6 = tmp_dir() / "ml6.json";
  run_cli("builtin ml6-poset -o " + q(ml6));
  auto c = run_cli("classify " + q(ml6));
  CHECK(c.exit_code == 0);
  CHECK(c.output.find("pure: yes") != std::string::npos);
  CHECK(c.output.find("lattice: no") != std::string::npos);
  CHECK(c.output.find("witness: (a, b)") != std::string::npos);
}

TEST_CASE("subml and find-ml6") {
  fs::path fig2 = tmp_dir() / "fig2.json";
  run_cli("builtin fig2-poset -o " + q(fig2));
  auto yes = run_cli("subml " + q(fig2) + " --set bot,a,b,d,f,i --kind restricted");
  CHECK(yes.exit_code == 0);
  CHECK(yes.output.find("yes") == 0);
  auto no = run_cli("subml " + q(fig2) + " --set bot,a,b,d,f,i --kind full");
  CHECK(no.output.find("no") == 0);

  auto fm = run_cli("find-ml6 " + q(fig2) + " --kind restricted");
  CHECK(fm.exit_code == 0);
  CHECK(fm.output.find("8 copies") != std::string::npos);
  auto fm_full = run_cli("find-ml6 " + q(fig2) + " --kind full");
  CHECK(fm_full.output.find("0 copies") != std::string::npos);
}

TEST_CASE("searches") {
  fs::path ml6 = tmp_dir() / "ml6.json";
  run_cli("builtin ml6-poset -o " + q(ml6));
  auto sp = run_cli("search pocrims " + q(ml6));
  CHECK(sp.exit_code == 0);
  CHECK(sp.output.find("0 structures") != std::string::npos);
  CHECK(sp.output.find("exhaustive") != std::string::npos);

  fs::path rml7 = tmp_dir() / "rml7.json";
  run_cli("builtin rml7 -o " + q(rml7));
  fs::path out = tmp_dir() / "found";
  auto sp7 = run_cli("search pocrims " + q(rml7) + " --jobs 2 --out-dir " + q(out));
  CHECK(sp7.exit_code == 0);
  CHECK(sp7.output.find("17 structures") != std::string::npos);
  CHECK(fs::exists(out / "pocrim0.json"));
  CHECK(fs::exists(out / "summary.json"));
  auto v0 = run_cli("verify pocrim " + q(out / "pocrim0.json"));
  CHECK(v0.exit_code == 0);

  auto si = run_cli("search implications " + q(ml6) + " --axioms p3,p4,p5,weak,topid");
  CHECK(si.exit_code == 0);
  CHECK(si.output.find("2 tables") != std::string::npos);
}

TEST_CASE("kind arguments are validated") {
  fs::path fig2 = tmp_dir() / "fig2.json";
  run_cli("builtin fig2-poset -o " + q(fig2));
  auto bad = run_cli("find-ml6 " + q(fig2) + " --kind sideways");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("an implication-only file is not a pocrim file") {
  fs::path t1 = tmp_dir() / "ml6-imp.json";
  run_cli("builtin ml6-imp-table -o " + q(t1));
  auto v = run_cli("verify pocrim " + q(t1));
  CHECK(v.exit_code == 2);
  CHECK(v.output.find("ShapeMismatch") != std::string::npos);
}

TEST_CASE("poset generation") {
  auto g = run_cli("gen posets --n 4");
  CHECK(g.exit_code == 0);
  CHECK(g.output.find("2 bounded posets") != std::string::npos);
  auto bad = run_cli("gen posets --n 9");
  CHECK(bad.exit_code == 2);

  fs::path out = tmp_dir() / "gen6";
  auto w = run_cli("gen posets --n 6 --out-dir " + q(out));
  CHECK(w.exit_code == 0);
  int loadable = 0;
  for (const auto& entry : fs::directory_iterator(out)) {
    multilat::Poset p = multilat::load_poset(entry.path());
    CHECK(p.size() == 6);
    ++loadable;
  }
  CHECK(loadable == 16);
}

TEST_CASE("ordinal sum through files") {
  fs::path two = tmp_dir() / "two.json";
  fs::path sum = tmp_dir() / "sum.json";
  run_cli("builtin two -o " + q(two));
  auto s = run_cli("sum " + q(two) + " " + q(two) + " -o " + q(sum));
  CHECK(s.exit_code == 0);
  auto v = run_cli("verify rml " + q(sum));
  CHECK(v.exit_code == 0);
}

TEST_CASE("concept workflow") {
  fs::path rml7 = tmp_dir() / "rml7.json";
  run_cli("builtin rml7 -o " + q(rml7));
  nlohmann::json spec;
  spec["type"] = "residuum-negation";
  spec["algebra"] = "rml7.json";
  spec["domain"] = {"g"};
  spec["r"] = {{"g", "c"}};
  fs::path gfile = tmp_dir() / "galois.json";
  multilat::write_file(gfile, spec);

  auto vg = run_cli("verify galois " + q(gfile));
  CHECK(vg.exit_code == 0);

  fs::path calg = tmp_dir() / "concepts.json";
  fs::path cdot = tmp_dir() / "concepts.dot";
  auto co = run_cli("concepts " + q(gfile) + " --emit-algebra " + q(calg) + " --dot " + q(cdot));
  CHECK(co.exit_code == 0);
  CHECK(co.output.find("3 concepts") != std::string::npos);
  CHECK(fs::exists(calg));
  CHECK(fs::exists(cdot));
  auto vc = run_cli("verify rml " + q(calg));
  CHECK(vc.exit_code == 0);

  // a non-closed system is refused but diagnosed
  nlohmann::json ctx;
  ctx["objects"] = nlohmann::json::array({"g1", "g2", "g3"});
  ctx["attributes"] = nlohmann::json::array({"m1", "m2"});
  ctx["incidence"] = nlohmann::json::array(
      {nlohmann::json::array({"g1", "m1"}), nlohmann::json::array({"g2", "m2"})});
  nlohmann::json cspec;
  cspec["type"] = "crisp";
  cspec["context"] = ctx;
  fs::path cfile = tmp_dir() / "crisp.json";
  multilat::write_file(cfile, cspec);
  auto refused = run_cli("concepts " + q(cfile) + " --emit-algebra " + q(tmp_dir() / "no.json"));
  CHECK(refused.exit_code == 1);
  CHECK(refused.output.find("closedness fails") != std::string::npos);
}

TEST_CASE("MULTILAT_BUDGET caps enumeration") {
  fs::path rml7 = tmp_dir() / "rml7.json";
  run_cli("builtin rml7 -o " + q(rml7));
  nlohmann::json spec;
  spec["type"] = "residuum-negation";
  spec["algebra"] = "rml7.json";
  spec["domain"] = {"g"};
  spec["r"] = {{"g", "c"}};
  fs::path gfile = tmp_dir() / "galois-budget.json";
  multilat::write_file(gfile, spec);

  std::string cmd = "env MULTILAT_BUDGET=3 " + std::string(MULTILAT_BIN) + " concepts " +
                    q(gfile) + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 2);
  CHECK(out.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("dot export command") {
  fs::path ml6 = tmp_dir() / "ml6.json";
  fs::path dot = tmp_dir() / "ml6.dot";
  run_cli("builtin ml6-poset -o " + q(ml6));
  auto e = run_cli("export dot " + q(ml6) + " -o " + q(dot));
  CHECK(e.exit_code == 0);
  std::ifstream in(dot);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  int edges = 0;
  for (std::size_t pos = 0; (pos = text.find("->", pos)) != std::string::npos; pos += 2) ++edges;
  CHECK(edges == 8);
}

TEST_CASE("reproduce single check") {
  auto r = run_cli("reproduce --only noprml");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS  noprml") != std::string::npos);

  fs::path json_out = tmp_dir() / "report.json";
  auto rj = run_cli("reproduce --only fig2-ml6 --json " + q(json_out));
  CHECK(rj.exit_code == 0);
  auto j = multilat::parse_file(json_out);
  CHECK(j["schema"] == 1);
  CHECK(j["ok"] == true);
}

TEST_CASE("round trip through the CLI for every catalog entry") {
  for (const char* name : {"ml6-poset", "fig2-poset", "rml7", "two", "chain-5-lukasiewicz",
                           "ml6-imp-table"}) {
    fs::path f = tmp_dir() / (std::string(name) + ".json");
    auto w = run_cli(std::string("builtin ") + name + " -o " + q(f));
    CHECK(w.exit_code == 0);
    auto j1 = multilat::parse_file(f);
    // load + save again and compare
    fs::path f2 = tmp_dir() / (std::string(name) + "-2.json");
    if (std::string(name).find("poset") != std::string::npos) {
      multilat::write_file(f2, multilat::poset_to_json(multilat::load_poset(f)));
    } else {
      multilat::write_file(f2, multilat::algebra_to_json(multilat::load_algebra(f)));
    }
    CHECK(multilat::parse_file(f2) == j1);
  }
}
