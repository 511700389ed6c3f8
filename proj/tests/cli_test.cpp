#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "lfp/commands.hpp"
#include "lfp/document.hpp"

using namespace lfp;
using nlohmann::ordered_json;

namespace {

const char* kTall = R"({"name": "tall", "dim": 3, "vertices": [["0","0","0"],["4","0","0"],["3","6","0"],["2","2","10"]]})";
const char* kRoof = R"({"dim": 2, "vertices": [["0","0"],["1","1"],["2","0"]]})";
const char* kSteep = R"({"dim": 2, "vertices": [["0","0"],["2","0"],["2","1"]]})";

std::vector<std::string> strings(const ordered_json& arr) {
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(v.get<std::string>());
  return out;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("ehrhart_lf_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(EHRHART_LF_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("document round trip") {
  const PolytopeDocument doc = parse_document(kTall);
  CHECK(doc.name == std::optional<std::string>("tall"));
  CHECK(doc.dim == 3);
  CHECK(doc.vertices.size() == 4);
  CHECK(parse_document(emit_document(doc)) == doc);
  std::mt19937_64 rng(131);
  for (int t = 0; t < 30; ++t) {
    const Polytope p = fixtures::random_simplex(rng, 1 + static_cast<std::size_t>(t % 4), 6, 5);
    const PolytopeDocument d = to_document(p, t % 2 ? std::optional<std::string>("p" + std::to_string(t)) : std::nullopt);
    const PolytopeDocument back = parse_document(emit_document(d));
    CHECK(back == d);
    CHECK(to_polytope(back).vertices() == p.vertices());
  }
  CHECK(parse_document(R"({"dim": 1, "vertices": [[0], ["7/2"]]})").vertices[1][0] == Rational(Integer(7), Integer(2)));
}

TEST_CASE("parse errors carry a location") {
  auto field_of = [](const std::string& text) {
    try {
      parse_document(text);
    } catch (const ParseError& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  CHECK(field_of(R"({"dim": 1, "vertices": [["3//4"], ["1"]]})") == "/vertices/0/0");
  CHECK(field_of(R"({"dim": 2, "vertices": [["0","0"], ["1"], ["0","1"]]})") == "/vertices/1");
  CHECK(field_of(R"({"vertices": [["0"], ["1"]]})") == "/dim");
  CHECK(field_of(R"({"dim": 1, "vertices": [["0"], ["1"]], "extra": 1})") == "/extra");
  CHECK(field_of(R"({"dim": 1, "vertices": [[0.5], ["1"]]})") == "/vertices/0/0");
  try {
    parse_document("{\n  \"dim\": 1,\n  \"vertices\": [[\"0\"], \n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    REQUIRE(e.line().has_value());
    CHECK(*e.line() >= 3);
  }
}

TEST_CASE("check command") {
  const Outcome roof = cmd_check(kRoof);
  CHECK(roof.exit_code == kExitOk);
  CHECK(roof.report["schema"] == kReportSchema);
  CHECK(roof.report["command"] == "check");
  CHECK(roof.report["status"] == "ok");
  CHECK(roof.report["payload"]["lattice_face"] == true);
  const Outcome steep = cmd_check(kSteep);
  CHECK(steep.exit_code == kExitOk);
  CHECK(steep.report["payload"]["lattice_face"] == false);
  CHECK(steep.report["payload"]["witness"]["subset"] == ordered_json::array({1, 3}));
  CHECK(steep.report["payload"]["witness"]["kind"] == "non_integral");
  const Outcome bad = cmd_check(R"({"dim": 1, "vertices": [["3//4"], ["1"]]})");
  CHECK(bad.exit_code == kExitUsage);
  CHECK(bad.report["status"] == "error");
  CHECK(bad.report["payload"]["error"]["kind"] == "parse");
  CHECK(bad.report["payload"]["error"]["field"] == "/vertices/0/0");
}

TEST_CASE("ehrhart command") {
  const Outcome both = cmd_ehrhart(kTall, EhrhartMode::both);
  CHECK(both.exit_code == kExitOk);
  CHECK(strings(both.report["payload"]["coefficients"]) == std::vector<std::string>{"1", "4", "12", "40"});
  CHECK(both.report["payload"]["agree"] == true);
  CHECK(strings(both.report["payload"]["formula"]["level_volumes"]) == std::vector<std::string>{"1", "4", "12", "40"});
  const Outcome interp = cmd_ehrhart(kSteep, EhrhartMode::interp);
  CHECK(interp.exit_code == kExitOk);
  CHECK(strings(interp.report["payload"]["coefficients"]) == std::vector<std::string>{"1", "2", "1"});
  CHECK_FALSE(interp.report["payload"].contains("formula"));
  const Outcome formula = cmd_ehrhart(kSteep, EhrhartMode::formula);
  CHECK(formula.exit_code == kExitViolation);
  CHECK(formula.report["status"] == "violation");
  CHECK(formula.report["payload"]["failed_condition"]["subset"] == ordered_json::array({1, 3}));
  const Outcome budget = cmd_ehrhart(kTall, EhrhartMode::interp, 100);
  CHECK(budget.exit_code == kExitBudget);
  CHECK(budget.report["payload"]["error"]["kind"] == "budget");
}

TEST_CASE("decompose command") {
  const Outcome r = cmd_decompose(kTall);
  CHECK(r.exit_code == kExitOk);
  const auto& cells = r.report["payload"]["cells"];
  REQUIRE(cells.size() == 6);
  std::string signs;
  for (const auto& c : cells) signs += c["sign"].get<std::string>();
  CHECK(signs == "+++++-");
  CHECK(cells[0]["sigma"] == "123");
  CHECK(cells[0]["count"] == "20");
  CHECK(cells[0]["chain"][1] == ordered_json::array({"2", "0", "0"}));
  CHECK(cells[0]["chain"][2] == ordered_json::array({"2", "2", "0"}));
  CHECK(r.report["payload"]["totals"]["signed_count"] == "40");
  CHECK(r.report["payload"]["totals"]["volume"] == "40");
  const Outcome seg = cmd_decompose(R"({"dim": 1, "vertices": [["0"], ["5"]]})");
  CHECK(seg.report["payload"]["cells"].size() == 1);
  CHECK(seg.report["payload"]["cells"][0]["sign"] == "+");
  const Outcome square = cmd_decompose(R"({"dim": 2, "vertices": [["0","0"],["1","0"],["0","1"],["1","1"]]})");
  CHECK(square.exit_code == kExitUsage);
  CHECK(square.report["payload"]["error"]["message"].get<std::string>().find("triangulate") != std::string::npos);
}

TEST_CASE("verify command") {
  VerifyRequest file_req{std::string(kTall), std::nullopt, "main2"};
  const Outcome main2 = cmd_verify(file_req);
  CHECK(main2.exit_code == kExitOk);
  CHECK(main2.report["payload"]["violation_count"] == 0);
  file_req.suite = "reciprocity";
  CHECK(cmd_verify(file_req).exit_code == kExitOk);
  const Outcome gen = cmd_verify(VerifyRequest{std::nullopt, GenerateSpec{3, 42, 20}, "all"});
  CHECK(gen.exit_code == kExitOk);
  CHECK(gen.report["status"] == "ok");
  CHECK(gen.report["payload"]["instances"].size() == 20);
  CHECK(gen.report["payload"]["suites"].size() == 6);
  const Outcome unknown = cmd_verify(VerifyRequest{std::string(kTall), std::nullopt, "nope"});
  CHECK(unknown.exit_code == kExitUsage);
}

TEST_CASE("reports are deterministic") {
  CHECK(cmd_decompose(kTall).report.dump() == cmd_decompose(kTall).report.dump());
  const VerifyRequest req{std::nullopt, GenerateSpec{2, 7, 5}, "all"};
  CHECK(cmd_verify(req).report.dump() == cmd_verify(req).report.dump());
}

TEST_CASE("binary exit codes") {
  const std::string tall = write_temp("tall.json", kTall);
  const std::string steep = write_temp("steep.json", kSteep);
  const std::string broken = write_temp("broken.json", R"({"dim": 1, "vertices": [["3//4"], ["1"]]})");
  const Run ok = run("ehrhart --method both " + tall);
  CHECK(ok.exit_code == 0);
  const ordered_json parsed = ordered_json::parse(ok.out);
  CHECK(strings(parsed["payload"]["coefficients"]) == std::vector<std::string>{"1", "4", "12", "40"});
  CHECK(run("ehrhart " + tall).out == run("ehrhart " + tall).out);
  CHECK(run("ehrhart --method formula " + steep).exit_code == 1);
  CHECK(run("check " + broken).exit_code == 2);
  CHECK(run("check /nonexistent/polytope.json").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("--budget 50 ehrhart --method interp " + tall).exit_code == 3);
  CHECK(run("verify --gen 2 1 3 --suite all").exit_code == 0);
  CHECK(run("decompose - < " + tall).exit_code == 0);
  std::filesystem::remove(tall);
  std::filesystem::remove(steep);
  std::filesystem::remove(broken);
}
