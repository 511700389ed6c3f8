// ehrhart-lf: lattice-face checks, Ehrhart polynomials and signed
// decompositions from JSON polytope files.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lfp/commands.hpp"

namespace {

bool read_input(const std::string& path, std::string& out) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) return false;
    ss << in.rdbuf();
  }
  out = ss.str();
  return true;
}

int emit(const lfp::Outcome& o) {
  std::cout << o.report.dump(2) << "\n";
  return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ehrhart polynomials of lattice-face polytopes"};
  app.require_subcommand(1);
  unsigned long long budget = lfp::kDefaultBudget;
  app.add_option("--budget", budget, "Cap on grid-scan and enumeration steps")->capture_default_str();

  std::string file;
  auto* check = app.add_subcommand("check", "Decide the lattice-face property and report a witness");
  check->add_option("file", file, "Polytope JSON file, or - for stdin")->required();

  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial by volume formula and/or interpolation");
  ehrhart->add_option("file", file, "Polytope JSON file, or - for stdin")->required();
  std::string method = "formula";
  ehrhart->add_option("--method", method, "formula, interp or both")
      ->check(CLI::IsMember({"formula", "interp", "both"}))
      ->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Signed cell decomposition of a simplex");
  decompose->add_option("file", file, "Simplex JSON file, or - for stdin")->required();

  auto* verify = app.add_subcommand("verify", "Run invariant suites on a file or on generated instances");
  verify->add_option("file", file, "Polytope JSON file, or - for stdin");
  std::vector<std::uint64_t> gen;
  verify->add_option("--gen", gen, "Generate instances: d seed count")->expected(3);
  std::string suite = "all";
  verify->add_option("--suite", suite, "main2, fdecomp, gsigma, det2, zero5, reciprocity or all")
      ->check(CLI::IsMember({"main2", "fdecomp", "gsigma", "det2", "zero5", "reciprocity", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : lfp::kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string text;
  if (!file.empty() && !read_input(file, text)) return emit(lfp::usage_error(command, "cannot read " + file));

  if (check->parsed()) return emit(lfp::cmd_check(text));
  if (ehrhart->parsed()) {
    const auto mode = method == "interp" ? lfp::EhrhartMode::interp
                      : method == "both" ? lfp::EhrhartMode::both
                                         : lfp::EhrhartMode::formula;
    return emit(lfp::cmd_ehrhart(text, mode, budget));
  }
  if (decompose->parsed()) return emit(lfp::cmd_decompose(text, budget));

  lfp::VerifyRequest req;
  req.suite = suite;
  if (!file.empty() && !gen.empty()) return emit(lfp::usage_error(command, "give either a file or --gen, not both"));
  if (!file.empty()) req.input_text = text;
  if (!gen.empty()) req.generate = lfp::GenerateSpec{static_cast<std::size_t>(gen[0]), gen[1], static_cast<std::size_t>(gen[2])};
  return emit(lfp::cmd_verify(req, budget));
}
