#include "lfp/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lfp/decomp.hpp"
#include "lfp/document.hpp"
#include "lfp/ehrhart.hpp"
#include "lfp/lattice_face.hpp"

namespace lfp {

using nlohmann::ordered_json;

namespace {

ordered_json point_json(const Point& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p) a.push_back(c.str());
  return a;
}

ordered_json rationals_json(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

ordered_json coefficients_json(const UniPoly& p, std::size_t degree) {
  ordered_json a = ordered_json::array();
  for (std::size_t k = 0; k <= degree; ++k) a.push_back(p.coeff(k).str());
  return a;
}

ordered_json subset_json(const std::vector<std::size_t>& u) {
  ordered_json a = ordered_json::array();
  for (std::size_t i : u) a.push_back(i + 1);
  return a;
}

ordered_json envelope(const std::string& command, const std::string& status, ordered_json payload) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["status"] = status;
  j["payload"] = std::move(payload);
  return j;
}

Outcome error_outcome(const std::string& command, const std::string& kind, const std::string& message, int code,
                      ordered_json extra = ordered_json::object()) {
  ordered_json e;
  e["kind"] = kind;
  e["message"] = message;
  for (auto& [k, v] : extra.items()) e[k] = v;
  ordered_json payload;
  payload["error"] = std::move(e);
  const std::string status = code == kExitViolation ? "violation" : "error";
  return {envelope(command, status, std::move(payload)), code};
}

Outcome guarded(const std::string& command, const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    ordered_json loc;
    loc["field"] = e.field();
    if (e.line()) loc["line"] = *e.line();
    if (e.column()) loc["column"] = *e.column();
    return error_outcome(command, "parse", e.what(), kExitUsage, loc);
  } catch (const BudgetExceeded& e) {
    return error_outcome(command, "budget", e.what(), kExitBudget);
  } catch (const NotLatticeFaceError& e) {
    return error_outcome(command, "not_lattice_face", e.what(), kExitViolation);
  } catch (const InvariantFailure& e) {
    return error_outcome(command, "invariant_failure", e.what(), kExitViolation);
  } catch (const GeneralPositionError& e) {
    return error_outcome(command, "general_position", e.what(), kExitUsage);
  } catch (const Error& e) {
    return error_outcome(command, "input", e.what(), kExitUsage);
  }
}

ordered_json witness_json(const LatticeFaceWitness& w) {
  ordered_json j;
  j["kind"] = w.kind == LatticeFaceWitness::Kind::general_position ? "general_position" : "non_integral";
  j["level"] = w.level;
  j["subset"] = subset_json(w.subset);
  if (w.kind == LatticeFaceWitness::Kind::non_integral) {
    j["coordinate"] = w.coordinate + 1;
    j["term"] = w.variable ? "x" + std::to_string(*w.variable + 1) : std::string("constant");
    j["value"] = w.value.str();
  }
  j["description"] = w.describe();
  return j;
}

ordered_json verdict_json(const LatticeFaceVerdict& v) {
  ordered_json j;
  j["lattice_face"] = v.lattice_face;
  ordered_json gp;
  gp["ok"] = v.general_position.ok;
  if (!v.general_position.ok) {
    gp["level"] = v.general_position.level;
    gp["subset"] = subset_json(v.general_position.subset);
  }
  j["general_position"] = std::move(gp);
  j["witness"] = v.witness ? witness_json(*v.witness) : ordered_json(nullptr);
  return j;
}

Polytope load(const std::string& text, PolytopeDocument* doc_out = nullptr) {
  PolytopeDocument doc = parse_document(text);
  Polytope p = to_polytope(doc);
  if (doc_out) *doc_out = std::move(doc);
  return p;
}

ordered_json ehrhart_json(const EhrhartResult& r, std::size_t d) {
  ordered_json j;
  j["coefficients"] = coefficients_json(r.poly, d);
  j["polynomial"] = r.poly.str("m");
  if (!r.per_level_volumes.empty()) j["level_volumes"] = rationals_json(r.per_level_volumes);
  return j;
}

Integer lcm_of_denominators(const Polytope& p) {
  Integer l = 1;
  for (const auto& v : p.vertices())
    for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  return l;
}

const std::vector<std::string> kSuites = {"main2", "fdecomp", "gsigma", "det2", "zero5", "reciprocity"};

VerifyReport run_suite(const std::string& suite, const Polytope& p, bool lattice_face, bool general_position,
                       unsigned long long budget) {
  VerifyReport rep;
  rep.check = suite;
  if (suite == "main2" || suite == "reciprocity") {
    if (!lattice_face) {
      rep.cases = 1;
      rep.violations.push_back("input is not a lattice-face polytope");
      return rep;
    }
    return suite == "main2" ? check_omega_volume(p, budget) : check_reciprocity(p, budget);
  }
  if (!general_position) {
    rep.cases = 1;
    rep.violations.push_back("input is not in general position");
    return rep;
  }
  for (const auto& s : triangulate(p)) {
    VerifyReport one;
    if (suite == "fdecomp")
      one = decomposition_multiset_check(s, decomposition_grid(s, lcm_of_denominators(s)), budget);
    else if (suite == "gsigma")
      one = identity_gsigma(s);
    else if (suite == "det2")
      one = identity_det2(s);
    else
      one = identity_zero5_sweep(s);
    rep.cases += one.cases;
    for (const auto& v : one.violations) rep.violations.push_back(v);
  }
  return rep;
}

}  // namespace

Outcome usage_error(const std::string& command, const std::string& message) {
  return error_outcome(command, "usage", message, kExitUsage);
}

Outcome cmd_check(const std::string& input_text) {
  return guarded("check", [&] {
    PolytopeDocument doc;
    const Polytope p = load(input_text, &doc);
    ordered_json payload;
    if (doc.name) payload["name"] = *doc.name;
    payload["dim"] = p.dim();
    payload["vertex_count"] = p.size();
    const ordered_json verdict = verdict_json(is_lattice_face(p));
    for (const auto& [k, v] : verdict.items()) payload[k] = v;
    return Outcome{envelope("check", "ok", std::move(payload)), kExitOk};
  });
}

Outcome cmd_ehrhart(const std::string& input_text, EhrhartMode mode, unsigned long long budget) {
  return guarded("ehrhart", [&] {
    PolytopeDocument doc;
    const Polytope p = load(input_text, &doc);
    const std::size_t d = p.dim();
    ordered_json payload;
    if (doc.name) payload["name"] = *doc.name;
    payload["dim"] = d;
    payload["method"] = mode == EhrhartMode::formula ? "formula" : mode == EhrhartMode::interp ? "interp" : "both";
    std::optional<EhrhartResult> formula, interp;
    std::string status = "ok";
    if (mode != EhrhartMode::interp) {
      const LatticeFaceVerdict v = is_lattice_face(p);
      if (v.lattice_face) {
        formula = ehrhart_formula(p);
        payload["formula"] = ehrhart_json(*formula, d);
      } else {
        status = "violation";
        payload["failed_condition"] = witness_json(*v.witness);
      }
    }
    if (mode != EhrhartMode::formula) {
      interp = interpolate_ehrhart(p, budget);
      payload["interpolation"] = ehrhart_json(*interp, d);
    }
    if (formula && interp) {
      const bool agree = formula->poly == interp->poly;
      payload["agree"] = agree;
      if (!agree) status = "violation";
    }
    const EhrhartResult* primary = formula ? &*formula : interp ? &*interp : nullptr;
    if (primary) {
      payload["coefficients"] = coefficients_json(primary->poly, d);
      payload["polynomial"] = primary->poly.str("m");
    }
    return Outcome{envelope("ehrhart", status, std::move(payload)), status == "ok" ? kExitOk : kExitViolation};
  });
}

Outcome cmd_decompose(const std::string& input_text, unsigned long long budget) {
  return guarded("decompose", [&] {
    PolytopeDocument doc;
    const Polytope input = load(input_text, &doc);
    if (!input.is_simplex())
      throw DimensionError("decompose needs a simplex; triangulate the polytope and decompose each simplex");
    const GeneralPositionVerdict gp = general_position_check(input);
    if (!gp.ok) throw GeneralPositionError("input simplex is not in general position");
    std::vector<std::size_t> order;
    const Polytope s = canonical_order(input, &order);
    const bool lattice_face = is_lattice_face(s).lattice_face;
    ordered_json payload;
    if (doc.name) payload["name"] = *doc.name;
    payload["dim"] = s.dim();
    ordered_json ord = ordered_json::array();
    for (std::size_t i : order) ord.push_back(i + 1);
    payload["vertex_order"] = std::move(ord);
    payload["reordered"] = !is_canonical_order(input);
    payload["lattice_face"] = lattice_face;
    ordered_json cells = ordered_json::array();
    Integer signed_total = 0;
    for (const auto& c : decompose(s)) {
      ordered_json cj;
      cj["sigma"] = to_string(c.sigma);
      cj["sign"] = c.sign > 0 ? "+" : "-";
      ordered_json chain = ordered_json::array();
      for (const auto& x : c.chain) chain.push_back(point_json(x));
      cj["chain"] = std::move(chain);
      cj["z"] = rationals_json(c.zvec.values);
      cj["a"] = rationals_json(c.avec);
      if (lattice_face) {
        const Integer n = count_cell(s, c.sigma, budget);
        cj["count"] = to_string(n);
        signed_total += c.sign > 0 ? n : Integer(-n);
      }
      cells.push_back(std::move(cj));
    }
    payload["cells"] = std::move(cells);
    ordered_json totals;
    if (lattice_face) totals["signed_count"] = to_string(signed_total);
    totals["volume"] = volume(s).str();
    std::string status = "ok";
    if (lattice_face && Rational(signed_total) != volume(s)) status = "violation";
    payload["totals"] = std::move(totals);
    return Outcome{envelope("decompose", status, std::move(payload)), status == "ok" ? kExitOk : kExitViolation};
  });
}

Outcome cmd_verify(const VerifyRequest& request, unsigned long long budget) {
  return guarded("verify", [&] {
    std::vector<std::string> suites;
    if (request.suite == "all") {
      suites = kSuites;
    } else if (std::find(kSuites.begin(), kSuites.end(), request.suite) != kSuites.end()) {
      suites = {request.suite};
    } else {
      return usage_error("verify", "unknown suite \"" + request.suite + "\"");
    }
    struct Instance {
      std::optional<std::string> name;
      Polytope p;
      bool generated;
    };
    std::vector<Instance> instances;
    if (request.input_text) {
      PolytopeDocument doc;
      Polytope p = load(*request.input_text, &doc);
      instances.push_back({doc.name, std::move(p), false});
    } else if (request.generate) {
      const GenerateSpec& g = *request.generate;
      if (g.dim < 1 || g.dim > 4) return usage_error("verify", "--gen dimension must be in 1..4");
      for (std::size_t i = 0; i < g.count; ++i) {
        const std::uint64_t seed = g.seed ^ (0x9E3779B97F4A7C15ULL * (i + 1));
        try {
          instances.push_back({std::nullopt, generate_lattice_face_simplex(g.dim, seed), true});
        } catch (const InvariantFailure&) {
          throw;
        } catch (const Error& e) {
          return error_outcome("verify", "generation", "instance " + std::to_string(i) + ": " + e.what(), kExitUsage);
        }
      }
    } else {
      return usage_error("verify", "give an input file or --gen d seed count");
    }

    std::map<std::string, VerifyReport> totals;
    for (const auto& s : suites) totals[s].check = s;
    ordered_json inst_json = ordered_json::array();
    std::size_t violations = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const Polytope& p = instances[i].p;
      const bool lf = is_lattice_face(p).lattice_face;
      const bool gp = general_position_check(p).ok;
      ordered_json ij;
      ij["index"] = i;
      if (instances[i].name) ij["name"] = *instances[i].name;
      if (instances[i].generated) {
        ordered_json vs = ordered_json::array();
        for (const auto& v : p.vertices()) vs.push_back(point_json(v));
        ij["vertices"] = std::move(vs);
      }
      ij["lattice_face"] = lf;
      ij["volume"] = volume(p).str();
      inst_json.push_back(std::move(ij));
      for (const auto& s : suites) {
        const VerifyReport r = run_suite(s, p, lf, gp, budget);
        totals[s].cases += r.cases;
        for (const auto& v : r.violations) totals[s].violations.push_back("instance " + std::to_string(i) + ": " + v);
      }
    }
    ordered_json suites_json = ordered_json::array();
    for (const auto& s : suites) {
      const VerifyReport& r = totals[s];
      ordered_json sj;
      sj["suite"] = s;
      sj["cases"] = r.cases;
      sj["ok"] = r.ok();
      sj["violations"] = r.violations;
      violations += r.violations.size();
      suites_json.push_back(std::move(sj));
    }
    ordered_json payload;
    payload["instances"] = std::move(inst_json);
    payload["suites"] = std::move(suites_json);
    payload["violation_count"] = violations;
    const std::string status = violations == 0 ? "ok" : "violation";
    return Outcome{envelope("verify", status, std::move(payload)), violations == 0 ? kExitOk : kExitViolation};
  });
}

}  // namespace lfp
