// hypaut: analyze diagonal automorphisms of smooth hypersurfaces.
//
// Exit codes: 0 ok, 2 input or logic error (including audit violations),
// 3 singular hypersurface, 4 cap exceeded (partial report printed).

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "hypaut/autgrp.hpp"
#include "hypaut/errors.hpp"
#include "hypaut/harness.hpp"
#include "hypaut/poly.hpp"
#include "hypaut/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kSingular = 3;
constexpr int kCap = 4;

void emit(bool as_json, const std::string& command, const nlohmann::json& payload, const std::string& text) {
  if (as_json) {
    std::cout << hypaut::envelope(command, payload).dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int run_analyze(const std::string& poly_text, const std::string& aut_text, bool as_json, bool skip, long long cap) {
  hypaut::HomogPoly f = hypaut::parse_poly(poly_text);
  hypaut::DiagAut g = hypaut::parse_diag(aut_text);
  if (g.num_vars() > f.num_vars()) f = hypaut::parse_poly(poly_text, g.num_vars());
  auto report = hypaut::analyze(f, g, skip, cap);
  emit(as_json, "analyze", hypaut::to_json(report), hypaut::to_text(report));
  if (report.smoothness) {
    if (report.smoothness->verdict == hypaut::SmoothVerdict::Singular) return kSingular;
    if (report.smoothness->verdict == hypaut::SmoothVerdict::Inconclusive) return kCap;
  }
  return kOk;
}

int run_symmetries(const std::string& text, int num_vars, bool as_json) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw hypaut::Error("empty support");
  hypaut::HomogPoly f = hypaut::parse_poly(text, num_vars);
  auto group = hypaut::symmetry_group(f.support());
  nlohmann::json payload = hypaut::to_json(group);
  payload["support"] = f.to_string();
  emit(as_json, "symmetries", payload, hypaut::to_text(group));
  return kOk;
}

int run_bounds(int n, int d, bool as_json) {
  auto b = hypaut::bounds_report(n, d);
  emit(as_json, "bounds", hypaut::to_json(b), hypaut::to_text(b));
  return kOk;
}

int run_audit(int n, int d, const std::string& claim, bool as_json, long long cap, long long macaulay_cap) {
  hypaut::AuditOptions opt;
  opt.enumeration_cap = cap;
  opt.macaulay_cap = macaulay_cap;
  auto rep = hypaut::audit_theorem(n, d, claim, opt);
  emit(as_json, "audit", hypaut::to_json(rep), hypaut::to_text(rep));
  if (!rep.violations.empty()) return kInputError;
  if (rep.partial) return kCap;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of diagonal automorphisms of smooth hypersurfaces"};
  app.require_subcommand(1);
  bool as_json = false;
  long long cap = hypaut::kDefaultEnumerationCap;
  long long macaulay_cap = hypaut::kDefaultMacaulayCap;
  bool skip = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string poly_text, aut_text;
  auto* analyze = app.add_subcommand("analyze", "full pipeline for a polynomial and a diagonal automorphism");
  analyze->add_option("polynomial", poly_text, "e.g. \"X0^5 + X1^5 + X2^5 + X3^5\"")->required();
  analyze->add_option("automorphism", aut_text, "e.g. \"diag(z5, 1, 1, 1)\"")->required();
  analyze->add_flag("--json", as_json, "machine-readable output");
  analyze->add_flag("--skip-smoothness", skip, "do not certify smoothness; verdicts become Conditional");
  analyze->add_option("--cap", macaulay_cap, "Macaulay block size cap (rows*cols)");

  std::string sym_text;
  int sym_vars = 0;
  auto* sym = app.add_subcommand("symmetries", "diagonal symmetry group of a support");
  sym->add_option("support", sym_text, "polynomial or sum of monomials")->required();
  sym->add_option("--vars", sym_vars, "number of variables (default: inferred)");
  sym->add_flag("--json", as_json, "machine-readable output");

  int bn = 0, bd = 0;
  auto* bounds = app.add_subcommand("bounds", "numeric order bounds for (n, d)");
  bounds->add_option("n", bn)->required();
  bounds->add_option("d", bd)->required();
  bounds->add_flag("--json", as_json, "machine-readable output");

  int an = 0, ad = 0;
  std::string claim;
  auto* audit = app.add_subcommand("audit", "exhaustive audit over delta supports");
  audit->add_option("n", an)->required();
  audit->add_option("d", ad)->required();
  audit->add_option("claim", claim, "thm-1.1-codim1, thm-1.1-codim2, thm-3.3, ...")->required();
  audit->add_flag("--json", as_json, "machine-readable output");
  audit->add_option("--cap", cap, "enumeration cap per symmetry group");
  audit->add_option("--macaulay-cap", macaulay_cap, "Macaulay block size cap (rows*cols)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return run_analyze(poly_text, aut_text, as_json, skip, macaulay_cap);
    if (*sym) return run_symmetries(sym_text, sym_vars, as_json);
    if (*bounds) return run_bounds(bn, bd, as_json);
    if (*audit) return run_audit(an, ad, claim, as_json, cap, macaulay_cap);
  } catch (const hypaut::EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const hypaut::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const hypaut::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
