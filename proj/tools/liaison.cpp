// liaison CLI: every library operation as a subcommand emitting one JSON
// report. Exit codes: 0 success, 2 a checked claim failed, 3 budget
// exceeded, 4 malformed input. Reports are byte-identical across reruns.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liaison/jobs.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string piece;
  for (char c : csv) {
    if (c == ',') {
      if (!piece.empty()) out.push_back(piece);
      piece.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      piece += c;
    }
  }
  if (!piece.empty()) out.push_back(piece);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace liaison;

  CLI::App app{"exact linkage, initial ideals, and F-singularity verification"};
  app.require_subcommand(1);

  JobSpec spec;
  std::string vars_csv;
  bool no_cache = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--vars", vars_csv, "ring variables, comma separated");
    sub->add_option("--char", spec.characteristic, "coefficient characteristic (0 = rationals)");
    sub->add_option("--order", spec.order_name, "term order registered on the ring");
    sub->add_option("--out", spec.out_path, "write the JSON report to this path");
    sub->add_option("--budget-steps", spec.budget.max_steps, "reduction step budget");
    sub->add_option("--budget-degree", spec.budget.max_degree, "basis degree budget");
    sub->add_option("--budget-vars", spec.budget.max_variables, "ring size budget");
    sub->add_option("--budget-seconds", spec.budget.max_seconds, "wall clock budget");
    sub->add_option("--seed", spec.seed, "seed echoed into the report");
    sub->add_flag("--no-cache", no_cache, "skip the on-disk Groebner cache");
    return sub;
  };
  auto with_ideal = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--ideal", spec.ideal_text, "generators, comma separated");
    if (required) opt->required();
    return sub;
  };
  auto with_family = [&](CLI::App* sub) {
    sub->add_option("--family", spec.family, "minors | hankel | pfaffians | symplectic");
    sub->add_option("--m", spec.m, "matrix rows (minors)");
    sub->add_option("--n", spec.n, "matrix columns / symplectic columns");
    sub->add_option("--t", spec.t, "minor size / hankel rows / symplectic half-rows");
    sub->add_option("--k", spec.k, "alternating matrix size (pfaffians)");
    return sub;
  };

  with_ideal(common(app.add_subcommand("gb", "reduced Groebner basis")));
  with_ideal(common(app.add_subcommand("initial-ideal", "initial ideal and squarefreeness")));

  auto* cln = with_ideal(common(app.add_subcommand("colon", "ideal quotient I : J")));
  cln->add_option("--by", spec.by_text, "the J generators")->required();
  auto* meet = with_ideal(common(app.add_subcommand("intersect", "ideal intersection")));
  meet->add_option("--by", spec.by_text, "the J generators")->required();

  with_ideal(common(app.add_subcommand("height", "Krull dimension and height")));

  auto* fed = with_ideal(common(app.add_subcommand(
      "fedder", "Fedder F-purity verdict; with --alpha, the linkage containment")));
  fed->add_option("--alpha", spec.alpha_text, "regular sequence inside the ideal");

  auto* nu = with_ideal(common(app.add_subcommand("nu", "nu_I(p^e) table")));
  nu->add_option("--e-max", spec.e_max, "largest Frobenius exponent e");
  auto* fpt = with_ideal(common(app.add_subcommand("fpt-bounds", "F-pure threshold bounds")));
  fpt->add_option("--e-max", spec.e_max, "largest Frobenius exponent e");

  with_ideal(common(app.add_subcommand("fpt-mono", "exact lct of a monomial ideal")));

  auto* link = with_ideal(common(app.add_subcommand("generic-link", "generic link L_1(I)")));
  link->add_flag("--cross-check", spec.cross_check,
                 "also compare against the closed-form residual intersection");
  link->add_option("--s", spec.s, "residual intersection size for the cross-check");

  auto* iter = with_ideal(common(app.add_subcommand("iterate-link", "iterated generic links")));
  iter->add_option("--steps", spec.steps, "number of linkage steps");

  auto* ri = common(app.add_subcommand("residual-intersection",
                                       "generic residual intersection RI(s; alpha)"));
  with_ideal(ri, false);
  ri->add_option("--alpha", spec.alpha_text, "the complete intersection (same as --ideal)");
  ri->add_option("--s", spec.s, "number of generic combinations")->required();
  ri->add_option("--method", spec.method, "closed | colon | cross-check");

  auto* amb = with_ideal(common(app.add_subcommand("ambient-link", "link inside the same ring")));
  amb->add_option("--alpha", spec.alpha_text, "certified regular sequence")->required();
  auto* dbl = with_ideal(common(app.add_subcommand("double-link", "check (alpha):((alpha):I) = I")));
  dbl->add_option("--alpha", spec.alpha_text, "certified regular sequence")->required();

  auto* pp = with_family(common(app.add_subcommand("property-p", "property-P certificate")));
  with_ideal(pp, false);
  pp->add_option("--alpha", spec.alpha_text, "candidate regular sequence (with --ideal)");

  auto* prop = with_family(common(app.add_subcommand("propagate-p", "lift a certificate")));
  with_ideal(prop, false);
  prop->add_option("--alpha", spec.alpha_text, "candidate regular sequence (with --ideal)");
  prop->add_option("--mode", spec.mode, "link | ri");
  prop->add_option("--s", spec.s, "residual intersection size (ri mode)");

  auto* kv = with_family(common(app.add_subcommand("kv-witness", "squarefree product witness")));
  with_ideal(kv, false);
  kv->add_option("--alpha", spec.alpha_text, "candidate regular sequence (with --ideal)");

  auto* ainv = common(app.add_subcommand("a-invariant", "a-invariant of the universal link"));
  ainv->add_option("--n", spec.n, "ambient variable count")->required();
  ainv->add_option("--d", spec.d, "common generator degree")->required();
  ainv->add_option("--g", spec.g, "height")->required();

  with_family(common(app.add_subcommand("family", "build a family ideal and its metadata")))
      ->get_option("--family")
      ->required();

  auto* probe = with_ideal(common(app.add_subcommand(
      "splitting-probe", "does c^(p-2) g^(p-1) witness a splitting?")));
  probe->add_option("--c", spec.element_text, "the multiplier c")->required();
  probe->add_option("--g", spec.g_text, "the generator g")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "liaison: " << e.what() << "\n";
    return liaison::exit_input_error;
  }

  spec.command = app.get_subcommands().front()->get_name();
  spec.vars = split_csv(vars_csv);

  if (!no_cache) install_gb_disk_cache();
  Report rep = execute_job(spec);
  return write_report(rep, spec.out_path);
}
