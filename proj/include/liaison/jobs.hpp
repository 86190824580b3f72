#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "liaison/cache.hpp"
#include "liaison/serialize.hpp"

namespace liaison {

inline constexpr const char* library_version = "liaison 0.3.0";

/// Exit codes shared by execute_job and the CLI.
enum ExitCode : int {
  exit_ok = 0,
  exit_verification_failed = 2,
  exit_budget_exceeded = 3,
  exit_input_error = 4,
};

/// Everything a command needs, normalized; unused fields keep their
/// defaults and are still echoed into the report so reruns are
/// byte-comparable.
struct JobSpec {
  std::string command;

  std::vector<std::string> vars;
  std::uint64_t characteristic = 0;
  std::string ideal_text;    // generators, comma/newline separated
  std::string by_text;       // second ideal for colon / intersect
  std::string alpha_text;    // explicit regular sequence
  std::string element_text;  // splitting-probe c
  std::string g_text;        // splitting-probe g
  std::string order_name;    // empty: the ring's canonical degrevlex

  std::string family;  // minors | hankel | pfaffians | symplectic
  std::string method;  // residual-intersection: closed | colon | cross-check
  std::string mode;    // propagate-p: link | ri
  std::size_t m = 0, n = 0, t = 0, k = 0;
  std::size_t s = 0;
  std::size_t g = 0;   // a-invariant height
  std::int64_t d = 0;  // a-invariant degree
  std::size_t steps = 1;
  std::uint32_t e_max = 1;
  std::uint64_t seed = 0;
  bool cross_check = false;

  Budget budget;
  std::string out_path;  // empty: stdout
};

inline json json_of(const JobSpec& spec) {
  return json{{"alpha", spec.alpha_text},
              {"budget", json_of(spec.budget)},
              {"by", spec.by_text},
              {"characteristic", spec.characteristic},
              {"command", spec.command},
              {"cross_check", spec.cross_check},
              {"d", spec.d},
              {"e_max", spec.e_max},
              {"element", spec.element_text},
              {"family", spec.family},
              {"g", spec.g},
              {"g_element", spec.g_text},
              {"ideal", spec.ideal_text},
              {"k", spec.k},
              {"m", spec.m},
              {"method", spec.method},
              {"mode", spec.mode},
              {"n", spec.n},
              {"order", spec.order_name},
              {"s", spec.s},
              {"seed", spec.seed},
              {"steps", spec.steps},
              {"t", spec.t},
              {"vars", spec.vars}};
}

struct Report {
  json job;
  json payload;
  std::string status;  // ok | verification-failed | budget-exceeded | input-error
  std::string error;   // empty when ok
  int exit_code = exit_ok;
};

inline json json_of(const Report& r) {
  return json{{"error", r.error},
              {"exit_code", r.exit_code},
              {"job", r.job},
              {"payload", r.payload},
              {"status", r.status},
              {"version", library_version}};
}

namespace detail {

struct Outcome {
  json payload;
  bool verified = true;  // false: report stands but the checked claim failed
};

inline RingPtr job_ring(const JobSpec& spec) {
  if (spec.vars.empty()) throw value_error(spec.command + " needs --vars");
  return RingSpec::make(spec.vars, spec.characteristic);
}

inline std::vector<Polynomial> job_polys(const std::string& text, const RingPtr& ring,
                                         const char* what) {
  std::vector<Polynomial> gens = parse_polynomial_list(text, ring);
  if (gens.empty()) throw value_error(std::string("empty polynomial list for ") + what);
  return gens;
}

inline IdealHandle job_ideal(const JobSpec& spec, const RingPtr& ring) {
  return IdealHandle(ring, job_polys(spec.ideal_text, ring, "--ideal"));
}

inline const TermOrderSpec& job_order(const JobSpec& spec, const RingPtr& ring) {
  if (spec.order_name.empty()) return ring->canonical_order();
  return ring->order(spec.order_name);
}

inline FamilyIdeal job_family(const JobSpec& spec) {
  const auto p = spec.characteristic;
  if (spec.family == "minors") {
    if (spec.m == 0 || spec.n == 0) throw value_error("minors needs --m and --n");
    std::size_t size = spec.t ? spec.t : spec.m;
    return minors_ideal(build_matrix(MatrixSpec::generic(spec.m, spec.n, p)), size);
  }
  if (spec.family == "hankel") {
    if (spec.t == 0 || spec.n == 0) throw value_error("hankel needs --t and --n");
    return minors_ideal(build_matrix(MatrixSpec::hankel(spec.t, spec.n, p)), spec.t);
  }
  if (spec.family == "pfaffians") {
    if (spec.k == 0) throw value_error("pfaffians needs --k (matrix size, odd)");
    return pfaffian_ideal(build_matrix(MatrixSpec::alternating(spec.k, p)), spec.k - 1);
  }
  if (spec.family == "symplectic") {
    if (spec.t == 0 || spec.n == 0) throw value_error("symplectic needs --t and --n");
    return symplectic_nullcone_ideal(spec.t, spec.n, p);
  }
  throw value_error("unknown family '" + spec.family + "'");
}

/// Certificate for property-p / propagate-p / kv-witness: either a family
/// instance with its recommended order and alpha, or explicit flags.
inline PropertyPCertificate job_certificate(const JobSpec& spec) {
  if (!spec.family.empty()) {
    FamilyIdeal f = job_family(spec);
    if (f.order_name.empty())
      throw value_error("family '" + spec.family + "' carries no recommended order");
    const TermOrderSpec& ord = f.ideal.ring()->order(f.order_name);
    return property_p_check(f.ideal, paper_alpha(f), ord, spec.budget);
  }
  RingPtr ring = job_ring(spec);
  IdealHandle I = job_ideal(spec, ring);
  std::vector<Polynomial> alpha = job_polys(spec.alpha_text, ring, "--alpha");
  return property_p_check(I, alpha, job_order(spec, ring), spec.budget);
}

inline RIMethod job_ri_method(const std::string& name) {
  if (name.empty() || name == "cross-check" || name == "cross_check")
    return RIMethod::cross_check;
  if (name == "closed" || name == "closed_form") return RIMethod::closed_form;
  if (name == "colon" || name == "colon_form") return RIMethod::colon_form;
  throw value_error("unknown residual-intersection method '" + name + "'");
}

inline Outcome run_command(const JobSpec& spec) {
  const std::string& cmd = spec.command;

  if (cmd == "gb") {
    RingPtr ring = job_ring(spec);
    IdealHandle I = job_ideal(spec, ring);
    return {json_of(I.groebner(job_order(spec, ring), spec.budget))};
  }

  if (cmd == "initial-ideal") {
    RingPtr ring = job_ring(spec);
    IdealHandle I = job_ideal(spec, ring);
    return {json_of(initial_ideal(I, job_order(spec, ring), spec.budget))};
  }

  if (cmd == "colon") {
    RingPtr ring = job_ring(spec);
    IdealHandle I = job_ideal(spec, ring);
    IdealHandle J(ring, job_polys(spec.by_text, ring, "--by"));
    return {json_of(colon(I, J, job_order(spec, ring), spec.budget))};
  }

  if (cmd == "intersect") {
    RingPtr ring = job_ring(spec);
    IdealHandle I = job_ideal(spec, ring);
    IdealHandle J(ring, job_polys(spec.by_text, ring, "--by"));
    return {json_of(intersect(I, J, spec.budget))};
  }

  if (cmd == "height") {
    RingPtr ring = job_ring(spec);
    IdealHandle I = job_ideal(spec, ring);
    return {json_of(dimension_and_height(I, job_order(spec, ring), spec.budget))};
  }

  if (cmd == "fedder") {
    RingPtr ring = job_ring(spec);
    IdealHandle I = job_ideal(spec, ring);
    if (!spec.alpha_text.empty()) {
      auto alpha = job_polys(spec.alpha_text, ring, "--alpha");
      LinkageFedderResult r =
          linkage_fedder_containment(alpha, I, ring->characteristic(), spec.budget);
      return {json_of(r), r.holds};
    }
    return {json_of(fedder_fpure(I, ring->characteristic(), spec.budget))};
  }

  if (cmd == "nu") {
    RingPtr ring = job_ring(spec);
    return {json_of(nu_table(job_ideal(spec, ring), spec.e_max, spec.budget))};
  }

  if (cmd == "fpt-bounds") {
    RingPtr ring = job_ring(spec);
    IdealHandle I = job_ideal(spec, ring);
    return {json_of(fpt_bounds(I, ring->characteristic(), spec.e_max, spec.budget))};
  }

  if (cmd == "fpt-mono") {
    RingPtr ring = job_ring(spec);
    return {json_of(monomial_lct_lp(job_ideal(spec, ring)))};
  }

  if (cmd == "generic-link") {
    RingPtr ring = job_ring(spec);
    IdealHandle I = job_ideal(spec, ring);
    LinkResult link = generic_link(I, {}, std::nullopt, spec.budget);
    json payload = json_of(link);
    payload["cross_check"] = nullptr;
    if (spec.cross_check) {
      // the link of a complete intersection is its s = g residual
      // intersection; compare the colon against the closed form
      std::size_t s = spec.s ? spec.s : link.height;
      RIResult ri =
          generic_residual_intersection(I.generators(), s, RIMethod::cross_check, spec.budget);
      payload["cross_check"] = json{{"method", ri_method_name(ri.method)}, {"s", s}};
    }
    return {payload};
  }

  if (cmd == "iterate-link") {
    RingPtr ring = job_ring(spec);
    IdealHandle I = job_ideal(spec, ring);
    return {json_of(iterated_generic_link(I, spec.steps, spec.budget))};
  }

  if (cmd == "residual-intersection") {
    RingPtr ring = job_ring(spec);
    auto alpha = job_polys(spec.alpha_text.empty() ? spec.ideal_text : spec.alpha_text, ring,
                           "--ideal/--alpha");
    if (spec.s == 0) throw value_error("residual-intersection needs --s");
    RIResult ri =
        generic_residual_intersection(alpha, spec.s, job_ri_method(spec.method), spec.budget);
    return {json_of(ri)};
  }

  if (cmd == "ambient-link") {
    RingPtr ring = job_ring(spec);
    IdealHandle I = job_ideal(spec, ring);
    auto alpha = job_polys(spec.alpha_text, ring, "--alpha");
    IdealHandle L = ambient_link(I, alpha, job_order(spec, ring), spec.budget);
    return {json_of(L)};
  }

  if (cmd == "double-link") {
    RingPtr ring = job_ring(spec);
    IdealHandle I = job_ideal(spec, ring);
    auto alpha = job_polys(spec.alpha_text, ring, "--alpha");
    bool ok = double_link_check(I, alpha, job_order(spec, ring), spec.budget);
    return {json{{"double_link_returns", ok}}, ok};
  }

  if (cmd == "property-p") {
    PropertyPCertificate cert = job_certificate(spec);
    return {json_of(cert), cert.valid()};
  }

  if (cmd == "propagate-p") {
    PropertyPCertificate base = job_certificate(spec);
    LiftMode mode;
    if (spec.mode == "link" || spec.mode.empty()) mode = LiftMode::link;
    else if (spec.mode == "ri") mode = LiftMode::ri;
    else throw value_error("unknown propagate mode '" + spec.mode + "'");
    PropertyPCertificate lifted = propagate_property_p(base, mode, spec.s);
    json payload{{"base", json_of(base)}, {"propagated", json_of(lifted)}};
    return {payload, base.valid() && lifted.valid()};
  }

  if (cmd == "kv-witness") {
    PropertyPCertificate cert = job_certificate(spec);
    json payload{{"certificate", json_of(cert)}, {"witness", nullptr}};
    if (!cert.valid()) return {payload, false};
    KoleyVarbaroWitness w = koley_varbaro_witness(cert);
    payload["witness"] = json_of(w);
    return {payload, w.witness_squarefree};
  }

  if (cmd == "a-invariant") {
    if (spec.d <= 0) throw value_error("a-invariant needs --d > 0");
    AInvariantInput in{spec.n, static_cast<std::size_t>(spec.d), spec.g};
    std::int64_t a = a_invariant_universal_link(in);
    return {json{{"a_invariant", a}, {"d", in.d}, {"g", in.g}, {"n", in.n}}};
  }

  if (cmd == "family") {
    return {json_of(job_family(spec))};
  }

  if (cmd == "splitting-probe") {
    RingPtr ring = job_ring(spec);
    IdealHandle J = job_ideal(spec, ring);
    Polynomial c = parse_polynomial(spec.element_text, ring);
    Polynomial g = parse_polynomial(spec.g_text, ring);
    SplittingProbe probe = splitting_probe(J, c, g, ring->characteristic(), spec.budget);
    return {json_of(probe)};
  }

  throw value_error("unknown command '" + cmd + "'");
}

}  // namespace detail

/// Runs one job; never throws. Outcomes map to the exit-code contract:
/// 0 success, 2 a checked claim failed (the payload still carries the
/// evidence), 3 budget exceeded, 4 malformed input.
inline Report execute_job(const JobSpec& spec) {
  Report rep;
  rep.job = json_of(spec);
  try {
    detail::Outcome oc = detail::run_command(spec);
    rep.payload = std::move(oc.payload);
    if (oc.verified) {
      rep.status = "ok";
      rep.exit_code = exit_ok;
    } else {
      rep.status = "verification-failed";
      rep.exit_code = exit_verification_failed;
    }
  } catch (const verification_error& e) {
    rep.status = "verification-failed";
    rep.error = e.what();
    rep.exit_code = exit_verification_failed;
  } catch (const budget_error& e) {
    rep.status = "budget-exceeded";
    rep.error = e.what();
    rep.exit_code = exit_budget_exceeded;
  } catch (const std::exception& e) {
    rep.status = "input-error";
    rep.error = e.what();
    rep.exit_code = exit_input_error;
  }
  return rep;
}

/// Serializes the report to out_path (stdout when empty). Returns the
/// report's exit code, or input-error when the path cannot be written.
inline int write_report(const Report& rep, const std::string& out_path,
                        std::ostream& fallback = std::cout) {
  std::string text = dump_report(json_of(rep));
  if (out_path.empty()) {
    fallback << text;
    return rep.exit_code;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    std::cerr << "liaison: cannot write report to '" << out_path << "'\n";
    return exit_input_error;
  }
  return rep.exit_code;
}

}  // namespace liaison
