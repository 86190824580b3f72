#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "liaison/families.hpp"
#include "liaison/fsing.hpp"
#include "liaison/linkage.hpp"

namespace liaison {

using nlohmann::json;  // std::map-backed: object keys serialize sorted

/// Canonical rational rendering: reduced "a/b", plain "a" for integers.
inline std::string rational_str(const mpq_class& q) { return q.get_str(); }

inline std::string ri_method_name(RIMethod m) {
  switch (m) {
    case RIMethod::closed_form: return "closed_form";
    case RIMethod::colon_form: return "colon_form";
    case RIMethod::cross_check: return "cross_check";
  }
  return "?";
}

inline std::string lift_mode_name(LiftMode m) { return m == LiftMode::link ? "link" : "ri"; }

inline std::string height_mode_name(HeightMode m) {
  return m == HeightMode::computed ? "computed" : "asserted";
}

inline std::string membership_mode_name(MembershipMode m) {
  switch (m) {
    case MembershipMode::structural: return "structural";
    case MembershipMode::groebner: return "groebner";
    case MembershipMode::by_construction: return "by_construction";
  }
  return "?";
}

inline json json_of(const RingPtr& ring) {
  return json{{"characteristic", ring->characteristic()}, {"variables", ring->variables()}};
}

inline json json_of(const TermOrderSpec& order) { return order.signature(); }

inline json json_of(const Polynomial& f) { return f.str(); }

inline json json_of(const std::vector<Polynomial>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(f.str());
  return a;
}

inline json json_of(const Monomial& m, const RingPtr& ring) {
  return Polynomial::monomial(ring, m).str();
}

inline json json_of(const std::vector<Monomial>& ms, const RingPtr& ring) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(json_of(m, ring));
  return a;
}

inline json json_of(const IdealHandle& I) {
  return json{{"generators", json_of(I.generators())}, {"ring", json_of(I.ring())}};
}

inline json json_of(const GroebnerBasis& gb) {
  return json{{"elements", json_of(gb.elements)}, {"order", gb.order.signature()}};
}

inline json json_of(const MonomialIdeal& mi) {
  return json{{"generators", json_of(mi.generators(), mi.ring())},
              {"ring", json_of(mi.ring())}};
}

inline json json_of(const InitialIdeal& ini) {
  return json{{"ideal", json_of(ini.ideal)}, {"squarefree", ini.squarefree}};
}

inline json json_of(const DimensionHeight& dh) {
  return json{{"dimension", dh.dimension}, {"height", dh.height}};
}

inline json json_of(const FPurityVerdict& v) {
  json j{{"f_pure", v.f_pure}, {"prime", v.prime}};
  j["witness"] = v.witness ? json(v.witness->str()) : json(nullptr);
  return j;
}

inline json json_of(const LinkageFedderResult& r) {
  return json{{"alpha_colon", json_of(r.alpha_colon)},
              {"holds", r.holds},
              {"link", json_of(r.link)}};
}

inline json json_of(const NuTable& t) {
  json values = json::array();
  for (const auto& [e, nu] : t.values) values.push_back(json{{"e", e}, {"nu", nu}});
  return json{{"generator_count", t.generator_count}, {"prime", t.prime}, {"values", values}};
}

inline json json_of(const FptBounds& b) {
  return json{{"lower", rational_str(b.lower)},
              {"nu", json_of(b.nu)},
              {"upper", rational_str(b.upper)}};
}

inline json json_of(const NewtonLP& lp) {
  json mults = json::array();
  for (const auto& m : lp.multipliers) mults.push_back(rational_str(m));
  return json{{"exponents", lp.exponents},
              {"lct", rational_str(lp.value)},
              {"multipliers", mults}};
}

inline json json_of(const SplittingProbe& p) {
  return json{{"element", p.element.str()},
              {"in_colon", p.in_colon},
              {"outside_m_bracket", p.outside_m_bracket},
              {"splits", p.splits()}};
}

inline json json_of(const YLayout& y) {
  return json{{"cols", y.cols}, {"names", y.names}, {"prefix", y.prefix}, {"rows", y.rows}};
}

inline json json_of(const LinkResult& r) {
  return json{{"a_ideal", json_of(r.a_ideal)},
              {"extended_ring", json_of(r.extended_ring)},
              {"height", r.height},
              {"layout", json_of(r.layout)},
              {"link_ideal", json_of(r.link_ideal)},
              {"regular_sequence", json_of(r.regular_sequence)}};
}

inline json json_of(const IteratedLink& it) {
  json steps = json::array();
  for (const auto& s : it.steps) steps.push_back(json_of(s));
  return json{{"final_ideal", json_of(it.final_ideal)}, {"steps", steps}};
}

inline json json_of(const RIResult& r) {
  return json{{"extended_ring", json_of(r.extended_ring)},
              {"ideal", json_of(r.ideal)},
              {"layout", json_of(r.layout)},
              {"m_entries", json_of(r.m_entries)},
              {"method", ri_method_name(r.method)}};
}

inline json json_of(const PropertyPCertificate& c) {
  return json{{"alpha", json_of(c.alpha)},
              {"assumptions", c.assumptions},
              {"coprime", c.coprime},
              {"count_equals_height", c.count_equals_height},
              {"height_mode", height_mode_name(c.height_mode)},
              {"height_used", c.height_used},
              {"ideal", json_of(c.ideal)},
              {"initial_terms", json_of(c.initial_terms, c.ideal.ring())},
              {"membership", c.membership},
              {"membership_mode", membership_mode_name(c.membership_mode)},
              {"order", c.order.signature()},
              {"squarefree", c.squarefree},
              {"valid", c.valid()}};
}

inline json json_of(const KoleyVarbaroWitness& w) {
  return json{{"product", w.product.str()}, {"witness_squarefree", w.witness_squarefree}};
}

inline json json_of(const FamilyIdeal& f) {
  json j{{"alpha_indices", f.alpha_indices},
         {"degree", f.degree},
         {"family", f.family},
         {"gens_are_groebner", f.gens_are_groebner},
         {"ideal", json_of(f.ideal)},
         {"notes", f.notes},
         {"order_name", f.order_name}};
  j["height"] = f.height ? json(*f.height) : json(nullptr);
  return j;
}

inline json json_of(const Budget& b) {
  return json{{"max_degree", b.max_degree},
              {"max_seconds", b.max_seconds},
              {"max_steps", b.max_steps},
              {"max_variables", b.max_variables}};
}

/// Canonical byte rendering of a report: two-space indent, sorted keys
/// (the json type is map-backed), trailing newline.
inline std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace liaison
