#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liaison/groebner.hpp"
#include "liaison/simplex.hpp"

namespace liaison {

namespace detail {

inline std::uint64_t char_of(const IdealHandle& I, const char* who) {
  std::uint64_t p = I.ring()->characteristic();
  if (p == 0) throw value_error(std::string(who) + " needs positive characteristic");
  return p;
}

inline std::uint64_t pow_u64_checked(std::uint64_t p, std::uint32_t e) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (q > (std::uint64_t(1) << 32)) throw budget_error("p^e exceeds the supported range");
    q *= p;
  }
  return q;
}

/// Some term has every exponent < q, i.e. the polynomial is not in m^[q].
inline bool survives_bracket(const Polynomial& f, std::uint64_t q) {
  for (const auto& t : f.terms()) {
    bool alive = true;
    for (auto e : t.mono.exponents())
      if (e >= q) alive = false;
    if (alive) return true;
  }
  return false;
}

/// Drop every term with an exponent >= q. Sound for nu computations since
/// m^[q] is a (monomial) ideal: pruned terms can never push a later product
/// back out of m^[q], and membership in m^[q] is termwise.
inline Polynomial prune_bracket(const Polynomial& f, std::uint64_t q) {
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    bool alive = true;
    for (auto e : t.mono.exponents())
      if (e >= q) alive = false;
    if (alive) kept.push_back(t);
  }
  if (kept.size() == f.term_count()) return f;
  return Polynomial::from_terms(f.ring(), kept);
}

}  // namespace detail

/// (I^[p^e] : I), the Fedder colon.
inline IdealHandle frobenius_colon(const IdealHandle& I, std::uint64_t p, std::uint32_t e = 1,
                                   const Budget& budget = Budget{}) {
  if (p != detail::char_of(I, "frobenius_colon"))
    throw value_error("frobenius_colon: p must be the ring characteristic");
  std::uint64_t q = detail::pow_u64_checked(p, e);
  return colon(bracket_power(I, q), I, I.ring()->canonical_order(), budget);
}

struct FPurityVerdict {
  bool f_pure;
  std::uint64_t prime;
  /// Generator of (I^[p] : I) with a term outside m^[p]; present iff f_pure.
  std::optional<Polynomial> witness;
};

/// Fedder's criterion at the homogeneous maximal ideal: R/I is F-pure iff
/// (I^[p] : I) is not contained in m^[p]. Containment in the monomial ideal
/// m^[p] is decided termwise on the colon's generators.
inline FPurityVerdict fedder_fpure(const IdealHandle& I, std::uint64_t p,
                                   const Budget& budget = Budget{}) {
  if (p != detail::char_of(I, "fedder_fpure"))
    throw value_error("fedder_fpure: p must be the ring characteristic");
  if (I.zero_ideal_presentation()) return {true, p, Polynomial::constant(I.ring(), 1)};
  for (const auto& g : I.generators())
    if (!g.is_homogeneous()) throw value_error("fedder_fpure wants homogeneous generators");
  if (I.groebner(I.ring()->canonical_order(), budget).contains_unit())
    throw value_error("fedder_fpure: ideal is the unit ideal");
  IdealHandle C = frobenius_colon(I, p, 1, budget);
  for (const auto& g : C.generators()) {
    if (detail::survives_bracket(g, p)) return {true, p, g};
  }
  return {false, p, std::nullopt};
}

struct LinkageFedderResult {
  IdealHandle link;         // J = (alpha) : I
  IdealHandle alpha_colon;  // (alpha)^[p] : (alpha)
  bool holds;               // alpha_colon inside (I^[p]:I) cap (J^[p]:J)
};

/// Checks the linkage transfer containment (alpha)^[p]:(alpha) subseteq
/// (I^[p]:I) cap (J^[p]:J) for J = (alpha):I. Membership d in (K^[p]:K) is
/// checked definitionally (d*k in K^[p] for every generator k), which needs
/// only the GB of K^[p].
inline LinkageFedderResult linkage_fedder_containment(const std::vector<Polynomial>& alpha,
                                                      const IdealHandle& I, std::uint64_t p,
                                                      const Budget& budget = Budget{}) {
  if (p != detail::char_of(I, "linkage_fedder_containment"))
    throw value_error("linkage_fedder_containment: p must be the ring characteristic");
  if (alpha.empty()) throw value_error("linkage_fedder_containment: empty regular sequence");
  const auto& ord = I.ring()->canonical_order();
  IdealHandle A(I.ring(), alpha);
  if (!ideal_contains(I, A, ord, budget))
    throw value_error("linkage_fedder_containment: (alpha) must sit inside I");
  if (ideal_contains(A, I, ord, budget))
    throw value_error("linkage_fedder_containment: (alpha) must be strictly smaller than I");
  auto ha = dimension_and_height(A, ord, budget);
  auto hi = dimension_and_height(I, ord, budget);
  if (ha.height != hi.height)
    throw value_error("linkage_fedder_containment: height mismatch between (alpha) and I");

  IdealHandle J = colon(A, I, ord, budget);
  IdealHandle D = frobenius_colon(A, p, 1, budget);

  auto inside_fedder_colon = [&](const IdealHandle& K) {
    IdealHandle Kq = bracket_power(K, p);  // keep the handle alive with its GB cache
    const GroebnerBasis& gbq = Kq.groebner(ord, budget);
    for (const auto& d : D.generators()) {
      for (const auto& k : K.generators()) {
        Polynomial prod = d * k;
        if (prod.is_zero()) continue;
        if (!normal_form(prod, gbq.elements, ord, budget).is_zero()) return false;
      }
    }
    return true;
  };

  bool holds = inside_fedder_colon(I) && inside_fedder_colon(J);
  return {std::move(J), std::move(D), holds};
}

struct NuTable {
  std::uint64_t prime;
  std::size_t generator_count;
  /// (e, nu(p^e)) pairs, e ascending.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> values;
};

/// nu_I(p^e) = max { r : I^r not inside m^[p^e] } by brute-force expansion
/// of generator products, with terms already inside m^[q] pruned after each
/// multiplication (exact; see prune_bracket).
inline std::uint64_t nu_value(const IdealHandle& I, std::uint32_t e,
                              const Budget& budget = Budget{}) {
  std::uint64_t p = detail::char_of(I, "nu");
  if (e == 0) throw value_error("nu wants e >= 1");
  if (I.zero_ideal_presentation()) throw value_error("nu of the zero ideal");
  for (const auto& g : I.generators()) {
    if (!g.is_homogeneous()) throw value_error("nu wants homogeneous generators");
    for (const auto& t : g.terms())
      if (t.mono.is_one()) throw value_error("nu wants an ideal inside the maximal ideal");
  }
  std::uint64_t q = detail::pow_u64_checked(p, e);

  auto dedup = [](std::vector<Polynomial> v) { return detail::dedup_polys(std::move(v)); };

  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) {
    Polynomial h = detail::prune_bracket(g, q);
    if (!h.is_zero()) gens.push_back(h);
  }
  gens = dedup(std::move(gens));
  if (gens.empty()) return 0;

  std::uint64_t bound = static_cast<std::uint64_t>(I.generators().size()) * (q - 1);
  std::vector<Polynomial> level = gens;
  std::uint64_t steps = 0;
  for (std::uint64_t r = 1;; ++r) {
    if (r >= bound) return bound;  // nu <= N(q-1), so survival here is final
    std::vector<Polynomial> next;
    next.reserve(level.size() * gens.size());
    for (const auto& f : level) {
      for (const auto& g : gens) {
        if (++steps > budget.max_steps) throw budget_error("nu: product budget exceeded");
        Polynomial h = detail::prune_bracket(f * g, q);
        if (!h.is_zero()) next.push_back(std::move(h));
      }
    }
    next = dedup(std::move(next));
    if (next.empty()) return r;
    if (next.size() > 200000) throw budget_error("nu: level width exceeded");
    level = std::move(next);
  }
}

inline NuTable nu_table(const IdealHandle& I, std::uint32_t e_max, const Budget& budget = Budget{}) {
  NuTable t{detail::char_of(I, "nu"), I.generators().size(), {}};
  for (std::uint32_t e = 1; e <= e_max; ++e) t.values.emplace_back(e, nu_value(I, e, budget));
  return t;
}

/// For alpha with squarefree pairwise-coprime initial terms (property P
/// data), nu_(alpha)(p^e) = g (p^e - 1) with witness (prod alpha_i)^(p^e-1).
/// Verifies the hypotheses and returns the closed form.
inline std::uint64_t nu_witness_fast(const std::vector<Polynomial>& alpha,
                                     const TermOrderSpec& order, std::uint32_t e) {
  if (alpha.empty()) throw value_error("nu_witness_fast: empty sequence");
  std::uint64_t p = alpha.front().ring()->characteristic();
  if (p == 0) throw value_error("nu_witness_fast needs positive characteristic");
  std::vector<Monomial> inis;
  for (const auto& a : alpha) {
    Monomial m = a.leading_monomial(order);
    if (!m.squarefree())
      throw value_error("nu_witness_fast: initial term not squarefree");
    for (const auto& seen : inis)
      if (!seen.coprime(m)) throw value_error("nu_witness_fast: initial terms not pairwise coprime");
    inis.push_back(std::move(m));
  }
  std::uint64_t q = detail::pow_u64_checked(p, e);
  return static_cast<std::uint64_t>(alpha.size()) * (q - 1);
}

struct FptBounds {
  mpq_class lower;  // max_e nu(p^e) / p^e
  mpq_class upper;  // height bound
  NuTable nu;
};

inline FptBounds fpt_bounds(const IdealHandle& I, std::uint64_t p, std::uint32_t e_max,
                            const Budget& budget = Budget{},
                            std::optional<std::size_t> asserted_height = std::nullopt) {
  if (p != detail::char_of(I, "fpt_bounds"))
    throw value_error("fpt_bounds: p must be the ring characteristic");
  if (e_max == 0) throw value_error("fpt_bounds wants e_max >= 1");
  NuTable t = nu_table(I, e_max, budget);
  mpq_class lower = 0;
  for (const auto& [e, nu] : t.values) {
    mpq_class cand(static_cast<unsigned long>(nu),
                   static_cast<unsigned long>(detail::pow_u64_checked(p, e)));
    cand.canonicalize();
    if (cand > lower) lower = cand;
  }
  std::size_t h = asserted_height
                      ? *asserted_height
                      : dimension_and_height(I, I.ring()->canonical_order(), budget).height;
  mpq_class upper(static_cast<unsigned long>(h));
  if (lower > upper)
    throw verification_error("fpt bounds crossed; nu or height computation is buggy");
  return {std::move(lower), std::move(upper), std::move(t)};
}

struct NewtonLP {
  std::vector<std::vector<std::uint32_t>> exponents;  // generator exponent rows
  mpq_class value;                                    // the log canonical threshold
  std::vector<mpq_class> multipliers;                 // optimal mu, one per generator
};

/// Exact lct of a proper monomial ideal: maximize sum(mu) subject to
/// sum_j mu_j a_j <= (1,...,1), mu >= 0, over the generator exponents a_j.
inline NewtonLP monomial_lct_lp(const IdealHandle& I) {
  if (I.zero_ideal_presentation()) throw value_error("monomial_lct of the zero ideal");
  std::vector<std::vector<std::uint32_t>> expo;
  for (const auto& g : I.generators()) {
    if (!g.is_monomial()) throw value_error("monomial_lct wants monomial generators");
    const Monomial& m = g.terms()[0].mono;
    if (m.is_one()) throw value_error("monomial_lct of the unit ideal");
    expo.push_back(m.exponents());
  }
  std::size_t n = I.ring()->var_count();
  std::size_t k = expo.size();
  std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(k, 0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) A[i][j] = static_cast<unsigned long>(expo[j][i]);
  std::vector<mpq_class> b(n, 1), c(k, 1);
  SimplexResult res = simplex_maximize(A, b, c);
  if (!res.bounded)
    throw verification_error("monomial lct LP unbounded; generators were not proper monomials");
  return {std::move(expo), std::move(res.value), std::move(res.solution)};
}

inline mpq_class monomial_lct(const IdealHandle& I) { return monomial_lct_lp(I).value; }

struct SplittingProbe {
  Polynomial element;       // c^(p-2) * g^(p-1)
  bool in_colon;            // element * J inside J^[p]
  bool outside_m_bracket;   // element not in m^[p]
  bool splits() const { return in_colon && outside_m_bracket; }
};

/// Probes whether c^(p-2) g^(p-1) witnesses a Frobenius splitting for J:
/// membership in (J^[p] : J) checked definitionally, non-membership in
/// m^[p] checked termwise.
inline SplittingProbe splitting_probe(const IdealHandle& J, const Polynomial& c,
                                      const Polynomial& g, std::uint64_t p,
                                      const Budget& budget = Budget{}) {
  if (p != detail::char_of(J, "splitting_probe"))
    throw value_error("splitting_probe: p must be the ring characteristic");
  if (c.is_zero() || g.is_zero()) throw value_error("splitting_probe wants nonzero c, g");
  Polynomial el = c.pow(static_cast<std::uint32_t>(p - 2)) *
                  g.pow(static_cast<std::uint32_t>(p - 1));
  const auto& ord = J.ring()->canonical_order();
  IdealHandle Jq = bracket_power(J, p);  // keep the handle alive with its GB cache
  const GroebnerBasis& gbq = Jq.groebner(ord, budget);
  bool in_colon = true;
  for (const auto& b : J.generators()) {
    Polynomial prod = el * b;
    if (prod.is_zero()) continue;
    if (!normal_form(prod, gbq.elements, ord, budget).is_zero()) {
      in_colon = false;
      break;
    }
  }
  bool outside = detail::survives_bracket(el, p);
  return {std::move(el), in_colon, outside};
}

}  // namespace liaison
