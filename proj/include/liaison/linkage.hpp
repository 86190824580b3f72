#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liaison/groebner.hpp"
#include "liaison/matrix.hpp"

namespace liaison {

/// Grid of fresh link variables Y_{i,j} (1-based row/col in names), with
/// their indices in the extended ring.
struct YLayout {
  std::size_t rows = 0, cols = 0;
  std::string prefix;
  std::vector<std::vector<std::string>> names;       // [row][col]
  std::vector<std::vector<std::size_t>> indices;     // into the extended ring
};

namespace detail {

inline std::string grid_name(const std::string& prefix, std::size_t i, std::size_t j) {
  // Digits concatenate while unambiguous; underscores once indices grow.
  if (i <= 9 && j <= 9) return prefix + std::to_string(i) + std::to_string(j);
  return prefix + std::to_string(i) + "_" + std::to_string(j);
}

/// Deterministic fresh prefix: "Y", then "YB", "YC", ... on collision.
inline std::string fresh_grid_prefix(const RingSpec& ring, std::size_t rows, std::size_t cols) {
  auto clashes = [&](const std::string& prefix) {
    for (std::size_t i = 1; i <= rows; ++i)
      for (std::size_t j = 1; j <= cols; ++j)
        if (ring.index_of(grid_name(prefix, i, j))) return true;
    return false;
  };
  if (!clashes("Y")) return "Y";
  for (char c = 'B'; c <= 'Z'; ++c) {
    std::string prefix = std::string("Y") + c;
    if (!clashes(prefix)) return prefix;
  }
  throw value_error("no fresh Y-prefix available");
}

inline std::pair<RingPtr, YLayout> adjoin_grid(const RingPtr& ring, std::size_t rows,
                                               std::size_t cols) {
  YLayout layout;
  layout.rows = rows;
  layout.cols = cols;
  layout.prefix = fresh_grid_prefix(*ring, rows, cols);
  std::vector<std::string> fresh;
  layout.names.assign(rows, {});
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= cols; ++j) {
      std::string nm = grid_name(layout.prefix, i, j);
      layout.names[i - 1].push_back(nm);
      fresh.push_back(std::move(nm));
    }
  }
  RingPtr ext = ring->extend(fresh);
  layout.indices.assign(rows, std::vector<std::size_t>(cols, 0));
  std::size_t base = ring->var_count();
  for (std::size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) layout.indices[i][j] = base + i * cols + j;
  return {std::move(ext), std::move(layout)};
}

/// Entries of M = Y . [f_1 ... f_n]^T in the extended ring.
inline std::vector<Polynomial> m_entries(const RingPtr& ext, const YLayout& layout,
                                         const std::vector<Polynomial>& gens) {
  if (layout.cols != gens.size()) throw value_error("Y layout does not match generator count");
  std::vector<Polynomial> out;
  out.reserve(layout.rows);
  for (std::size_t i = 0; i < layout.rows; ++i) {
    Polynomial acc = Polynomial::zero(ext);
    for (std::size_t j = 0; j < layout.cols; ++j)
      acc = acc + Polynomial::variable(ext, layout.indices[i][j]) * promote(gens[j], ext);
    out.push_back(std::move(acc));
  }
  return out;
}

inline void require_homogeneous(const std::vector<Polynomial>& gens, const char* who) {
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw value_error(std::string(who) + " wants homogeneous generators");
}

}  // namespace detail

struct LinkResult {
  RingPtr extended_ring;
  YLayout layout;
  std::vector<Polynomial> regular_sequence;  // the M entries (beta)
  IdealHandle a_ideal;                       // (regular_sequence)
  IdealHandle link_ideal;                    // a : I R[Y]
  std::size_t height;                        // height of I (= height of the link)
};

/// Generic link L_1(I) = aR[Y] : IR[Y] with a = entries of Y.[gens]^T for a
/// fresh g x n grid Y, g = height(I). Unmixedness of I is an asserted
/// precondition (true for the shipped families), not verified. The colon is
/// computed under order_for_colon (over the extended ring) when given, else
/// the extended ring's canonical order.
inline LinkResult generic_link(const IdealHandle& I, std::vector<Polynomial> gens = {},
                               std::optional<TermOrderSpec> order_for_colon = std::nullopt,
                               const Budget& budget = Budget{},
                               std::optional<std::size_t> asserted_height = std::nullopt) {
  const RingPtr& R = I.ring();
  if (gens.empty()) gens = I.generators();
  if (gens.empty()) throw value_error("generic_link of the zero ideal");
  detail::require_homogeneous(gens, "generic_link");
  // The explicit list must present the same ideal; cheap structural check
  // first, GB equality as the fallback.
  {
    auto a = detail::dedup_polys(gens);
    auto b = detail::dedup_polys(I.generators());
    if (a != b && !ideals_equal(IdealHandle(R, gens), I, R->canonical_order(), budget))
      throw value_error("generic_link: gens do not generate I");
  }
  std::size_t g = asserted_height
                      ? *asserted_height
                      : dimension_and_height(I, R->canonical_order(), budget).height;
  if (g == 0) throw value_error("generic_link needs height >= 1");

  auto [ext, layout] = detail::adjoin_grid(R, g, gens.size());
  std::vector<Polynomial> beta = detail::m_entries(ext, layout, gens);
  IdealHandle a_ideal(ext, beta);
  std::vector<Polynomial> promoted;
  promoted.reserve(gens.size());
  for (const auto& f : gens) promoted.push_back(promote(f, ext));
  const TermOrderSpec ord = order_for_colon ? *order_for_colon : ext->canonical_order();
  IdealHandle link = colon(a_ideal, IdealHandle(ext, promoted), ord, budget);
  return {ext, std::move(layout), std::move(beta), std::move(a_ideal), std::move(link), g};
}

struct IteratedLink {
  IdealHandle final_ideal;  // L_n(I); equals I when steps is empty
  std::vector<LinkResult> steps;
};

/// L_n(I) = L_1(L_{n-1}(I)), threading the extended rings. n_steps = 0
/// returns I itself. Heights are recomputed per step (linkage preserves
/// them; the recomputation doubles as a cross-check).
inline IteratedLink iterated_generic_link(const IdealHandle& I, std::size_t n_steps,
                                          const Budget& budget = Budget{}) {
  IteratedLink out{I, {}};
  IdealHandle current = I;
  for (std::size_t k = 0; k < n_steps; ++k) {
    LinkResult step = generic_link(current, {}, std::nullopt, budget);
    current = step.link_ideal;
    out.steps.push_back(std::move(step));
  }
  out.final_ideal = current;
  return out;
}

/// Ambient link (alpha) : I, no new variables (Cor 3.5 setting): alpha must
/// sit inside I, have length height(I), be certified regular via squarefree
/// pairwise-coprime initial terms under `order`, and generate a strictly
/// smaller ideal than I.
inline IdealHandle ambient_link(const IdealHandle& I, const std::vector<Polynomial>& alpha,
                                const TermOrderSpec& order, const Budget& budget = Budget{}) {
  const RingPtr& R = I.ring();
  if (alpha.empty()) throw value_error("ambient_link: empty alpha");
  std::vector<Monomial> inis;
  for (const auto& a : alpha) {
    if (a.is_zero()) throw value_error("ambient_link: zero element in alpha");
    Monomial m = a.leading_monomial(order);
    if (!m.squarefree()) throw value_error("ambient_link: initial term not squarefree");
    for (const auto& seen : inis)
      if (!seen.coprime(m))
        throw value_error("ambient_link: initial terms not pairwise coprime");
    inis.push_back(std::move(m));
  }
  for (const auto& a : alpha)
    if (!ideal_member(a, I, order, budget)) throw value_error("ambient_link: alpha not inside I");
  std::size_t h = dimension_and_height(I, order, budget).height;
  if (alpha.size() != h)
    throw value_error("ambient_link: |alpha| = " + std::to_string(alpha.size()) +
                      " but height(I) = " + std::to_string(h));
  IdealHandle A(R, alpha);
  if (ideal_contains(A, I, order, budget))
    throw value_error("ambient_link: (alpha) = I, not a proper link setup");
  return colon(A, I, order, budget);
}

/// Prop 2.5 round trip: J = (alpha):I, then (alpha):J = I?
inline bool double_link_check(const IdealHandle& I, const std::vector<Polynomial>& alpha,
                              const TermOrderSpec& order, const Budget& budget = Budget{}) {
  IdealHandle J = ambient_link(I, alpha, order, budget);
  IdealHandle back = colon(IdealHandle(I.ring(), alpha), J, order, budget);
  return ideals_equal(back, I, order, budget);
}

enum class RIMethod { closed_form, colon_form, cross_check };

struct RIResult {
  RingPtr extended_ring;
  YLayout layout;                      // s x g
  std::vector<Polynomial> m_entries;   // s entries of Y.[alpha]^T
  IdealHandle ideal;                   // the residual intersection
  RIMethod method;
};

/// Generic residual intersection RI(s; alpha) for a complete intersection
/// alpha of length g and s >= g: closed form (entries of M) + I_g(Y), colon
/// form (M) : (alpha), or both with an equality assertion.
inline RIResult generic_residual_intersection(const std::vector<Polynomial>& alpha, std::size_t s,
                                              RIMethod method = RIMethod::cross_check,
                                              const Budget& budget = Budget{}) {
  if (alpha.empty()) throw value_error("residual intersection: empty alpha");
  std::size_t g = alpha.size();
  if (s < g)
    throw value_error("residual intersection wants s >= " + std::to_string(g) + ", got s = " +
                      std::to_string(s));
  const RingPtr& R = alpha.front().ring();
  for (const auto& a : alpha)
    if (a.is_zero() || !a.ring()->same_structure(*R))
      throw value_error("residual intersection: bad alpha entry");
  detail::require_homogeneous(alpha, "residual intersection");

  auto [ext, layout] = detail::adjoin_grid(R, s, g);
  std::vector<Polynomial> M = detail::m_entries(ext, layout, alpha);

  auto closed = [&]() {
    std::vector<Polynomial> gens = M;
    // I_g(Y): maximal minors of the s x g grid.
    PolyMatrix Y(ext, s, g);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < g; ++j)
        Y.set(i, j, Polynomial::variable(ext, layout.indices[i][j]));
    std::vector<std::size_t> rows(g);
    // enumerate g-subsets of {0..s-1} in lexicographic order
    for (std::size_t i = 0; i < g; ++i) rows[i] = i;
    std::vector<std::size_t> cols(g);
    for (std::size_t j = 0; j < g; ++j) cols[j] = j;
    while (true) {
      gens.push_back(minor_determinant(Y, rows, cols));
      std::size_t k = g;
      while (k > 0 && rows[k - 1] == s - g + (k - 1)) --k;
      if (k == 0) break;
      ++rows[k - 1];
      for (std::size_t l = k; l < g; ++l) rows[l] = rows[l - 1] + 1;
    }
    return IdealHandle(ext, std::move(gens));
  };
  auto colon_form = [&]() {
    std::vector<Polynomial> promoted;
    promoted.reserve(alpha.size());
    for (const auto& a : alpha) promoted.push_back(promote(a, ext));
    return colon(IdealHandle(ext, M), IdealHandle(ext, promoted), ext->canonical_order(), budget);
  };

  // The lambdas read layout and M, so run them before moving either.
  switch (method) {
    case RIMethod::closed_form: {
      IdealHandle res = closed();
      return {ext, std::move(layout), std::move(M), std::move(res), method};
    }
    case RIMethod::colon_form: {
      IdealHandle res = colon_form();
      return {ext, std::move(layout), std::move(M), std::move(res), method};
    }
    case RIMethod::cross_check: {
      IdealHandle a = closed();
      IdealHandle b = colon_form();
      if (!ideals_equal(a, b, ext->canonical_order(), budget))
        throw verification_error(
            "residual intersection closed form != colon form; this is a library bug");
      return {ext, std::move(layout), std::move(M), std::move(a), method};
    }
  }
  throw value_error("unreachable");
}

enum class LiftMode { link, ri };

/// The lifted term orders: a lex block over the Y grid ranked per the mode,
/// followed by the base order on the original variables. When the base
/// order is itself a single lex block the two merge into one lex ranking.
///
/// link mode (g x n grid): Y_11 > Y_22 > ... > Y_gg > remaining Y row-major
/// > base variables.
/// ri mode (s x g grid): rows s down to g right-to-left; then rows g-1 down
/// to 1, each led by Y_{i,i+1} followed by the rest of the row right-to-left;
/// then base variables.
inline TermOrderSpec lifted_order(const TermOrderSpec& base, const YLayout& layout,
                                  LiftMode mode) {
  std::vector<std::uint32_t> y_rank;
  auto push = [&](std::size_t i, std::size_t j) {  // 0-based grid coords
    y_rank.push_back(static_cast<std::uint32_t>(layout.indices[i][j]));
  };
  if (mode == LiftMode::link) {
    if (layout.rows > layout.cols) throw value_error("link lift wants g <= n");
    for (std::size_t i = 0; i < layout.rows; ++i) push(i, i);
    for (std::size_t i = 0; i < layout.rows; ++i)
      for (std::size_t j = 0; j < layout.cols; ++j)
        if (i != j) push(i, j);
  } else {
    std::size_t s = layout.rows, g = layout.cols;
    if (s < g) throw value_error("ri lift wants s >= g");
    for (std::size_t i = s; i >= std::max<std::size_t>(g, 1); --i) {
      for (std::size_t j = g; j >= 1; --j) push(i - 1, j - 1);
      if (i == 1) break;
    }
    for (std::size_t i = std::min(g - 1, s); i >= 1; --i) {
      push(i - 1, i);  // Y_{i,i+1} leads its row
      for (std::size_t j = g; j >= 1; --j)
        if (j != i + 1) push(i - 1, j - 1);
      if (i == 1) break;
    }
  }
  if (base.single_block() && base.kind() == OrderKind::lex) {
    std::vector<std::uint32_t> all = y_rank;
    all.insert(all.end(), base.blocks()[0].ranking.begin(), base.blocks()[0].ranking.end());
    return TermOrderSpec::lex(std::move(all));
  }
  std::vector<OrderBlock> blocks;
  blocks.push_back({OrderKind::lex, std::move(y_rank)});
  for (const auto& b : base.blocks()) blocks.push_back(b);
  return TermOrderSpec::product(std::move(blocks));
}

/// Same, from the mode's shape alone — link(g, n) or ri(g, s) — assuming the
/// deterministic layout: Y appended after the base variables, row-major.
inline TermOrderSpec lifted_order(const TermOrderSpec& base, LiftMode mode, std::size_t g,
                                  std::size_t n_or_s) {
  std::size_t rows = mode == LiftMode::link ? g : n_or_s;
  std::size_t cols = mode == LiftMode::link ? n_or_s : g;
  if (rows == 0 || cols == 0) throw value_error("lifted_order: empty grid");
  std::size_t base_count = 0;
  for (const auto& b : base.blocks()) base_count += b.ranking.size();
  YLayout layout;
  layout.rows = rows;
  layout.cols = cols;
  layout.indices.assign(rows, std::vector<std::size_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) layout.indices[i][j] = base_count + i * cols + j;
  return lifted_order(base, layout, mode);
}

enum class HeightMode { computed, asserted };
enum class MembershipMode { structural, groebner, by_construction };

/// Certificate for property P: alpha inside I with squarefree pairwise
/// coprime initial terms and |alpha| = height(I). All checks re-runnable
/// from the stored data; failures are recorded, not thrown.
struct PropertyPCertificate {
  PropertyPCertificate(IdealHandle ideal_, TermOrderSpec order_, std::vector<Polynomial> alpha_)
      : ideal(std::move(ideal_)), order(std::move(order_)), alpha(std::move(alpha_)) {}

  IdealHandle ideal;
  TermOrderSpec order;
  std::vector<Polynomial> alpha;
  bool membership = false;
  bool squarefree = false;
  bool coprime = false;
  bool count_equals_height = false;
  std::size_t height_used = 0;
  HeightMode height_mode = HeightMode::computed;
  MembershipMode membership_mode = MembershipMode::structural;
  std::vector<Monomial> initial_terms;
  std::vector<std::string> assumptions;

  bool valid() const { return membership && squarefree && coprime && count_equals_height; }
};

inline PropertyPCertificate property_p_check(const IdealHandle& I,
                                             const std::vector<Polynomial>& alpha,
                                             const TermOrderSpec& order,
                                             const Budget& budget = Budget{},
                                             std::optional<std::size_t> asserted_height = std::nullopt) {
  PropertyPCertificate cert(I, order, alpha);
  cert.assumptions.push_back("unmixedness of the ideal is asserted, not verified");

  cert.membership = true;
  cert.membership_mode = MembershipMode::structural;
  for (const auto& a : alpha) {
    bool structural = false;
    for (const auto& g : I.generators())
      if (g == a) {
        structural = true;
        break;
      }
    if (!structural) {
      cert.membership_mode = MembershipMode::groebner;
      if (!ideal_member(a, I, order, budget)) {
        cert.membership = false;
        break;
      }
    }
  }

  cert.squarefree = true;
  cert.coprime = true;
  for (const auto& a : alpha) {
    if (a.is_zero()) throw value_error("property_p_check: zero element in alpha");
    Monomial m = a.leading_monomial(order);
    if (!m.squarefree()) cert.squarefree = false;
    for (const auto& seen : cert.initial_terms)
      if (!seen.coprime(m)) cert.coprime = false;
    cert.initial_terms.push_back(std::move(m));
  }

  if (asserted_height) {
    cert.height_used = *asserted_height;
    cert.height_mode = HeightMode::asserted;
    cert.assumptions.push_back("height asserted by caller (closed-form family value)");
  } else {
    cert.height_used = dimension_and_height(I, order, budget).height;
    cert.height_mode = HeightMode::computed;
  }
  cert.count_equals_height = alpha.size() == cert.height_used;
  return cert;
}

/// Lemma 3.3 / RI-theorem propagation. link mode: beta_i = i-th entry of
/// Y.[gens]^T for gens led by cert.alpha, with in(beta_i) = Y_ii in(alpha_i)
/// under the lifted order. ri mode: beta = first g-1 M-entries + adjacent-row
/// g-minors of Y, with the displayed initial terms. Membership of beta in
/// the link is by construction (beta lies inside the colon numerator), so no
/// GB of the link ideal is needed; heights carry over from linkage theory
/// (link) or equal s (RI theorem) and are recorded as asserted.
inline PropertyPCertificate propagate_property_p(const PropertyPCertificate& cert, LiftMode mode,
                                                 std::size_t s_for_ri = 0) {
  if (!cert.valid()) throw value_error("propagate_property_p wants a valid certificate");
  const RingPtr& R = cert.ideal.ring();
  std::size_t g = cert.alpha.size();

  if (mode == LiftMode::link) {
    // Generators led by alpha, followed by the remaining generators of I.
    std::vector<Polynomial> gens = cert.alpha;
    for (const auto& f : cert.ideal.generators()) {
      bool in_alpha = false;
      for (const auto& a : cert.alpha)
        if (a == f) in_alpha = true;
      if (!in_alpha) gens.push_back(f);
    }
    auto [ext, layout] = detail::adjoin_grid(R, g, gens.size());
    std::vector<Polynomial> beta = detail::m_entries(ext, layout, gens);
    TermOrderSpec lifted = lifted_order(cert.order, layout, LiftMode::link);

    PropertyPCertificate out(IdealHandle(ext, beta), lifted, beta);
    out.membership = true;
    out.membership_mode = MembershipMode::by_construction;
    out.squarefree = true;
    out.coprime = true;
    for (std::size_t i = 0; i < g; ++i) {
      Monomial got = beta[i].leading_monomial(lifted);
      Monomial expect = promote(Polynomial::monomial(R, cert.initial_terms[i]), ext)
                            .leading_monomial(lifted)
                            .times(Monomial::variable(ext->var_count(), layout.indices[i][i]));
      if (got != expect)
        throw verification_error("lifted order failed to give in(beta_i) = Y_ii in(alpha_i)");
      if (!got.squarefree()) out.squarefree = false;
      for (const auto& seen : out.initial_terms)
        if (!seen.coprime(got)) out.coprime = false;
      out.initial_terms.push_back(std::move(got));
    }
    out.height_used = g;
    out.height_mode = HeightMode::asserted;
    out.count_equals_height = beta.size() == g;
    out.assumptions = cert.assumptions;
    out.assumptions.push_back(
        "certificate concerns the generic link (beta) : I; beta lies in the link by construction "
        "and the link's height equals height(I) by linkage theory");
    return out;
  }

  // ri mode
  std::size_t s = s_for_ri;
  if (s < g) throw value_error("propagate_property_p(ri) wants s >= g");
  if (g < 1) throw value_error("propagate_property_p(ri): empty alpha");
  auto [ext, layout] = detail::adjoin_grid(R, s, g);
  std::vector<Polynomial> M = detail::m_entries(ext, layout, cert.alpha);
  TermOrderSpec lifted = lifted_order(cert.order, layout, LiftMode::ri);

  PolyMatrix Y(ext, s, g);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < g; ++j)
      Y.set(i, j, Polynomial::variable(ext, layout.indices[i][j]));

  std::vector<Polynomial> beta(M.begin(), M.begin() + static_cast<std::ptrdiff_t>(g - 1));
  std::vector<Monomial> expected;
  auto y_var = [&](std::size_t i, std::size_t j) {  // 0-based
    return Monomial::variable(ext->var_count(), layout.indices[i][j]);
  };
  for (std::size_t i = 0; i + 1 < g; ++i) {
    Monomial base_ini = promote(Polynomial::monomial(R, cert.initial_terms[i + 1]), ext)
                            .leading_monomial(lifted);
    expected.push_back(base_ini.times(y_var(i, i + 1)));
  }
  for (std::size_t r = 0; r + g <= s; ++r) {
    std::vector<std::size_t> rows(g), cols(g);
    for (std::size_t k = 0; k < g; ++k) {
      rows[k] = r + k;
      cols[k] = k;
    }
    beta.push_back(minor_determinant(Y, rows, cols));
    Monomial diag = Monomial::one(ext->var_count());
    for (std::size_t k = 0; k < g; ++k) diag = diag.times(y_var(r + k, k));
    expected.push_back(diag);
  }

  PropertyPCertificate out(IdealHandle(ext, beta), lifted, beta);
  out.membership = true;
  out.membership_mode = MembershipMode::by_construction;
  out.squarefree = true;
  out.coprime = true;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    Monomial got = beta[i].leading_monomial(lifted);
    if (got != expected[i])
      throw verification_error("ri lifted order produced an unexpected initial term");
    if (!got.squarefree()) out.squarefree = false;
    for (const auto& seen : out.initial_terms)
      if (!seen.coprime(got)) out.coprime = false;
    out.initial_terms.push_back(std::move(got));
  }
  out.height_used = s;
  out.height_mode = HeightMode::asserted;
  out.count_equals_height = beta.size() == s;
  out.assumptions = cert.assumptions;
  out.assumptions.push_back(
      "certificate concerns RI(s; alpha); beta lies in the residual intersection by construction "
      "and its height equals s by the RI theorem");
  return out;
}

struct KoleyVarbaroWitness {
  Polynomial product;       // f = prod alpha_i
  bool witness_squarefree;  // in(f) squarefree under the certificate order
};

/// Theorem 2.13 route: a valid certificate makes in(f), f = prod alpha_i,
/// a squarefree monomial inside in(I), hence in(I) is squarefree.
inline KoleyVarbaroWitness koley_varbaro_witness(const PropertyPCertificate& cert) {
  if (!cert.valid()) throw value_error("koley_varbaro_witness wants a valid certificate");
  Polynomial f = Polynomial::constant(cert.ideal.ring(), 1);
  for (const auto& a : cert.alpha) f = f * a;
  return {f, f.leading_monomial(cert.order).squarefree()};
}

struct AInvariantInput {
  std::size_t n;  // ambient variable count
  std::size_t d;  // common generator degree
  std::size_t g;  // height
};

/// a(S / universal link) = d(g-1) - n.
inline std::int64_t a_invariant_universal_link(const AInvariantInput& in) {
  if (in.n == 0 || in.d == 0 || in.g == 0)
    throw value_error("a_invariant_universal_link wants positive n, d, g");
  if (in.g > in.n) throw value_error("a_invariant_universal_link wants g <= n");
  return static_cast<std::int64_t>(in.d) * (static_cast<std::int64_t>(in.g) - 1) -
         static_cast<std::int64_t>(in.n);
}

}  // namespace liaison
