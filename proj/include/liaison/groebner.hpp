#pragma once

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "liaison/parse.hpp"
#include "liaison/polynomial.hpp"

namespace liaison {

/// A (reduced) Groebner basis: monic elements, none with a leading monomial
/// dividing another's, tails fully reduced, sorted ascending by leading
/// monomial. This presentation is unique for a given ideal and order, which
/// the determinism guarantees lean on.
struct GroebnerBasis {
  std::vector<Polynomial> elements;
  TermOrderSpec order;

  bool zero_ideal() const { return elements.empty(); }

  /// The ideal is the whole ring iff the reduced basis is {1}.
  bool contains_unit() const {
    return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
  }
};

namespace detail {

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xF];
    v >>= 4;
  }
  return s;
}

/// Terms sorted strictly descending under the engine's active order.
struct OrdPoly {
  std::vector<Term> t;
  std::uint64_t sugar = 0;

  bool zero() const { return t.empty(); }
  const Term& lead() const { return t.front(); }
};

class GbEngine {
public:
  GbEngine(const TermOrderSpec& order, const Budget& budget)
      : ord_(order), budget_(budget),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.max_seconds))) {}

  const TermOrderSpec& order() const { return ord_; }
  std::uint64_t steps() const { return steps_; }

  OrdPoly to_ord(const Polynomial& p) const {
    OrdPoly f;
    f.t.assign(p.terms().begin(), p.terms().end());
    std::sort(f.t.begin(), f.t.end(),
              [&](const Term& a, const Term& b) { return ord_.compare(a.mono, b.mono) > 0; });
    f.sugar = p.is_zero() ? 0 : p.degree();
    return f;
  }

  static Polynomial from_ord(const RingPtr& ring, const OrdPoly& f) {
    return Polynomial::from_terms(ring, f.t);
  }

  /// f - c * u * g, merging sorted term lists.
  OrdPoly axpy(const OrdPoly& f, const Coefficient& c, const Monomial& u, const OrdPoly& g) {
    tick();
    OrdPoly out;
    out.t.reserve(f.t.size() + g.t.size());
    out.sugar = std::max(f.sugar, g.sugar + u.degree());
    std::size_t i = 0, j = 0;
    while (i < f.t.size() && j < g.t.size()) {
      Monomial gm = g.t[j].mono.times(u);
      int cmp = ord_.compare(f.t[i].mono, gm);
      if (cmp > 0) {
        out.t.push_back(f.t[i++]);
      } else if (cmp < 0) {
        out.t.push_back({-(c * g.t[j].coeff), std::move(gm)});
        ++j;
      } else {
        Coefficient s = f.t[i].coeff - c * g.t[j].coeff;
        if (!s.is_zero()) out.t.push_back({std::move(s), f.t[i].mono});
        ++i;
        ++j;
      }
    }
    while (i < f.t.size()) out.t.push_back(f.t[i++]);
    while (j < g.t.size()) {
      out.t.push_back({-(c * g.t[j].coeff), g.t[j].mono.times(u)});
      ++j;
    }
    return out;
  }

  /// Full normal form (leading term and tails) against basis, first-divisor
  /// reducer selection. Deterministic for a fixed basis order.
  OrdPoly reduce(OrdPoly p, const std::vector<OrdPoly>& basis) {
    OrdPoly rem;
    rem.sugar = p.sugar;
    while (!p.zero()) {
      bool reduced = false;
      for (const auto& g : basis) {
        if (g.zero()) continue;
        if (g.lead().mono.divides(p.lead().mono)) {
          Coefficient c = p.lead().coeff / g.lead().coeff;
          Monomial u = p.lead().mono.quotient(g.lead().mono);
          std::uint64_t s = p.sugar;
          p = axpy(p, c, u, g);
          p.sugar = std::max(s, g.sugar + u.degree());
          reduced = true;
          break;
        }
      }
      if (!reduced) {
        rem.t.push_back(p.lead());
        p.t.erase(p.t.begin());
      }
    }
    rem.sugar = std::max(rem.sugar, p.sugar);
    return rem;
  }

  void tick() {
    if (++steps_ > budget_.max_steps)
      throw budget_error("reduction step budget exceeded (" + std::to_string(budget_.max_steps) +
                         " steps)");
    if ((steps_ & 0xFF) == 0 && std::chrono::steady_clock::now() > deadline_)
      throw budget_error("wall-clock budget exceeded");
  }

private:
  const TermOrderSpec& ord_;
  const Budget& budget_;
  std::uint64_t steps_ = 0;
  std::chrono::steady_clock::time_point deadline_;
};

struct SPair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t sugar;
};

/// Buchberger with the Gebauer-Moeller pair update and sugar selection.
class Buchberger {
public:
  Buchberger(RingPtr ring, const TermOrderSpec& order, const Budget& budget)
      : ring_(std::move(ring)), engine_(order, budget), budget_(budget) {}

  GroebnerBasis run(const std::vector<Polynomial>& gens) {
    if (ring_->var_count() > budget_.max_variables)
      throw budget_error("ring has " + std::to_string(ring_->var_count()) +
                         " variables; GB budget admits " + std::to_string(budget_.max_variables));
    const TermOrderSpec& ord = engine_.order();

    std::vector<Polynomial> inputs;
    for (const auto& g : gens)
      if (!g.is_zero()) inputs.push_back(g.monic(ord));
    std::sort(inputs.begin(), inputs.end(), [&](const Polynomial& a, const Polynomial& b) {
      int c = ord.compare(a.leading_monomial(ord), b.leading_monomial(ord));
      if (c != 0) return c < 0;
      return a.compare_canonical(b) < 0;
    });
    inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());

    for (const auto& f : inputs) add_element(engine_.to_ord(f));

    while (!pairs_.empty()) {
      std::size_t best = select_pair();
      SPair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      OrdPoly s = spoly(pr);
      OrdPoly h = engine_.reduce(std::move(s), basis_);
      if (h.zero()) continue;
      Coefficient lc = h.lead().coeff;
      if (!lc.is_one()) {
        Coefficient inv = lc.inverse();
        for (auto& t : h.t) t.coeff = t.coeff * inv;
      }
      std::uint64_t deg = 0;
      for (const auto& t : h.t) deg = std::max(deg, t.mono.degree());
      if (deg > budget_.max_degree)
        throw budget_error("basis element degree " + std::to_string(deg) +
                           " exceeds degree budget " + std::to_string(budget_.max_degree));
      add_element(std::move(h));
    }

    return finalize();
  }

private:
  OrdPoly spoly(const SPair& pr) {
    // Basis elements are monic, so S(f,g) = u*f - v*g.
    const OrdPoly& f = basis_[pr.i];
    const OrdPoly& g = basis_[pr.j];
    Monomial u = pr.lcm.quotient(f.lead().mono);
    OrdPoly uf;
    uf.t.reserve(f.t.size());
    for (const auto& t : f.t) uf.t.push_back({t.coeff, t.mono.times(u)});
    uf.sugar = f.sugar + u.degree();
    Monomial v = pr.lcm.quotient(g.lead().mono);
    OrdPoly r = engine_.axpy(uf, Coefficient::one(ring_->characteristic()), v, g);
    r.sugar = pr.sugar;
    return r;
  }

  std::size_t select_pair() const {
    const TermOrderSpec& ord = engine_.order();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const SPair& a = pairs_[k];
      const SPair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      int c = ord.compare(a.lcm, b.lcm);
      if (c != 0) {
        if (c < 0) best = k;
        continue;
      }
      if (a.i != b.i ? a.i < b.i : a.j < b.j) best = k;
    }
    return best;
  }

  /// Gebauer-Moeller update: add element t, prune new and old pairs.
  void add_element(OrdPoly h) {
    std::size_t t = basis_.size();
    const Monomial& lt = h.lead().mono;

    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cand;
    cand.reserve(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Monomial& li = basis_[i].lead().mono;
      cand.push_back({i, Monomial::lcm(li, lt), li.coprime(lt)});
    }

    // New-pair criteria (B-W "UPDATE"): keep (i,t) if the leads are coprime
    // or no other candidate lcm divides its lcm.
    std::vector<Cand> kept;
    std::vector<bool> alive(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!alive[a]) continue;
      bool dominated = false;
      if (!cand[a].coprime) {
        for (std::size_t b = 0; b < cand.size(); ++b) {
          if (a == b || !alive[b]) continue;
          if (cand[b].lcm.divides(cand[a].lcm) && cand[b].lcm != cand[a].lcm) {
            dominated = true;
            break;
          }
          if (cand[b].lcm == cand[a].lcm && b < a) {
            dominated = true;  // equal-lcm class: keep the first representative
            break;
          }
        }
      }
      if (dominated) {
        alive[a] = false;
      } else if (cand[a].coprime) {
        alive[a] = false;  // Buchberger's first criterion, after it pruned others
      } else {
        kept.push_back(cand[a]);
      }
    }

    // Old-pair criterion: (i,j) dies if lt divides lcm(i,j) strictly on both
    // new lcms.
    std::vector<SPair> survivors;
    survivors.reserve(pairs_.size());
    for (auto& pr : pairs_) {
      bool drop = lt.divides(pr.lcm) && Monomial::lcm(basis_[pr.i].lead().mono, lt) != pr.lcm &&
                  Monomial::lcm(basis_[pr.j].lead().mono, lt) != pr.lcm;
      if (!drop) survivors.push_back(std::move(pr));
    }
    pairs_ = std::move(survivors);

    for (const auto& c : kept) {
      const OrdPoly& fi = basis_[c.i];
      std::uint64_t sug =
          std::max(fi.sugar + c.lcm.quotient(fi.lead().mono).degree(),
                   h.sugar + c.lcm.quotient(lt).degree());
      pairs_.push_back({c.i, t, c.lcm, sug});
    }
    basis_.push_back(std::move(h));
  }

  GroebnerBasis finalize() {
    const TermOrderSpec& ord = engine_.order();
    // Minimal basis: ascending leads, drop anything an earlier lead divides.
    std::vector<std::size_t> idx(basis_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return ord.compare(basis_[a].lead().mono, basis_[b].lead().mono) < 0;
    });
    std::vector<std::size_t> kept;
    for (std::size_t k : idx) {
      bool divisible = false;
      for (std::size_t s : kept) {
        if (basis_[s].lead().mono.divides(basis_[k].lead().mono)) {
          divisible = true;
          break;
        }
      }
      if (!divisible) kept.push_back(k);
    }

    // Tail-reduce each survivor against the others. Leads are pairwise
    // non-divisible so leads never change, and the reduced basis is unique,
    // so one pass in a fixed order lands on it.
    std::vector<OrdPoly> fin;
    fin.reserve(kept.size());
    for (std::size_t k : kept) fin.push_back(basis_[k]);
    for (std::size_t i = 0; i < fin.size(); ++i) {
      std::vector<OrdPoly> others;
      others.reserve(fin.size() - 1);
      for (std::size_t j = 0; j < fin.size(); ++j)
        if (j != i) others.push_back(fin[j]);
      fin[i] = engine_.reduce(std::move(fin[i]), others);
    }

    GroebnerBasis gb{.elements = {}, .order = ord};
    gb.elements.reserve(fin.size());
    for (const auto& f : fin) gb.elements.push_back(GbEngine::from_ord(ring_, f));
    return gb;
  }

  RingPtr ring_;
  GbEngine engine_;
  const Budget& budget_;
  std::vector<OrdPoly> basis_;
  std::vector<SPair> pairs_;
};

}  // namespace detail

/// Full division-algorithm remainder of f against an ordered list of
/// nonzero polynomials. The remainder has no term divisible by any leading
/// monomial of the list.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                              const TermOrderSpec& order, const Budget& budget = Budget{}) {
  detail::GbEngine eng(order, budget);
  std::vector<detail::OrdPoly> b;
  b.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) throw value_error("normal form against a zero divisor polynomial");
    if (!g.ring()->same_structure(*f.ring())) throw value_error("normal form ring mismatch");
    b.push_back(eng.to_ord(g));
  }
  return detail::GbEngine::from_ord(f.ring(), eng.reduce(eng.to_ord(f), b));
}

/// Hooks the disk cache (cache.hpp) installs; default-empty means no disk
/// persistence.
struct GbCacheHooks {
  std::function<std::optional<GroebnerBasis>(const std::string& key, const RingPtr& ring,
                                             const TermOrderSpec& order)>
      load;
  std::function<void(const std::string& key, const RingPtr& ring, const GroebnerBasis&)> store;
};

inline GbCacheHooks& gb_cache_hooks() {
  static GbCacheHooks hooks;
  return hooks;
}

/// An ideal presented by generators, with a per-handle cache of reduced
/// Groebner bases keyed by term order. Handles are cheap to copy; copies
/// share the cache. Thread-safe for concurrent groebner() calls.
class IdealHandle {
public:
  IdealHandle(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (!g.ring()->same_structure(*ring_)) throw value_error("ideal generator ring mismatch");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool zero_ideal_presentation() const { return gens_.empty(); }

  /// Digest of (ring, sorted generators, order): the disk-cache key.
  std::string digest(const TermOrderSpec& order) const {
    std::vector<std::string> gs;
    gs.reserve(gens_.size());
    for (const auto& g : gens_) gs.push_back(g.str());
    std::sort(gs.begin(), gs.end());
    std::string blob = ring_->signature();
    blob += '\n';
    for (const auto& s : gs) {
      blob += s;
      blob += '\n';
    }
    blob += order.signature();
    return detail::hex64(detail::fnv1a64(blob));
  }

  const GroebnerBasis& groebner(const TermOrderSpec& order, const Budget& budget = Budget{}) const {
    std::string sig = order.signature();
    {
      std::shared_lock lk(cache_->mtx);
      for (const auto& e : cache_->entries)
        if (e.first == sig) return e.second;
    }
    GroebnerBasis gb = compute(order, budget);
    std::unique_lock lk(cache_->mtx);
    for (const auto& e : cache_->entries)
      if (e.first == sig) return e.second;  // another thread beat us; keep theirs
    cache_->entries.emplace_back(std::move(sig), std::move(gb));
    return cache_->entries.back().second;
  }

private:
  GroebnerBasis compute(const TermOrderSpec& order, const Budget& budget) const {
    auto& hooks = gb_cache_hooks();
    std::string key;
    if (hooks.load || hooks.store) key = digest(order);
    if (hooks.load) {
      if (auto hit = hooks.load(key, ring_, order)) return std::move(*hit);
    }
    detail::Buchberger algo(ring_, order, budget);
    GroebnerBasis gb = algo.run(gens_);
    if (hooks.store) hooks.store(key, ring_, gb);
    return gb;
  }

  struct Cache {
    std::shared_mutex mtx;
    // deque: growth must not invalidate references already handed out
    std::deque<std::pair<std::string, GroebnerBasis>> entries;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline const GroebnerBasis& groebner_basis(const IdealHandle& ideal, const TermOrderSpec& order,
                                           const Budget& budget = Budget{}) {
  return ideal.groebner(order, budget);
}

/// Monomial ideal with minimal (antichain) generators, kept sorted.
class MonomialIdeal {
public:
  static MonomialIdeal make(RingPtr ring, std::vector<Monomial> gens) {
    MonomialIdeal mi;
    mi.ring_ = std::move(ring);
    const TermOrderSpec& ord = mi.ring_->canonical_order();
    std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return ord.compare(a, b) < 0;
    });
    for (const auto& m : gens) {
      if (m.var_count() != mi.ring_->var_count()) throw value_error("monomial does not fit ring");
      bool divisible = false;
      for (const auto& g : mi.gens_) {
        if (g.divides(m)) {
          divisible = true;
          break;
        }
      }
      if (!divisible) mi.gens_.push_back(m);
    }
    return mi;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool zero_ideal() const { return gens_.empty(); }

  bool contains(const Monomial& m) const {
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  /// Termwise membership: true iff every term's monomial is in the ideal.
  bool contains(const Polynomial& f) const {
    for (const auto& t : f.terms())
      if (!contains(t.mono)) return false;
    return true;
  }

  bool all_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.squarefree(); });
  }

  bool operator==(const MonomialIdeal& o) const {
    return ring_->same_structure(*o.ring_) && gens_ == o.gens_;
  }

private:
  MonomialIdeal() = default;
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

struct InitialIdeal {
  MonomialIdeal ideal;
  bool squarefree;
};

inline InitialIdeal initial_ideal(const IdealHandle& ideal, const TermOrderSpec& order,
                                  const Budget& budget = Budget{}) {
  const GroebnerBasis& gb = ideal.groebner(order, budget);
  std::vector<Monomial> leads;
  leads.reserve(gb.elements.size());
  for (const auto& g : gb.elements) leads.push_back(g.leading_monomial(order));
  MonomialIdeal mi = MonomialIdeal::make(ideal.ring(), std::move(leads));
  bool sf = mi.all_squarefree();
  return {std::move(mi), sf};
}

inline bool ideal_member(const Polynomial& f, const IdealHandle& ideal, const TermOrderSpec& order,
                         const Budget& budget = Budget{}) {
  if (f.is_zero()) return true;
  const GroebnerBasis& gb = ideal.groebner(order, budget);
  if (gb.zero_ideal()) return false;
  return normal_form(f, gb.elements, order, budget).is_zero();
}

/// J subseteq I?
inline bool ideal_contains(const IdealHandle& I, const IdealHandle& J, const TermOrderSpec& order,
                           const Budget& budget = Budget{}) {
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [&](const Polynomial& g) { return ideal_member(g, I, order, budget); });
}

inline bool ideals_equal(const IdealHandle& I, const IdealHandle& J, const TermOrderSpec& order,
                         const Budget& budget = Budget{}) {
  return ideal_contains(I, J, order, budget) && ideal_contains(J, I, order, budget);
}

namespace detail {

inline std::vector<Polynomial> dedup_polys(std::vector<Polynomial> v) {
  std::sort(v.begin(), v.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.compare_canonical(b) < 0; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

inline IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J) {
  if (!I.ring()->same_structure(*J.ring())) throw value_error("ideal sum ring mismatch");
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return IdealHandle(I.ring(), detail::dedup_polys(std::move(gens)));
}

inline IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J) {
  if (!I.ring()->same_structure(*J.ring())) throw value_error("ideal product ring mismatch");
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  return IdealHandle(I.ring(), detail::dedup_polys(std::move(gens)));
}

inline IdealHandle ideal_power(const IdealHandle& I, std::uint32_t r) {
  if (r == 0) throw value_error("ideal power wants a positive exponent");
  IdealHandle acc = I;
  for (std::uint32_t k = 1; k < r; ++k) acc = ideal_product(acc, I);
  return acc;
}

/// Frobenius bracket power I^[q], q a power of the (positive) characteristic.
inline IdealHandle bracket_power(const IdealHandle& I, std::uint64_t q) {
  std::uint64_t p = I.ring()->characteristic();
  if (p == 0) throw value_error("bracket power needs positive characteristic");
  std::uint64_t qq = q;
  while (qq > 1) {
    if (qq % p != 0) throw value_error("bracket power exponent must be a power of the characteristic");
    qq /= p;
  }
  if (q == 0) throw value_error("bracket power exponent must be positive");
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& f : I.generators()) gens.push_back(f.pow(static_cast<std::uint32_t>(q)));
  return IdealHandle(I.ring(), detail::dedup_polys(std::move(gens)));
}

namespace detail {

/// Fresh tag-variable name for elimination; "t" or "t0", "t1", ...
inline std::string fresh_tag_name(const RingSpec& ring) {
  if (!ring.index_of("t")) return "t";
  for (int k = 0;; ++k) {
    std::string cand = "t" + std::to_string(k);
    if (!ring.index_of(cand)) return cand;
  }
}

/// Block order eliminating the tag variable (last index): tag block first,
/// then the base ring's canonical degrevlex blocks.
inline TermOrderSpec elimination_order(const RingPtr& extended, std::size_t base_vars) {
  std::vector<OrderBlock> blocks;
  blocks.push_back({OrderKind::lex, {static_cast<std::uint32_t>(base_vars)}});
  std::vector<std::uint32_t> rest(base_vars);
  for (std::size_t i = 0; i < base_vars; ++i) rest[i] = static_cast<std::uint32_t>(i);
  blocks.push_back({OrderKind::degrevlex, std::move(rest)});
  (void)extended;
  return TermOrderSpec::product(std::move(blocks));
}

inline Polynomial restrict_to_base(const Polynomial& f, const RingPtr& base) {
  std::vector<Term> out;
  out.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(t.mono.exponents().begin(),
                                 t.mono.exponents().begin() + static_cast<std::ptrdiff_t>(base->var_count()));
    out.push_back({t.coeff, Monomial::from_exponents(std::move(e))});
  }
  return Polynomial::from_terms(base, out);
}

}  // namespace detail

/// I cap J via the single-tag trick: eliminate t from t*I + (1-t)*J. The
/// returned generators are a Groebner basis of the intersection under the
/// base ring's canonical order.
inline IdealHandle intersect(const IdealHandle& I, const IdealHandle& J,
                             const Budget& budget = Budget{}) {
  if (!I.ring()->same_structure(*J.ring())) throw value_error("intersect ring mismatch");
  const RingPtr& R = I.ring();
  if (I.zero_ideal_presentation() || J.zero_ideal_presentation())
    return IdealHandle(R, {});
  std::string tag = detail::fresh_tag_name(*R);
  RingPtr ext = R->extend({tag});
  std::size_t n = R->var_count();
  Polynomial t = Polynomial::variable(ext, n);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * promote(f, ext));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * promote(g, ext));
  TermOrderSpec elim = detail::elimination_order(ext, n);
  IdealHandle work(ext, std::move(gens));
  const GroebnerBasis& gb = work.groebner(elim, budget);
  std::vector<Polynomial> kept;
  for (const auto& h : gb.elements) {
    bool uses_tag = false;
    for (const auto& term : h.terms())
      if (term.mono.exponent(n) > 0) uses_tag = true;
    if (!uses_tag) kept.push_back(detail::restrict_to_base(h, R));
  }
  return IdealHandle(R, std::move(kept));
}

namespace detail {

/// Exact quotient h / f for h in (f); plain one-divisor division.
inline Polynomial divide_exact(const Polynomial& h, const Polynomial& f, const TermOrderSpec& ord,
                               const Budget& budget) {
  GbEngine eng(ord, budget);
  OrdPoly r = eng.to_ord(h);
  OrdPoly g = eng.to_ord(f);
  std::vector<Term> q;
  while (!r.zero()) {
    if (!g.lead().mono.divides(r.lead().mono))
      throw verification_error("exact division failed; intersect-based colon returned a non-multiple");
    Coefficient c = r.lead().coeff / g.lead().coeff;
    Monomial u = r.lead().mono.quotient(g.lead().mono);
    q.push_back({c, u});
    r = eng.axpy(r, c, u, g);
  }
  return Polynomial::from_terms(h.ring(), q);
}

}  // namespace detail

/// Colon ideal I : J = {f : f*J subseteq I}. Computed per generator of J by
/// intersecting with the principal ideal and dividing, then intersecting the
/// partial quotients. Generators of the result are canonicalized as the
/// reduced GB under `order`.
inline IdealHandle colon(const IdealHandle& I, const IdealHandle& J, const TermOrderSpec& order,
                         const Budget& budget = Budget{}) {
  if (!I.ring()->same_structure(*J.ring())) throw value_error("colon ring mismatch");
  const RingPtr& R = I.ring();
  if (J.zero_ideal_presentation()) throw value_error("colon by the zero ideal");
  std::optional<IdealHandle> acc;
  for (const auto& f : J.generators()) {
    IdealHandle K = intersect(I, IdealHandle(R, {f}), budget);
    std::vector<Polynomial> q;
    q.reserve(K.generators().size());
    for (const auto& h : K.generators())
      q.push_back(detail::divide_exact(h, f, R->canonical_order(), budget));
    IdealHandle Q(R, std::move(q));
    acc = acc ? intersect(*acc, Q, budget) : Q;
  }
  const GroebnerBasis& gb = acc->groebner(order, budget);
  return IdealHandle(R, gb.elements);
}

inline IdealHandle colon(const IdealHandle& I, const IdealHandle& J,
                         const Budget& budget = Budget{}) {
  return colon(I, J, I.ring()->canonical_order(), budget);
}

struct DimensionHeight {
  std::size_t dimension;
  std::size_t height;
};

namespace detail {

/// Minimum vertex cover over generator supports, branch and bound with a
/// greedy disjoint-support lower bound.
inline void min_cover_rec(const std::vector<std::vector<std::size_t>>& supports,
                          std::vector<bool>& covered_var, std::size_t chosen, std::size_t& best) {
  const std::vector<std::size_t>* branch = nullptr;
  // Lower bound: greedily count generators pairwise disjoint among the
  // uncovered ones; each needs its own new vertex.
  std::size_t lb = 0;
  std::vector<bool> blocked(covered_var);
  for (const auto& sup : supports) {
    bool uncovered = true;
    for (auto v : sup)
      if (covered_var[v]) uncovered = false;
    if (!uncovered) continue;
    if (!branch) branch = &sup;
    bool disjoint = true;
    for (auto v : sup)
      if (blocked[v]) disjoint = false;
    if (disjoint) {
      ++lb;
      for (auto v : sup) blocked[v] = true;
    }
  }
  if (!branch) {
    best = std::min(best, chosen);
    return;
  }
  if (chosen + lb >= best) return;
  for (auto v : *branch) {
    covered_var[v] = true;
    min_cover_rec(supports, covered_var, chosen + 1, best);
    covered_var[v] = false;
  }
}

}  // namespace detail

/// Krull dimension and height via the initial ideal: the height of a
/// monomial ideal is the minimum vertex cover of its generator supports,
/// and dim + height = #variables for these ideals.
inline DimensionHeight dimension_and_height(const IdealHandle& I, const TermOrderSpec& order,
                                            const Budget& budget = Budget{}) {
  const GroebnerBasis& gb = I.groebner(order, budget);
  if (gb.contains_unit()) throw value_error("dimension of the unit ideal");
  std::size_t n = I.ring()->var_count();
  if (gb.zero_ideal()) return {n, 0};
  InitialIdeal ini = initial_ideal(I, order, budget);
  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(ini.ideal.generators().size());
  for (const auto& m : ini.ideal.generators()) supports.push_back(m.support());
  std::size_t best = n + 1;
  std::vector<bool> covered(n, false);
  detail::min_cover_rec(supports, covered, 0, best);
  return {n - best, best};
}

}  // namespace liaison
