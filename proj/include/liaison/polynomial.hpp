#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liaison/ring.hpp"

namespace liaison {

struct Term {
  Coefficient coeff;
  Monomial mono;
};

/// Multivariate polynomial over a fixed ring. Terms are kept canonical:
/// sorted strictly descending under the ring's canonical (degrevlex) order,
/// coefficients nonzero. Values are immutable once built; arithmetic returns
/// fresh polynomials.
class Polynomial {
public:
  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, const Coefficient& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({c, Monomial::one(ring->var_count())});
    return p;
  }

  static Polynomial constant(RingPtr ring, long long v) {
    return constant(ring, Coefficient::integer(v, ring->characteristic()));
  }

  static Polynomial variable(RingPtr ring, std::size_t idx, std::uint32_t k = 1) {
    Polynomial p(ring);
    p.terms_.push_back({ring->coeff_one(), Monomial::variable(ring->var_count(), idx, k)});
    return p;
  }

  static Polynomial monomial(RingPtr ring, Monomial m, std::optional<Coefficient> c = std::nullopt) {
    Polynomial p(ring);
    Coefficient cc = c ? *c : ring->coeff_one();
    if (m.var_count() != ring->var_count()) throw value_error("monomial does not fit ring");
    if (!cc.is_zero()) p.terms_.push_back({std::move(cc), std::move(m)});
    return p;
  }

  /// Builds from arbitrary (coeff, monomial) pairs: merges duplicates, drops
  /// zeros, sorts canonically.
  static Polynomial from_terms(RingPtr ring, const std::vector<Term>& terms) {
    Polynomial p(ring);
    const TermOrderSpec& ord = ring->canonical_order();
    std::map<Monomial, Coefficient, MonoLess> acc{MonoLess{&ord}};
    for (const auto& t : terms) {
      if (t.mono.var_count() != ring->var_count()) throw value_error("term does not fit ring");
      auto it = acc.find(t.mono);
      if (it == acc.end()) {
        if (!t.coeff.is_zero()) acc.emplace(t.mono, t.coeff);
      } else {
        it->second = it->second + t.coeff;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
    p.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) p.terms_.push_back({it->second, it->first});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  bool is_monomial() const { return terms_.size() == 1; }

  /// Total degree; the zero polynomial has none.
  std::uint64_t degree() const {
    if (terms_.empty()) throw value_error("degree of the zero polynomial");
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = terms_[0].mono.degree();
    for (const auto& t : terms_)
      if (t.mono.degree() != d) return false;
    return true;
  }

  /// Leading term under an arbitrary order (not necessarily the canonical
  /// storage order). Errors on the zero polynomial.
  Term leading_term(const TermOrderSpec& order) const {
    if (terms_.empty()) throw value_error("leading term of the zero polynomial");
    const Term* best = &terms_[0];
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (order.greater(terms_[i].mono, best->mono)) best = &terms_[i];
    return *best;
  }

  Monomial leading_monomial(const TermOrderSpec& order) const { return leading_term(order).mono; }

  Polynomial operator-() const {
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({-t.coeff, t.mono});
    return p;
  }

  Polynomial operator+(const Polynomial& o) const {
    match(o);
    // Merge two canonically sorted term lists.
    const TermOrderSpec& ord = ring_->canonical_order();
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
      if (c > 0) {
        p.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        p.terms_.push_back(o.terms_[j++]);
      } else {
        Coefficient s = terms_[i].coeff + o.terms_[j].coeff;
        if (!s.is_zero()) p.terms_.push_back({std::move(s), terms_[i].mono});
        ++i;
        ++j;
      }
    }
    while (i < terms_.size()) p.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) p.terms_.push_back(o.terms_[j++]);
    return p;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial scale(const Coefficient& c) const {
    Polynomial p(ring_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.coeff * c, t.mono});
    return p;
  }

  Polynomial times_monomial(const Monomial& m) const {
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.coeff, t.mono.times(m)});
    return p;  // multiplication by a monomial preserves every term order
  }

  Polynomial times_term(const Coefficient& c, const Monomial& m) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.coeff * c, t.mono.times(m)});
    return p;
  }

  Polynomial operator*(const Polynomial& o) const {
    match(o);
    const TermOrderSpec& ord = ring_->canonical_order();
    std::map<Monomial, Coefficient, MonoLess> acc{MonoLess{&ord}};
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        Monomial m = a.mono.times(b.mono);
        Coefficient c = a.coeff * b.coeff;
        auto it = acc.find(m);
        if (it == acc.end()) {
          if (!c.is_zero()) acc.emplace(std::move(m), std::move(c));
        } else {
          it->second = it->second + c;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
    Polynomial p(ring_);
    p.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) p.terms_.push_back({it->second, it->first});
    return p;
  }

  Polynomial pow(std::uint32_t k) const {
    Polynomial r = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return r;
  }

  /// Make the leading coefficient (under `order`) equal to one.
  Polynomial monic(const TermOrderSpec& order) const {
    if (terms_.empty()) return *this;
    Coefficient lc = leading_term(order).coeff;
    if (lc.is_one()) return *this;
    return scale(lc.inverse());
  }

  bool operator==(const Polynomial& o) const {
    if (!ring_->same_structure(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Total order for dedup/sorting of polynomial sets; canonical storage
  /// makes this well-defined.
  int compare_canonical(const Polynomial& o) const {
    match(o);
    const TermOrderSpec& ord = ring_->canonical_order();
    std::size_t n = std::min(terms_.size(), o.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = ord.compare(terms_[i].mono, o.terms_[i].mono);
      if (c != 0) return c;
      c = terms_[i].coeff.compare(o.terms_[i].coeff);
      if (c != 0) return c;
    }
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
    return 0;
  }

  /// Canonical text form; see parse.hpp for the grammar and printer.
  std::string str() const;

private:
  struct MonoLess {
    const TermOrderSpec* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->compare(a, b) < 0; }
  };

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw value_error("polynomial needs a ring");
  }

  void match(const Polynomial& o) const {
    if (ring_.get() == o.ring_.get()) return;
    if (!ring_->same_structure(*o.ring_)) throw value_error("polynomial ring mismatch");
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Re-interpret `f` in `target`, matching variables by name. Every variable
/// of f's ring must exist in the target; new variables get exponent zero.
inline Polynomial promote(const Polynomial& f, const RingPtr& target) {
  const RingPtr& src = f.ring();
  if (src->same_structure(*target)) {
    // Identical layout: rebuild on the target handle.
    std::vector<Term> ts(f.terms().begin(), f.terms().end());
    return Polynomial::from_terms(target, ts);
  }
  if (src->characteristic() != target->characteristic())
    throw value_error("promote: characteristic mismatch");
  std::vector<std::size_t> where(src->var_count());
  for (std::size_t i = 0; i < src->var_count(); ++i) {
    auto idx = target->index_of(src->variable_name(i));
    if (!idx) throw value_error("promote: target ring lacks variable '" + src->variable_name(i) + "'");
    where[i] = *idx;
  }
  std::vector<Term> out;
  out.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(target->var_count(), 0);
    for (std::size_t i = 0; i < src->var_count(); ++i) e[where[i]] = t.mono.exponent(i);
    out.push_back({t.coeff, Monomial::from_exponents(std::move(e))});
  }
  return Polynomial::from_terms(target, out);
}

}  // namespace liaison
