#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liaison/coeff.hpp"
#include "liaison/errors.hpp"

namespace liaison {

/// Exponent vector with cached total degree. Not tied to a ring; sizes must
/// agree for binary operations.
class Monomial {
public:
  explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }

  static Monomial variable(std::size_t nvars, std::size_t idx, std::uint32_t k = 1) {
    if (idx >= nvars) throw value_error("variable index out of range");
    Monomial m(nvars);
    m.e_[idx] = k;
    m.deg_ = k;
    return m;
  }

  static Monomial from_exponents(std::vector<std::uint32_t> e) {
    Monomial m(e.size());
    m.e_ = std::move(e);
    m.deg_ = std::accumulate(m.e_.begin(), m.e_.end(), std::uint64_t{0});
    return m;
  }

  std::size_t var_count() const { return e_.size(); }
  std::uint32_t exponent(std::size_t i) const { return e_[i]; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  std::uint64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool squarefree() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t v) { return v <= 1; });
  }

  bool coprime(const Monomial& o) const {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }

  /// Does *this divide o?
  bool divides(const Monomial& o) const {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  Monomial times(const Monomial& o) const {
    check(o);
    Monomial m(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    m.deg_ += o.deg_;
    return m;
  }

  /// Exact quotient; requires o | *this.
  Monomial quotient(const Monomial& o) const {
    check(o);
    Monomial m(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (o.e_[i] > m.e_[i]) throw value_error("monomial quotient is not exact");
      m.e_[i] -= o.e_[i];
    }
    m.deg_ -= o.deg_;
    return m;
  }

  Monomial pow(std::uint32_t k) const {
    Monomial m(*this);
    for (auto& v : m.e_) v *= k;
    m.deg_ *= k;
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check(b);
    Monomial m(a.var_count());
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < a.var_count(); ++i) {
      m.e_[i] = std::max(a.e_[i], b.e_[i]);
      d += m.e_[i];
    }
    m.deg_ = d;
    return m;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check(b);
    Monomial m(a.var_count());
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < a.var_count(); ++i) {
      m.e_[i] = std::min(a.e_[i], b.e_[i]);
      d += m.e_[i];
    }
    m.deg_ = d;
    return m;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0) s.push_back(i);
    return s;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
  void check(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw value_error("monomial dimension mismatch");
  }

  std::vector<std::uint32_t> e_;
  std::uint64_t deg_;
};

enum class OrderKind { lex, degrevlex };

inline const char* order_kind_name(OrderKind k) {
  return k == OrderKind::lex ? "lex" : "degrevlex";
}

/// One block of a product order: a kind plus the variable ranking inside the
/// block, greatest variable first.
struct OrderBlock {
  OrderKind kind;
  std::vector<std::uint32_t> ranking;
};

/// A term order on a fixed set of variables, expressed as a product of
/// blocks. Monomials compare block by block: total degree within the block
/// decides first for degrevlex blocks, then the usual tie-breaks. Plain lex
/// and degrevlex are the single-block cases; elimination orders and lifted
/// linkage orders are multi-block instances. The concatenated rankings must
/// form a permutation of all variables.
class TermOrderSpec {
public:
  static TermOrderSpec lex(std::vector<std::uint32_t> ranking) {
    return product({OrderBlock{OrderKind::lex, std::move(ranking)}});
  }

  static TermOrderSpec degrevlex(std::vector<std::uint32_t> ranking) {
    return product({OrderBlock{OrderKind::degrevlex, std::move(ranking)}});
  }

  static TermOrderSpec product(std::vector<OrderBlock> blocks) {
    if (blocks.empty()) throw value_error("term order needs at least one block");
    TermOrderSpec spec;
    spec.blocks_ = std::move(blocks);
    std::size_t n = 0;
    for (const auto& b : spec.blocks_) {
      if (b.ranking.empty()) throw value_error("term order block must rank at least one variable");
      n += b.ranking.size();
    }
    std::vector<bool> seen(n, false);
    for (const auto& b : spec.blocks_) {
      for (auto v : b.ranking) {
        if (v >= n || seen[v])
          throw value_error("term order rankings must form a permutation of the ring variables");
        seen[v] = true;
      }
    }
    spec.nvars_ = n;
    return spec;
  }

  std::size_t var_count() const { return nvars_; }
  const std::vector<OrderBlock>& blocks() const { return blocks_; }
  bool single_block() const { return blocks_.size() == 1; }

  /// Kind of the leading block; for single-block orders this is the order's
  /// user-facing kind.
  OrderKind kind() const { return blocks_.front().kind; }

  /// -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.var_count() != nvars_ || b.var_count() != nvars_)
      throw value_error("monomial dimension does not match term order");
    for (const auto& blk : blocks_) {
      int c = compare_block(blk, a, b);
      if (c != 0) return c;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Stable textual identity, used for cache keys and serialization.
  std::string signature() const {
    std::string s;
    for (const auto& b : blocks_) {
      if (!s.empty()) s += '|';
      s += order_kind_name(b.kind);
      s += ':';
      for (std::size_t i = 0; i < b.ranking.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(b.ranking[i]);
      }
    }
    return s;
  }

  bool operator==(const TermOrderSpec& o) const {
    if (nvars_ != o.nvars_ || blocks_.size() != o.blocks_.size()) return false;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i].kind != o.blocks_[i].kind || blocks_[i].ranking != o.blocks_[i].ranking)
        return false;
    return true;
  }
  bool operator!=(const TermOrderSpec& o) const { return !(*this == o); }

private:
  TermOrderSpec() = default;

  static int compare_block(const OrderBlock& blk, const Monomial& a, const Monomial& b) {
    if (blk.kind == OrderKind::lex) {
      for (auto v : blk.ranking) {
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      }
      return 0;
    }
    std::uint64_t da = 0, db = 0;
    for (auto v : blk.ranking) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da < db ? -1 : 1;
    // degrevlex tie-break: scan from the least variable; the monomial with
    // the larger exponent there is the smaller one.
    for (auto it = blk.ranking.rbegin(); it != blk.ranking.rend(); ++it) {
      if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    }
    return 0;
  }

  std::vector<OrderBlock> blocks_;
  std::size_t nvars_ = 0;
};

/// Spec-facing comparison entry point.
inline int compare_monomials(const TermOrderSpec& order, const Monomial& a, const Monomial& b) {
  return order.compare(a, b);
}

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

/// Immutable description of a polynomial ring: named variables, a prime (or
/// zero) characteristic, and a registry of named term orders. "degrevlex"
/// and "lex" over the declaration ranking are always present; "degrevlex" is
/// the canonical order used for normal forms of printed polynomials.
class RingSpec : public std::enable_shared_from_this<RingSpec> {
public:
  static RingPtr make(std::vector<std::string> variables, std::uint64_t characteristic,
                      std::vector<std::pair<std::string, TermOrderSpec>> named_orders = {}) {
    auto ring = RingPtr(new RingSpec(std::move(variables), characteristic));
    for (auto& [name, spec] : named_orders)
      const_cast<RingSpec*>(ring.get())->register_order(name, spec);
    return ring;
  }

  std::size_t var_count() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variable_name(std::size_t i) const {
    if (i >= vars_.size()) throw value_error("variable index out of range");
    return vars_[i];
  }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  std::uint64_t characteristic() const { return char_; }

  bool has_order(const std::string& name) const {
    return std::any_of(orders_.begin(), orders_.end(),
                       [&](const auto& p) { return p.first == name; });
  }

  const TermOrderSpec& order(const std::string& name) const {
    for (const auto& [n, spec] : orders_)
      if (n == name) return spec;
    throw value_error("unknown term order '" + name + "'");
  }

  const TermOrderSpec& canonical_order() const { return order("degrevlex"); }

  std::vector<std::string> order_names() const {
    std::vector<std::string> names;
    for (const auto& [n, _] : orders_) names.push_back(n);
    return names;
  }

  /// Structural identity: same variables in the same positions, same
  /// characteristic. The order registry is presentation, not identity.
  bool same_structure(const RingSpec& o) const {
    return char_ == o.char_ && vars_ == o.vars_;
  }

  /// New ring = this ring's variables followed by new_vars, same
  /// characteristic, fresh default orders (registered orders of this ring
  /// rank only the old variables and cannot carry over).
  RingPtr extend(const std::vector<std::string>& new_vars) const {
    std::vector<std::string> all = vars_;
    for (const auto& v : new_vars) {
      if (index_of(v) || std::find(all.begin(), all.end(), v) != all.end())
        throw value_error("extend: variable name collision on '" + v + "'");
      all.push_back(v);
    }
    return make(std::move(all), char_);
  }

  Coefficient coeff_zero() const { return Coefficient::zero(char_); }
  Coefficient coeff_one() const { return Coefficient::one(char_); }
  Coefficient coeff_int(long long v) const { return Coefficient::integer(v, char_); }

  /// Stable identity text for digests: characteristic + variable list.
  std::string signature() const {
    std::string s = "p=" + std::to_string(char_) + ";";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (i) s += ',';
      s += vars_[i];
    }
    return s;
  }

  /// Register an additional named order (ranking the full variable set).
  /// Used by family builders; name collisions with a *different* spec throw.
  void register_order(const std::string& name, const TermOrderSpec& spec) {
    if (spec.var_count() != vars_.size())
      throw value_error("order '" + name + "' does not rank exactly the ring variables");
    for (auto& [n, existing] : orders_) {
      if (n == name) {
        if (existing != spec) throw value_error("order name '" + name + "' already registered");
        return;
      }
    }
    orders_.emplace_back(name, spec);
  }

private:
  RingSpec(std::vector<std::string> variables, std::uint64_t characteristic)
      : vars_(std::move(variables)), char_(characteristic) {
    if (vars_.empty()) throw value_error("ring needs at least one variable");
    if (char_ != 0 && !detail::is_prime_u64(char_))
      throw value_error("characteristic must be 0 or a prime");
    for (const auto& v : vars_) validate_name(v);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j]) throw value_error("duplicate variable name '" + vars_[i] + "'");
    std::vector<std::uint32_t> decl(vars_.size());
    std::iota(decl.begin(), decl.end(), 0);
    orders_.emplace_back("degrevlex", TermOrderSpec::degrevlex(decl));
    orders_.emplace_back("lex", TermOrderSpec::lex(decl));
  }

  static void validate_name(const std::string& v) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
      throw value_error("variable name '" + v + "' must start with a letter");
    for (char c : v) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != ',')
        throw value_error("variable name '" + v + "' has an illegal character");
    }
  }

  std::vector<std::string> vars_;
  std::uint64_t char_;
  std::vector<std::pair<std::string, TermOrderSpec>> orders_;
};

}  // namespace liaison
