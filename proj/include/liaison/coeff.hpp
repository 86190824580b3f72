#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "liaison/errors.hpp"

namespace liaison {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw value_error("division by zero in F_p");
  // Extended Euclid over signed 128-bit to dodge wraparound.
  __int128 t = 0, new_t = 1;
  __int128 r = static_cast<__int128>(p), new_r = static_cast<__int128>(a % p);
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw value_error("non-invertible residue (modulus not prime?)");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace detail

/// Exact coefficient: a rational number (characteristic 0, GMP-backed) or a
/// canonical residue in F_p for a word-size prime p. Arithmetic between
/// mismatched characteristics throws.
class Coefficient {
public:
  Coefficient() : p_(0), rat_(0) {}

  static Coefficient zero(std::uint64_t p) { return integer(0, p); }
  static Coefficient one(std::uint64_t p) { return integer(1, p); }

  static Coefficient integer(long long v, std::uint64_t p) {
    Coefficient c;
    c.p_ = p;
    if (p == 0) {
      c.rat_ = mpq_class(static_cast<long>(v));
    } else {
      long long r = v % static_cast<long long>(p);
      if (r < 0) r += static_cast<long long>(p);
      c.res_ = static_cast<std::uint64_t>(r);
    }
    return c;
  }

  static Coefficient residue(std::uint64_t r, std::uint64_t p) {
    if (p == 0) throw value_error("residue coefficient needs positive characteristic");
    Coefficient c;
    c.p_ = p;
    c.res_ = r % p;
    return c;
  }

  static Coefficient rational(const mpq_class& v) {
    Coefficient c;
    c.p_ = 0;
    c.rat_ = v;
    c.rat_.canonicalize();
    return c;
  }

  /// num/den mapped into the coefficient field of characteristic p.
  static Coefficient fraction(const mpz_class& num, const mpz_class& den, std::uint64_t p) {
    if (den == 0) throw value_error("zero denominator");
    if (p == 0) {
      mpq_class q(num, den);
      q.canonicalize();
      return rational(q);
    }
    mpz_class pm(static_cast<unsigned long>(p));
    mpz_class n = num % pm, d = den % pm;
    if (n < 0) n += pm;
    if (d < 0) d += pm;
    std::uint64_t nn = mpz_get_ui(n.get_mpz_t());
    std::uint64_t dd = mpz_get_ui(d.get_mpz_t());
    return residue(detail::mulmod_u64(nn, detail::invmod_u64(dd, p), p), p);
  }

  std::uint64_t characteristic() const { return p_; }
  bool is_zero() const { return p_ == 0 ? rat_ == 0 : res_ == 0; }
  bool is_one() const { return p_ == 0 ? rat_ == 1 : res_ == 1 % p_; }

  const mpq_class& rat() const {
    require_char0();
    return rat_;
  }
  std::uint64_t res() const {
    if (p_ == 0) throw value_error("residue access on characteristic-0 coefficient");
    return res_;
  }

  Coefficient operator-() const {
    Coefficient c(*this);
    if (p_ == 0) {
      c.rat_ = -rat_;
    } else {
      c.res_ = res_ == 0 ? 0 : p_ - res_;
    }
    return c;
  }

  Coefficient operator+(const Coefficient& o) const {
    match(o);
    Coefficient c(*this);
    if (p_ == 0) {
      c.rat_ = rat_ + o.rat_;
    } else {
      std::uint64_t s = res_ + o.res_;  // p is word-size but < 2^63: no wrap for p < 2^63
      c.res_ = s >= p_ ? s - p_ : s;
    }
    return c;
  }

  Coefficient operator-(const Coefficient& o) const { return *this + (-o); }

  Coefficient operator*(const Coefficient& o) const {
    match(o);
    Coefficient c(*this);
    if (p_ == 0) {
      c.rat_ = rat_ * o.rat_;
    } else {
      c.res_ = detail::mulmod_u64(res_, o.res_, p_);
    }
    return c;
  }

  Coefficient inverse() const {
    Coefficient c(*this);
    if (p_ == 0) {
      if (rat_ == 0) throw value_error("division by zero");
      c.rat_ = 1 / rat_;
    } else {
      c.res_ = detail::invmod_u64(res_, p_);
    }
    return c;
  }

  Coefficient operator/(const Coefficient& o) const { return *this * o.inverse(); }

  bool operator==(const Coefficient& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
  }
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  /// Total order used only for canonical serialization / dedup, not algebra.
  int compare(const Coefficient& o) const {
    if (p_ != o.p_) return p_ < o.p_ ? -1 : 1;
    if (p_ == 0) return cmp(rat_, o.rat_) < 0 ? -1 : (rat_ == o.rat_ ? 0 : 1);
    return res_ < o.res_ ? -1 : (res_ == o.res_ ? 0 : 1);
  }

  /// Canonical text: "-3/2" style in char 0, bare residue in char p.
  std::string str() const {
    if (p_ == 0) return rat_.get_str();
    return std::to_string(res_);
  }

private:
  void require_char0() const {
    if (p_ != 0) throw value_error("rational access on positive-characteristic coefficient");
  }
  void match(const Coefficient& o) const {
    if (p_ != o.p_) throw value_error("coefficient characteristic mismatch");
  }

  std::uint64_t p_ = 0;
  std::uint64_t res_ = 0;  // used when p_ > 0
  mpq_class rat_;          // used when p_ == 0
};

}  // namespace liaison
