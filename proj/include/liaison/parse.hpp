#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "liaison/polynomial.hpp"

namespace liaison {

// Polynomial text grammar:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' NUMBER]
//   primary := NUMBER ['/' NUMBER] | NAME | '(' expr ')'
// NAME must be a declared ring variable; numbers are arbitrary-precision
// integers. The '/' form exists so char-0 reduced bases (monic, fractional)
// round-trip through text. No implicit multiplication.

namespace detail {

class PolyParser {
public:
  PolyParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    skip_ws();
    Polynomial p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
    return p;
  }

private:
  Polynomial parse_expr() {
    bool neg = false;
    skip_ws();
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    Polynomial acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = parse_term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * parse_factor();
    }
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      mpz_class e = parse_integer();
      if (e < 0 || e > 1000000) throw parse_error("exponent out of range", at);
      base = base.pow(static_cast<std::uint32_t>(mpz_get_ui(e.get_mpz_t())));
    }
    return base;
  }

  Polynomial parse_primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = parse_expr();
      skip_ws();
      if (peek() != ')') throw parse_error("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = parse_integer();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw parse_error("expected denominator", at);
        mpz_class den = parse_integer();
        if (den == 0) throw parse_error("zero denominator", at);
        return Polynomial::constant(ring_,
                                    Coefficient::fraction(num, den, ring_->characteristic()));
      }
      return Polynomial::constant(ring_, Coefficient::fraction(num, 1, ring_->characteristic()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      std::size_t idx = parse_variable();
      (void)at;
      return Polynomial::variable(ring_, idx);
    }
    throw parse_error("expected a number, variable, or '('", pos_);
  }

  /// Longest declared variable name starting at pos_. The name charset
  /// includes ',' and '_', so greedy lexing alone would eat list separators;
  /// matching against the declared names keeps this unambiguous.
  std::size_t parse_variable() {
    std::size_t run_end = pos_;
    while (run_end < text_.size()) {
      char c = text_[run_end];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ',')
        ++run_end;
      else
        break;
    }
    std::size_t best_len = 0;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < ring_->var_count(); ++i) {
      const std::string& name = ring_->variable_name(i);
      if (name.size() > run_end - pos_ || name.size() <= best_len) continue;
      if (text_.compare(pos_, name.size(), name) == 0) {
        best_len = name.size();
        best_idx = i;
      }
    }
    if (best_len == 0)
      throw parse_error("unknown variable '" + std::string(text_.substr(pos_, run_end - pos_)) + "'",
                        pos_);
    pos_ += best_len;
    return best_idx;
  }

  mpz_class parse_integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("expected an integer", pos_);
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    return mpz_class(digits);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, RingPtr ring) {
  return detail::PolyParser(text, std::move(ring)).parse();
}

/// Splits on top-level ',' and newlines, then parses each piece. Not usable
/// for rings whose variable names themselves contain commas.
inline std::vector<Polynomial> parse_polynomial_list(std::string_view text, RingPtr ring) {
  for (const auto& v : ring->variables())
    if (v.find(',') != std::string::npos)
      throw value_error("polynomial lists cannot be split for rings with comma-bearing names");
  std::vector<Polynomial> out;
  std::string piece;
  auto flush = [&]() {
    bool blank = true;
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back(parse_polynomial(piece, ring));
    piece.clear();
  };
  for (char c : text) {
    if (c == ',' || c == '\n') {
      flush();
    } else {
      piece += c;
    }
  }
  flush();
  return out;
}

namespace detail {

inline std::string monomial_text(const Monomial& m, const RingSpec& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.var_count(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variable_name(i);
    if (m[i] > 1) {
      s += '^';
      s += std::to_string(m[i]);
    }
  }
  return s;
}

inline std::string coeff_magnitude(const Coefficient& c) {
  if (c.characteristic() != 0) return c.str();
  mpq_class a = c.rat() < 0 ? mpq_class(-c.rat()) : c.rat();
  return a.get_str();
}

}  // namespace detail

inline std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    bool neg = ring_->characteristic() == 0 && t.coeff.rat() < 0;
    if (i == 0) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono = detail::monomial_text(t.mono, *ring_);
    std::string mag = detail::coeff_magnitude(t.coeff);
    if (mono.empty()) {
      s += mag;
    } else if (mag == "1") {
      s += mono;
    } else {
      s += mag;
      s += '*';
      s += mono;
    }
  }
  return s;
}

inline std::string to_string(const Polynomial& p) { return p.str(); }

}  // namespace liaison
