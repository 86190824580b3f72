#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "liaison/matrix.hpp"
#include "liaison/parse.hpp"
#include "liaison/polynomial.hpp"

using namespace liaison;

namespace {

RingPtr ring_xyz(std::uint64_t p = 0) { return RingSpec::make({"x", "y", "z"}, p); }

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

// Oracle: determinant by signed permutation expansion. Independent of the
// Laplace recursion in the library.
Polynomial det_oracle(const PolyMatrix& a) {
  std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial acc = Polynomial::zero(a.ring());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial prod = Polynomial::constant(a.ring(), 1);
    for (std::size_t i = 0; i < n; ++i) prod = prod * a.at(i, perm[i]);
    acc = (inversions % 2 == 0) ? acc + prod : acc - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace

TEST_CASE("coefficients: F_p residues") {
  auto a = Coefficient::integer(3, 7);
  auto b = Coefficient::integer(5, 7);
  CHECK((a + b).res() == 1);
  CHECK((a * b).res() == 1);
  CHECK(a.inverse().res() == 5);
  CHECK((a - b).res() == 5);
  CHECK((-b).res() == 2);
  CHECK(Coefficient::integer(-1, 7).res() == 6);
  CHECK(Coefficient::integer(14, 7).is_zero());
  CHECK_THROWS_AS(Coefficient::zero(7).inverse(), value_error);
  CHECK_THROWS_AS(Coefficient::integer(1, 7) + Coefficient::integer(1, 5), value_error);
}

TEST_CASE("coefficients: rationals are exact") {
  auto h = Coefficient::fraction(1, 2, 0);
  auto t = Coefficient::fraction(1, 3, 0);
  CHECK((h + t).rat() == mpq_class(5, 6));
  CHECK((h * t).rat() == mpq_class(1, 6));
  CHECK(h.inverse().rat() == 2);
  CHECK(Coefficient::fraction(2, 4, 0).str() == "1/2");
  CHECK(Coefficient::integer(-3, 0).str() == "-3");
}

TEST_CASE("monomials: arithmetic and predicates") {
  auto m = Monomial::from_exponents({2, 0, 1});  // x^2 z
  auto n = Monomial::from_exponents({1, 1, 0});  // x y
  CHECK(m.degree() == 3);
  CHECK(Monomial::lcm(m, n) == Monomial::from_exponents({2, 1, 1}));
  CHECK(Monomial::gcd(m, n) == Monomial::from_exponents({1, 0, 0}));
  CHECK(m.times(n) == Monomial::from_exponents({3, 1, 1}));
  CHECK(m.times(n).quotient(n) == m);
  CHECK_THROWS_AS(n.quotient(m), value_error);
  CHECK(!m.squarefree());
  CHECK(n.squarefree());
  CHECK(!m.coprime(n));
  CHECK(m.coprime(Monomial::from_exponents({0, 3, 0})));
  CHECK(Monomial::from_exponents({1, 0, 0}).divides(m));
  CHECK(!n.divides(m));
  CHECK(m.support() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("term orders: lex and degrevlex basics") {
  // Ranking x > y > z throughout.
  auto lex = TermOrderSpec::lex({0, 1, 2});
  auto drl = TermOrderSpec::degrevlex({0, 1, 2});
  auto x = Monomial::from_exponents({1, 0, 0});
  auto y5 = Monomial::from_exponents({0, 5, 0});
  auto xz = Monomial::from_exponents({1, 0, 1});
  auto y2 = Monomial::from_exponents({0, 2, 0});

  CHECK(compare_monomials(lex, x, y5) > 0);   // lex ignores degree
  CHECK(compare_monomials(drl, x, y5) < 0);   // degrevlex refines degree
  // Classic separator of degrevlex from deglex: x z < y^2 since z-exponent
  // is larger on the x z side.
  CHECK(compare_monomials(drl, xz, y2) < 0);
  CHECK(compare_monomials(drl, y2, xz) > 0);
  CHECK(compare_monomials(drl, xz, xz) == 0);
  CHECK_THROWS_AS(compare_monomials(drl, Monomial::from_exponents({1, 0}), y2), value_error);
}

TEST_CASE("term orders: block product eliminates") {
  // t ranked alone in the first block dominates any x,y power.
  auto elim = TermOrderSpec::product({OrderBlock{OrderKind::lex, {2}},
                                      OrderBlock{OrderKind::degrevlex, {0, 1}}});
  auto t = Monomial::from_exponents({0, 0, 1});
  auto xy9 = Monomial::from_exponents({9, 9, 0});
  CHECK(elim.compare(t, xy9) > 0);
  CHECK(elim.compare(xy9, t) < 0);
  CHECK(elim.signature() == "lex:2|degrevlex:0,1");
  CHECK_THROWS_AS(TermOrderSpec::product({OrderBlock{OrderKind::lex, {0, 0}}}), value_error);
  CHECK_THROWS_AS(TermOrderSpec::lex({0, 2}), value_error);
}

TEST_CASE("term orders: multiplicativity and totality (randomized)") {
  std::mt19937_64 rng(20260825);
  auto orders = {TermOrderSpec::lex({2, 0, 1}), TermOrderSpec::degrevlex({1, 2, 0}),
                 TermOrderSpec::product({OrderBlock{OrderKind::lex, {1}},
                                         OrderBlock{OrderKind::degrevlex, {2, 0}}})};
  auto rand_mono = [&]() {
    std::uniform_int_distribution<int> d(0, 4);
    return Monomial::from_exponents({static_cast<std::uint32_t>(d(rng)),
                                     static_cast<std::uint32_t>(d(rng)),
                                     static_cast<std::uint32_t>(d(rng))});
  };
  for (const auto& ord : orders) {
    auto one = Monomial::one(3);
    for (int it = 0; it < 200; ++it) {
      auto a = rand_mono(), b = rand_mono(), c = rand_mono();
      int ab = ord.compare(a, b);
      CHECK(ord.compare(b, a) == -ab);
      if (a != b) CHECK(ab != 0);
      // 1 is minimal; multiplication preserves order.
      if (!a.is_one()) CHECK(ord.compare(a, one) > 0);
      if (ab != 0) CHECK(ord.compare(a.times(c), b.times(c)) == ab);
      // transitivity spot-check
      int bc = ord.compare(b, c);
      if (ab > 0 && bc > 0) CHECK(ord.compare(a, c) > 0);
    }
  }
}

TEST_CASE("ring: construction and validation") {
  auto r = ring_xyz(7);
  CHECK(r->var_count() == 3);
  CHECK(r->characteristic() == 7);
  CHECK(r->index_of("y") == 1);
  CHECK(!r->index_of("w"));
  CHECK(r->order("lex").kind() == OrderKind::lex);
  CHECK(r->canonical_order().kind() == OrderKind::degrevlex);
  CHECK_THROWS_AS(r->order("weighted"), value_error);
  CHECK_THROWS_AS(RingSpec::make({"x", "x"}, 0), value_error);
  CHECK_THROWS_AS(RingSpec::make({"2x"}, 0), value_error);
  CHECK_THROWS_AS(RingSpec::make({"x"}, 6), value_error);  // 6 not prime
  CHECK_THROWS_AS(RingSpec::make({}, 0), value_error);

  auto ext = r->extend({"w1", "w2"});
  CHECK(ext->var_count() == 5);
  CHECK(ext->variable_name(3) == "w1");
  CHECK(ext->characteristic() == 7);
  CHECK_THROWS_AS(r->extend({"y"}), value_error);
}

TEST_CASE("polynomials: arithmetic") {
  auto r = ring_xyz();
  auto f = P(r, "x + y");
  CHECK((f * P(r, "x - y")) == P(r, "x^2 - y^2"));
  CHECK(f.pow(2) == P(r, "x^2 + 2*x*y + y^2"));
  CHECK((f - f).is_zero());
  CHECK(P(r, "0").is_zero());
  CHECK(f.degree() == 1);
  CHECK(P(r, "x^2*y + z").degree() == 3);
  CHECK(P(r, "x^2 + y*z").is_homogeneous());
  CHECK(!P(r, "x^2 + y").is_homogeneous());

  // Freshman's dream in characteristic 2.
  auto r2 = ring_xyz(2);
  CHECK(P(r2, "x + y").pow(2) == P(r2, "x^2 + y^2"));
  CHECK(P(r2, "x + y") + P(r2, "x") == P(r2, "y"));
}

TEST_CASE("polynomials: leading terms depend on the order") {
  auto r = ring_xyz();
  auto f = P(r, "x + y^2");
  CHECK(f.leading_monomial(r->order("lex")) == Monomial::from_exponents({1, 0, 0}));
  CHECK(f.leading_monomial(r->order("degrevlex")) == Monomial::from_exponents({0, 2, 0}));
  auto g = P(r, "x*z + y^2");
  CHECK(g.leading_monomial(r->order("degrevlex")) == Monomial::from_exponents({0, 2, 0}));
  CHECK(g.leading_monomial(r->order("lex")) == Monomial::from_exponents({1, 0, 1}));
  CHECK_THROWS_AS(P(r, "0").leading_term(r->order("lex")), value_error);
  // monic under an order divides by that order's leading coefficient
  auto h = P(r, "2*x + 3*y^2");
  CHECK(h.monic(r->order("lex")) == P(r, "x + 3/2*y^2"));
}

TEST_CASE("parsing: grammar, errors, round-trips") {
  auto r = ring_xyz();
  CHECK(P(r, "x^2*y - 3*z + 1") == P(r, "1 - z - 2*z + x^2*y"));
  CHECK(P(r, "(x + y)*(x - y)") == P(r, "x^2 - y^2"));
  CHECK(P(r, "-x + 2") == P(r, "2 - x"));
  CHECK(P(r, "(x + y)^2") == P(r, "x^2 + 2*x*y + y^2"));
  CHECK(P(r, "1/2*x") == P(r, "x").scale(Coefficient::fraction(1, 2, 0)));
  CHECK(P(r, "007") == P(r, "7"));

  CHECK_THROWS_AS(P(r, "w + 1"), parse_error);
  CHECK_THROWS_AS(P(r, "x y"), parse_error);   // implicit products rejected
  CHECK_THROWS_AS(P(r, "x + "), parse_error);
  CHECK_THROWS_AS(P(r, "()"), parse_error);
  CHECK_THROWS_AS(P(r, "x^"), parse_error);
  CHECK_THROWS_AS(P(r, "1/0"), parse_error);
  CHECK_THROWS_AS(P(r, "x..y"), parse_error);

  // position reporting points into the text
  try {
    P(r, "x + q");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 4);
  }

  // canonical printing round-trips, including rationals and residues
  for (const char* s : {"x^2*y - 3*z + 1", "x", "0", "42", "1/2*x - 7/3", "x*y*z"}) {
    auto f = P(r, s);
    CHECK(parse_polynomial(f.str(), r) == f);
  }
  auto r5 = ring_xyz(5);
  auto f5 = P(r5, "3*x^2 - y + 7");
  CHECK(f5.str() == "3*x^2 + 4*y + 2");
  CHECK(parse_polynomial(f5.str(), r5) == f5);
}

TEST_CASE("parsing: longest-name matching and lists") {
  auto r = RingSpec::make({"x", "x1", "x12"}, 0);
  auto f = parse_polynomial("x12 + x1 + x", r);
  CHECK(f.term_count() == 3);
  CHECK(f.leading_term(r->order("lex")).mono == Monomial::from_exponents({1, 0, 0}));

  auto list = parse_polynomial_list("x + 1, x1^2\n x12 - x", r);
  REQUIRE(list.size() == 3);
  CHECK(list[1] == parse_polynomial("x1^2", r));

  auto comma_ring = RingSpec::make({"a,b"}, 0);
  CHECK(parse_polynomial("a,b^2", comma_ring).degree() == 2);
  CHECK_THROWS_AS(parse_polynomial_list("a,b", comma_ring), value_error);
}

TEST_CASE("promote embeds along names") {
  auto r = ring_xyz();
  auto big = r->extend({"w"});
  auto f = P(r, "x*y - z^2");
  auto g = promote(f, big);
  CHECK(g.ring() == big);
  CHECK(g == parse_polynomial("x*y - z^2", big));
  CHECK_THROWS_AS(promote(parse_polynomial("w", big), r), value_error);
}

TEST_CASE("matrix: determinants match the permutation oracle") {
  auto r = RingSpec::make({"a", "b", "c", "d"}, 0);
  PolyMatrix m(r, 2, 2);
  m.set(0, 0, P(r, "a"));
  m.set(0, 1, P(r, "b"));
  m.set(1, 0, P(r, "c"));
  m.set(1, 1, P(r, "d"));
  CHECK(determinant(m) == P(r, "a*d - b*c"));

  // 3x3 generic matrix vs oracle
  std::vector<std::string> names;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
  auto r9 = RingSpec::make(names, 0);
  PolyMatrix g(r9, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) g.set(i, j, Polynomial::variable(r9, 3 * i + j));
  CHECK(determinant(g) == det_oracle(g));
  CHECK_THROWS_AS(determinant(PolyMatrix(r9, 2, 3)), value_error);

  CHECK(minor_determinant(g, {0, 1}, {1, 2}) ==
        parse_polynomial("x12*x23 - x13*x22", r9));
}

TEST_CASE("matrix: pfaffian") {
  // Generic 4x4 alternating matrix; frozen textbook value.
  std::vector<std::string> names;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
  auto r = RingSpec::make(names, 0);
  PolyMatrix a(r, 4, 4);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      auto v = Polynomial::variable(r, k++);
      a.set(i, j, v);
      a.set(j, i, -v);
    }
  auto pf = pfaffian(a);
  CHECK(pf == parse_polynomial("x12*x34 - x13*x24 + x14*x23", r));
  // Pf(A)^2 = det(A) exactly.
  CHECK(pf * pf == determinant(a));
  CHECK(pf * pf == det_oracle(a));
  // principal 2x2 sub-pfaffian
  CHECK(pfaffian(a, {0, 2}) == parse_polynomial("x13", r));
  CHECK_THROWS_AS(pfaffian(a, {0, 1, 2}), value_error);
  CHECK_THROWS_AS(pfaffian(a, {2, 0}), value_error);

  PolyMatrix bad(r, 2, 2);
  bad.set(0, 1, parse_polynomial("x12", r));
  CHECK_THROWS_AS(pfaffian(bad), value_error);  // not alternating (sign)
}
