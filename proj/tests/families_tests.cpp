#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "liaison/families.hpp"
#include "liaison/linkage.hpp"

using namespace liaison;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

Budget roomy() {
  Budget b;
  b.max_steps = 5'000'000;
  b.max_degree = 48;
  b.max_variables = 32;
  return b;
}

Monomial mono_of(const RingPtr& r, const std::string& s) {
  return P(r, s).terms()[0].mono;
}

}  // namespace

TEST_CASE("generic matrix spec mints canonical variables and the diagonal order") {
  MatrixSpec spec = MatrixSpec::generic(2, 3);
  REQUIRE(spec.ring->var_count() == 6);
  CHECK(spec.ring->variables() ==
        std::vector<std::string>{"x11", "x12", "x13", "x21", "x22", "x23"});
  CHECK(spec.ring->has_order("diagonal"));
  // row-major lex: x11 is the greatest variable
  CHECK(diagonal_order(2, 3).signature() == "lex:0,1,2,3,4,5");

  PolyMatrix A = build_matrix(spec);
  REQUIRE(A.rows() == 2);
  REQUIRE(A.cols() == 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(A.at(i, j) == Polynomial::variable(spec.ring, i * 3 + j));

  CHECK_THROWS_AS(MatrixSpec::generic(0, 2), value_error);
}

TEST_CASE("alternating matrix spec yields A = -A^T over k(k-1)/2 variables") {
  MatrixSpec spec = MatrixSpec::alternating(5);
  REQUIRE(spec.ring->var_count() == 10);
  CHECK(spec.ring->variables()[0] == "x12");
  CHECK(spec.ring->variables()[9] == "x45");

  PolyMatrix A = build_matrix(spec);
  CHECK(is_alternating(A));
  CHECK(A.at(1, 0) == -A.at(0, 1));
  CHECK(A.at(0, 0).is_zero());

  // right-to-left along each row, rows top down: x15 > x14 > ... > x45
  CHECK(spec.ring->has_order("pfaffian"));
  CHECK(pfaffian_order(5).signature() == "lex:3,2,1,0,6,5,4,8,7,9");
  CHECK(pfaffian_order(3).signature() == "lex:1,0,2");

  CHECK_THROWS_AS(MatrixSpec::alternating(1), value_error);
}

TEST_CASE("hankel matrix spec climbs the antidiagonals") {
  MatrixSpec spec = MatrixSpec::hankel(2, 4);
  REQUIRE(spec.ring->var_count() == 5);
  PolyMatrix A = build_matrix(spec);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(A.at(0, j) == Polynomial::variable(spec.ring, j));      // x1..x4
    CHECK(A.at(1, j) == Polynomial::variable(spec.ring, j + 1));  // x2..x5
  }
  CHECK_THROWS_AS(MatrixSpec::hankel(0, 3), value_error);
}

TEST_CASE("symplectic matrix spec registers the block order") {
  MatrixSpec spec = MatrixSpec::symplectic(1, 3);
  REQUIRE(spec.ring->var_count() == 6);
  CHECK(spec.ring->has_order("symplectic-block"));
  // B1 = {x11, x12, w11, w12}, B0 = {x13, w13}; w_{1,j} = x_{2,4-j}
  CHECK(symplectic_block_order(1, 3).signature() == "degrevlex:0,1,5,4,2,3");
  // t=2, n=3: B2 = {x21, w21}, B1 = {x11, x12, w11, w12}, B0 = the rest
  CHECK(symplectic_block_order(2, 3).signature() ==
        "degrevlex:3,11,0,1,8,7,2,4,5,6,10,9");
}

TEST_CASE("minors of the generic 2x3 matrix carry diagonal metadata") {
  MatrixSpec spec = MatrixSpec::generic(2, 3);
  FamilyIdeal f = minors_ideal(build_matrix(spec), 2);
  const RingPtr& r = spec.ring;

  REQUIRE(f.ideal.generators().size() == 3);
  CHECK(f.family == "minors");
  CHECK(f.degree == 2);
  REQUIRE(f.height.has_value());
  CHECK(*f.height == 2);
  CHECK(f.order_name == "diagonal");
  CHECK(f.alpha_indices == std::vector<std::size_t>{0, 2});

  std::vector<Polynomial> alpha = paper_alpha(f);
  REQUIRE(alpha.size() == 2);
  CHECK(alpha[0] == P(r, "x11*x22 - x12*x21"));
  CHECK(alpha[1] == P(r, "x12*x23 - x13*x22"));

  const TermOrderSpec& diag = r->order("diagonal");
  CHECK(alpha[0].leading_monomial(diag) == mono_of(r, "x11*x22"));
  CHECK(alpha[1].leading_monomial(diag) == mono_of(r, "x12*x23"));
}

TEST_CASE("maximal minor alpha picks the adjacent column windows") {
  auto windows = [](std::size_t m, std::size_t n) {
    FamilyIdeal f = minors_ideal(build_matrix(MatrixSpec::generic(m, n)), m);
    return f;
  };

  FamilyIdeal f24 = windows(2, 4);
  CHECK(f24.ideal.generators().size() == 6);
  CHECK(*f24.height == 3);
  CHECK(f24.alpha_indices == std::vector<std::size_t>{0, 3, 5});

  FamilyIdeal f34 = windows(3, 4);
  CHECK(f34.ideal.generators().size() == 4);
  CHECK(*f34.height == 2);
  CHECK(f34.alpha_indices == std::vector<std::size_t>{0, 3});

  // |alpha| = n - m + 1 = height for maximal minors
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 3}, {2, 4}, {3, 4}, {2, 5}}) {
    FamilyIdeal f = windows(m, n);
    CHECK(f.alpha_indices.size() == n - m + 1);
    CHECK(f.alpha_indices.size() == *f.height);
  }
}

TEST_CASE("non-maximal minors record the impossibility note") {
  MatrixSpec spec = MatrixSpec::generic(3, 7);
  FamilyIdeal f = minors_ideal(build_matrix(spec), 2);
  CHECK(f.ideal.generators().size() == 63);
  REQUIRE(f.height.has_value());
  CHECK(*f.height == 12);
  CHECK(f.alpha_indices.empty());
  CHECK(f.order_name.empty());
  REQUIRE_FALSE(f.notes.empty());
  CHECK(f.notes[0].find("property P: impossible") != std::string::npos);
  CHECK_FALSE(f.gens_are_groebner);
}

TEST_CASE("hankel maximal minors are flagged as a lex Groebner basis") {
  FamilyIdeal f = minors_ideal(build_matrix(MatrixSpec::hankel(2, 6)), 2);
  CHECK(f.family == "hankel-minors");
  CHECK(f.ideal.generators().size() == 15);
  CHECK(f.degree == 2);
  REQUIRE(f.height.has_value());
  CHECK(*f.height == 5);
  CHECK(f.order_name == "lex");
  CHECK(f.gens_are_groebner);

  // desk-scale verification of the flag: the generator leads already cut out
  // the full initial ideal at n = 4 and n = 5
  for (std::size_t n : {4u, 5u}) {
    MatrixSpec spec = MatrixSpec::hankel(2, n);
    FamilyIdeal g = minors_ideal(build_matrix(spec), 2);
    const TermOrderSpec& lex = spec.ring->order("lex");
    std::vector<Monomial> leads;
    for (const auto& gen : g.ideal.generators()) leads.push_back(gen.leading_monomial(lex));
    MonomialIdeal lead_ideal = MonomialIdeal::make(spec.ring, std::move(leads));
    const GroebnerBasis& gb = g.ideal.groebner(lex, roomy());
    for (const auto& el : gb.elements) CHECK(lead_ideal.contains(el.leading_monomial(lex)));
  }
}

TEST_CASE("pfaffian ideal of the size-3 alternating matrix is the maximal ideal") {
  MatrixSpec spec = MatrixSpec::alternating(3);
  FamilyIdeal f = pfaffian_ideal(build_matrix(spec), 2);
  const RingPtr& r = spec.ring;

  REQUIRE(f.ideal.generators().size() == 3);
  CHECK(f.family == "pfaffians");
  CHECK(*f.height == 3);
  CHECK(f.degree == 1);
  CHECK(f.alpha_indices == std::vector<std::size_t>{2, 1, 0});

  IdealHandle maximal(r, {P(r, "x12"), P(r, "x13"), P(r, "x23")});
  CHECK(ideals_equal(f.ideal, maximal, r->order("degrevlex")));
}

TEST_CASE("size-5 pfaffians: five quadrics with the certified alpha") {
  MatrixSpec spec = MatrixSpec::alternating(5);
  FamilyIdeal f = pfaffian_ideal(build_matrix(spec), 4);
  const RingPtr& r = spec.ring;

  REQUIRE(f.ideal.generators().size() == 5);
  CHECK(f.degree == 2);
  CHECK(*f.height == 3);
  CHECK(f.order_name == "pfaffian");
  for (const auto& g : f.ideal.generators()) CHECK(g.degree() == 2);

  // alpha = pfaffians on [1..4], [1,2,4,5], [2..5]
  CHECK(f.alpha_indices == std::vector<std::size_t>{4, 2, 0});
  std::vector<Polynomial> alpha = paper_alpha(f);
  const TermOrderSpec& ord = r->order("pfaffian");
  REQUIRE(alpha.size() == 3);
  CHECK(alpha[0].leading_monomial(ord) == mono_of(r, "x14*x23"));
  CHECK(alpha[1].leading_monomial(ord) == mono_of(r, "x15*x24"));
  CHECK(alpha[2].leading_monomial(ord) == mono_of(r, "x25*x34"));
}

TEST_CASE("pfaffian ideal rejects malformed input") {
  PolyMatrix even = build_matrix(MatrixSpec::alternating(4));
  CHECK_THROWS_AS(pfaffian_ideal(even, 3), value_error);

  PolyMatrix five = build_matrix(MatrixSpec::alternating(5));
  CHECK_THROWS_AS(pfaffian_ideal(five, 2), value_error);  // size must be 4

  PolyMatrix generic = build_matrix(MatrixSpec::generic(3, 3));
  CHECK_THROWS_AS(pfaffian_ideal(generic, 2), value_error);
}

TEST_CASE("symplectic nullcone generators are the entries of X^T Omega X") {
  for (auto [t, n] : {std::pair<std::size_t, std::size_t>{1, 2}, {1, 3}, {2, 3}}) {
    FamilyIdeal f = symplectic_nullcone_ideal(t, n);
    MatrixSpec spec{MatrixKind::symplectic_x, 2 * t, n, t, n, f.ideal.ring()};
    PolyMatrix X = build_matrix(spec);

    // oracle straight from the definition: (X^T Omega X)_{ij} with Omega the
    // standard symplectic form, entries over columns i < j
    std::vector<Polynomial> expected;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Polynomial e = Polynomial::zero(f.ideal.ring());
        for (std::size_t k = 0; k < t; ++k)
          e = e + X.at(k, i) * X.at(k + t, j) - X.at(k, j) * X.at(k + t, i);
        expected.push_back(e);
      }
    }
    REQUIRE(f.ideal.generators().size() == expected.size());
    for (std::size_t g = 0; g < expected.size(); ++g)
      CHECK(f.ideal.generators()[g] == expected[g]);

    CHECK(f.degree == 2);
    CHECK(f.order_name == "symplectic-block");
  }
}

TEST_CASE("symplectic nullcone heights match the dimension dichotomy and a GB oracle") {
  struct Row {
    std::size_t t, n, height, alpha_count;
  };
  for (Row row : {Row{1, 2, 1, 1}, Row{1, 3, 2, 2}, Row{2, 3, 3, 3}}) {
    FamilyIdeal f = symplectic_nullcone_ideal(row.t, row.n);
    REQUIRE(f.height.has_value());
    CHECK(*f.height == row.height);
    CHECK(f.alpha_indices.size() == row.alpha_count);

    const TermOrderSpec& ord = f.ideal.ring()->order("symplectic-block");
    DimensionHeight dh = dimension_and_height(f.ideal, ord, roomy());
    CHECK(dh.height == row.height);
  }

  // alpha = {d_{i,j} : j - i <= t}; for (1,3) that drops the middle generator
  FamilyIdeal f13 = symplectic_nullcone_ideal(1, 3);
  CHECK(f13.alpha_indices == std::vector<std::size_t>{0, 2});
}

TEST_CASE("family property-P certificates validate across the desk-scale instances") {
  auto check_family = [](const FamilyIdeal& f) {
    REQUIRE_FALSE(f.order_name.empty());
    const TermOrderSpec& ord = f.ideal.ring()->order(f.order_name);
    PropertyPCertificate cert = property_p_check(f.ideal, paper_alpha(f), ord, roomy());
    CHECK(cert.valid());
    CHECK(cert.height_used == *f.height);
  };

  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 3}, {2, 4}, {3, 4}})
    check_family(minors_ideal(build_matrix(MatrixSpec::generic(m, n)), m));

  for (std::size_t k : {3u, 5u, 7u})
    check_family(pfaffian_ideal(build_matrix(MatrixSpec::alternating(k)), k - 1));

  for (auto [t, n] : {std::pair<std::size_t, std::size_t>{1, 2}, {1, 3}, {2, 3}})
    check_family(symplectic_nullcone_ideal(t, n));
}

TEST_CASE("hankel a-invariant formula is positive from n = 6 on") {
  // t = 2 Hankel: variables n+1, degree 2, height n-1; a-invariant n-5
  for (std::size_t n = 6; n <= 12; ++n) {
    std::int64_t a = a_invariant_universal_link({n + 1, 2, n - 1});
    CHECK(a == static_cast<std::int64_t>(n) - 5);
    CHECK(a > 0);
  }
  CHECK(a_invariant_universal_link({7, 2, 5}) == 1);
}

TEST_CASE("minors_ideal rejects out-of-range sizes") {
  PolyMatrix A = build_matrix(MatrixSpec::generic(2, 3));
  CHECK_THROWS_AS(minors_ideal(A, 0), value_error);
  CHECK_THROWS_AS(minors_ideal(A, 3), value_error);
}
