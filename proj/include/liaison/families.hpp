#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liaison/groebner.hpp"
#include "liaison/matrix.hpp"

namespace liaison {

enum class MatrixKind { generic, alternating, hankel, symplectic_x };

namespace detail {

inline std::string xname(std::size_t i, std::size_t j) {
  if (i <= 9 && j <= 9) return "x" + std::to_string(i) + std::to_string(j);
  return "x" + std::to_string(i) + "_" + std::to_string(j);
}

/// Combinations of {0..n-1} of size t in lexicographic order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  if (t > n) return out;
  std::vector<std::size_t> c(t);
  for (std::size_t i = 0; i < t; ++i) c[i] = i;
  for (;;) {
    out.push_back(c);
    std::size_t k = t;
    while (k > 0 && c[k - 1] == n - t + (k - 1)) --k;
    if (k == 0) break;
    ++c[k - 1];
    for (std::size_t l = k; l < t; ++l) c[l] = c[l - 1] + 1;
  }
  return out;
}

inline std::size_t binom2(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace detail

/// A matrix shape plus the freshly minted ring that carries it. The ring
/// registers the family's bespoke order under its conventional name.
struct MatrixSpec {
  MatrixKind kind;
  std::size_t rows = 0, cols = 0;  // alternating: rows = cols = k; hankel: t x n
  std::size_t t = 0, n = 0;        // family parameters as in the source text
  RingPtr ring;

  static MatrixSpec generic(std::size_t m, std::size_t n, std::uint64_t p = 0);
  static MatrixSpec alternating(std::size_t k, std::uint64_t p = 0);
  static MatrixSpec hankel(std::size_t t, std::size_t n, std::uint64_t p = 0);
  static MatrixSpec symplectic(std::size_t t, std::size_t n, std::uint64_t p = 0);  // 2t x n
};

/// Diagonal order for an m x n generic matrix ring: lex, row-major, so every
/// adjacent-column maximal minor leads with its main diagonal.
inline TermOrderSpec diagonal_order(std::size_t m, std::size_t n) {
  std::vector<std::uint32_t> rank(m * n);
  for (std::size_t i = 0; i < m * n; ++i) rank[i] = static_cast<std::uint32_t>(i);
  return TermOrderSpec::lex(std::move(rank));
}

/// Pfaffian order for a k x k alternating matrix ring (variables x_{ij},
/// i < j, row-major): lex, scanning each row right to left, rows top down.
inline TermOrderSpec pfaffian_order(std::size_t k) {
  // position of x_{ij} in the row-major upper-triangle listing
  auto pos = [k](std::size_t i, std::size_t j) {
    return (i - 1) * k - i * (i + 1) / 2 + j - 1;
  };
  std::vector<std::uint32_t> rank;
  rank.reserve(k * (k - 1) / 2);
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = k; j > i; --j) rank.push_back(static_cast<std::uint32_t>(pos(i, j)));
  return TermOrderSpec::lex(std::move(rank));
}

namespace detail {

/// Block index of x_{i,j} (equivalently w_{i,j}) in the symplectic block
/// order; i runs over 1..t, j over 1..n.
inline std::size_t symplectic_block(std::size_t i, std::size_t j, std::size_t n) {
  // signed arithmetic: n - i + 1 goes negative once i exceeds n + 1
  auto ii = static_cast<long long>(i);
  auto jj = static_cast<long long>(j);
  auto nn = static_cast<long long>(n);
  if (2 * jj < nn - ii + 1) return static_cast<std::size_t>(2 * jj + ii - 2);
  if (jj < nn - ii + 1) return static_cast<std::size_t>(2 * nn - 2 * jj - ii);
  return 0;
}

}  // namespace detail

/// Symplectic block order on the 2t x n matrix ring: variables are sorted
/// into blocks B_0 .. B_{n-1}, higher blocks first, row-major within a block
/// with the x half before the w half (w_{i,j} = x_{i+t,n-j+1}); the order is
/// degrevlex over that ranking. The source text asks for revlex, which is
/// not a term order; on the homogeneous generators involved the two agree.
inline TermOrderSpec symplectic_block_order(std::size_t t, std::size_t n) {
  auto x_index = [n](std::size_t i, std::size_t j) { return (i - 1) * n + (j - 1); };
  std::vector<std::uint32_t> rank;
  rank.reserve(2 * t * n);
  for (std::size_t ell = n; ell-- > 0;) {
    for (std::size_t i = 1; i <= t; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (detail::symplectic_block(i, j, n) == ell)
          rank.push_back(static_cast<std::uint32_t>(x_index(i, j)));
    for (std::size_t i = 1; i <= t; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (detail::symplectic_block(i, j, n) == ell)
          rank.push_back(static_cast<std::uint32_t>(x_index(i + t, n - j + 1)));
  }
  return TermOrderSpec::degrevlex(std::move(rank));
}

inline MatrixSpec MatrixSpec::generic(std::size_t m, std::size_t n, std::uint64_t p) {
  if (m == 0 || n == 0) throw value_error("generic matrix wants positive dimensions");
  std::vector<std::string> vars;
  vars.reserve(m * n);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) vars.push_back(detail::xname(i, j));
  RingPtr ring = RingSpec::make(std::move(vars), p, {{"diagonal", diagonal_order(m, n)}});
  return {MatrixKind::generic, m, n, 0, 0, std::move(ring)};
}

inline MatrixSpec MatrixSpec::alternating(std::size_t k, std::uint64_t p) {
  if (k < 2) throw value_error("alternating matrix wants size >= 2");
  std::vector<std::string> vars;
  vars.reserve(k * (k - 1) / 2);
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j) vars.push_back(detail::xname(i, j));
  RingPtr ring = RingSpec::make(std::move(vars), p, {{"pfaffian", pfaffian_order(k)}});
  return {MatrixKind::alternating, k, k, 0, 0, std::move(ring)};
}

inline MatrixSpec MatrixSpec::hankel(std::size_t t, std::size_t n, std::uint64_t p) {
  if (t == 0 || n == 0) throw value_error("hankel matrix wants positive dimensions");
  std::vector<std::string> vars;
  for (std::size_t m = 1; m <= n + t - 1; ++m) vars.push_back("x" + std::to_string(m));
  RingPtr ring = RingSpec::make(std::move(vars), p);
  return {MatrixKind::hankel, t, n, t, n, std::move(ring)};
}

inline MatrixSpec MatrixSpec::symplectic(std::size_t t, std::size_t n, std::uint64_t p) {
  if (t == 0 || n == 0) throw value_error("symplectic matrix wants positive parameters");
  std::vector<std::string> vars;
  vars.reserve(2 * t * n);
  for (std::size_t i = 1; i <= 2 * t; ++i)
    for (std::size_t j = 1; j <= n; ++j) vars.push_back(detail::xname(i, j));
  RingPtr ring =
      RingSpec::make(std::move(vars), p, {{"symplectic-block", symplectic_block_order(t, n)}});
  return {MatrixKind::symplectic_x, 2 * t, n, t, n, std::move(ring)};
}

inline PolyMatrix build_matrix(const MatrixSpec& spec) {
  PolyMatrix A(spec.ring, spec.rows, spec.cols);
  switch (spec.kind) {
    case MatrixKind::generic:
    case MatrixKind::symplectic_x:
      for (std::size_t i = 0; i < spec.rows; ++i)
        for (std::size_t j = 0; j < spec.cols; ++j)
          A.set(i, j, Polynomial::variable(spec.ring, i * spec.cols + j));
      break;
    case MatrixKind::alternating:
      for (std::size_t i = 1; i <= spec.rows; ++i) {
        for (std::size_t j = i + 1; j <= spec.cols; ++j) {
          auto idx = spec.ring->index_of(detail::xname(i, j));
          Polynomial v = Polynomial::variable(spec.ring, *idx);
          A.set(i - 1, j - 1, v);
          A.set(j - 1, i - 1, -v);
        }
      }
      break;
    case MatrixKind::hankel:
      for (std::size_t i = 0; i < spec.rows; ++i)
        for (std::size_t j = 0; j < spec.cols; ++j)
          A.set(i, j, Polynomial::variable(spec.ring, i + j));
      break;
  }
  return A;
}

/// An ideal plus the source text's metadata for it. height is the closed
/// formula where one exists; alpha_indices point into generators() and name
/// the recommended regular-sequence candidate.
struct FamilyIdeal {
  FamilyIdeal(IdealHandle ideal_, std::string family_)
      : ideal(std::move(ideal_)), family(std::move(family_)) {}

  IdealHandle ideal;
  std::string family;
  std::optional<std::size_t> height;
  std::size_t degree = 0;
  std::string order_name;  // recommended order, registered on the ring when set
  std::vector<std::size_t> alpha_indices;
  bool gens_are_groebner = false;
  std::vector<std::string> notes;
};

namespace detail {

inline bool entries_are_distinct_variables(const PolyMatrix& A) {
  std::vector<bool> seen(A.ring()->var_count(), false);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const Polynomial& e = A.at(i, j);
      if (e.term_count() != 1) return false;
      const Term& t = e.terms()[0];
      if (!t.coeff.is_one() || t.mono.degree() != 1) return false;
      std::size_t v = t.mono.support()[0];
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

/// Hankel shape: single-variable entries constant along anti-diagonals,
/// entry (i,j) determined by i + j.
inline bool entries_are_hankel(const PolyMatrix& A) {
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const Polynomial& e = A.at(i, j);
      if (e.term_count() != 1) return false;
      const Term& t = e.terms()[0];
      if (!t.coeff.is_one() || t.mono.degree() != 1) return false;
      if (t.mono.support()[0] != i + j) return false;
    }
  }
  return A.rows() >= 2 || A.cols() >= 2;
}

}  // namespace detail

/// All t x t minors of A, row and column subsets in lexicographic order,
/// rows outer. Metadata is filled when the matrix is recognized as generic
/// (height (m-t+1)(n-t+1)) or as a maximal-minor Hankel instance.
inline FamilyIdeal minors_ideal(const PolyMatrix& A, std::size_t t) {
  if (t == 0 || t > A.rows() || t > A.cols())
    throw value_error("minor size out of range");
  auto row_sets = detail::combinations(A.rows(), t);
  auto col_sets = detail::combinations(A.cols(), t);
  std::size_t m = std::min(A.rows(), A.cols());
  std::size_t n = std::max(A.rows(), A.cols());
  bool wide = A.cols() >= A.rows();  // adjacent windows run along the long axis

  std::vector<Polynomial> gens;
  std::vector<std::size_t> alpha;
  gens.reserve(row_sets.size() * col_sets.size());
  for (const auto& R : row_sets) {
    for (const auto& C : col_sets) {
      if (t == m) {
        const auto& windowed = wide ? C : R;
        if (windowed.back() - windowed.front() + 1 == t) alpha.push_back(gens.size());
      }
      gens.push_back(minor_determinant(A, R, C));
    }
  }

  FamilyIdeal out(IdealHandle(A.ring(), std::move(gens)), "minors");
  out.degree = t;
  bool generic = detail::entries_are_distinct_variables(A);
  bool hankel = detail::entries_are_hankel(A);
  if (generic) {
    out.height = (m - t + 1) * (n - t + 1);
    if (t == m) {
      out.order_name = A.ring()->has_order("diagonal") ? "diagonal" : "";
      out.alpha_indices = alpha;
    } else if (2 * *out.height > A.ring()->var_count()) {
      out.notes.push_back(
          "property P: impossible — pairwise coprime squarefree initial terms would need 2*" +
          std::to_string(*out.height) + " = " + std::to_string(2 * *out.height) +
          " variables, but the ring has only " + std::to_string(A.ring()->var_count()));
    }
  } else if (hankel && t == A.rows()) {
    out.family = "hankel-minors";
    out.height = A.cols() - t + 1;
    out.order_name = "lex";
    out.gens_are_groebner = true;
    out.notes.push_back("maximal minors of a Hankel matrix form a lex Groebner basis; "
                        "verified here at desk scale only");
  }
  return out;
}

/// The 2n+1 submaximal pfaffians D_k (row/column k deleted) of an odd-size
/// alternating matrix; pf_size must name their size 2n.
inline FamilyIdeal pfaffian_ideal(const PolyMatrix& A, std::size_t pf_size) {
  if (!is_alternating(A)) throw value_error("pfaffian_ideal wants an alternating matrix");
  std::size_t k = A.rows();
  if (k < 3 || k % 2 == 0) throw value_error("pfaffian_ideal wants odd size >= 3");
  if (pf_size + 1 != k) throw value_error("pfaffian size must be the matrix size minus one");
  std::size_t nn = pf_size / 2;  // the n of 2n+1

  std::vector<Polynomial> gens;
  gens.reserve(k);
  for (std::size_t drop = 0; drop < k; ++drop) {
    std::vector<std::size_t> idx;
    idx.reserve(k - 1);
    for (std::size_t i = 0; i < k; ++i)
      if (i != drop) idx.push_back(i);
    gens.push_back(pfaffian(A, std::move(idx)));
  }

  FamilyIdeal out(IdealHandle(A.ring(), std::move(gens)), "pfaffians");
  out.height = 3;
  out.degree = nn;
  out.order_name = A.ring()->has_order("pfaffian") ? "pfaffian" : "";
  // Index sets [1..2n], [1..n | n+2..2n+1], [2..2n+1]: drop 2n+1, n+1, 1.
  out.alpha_indices = {k - 1, nn, 0};
  return out;
}

/// Nullcone generators d_{i,j} for 1 <= i < j <= n, each a sum of t two-by-
/// two minors mixing the x and w halves of the 2t x n matrix.
inline FamilyIdeal symplectic_nullcone_ideal(std::size_t t, std::size_t n,
                                             std::uint64_t p = 0) {
  MatrixSpec spec = MatrixSpec::symplectic(t, n, p);
  const RingPtr& ring = spec.ring;
  auto xv = [&](std::size_t i, std::size_t j) {
    return Polynomial::variable(ring, (i - 1) * n + (j - 1));
  };
  auto wv = [&](std::size_t i, std::size_t j) { return xv(i + t, n - j + 1); };

  std::vector<Polynomial> gens;
  std::vector<std::size_t> alpha;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      Polynomial d = Polynomial::zero(ring);
      for (std::size_t kk = 1; kk <= t; ++kk)
        d = d + xv(kk, i) * wv(kk, n - j + 1) - xv(kk, j) * wv(kk, n - i + 1);
      if (j - i <= t) alpha.push_back(gens.size());
      gens.push_back(std::move(d));
    }
  }

  std::size_t dim = (n <= t + 1) ? 2 * n * t - detail::binom2(n)
                                 : n * t + detail::binom2(t + 1);
  FamilyIdeal out(IdealHandle(ring, std::move(gens)), "symplectic-nullcone");
  out.height = 2 * n * t - dim;
  out.degree = 2;
  out.order_name = "symplectic-block";
  out.alpha_indices = alpha;
  out.notes.push_back("order realizes the source's revlex as degrevlex; the two agree on the "
                      "homogeneous generators");
  return out;
}

/// The recommended regular-sequence candidate, resolved from the stored
/// indices.
inline std::vector<Polynomial> paper_alpha(const FamilyIdeal& f) {
  std::vector<Polynomial> out;
  out.reserve(f.alpha_indices.size());
  for (auto i : f.alpha_indices) {
    if (i >= f.ideal.generators().size()) throw value_error("alpha index out of range");
    out.push_back(f.ideal.generators()[i]);
  }
  return out;
}

}  // namespace liaison
