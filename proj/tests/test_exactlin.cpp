#include "fibseq/error.hpp"
#include "fibseq/exactlin.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fibseq;
using M = IntMatrix;

namespace {

bool divisibility_form(const SnfDecomposition& s) {
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j) {
      if (i != j && s.D(i, j) != 0) return false;
      if (i == j && s.D(i, i) < 0) return false;
    }
  for (std::size_t i = 0; i + 1 < s.rank; ++i)
    if (s.D(i + 1, i + 1) % s.D(i, i) != 0) return false;
  for (std::size_t i = s.rank; i < std::min(s.D.rows(), s.D.cols()); ++i)
    if (s.D(i, i) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("smith form of small matrices") {
  const auto s = snf(M::from_rows({{2, 4}, {6, 8}}));
  CHECK(s.D == M::from_rows({{2, 0}, {0, 4}}));
  CHECK(s.U * M::from_rows({{2, 4}, {6, 8}}) * s.V == s.D);
  CHECK(snf(M::identity(2)).D == M::identity(2));
  const auto z = snf(M(2, 3));
  CHECK(z.D == M(2, 3));
  CHECK(z.rank == 0);
  CHECK(z.U.rows() == 2);
  CHECK(z.V.rows() == 3);
}

TEST_CASE("smith form of empty shapes") {
  CHECK(snf(M(0, 3)).V == M::identity(3));
  CHECK(snf(M(2, 0)).U == M::identity(2));
  CHECK(invariant_factors(M(0, 0)).empty());
}

TEST_CASE("smith form against the minors oracle") {
  gen::Generator g(gen::seed(11));
  for (int trial = 0; trial < 150; ++trial) {
    const M m = g.matrix(g.uniform(1, 5), g.uniform(1, 5), g.uniform(1, 9));
    const auto s = snf(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    CHECK(divisibility_form(s));
    CHECK(invariant_factors(m) == oracle::minors_invariant_factors(m));
    CHECK(oracle::elimination_invariant_factors(m) == oracle::minors_invariant_factors(m));
  }
}

TEST_CASE("entries beyond 64 bits stay exact") {
  M m(2, 2);
  m(0, 0) = Integer(1) << 80;
  m(0, 1) = 3;
  m(1, 0) = 5;
  m(1, 1) = (Integer(1) << 70) + 1;
  const auto s = snf(m);
  CHECK(s.U * m * s.V == s.D);
  CHECK(invariant_factors(m) == oracle::minors_invariant_factors(m));
  CHECK(abs(s.D(0, 0) * s.D(1, 1)) == abs(oracle::determinant(m)));
}

TEST_CASE("kernel bases") {
  const M k = kernel_basis(M::from_rows({{2, -4}}));
  REQUIRE(k.cols() == 1);
  CHECK(((k(0, 0) == 2 && k(1, 0) == 1) || (k(0, 0) == -2 && k(1, 0) == -1)));
  CHECK(kernel_basis(M::identity(3)).cols() == 0);
  CHECK(same_span(kernel_basis(M(1, 2)), M::identity(2)));

  gen::Generator g(gen::seed(12));
  for (int trial = 0; trial < 80; ++trial) {
    const M m = g.matrix(g.uniform(1, 4), g.uniform(1, 6), 3);
    const M kb = kernel_basis(m);
    CHECK((m * kb).is_zero());
    CHECK(kb.cols() == m.cols() - oracle::rank_q(m));
    // Saturated: the kernel basis extends to a unimodular matrix, so its
    // maximal minors have gcd 1.
    if (kb.cols() > 0) CHECK(oracle::minors_invariant_factors(kb).back() == 1);
  }
}

TEST_CASE("integer solving") {
  CHECK(solve(M::from_rows({{2}}), IntVector{4}) == IntVector{2});
  CHECK_FALSE(solve(M::from_rows({{2}}), IntVector{3}));
  const M a = M::from_rows({{2, 3}});
  const auto x = solve(a, IntVector{1});
  REQUIRE(x);
  CHECK(a * *x == IntVector{1});

  gen::Generator g(gen::seed(13));
  for (int trial = 0; trial < 80; ++trial) {
    const M m = g.matrix(g.uniform(1, 4), g.uniform(1, 4), 3);
    const M y = g.matrix(m.cols(), 2, 4);
    const M b = m * y;
    const auto sol = solve(m, b);
    REQUIRE(sol);
    CHECK(m * *sol == b);
  }
}

TEST_CASE("span membership") {
  const M g = M::from_rows({{2, 0}, {0, 2}});
  CHECK(member_of_span(g, IntVector{2, 2}));
  CHECK_FALSE(member_of_span(g, IntVector{1, 0}));
  CHECK(member_of_span(M::from_rows({{2}, {1}}), IntVector{6, 3}));
  CHECK(span_contains(g, M::from_rows({{4, 2}, {0, -6}})));
  CHECK(same_span(M::from_rows({{1, 1}, {0, 1}}), M::identity(2)));
  CHECK_FALSE(same_span(g, M::identity(2)));
}

TEST_CASE("column span basis and rank") {
  const M m = M::from_rows({{1, 2, 3}, {2, 4, 6}});
  CHECK(rank(m) == 1);
  CHECK(column_span_basis(m).cols() == 1);
  CHECK(same_span(column_span_basis(m), m));
}

TEST_CASE("extension from a saturated sublattice") {
  const M basis = M::from_rows({{1}, {1}});
  const M images = M::from_rows({{5}});
  const M l = extend_from_sublattice(basis, images);
  CHECK(l * basis == images);
  CHECK_THROWS_AS(extend_from_sublattice(M::from_rows({{2}, {0}}), images), Error);
}

TEST_CASE("rank modulo a prime") {
  CHECK(rank_mod_p(M::from_rows({{2}}), 2) == 0);
  CHECK(rank_mod_p(M::from_rows({{2}}), 3) == 1);
  gen::Generator g(gen::seed(14));
  for (int trial = 0; trial < 60; ++trial) {
    const M m = g.matrix(g.uniform(1, 5), g.uniform(1, 5), 3);
    for (unsigned p : {2u, 3u, 5u}) CHECK(rank_mod_p(m, p) == oracle::rank_mod_p(m, p));
  }
}

TEST_CASE("matrix helpers") {
  const M a = M::from_rows({{1, 2}, {3, 4}});
  CHECK(a.transpose() == M::from_rows({{1, 3}, {2, 4}}));
  CHECK(kron(M::identity(2), M::from_rows({{5}})) == M::identity(2).scaled(5));
  CHECK(hstack(a, M(2, 0)) == a);
  CHECK(vstack(M(0, 2), a) == a);
  CHECK(block_diag(a, M(0, 0)) == a);
  CHECK(a.max_abs() == 4);
  CHECK(-a + a == M(2, 2));
}
