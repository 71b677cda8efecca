#include "doctest.h"
#include "oracle.hpp"

#include "charrig/zlin.hpp"

#include <random>

using namespace charrig;

namespace {

ZMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int range, int density) {
  ZMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (static_cast<int>(rng() % 100) < density) a(i, j) = static_cast<long>(rng() % (2 * range + 1)) - range;
  return a;
}

oracle::Dense dense(const ZMatrix& a) {
  oracle::Dense d(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d[i][j] = a(i, j);
  return d;
}

ZMatrix mul(const ZMatrix& a, const ZMatrix& b) {
  ZMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0)
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

bool is_identity(const ZMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace

TEST_CASE("smith form agrees with the dense oracle and its transforms are unimodular") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + rng() % 7, n = 1 + rng() % 7;
    ZMatrix a = random_matrix(rng, m, n, trial % 2 ? 9 : 3, 35 + trial % 50);
    SNFResult s = smith_normal_form(a);
    CAPTURE(trial);
    CHECK(mul(mul(s.U, a), s.V) == s.S);
    CHECK(is_identity(mul(s.U, s.U_inv)));
    CHECK(is_identity(mul(s.V, s.V_inv)));
    IntVector f = s.invariant_factors();
    auto expect = oracle::invariant_factors(dense(a));
    REQUIRE(f.size() == expect.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(f[i] == expect[i]);
      if (i + 1 < f.size()) CHECK(f[i + 1] % f[i] == 0);
    }
    CHECK(s.rank == expect.size());
  }
}

TEST_CASE("kernel basis spans the integral kernel with coordinates") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    ZMatrix a = random_matrix(rng, 1 + rng() % 5, 2 + rng() % 6, 4, 60);
    SNFResult s = smith_normal_form(a);
    KernelBasis k = kernel_with_coordinates(s);
    CHECK(mul(a, k.basis).is_zero());
    CHECK(k.basis.cols() == a.cols() - s.rank);
    CHECK(is_identity(mul(k.coords, k.basis)));
  }
}

TEST_CASE("integer solving finds solutions exactly when they exist") {
  ZMatrix a(2, 2);
  a(0, 0) = 2;
  a(1, 1) = 3;
  auto x = solve_integer(a, IntVector{4, 9});
  REQUIRE(x);
  CHECK(*x == IntVector{2, 3});
  CHECK_FALSE(solve_integer(a, IntVector{1, 0}));
  auto q = solve_rational(smith_normal_form(a), RatVector{Rational(1), Rational(1)});
  REQUIRE(q);
  CHECK((*q)[0] == Rational(1, 2));
  CHECK((*q)[1] == Rational(1, 3));
}

TEST_CASE("cokernel of a diagonal presentation") {
  ZMatrix a(3, 2);
  a(0, 0) = 2;
  a(1, 1) = 6;
  FgAbelianGroup g = cokernel(a);
  CHECK(g.rank() == 1);
  CHECK(g.torsion() == std::vector<Integer>{2, 6});
  CHECK(g.describe() == "Z/2 + Z/6 + Z");
  CHECK(g.reduce(IntVector{3, 7, 5}) == IntVector{1, 1, 5});
  CHECK(cokernel(ZMatrix(0, 0)).describe() == "0");
}
