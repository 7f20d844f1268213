// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "fdim/poly.hpp"

using namespace fdalg;

namespace {

const PrimeField F5(5), F7(7);

Matrix random_matrix(PrimeField f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(f.p()) - 1 + zero_bias);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      int v = d(rng);
      m(i, j) = v >= static_cast<int>(f.p()) ? 0 : static_cast<Scalar>(v);
    }
  return m;
}

// Independent oracle: a polynomial of degree <= 3 is irreducible iff it has no root.
bool has_root(const Poly& p) {
  for (Scalar x = 0; x < p.field().p(); ++x)
    if (p.eval(x) == 0) return true;
  return false;
}

// Independent oracle: brute-force irreducibility by trial division with every monic polynomial of degree <= n/2.
bool irreducible_by_trial(const Poly& p) {
  const PrimeField& f = p.field();
  const int n = p.degree();
  for (int d = 1; d <= n / 2; ++d) {
    std::size_t count = 1;
    for (int k = 0; k < d; ++k) count *= f.p();
    for (std::size_t code = 0; code < count; ++code) {
      Vec c(static_cast<std::size_t>(d) + 1, 0);
      std::size_t x = code;
      for (int k = 0; k < d; ++k) {
        c[static_cast<std::size_t>(k)] = static_cast<Scalar>(x % f.p());
        x /= f.p();
      }
      c[static_cast<std::size_t>(d)] = 1;
      if ((p % Poly(f, c)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Rref, IdentityIsFixed) {
  auto e = Matrix::identity(F5, 3).rref();
  EXPECT_EQ(e.reduced, Matrix::identity(F5, 3));
  EXPECT_EQ(e.rank, 3u);
}

TEST(Rref, ZeroMatrix) {
  auto e = Matrix(F5, 2, 4).rref();
  EXPECT_TRUE(e.reduced.is_zero());
  EXPECT_EQ(e.rank, 0u);
}

TEST(Rref, HandReduction) {
  auto e = Matrix(F5, {{1, 2}, {2, 4}}).rref();
  EXPECT_EQ(e.reduced, Matrix(F5, {{1, 2}, {0, 0}}));
  EXPECT_EQ(e.rank, 1u);
  EXPECT_EQ(e.pivots, std::vector<std::size_t>{0});
}

TEST(Rref, Idempotent) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    Matrix m = random_matrix(F5, 1 + t % 5, 1 + (t * 7) % 6, rng, 3);
    auto once = m.rref().reduced;
    EXPECT_EQ(once.rref().reduced, once);
  }
}

TEST(Kernel, IdentityHasZeroKernel) { EXPECT_EQ(Matrix::identity(F5, 4).kernel().dim(), 0u); }

TEST(Kernel, ZeroMapHasFullKernel) { EXPECT_EQ(Matrix(F5, 3, 2).kernel().dim(), 3u); }

TEST(Kernel, HandSolvedRowKernel) {
  Subspace k = Matrix(F5, {{1, 2}, {2, 4}}).kernel();
  ASSERT_EQ(k.dim(), 1u);
  // (2, -1) normalized to pivot form is (1, 2): 1*(1,2) + 2*(2,4) = (5, 10) = 0
  EXPECT_EQ(k.basis(), Matrix(F5, {{1, 2}}));
}

TEST(Kernel, DimensionFormula) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    Matrix m = random_matrix(F7, 1 + t % 6, 1 + (t * 5) % 7, rng, 4);
    Subspace k = m.kernel();
    EXPECT_EQ(k.dim(), m.rows() - m.rank());
    for (std::size_t r = 0; r < k.dim(); ++r) EXPECT_TRUE(is_zero(m.apply(k.basis().row_span(r))));
  }
}

TEST(Solve, Trivial) {
  Vec t{3, 1, 4};
  EXPECT_EQ(*Matrix::identity(F5, 3).solve(t), t);
  EXPECT_FALSE(Matrix(F5, 3, 3).solve(t).has_value());
  EXPECT_EQ(*Matrix(F5, 3, 3).solve(Vec{0, 0, 0}), (Vec{0, 0, 0}));
}

TEST(Solve, ReproducesTarget) {
  std::mt19937_64 rng(3);
  int solvable = 0;
  for (int t = 0; t < 100; ++t) {
    Matrix m = random_matrix(F7, 1 + t % 5, 1 + (t * 3) % 6, rng, 4);
    Vec target = random_matrix(F7, 1, m.cols(), rng).row(0);
    if (t % 2) target = m.apply(random_matrix(F7, 1, m.rows(), rng).row(0));
    auto x = m.solve(target);
    if (!x) continue;
    ++solvable;
    EXPECT_EQ(m.apply(*x), target);
  }
  EXPECT_GE(solvable, 50);
}

TEST(Solve, ManyTargetsAtOnce) {
  std::mt19937_64 rng(4);
  Matrix m = random_matrix(F7, 6, 4, rng);
  Matrix x0 = random_matrix(F7, 3, 6, rng);
  auto x = solve_rows(m, x0 * m);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x * m, x0 * m);
  EXPECT_FALSE(solve_rows(Matrix(F7, 2, 2), Matrix::identity(F7, 2)).has_value());
}

TEST(Subspace, SumAndIntersection) {
  Subspace a = Subspace::span(F5, 3, {{1, 0, 0}});
  Subspace b = Subspace::span(F5, 3, {{0, 1, 0}});
  EXPECT_EQ(a.sum(b).dim(), 2u);
  EXPECT_EQ(a.intersect(b).dim(), 0u);
  EXPECT_EQ(a.sum(Subspace(F5, 3)), a);
  EXPECT_EQ(a.intersect(a), a);
}

TEST(Subspace, AmbientMismatch) {
  Subspace a(F5, 3), b(F5, 4);
  try {
    (void)a.sum(b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbientMismatch);
  }
}

TEST(Subspace, GrassmannFormula) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 6;
    Subspace a = Subspace::span(random_matrix(F5, rng() % (n + 1), n, rng, 3));
    Subspace b = Subspace::span(random_matrix(F5, rng() % (n + 1), n, rng, 3));
    const Subspace s = a.sum(b), i = a.intersect(b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(s.contains(a) && s.contains(b));
    EXPECT_TRUE(a.contains(i) && b.contains(i));
    // complement coordinates extend a basis of a to the ambient space
    Subspace full = a.sum(a.complement());
    EXPECT_TRUE(full.is_full());
  }
}

TEST(Subspace, CanonicalForm) {
  Subspace a = Subspace::span(F7, 3, {{1, 2, 3}, {0, 1, 1}});
  Subspace b = Subspace::span(F7, 3, {{1, 3, 4}, {2, 4, 6}});
  EXPECT_EQ(a, b);
}

TEST(MinPoly, Basic) {
  EXPECT_EQ(min_poly(Matrix(F5, 3, 3)), Poly::x(F5));
  EXPECT_EQ(min_poly(Matrix::identity(F5, 3)), Poly(F5, {-1, 1}));
  EXPECT_EQ(min_poly(Matrix(F5, {{0, 1}, {0, 0}})), Poly(F5, {0, 0, 1}));
}

TEST(MinPoly, Annihilates) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    Matrix m = random_matrix(F7, 1 + t % 5, 1 + t % 5, rng, 3);
    Poly mp = min_poly(m);
    EXPECT_TRUE(mp.eval(m).is_zero());
    EXPECT_EQ(mp.lead(), 1u);
    // no proper divisor annihilates: check every factor removed once
    for (auto& [g, e] : factor(mp)) EXPECT_FALSE((mp / g).eval(m).is_zero());
  }
}

TEST(Factor, KnownFactorizations) {
  auto a = factor(Poly(F5, {0, 0, 1}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].first, Poly::x(F5));
  EXPECT_EQ(a[0].second, 2u);

  auto b = factor(Poly(F5, {-1, 0, 1}));
  ASSERT_EQ(b.size(), 2u);
  // sorted by coefficient vector, constant term first: x + 1 = (1, 1) precedes x - 1 = (4, 1)
  EXPECT_EQ(b[0].first, Poly(F5, {1, 1}));
  EXPECT_EQ(b[1].first, Poly(F5, {-1, 1}));

  auto c = factor(Poly(F7, {1, 0, 1}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].first, Poly(F7, {1, 0, 1}));
  EXPECT_EQ(c[0].second, 1u);
}

TEST(Factor, ZeroPolynomial) {
  try {
    (void)factor(Poly(F5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroPolynomial);
  }
}

TEST(Factor, ProductAndIrreducibility) {
  std::mt19937_64 rng(7);
  for (PrimeField f : {F5, F7, PrimeField(3)}) {
    for (int t = 0; t < 60; ++t) {
      Vec c(2 + rng() % 8);
      for (auto& x : c) x = static_cast<Scalar>(rng() % f.p());
      if (!c.back()) c.back() = 1;
      // sprinkle repeated factors
      Poly p(f, c);
      if (t % 3 == 0) p = p * Poly(f, {static_cast<long long>(t % f.p()), 1}) * Poly(f, {static_cast<long long>(t % f.p()), 1});
      if (t % 5 == 0) p = p * p;
      auto fac = factor(p, static_cast<std::uint64_t>(t));
      Poly prod = Poly::constant(f, p.lead());
      for (auto& [g, e] : fac) {
        EXPECT_EQ(g.lead(), 1u);
        if (g.degree() <= 3)
          EXPECT_TRUE(g.degree() == 1 || !has_root(g));
        else
          EXPECT_TRUE(irreducible_by_trial(g));
        for (unsigned k = 0; k < e; ++k) prod = prod * g;
      }
      EXPECT_EQ(prod, p);
      for (std::size_t k = 1; k < fac.size(); ++k) {
        const auto &x = fac[k - 1].first, &y = fac[k].first;
        EXPECT_TRUE(x.degree() < y.degree() || (x.degree() == y.degree() && x.coeffs() < y.coeffs()));
      }
    }
  }
}

TEST(Factor, DeterministicAcrossSeeds) {
  Poly p(F7, {3, 1, 4, 1, 5, 1, 2, 1});
  auto ref = factor(p, 0);
  for (std::uint64_t s = 1; s < 6; ++s) EXPECT_EQ(factor(p, s), ref);
}

TEST(Field, RejectsComposite) {
  EXPECT_THROW(PrimeField(9), Error);
  EXPECT_THROW(PrimeField(2), Error);
  EXPECT_EQ(PrimeField().p(), 32003u);
}
