// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "fdim/homological.hpp"
#include "fdim/random.hpp"
#include "support.hpp"

using namespace fdalg;
using fdalg::testing::error_kind_of;
using fdalg::testing::load_data;

namespace {

struct Loop {
  Workspace ws = load_data("loop.fdq");
  const Algebra& a = ws.algebra("L").algebra;
  const Module& s = ws.module("S").module;
  const Module& p = ws.module("P").module;
};

// The same module in the basis given by the rows of t: act' = t act t^-1.
Module conjugate(const Module& m, const Matrix& t) {
  const Matrix ti = *t.inverse();
  std::vector<Matrix> act;
  for (const Matrix& x : m.acts()) act.push_back(t * x * ti);
  return Module::create(m.algebra(), m.dim(), std::move(act));
}

std::vector<std::size_t> summand_dims(const Decomposition& d) {
  std::vector<std::size_t> out;
  for (const auto& s : d.summands) out.push_back(s.module.dim());
  return out;
}

std::vector<std::size_t> multiset(const ClassVector& v) {
  std::vector<std::size_t> out;
  for (const auto& [id, c] : v) out.insert(out.end(), c, id);
  return out;
}

}  // namespace

TEST(EndRing, Dimensions) {
  Loop l;
  EXPECT_EQ(end_ring(l.s).algebra.dim(), 1u);
  EXPECT_EQ(end_ring(direct_sum(l.s, l.s)).algebra.dim(), 4u);
  const EndRing r = end_ring(Module::regular(l.a));
  EXPECT_EQ(r.algebra.dim(), 2u);
  // End of the regular module of a commutative algebra is commutative
  EXPECT_EQ(r.algebra.basis_product(0, 1), r.algebra.basis_product(1, 0));
  EXPECT_TRUE(r.element(r.algebra.unit()).is_identity());
}

TEST(EndRing, IsAnAssociativeAlgebra) {
  // trusted construction, so re-check the axioms independently here
  Workspace ws = load_data("example1.fdq");
  std::mt19937_64 rng(2);
  const Module m = random_module(ws.algebra("C").algebra, 6, rng);
  const EndRing r = end_ring(direct_sum(m, m));
  const Algebra& e = r.algebra;
  for (std::size_t i = 0; i < e.dim(); ++i)
    for (std::size_t j = 0; j < e.dim(); ++j)
      for (std::size_t k = 0; k < e.dim(); ++k)
        EXPECT_EQ(e.multiply(e.basis_product(i, j), e.basis_element(k)), e.multiply(e.basis_element(i), e.basis_product(j, k)));
}

TEST(Indecomposable, Examples) {
  Loop l;
  EXPECT_TRUE(is_indecomposable(l.s));
  const IndecomposabilityCertificate ss = indecomposability(direct_sum(l.s, l.s));
  EXPECT_FALSE(ss.indecomposable);
  ASSERT_TRUE(ss.idempotent.has_value());
  const Matrix& e = *ss.idempotent;
  EXPECT_EQ(e * e, e);
  EXPECT_FALSE(e.is_zero());
  EXPECT_FALSE(e.is_identity());
  const IndecomposabilityCertificate reg = indecomposability(Module::regular(l.a));
  EXPECT_TRUE(reg.indecomposable);
  EXPECT_EQ(reg.method, SplitMethod::SplitLocal);
  EXPECT_EQ(error_kind_of([&] { indecomposability(Module::zero(l.a)); }), ErrorKind::InvalidArgument);
}

TEST(Indecomposable, NonSplitLocalEndomorphisms) {
  // a Kronecker module at the degree-two point x^2 + 1 over GF(7): End is the field with 49 elements
  const std::string text =
      "algebra K\nvertex 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\n"
      "module M over K\nvertexdims 2 2\nact a = [[1, 0], [0, 1]]\nact b = [[0, 1], [6, 0]]\n";
  Workspace ws = load_workspace(text, 7);
  const Module& m = ws.module("M").module;
  const IndecomposabilityCertificate c = indecomposability(m);
  EXPECT_TRUE(c.indecomposable);
  EXPECT_EQ(c.method, SplitMethod::FieldTop);
  EXPECT_EQ(c.end_dim, 2u);
  // the same representation at the split point x^2 - 1 decomposes
  Workspace split = load_workspace(
      "algebra K\nvertex 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\n"
      "module M over K\nvertexdims 2 2\nact a = [[1, 0], [0, 1]]\nact b = [[0, 1], [1, 0]]\n",
      7);
  EXPECT_EQ(decompose(split.module("M").module).summands.size(), 2u);
}

TEST(Indecomposable, NonSplitAlgebraIsUnsupported) {
  // over GF(7)[x]/(x^2+1) itself the simples do not split, which the projective machinery reports
  const PrimeField f(7);
  const Algebra a = Algebra::create(f, {"1", "x"}, {{1, 0}, {0, 1}, {0, 1}, {6, 0}}, {1, 0});
  EXPECT_EQ(error_kind_of([&] { indecomposability(Module::regular(a)); }), ErrorKind::UnsupportedField);
}

TEST(Decompose, Examples) {
  Loop l;
  EXPECT_EQ(decompose(l.p).summands.size(), 1u);
  const Decomposition d = decompose(direct_sum(l.p, l.s));
  EXPECT_EQ(summand_dims(d), (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(d.verify());

  Workspace ws = load_data("example1.fdq");
  const Decomposition da = decompose(Module::regular(ws.algebra("A").algebra));
  EXPECT_EQ(summand_dims(da), (std::vector<std::size_t>{1, 2, 3, 4, 5, 5}));
  for (const auto& s : da.summands) EXPECT_TRUE(is_projective(s.module));
}

TEST(Decompose, HiddenBlocksInARandomBasis) {
  Workspace ws = load_data("example1.fdq");
  const Algebra& a = ws.algebra("A").algebra;
  const NakayamaData nd = *nakayama_data(a);
  std::mt19937_64 rng(9);
  const Module m = direct_sum({nd.indecomposables[1], nd.indecomposables[4], nd.indecomposables[4]}, a).module;
  const Module c = conjugate(m, random_invertible(a.field(), m.dim(), rng));
  IsoClassRegistry reg(a);
  EXPECT_EQ(reg.full_vector(m), reg.full_vector(c));
  EXPECT_TRUE(are_isomorphic(m, c));
}

TEST(Isomorphism, Examples) {
  Loop l;
  EXPECT_TRUE(isomorphic_indecomposables(l.s, l.s));
  EXPECT_TRUE(isomorphic_indecomposables(syzygy(l.s).module, l.s));
  EXPECT_FALSE(isomorphic_indecomposables(l.s, l.p));
  Workspace ws = load_data("a2.fdq");
  EXPECT_FALSE(isomorphic_indecomposables(ws.module("S1").module, ws.module("S2").module));
}

TEST(Isomorphism, EquivalenceRelationSpotChecks) {
  Workspace ws = load_data("example1.fdq");
  const Algebra& a = ws.algebra("C").algebra;
  std::mt19937_64 rng(4);
  std::vector<Module> mods;
  for (int k = 0; k < 6; ++k) {
    const Module m = random_module(a, 5, rng);
    mods.push_back(m);
    mods.push_back(conjugate(m, random_invertible(a.field(), m.dim(), rng)));
  }
  for (std::size_t i = 0; i < mods.size(); ++i) {
    EXPECT_TRUE(are_isomorphic(mods[i], mods[i]));
    for (std::size_t j = 0; j < mods.size(); ++j) {
      const bool ij = are_isomorphic(mods[i], mods[j]);
      EXPECT_EQ(ij, are_isomorphic(mods[j], mods[i]));
      for (std::size_t k = 0; k < mods.size() && ij; ++k)
        if (are_isomorphic(mods[j], mods[k])) EXPECT_TRUE(are_isomorphic(mods[i], mods[k]));
    }
  }
  for (std::size_t k = 0; k + 1 < mods.size(); k += 2) EXPECT_TRUE(are_isomorphic(mods[k], mods[k + 1]));
}

TEST(Registry, Examples) {
  Loop l;
  IsoClassRegistry reg(l.a);
  const std::size_t s = reg.insert(l.s);
  EXPECT_EQ(reg.insert(l.s), s);
  const std::size_t p = reg.insert(l.p);
  EXPECT_NE(p, s);
  EXPECT_TRUE(reg.entry(p).projective);
  EXPECT_FALSE(reg.entry(s).projective);

  EXPECT_TRUE(reg.class_vector(l.p).empty());
  EXPECT_EQ(reg.class_vector(direct_sum(l.s, l.s)), (ClassVector{{s, 2}}));
  EXPECT_EQ(reg.class_vector(direct_sum(l.p, l.s)), (ClassVector{{s, 1}}));
  EXPECT_EQ(reg.omega(s), (ClassVector{{s, 1}}));
}

TEST(Registry, NakayamaIndecomposablesAreDistinct) {
  Workspace ws = load_data("example1.fdq");
  const Algebra& a = ws.algebra("A").algebra;
  IsoClassRegistry reg(a);
  std::set<std::size_t> ids;
  const NakayamaData nd = *nakayama_data(a);
  for (const Module& m : nd.indecomposables) ids.insert(reg.insert(m));
  EXPECT_EQ(ids.size(), 20u);
  std::size_t projective = 0;
  for (const auto& e : reg.entries()) projective += e.projective;
  EXPECT_EQ(projective, 6u);
}

TEST(Registry, KrullSchmidtDeterminismAcrossSeeds) {
  Workspace ws = load_data("example1.fdq");
  for (const char* name : {"A", "C"}) {
    const Algebra& a = ws.algebra(name).algebra;
    IsoClassRegistry reg(a);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
      const Module m = direct_sum(random_module(a, 4, rng), random_module(a, 4, rng));
      const auto base = multiset(reg.full_vector(m, 0));
      for (std::uint64_t seed = 1; seed < 5; ++seed) EXPECT_EQ(multiset(reg.full_vector(m, seed)), base);
      const Decomposition d = decompose(m, 7);
      std::vector<Module> parts;
      for (const auto& s : d.summands) parts.push_back(s.module);
      EXPECT_TRUE(are_isomorphic(direct_sum(parts, a).module, m));
    }
  }
}

TEST(Registry, RejectsForeignModules) {
  Loop l;
  Workspace ws = load_data("a2.fdq");
  IsoClassRegistry reg(l.a);
  EXPECT_EQ(error_kind_of([&] { reg.insert(ws.module("S1").module); }), ErrorKind::AlgebraMismatch);
}
