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

Algebra algebra_of(const std::string& text) { return load_workspace(text).algebras().front().algebra; }

struct Loop {
  Workspace ws = load_data("loop.fdq");
  const Algebra& a = ws.algebra("L").algebra;
  const Module& s = ws.module("S").module;
  const Module& p = ws.module("P").module;
};

struct A2 {
  Workspace ws = load_data("a2.fdq");
  const Algebra& a = ws.algebra("A2").algebra;
  // left modules with paths composed left to right: S1 is projective, S2 is not
  const Module& s1 = ws.module("S1").module;
  const Module& s2 = ws.module("S2").module;
  const Module& p2 = ws.module("P2").module;
};

Module element_module(const Module& m, const Vec& v) { return submodule(m, submodule_generated(m, {v})).module; }

}  // namespace

TEST(Hom, SchurAndProjectiveTops) {
  A2 t;
  EXPECT_EQ(hom_dim(t.s1, t.s1), 1u);
  EXPECT_EQ(hom_dim(t.s2, t.s2), 1u);
  EXPECT_EQ(hom_dim(t.s1, t.s2), 0u);
  EXPECT_EQ(hom_dim(t.s2, t.s1), 0u);
  // P2 has top S2 and socle S1
  EXPECT_EQ(hom_dim(t.p2, t.s2), 1u);
  EXPECT_EQ(hom_dim(t.p2, t.s1), 0u);
  EXPECT_EQ(hom_dim(t.s1, t.p2), 1u);
  for (const Matrix& h : hom_space(t.p2, t.s2)) EXPECT_TRUE((ModuleMap{t.p2, t.s2, h}.is_homomorphism()));
}

TEST(Hom, AlgebraMismatch) {
  Loop l;
  A2 t;
  EXPECT_EQ(error_kind_of([&] { hom_space(l.s, t.s1); }), ErrorKind::AlgebraMismatch);
}

TEST(Hom, AgreesWithBruteForceSolve) {
  // independent oracle: solve act_M(b) F = F act_N(b) for all basis b as one linear system
  Workspace ws = load_data("example1.fdq");
  const Algebra& a = ws.algebra("A").algebra;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    const Module m = random_module(a, 5, rng), n = random_module(a, 5, rng);
    const std::size_t dm = m.dim(), dn = n.dim();
    Matrix sys(a.field(), dm * dn, a.dim() * dm * dn);
    for (std::size_t u = 0; u < dm * dn; ++u) {
      Matrix e(a.field(), dm, dn);
      e(u / dn, u % dn) = 1;
      for (std::size_t b = 0; b < a.dim(); ++b) {
        const Matrix d = m.act(b) * e - e * n.act(b);
        for (std::size_t k = 0; k < dm * dn; ++k) sys(u, b * dm * dn + k) = d.data()[k];
      }
    }
    EXPECT_EQ(hom_dim(m, n), sys.kernel().dim()) << trial;
  }
}

TEST(Projectives, SemisimpleLoopAndLinear) {
  const ProjectiveData& ss = projective_data(algebra_of("algebra K2\nvertex 1 2\n"));
  EXPECT_EQ(ss.classes(), 2u);
  for (const auto& p : ss.projectives) EXPECT_EQ(p.dim(), 1u);
  for (const auto& s : ss.simples) EXPECT_EQ(s.dim(), 1u);

  Loop l;
  const ProjectiveData& pl = projective_data(l.a);
  ASSERT_EQ(pl.classes(), 1u);
  EXPECT_EQ(pl.projectives[0].dim(), 2u);
  EXPECT_EQ(pl.simples[0].dim(), 1u);

  Workspace ws = load_data("example1.fdq");
  const ProjectiveData& pa = projective_data(ws.algebra("A").algebra);
  std::vector<std::size_t> dims;
  for (const auto& p : pa.projectives) dims.push_back(p.dim());
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 2, 3, 4, 5, 5}));
  for (const auto& p : pa.projectives) EXPECT_EQ(radical_layers(p), std::vector<std::size_t>(p.dim(), 1));
}

TEST(Projectives, NonSplitTopIsUnsupported) {
  // GF(7)[x]/(x^2+1) is a field of dimension 2 over GF(7)
  const PrimeField f(7);
  std::vector<Vec> table{{1, 0}, {0, 1}, {0, 1}, {6, 0}};
  const Algebra a = Algebra::create(f, {"1", "x"}, table, {1, 0});
  EXPECT_EQ(error_kind_of([&] { projective_data(a); }), ErrorKind::UnsupportedField);
}

TEST(Cover, Examples) {
  Loop l;
  const ProjectiveCover& cp = projective_cover(l.p);
  EXPECT_EQ(cp.projective.dim(), 2u);
  EXPECT_TRUE(cp.map.kernel().is_zero());
  const ProjectiveCover& cs = projective_cover(l.s);
  EXPECT_EQ(cs.projective.dim(), 2u);
  EXPECT_EQ(cs.map.kernel().dim(), 1u);
  const ProjectiveCover& cz = projective_cover(Module::zero(l.a));
  EXPECT_EQ(cz.projective.dim(), 0u);
  EXPECT_TRUE((ModuleMap{cs.projective, l.s, cs.map}.is_homomorphism()));
}

TEST(Syzygy, LoopAndA2) {
  Loop l;
  EXPECT_TRUE(syzygy(l.p).module.is_zero());
  IsoClassRegistry rl(l.a);
  const SyzygyChain cl = syzygy_chain(l.s, rl);
  EXPECT_EQ(cl.status, ChainStatus::Periodic);
  EXPECT_EQ(cl.period_from, 0u);
  EXPECT_EQ(cl.period_to, 1u);

  A2 t;
  IsoClassRegistry ra(t.a);
  const SyzygyChain ca = syzygy_chain(t.s2, ra);
  EXPECT_EQ(ca.status, ChainStatus::Terminated);
  EXPECT_EQ(ca.terminated_at, 1u);
  EXPECT_TRUE(is_projective(syzygy(t.s2).module));
  EXPECT_TRUE(isomorphic_indecomposables(syzygy(t.s2).module, t.s1));
}

TEST(ProjDim, Examples) {
  Loop l;
  EXPECT_EQ(proj_dim(l.p).kind, PdKind::Finite);
  EXPECT_EQ(proj_dim(l.p).value, 0u);
  const PdVerdict vs = proj_dim(l.s);
  EXPECT_EQ(vs.kind, PdKind::InfinitePeriodic);
  EXPECT_EQ(vs.cycle.size(), 1u);
  EXPECT_EQ(vs.describe(), "infinite-periodic");

  A2 t;
  EXPECT_EQ(proj_dim(t.s2).value, 1u);
  EXPECT_EQ(proj_dim(t.s1).value, 0u);
  EXPECT_EQ(proj_dim(direct_sum(t.s1, t.s2)).value, 1u);
}

TEST(ProjDim, CutoffGivesUnknownNotInfinite) {
  // linear A4 (1 -> 2 -> 3 -> 4) with rad^2 = 0: the simple at 4 has pd 3
  const Algebra a = algebra_of("algebra A4\nvertex 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 3 -> 4\nnilpotency 2\n");
  const ProjectiveData& pd = projective_data(a);
  std::size_t best = 0;
  for (const Module& s : pd.simples) best = std::max(best, proj_dim(s).value);
  EXPECT_EQ(best, 3u);
  for (const Module& s : pd.simples) {
    const PdVerdict full = proj_dim(s);
    const PdVerdict cut = proj_dim(s, 1);
    if (full.value > 1) {
      EXPECT_EQ(cut.kind, PdKind::Unknown);
    } else {
      EXPECT_EQ(cut.kind, PdKind::Finite);
    }
  }
}

TEST(ProjDim, OmegaDistributesOverSums) {
  Workspace ws = load_data("example1.fdq");
  for (const char* name : {"A", "C"}) {
    const Algebra& a = ws.algebra(name).algebra;
    IsoClassRegistry reg(a);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
      const Module x = random_module(a, 6, rng), y = random_module(a, 6, rng);
      const ClassVector sum = reg.class_vector(syzygy(direct_sum(x, y)).module);
      const ClassVector parts = add_vectors(reg.class_vector(syzygy(x).module), reg.class_vector(syzygy(y).module));
      EXPECT_EQ(sum, parts) << name << " " << trial;
    }
  }
}

TEST(Torsionless, Examples) {
  Loop l;
  EXPECT_TRUE(is_torsionless(l.s));
  EXPECT_TRUE(is_torsionless(Module::zero(l.a)));
  EXPECT_TRUE(is_torsionless(l.p));
  A2 t;
  // S2 has no nonzero map into A, whose socle is S1 + S1
  EXPECT_FALSE(is_torsionless(t.s2));
  EXPECT_TRUE(is_torsionless(t.p2));
  const TorsionlessReport r = torsionless(l.s);
  ASSERT_TRUE(r.embedding.has_value());
  EXPECT_EQ(r.free_rank, 1u);
}

TEST(Torsionless, SubmodulesOfFreeModules) {
  Workspace ws = load_data("example1.fdq");
  const Algebra& c = ws.algebra("C").algebra;
  std::mt19937_64 rng(5);
  const Module free = power(Module::regular(c), 2);
  for (int trial = 0; trial < 8; ++trial) {
    const Module sub = element_module(free, random_vector(c.field(), free.dim(), rng));
    const TorsionlessReport r = torsionless(sub);
    EXPECT_TRUE(r.torsionless);
    EXPECT_EQ(r.evaluation_injective, r.embeds);
  }
}

TEST(Horseshoe, DegenerateLoopAndSplit) {
  Loop l;
  // X = 0
  const ShortExactSequence zx = ses_from_submodule(l.s, Subspace(l.a.field(), 1));
  const HorseshoeStep h0 = horseshoe(zx);
  EXPECT_TRUE(h0.ses.left().is_zero());
  EXPECT_EQ(h0.ses.middle().dim(), syzygy(l.s).module.dim());

  // 0 -> S -> P -> S -> 0
  const ShortExactSequence ps = ses_from_submodule(l.p, radical_of_module(l.p));
  const HorseshoeStep h = horseshoe(ps);
  EXPECT_TRUE(h.ses.is_exact());
  EXPECT_EQ(h.cover.dim(), 4u);
  EXPECT_EQ(h.ses.middle().dim(), 2u);
  EXPECT_TRUE(same_module(h.ses.left(), syzygy(ps.left()).module));
  EXPECT_TRUE(same_module(h.ses.right(), syzygy(ps.right()).module));

  // Z projective: the sequence splits and both sides agree up to projectives
  A2 t;
  const Module y = direct_sum(t.s2, t.p2);
  const ShortExactSequence split{{t.s2, y, Matrix::hstack(Matrix::identity(t.a.field(), 1), Matrix(t.a.field(), 1, 2))},
                                 {y, t.p2, Matrix::vstack(Matrix(t.a.field(), 1, 2), Matrix::identity(t.a.field(), 2))}};
  const HorseshoeStep hs = horseshoe(split);
  IsoClassRegistry reg(t.a);
  EXPECT_EQ(reg.class_vector(hs.ses.middle()), reg.class_vector(syzygy(t.s2).module));
}

TEST(Horseshoe, IteratedOverLinearNakayama) {
  Workspace ws = load_data("example1.fdq");
  const Algebra& a = ws.algebra("A").algebra;
  std::mt19937_64 rng(8);
  IsoClassRegistry reg(a);
  for (int trial = 0; trial < 4; ++trial) {
    const Module y = random_module(a, 7, rng);
    const Subspace s = submodule_generated(y, {random_vector(a.field(), y.dim(), rng)});
    const auto steps = iterated_horseshoe(ses_from_submodule(y, s), 3);
    ASSERT_EQ(steps.size(), 3u);
    // K_n = Omega^n(Y) + projective
    EXPECT_EQ(reg.class_vector(steps.back().ses.middle()), reg.class_vector(syzygy_module(y, 3)));
  }
}

TEST(Schanuel, OrdinaryResolutions) {
  Loop l;
  const Resolution r = minimal_resolution(l.s, 2);
  EXPECT_TRUE(r.is_exact());
  EXPECT_TRUE(schanuel_check(r, r));
  const Module p = projective_data(l.a).projectives[0];
  for (std::size_t step = 0; step < 2; ++step) {
    const Resolution padded = build_resolution(l.s, 2, minimal_cover_step, std::pair<std::size_t, Module>{step, p});
    EXPECT_TRUE(padded.is_exact());
    EXPECT_TRUE(schanuel_check(r, padded)) << step;
  }
  EXPECT_EQ(error_kind_of([&] { schanuel_check(r, minimal_resolution(l.s, 3)); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(error_kind_of([&] { schanuel_check(r, minimal_resolution(l.p, 2)); }), ErrorKind::NotAResolution);
}

TEST(Schanuel, SplittingsSatisfyTheExactnessIdentity) {
  Workspace ws = load_data("example1.fdq");
  const Module s = projective_data(ws.algebra("A").algebra).simples[0];
  const Resolution r = minimal_resolution(s, 3);
  ASSERT_EQ(r.splittings.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    const Matrix& t = r.differentials[i];
    EXPECT_EQ(t * r.splittings[i] * t, t) << i;
  }
}

TEST(Nakayama, Examples) {
  Loop l;
  auto nl = nakayama_data(l.a);
  ASSERT_TRUE(nl.has_value());
  EXPECT_EQ(nl->indecomposables.size(), 2u);

  Workspace ws = load_data("example1.fdq");
  auto na = nakayama_data(ws.algebra("A").algebra);
  ASSERT_TRUE(na.has_value());
  EXPECT_EQ(na->indecomposables.size(), 20u);

  EXPECT_FALSE(nakayama_data(load_data("kronecker.fdq").algebra("K").algebra).has_value());
}

TEST(Nakayama, EnumerationIsComplete) {
  // every small random module splits into enumerated indecomposables
  Workspace ws = load_data("example1.fdq");
  Loop l;
  for (const Algebra* a : {&l.a, &ws.algebra("A").algebra}) {
    const NakayamaData nd = *nakayama_data(*a);
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
      const Module m = random_module(*a, 3, rng);
      for (const Summand& s : decompose(m).summands) {
        bool found = false;
        for (const Module& ind : nd.indecomposables) found = found || (ind.dim() == s.module.dim() && isomorphic_indecomposables(ind, s.module));
        EXPECT_TRUE(found) << trial;
      }
    }
  }
}

TEST(ModuleOps, Examples) {
  Loop l;
  EXPECT_EQ(radical_of_module(l.p).dim(), 1u);
  const ProjectiveData& pd = projective_data(l.a);
  EXPECT_TRUE(isomorphic_indecomposables(top(pd.projectives[0]).module, pd.simples[0]));
  const Module r = restrict_along(AlgebraMorphism::identity(l.a), l.s);
  EXPECT_TRUE(same_module(r, l.s));
}
