// SPDX-License-Identifier: Apache-2.0
//
// Simples, indecomposable projectives, projective covers, syzygies and Hom spaces.
//
// Indecomposable projectives are the left ideals A.e for one primitive idempotent e per isomorphism class;
// Ae = Af iff eAf is not inside rad(A). A cover of M sends a.e_k to a.m_k, where the m_k lift a basis of
// e.top(M). Hom(M, N) is solved on the images of these generators.
#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fdim/module.hpp"

namespace fdalg {

struct ProjectiveData {
  std::vector<Vec> idempotents;          // complete set of orthogonal primitive idempotents
  std::vector<std::size_t> class_of;     // idempotent -> class
  std::vector<Vec> representatives;      // one idempotent per class
  std::vector<Matrix> projective_basis;  // rows: basis of A.e_j in algebra coordinates
  std::vector<Module> projectives;       // A.e_j as submodules of the regular module
  std::vector<Module> simples;           // top of A.e_j

  std::size_t classes() const { return representatives.size(); }
};

namespace detail {

inline Subspace left_ideal_of_idempotent(const Algebra& a, const Vec& e) {
  // A.e = image of y -> y*e
  return Subspace::span(a.right_mult(e));
}

inline bool same_projective_class(const Algebra& a, const Subspace& rad, const Vec& e, const Vec& f) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!rad.contains(a.multiply(a.multiply(e, a.basis_element(i)), f))) return true;
  return false;
}

inline std::shared_ptr<const ProjectiveData> build_projective_data(const Algebra& a) {
  auto pd = std::make_shared<ProjectiveData>();
  pd->idempotents = primitive_idempotents(a);
  const Subspace rad = radical(a).space();
  const Module reg = Module::regular(a);
  for (const Vec& e : pd->idempotents) {
    std::optional<std::size_t> cls;
    for (std::size_t j = 0; j < pd->representatives.size() && !cls; ++j)
      if (same_projective_class(a, rad, pd->representatives[j], e)) cls = j;
    if (cls) {
      pd->class_of.push_back(*cls);
      continue;
    }
    // split check: the corner e A e has a one-dimensional top
    const Matrix L = a.left_mult(e), R = a.right_mult(e);
    SubspaceBuilder corner(a.field(), a.dim()), corner_rad(a.field(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) corner.insert(R.apply(L.apply(a.basis_element(j))));
    for (std::size_t r = 0; r < rad.dim(); ++r) corner_rad.insert(R.apply(L.apply(rad.basis().row_span(r))));
    const std::size_t top_dim = corner.dim() - corner_rad.dim();
    require(top_dim == 1, ErrorKind::UnsupportedField,
            "semisimple quotient does not split over GF(" + std::to_string(a.field().p()) +
                "): a simple module has endomorphism ring of dimension " + std::to_string(top_dim));
    pd->class_of.push_back(pd->representatives.size());
    pd->representatives.push_back(e);
    const Subspace ae = left_ideal_of_idempotent(a, e);
    pd->projective_basis.push_back(ae.basis());
    Submodule p = submodule(reg, ae);
    pd->projectives.push_back(p.module);
    pd->simples.push_back(top(p.module).module);
  }
  return pd;
}

}  // namespace detail

/// Simples and indecomposable projectives of a (cached per algebra). Throws UnsupportedField when a/rad(a)
/// is not a product of matrix algebras over GF(p).
inline const ProjectiveData& projective_data(const Algebra& a) {
  auto& c = a.cache();
  {
    std::lock_guard lk(c.mu);
    if (c.projective) return *c.projective;
  }
  auto pd = detail::build_projective_data(a);
  std::lock_guard lk(c.mu);
  if (!c.projective) c.projective = std::move(pd);
  return *c.projective;
}

struct ProjectiveCover {
  Module projective;                    // P(M) = sum of A.e_{j_k}
  Matrix map;                           // dim P x dim M
  std::vector<std::size_t> components;  // class j_k of each summand, in order
  std::vector<Vec> generators;          // m_k in e_{j_k} M
  std::vector<std::size_t> offsets;     // start row of each summand in P
  Matrix section;                       // dim M x dim P with section * map = identity
  Matrix free_embedding;                // dim P x (#summands * dim A): P inside A^r

  std::vector<std::size_t> multiplicities(std::size_t classes) const {
    std::vector<std::size_t> m(classes, 0);
    for (auto j : components) ++m[j];
    return m;
  }
};

namespace detail {

inline std::shared_ptr<const ProjectiveCover> build_cover(const Module& m) {
  const Algebra& a = m.algebra();
  const PrimeField& f = a.field();
  const ProjectiveData& pd = projective_data(a);
  auto c = std::make_shared<ProjectiveCover>();
  const Subspace radm = radical_of_module(m);
  for (std::size_t j = 0; j < pd.classes(); ++j) {
    const Matrix ej = m.action(pd.representatives[j]);
    SubspaceBuilder b(f, m.dim());
    for (std::size_t r = 0; r < radm.dim(); ++r) b.insert(ej.apply(radm.basis().row_span(r)));
    const Subspace ejm = Subspace::span(ej);
    for (std::size_t r = 0; r < ejm.dim(); ++r) {
      const Vec v = ejm.basis().row(r);
      if (b.insert(v)) {
        c->components.push_back(j);
        c->generators.push_back(v);
      }
    }
  }
  std::vector<Module> parts;
  std::size_t total = 0;
  for (auto j : c->components) {
    parts.push_back(pd.projectives[j]);
    c->offsets.push_back(total);
    total += pd.projectives[j].dim();
  }
  c->projective = direct_sum(parts, a).module;
  c->map = Matrix(f, total, m.dim());
  c->free_embedding = Matrix(f, total, c->components.size() * a.dim());
  for (std::size_t k = 0; k < c->components.size(); ++k) {
    const Matrix& basis = pd.projective_basis[c->components[k]];
    const Matrix img = basis * m.orbit(c->generators[k]);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      c->map.set_row(c->offsets[k] + r, img.row_span(r));
      for (std::size_t col = 0; col < a.dim(); ++col) c->free_embedding(c->offsets[k] + r, k * a.dim() + col) = basis(r, col);
    }
  }
  auto sec = solve_rows(c->map, Matrix::identity(f, m.dim()));
  require(sec.has_value(), ErrorKind::InvariantViolation, "projective cover is not surjective");
  c->section = std::move(*sec);
  return c;
}

}  // namespace detail

/// Minimal projective cover (cached per module object). Minimality, ker ⊆ rad.P, is asserted.
inline const ProjectiveCover& projective_cover(const Module& m) {
  {
    std::unique_lock<std::mutex> lk;
    auto& slot = cover_slot(m, lk);
    if (slot) return *slot;
  }
  auto c = detail::build_cover(m);
  const Subspace ker = c->map.kernel();
  require(radical_of_module(c->projective).contains(ker), ErrorKind::InvariantViolation,
          "projective cover kernel is not inside rad P");
  std::unique_lock<std::mutex> lk;
  auto& slot = cover_slot(m, lk);
  if (!slot) slot = std::move(c);
  return *slot;
}

struct Syzygy {
  Module module;
  Matrix inclusion;  // dim(Omega) x dim(P)
  const ProjectiveCover* cover = nullptr;
};

/// Omega(M) = ker(P(M) -> M) with the action inherited from P(M).
inline Syzygy syzygy(const Module& m) {
  const ProjectiveCover& c = projective_cover(m);
  Submodule k = submodule(c.projective, c.map.kernel());
  return {k.module, k.inclusion, &c};
}

inline Module syzygy_module(const Module& m, unsigned times = 1) {
  Module cur = m;
  for (unsigned i = 0; i < times; ++i) cur = syzygy(cur).module;
  return cur;
}

/// An indecomposable module is projective iff its cover is an isomorphism; for any module, iff Omega = 0.
inline bool is_projective(const Module& m) { return projective_cover(m).projective.dim() == m.dim(); }

/// Basis of Hom_A(M, N): images n_k in e_{j_k} N of the cover generators, constrained by Omega(M).
inline std::vector<Matrix> hom_space(const Module& m, const Module& n) {
  require_same_algebra(m, n);
  const PrimeField& f = m.field();
  if (m.dim() == 0 || n.dim() == 0) return {};
  const Algebra& a = m.algebra();
  const ProjectiveData& pd = projective_data(a);
  const ProjectiveCover& c = projective_cover(m);
  const Subspace ker = c.map.kernel();
  const std::size_t dp = c.projective.dim(), dn = n.dim(), dk = ker.dim();

  struct Unknown {
    std::size_t summand;
    Matrix block;  // dim(A e_j) x dim N: rows a.w for the basis a of A e_j
  };
  std::vector<Unknown> unknowns;
  for (std::size_t k = 0; k < c.components.size(); ++k) {
    const std::size_t j = c.components[k];
    const Subspace ejn = Subspace::span(n.action(pd.representatives[j]));
    for (std::size_t t = 0; t < ejn.dim(); ++t)
      unknowns.push_back({k, pd.projective_basis[j] * n.orbit(ejn.basis().row_span(t))});
  }
  if (unknowns.empty()) return {};

  Matrix constraints(f, unknowns.size(), dk * dn);
  if (dk) {
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const Unknown& un = unknowns[u];
      const std::size_t off = c.offsets[un.summand];
      const Matrix kblock = ker.basis().submatrix(0, off, dk, un.block.rows());
      const Matrix prod = kblock * un.block;
      std::copy(prod.data().begin(), prod.data().end(), constraints.row_ptr(u));
    }
  }
  const Subspace sol = constraints.kernel();
  std::vector<Matrix> out;
  out.reserve(sol.dim());
  for (std::size_t s = 0; s < sol.dim(); ++s) {
    Matrix phi(f, dp, dn);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const Scalar coef = sol.basis()(s, u);
      if (!coef) continue;
      const Unknown& un = unknowns[u];
      const std::size_t off = c.offsets[un.summand];
      for (std::size_t r = 0; r < un.block.rows(); ++r)
        for (std::size_t col = 0; col < dn; ++col)
          phi(off + r, col) = f.add(phi(off + r, col), f.mul(coef, un.block(r, col)));
    }
    out.push_back(c.section * phi);
  }
  return out;
}

inline std::size_t hom_dim(const Module& m, const Module& n) { return hom_space(m, n).size(); }

}  // namespace fdalg
