// SPDX-License-Identifier: Apache-2.0
//
// Finite-dimensional left modules over an Algebra.
//
// A module stores one matrix per algebra basis element: b.x = x * act(b) for row vectors x.
// Hence act(b c) = act(c) * act(b), and a map F : M -> N is A-linear iff act_M(b) F = F act_N(b).
#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "fdim/algebra.hpp"

namespace fdalg {

struct ProjectiveCover;  // defined in projective.hpp, cached per module

class Module {
 public:
  Module() = default;

  /// Builds and verifies a module. The check act(g b) = act(b) act(g) runs over algebra generators g and all
  /// basis elements b, which implies the full associativity condition.
  static Module create(const Algebra& a, std::size_t dim, std::vector<Matrix> act) {
    Module m = unchecked(a, dim, std::move(act));
    m.verify();
    return m;
  }
  /// Builds without the associativity check; used by constructions whose output is a module by design.
  static Module unchecked(const Algebra& a, std::size_t dim, std::vector<Matrix> act) {
    require(act.size() == a.dim(), ErrorKind::InvalidArgument, "module needs one action matrix per basis element");
    for (const auto& m : act)
      require(m.rows() == dim && m.cols() == dim, ErrorKind::InvalidArgument, "action matrix has wrong shape");
    auto d = std::make_shared<Data>();
    d->algebra = a;
    d->dim = dim;
    d->act = std::move(act);
    return Module(std::move(d));
  }
  static Module zero(const Algebra& a) { return unchecked(a, 0, std::vector<Matrix>(a.dim(), Matrix(a.field(), 0, 0))); }
  static Module regular(const Algebra& a) {
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < a.dim(); ++i) act.push_back(a.left_basis(i));
    return unchecked(a, a.dim(), std::move(act));
  }

  const Algebra& algebra() const { return d_->algebra; }
  const PrimeField& field() const { return d_->algebra.field(); }
  std::size_t dim() const { return d_->dim; }
  bool is_zero() const { return dim() == 0; }
  const Matrix& act(std::size_t i) const { return d_->act[i]; }
  const std::vector<Matrix>& acts() const { return d_->act; }
  bool same_object(const Module& o) const { return d_ == o.d_; }

  /// Matrix of x -> a.x for an algebra element a.
  Matrix action(std::span<const Scalar> a) const {
    Matrix m(field(), dim(), dim());
    for (std::size_t i = 0; i < a.size(); ++i) m.add_scaled(d_->act[i], a[i]);
    return m;
  }
  /// a.x
  Vec apply(std::span<const Scalar> a, std::span<const Scalar> x) const {
    const PrimeField& f = field();
    Vec out(dim(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      const Vec y = d_->act[i].apply(x);
      for (std::size_t k = 0; k < dim(); ++k) out[k] = f.add(out[k], f.mul(a[i], y[k]));
    }
    return out;
  }
  /// Rows x.act(b_i) for every basis element b_i: the span of A.x.
  Matrix orbit(std::span<const Scalar> x) const {
    Matrix out(field(), algebra().dim(), dim());
    for (std::size_t i = 0; i < algebra().dim(); ++i) out.set_row(i, d_->act[i].apply(x));
    return out;
  }

  /// Checks the unit law and act(g b) = act(b) act(g) for algebra generators g and all basis elements b.
  void verify() const {
    const Algebra& a = algebra();
    require(action(a.unit()).is_identity(), ErrorKind::InvariantViolation, "unit does not act as the identity");
    for (const Vec& g : algebra_generators(a)) {
      const Matrix ag = action(g);
      const Matrix gl = a.left_mult(g);
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (action(gl.row_span(j)) != d_->act[j] * ag)
          fail(ErrorKind::InvariantViolation, "action is not multiplicative at (" + a.format(g) + ", " + a.labels()[j] + ")");
    }
  }
  /// Exhaustive check over all basis pairs.
  bool satisfies_axioms() const {
    const Algebra& a = algebra();
    if (!action(a.unit()).is_identity()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (action(a.basis_product(i, j)) != d_->act[j] * d_->act[i]) return false;
    return true;
  }

 private:
  struct Data {
    Algebra algebra;
    std::size_t dim = 0;
    std::vector<Matrix> act;
    mutable std::mutex mu;
    mutable std::shared_ptr<const ProjectiveCover> cover;
  };
  friend std::shared_ptr<const ProjectiveCover>& cover_slot(const Module& m, std::unique_lock<std::mutex>& lk) {
    lk = std::unique_lock(m.d_->mu);
    return m.d_->cover;
  }
  explicit Module(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

inline void require_same_algebra(const Module& m, const Module& n) {
  require(m.algebra() == n.algebra(), ErrorKind::AlgebraMismatch, "modules over different algebras");
}

/// An A-linear map x -> x * matrix.
struct ModuleMap {
  Module source;
  Module target;
  Matrix matrix;

  bool is_homomorphism() const {
    if (!(source.algebra() == target.algebra())) return false;
    if (matrix.rows() != source.dim() || matrix.cols() != target.dim()) return false;
    for (std::size_t i = 0; i < source.algebra().dim(); ++i)
      if (source.act(i) * matrix != matrix * target.act(i)) return false;
    return true;
  }
  bool is_injective() const { return matrix.rank() == source.dim(); }
  bool is_surjective() const { return matrix.rank() == target.dim(); }
  ModuleMap then(const ModuleMap& g) const { return {source, g.target, matrix * g.matrix}; }
  static ModuleMap identity(const Module& m) { return {m, m, Matrix::identity(m.field(), m.dim())}; }
  static ModuleMap zero(const Module& m, const Module& n) { return {m, n, Matrix(m.field(), m.dim(), n.dim())}; }
};

/// S is stable under the action of every algebra generator.
inline bool is_submodule(const Module& m, const Subspace& s) {
  require(s.ambient_dim() == m.dim(), ErrorKind::AmbientMismatch, "subspace not inside module");
  for (const Vec& g : algebra_generators(m.algebra())) {
    const Matrix ag = m.action(g);
    for (std::size_t r = 0; r < s.dim(); ++r)
      if (!s.contains(ag.apply(s.basis().row_span(r)))) return false;
  }
  return true;
}

struct Submodule {
  Module module;
  Matrix inclusion;  // dim(sub) x dim(M): rows are the subspace basis
};

/// The submodule on a stable subspace, in the coordinates of the subspace's echelon basis.
inline Submodule submodule(const Module& m, const Subspace& s) {
  require(is_submodule(m, s), ErrorKind::InvariantViolation, "subspace is not a submodule");
  const std::size_t k = s.dim();
  std::vector<Matrix> act;
  act.reserve(m.algebra().dim());
  const Matrix& b = s.basis();
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    const Matrix img = b * m.act(i);
    Matrix a(m.field(), k, k);
    for (std::size_t r = 0; r < k; ++r) a.set_row(r, s.coordinates(img.row_span(r)));
    act.push_back(std::move(a));
  }
  return {Module::unchecked(m.algebra(), k, std::move(act)), b};
}

struct QuotientModule {
  Module module;
  Matrix projection;  // dim(M) x dim(M/S)
};

/// M / S with basis the standard vectors outside the pivot columns of S.
inline QuotientModule quotient_module(const Module& m, const Subspace& s) {
  require(is_submodule(m, s), ErrorKind::InvariantViolation, "quotient by a non-submodule");
  const auto keep = s.complement_coords();
  const std::size_t q = keep.size();
  auto project = [&](std::span<const Scalar> v) {
    Vec r = s.reduce(v), out(q);
    for (std::size_t k = 0; k < q; ++k) out[k] = r[keep[k]];
    return out;
  };
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    Matrix a(m.field(), q, q);
    for (std::size_t r = 0; r < q; ++r) a.set_row(r, project(m.act(i).row_span(keep[r])));
    act.push_back(std::move(a));
  }
  Matrix proj(m.field(), m.dim(), q);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Vec e(m.dim(), 0);
    e[j] = 1;
    proj.set_row(j, project(e));
  }
  return {Module::unchecked(m.algebra(), q, std::move(act)), proj};
}

struct DirectSum {
  Module module;
  std::vector<Matrix> injections;   // summand -> sum
  std::vector<Matrix> projections;  // sum -> summand
};

inline DirectSum direct_sum(const std::vector<Module>& parts, const Algebra& a) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    require(p.algebra() == a, ErrorKind::AlgebraMismatch, "direct sum of modules over different algebras");
    total += p.dim();
  }
  const PrimeField& f = a.field();
  std::vector<Matrix> act(a.dim(), Matrix(f, total, total));
  DirectSum out;
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t r = 0; r < p.dim(); ++r)
        for (std::size_t c = 0; c < p.dim(); ++c) act[i](off + r, off + c) = p.act(i)(r, c);
    Matrix inj(f, p.dim(), total), proj(f, total, p.dim());
    for (std::size_t r = 0; r < p.dim(); ++r) inj(r, off + r) = proj(off + r, r) = 1;
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
    off += p.dim();
  }
  out.module = Module::unchecked(a, total, std::move(act));
  return out;
}
inline Module direct_sum(const Module& x, const Module& y) {
  require_same_algebra(x, y);
  return direct_sum({x, y}, x.algebra()).module;
}
inline Module power(const Module& m, std::size_t k) { return direct_sum(std::vector<Module>(k, m), m.algebra()).module; }

inline Submodule kernel_module(const ModuleMap& f) { return submodule(f.source, f.matrix.kernel()); }
inline Submodule image_module(const ModuleMap& f) { return submodule(f.target, f.matrix.row_space()); }

/// I.M for a subspace I of the algebra: the span of x.act(r) over basis vectors x and r in I.
inline Subspace ideal_times_module(const Module& m, const Subspace& ideal) {
  require(ideal.ambient_dim() == m.algebra().dim(), ErrorKind::AmbientMismatch, "ideal not in the module's algebra");
  SubspaceBuilder b(m.field(), m.dim());
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    const Matrix ar = m.action(ideal.basis().row_span(r));
    for (std::size_t k = 0; k < m.dim(); ++k) b.insert(ar.row_span(k));
    if (b.dim() == m.dim()) break;
  }
  return b.build();
}
/// I.S for a subspace S of M.
inline Subspace ideal_times_subspace(const Module& m, const Subspace& ideal, const Subspace& s) {
  SubspaceBuilder b(m.field(), m.dim());
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    const Matrix ar = m.action(ideal.basis().row_span(r));
    for (std::size_t k = 0; k < s.dim(); ++k) b.insert(ar.apply(s.basis().row_span(k)));
  }
  return b.build();
}

inline Subspace radical_of_module(const Module& m) { return ideal_times_module(m, radical(m.algebra()).space()); }
inline QuotientModule top(const Module& m) { return quotient_module(m, radical_of_module(m)); }

/// Dimensions of rad^k M / rad^{k+1} M until zero.
inline std::vector<std::size_t> radical_layers(const Module& m) {
  std::vector<std::size_t> out;
  const Subspace rad = radical(m.algebra()).space();
  Subspace cur = Subspace::full(m.field(), m.dim());
  while (!cur.is_zero()) {
    Subspace next = ideal_times_subspace(m, rad, cur);
    out.push_back(cur.dim() - next.dim());
    require(next.dim() < cur.dim(), ErrorKind::InvariantViolation, "radical series does not descend");
    cur = std::move(next);
  }
  return out;
}

/// Restriction along f : B -> A; the underlying space is unchanged.
inline Module restrict_along(const AlgebraMorphism& f, const Module& m) {
  require(f.target == m.algebra(), ErrorKind::AlgebraMismatch, "restriction along a morphism into another algebra");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < f.source.dim(); ++i) act.push_back(m.action(f.matrix.row_span(i)));
  return Module::unchecked(f.source, m.dim(), std::move(act));
}

struct ShortExactSequence {
  ModuleMap i;  // X -> Y
  ModuleMap q;  // Y -> Z

  const Module& left() const { return i.source; }
  const Module& middle() const { return i.target; }
  const Module& right() const { return q.target; }

  /// i injective, q surjective, im i = ker q, both maps A-linear.
  bool is_exact() const {
    if (i.target.dim() != q.source.dim()) return false;
    if (!i.is_homomorphism() || !q.is_homomorphism()) return false;
    if (!i.is_injective() || !q.is_surjective()) return false;
    if (!(i.matrix * q.matrix).is_zero()) return false;
    return i.matrix.rank() + q.matrix.rank() == middle().dim();
  }
  void verify() const { require(is_exact(), ErrorKind::NotExact, "sequence is not short exact"); }
};

/// A.x_1 + ... + A.x_k
inline Subspace submodule_generated(const Module& m, const std::vector<Vec>& xs) {
  SubspaceBuilder b(m.field(), m.dim());
  for (const Vec& x : xs) {
    const Matrix o = m.orbit(x);
    for (std::size_t r = 0; r < o.rows(); ++r) b.insert(o.row_span(r));
  }
  return b.build();
}

/// 0 -> S -> M -> M/S -> 0
inline ShortExactSequence ses_from_submodule(const Module& m, const Subspace& s) {
  Submodule sub = submodule(m, s);
  QuotientModule quo = quotient_module(m, s);
  return {{sub.module, m, sub.inclusion}, {m, quo.module, quo.projection}};
}

/// Module determined by the action matrices of finitely many elements that generate the algebra together with
/// the identity. Products are closed under act(xy) = act(y) act(x) until they span the algebra; the result is
/// verified against the structure constants.
inline Module module_from_actions(const Algebra& a, std::size_t dim, const std::vector<std::pair<Vec, Matrix>>& given) {
  const PrimeField& f = a.field();
  std::vector<Vec> elems;
  std::vector<Matrix> mats;
  SubspaceBuilder span(f, a.dim());
  auto push = [&](const Vec& x, const Matrix& m) {
    if (span.insert(x)) {
      elems.push_back(x);
      mats.push_back(m);
    }
  };
  push(a.unit(), Matrix::identity(f, dim));
  for (const auto& [x, m] : given) {
    require(x.size() == a.dim(), ErrorKind::AmbientMismatch, "acting element has wrong length");
    require(m.rows() == dim && m.cols() == dim, ErrorKind::InvalidArgument,
            "action matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
    push(x, m);
  }
  const std::size_t ngen = elems.size();
  for (std::size_t k = 0; k < elems.size() && span.dim() < a.dim(); ++k)
    for (std::size_t g = 0; g < ngen; ++g) {
      const Vec x = a.multiply(elems[g], elems[k]);
      const Matrix m = mats[k] * mats[g];
      push(x, m);
    }
  require(span.dim() == a.dim(), ErrorKind::InvalidArgument,
          "the given actions generate a subalgebra of dimension " + std::to_string(span.dim()) + " < " +
              std::to_string(a.dim()));
  auto coords = solve_rows(Matrix::from_rows(f, a.dim(), elems), Matrix::identity(f, a.dim()));
  std::vector<Matrix> act;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Matrix m(f, dim, dim);
    for (std::size_t k = 0; k < elems.size(); ++k) m.add_scaled(mats[k], (*coords)(j, k));
    act.push_back(std::move(m));
  }
  Module out = Module::unchecked(a, dim, std::move(act));
  if (!out.satisfies_axioms()) fail(ErrorKind::InvalidArgument, "action matrices violate the algebra relations");
  return out;
}

}  // namespace fdalg
