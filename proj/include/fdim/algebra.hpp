// SPDX-License-Identifier: Apache-2.0
//
// Finite-dimensional associative unital algebras over GF(p), given by structure constants.
//
// Multiplication convention: if the algebra comes from a quiver, a*b means "a, then b".
// Elements are coordinate row vectors in the algebra's basis.
#pragma once

#include <cmath>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fdim/matrix.hpp"
#include "fdim/poly.hpp"

namespace fdalg {

struct ProjectiveData;  // cached simples/projectives, defined in projective.hpp

namespace detail {

struct AlgebraData {
  PrimeField field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  // left[i] is the matrix of y -> b_i * y in row convention; its row j holds b_i * b_j.
  std::vector<Matrix> left;
  Vec unit;
  // Orthogonal idempotents known from the construction (vertex idempotents); verified before use.
  std::vector<Vec> idempotent_hint;

  mutable std::mutex mu;
  mutable std::optional<Subspace> radical;
  mutable std::optional<std::vector<Vec>> generators;
  mutable std::optional<std::vector<Vec>> primitive_idempotents;
  mutable std::shared_ptr<const ProjectiveData> projective;
};

}  // namespace detail

/// Immutable handle to an algebra. Copies share the same data; identity is pointer identity.
class Algebra {
 public:
  Algebra() = default;

  /// Builds from the multiplication table table[i * n + j] = b_i * b_j. Verifies associativity,
  /// the unit laws and the dim < p guard.
  static Algebra create(PrimeField f, std::vector<std::string> labels, const std::vector<Vec>& table, Vec unit,
                        std::vector<Vec> idempotent_hint = {}) {
    Algebra a = trusted(f, std::move(labels), table, std::move(unit), std::move(idempotent_hint));
    a.verify_axioms();
    return a;
  }
  /// As create, without the O(n^4) axiom check; for tables that are associative by construction
  /// (for example composition of linear maps).
  static Algebra trusted(PrimeField f, std::vector<std::string> labels, const std::vector<Vec>& table, Vec unit,
                         std::vector<Vec> idempotent_hint = {}) {
    const std::size_t n = labels.size();
    require(table.size() == n * n, ErrorKind::InvalidArgument, "structure constant table has wrong size");
    require(unit.size() == n, ErrorKind::InvalidArgument, "unit vector has wrong length");
    require(n < f.p(), ErrorKind::FieldTooSmall,
            "algebra dimension " + std::to_string(n) + " must be below the characteristic " + std::to_string(f.p()));
    auto d = std::make_shared<detail::AlgebraData>();
    d->field = f;
    d->dim = n;
    d->labels = std::move(labels);
    d->unit = std::move(unit);
    d->idempotent_hint = std::move(idempotent_hint);
    d->left.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Matrix m(f, n, n);
      for (std::size_t j = 0; j < n; ++j) {
        require(table[i * n + j].size() == n, ErrorKind::InvalidArgument, "structure constant length mismatch");
        m.set_row(j, table[i * n + j]);
      }
      d->left.push_back(std::move(m));
    }
    return Algebra(std::move(d));
  }

  explicit operator bool() const noexcept { return static_cast<bool>(d_); }
  bool operator==(const Algebra& o) const noexcept { return d_ == o.d_; }

  const PrimeField& field() const { return d_->field; }
  std::size_t dim() const { return d_->dim; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const Vec& unit() const { return d_->unit; }
  const std::vector<Vec>& idempotent_hint() const { return d_->idempotent_hint; }
  const Matrix& left_basis(std::size_t i) const { return d_->left[i]; }
  Vec basis_element(std::size_t i) const {
    Vec v(dim(), 0);
    v[i] = 1;
    return v;
  }
  Vec zero() const { return Vec(dim(), 0); }

  /// b_i * b_j
  Vec basis_product(std::size_t i, std::size_t j) const { return d_->left[i].row(j); }

  Vec multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
    const std::size_t n = dim();
    const std::uint64_t p = field().p();
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      const Matrix& L = d_->left[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (!y[j]) continue;
        const std::uint64_t c = std::uint64_t(x[i]) * y[j] % p;
        const Scalar* r = L.row_ptr(j);
        for (std::size_t k = 0; k < n; ++k)
          if (r[k]) acc[k] = (acc[k] + c * r[k]) % p;
      }
    }
    return Vec(acc.begin(), acc.end());
  }
  Vec add(std::span<const Scalar> x, std::span<const Scalar> y) const {
    Vec r(x.begin(), x.end());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field().add(r[i], y[i]);
    return r;
  }
  Vec sub(std::span<const Scalar> x, std::span<const Scalar> y) const {
    Vec r(x.begin(), x.end());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field().sub(r[i], y[i]);
    return r;
  }
  Vec scale(std::span<const Scalar> x, Scalar c) const {
    Vec r(x.begin(), x.end());
    for (auto& v : r) v = field().mul(v, c);
    return r;
  }

  /// Matrix of y -> x * y.
  Matrix left_mult(std::span<const Scalar> x) const {
    Matrix m(field(), dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) m.add_scaled(d_->left[i], x[i]);
    return m;
  }
  /// Matrix of y -> y * x.
  Matrix right_mult(std::span<const Scalar> x) const {
    Matrix m(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_row(j, multiply(basis_element(j), x));
    return m;
  }

  bool is_idempotent(std::span<const Scalar> e) const {
    return multiply(e, e) == Vec(e.begin(), e.end());
  }

  /// Label for an element as a linear combination of basis labels.
  std::string format(std::span<const Scalar> x) const {
    std::string s;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!x[i]) continue;
      const long long c = field().to_signed(x[i]);
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      const long long a = c < 0 ? -c : c;
      if (a != 1) s += std::to_string(a) + "*";
      s += labels()[i];
    }
    return s.empty() ? "0" : s;
  }

  detail::AlgebraData& cache() const { return *d_; }

 private:
  explicit Algebra(std::shared_ptr<detail::AlgebraData> d) : d_(std::move(d)) {}

  void verify_axioms() const {
    const std::size_t n = dim();
    // unit laws
    for (std::size_t j = 0; j < n; ++j) {
      const Vec bj = basis_element(j);
      require(multiply(unit(), bj) == bj && multiply(bj, unit()) == bj, ErrorKind::InvariantViolation,
              "unit is not a two-sided identity on " + labels()[j]);
    }
    // associativity on basis triples: (b_i b_j) b_k == b_i (b_j b_k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec ij = basis_product(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          const Vec lhs = multiply(ij, basis_element(k));
          const Vec rhs = multiply(basis_element(i), basis_product(j, k));
          if (lhs != rhs)
            fail(ErrorKind::InvariantViolation,
                 "associativity fails on (" + labels()[i] + "," + labels()[j] + "," + labels()[k] + ")");
        }
      }
  }

  std::shared_ptr<detail::AlgebraData> d_;
};

/// A unit-preserving algebra homomorphism given by a dim(source) x dim(target) matrix.
struct AlgebraMorphism {
  Algebra source;
  Algebra target;
  Matrix matrix;

  Vec apply(std::span<const Scalar> x) const { return matrix.apply(x); }

  static AlgebraMorphism identity(const Algebra& a) { return {a, a, Matrix::identity(a.field(), a.dim())}; }
  AlgebraMorphism then(const AlgebraMorphism& g) const {
    require(target == g.source, ErrorKind::AlgebraMismatch, "morphism composition: target/source mismatch");
    return {source, g.target, matrix * g.matrix};
  }
};

inline bool check_morphism(const AlgebraMorphism& f) {
  const Algebra &s = f.source, &t = f.target;
  if (f.matrix.rows() != s.dim() || f.matrix.cols() != t.dim()) return false;
  if (f.apply(s.unit()) != t.unit()) return false;
  std::vector<Vec> img;
  for (std::size_t i = 0; i < s.dim(); ++i) img.push_back(f.matrix.row(i));
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (f.apply(s.basis_product(i, j)) != t.multiply(img[i], img[j])) return false;
  return true;
}

enum class SubspaceKind { TwoSidedIdeal, LeftIdeal, RightIdeal, Subalgebra, PlainSubspace };

inline std::string_view to_string(SubspaceKind k) {
  switch (k) {
    case SubspaceKind::TwoSidedIdeal: return "two-sided-ideal";
    case SubspaceKind::LeftIdeal: return "left-ideal";
    case SubspaceKind::RightIdeal: return "right-ideal";
    case SubspaceKind::Subalgebra: return "subalgebra";
    case SubspaceKind::PlainSubspace: return "plain-subspace";
  }
  return "?";
}

/// bigger * sub ⊆ sub, checked on basis pairs.
inline bool is_left_closed(const Algebra& a, const Subspace& s) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Matrix& L = a.left_basis(i);
    for (std::size_t r = 0; r < s.dim(); ++r)
      if (!s.contains(L.apply(s.basis().row_span(r)))) return false;
  }
  return true;
}
inline bool is_right_closed(const Algebra& a, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vec x = s.basis().row(r);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!s.contains(a.multiply(x, a.basis_element(i)))) return false;
  }
  return true;
}
inline bool is_multiplicatively_closed(const Algebra& a, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t q = 0; q < s.dim(); ++q)
      if (!s.contains(a.multiply(s.basis().row_span(r), s.basis().row_span(q)))) return false;
  return true;
}

/// A subspace of an algebra tagged with a verified closure property.
class Ideal {
 public:
  Ideal(Algebra parent, Subspace space, SubspaceKind kind) : parent_(std::move(parent)), space_(std::move(space)), kind_(kind) {
    require(space_.ambient_dim() == parent_.dim(), ErrorKind::AmbientMismatch, "ideal space not in parent algebra");
    bool ok = true;
    switch (kind_) {
      case SubspaceKind::TwoSidedIdeal: ok = is_left_closed(parent_, space_) && is_right_closed(parent_, space_); break;
      case SubspaceKind::LeftIdeal: ok = is_left_closed(parent_, space_); break;
      case SubspaceKind::RightIdeal: ok = is_right_closed(parent_, space_); break;
      case SubspaceKind::Subalgebra: ok = is_multiplicatively_closed(parent_, space_); break;
      case SubspaceKind::PlainSubspace: break;
    }
    require(ok, ErrorKind::InvariantViolation, std::string("subspace is not a ") + std::string(to_string(kind_)));
  }

  /// Tags the subspace with the strongest closure property it satisfies.
  static Ideal classify(Algebra parent, Subspace space) {
    const bool l = is_left_closed(parent, space), r = is_right_closed(parent, space);
    SubspaceKind k = l && r ? SubspaceKind::TwoSidedIdeal
                     : l    ? SubspaceKind::LeftIdeal
                     : r    ? SubspaceKind::RightIdeal
                     : is_multiplicatively_closed(parent, space) ? SubspaceKind::Subalgebra
                                                                 : SubspaceKind::PlainSubspace;
    return Ideal(std::move(parent), std::move(space), k);
  }

  const Algebra& parent() const noexcept { return parent_; }
  const Subspace& space() const noexcept { return space_; }
  SubspaceKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  bool is_zero() const noexcept { return space_.is_zero(); }
  bool is_two_sided() const noexcept { return kind_ == SubspaceKind::TwoSidedIdeal; }
  bool is_left() const noexcept { return kind_ == SubspaceKind::TwoSidedIdeal || kind_ == SubspaceKind::LeftIdeal; }
  bool contains(const Ideal& o) const { return space_.contains(o.space_); }
  bool operator==(const Ideal& o) const { return parent_ == o.parent_ && space_ == o.space_; }

 private:
  Algebra parent_;
  Subspace space_;
  SubspaceKind kind_;
};

/// Jacobson radical via the trace form: x ∈ rad iff tr(L_x L_y) = 0 for all y. Valid since dim < p.
inline Ideal radical(const Algebra& a) {
  auto& c = a.cache();
  {
    std::lock_guard lk(c.mu);
    if (c.radical) return Ideal(a, *c.radical, SubspaceKind::TwoSidedIdeal);
  }
  require(a.dim() < a.field().p(), ErrorKind::FieldTooSmall, "trace-form radical needs dim < p");
  const std::size_t n = a.dim();
  const PrimeField& f = a.field();
  Matrix gram(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Matrix prod = a.left_basis(i) * a.left_basis(j);
      Scalar t = 0;
      for (std::size_t k = 0; k < n; ++k) t = f.add(t, prod(k, k));
      gram(i, j) = gram(j, i) = t;
    }
  Subspace rad = gram.kernel();
  std::lock_guard lk(c.mu);
  c.radical = rad;
  return Ideal(a, rad, SubspaceKind::TwoSidedIdeal);
}

namespace detail {

inline Subspace closure(const Algebra& a, const std::vector<Vec>& gens, bool left, bool right) {
  SubspaceBuilder b(a.field(), a.dim());
  std::vector<Vec> queue;
  for (const auto& g : gens) {
    require(g.size() == a.dim(), ErrorKind::AmbientMismatch, "generator not an element of the algebra");
    if (b.insert(g)) queue.push_back(g);
  }
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (left) {
        Vec w = a.left_basis(i).apply(v);
        if (b.insert(w)) queue.push_back(std::move(w));
      }
      if (right) {
        Vec w = a.multiply(v, a.basis_element(i));
        if (b.insert(w)) queue.push_back(std::move(w));
      }
    }
  }
  return b.build();
}

}  // namespace detail

inline Ideal ideal_generated(const Algebra& a, const std::vector<Vec>& gens) {
  return Ideal(a, detail::closure(a, gens, true, true), SubspaceKind::TwoSidedIdeal);
}
inline Ideal left_ideal_generated(const Algebra& a, const std::vector<Vec>& gens) {
  return Ideal(a, detail::closure(a, gens, true, false), SubspaceKind::LeftIdeal);
}
inline Ideal whole_algebra(const Algebra& a) { return Ideal(a, Subspace::full(a.field(), a.dim()), SubspaceKind::TwoSidedIdeal); }
inline Ideal zero_ideal(const Algebra& a) { return Ideal(a, Subspace(a.field(), a.dim()), SubspaceKind::TwoSidedIdeal); }

/// Span of products x*y over basis elements of i and j.
inline Subspace subspace_product(const Algebra& a, const Subspace& i, const Subspace& j) {
  SubspaceBuilder b(a.field(), a.dim());
  for (std::size_t r = 0; r < i.dim(); ++r)
    for (std::size_t q = 0; q < j.dim(); ++q) b.insert(a.multiply(i.basis().row_span(r), j.basis().row_span(q)));
  return b.build();
}

inline Ideal ideal_product(const Ideal& i, const Ideal& j) {
  require(i.parent() == j.parent(), ErrorKind::ParentMismatch, "ideal product of subspaces of different algebras");
  return Ideal::classify(i.parent(), subspace_product(i.parent(), i.space(), j.space()));
}

inline Ideal ideal_power(const Ideal& i, unsigned n) {
  if (n == 0) return whole_algebra(i.parent());
  Ideal r = i;
  for (unsigned k = 1; k < n; ++k) r = ideal_product(r, i);
  return r;
}

/// Smallest k with rad^k = 0.
inline unsigned nilpotency_index(const Ideal& i) {
  unsigned k = 1;
  Ideal r = i;
  while (!r.is_zero()) {
    r = ideal_product(r, i);
    ++k;
    require(k <= i.parent().dim() + 2, ErrorKind::InvariantViolation, "ideal is not nilpotent");
  }
  return k;
}

inline bool is_left_ideal_of(const Subspace& sub, const Algebra& bigger) { return is_left_closed(bigger, sub); }

struct QuotientAlgebra {
  Algebra algebra;
  AlgebraMorphism projection;
};

inline QuotientAlgebra quotient_algebra(const Algebra& a, const Ideal& i) {
  require(i.parent() == a, ErrorKind::ParentMismatch, "ideal belongs to a different algebra");
  require(is_left_closed(a, i.space()) && is_right_closed(a, i.space()), ErrorKind::NotTwoSided,
          "quotient needs a two-sided ideal");
  require(!i.space().is_full(), ErrorKind::ImproperIdeal, "cannot form the quotient by the whole algebra");
  const auto keep = i.space().complement_coords();
  const std::size_t q = keep.size();
  const PrimeField& f = a.field();
  auto project = [&](std::span<const Scalar> v) {
    Vec r = i.space().reduce(v), out(q);
    for (std::size_t k = 0; k < q; ++k) out[k] = r[keep[k]];
    return out;
  };
  std::vector<Vec> table;
  table.reserve(q * q);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) table.push_back(project(a.basis_product(keep[x], keep[y])));
  std::vector<std::string> labels;
  for (auto k : keep) labels.push_back(a.labels()[k]);
  std::vector<Vec> hint;
  for (const auto& e : a.idempotent_hint()) {
    Vec pe = project(e);
    if (!is_zero(pe)) hint.push_back(std::move(pe));
  }
  Algebra qa = Algebra::create(f, std::move(labels), table, project(a.unit()), std::move(hint));
  Matrix proj(f, a.dim(), q);
  for (std::size_t j = 0; j < a.dim(); ++j) proj.set_row(j, project(a.basis_element(j)));
  return {qa, {a, qa, proj}};
}

namespace detail {

// Algebra structure on a multiplicatively closed subspace with its own identity element.
inline Algebra restrict_to_subspace(const Algebra& a, const Subspace& s, std::span<const Scalar> unit, const std::string& prefix) {
  const std::size_t m = s.dim();
  std::vector<Vec> table;
  table.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec prod = a.multiply(s.basis().row_span(i), s.basis().row_span(j));
      auto c = s.try_coordinates(prod);
      require(c.has_value(), ErrorKind::InvariantViolation, "subspace not closed under multiplication");
      table.push_back(std::move(*c));
    }
  auto u = s.try_coordinates(unit);
  require(u.has_value(), ErrorKind::UnitNotContained, "identity element not in subspace");
  std::vector<std::string> labels;
  // an empty prefix labels each basis vector by its expression in the ambient basis
  for (std::size_t i = 0; i < m; ++i)
    labels.push_back(prefix.empty() ? a.format(s.basis().row_span(i)) : prefix + std::to_string(i));
  return Algebra::create(a.field(), std::move(labels), table, *u);
}

}  // namespace detail

struct Subalgebra {
  Algebra algebra;
  AlgebraMorphism inclusion;
};

enum class UnitPolicy { Require, Adjoin };

/// Subalgebra generated by the given elements, re-coordinatized with its own basis.
inline Subalgebra subalgebra_generated(const Algebra& a, std::vector<Vec> gens, UnitPolicy policy = UnitPolicy::Require,
                                       const std::string& label_prefix = "") {
  if (policy == UnitPolicy::Adjoin) gens.push_back(a.unit());
  SubspaceBuilder b(a.field(), a.dim());
  std::vector<Vec> elems;
  for (auto& g : gens)
    if (b.insert(g)) elems.push_back(g);
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (std::size_t l = 0; l <= k; ++l) {
      for (int side = 0; side < 2; ++side) {
        Vec prod = side ? a.multiply(elems[l], elems[k]) : a.multiply(elems[k], elems[l]);
        if (b.insert(prod)) elems.push_back(std::move(prod));
      }
    }
  Subspace s = b.build();
  require(s.contains(a.unit()), ErrorKind::UnitNotContained,
          "the identity of the ambient algebra is not in the generated subalgebra");
  Algebra sub = detail::restrict_to_subspace(a, s, a.unit(), label_prefix);
  return {sub, {sub, a, s.basis()}};
}

inline Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vec> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table.push_back(a.basis_product(j, i));
  return Algebra::create(a.field(), a.labels(), table, a.unit(), a.idempotent_hint());
}

/// The ground field GF(p) as a one-dimensional algebra.
inline Algebra ground_field(PrimeField f) { return Algebra::create(f, {"1"}, {Vec{1}}, Vec{1}, {Vec{1}}); }

/// The unit extension GF(p) -> a.
inline AlgebraMorphism unit_morphism(const Algebra& a) {
  Algebra k = ground_field(a.field());
  return {k, a, Matrix::from_rows(a.field(), a.dim(), {a.unit()})};
}

/// Lifts an idempotent modulo a nilpotent ideal by e <- 3e^2 - 2e^3. Returns the exact idempotent
/// and the number of iterations used.
inline std::pair<Vec, unsigned> lift_idempotent(const Algebra& a, Vec e, unsigned max_steps = 64) {
  const PrimeField& f = a.field();
  unsigned steps = 0;
  while (!a.is_idempotent(e)) {
    require(steps < max_steps, ErrorKind::InvariantViolation, "idempotent lifting did not converge");
    const Vec e2 = a.multiply(e, e);
    const Vec e3 = a.multiply(e2, e);
    e = a.sub(a.scale(e2, 3 % f.p()), a.scale(e3, 2));
    ++steps;
  }
  return {e, steps};
}

/// Element of a built from polynomial evaluation at x.
inline Vec eval_poly(const Algebra& a, const Poly& poly, std::span<const Scalar> x) {
  Vec acc = a.zero();
  for (std::size_t i = poly.coeffs().size(); i-- > 0;) {
    acc = a.multiply(acc, x);
    acc = a.add(acc, a.scale(a.unit(), poly.coeffs()[i]));
  }
  return acc;
}

/// CRT idempotent u(x) from a splitting of the minimal polynomial f = g*h into coprime factors:
/// u = 1 mod g, u = 0 mod h. Returns nothing when f has a single irreducible factor.
inline std::optional<Poly> splitting_polynomial(const Poly& minpoly, std::uint64_t seed) {
  auto fac = factor(minpoly, seed);
  if (fac.size() < 2) return std::nullopt;
  const PrimeField& f = minpoly.field();
  Poly g = Poly::constant(f, 1);
  for (unsigned k = 0; k < fac[0].second; ++k) g = g * fac[0].first;
  Poly h = minpoly / g;
  // u = h * (h^{-1} mod g)
  auto [d, s, t] = xgcd(h, g);
  require(d.is_one(), ErrorKind::InvariantViolation, "CRT factors are not coprime");
  return (h * s) % minpoly;
}

struct LocalityCertificate {
  bool local = false;
  bool split = false;       // top is the ground field
  std::size_t top_dim = 0;  // dim of R / rad R
  std::optional<Vec> idempotent;  // nontrivial idempotent when not local
  unsigned lift_steps = 0;
};

namespace detail {

inline bool commutative(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a.basis_product(i, j) != a.basis_product(j, i)) return false;
  return true;
}

}  // namespace detail

/// Decides whether r is local; if not, returns a nontrivial idempotent obtained by splitting an element of
/// r / rad(r) through its minimal polynomial and lifting it.
inline LocalityCertificate locality(const Algebra& r, std::uint64_t seed = 0, unsigned random_budget = 48) {
  LocalityCertificate cert;
  Ideal rad = radical(r);
  cert.top_dim = r.dim() - rad.dim();
  if (cert.top_dim == 1) {
    cert.local = cert.split = true;
    return cert;
  }
  require(cert.top_dim > 0, ErrorKind::InvariantViolation, "algebra with zero top");
  QuotientAlgebra q = quotient_algebra(r, rad);
  const Algebra& s = q.algebra;
  const auto keep = rad.space().complement_coords();
  const unsigned nil = nilpotency_index(rad);
  const unsigned max_steps = static_cast<unsigned>(std::ceil(std::log2(std::max(1u, nil)))) + 2;

  auto try_element = [&](const Vec& x, std::uint64_t sd, bool& irreducible_full) -> bool {
    Poly mp = min_poly(s.left_mult(x));
    auto u = splitting_polynomial(mp, sd);
    if (!u) {
      auto fac = factor(mp, sd);
      if (fac.size() == 1 && fac[0].second == 1 && fac[0].first.degree() == static_cast<int>(s.dim()))
        irreducible_full = true;
      return false;
    }
    Vec es = eval_poly(s, *u, x);
    Vec lift = r.zero();
    for (std::size_t k = 0; k < keep.size(); ++k) lift[keep[k]] = es[k];
    auto [e, steps] = lift_idempotent(r, lift);
    require(steps <= max_steps, ErrorKind::InvariantViolation,
            "idempotent lifting took " + std::to_string(steps) + " steps, bound " + std::to_string(max_steps));
    cert.idempotent = std::move(e);
    cert.lift_steps = steps;
    return true;
  };

  bool field_witness = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Scalar> dist(0, r.field().p() - 1);
  for (unsigned t = 0; t < random_budget; ++t) {
    Vec x(s.dim());
    for (auto& v : x) v = dist(rng);
    if (try_element(x, seed + t, field_witness)) return cert;
  }
  // deterministic fallback: basis elements and pairwise sums
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (try_element(s.basis_element(i), seed, field_witness)) return cert;
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (try_element(s.add(s.basis_element(i), s.basis_element(j)), seed, field_witness)) return cert;
  }
  if (field_witness && detail::commutative(s)) {
    cert.local = true;
    cert.split = false;
    return cert;
  }
  fail(ErrorKind::BudgetExhausted, "no splitting element found in a top of dimension " + std::to_string(s.dim()));
}

namespace detail {

// Corner algebra e r e, with its basis expressed in r-coordinates.
inline std::pair<Algebra, Subspace> corner(const Algebra& r, const Vec& e) {
  const Matrix L = r.left_mult(e), R = r.right_mult(e);
  // e r e = image of y -> e*y*e
  Matrix m(r.field(), r.dim(), r.dim());
  for (std::size_t j = 0; j < r.dim(); ++j) m.set_row(j, R.apply(L.apply(r.basis_element(j))));
  Subspace s = Subspace::span(m);
  return {restrict_to_subspace(r, s, e, "x"), s};
}

inline void split_idempotent(const Algebra& r, const Vec& e, std::uint64_t seed, std::vector<Vec>& out) {
  auto [c, basis] = corner(r, e);
  LocalityCertificate cert = locality(c, seed);
  if (cert.local) {
    out.push_back(e);
    return;
  }
  // idempotent of the corner, mapped back into r
  const Vec f = basis.basis().apply(*cert.idempotent);
  const Vec g = r.sub(e, f);
  split_idempotent(r, f, seed + 1, out);
  split_idempotent(r, g, seed + 2, out);
}

inline bool hint_is_valid(const Algebra& a) {
  const auto& h = a.idempotent_hint();
  if (h.empty()) return false;
  Vec total = a.zero();
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!a.is_idempotent(h[i]) || is_zero(h[i])) return false;
    for (std::size_t j = 0; j < h.size(); ++j)
      if (i != j && !is_zero(a.multiply(h[i], h[j]))) return false;
    total = a.add(total, h[i]);
  }
  if (total != a.unit()) return false;
  // primitive with split local corner: dim(eAe) - dim(e rad e) == 1
  for (const auto& e : h) {
    if (const Algebra c = corner(a, e).first; c.dim() - radical(c).dim() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// A complete set of orthogonal primitive idempotents (cached per algebra).
inline std::vector<Vec> primitive_idempotents(const Algebra& a, std::uint64_t seed = 0) {
  auto& c = a.cache();
  {
    std::lock_guard lk(c.mu);
    if (c.primitive_idempotents) return *c.primitive_idempotents;
  }
  std::vector<Vec> out;
  if (detail::hint_is_valid(a))
    out = a.idempotent_hint();
  else
    detail::split_idempotent(a, a.unit(), seed, out);
  std::lock_guard lk(c.mu);
  c.primitive_idempotents = out;
  return out;
}

/// Algebra generators: a complete set of primitive idempotents plus lifts of a basis of A / rad^2.
inline std::vector<Vec> algebra_generators(const Algebra& a) {
  auto& c = a.cache();
  {
    std::lock_guard lk(c.mu);
    if (c.generators) return *c.generators;
  }
  std::vector<Vec> gens = primitive_idempotents(a);
  const Ideal rad = radical(a);
  const Subspace rad2 = subspace_product(a, rad.space(), rad.space());
  // lifts of a basis of rad / rad^2 first, then of a complement of rad
  const Subspace radmod = rad.space();
  SubspaceBuilder seen(a.field(), a.dim());
  for (const auto& g : gens) seen.insert(g);
  for (std::size_t r = 0; r < rad.dim(); ++r) {
    Vec v = rad2.reduce(rad.space().basis().row_span(r));
    if (!is_zero(v) && seen.insert(v)) gens.push_back(v);
  }
  for (auto k : radmod.complement_coords()) {
    Vec v = a.basis_element(k);
    if (seen.insert(v)) gens.push_back(v);
  }
  std::lock_guard lk(c.mu);
  c.generators = gens;
  return gens;
}

}  // namespace fdalg
