// SPDX-License-Identifier: Apache-2.0
//
// Krull-Schmidt engine: endomorphism rings, idempotent splitting, decomposition into indecomposables,
// isomorphism tests and the registry of indecomposable classes.
//
// Idempotents come from the CRT: if the minimal polynomial of an endomorphism phi factors as g^a h with
// gcd(g, h) = 1, then u(phi) with u = 1 mod g^a, u = 0 mod h is an exact idempotent, so no lifting is
// needed. Indecomposability is certified when End(M) = k.1 + J with J generating a nilpotent algebra.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "fdim/poly.hpp"
#include "fdim/projective.hpp"

namespace fdalg {

/// End(M) as an algebra on a Hom basis; b_i * b_j is the composite "b_i then b_j".
struct EndRing {
  Module module;
  std::vector<Matrix> basis;
  Algebra algebra;

  Matrix element(std::span<const Scalar> coords) const {
    Matrix m(module.field(), module.dim(), module.dim());
    for (std::size_t k = 0; k < basis.size(); ++k) m.add_scaled(basis[k], coords[k]);
    return m;
  }
};

namespace detail {

inline Vec flatten(const Matrix& m) { return m.data(); }

inline Matrix stacked(const std::vector<Matrix>& ms, const PrimeField& f, std::size_t len) {
  Matrix s(f, ms.size(), len);
  for (std::size_t k = 0; k < ms.size(); ++k) s.set_row(k, ms[k].data());
  return s;
}

}  // namespace detail

/// Throws FieldTooSmall when dim End(M) >= p.
inline EndRing end_ring(const Module& m) {
  const PrimeField& f = m.field();
  EndRing e{m, hom_space(m, m), {}};
  const std::size_t h = e.basis.size(), len = m.dim() * m.dim();
  require(h < f.p(), ErrorKind::FieldTooSmall,
          "endomorphism ring of dimension " + std::to_string(h) + " is not below the characteristic");
  if (h == 0) {
    e.algebra = Algebra::trusted(f, {}, {}, {});
    return e;
  }
  const Matrix hb = detail::stacked(e.basis, f, len);
  Matrix targets(f, h * h + 1, len);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) targets.set_row(i * h + j, (e.basis[i] * e.basis[j]).data());
  targets.set_row(h * h, Matrix::identity(f, m.dim()).data());
  auto coords = solve_rows(hb, targets);
  require(coords.has_value(), ErrorKind::InvariantViolation, "Hom basis is not closed under composition");
  std::vector<Vec> table;
  for (std::size_t r = 0; r < h * h; ++r) table.push_back(coords->row(r));
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < h; ++k) labels.push_back("h" + std::to_string(k));
  e.algebra = Algebra::trusted(f, std::move(labels), table, coords->row(h * h));
  return e;
}

enum class SplitMethod {
  Scalar,       // End(M) = k
  SplitLocal,   // End(M) = k.1 + J, J nilpotent
  FieldTop,     // End(M)/rad is a field extension of GF(p)
  Idempotent,   // a nontrivial idempotent was found
};

inline std::string_view to_string(SplitMethod m) {
  switch (m) {
    case SplitMethod::Scalar: return "scalar-endomorphisms";
    case SplitMethod::SplitLocal: return "split-local";
    case SplitMethod::FieldTop: return "field-top";
    case SplitMethod::Idempotent: return "idempotent";
  }
  return "?";
}

struct IndecomposabilityCertificate {
  bool indecomposable = false;
  SplitMethod method = SplitMethod::Scalar;
  std::optional<Matrix> idempotent;  // nontrivial idempotent endomorphism when decomposable
  std::size_t end_dim = 0;
  std::size_t nilpotency = 0;        // J^t M = 0 for the split-local certificate
};

namespace detail {

// With c_k = trace(H_k)/d, J = span{H_k - c_k}. If products of J elements kill M after t steps then J
// generates a nilpotent ideal of codimension one and End(M) is split local.
inline std::optional<std::size_t> split_local_depth(const Module& m, const std::vector<Matrix>& hom) {
  const PrimeField& f = m.field();
  const std::size_t d = m.dim();
  const Scalar inv_d = f.inv(static_cast<Scalar>(d % f.p()));
  const Matrix id = Matrix::identity(f, d);
  std::vector<Matrix> j;
  for (const Matrix& h : hom) {
    Scalar tr = 0;
    for (std::size_t i = 0; i < d; ++i) tr = f.add(tr, h(i, i));
    Matrix n = h;
    n.add_scaled(id, f.neg(f.mul(tr, inv_d)));
    if (!n.is_zero()) j.push_back(std::move(n));
  }
  Subspace cur = Subspace::full(f, d);
  for (std::size_t t = 0; t <= d; ++t) {
    if (cur.is_zero()) return t;
    SubspaceBuilder next(f, d);
    for (const Matrix& n : j) {
      const Matrix img = cur.basis() * n;
      for (std::size_t r = 0; r < img.rows(); ++r) next.insert(img.row_span(r));
    }
    Subspace nx = next.build();
    if (nx.dim() == cur.dim()) return std::nullopt;
    cur = std::move(nx);
  }
  return std::nullopt;
}

inline std::optional<Matrix> crt_idempotent(const Matrix& phi, std::uint64_t seed) {
  auto u = splitting_polynomial(min_poly(phi), seed);
  if (!u) return std::nullopt;
  Matrix e = u->eval(phi);
  require(e * e == e, ErrorKind::InvariantViolation, "CRT element is not idempotent");
  return e;
}

}  // namespace detail

/// Decides indecomposability of a nonzero module. A decomposable verdict carries a nontrivial idempotent.
/// Random splitting elements are tried first, then End(M) is built and searched deterministically; an
/// exhausted search raises BudgetExhausted rather than guessing.
inline IndecomposabilityCertificate indecomposability(const Module& m, std::uint64_t seed = 0) {
  require(m.dim() > 0, ErrorKind::InvalidArgument, "indecomposability of the zero module");
  IndecomposabilityCertificate cert;
  const std::vector<Matrix> hom = hom_space(m, m);
  cert.end_dim = hom.size();
  if (hom.size() == 1) {
    cert.indecomposable = true;
    return cert;
  }
  if (auto t = detail::split_local_depth(m, hom)) {
    cert.indecomposable = true;
    cert.method = SplitMethod::SplitLocal;
    cert.nilpotency = *t;
    return cert;
  }
  const PrimeField& f = m.field();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<Scalar> dist(0, f.p() - 1);
  for (unsigned trial = 0; trial < 12; ++trial) {
    Matrix phi(f, m.dim(), m.dim());
    for (const Matrix& h : hom) phi.add_scaled(h, dist(rng));
    if (auto e = detail::crt_idempotent(phi, seed + trial)) {
      cert.method = SplitMethod::Idempotent;
      cert.idempotent = std::move(e);
      return cert;
    }
  }
  const EndRing ring = end_ring(m);
  const LocalityCertificate loc = locality(ring.algebra, seed);
  if (loc.local) {
    cert.indecomposable = true;
    cert.method = loc.split ? SplitMethod::SplitLocal : SplitMethod::FieldTop;
    return cert;
  }
  cert.method = SplitMethod::Idempotent;
  cert.idempotent = ring.element(*loc.idempotent);
  return cert;
}

inline bool is_indecomposable(const Module& m, std::uint64_t seed = 0) { return indecomposability(m, seed).indecomposable; }

/// Composition multiplicities: rank of e_j on M for one primitive idempotent per projective class.
inline std::vector<std::size_t> dimension_vector(const Module& m) {
  const ProjectiveData& pd = projective_data(m.algebra());
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < pd.classes(); ++j)
    out.push_back(m.action(pd.representatives[j]).rank() / pd.simples[j].dim());
  return out;
}

struct Summand {
  Module module;
  Matrix inclusion;   // dim S x dim M
  Matrix projection;  // dim M x dim S
};

struct Decomposition {
  Module module;
  std::vector<Summand> summands;

  /// sum of projection * inclusion is the identity, and each pair is A-linear with inclusion * projection = 1.
  bool verify() const {
    const PrimeField& f = module.field();
    Matrix total(f, module.dim(), module.dim());
    for (const Summand& s : summands) {
      if (!ModuleMap{s.module, module, s.inclusion}.is_homomorphism()) return false;
      if (!ModuleMap{module, s.module, s.projection}.is_homomorphism()) return false;
      if (!(s.inclusion * s.projection).is_identity()) return false;
      total = total + s.projection * s.inclusion;
    }
    return total.is_identity();
  }
};

namespace detail {

inline Matrix pivot_selector(const PrimeField& f, std::size_t n, const Subspace& s) {
  // coordinates in an echelon basis are the entries at the pivot columns
  Matrix sel(f, n, s.dim());
  const auto piv = s.pivots();
  for (std::size_t k = 0; k < piv.size(); ++k) sel(piv[k], k) = 1;
  return sel;
}

inline void split_recursive(const Module& m, const Matrix& incl, const Matrix& proj, std::uint64_t seed,
                            std::vector<Summand>& out) {
  IndecomposabilityCertificate cert = indecomposability(m, seed);
  if (cert.indecomposable) {
    out.push_back({m, incl, proj});
    return;
  }
  const PrimeField& f = m.field();
  const Matrix& e = *cert.idempotent;
  const Matrix id = Matrix::identity(f, m.dim());
  std::uint64_t child = seed;
  for (const Matrix& piece : {e, id - e}) {
    const Subspace s = piece.row_space();
    Submodule sub = submodule(m, s);
    const Matrix p = piece * pivot_selector(f, m.dim(), s);
    child = child * 6364136223846793005ULL + 1442695040888963407ULL;
    split_recursive(sub.module, sub.inclusion * incl, proj * p, child, out);
  }
}

}  // namespace detail

/// Sort key for summands: dimension, radical layers, dimension vector.
using ModuleSignature = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;

inline ModuleSignature signature(const Module& m) {
  return {m.dim(), radical_layers(m), dimension_vector(m)};
}

/// Decomposition into indecomposables with inclusion/projection witnesses, summands ordered by signature.
inline Decomposition decompose(const Module& m, std::uint64_t seed = 0) {
  Decomposition d{m, {}};
  if (m.dim() == 0) return d;
  const PrimeField& f = m.field();
  detail::split_recursive(m, Matrix::identity(f, m.dim()), Matrix::identity(f, m.dim()), seed, d.summands);
  std::vector<std::pair<ModuleSignature, std::size_t>> keys;
  for (std::size_t k = 0; k < d.summands.size(); ++k) keys.push_back({signature(d.summands[k].module), k});
  std::stable_sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Summand> sorted;
  for (const auto& [sig, k] : keys) sorted.push_back(std::move(d.summands[k]));
  d.summands = std::move(sorted);
  require(d.verify(), ErrorKind::InvariantViolation, "decomposition witnesses do not reassemble the module");
  return d;
}

/// For indecomposable m: m is isomorphic to n iff the dimensions agree and some f.g with f in Hom(m, n),
/// g in Hom(n, m) is invertible (the span of such composites leaves rad End(m)). A random combination is
/// tried first; the exhaustive pair scan decides.
inline bool isomorphic_indecomposables(const Module& m, const Module& n, std::uint64_t seed = 0) {
  require_same_algebra(m, n);
  if (m.dim() != n.dim()) return false;
  if (m.dim() == 0) return true;
  const std::vector<Matrix> fs = hom_space(m, n);
  if (fs.empty()) return false;
  const std::vector<Matrix> gs = hom_space(n, m);
  if (gs.empty()) return false;
  const PrimeField& f = m.field();
  std::mt19937_64 rng(seed + 17);
  std::uniform_int_distribution<Scalar> dist(0, f.p() - 1);
  for (unsigned trial = 0; trial < 2; ++trial) {
    Matrix a(f, m.dim(), n.dim());
    for (const Matrix& x : fs) a.add_scaled(x, dist(rng));
    if (a.invertible()) return true;
  }
  for (const Matrix& x : fs)
    for (const Matrix& y : gs)
      if ((x * y).invertible()) return true;
  return false;
}

/// General modules: decompose both and match indecomposable summands greedily (Krull-Schmidt).
inline bool are_isomorphic(const Module& m, const Module& n, std::uint64_t seed = 0) {
  require_same_algebra(m, n);
  if (m.dim() != n.dim()) return false;
  if (dimension_vector(m) != dimension_vector(n)) return false;
  const Decomposition dm = decompose(m, seed), dn = decompose(n, seed);
  if (dm.summands.size() != dn.summands.size()) return false;
  std::vector<bool> used(dn.summands.size(), false);
  for (const Summand& s : dm.summands) {
    bool found = false;
    for (std::size_t k = 0; k < dn.summands.size() && !found; ++k) {
      if (used[k] || dn.summands[k].module.dim() != s.module.dim()) continue;
      if (isomorphic_indecomposables(s.module, dn.summands[k].module, seed)) found = used[k] = true;
    }
    if (!found) return false;
  }
  return true;
}

/// Class id -> multiplicity.
using ClassVector = std::map<std::size_t, std::size_t>;

inline ClassVector add_vectors(ClassVector a, const ClassVector& b, std::size_t times = 1) {
  for (const auto& [id, c] : b) a[id] += c * times;
  return a;
}

/// Indecomposable isomorphism classes of one algebra: the computable basis of K(A). Not thread-safe: a
/// registry is a single-threaded session object, and class ids are assigned in insertion order.
class IsoClassRegistry {
 public:
  struct Entry {
    std::size_t id = 0;
    Module rep;
    std::size_t dim = 0;
    std::vector<std::size_t> layers;
    std::vector<std::size_t> dimvec;
    bool projective = false;
    std::optional<ClassVector> omega;  // nonprojective classes of Omega(rep)
  };

  explicit IsoClassRegistry(Algebra a, std::uint64_t seed = 0) : algebra_(std::move(a)), seed_(seed) {}

  const Algebra& algebra() const { return algebra_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& entry(std::size_t id) const { return entries_.at(id); }
  std::size_t size() const { return entries_.size(); }

  /// Class of an indecomposable module, registering it when new.
  std::size_t insert(const Module& m) {
    require(m.algebra() == algebra_, ErrorKind::AlgebraMismatch, "registry and module use different algebras");
    require(m.dim() > 0, ErrorKind::InvalidArgument, "the zero module has no class");
    const auto layers = radical_layers(m);
    const auto dimvec = dimension_vector(m);
    for (const Entry& e : entries_)
      if (e.dim == m.dim() && e.layers == layers && e.dimvec == dimvec && isomorphic_indecomposables(e.rep, m, seed_))
        return e.id;
    Entry e;
    e.id = entries_.size();
    e.rep = m;
    e.dim = m.dim();
    e.layers = layers;
    e.dimvec = dimvec;
    e.projective = is_projective(m);
    entries_.push_back(std::move(e));
    return entries_.back().id;
  }

  /// Every indecomposable summand, projective classes included.
  ClassVector full_vector(const Module& m, std::optional<std::uint64_t> seed = std::nullopt) {
    ClassVector v;
    for (const Summand& s : decompose(m, seed.value_or(seed_)).summands) ++v[insert(s.module)];
    return v;
  }

  /// The image of [m] in K(A): projective classes are dropped.
  ClassVector class_vector(const Module& m, std::optional<std::uint64_t> seed = std::nullopt) {
    ClassVector v = full_vector(m, seed);
    std::erase_if(v, [&](const auto& kv) { return entries_[kv.first].projective; });
    return v;
  }

  /// Class vector of Omega(rep(id)), cached.
  const ClassVector& omega(std::size_t id) {
    if (!entries_.at(id).omega) {
      ClassVector v;
      if (!entries_[id].projective) v = class_vector(syzygy(entries_[id].rep).module);
      entries_[id].omega = std::move(v);
    }
    return *entries_[id].omega;
  }

  bool omega_known(std::size_t id) const { return entries_.at(id).omega.has_value(); }

  /// Direct sum of representatives, with multiplicities.
  Module realize(const ClassVector& v) const {
    std::vector<Module> parts;
    for (const auto& [id, c] : v)
      for (std::size_t k = 0; k < c; ++k) parts.push_back(entries_.at(id).rep);
    return direct_sum(parts, algebra_).module;
  }

 private:
  Algebra algebra_;
  std::uint64_t seed_ = 0;
  std::vector<Entry> entries_;
};

inline std::string format_class_vector(const ClassVector& v) {
  std::string s = "{";
  bool first = true;
  for (const auto& [id, c] : v) {
    if (!first) s += ", ";
    first = false;
    s += "#" + std::to_string(id) + (c == 1 ? "" : "^" + std::to_string(c));
  }
  return s + "}";
}

}  // namespace fdalg
