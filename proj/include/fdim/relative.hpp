// SPDX-License-Identifier: Apache-2.0
//
// Relative homological algebra for an extension f : B -> A.
//
// A (x) _B X is the quotient of A (x) X (basis a_i (x) v, index i * dim X + v) by the A-submodule spanned by
// a_i f(g) (x) v - a_i (x) g.v for algebra generators g of B. Relations over generators suffice: the
// relation for g g' is the sum of the one for g' (with a_i f(g) in place of a_i) and the one for g. The
// quotient keeps the standard basis vectors outside the pivots of the relation space, so the multiplication
// map A (x) _B M -> M restricted to the quotient basis is the corresponding set of rows.
//
// M is (A,B)-projective iff the multiplication map splits A-linearly. Relative syzygies are defined up to
// (A,B)-projective summands, so rpd is read off a class graph exactly like pd: nodes are indecomposable
// classes that are not (A,B)-projective and c -> d when d is a summand of ker(A (x) _B c -> c).
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fdim/homological.hpp"

namespace fdalg {

class Extension {
 public:
  /// Verifies that f is a unit-preserving algebra homomorphism.
  static Extension create(AlgebraMorphism f, std::string name = "f") {
    require(check_morphism(f), ErrorKind::InvariantViolation,
            "extension " + name + " is not a unit-preserving algebra homomorphism");
    Extension e;
    e.is_inclusion_ = f.matrix.rank() == f.source.dim();
    e.map_ = std::move(f);
    e.name_ = std::move(name);
    return e;
  }
  static Extension identity(const Algebra& a) { return create(AlgebraMorphism::identity(a), "id"); }
  static Extension unit(const Algebra& a) { return create(unit_morphism(a), "unit"); }

  const AlgebraMorphism& map() const { return map_; }
  const Algebra& source() const { return map_.source; }  // B
  const Algebra& target() const { return map_.target; }  // A
  const std::string& name() const { return name_; }
  bool is_inclusion() const { return is_inclusion_; }

 private:
  AlgebraMorphism map_;
  std::string name_;
  bool is_inclusion_ = false;
};

/// Module over B obtained by b.x := f(b).x; the underlying space is unchanged.
inline Module restrict(const Extension& e, const Module& m) { return restrict_along(e.map(), m); }

struct Induced {
  Module module;        // A (x) _B X
  Matrix canonical;     // X -> A (x) _B X, v -> 1 (x) v; B-linear into the restriction
  Matrix from_tensor;   // A (x) X -> A (x) _B X, the quotient map
  std::vector<std::size_t> kept;  // tensor basis index of each quotient basis vector
};

inline Induced induce(const Extension& e, const Module& x) {
  require(x.algebra() == e.source(), ErrorKind::AlgebraMismatch, "induction of a module over another algebra");
  const Algebra& a = e.target();
  const PrimeField& f = a.field();
  const std::size_t da = a.dim(), dx = x.dim(), n = da * dx;
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < da; ++k) {
    const Matrix& l = a.left_basis(k);
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j)
        if (const Scalar c = l(i, j))
          for (std::size_t v = 0; v < dx; ++v) m(i * dx + v, j * dx + v) = c;
    act.push_back(std::move(m));
  }
  const Module tensor = Module::unchecked(a, n, std::move(act));

  SubspaceBuilder rel(f, n);
  for (const Vec& g : algebra_generators(e.source())) {
    const Matrix rg = a.right_mult(e.map().apply(g));  // row i: a_i f(g)
    const Matrix gx = x.action(g);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t v = 0; v < dx; ++v) {
        Vec r(n, 0);
        for (std::size_t j = 0; j < da; ++j)
          if (const Scalar c = rg(i, j)) r[j * dx + v] = f.add(r[j * dx + v], c);
        for (std::size_t w = 0; w < dx; ++w)
          if (const Scalar c = gx(v, w)) r[i * dx + w] = f.sub(r[i * dx + w], c);
        rel.insert(r);
      }
  }
  const Subspace relations = rel.build();
  QuotientModule q = quotient_module(tensor, relations);
  Matrix one(f, dx, n);
  const Vec& u = a.unit();
  for (std::size_t i = 0; i < da; ++i)
    if (u[i])
      for (std::size_t v = 0; v < dx; ++v) one(v, i * dx + v) = u[i];
  return {q.module, one * q.projection, q.projection, relations.complement_coords()};
}

/// The multiplication map A (x) _B M -> M for an A-module M, on the basis of `ind = induce(e, restrict(e, m))`.
inline Matrix multiplication_map(const Induced& ind, const Module& m) {
  Matrix mu(m.field(), ind.kept.size(), m.dim());
  const std::size_t dm = m.dim();
  for (std::size_t r = 0; r < ind.kept.size(); ++r) {
    const std::size_t i = ind.kept[r] / dm, v = ind.kept[r] % dm;
    mu.set_row(r, m.act(i).row(v));
  }
  return mu;
}

struct RelativeProjectivity {
  bool relative_projective = false;
  Induced induced;
  Matrix multiplication;          // A (x) _B M -> M
  std::optional<Matrix> section;  // A-linear s with s * multiplication = I, when it exists
};

/// Decides whether M is an A-direct summand of A (x) _B M by one linear solve over Hom_A(M, A (x) _B M).
inline RelativeProjectivity relative_projectivity(const Extension& e, const Module& m) {
  require(m.algebra() == e.target(), ErrorKind::AlgebraMismatch, "relative projectivity of a module over another algebra");
  RelativeProjectivity out;
  out.induced = induce(e, restrict(e, m));
  out.multiplication = multiplication_map(out.induced, m);
  const PrimeField& f = m.field();
  const std::size_t d = m.dim();
  if (d == 0) {
    out.relative_projective = true;
    out.section = Matrix(f, 0, out.induced.module.dim());
    return out;
  }
  const std::vector<Matrix> hom = hom_space(m, out.induced.module);
  Matrix sys(f, hom.size(), d * d);
  std::vector<Matrix> prods;
  for (std::size_t k = 0; k < hom.size(); ++k) {
    prods.push_back(hom[k] * out.multiplication);
    std::copy(prods.back().data().begin(), prods.back().data().end(), sys.row_ptr(k));
  }
  const Matrix id = Matrix::identity(f, d);
  if (const auto c = sys.solve(id.data())) {
    Matrix s(f, d, out.induced.module.dim());
    for (std::size_t k = 0; k < hom.size(); ++k) s.add_scaled(hom[k], (*c)[k]);
    require((s * out.multiplication).is_identity(), ErrorKind::InvariantViolation, "relative splitting check failed");
    out.section = std::move(s);
    out.relative_projective = true;
  }
  return out;
}

inline bool is_rel_projective(const Extension& e, const Module& m) { return relative_projectivity(e, m).relative_projective; }

/// Cover step A (x) _B K -> K with the canonical B-linear section.
inline CoverStep relative_cover_step(const Extension& e, const Module& k) {
  Induced ind = induce(e, restrict(e, k));
  Matrix mu = multiplication_map(ind, k);
  return {ind.module, std::move(mu), std::move(ind.canonical)};
}

enum class RelativeStatus { Terminated, Cutoff };

inline std::string_view to_string(RelativeStatus s) { return s == RelativeStatus::Terminated ? "terminated" : "cutoff"; }

/// 0 -> K_n -> C_{n-1} -> ... -> C_0 -> X -> 0 with C_0 = A (x) _B X and C_i = A (x) _B K_i. When terminated,
/// K_n is (A,B)-projective and n is minimal.
struct RelativeResolution {
  Extension extension;
  Resolution resolution;  // empty terms when X itself is (A,B)-projective
  RelativeStatus status = RelativeStatus::Cutoff;
  std::size_t length = 0;

  /// t_i = t_i h_{i-1} t_i for every differential, and every h is B-linear.
  bool splitting_identities_hold() const {
    const Resolution& r = resolution;
    if (r.splittings.size() != r.terms.size()) return false;
    auto target = [&](std::size_t i) -> const Module& { return i == 0 ? r.base : r.terms[i - 1]; };
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
      const Matrix& t = r.differentials[i];
      if (t * r.splittings[i] * t != t) return false;
      const ModuleMap h{restrict(extension, target(i)), restrict(extension, r.terms[i]), r.splittings[i]};
      if (!h.is_homomorphism()) return false;
    }
    return true;
  }
};

/// The standard relative resolution, stopped at the first (A,B)-projective kernel. Terms larger than
/// max_term_dim stop the construction with status Cutoff, as does reaching `cutoff` steps.
inline RelativeResolution standard_relative_resolution(const Extension& e, const Module& x, std::size_t cutoff = 64,
                                                       std::size_t max_term_dim = 400) {
  RelativeResolution out{e, {}, RelativeStatus::Cutoff, 0};
  out.resolution.base = x;
  out.resolution.kernel = x;
  out.resolution.kernel_inclusion = Matrix::identity(x.field(), x.dim());
  if (is_rel_projective(e, x)) {
    out.status = RelativeStatus::Terminated;
    return out;
  }
  Module k = x;
  std::size_t n = 0;
  while (n < cutoff) {
    if (k.dim() * e.target().dim() > max_term_dim) break;
    const CoverStep st = relative_cover_step(e, k);
    k = submodule(st.term, st.map.kernel()).module;
    ++n;
    if (is_rel_projective(e, k)) {
      out.status = RelativeStatus::Terminated;
      break;
    }
  }
  out.length = n;
  if (n > 0) out.resolution = build_resolution(x, n, [&](const Module& m) { return relative_cover_step(e, m); });
  return out;
}

/// Relative syzygy classes up to (A,B)-projective summands, over the registry of A-modules.
class RelativeRegistry {
 public:
  RelativeRegistry(Extension e, IsoClassRegistry& reg) : e_(std::move(e)), reg_(reg) {
    require(reg.algebra() == e_.target(), ErrorKind::AlgebraMismatch, "registry is not over the target algebra");
  }

  const Extension& extension() const { return e_; }
  IsoClassRegistry& registry() { return reg_; }

  bool rel_projective(std::size_t id) {
    if (auto it = relproj_.find(id); it != relproj_.end()) return it->second;
    const bool r = reg_.entry(id).projective || is_rel_projective(e_, reg_.entry(id).rep);
    relproj_[id] = r;
    return r;
  }

  /// Classes of M that are not (A,B)-projective.
  ClassVector class_vector(const Module& m) {
    ClassVector v = reg_.full_vector(m);
    std::erase_if(v, [&](const auto& kv) { return rel_projective(kv.first); });
    return v;
  }

  const ClassVector& omega(std::size_t id) {
    if (auto it = omega_.find(id); it != omega_.end()) return it->second;
    ClassVector v;
    if (!rel_projective(id)) {
      const Module rep = reg_.entry(id).rep;
      const CoverStep st = relative_cover_step(e_, rep);
      v = class_vector(submodule(st.term, st.map.kernel()).module);
    }
    return omega_.emplace(id, std::move(v)).first->second;
  }

 private:
  Extension e_;
  IsoClassRegistry& reg_;
  std::map<std::size_t, bool> relproj_;
  std::map<std::size_t, ClassVector> omega_;
};

/// rpd read off the relative class graph: finite, infinite (a relative syzygy class recurs) or unknown.
inline PdVerdict rel_proj_dim(RelativeRegistry& rr, const Module& x, std::size_t cutoff = 64) {
  const ClassVector v = rr.class_vector(x);
  PdVerdict out{PdKind::Finite, 0, {}};
  if (v.empty()) return out;
  detail::ClassGraph g(cutoff, [&rr](std::size_t c) -> const ClassVector& { return rr.omega(c); });
  std::vector<std::size_t> roots;
  for (const auto& [id, c] : v) roots.push_back(id);
  g.explore(roots);
  for (auto id : roots) out = detail::combine(out, g.verdict(id));
  return out;
}

inline PdVerdict rel_proj_dim(const Extension& e, const Module& x, std::size_t cutoff = 64) {
  IsoClassRegistry reg(e.target());
  RelativeRegistry rr(e, reg);
  return rel_proj_dim(rr, x, cutoff);
}

struct RelProjList {
  std::vector<std::size_t> classes;              // pairwise non-isomorphic indecomposable (A,B)-projectives
  std::map<std::size_t, std::size_t> provenance;  // class -> index of the B-module it was induced from
  bool complete = false;                          // the B-family was declared complete

  Module sum(const IsoClassRegistry& reg) const {
    ClassVector v;
    for (auto c : classes) v[c] = 1;
    return reg.realize(v);
  }
};

/// Indecomposable summands of A (x) _B Y over the given B-modules. Completeness is the caller's declaration.
inline RelProjList enumerate_rel_projectives(const Extension& e, const std::vector<Module>& ind_b, bool declared_complete,
                                             IsoClassRegistry& reg) {
  RelProjList out;
  out.complete = declared_complete;
  std::set<std::size_t> seen;
  for (std::size_t k = 0; k < ind_b.size(); ++k) {
    if (ind_b[k].is_zero()) continue;
    for (const auto& [id, c] : reg.full_vector(induce(e, ind_b[k]).module))
      if (seen.insert(id).second) {
        out.classes.push_back(id);
        out.provenance[id] = k;
      }
  }
  return out;
}

struct FdSample {
  std::size_t observed_fd = 0;  // sup of rpd over probes with finite pd and finite rpd
  std::size_t observed_gd = 0;  // sup of finite rpd over all probes
  std::size_t finite_pd_probes = 0;
  std::size_t unresolved = 0;   // probes whose pd or rpd stayed unknown
  std::vector<std::pair<PdVerdict, PdVerdict>> per_probe;  // (pd, rpd)
  bool exhaustive = false;      // always false: probes never cover all of A-mod
};

/// Empirical lower bounds for fd(e) and gd(e) over a probe family.
inline FdSample fd_phi_sample(RelativeRegistry& rr, const std::vector<Module>& probes, std::size_t cutoff = 64) {
  FdSample s;
  for (const Module& m : probes) {
    const PdVerdict pd = proj_dim(m, rr.registry(), cutoff);
    const PdVerdict rpd = rel_proj_dim(rr, m, cutoff);
    if (pd.unknown() || rpd.unknown()) ++s.unresolved;
    if (rpd.finite()) s.observed_gd = std::max(s.observed_gd, rpd.value);
    if (pd.finite()) {
      ++s.finite_pd_probes;
      if (rpd.finite()) s.observed_fd = std::max(s.observed_fd, rpd.value);
    }
    s.per_probe.emplace_back(pd, rpd);
  }
  return s;
}

/// Schanuel comparison of the standard relative resolution of length n against the variant padded at `step`
/// by the (A,B)-projective module `pad`.
inline bool check_schanuel_relative(const Extension& e, const Module& x, std::size_t n, std::size_t step,
                                    const Module& pad, std::uint64_t seed = 0) {
  require(step < n, ErrorKind::InvalidArgument, "padding step beyond the resolution length");
  require(is_rel_projective(e, pad), ErrorKind::InvalidArgument, "padding module is not (A,B)-projective");
  auto cover = [&](const Module& m) { return relative_cover_step(e, m); };
  const Resolution p = build_resolution(x, n, cover);
  const Resolution q = build_resolution(x, n, cover, std::make_pair(step, pad));
  const RelativeResolution rp{e, p, RelativeStatus::Cutoff, n}, rq{e, q, RelativeStatus::Cutoff, n};
  require(rp.splitting_identities_hold() && rq.splitting_identities_hold(), ErrorKind::NotAResolution,
          "a relative resolution is not (A,B)-exact");
  return schanuel_check(p, q, seed);
}

}  // namespace fdalg
