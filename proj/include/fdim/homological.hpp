// SPDX-License-Identifier: Apache-2.0
//
// Projective dimension with certified infinity, syzygy chains, the horseshoe construction, projective
// resolutions with the alternating-sum (Schanuel) check, torsionless tests and Nakayama enumeration.
//
// pd is read off the syzygy class graph: nodes are nonprojective indecomposable classes and c -> d when d is
// a summand of Omega(c). A reachable cycle certifies pd = infinity (the class recurs as a summand of its own
// syzygies forever); a finite explored graph gives pd(c) = 1 + max pd(child), with pd = 1 for a leaf.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fdim/decomposition.hpp"

namespace fdalg {

enum class PdKind { Finite, InfinitePeriodic, Unknown };

inline std::string_view to_string(PdKind k) {
  switch (k) {
    case PdKind::Finite: return "finite";
    case PdKind::InfinitePeriodic: return "infinite-periodic";
    case PdKind::Unknown: return "unknown";
  }
  return "?";
}

struct PdVerdict {
  PdKind kind = PdKind::Finite;
  std::size_t value = 0;           // pd when finite; the cutoff when unknown
  std::vector<std::size_t> cycle;  // class ids c_0 -> c_1 -> ... -> c_0 when infinite

  bool finite() const { return kind == PdKind::Finite; }
  bool infinite() const { return kind == PdKind::InfinitePeriodic; }
  bool unknown() const { return kind == PdKind::Unknown; }
  std::string describe() const {
    if (finite()) return std::to_string(value);
    if (infinite()) return "infinite-periodic";
    return "unknown(>=" + std::to_string(value) + ")";
  }
};

namespace detail {

// Combines verdicts of summands: infinity dominates, then unknown, then the maximum.
inline PdVerdict combine(PdVerdict acc, const PdVerdict& v) {
  if (acc.infinite()) return acc;
  if (v.infinite()) return v;
  if (acc.unknown()) return acc;
  if (v.unknown()) return v;
  acc.value = std::max(acc.value, v.value);
  return acc;
}

class ClassGraph {
 public:
  using Successor = std::function<const ClassVector&(std::size_t)>;

  ClassGraph(IsoClassRegistry& reg, std::size_t cutoff) : cutoff_(cutoff), next_([&reg](std::size_t c) -> const ClassVector& { return reg.omega(c); }) {}
  // Graph of an arbitrary successor map, e.g. relative syzygies.
  ClassGraph(std::size_t cutoff, Successor next) : cutoff_(cutoff), next_(std::move(next)) {}

  // Expands every class at syzygy depth below the cutoff, breadth first.
  void explore(const std::vector<std::size_t>& roots) {
    std::vector<std::size_t> frontier;
    for (auto r : roots)
      if (!depth_.count(r)) {
        depth_[r] = 0;
        frontier.push_back(r);
      }
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (auto c : frontier) {
        const std::size_t d = depth_[c];
        if (d >= cutoff_) continue;
        expanded_.insert(c);
        for (const auto& [child, mult] : next_(c))
          if (!depth_.count(child)) {
            depth_[child] = d + 1;
            next.push_back(child);
          }
      }
      frontier = std::move(next);
    }
  }

  PdVerdict verdict(std::size_t c) {
    if (auto it = memo_.find(c); it != memo_.end()) return it->second;
    return dfs(c);
  }

  std::size_t explored() const { return depth_.size(); }
  bool complete() const { return expanded_.size() == depth_.size(); }
  const std::set<std::size_t>& expanded() const { return expanded_; }

 private:
  PdVerdict dfs(std::size_t c) {
    on_stack_.insert(c);
    stack_.push_back(c);
    PdVerdict v{PdKind::Finite, 1, {}};
    if (!expanded_.count(c)) {
      v = {PdKind::Unknown, cutoff_, {}};
    } else {
      for (const auto& [child, mult] : next_(c)) {
        PdVerdict cv;
        if (on_stack_.count(child)) {
          auto it = std::find(stack_.begin(), stack_.end(), child);
          cv = {PdKind::InfinitePeriodic, 0, std::vector<std::size_t>(it, stack_.end())};
        } else if (auto m = memo_.find(child); m != memo_.end()) {
          cv = m->second;
        } else {
          cv = dfs(child);
        }
        if (cv.finite()) cv.value += 1;
        v = combine(v, cv);
      }
    }
    stack_.pop_back();
    on_stack_.erase(c);
    memo_[c] = v;
    return v;
  }

  std::size_t cutoff_;
  Successor next_;
  std::map<std::size_t, std::size_t> depth_;
  std::set<std::size_t> expanded_;
  std::set<std::size_t> on_stack_;
  std::vector<std::size_t> stack_;
  std::map<std::size_t, PdVerdict> memo_;
};

}  // namespace detail

/// pd of the modules whose nonprojective summands have classes `v`; an empty vector means projective.
inline PdVerdict proj_dim_of_classes(IsoClassRegistry& reg, const ClassVector& v, std::size_t cutoff) {
  PdVerdict out{PdKind::Finite, 0, {}};
  if (v.empty()) return out;
  std::vector<std::size_t> roots;
  for (const auto& [id, c] : v) roots.push_back(id);
  detail::ClassGraph g(reg, cutoff);
  g.explore(roots);
  for (auto r : roots) out = detail::combine(out, g.verdict(r));
  return out;
}

inline PdVerdict proj_dim(const Module& m, IsoClassRegistry& reg, std::size_t cutoff = 64) {
  return proj_dim_of_classes(reg, reg.class_vector(m), cutoff);
}

inline PdVerdict proj_dim(const Module& m, std::size_t cutoff = 64) {
  IsoClassRegistry reg(m.algebra());
  return proj_dim(m, reg, cutoff);
}

enum class ChainStatus { Terminated, Periodic, Cutoff };

inline std::string_view to_string(ChainStatus s) {
  switch (s) {
    case ChainStatus::Terminated: return "terminated";
    case ChainStatus::Periodic: return "periodic";
    case ChainStatus::Cutoff: return "cutoff";
  }
  return "?";
}

struct SyzygyChain {
  Module base;
  std::vector<Module> terms;         // terms[i] = Omega^i; computed while dim stays within the budget
  std::vector<ClassVector> classes;  // nonprojective classes of Omega^i
  ChainStatus status = ChainStatus::Cutoff;
  std::size_t terminated_at = 0;     // pd when terminated
  std::size_t period_from = 0, period_to = 0;  // Omega^to = Omega^from up to projective summands
};

/// Iterates syzygies until Omega^k is projective (pd = k), the class vector of some Omega^j equals that of an
/// earlier Omega^i (pd = infinity), or the cutoff. Class vectors of later terms are sums of cached syzygy
/// classes, which is valid because minimal covers are additive.
inline SyzygyChain syzygy_chain(const Module& m, IsoClassRegistry& reg, std::size_t cutoff = 64,
                                std::size_t max_term_dim = 256) {
  SyzygyChain ch;
  ch.base = m;
  ch.terms.push_back(m);
  ch.classes.push_back(reg.class_vector(m));
  for (std::size_t i = 0;; ++i) {
    const ClassVector& cur = ch.classes[i];
    if (cur.empty()) {
      ch.status = ChainStatus::Terminated;
      ch.terminated_at = i;
      return ch;
    }
    for (std::size_t j = 0; j < i; ++j)
      if (ch.classes[j] == cur) {
        ch.status = ChainStatus::Periodic;
        ch.period_from = j;
        ch.period_to = i;
        return ch;
      }
    if (i >= cutoff) {
      ch.status = ChainStatus::Cutoff;
      return ch;
    }
    ClassVector next;
    for (const auto& [id, c] : cur) next = add_vectors(std::move(next), reg.omega(id), c);
    if (ch.terms.size() == i + 1 && ch.terms[i].dim() <= max_term_dim) ch.terms.push_back(syzygy(ch.terms[i]).module);
    ch.classes.push_back(std::move(next));
  }
}

/// 0 -> Omega(X) -> K -> Omega(Z) -> 0 from 0 -> X -> Y -> Z -> 0, where K is the kernel of the lifted cover
/// P(X) + P(Z) -> Y, so K = Omega(Y) + (projective).
struct HorseshoeStep {
  ShortExactSequence ses;
  Module cover;       // P(X) + P(Z)
  Matrix cover_map;   // P(X) + P(Z) -> Y
  Matrix kernel_inclusion;  // K -> P(X) + P(Z)
};

inline HorseshoeStep horseshoe(const ShortExactSequence& s) {
  s.verify();
  const Module &x = s.left(), &y = s.middle(), &z = s.right();
  const Algebra& a = x.algebra();
  const PrimeField& f = a.field();
  const ProjectiveData& pd = projective_data(a);
  const ProjectiveCover& cx = projective_cover(x);
  const ProjectiveCover& cz = projective_cover(z);
  const Syzygy ox = syzygy(x), oz = syzygy(z);
  const std::size_t px = cx.projective.dim(), pz = cz.projective.dim();

  // lift of the cover of Z through q, generator by generator inside e_j Y
  Matrix lambda(f, pz, y.dim());
  for (std::size_t k = 0; k < cz.components.size(); ++k) {
    const std::size_t j = cz.components[k];
    auto pre = s.q.matrix.solve(cz.generators[k]);
    require(pre.has_value(), ErrorKind::NotExact, "horseshoe: the right map is not surjective");
    const Vec yk = y.apply(pd.representatives[j], *pre);
    const Matrix img = pd.projective_basis[j] * y.orbit(yk);
    for (std::size_t r = 0; r < img.rows(); ++r) lambda.set_row(cz.offsets[k] + r, img.row_span(r));
  }
  HorseshoeStep out;
  out.cover = direct_sum(cx.projective, cz.projective);
  out.cover_map = Matrix::vstack(cx.map * s.i.matrix, lambda);
  const Subspace ker = out.cover_map.kernel();
  Submodule k = submodule(out.cover, ker);
  out.kernel_inclusion = k.inclusion;

  const Matrix left_in_cover = Matrix::hstack(ox.inclusion, Matrix(f, ox.module.dim(), pz));
  const Matrix left = left_in_cover * detail::pivot_selector(f, px + pz, ker);
  const Subspace oz_space = Subspace::span(oz.inclusion);
  const Matrix right = k.inclusion.submatrix(0, px, k.inclusion.rows(), pz) * detail::pivot_selector(f, pz, oz_space);
  out.ses = {{ox.module, k.module, left}, {k.module, oz.module, right}};
  require(out.ses.is_exact(), ErrorKind::NotExact, "horseshoe output is not exact");
  return out;
}

/// n-fold horseshoe: 0 -> Omega^n X -> K_n -> Omega^n Z -> 0 with K_n = Omega^n(Y) + (projective).
inline std::vector<HorseshoeStep> iterated_horseshoe(const ShortExactSequence& s, std::size_t n) {
  std::vector<HorseshoeStep> out;
  ShortExactSequence cur = s;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(horseshoe(cur));
    cur = out.back().ses;
  }
  return out;
}

/// 0 -> K -> C_{n-1} -> ... -> C_0 -> X -> 0
struct Resolution {
  Module base;
  std::vector<Module> terms;          // C_0 .. C_{n-1}
  std::vector<Matrix> differentials;  // d_0 : C_0 -> X, d_i : C_i -> C_{i-1}
  std::vector<Matrix> splittings;     // h_{i-1} : C_{i-1} -> C_i (h_{-1} : X -> C_0), when covers split
  Module kernel;
  Matrix kernel_inclusion;            // K -> C_{n-1}
  std::optional<Matrix> kernel_retraction;  // h_{n-1} : C_{n-1} -> K

  std::size_t length() const { return terms.size(); }

  /// Every map is A-linear, d_0 is onto, consecutive composites vanish with matching ranks, and K is the
  /// kernel of d_{n-1}.
  bool is_exact() const {
    const std::size_t n = terms.size();
    if (n == 0 || differentials.size() != n) return false;
    auto target = [&](std::size_t i) -> const Module& { return i == 0 ? base : terms[i - 1]; };
    for (std::size_t i = 0; i < n; ++i)
      if (!ModuleMap{terms[i], target(i), differentials[i]}.is_homomorphism()) return false;
    if (differentials[0].rank() != base.dim()) return false;
    for (std::size_t i = 1; i < n; ++i) {
      if (!(differentials[i] * differentials[i - 1]).is_zero()) return false;
      if (differentials[i].rank() != terms[i - 1].dim() - differentials[i - 1].rank()) return false;
    }
    if (!ModuleMap{kernel, terms[n - 1], kernel_inclusion}.is_homomorphism()) return false;
    if (!(kernel_inclusion * differentials[n - 1]).is_zero()) return false;
    return kernel_inclusion.rank() == kernel.dim() && kernel.dim() == terms[n - 1].dim() - differentials[n - 1].rank();
  }
};

/// A surjection onto K: (C, matrix C -> K) together with an optional splitting K -> C.
struct CoverStep {
  Module term;
  Matrix map;
  std::optional<Matrix> section;
};
using CoverFunction = std::function<CoverStep(const Module&)>;

inline CoverStep minimal_cover_step(const Module& k) {
  const ProjectiveCover& c = projective_cover(k);
  return {c.projective, c.map, c.section};
}

/// Resolution of length n built from `cover`. A padding (step s, module Q) replaces C_s by C_s + Q with Q
/// mapping to zero; later terms cover the enlarged kernel.
inline Resolution build_resolution(const Module& x, std::size_t n, const CoverFunction& cover,
                                   std::optional<std::pair<std::size_t, Module>> pad = std::nullopt) {
  require(n >= 1, ErrorKind::InvalidArgument, "resolution length must be positive");
  const PrimeField& f = x.field();
  Resolution r;
  r.base = x;
  Module k = x;
  Matrix incl = Matrix::identity(f, x.dim());  // K_i -> C_{i-1}
  std::optional<Matrix> retraction = Matrix::identity(f, x.dim());  // C_{i-1} -> K_i, when splittings exist
  for (std::size_t i = 0; i < n; ++i) {
    CoverStep st = cover(k);
    if (pad && pad->first == i) {
      const Module& q = pad->second;
      st.map = Matrix::vstack(st.map, Matrix(f, q.dim(), k.dim()));
      if (st.section) st.section = Matrix::hstack(*st.section, Matrix(f, k.dim(), q.dim()));
      st.term = direct_sum(st.term, q);
    }
    r.differentials.push_back(st.map * incl);
    if (retraction && st.section) r.splittings.push_back(*retraction * *st.section);
    r.terms.push_back(st.term);
    const Subspace ker = st.map.kernel();
    Submodule next = submodule(st.term, ker);
    if (st.section) {
      // y -> y - (y.map).section lands in ker(map)
      Matrix proj = Matrix::identity(f, st.term.dim()) - st.map * *st.section;
      retraction = proj * detail::pivot_selector(f, st.term.dim(), ker);
    } else {
      retraction.reset();
    }
    k = next.module;
    incl = next.inclusion;
  }
  if (retraction) r.kernel_retraction = *retraction;
  r.kernel = k;
  r.kernel_inclusion = incl;
  return r;
}

inline Resolution minimal_resolution(const Module& x, std::size_t n) { return build_resolution(x, n, minimal_cover_step); }

/// The two alternating sums M + Q_{n-1} + P_{n-2} + ... and N + P_{n-1} + Q_{n-2} + ... (C = P_0 on the
/// left when n is even, Q_0 when odd).
inline std::pair<Module, Module> schanuel_sums(const Resolution& p, const Resolution& q) {
  const std::size_t n = p.length();
  std::vector<Module> left{p.kernel}, right{q.kernel};
  for (std::size_t i = n; i-- > 0;) {
    const bool from_q = (n - 1 - i) % 2 == 0;
    left.push_back(from_q ? q.terms[i] : p.terms[i]);
    right.push_back(from_q ? p.terms[i] : q.terms[i]);
  }
  const Algebra& a = p.base.algebra();
  return {direct_sum(left, a).module, direct_sum(right, a).module};
}

inline bool same_module(const Module& x, const Module& y) {
  return x.algebra() == y.algebra() && x.dim() == y.dim() && x.acts() == y.acts();
}

/// Alternating-sum isomorphism for two resolutions of the same module and length.
inline bool schanuel_check(const Resolution& p, const Resolution& q, std::uint64_t seed = 0) {
  require(same_module(p.base, q.base), ErrorKind::NotAResolution, "the resolutions resolve different modules");
  require(p.length() == q.length(), ErrorKind::LengthMismatch,
          "lengths " + std::to_string(p.length()) + " and " + std::to_string(q.length()) + " differ");
  require(p.is_exact(), ErrorKind::NotAResolution, "first sequence is not exact");
  require(q.is_exact(), ErrorKind::NotAResolution, "second sequence is not exact");
  auto [l, r] = schanuel_sums(p, q);
  return are_isomorphic(l, r, seed);
}

struct TorsionlessReport {
  bool torsionless = false;
  bool evaluation_injective = false;  // the maps M -> A separate points
  bool embeds = false;                // an explicit injective A-map M -> A^r was built and checked
  std::size_t free_rank = 0;
  std::optional<Matrix> embedding;
};

/// Torsionless test by both routes; the two verdicts must agree.
inline TorsionlessReport torsionless(const Module& m) {
  TorsionlessReport rep;
  const PrimeField& f = m.field();
  if (m.dim() == 0) {
    rep.torsionless = rep.evaluation_injective = rep.embeds = true;
    return rep;
  }
  const Module reg = Module::regular(m.algebra());
  const std::vector<Matrix> hom = hom_space(m, reg);
  Matrix all(f, m.dim(), 0);
  for (const Matrix& h : hom) all = Matrix::hstack(all, h);
  rep.evaluation_injective = all.kernel().is_zero();

  Matrix emb(f, m.dim(), 0);
  std::size_t rank = 0;
  for (const Matrix& h : hom) {
    if (rank == m.dim()) break;
    Matrix trial = Matrix::hstack(emb, h);
    const std::size_t rt = trial.rank();
    if (rt > rank) {
      emb = std::move(trial);
      rank = rt;
      ++rep.free_rank;
    }
  }
  if (rank == m.dim()) {
    const ModuleMap map{m, power(reg, rep.free_rank), emb};
    rep.embeds = map.is_homomorphism() && map.is_injective();
    if (rep.embeds) rep.embedding = emb;
  }
  require(rep.embeds == rep.evaluation_injective, ErrorKind::InvariantViolation,
          "torsionless routes disagree");
  rep.torsionless = rep.embeds;
  return rep;
}

inline bool is_torsionless(const Module& m) { return torsionless(m).torsionless; }

/// Uniseriality data for one indecomposable projective: the radical layer dimensions, and whether each layer
/// is simple.
struct UniserialCheck {
  std::size_t projective_class = 0;
  bool opposite_side = false;
  std::vector<std::size_t> layer_tops;  // number of simple summands per radical layer
  bool uniserial() const {
    return std::all_of(layer_tops.begin(), layer_tops.end(), [](std::size_t t) { return t == 1; });
  }
};

struct NakayamaData {
  std::vector<Module> indecomposables;                  // P_j / rad^l P_j
  std::vector<std::pair<std::size_t, std::size_t>> labels;  // (j, l)
  std::vector<UniserialCheck> certificate;
};

inline std::vector<UniserialCheck> uniserial_checks(const Algebra& a, bool opposite_side) {
  const ProjectiveData& pd = projective_data(a);
  const Subspace rad = radical(a).space();
  std::vector<UniserialCheck> out;
  for (std::size_t j = 0; j < pd.classes(); ++j) {
    UniserialCheck c{j, opposite_side, {}};
    const Module& p = pd.projectives[j];
    Subspace cur = Subspace::full(a.field(), p.dim());
    while (!cur.is_zero()) {
      const Submodule sub = submodule(p, cur);
      c.layer_tops.push_back(projective_cover(sub.module).components.size());
      cur = ideal_times_subspace(p, rad, cur);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// Certifies that every indecomposable projective of a and of its opposite is uniserial and lists the
/// indecomposables P_j / rad^l P_j; nothing when a is not Nakayama.
inline std::optional<NakayamaData> nakayama_data(const Algebra& a) {
  NakayamaData nd;
  for (bool op : {false, true}) {
    auto checks = uniserial_checks(op ? opposite(a) : a, op);
    for (const auto& c : checks)
      if (!c.uniserial()) return std::nullopt;
    nd.certificate.insert(nd.certificate.end(), checks.begin(), checks.end());
  }
  const ProjectiveData& pd = projective_data(a);
  const Subspace rad = radical(a).space();
  for (std::size_t j = 0; j < pd.classes(); ++j) {
    const Module& p = pd.projectives[j];
    Subspace cur = ideal_times_subspace(p, rad, Subspace::full(a.field(), p.dim()));
    for (std::size_t l = 1;; ++l) {
      nd.indecomposables.push_back(quotient_module(p, cur).module);
      nd.labels.push_back({j, l});
      if (cur.is_zero()) break;
      cur = ideal_times_subspace(p, rad, cur);
    }
  }
  return nd;
}

}  // namespace fdalg
