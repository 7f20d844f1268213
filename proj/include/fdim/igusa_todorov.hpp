// SPDX-License-Identifier: Apache-2.0
//
// The Igusa-Todorov function on the computable K(A).
//
// L is the syzygy map on the free abelian group of nonprojective indecomposable classes. For a module M with
// class support V, rank(n) = rank_Q L^n<add M>. All L^n<add M> lie in the span U of classes reachable from V,
// and L^n U stabilises by n = dim U with L injective there, so rank(n) is constant from n = dim U on.
// phi(M) is the least n reaching that stable rank, and psi(M) = phi(M) + max{ pd Y < inf : Y a summand of
// Omega^phi(M) }.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "fdim/homological.hpp"

namespace fdalg {

using BigInt = boost::multiprecision::cpp_int;
using BigClassVector = std::map<std::size_t, BigInt>;

/// Rank over Q of integer row vectors, by fraction-free (Bareiss) elimination.
inline std::size_t rank_over_q(std::vector<std::vector<BigInt>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

struct PsiLevel {
  std::size_t level = 0;
  BigClassVector classes;  // [Omega^level M]
  std::size_t distinct = 0;
  std::size_t rank = 0;    // rank of L^level <add M>
};

struct PsiComputation {
  ClassVector input;
  std::vector<PsiLevel> levels;
  std::size_t reachable = 0;  // classes reachable from the support
  std::size_t stable_rank = 0;
  std::size_t phi = 0;
  std::size_t psi = 0;
  std::vector<std::pair<std::size_t, PdVerdict>> pd_evidence;  // summand classes of Omega^phi M
};

inline BigClassVector apply_omega(IsoClassRegistry& reg, const BigClassVector& v) {
  BigClassVector out;
  for (const auto& [id, c] : v)
    for (const auto& [child, m] : reg.omega(id)) out[child] += c * m;
  return out;
}

inline BigClassVector to_big(const ClassVector& v) {
  BigClassVector out;
  for (const auto& [id, c] : v) out[id] = c;
  return out;
}

/// [Omega^k] of a class vector, in machine integers.
inline ClassVector omega_power(IsoClassRegistry& reg, ClassVector v, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    ClassVector next;
    for (const auto& [id, c] : v) next = add_vectors(std::move(next), reg.omega(id), c);
    v = std::move(next);
  }
  return v;
}

/// Psi of the module with nonprojective class vector v. Throws PsiIndeterminate when the reachable classes
/// cannot be closed within the cutoff or a summand of Omega^phi has an unknown pd.
inline PsiComputation psi_of_classes(IsoClassRegistry& reg, const ClassVector& v, std::size_t cutoff = 64) {
  PsiComputation pc;
  pc.input = v;
  if (v.empty()) {
    pc.levels.push_back({0, {}, 0, 0});
    return pc;
  }
  std::vector<std::size_t> support;
  for (const auto& [id, c] : v) support.push_back(id);
  detail::ClassGraph graph(reg, cutoff);
  graph.explore(support);
  if (!graph.complete())
    fail(ErrorKind::PsiIndeterminate, "the syzygy classes reachable from " + format_class_vector(v) +
                                          " do not close within syzygy depth " + std::to_string(cutoff));
  pc.reachable = graph.explored();
  std::vector<std::size_t> column;
  std::map<std::size_t, std::size_t> col_of;
  for (auto id : graph.expanded()) {
    col_of[id] = column.size();
    column.push_back(id);
  }

  // rows L^n[c] for c in the support
  std::vector<BigClassVector> rows;
  for (auto id : support) rows.push_back({{id, 1}});
  BigClassVector level = to_big(v);
  std::size_t prev_rank = support.size() + 1;
  for (std::size_t n = 0; n <= pc.reachable; ++n) {
    std::vector<std::vector<BigInt>> mat;
    for (const auto& r : rows) {
      std::vector<BigInt> dense(column.size(), 0);
      for (const auto& [id, c] : r) dense[col_of.at(id)] = c;
      mat.push_back(std::move(dense));
    }
    PsiLevel lv{n, level, 0, rank_over_q(std::move(mat))};
    for (const auto& [id, c] : level) lv.distinct += c != 0;
    require(lv.rank <= prev_rank, ErrorKind::InvariantViolation, "syzygy ranks increased");
    prev_rank = lv.rank;
    pc.levels.push_back(std::move(lv));
    for (auto& r : rows) r = apply_omega(reg, r);
    level = apply_omega(reg, level);
  }
  pc.stable_rank = pc.levels.back().rank;
  while (pc.phi < pc.levels.size() && pc.levels[pc.phi].rank != pc.stable_rank) ++pc.phi;

  std::size_t best = 0;
  for (const auto& [id, c] : pc.levels[pc.phi].classes) {
    if (c == 0) continue;
    PdVerdict pv = graph.verdict(id);
    if (pv.unknown())
      fail(ErrorKind::PsiIndeterminate, "pd of class #" + std::to_string(id) + " is " + pv.describe());
    if (pv.finite()) best = std::max(best, pv.value);
    pc.pd_evidence.push_back({id, std::move(pv)});
  }
  pc.psi = pc.phi + best;
  return pc;
}

inline PsiComputation psi(const Module& m, IsoClassRegistry& reg, std::size_t cutoff = 64) {
  return psi_of_classes(reg, reg.class_vector(m), cutoff);
}

inline std::size_t phi(const Module& m, IsoClassRegistry& reg, std::size_t cutoff = 64) {
  return psi(m, reg, cutoff).phi;
}

/// Psi of a direct sum; the empty list gives 0.
inline PsiComputation psi_of_sum(const std::vector<Module>& ms, IsoClassRegistry& reg, std::size_t cutoff = 64) {
  ClassVector v;
  for (const Module& m : ms) v = add_vectors(std::move(v), reg.class_vector(m));
  return psi_of_classes(reg, v, cutoff);
}

enum class ClauseStatus { Holds, Vacuous, Violated };

inline std::string_view to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::Holds: return "holds";
    case ClauseStatus::Vacuous: return "vacuous";
    case ClauseStatus::Violated: return "violated";
  }
  return "?";
}

struct ClauseVerdict {
  int clause = 0;
  ClauseStatus status = ClauseStatus::Vacuous;
  std::size_t lhs = 0, rhs = 0;  // the compared quantities when the hypothesis holds
  std::string statement;
};

struct SequenceBoundReport {
  std::vector<ClauseVerdict> clauses;  // (1) for X, Y, Z in turn, then (2), (3), (4)
  PdVerdict pd_x, pd_y, pd_z;
  bool violated() const {
    for (const auto& c : clauses)
      if (c.status == ClauseStatus::Violated) return true;
    return false;
  }
};

/// The four inequalities for 0 -> X -> Y -> Z -> 0. An unknown pd raises PsiIndeterminate.
inline SequenceBoundReport check_sequence_bounds(const ShortExactSequence& s, IsoClassRegistry& reg, std::size_t cutoff = 64) {
  s.verify();
  SequenceBoundReport rep;
  const ClassVector x = reg.class_vector(s.left()), y = reg.class_vector(s.middle()), z = reg.class_vector(s.right());
  rep.pd_x = proj_dim_of_classes(reg, x, cutoff);
  rep.pd_y = proj_dim_of_classes(reg, y, cutoff);
  rep.pd_z = proj_dim_of_classes(reg, z, cutoff);
  for (const PdVerdict* v : {&rep.pd_x, &rep.pd_y, &rep.pd_z})
    if (v->unknown()) fail(ErrorKind::PsiIndeterminate, "a term of the sequence has pd " + v->describe());
  auto psi_v = [&](const ClassVector& v) { return psi_of_classes(reg, v, cutoff).psi; };
  auto bound = [&](int clause, const PdVerdict& pd, std::size_t rhs, const std::string& text) {
    ClauseVerdict c{clause, ClauseStatus::Vacuous, 0, rhs, text};
    if (pd.finite()) {
      c.lhs = pd.value;
      c.status = pd.value <= rhs ? ClauseStatus::Holds : ClauseStatus::Violated;
    }
    rep.clauses.push_back(c);
  };
  const char* names[] = {"X", "Y", "Z"};
  const ClassVector* terms[] = {&x, &y, &z};
  const PdVerdict* pds[] = {&rep.pd_x, &rep.pd_y, &rep.pd_z};
  for (int k = 0; k < 3; ++k) {
    ClauseVerdict c{1, ClauseStatus::Vacuous, 0, 0, std::string("psi(") + names[k] + ") = pd(" + names[k] + ")"};
    if (pds[k]->finite()) {
      c.lhs = pds[k]->value;
      c.rhs = psi_v(*terms[k]);
      c.status = c.lhs == c.rhs ? ClauseStatus::Holds : ClauseStatus::Violated;
    }
    rep.clauses.push_back(c);
  }
  bound(2, rep.pd_z, rep.pd_z.finite() ? psi_v(add_vectors(x, y)) + 1 : 0, "pd(Z) <= psi(X + Y) + 1");
  bound(3, rep.pd_y,
        rep.pd_y.finite() ? psi_v(add_vectors(omega_power(reg, x, 1), omega_power(reg, z, 2))) + 2 : 0,
        "pd(Y) <= psi(Omega X + Omega^2 Z) + 2");
  bound(4, rep.pd_x, rep.pd_x.finite() ? psi_v(omega_power(reg, add_vectors(y, z), 1)) + 1 : 0,
        "pd(X) <= psi(Omega(Y + Z)) + 1");
  return rep;
}

}  // namespace fdalg
