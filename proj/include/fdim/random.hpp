// SPDX-License-Identifier: Apache-2.0
//
// Seeded generators for test instances: small algebras, radical-square-zero and Nakayama presentations,
// modules and short exact sequences. Equal seeds give equal outputs.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fdim/module.hpp"
#include "fdim/quiver.hpp"

namespace fdalg {

/// Quiver with `vertices` vertices and `arrows` random arrows (loops allowed), nilpotency 2.
inline BoundQuiverPresentation random_rad_square_zero(std::size_t vertices, std::size_t arrows, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BoundQuiverPresentation p;
  p.name = "R" + std::to_string(seed);
  for (std::size_t v = 0; v < vertices; ++v) p.quiver.add_vertex(std::to_string(v + 1));
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  for (std::size_t k = 0; k < arrows; ++k) {
    const std::size_t s = pick(rng), t = pick(rng);
    p.quiver.add_arrow("a" + std::to_string(k), p.quiver.vertices[s], p.quiver.vertices[t]);
  }
  p.nilpotency = 2;
  return p;
}

/// Linear quiver 1 -> ... -> n with one monomial relation, or an oriented cycle with a nilpotency bound.
inline BoundQuiverPresentation random_monomial_nakayama(std::size_t vertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BoundQuiverPresentation p;
  p.name = "N" + std::to_string(seed);
  const bool cyclic = vertices >= 1 && rng() % 2 == 0;
  for (std::size_t v = 0; v < vertices; ++v) p.quiver.add_vertex(std::to_string(v + 1));
  const std::size_t arrows = cyclic ? vertices : vertices - 1;
  for (std::size_t k = 0; k < arrows; ++k)
    p.quiver.add_arrow("a" + std::to_string(k + 1), p.quiver.vertices[k], p.quiver.vertices[(k + 1) % vertices]);
  if (cyclic) {
    p.nilpotency = 2 + rng() % (vertices + 1);
  } else {
    p.nilpotency = std::max<std::size_t>(2, vertices);
    if (arrows >= 2) {
      const std::size_t len = 2 + rng() % (arrows - 1);
      const std::size_t start = rng() % (arrows - len + 1);
      std::vector<std::size_t> path;
      for (std::size_t k = 0; k < len; ++k) path.push_back(start + k);
      p.relations.push_back({{1, make_path(p.quiver, path)}});
    }
  }
  return p;
}

/// Same algebra in the basis given by the rows of the invertible matrix t.
inline Algebra change_basis(const Algebra& a, const Matrix& t) {
  const PrimeField& f = a.field();
  const std::size_t n = a.dim();
  const Matrix ti = *t.inverse();
  std::vector<Vec> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table.push_back(ti.apply(a.multiply(t.row_span(i), t.row_span(j))));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  std::vector<Vec> hint;
  for (const Vec& e : a.idempotent_hint()) hint.push_back(ti.apply(e));
  return Algebra::create(f, std::move(labels), table, ti.apply(a.unit()), std::move(hint));
}

inline Matrix random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> d(0, f.p() - 1);
  for (;;) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    if (m.invertible()) return m;
  }
}

/// A bound quiver algebra of dimension at most max_dim on a random quiver, presented in a random basis.
inline Algebra random_small_algebra(const PrimeField& f, std::size_t max_dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    const std::size_t vertices = 1 + rng() % 3;
    const std::size_t arrows = rng() % 4;
    BoundQuiverPresentation p = random_rad_square_zero(vertices, arrows, rng());
    p.nilpotency = 2 + rng() % 2;
    if (p.nilpotency == 3 && !p.quiver.arrows.empty() && rng() % 2) {
      // one random monomial relation of length 2, if some pair composes
      for (std::size_t a = 0; a < p.quiver.arrows.size(); ++a)
        for (std::size_t b = 0; b < p.quiver.arrows.size(); ++b)
          if (p.quiver.arrows[a].target == p.quiver.arrows[b].source && p.relations.empty() && rng() % 2)
            p.relations.push_back({{1, make_path(p.quiver, {a, b})}});
    }
    // path counts do not depend on the field, so probe over a large prime before the dim < p guard applies
    if (build_algebra(p, PrimeField()).algebra.dim() > max_dim) continue;
    QuiverAlgebra q = build_algebra(p, f);
    return change_basis(q.algebra, random_invertible(f, q.algebra.dim(), rng));
  }
}

inline Vec random_vector(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> d(0, f.p() - 1);
  Vec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

/// Quotients m by random cyclic submodules until dim <= max_dim or m is simple.
inline Module shrink_module(Module m, std::size_t max_dim, std::mt19937_64& rng) {
  while (m.dim() > max_dim) {
    Subspace s = submodule_generated(m, {random_vector(m.field(), m.dim(), rng)});
    if (s.is_full()) {
      const Subspace rad = radical_of_module(m);
      Vec e(m.dim(), 0);
      e[0] = 1;
      s = rad.is_zero() ? submodule_generated(m, {e}) : submodule_generated(m, {rad.basis().row(0)});
      if (s.is_full()) break;
    }
    m = quotient_module(m, s).module;
  }
  return m;
}

/// A random module of dimension in [1, max_dim]: a submodule or a quotient of a free module of rank at most 2
/// generated by random elements.
inline Module random_module(const Algebra& a, std::size_t max_dim, std::mt19937_64& rng) {
  const PrimeField& f = a.field();
  for (std::size_t attempt = 0;; ++attempt) {
    const std::size_t rank = 1 + rng() % 2;
    const Module free = power(Module::regular(a), rank);
    const std::size_t gens = 1 + rng() % 2;
    std::vector<Vec> xs;
    for (std::size_t k = 0; k < gens; ++k) xs.push_back(random_vector(f, free.dim(), rng));
    // sparsify so that generators often live in a few vertices
    for (auto& x : xs)
      for (auto& c : x)
        if (rng() % 3 == 0) c = 0;
    const Subspace s = submodule_generated(free, xs);
    const bool take_quotient = rng() % 2;
    const std::size_t d = take_quotient ? free.dim() - s.dim() : s.dim();
    if (d == 0 || d > max_dim) {
      if (attempt > 64) return shrink_module(Module::regular(a), max_dim, rng);
      continue;
    }
    return take_quotient ? quotient_module(free, s).module : submodule(free, s).module;
  }
}

/// 0 -> S -> M -> M/S -> 0 for a random module M and the submodule generated by one or two random elements.
inline ShortExactSequence random_ses(const Algebra& a, std::size_t max_dim, std::mt19937_64& rng) {
  const Module m = random_module(a, max_dim, rng);
  std::vector<Vec> xs{random_vector(a.field(), m.dim(), rng)};
  if (rng() % 2) xs.push_back(random_vector(a.field(), m.dim(), rng));
  for (auto& x : xs)
    for (auto& c : x)
      if (rng() % 2 == 0) c = 0;
  return ses_from_submodule(m, submodule_generated(m, xs));
}

}  // namespace fdalg
