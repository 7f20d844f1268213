// SPDX-License-Identifier: Apache-2.0
//
// Bound quiver presentations and the finite-dimensional algebras they define.
//
// Path convention: a*b is the path "a, then b"; it is defined when target(a) == source(b).
// The algebra product of two paths is their concatenation in this order.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fdim/algebra.hpp"

namespace fdalg {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t vertex_index(const std::string& v) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return i;
    fail(ErrorKind::UnknownSymbol, "unknown vertex '" + v + "'");
  }
  std::optional<std::size_t> find_arrow(const std::string& a) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == a) return i;
    return std::nullopt;
  }
  void add_vertex(const std::string& v) {
    require(std::find(vertices.begin(), vertices.end(), v) == vertices.end(), ErrorKind::InvalidArgument,
            "duplicate vertex '" + v + "'");
    vertices.push_back(v);
  }
  void add_arrow(const std::string& name, const std::string& s, const std::string& t) {
    require(!find_arrow(name), ErrorKind::InvalidArgument, "duplicate arrow '" + name + "'");
    arrows.push_back({name, vertex_index(s), vertex_index(t)});
  }
};

/// A path: either the trivial path at `start` (no arrows) or a composable arrow sequence.
struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  std::size_t end(const Quiver& q) const { return arrows.empty() ? start : q.arrows[arrows.back()].target; }
  bool operator==(const Path&) const = default;
  /// Length first, then vertex, then arrow indices.
  bool operator<(const Path& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (arrows.empty()) return start < o.start;
    return arrows < o.arrows;
  }

  std::string label(const Quiver& q) const {
    if (arrows.empty()) return "e" + q.vertices[start];
    std::string s;
    for (std::size_t i = 0; i < arrows.size(); ++i) s += (i ? "*" : "") + q.arrows[arrows[i]].name;
    return s;
  }
};

/// Builds a path from arrow indices; throws NonComposablePath on an endpoint mismatch.
inline Path make_path(const Quiver& q, const std::vector<std::size_t>& arrows) {
  require(!arrows.empty(), ErrorKind::InvalidArgument, "make_path needs at least one arrow");
  for (std::size_t i = 1; i < arrows.size(); ++i) {
    const Arrow &a = q.arrows[arrows[i - 1]], &b = q.arrows[arrows[i]];
    require(a.target == b.source, ErrorKind::NonComposablePath,
            a.name + "*" + b.name + ": target of " + a.name + " is " + q.vertices[a.target] + " but source of " + b.name +
                " is " + q.vertices[b.source]);
  }
  return {q.arrows[arrows.front()].source, arrows};
}

using PathCombination = std::vector<std::pair<Scalar, Path>>;

struct BoundQuiverPresentation {
  std::string name;
  Quiver quiver;
  std::vector<PathCombination> relations;
  std::size_t nilpotency = 2;
};

/// Every path of length below t, in increasing length-then-lex order.
inline std::vector<Path> enumerate_paths(const Quiver& q, std::size_t t) {
  std::vector<Path> out;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) out.push_back({v, {}});
  std::vector<Path> layer;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) layer.push_back({q.arrows[a].source, {a}});
  for (std::size_t len = 1; len < t && !layer.empty(); ++len) {
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (const Path& p : layer)
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].source == p.end(q)) {
          Path np = p;
          np.arrows.push_back(a);
          next.push_back(std::move(np));
        }
    layer = std::move(next);
  }
  return out;
}

/// Validates the presentation invariants: parallel relation terms of length >= 2 and t >= 2.
inline void validate_presentation(const BoundQuiverPresentation& pres) {
  const Quiver& q = pres.quiver;
  require(pres.nilpotency >= 2, ErrorKind::NotAdmissible, "nilpotency bound must be at least 2");
  for (const auto& rel : pres.relations) {
    require(!rel.empty(), ErrorKind::InvalidArgument, "empty relation");
    const Path& first = rel.front().second;
    for (const auto& [c, p] : rel) {
      require(p.length() >= 2, ErrorKind::NotAdmissible,
              "relation term " + p.label(q) + " has length " + std::to_string(p.length()) + " < 2");
      require(p.start == first.start && p.end(q) == first.end(q), ErrorKind::NonComposablePath,
              "relation terms " + first.label(q) + " and " + p.label(q) + " are not parallel");
    }
  }
}

/// A built bound quiver algebra together with the path basis it was built from.
struct QuiverAlgebra {
  BoundQuiverPresentation presentation;
  Algebra algebra;
  std::vector<Path> basis_paths;      // basis element i is the class of basis_paths[i]
  std::vector<Path> all_paths;        // paths of length < t
  Subspace ideal;                     // ideal inside span(all_paths)
  std::vector<std::size_t> basis_pos;  // positions of basis paths inside all_paths

  /// Coordinates of a path combination in the algebra basis.
  Vec element(const PathCombination& comb) const {
    const PrimeField& f = algebra.field();
    Vec v(all_paths.size(), 0);
    for (const auto& [c, p] : comb) {
      if (p.length() >= presentation.nilpotency) continue;
      auto it = std::lower_bound(all_paths.begin(), all_paths.end(), p);
      require(it != all_paths.end() && *it == p, ErrorKind::InvariantViolation, "path not enumerated");
      const std::size_t k = static_cast<std::size_t>(it - all_paths.begin());
      v[k] = f.add(v[k], c);
    }
    return normal_form(v);
  }
  Vec vertex_idempotent(std::size_t v) const { return element({{1, Path{v, {}}}}); }
  Vec arrow_element(std::size_t a) const {
    return element({{1, Path{presentation.quiver.arrows[a].source, {a}}}});
  }

  Vec normal_form(const Vec& path_coords) const {
    const Vec r = reduce_ideal(path_coords);
    Vec out(basis_pos.size());
    for (std::size_t i = 0; i < basis_pos.size(); ++i) out[i] = r[basis_pos[i]];
    return out;
  }

 private:
  // The ideal is stored in reversed column order so that pivots sit on the largest monomials.
  Vec reduce_ideal(const Vec& v) const {
    const std::size_t n = v.size();
    Vec rev(n);
    for (std::size_t i = 0; i < n; ++i) rev[i] = v[n - 1 - i];
    rev = ideal.reduce(rev);
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = rev[n - 1 - i];
    return out;
  }
};

/// Path algebra modulo the ideal generated by the relations and all paths of length >= t.
inline QuiverAlgebra build_algebra(const BoundQuiverPresentation& pres, PrimeField f) {
  validate_presentation(pres);
  const Quiver& q = pres.quiver;
  const std::size_t t = pres.nilpotency;
  QuiverAlgebra out;
  out.presentation = pres;
  out.all_paths = enumerate_paths(q, t);
  const auto& paths = out.all_paths;
  const std::size_t n = paths.size();
  auto index_of = [&](const Path& p) -> std::optional<std::size_t> {
    if (p.length() >= t) return std::nullopt;
    auto it = std::lower_bound(paths.begin(), paths.end(), p);
    if (it == paths.end() || !(*it == p)) return std::nullopt;
    return static_cast<std::size_t>(it - paths.begin());
  };
  auto concat = [&](const Path& a, const Path& b) -> std::optional<Path> {
    if (a.end(q) != b.start) return std::nullopt;
    Path r = a;
    r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
    return r;
  };

  // Ideal: span of x*r*y, stored with reversed columns.
  SubspaceBuilder ideal(f, n);
  for (const auto& rel : pres.relations) {
    const std::size_t s = rel.front().second.start, e = rel.front().second.end(q);
    for (const Path& x : paths) {
      if (x.end(q) != s) continue;
      for (const Path& y : paths) {
        if (y.start != e) continue;
        Vec v(n, 0);
        for (const auto& [c, p] : rel) {
          auto xp = concat(x, p);
          auto xpy = concat(*xp, y);
          if (auto k = index_of(*xpy)) v[n - 1 - *k] = f.add(v[n - 1 - *k], c);
        }
        ideal.insert(v);
      }
    }
  }
  out.ideal = ideal.build();
  std::vector<bool> pivot(n, false);
  for (auto c : out.ideal.pivots()) pivot[n - 1 - c] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) {
      out.basis_pos.push_back(i);
      out.basis_paths.push_back(paths[i]);
    }
  for (std::size_t i = 0; i < n; ++i)
    if (paths[i].length() == 1)
      require(!pivot[i], ErrorKind::NotAdmissible, "arrow " + paths[i].label(q) + " lies in the relation ideal");

  const std::size_t d = out.basis_paths.size();
  require(d < f.p(), ErrorKind::FieldTooSmall,
          "algebra dimension " + std::to_string(d) + " must be below the characteristic " + std::to_string(f.p()));
  std::vector<Vec> table;
  table.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec v(n, 0);
      if (auto c = concat(out.basis_paths[i], out.basis_paths[j]))
        if (auto k = index_of(*c)) v[*k] = 1;
      table.push_back(out.normal_form(v));
    }
  std::vector<std::string> labels;
  for (const Path& p : out.basis_paths) labels.push_back(p.label(q));
  Vec unit(d, 0);
  std::vector<Vec> hint;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    Vec ev(n, 0);
    ev[v] = 1;
    hint.push_back(out.normal_form(ev));
    for (std::size_t k = 0; k < d; ++k) unit[k] = f.add(unit[k], hint.back()[k]);
  }
  out.algebra = Algebra::create(f, std::move(labels), table, std::move(unit), std::move(hint));
  return out;
}

}  // namespace fdalg
