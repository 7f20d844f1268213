// SPDX-License-Identifier: Apache-2.0
//
// Builds the objects named by a parsed document. Every algebra is a bound quiver algebra (a root) or a
// subalgebra of one, so expressions are always evaluated in the root quiver and then re-coordinatized.
#pragma once

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fdim/parser.hpp"
#include "fdim/projective.hpp"
#include "fdim/quiver.hpp"

namespace fdalg {

struct AlgebraEntry {
  std::string name;
  Algebra algebra;
  std::shared_ptr<const QuiverAlgebra> root;  // null for a ground field
  std::string root_name;
  Matrix to_root;                             // rows: basis of this algebra in root coordinates
  std::optional<std::string> parent;
  std::optional<AlgebraMorphism> to_parent;
  bool is_root() const { return root && parent == std::nullopt && to_root.rows() == to_root.cols(); }
};

struct ExtensionEntry {
  std::string name;
  ExtensionKind kind;
  AlgebraMorphism map;  // B -> A
  std::string source, target;
};

struct ModuleEntry {
  std::string name, algebra;
  Module module;
};

class Workspace {
 public:
  explicit Workspace(PrimeField f) : field_(f) {}

  const PrimeField& field() const { return field_; }
  const std::vector<AlgebraEntry>& algebras() const { return algebras_; }
  const std::vector<ExtensionEntry>& extensions() const { return extensions_; }
  const std::vector<ModuleEntry>& modules() const { return modules_; }

  const AlgebraEntry& algebra(const std::string& name) const { return *find(algebras_, name, "algebra"); }
  const ExtensionEntry& extension(const std::string& name) const { return *find(extensions_, name, "extension"); }
  const ModuleEntry& module(const std::string& name) const { return *find(modules_, name, "module"); }
  bool has_algebra(const std::string& name) const { return lookup(algebras_, name) != nullptr; }
  bool has_module(const std::string& name) const { return lookup(modules_, name) != nullptr; }
  bool has_extension(const std::string& name) const { return lookup(extensions_, name) != nullptr; }

  /// Coordinates of an expression in the named algebra.
  Vec evaluate(const std::string& algebra_name, const Expr& e) const { return evaluate(algebra(algebra_name), e); }

  void add_algebra(const AlgebraDecl& d);
  void add_subalgebra(const SubalgebraDecl& d);
  void add_extension(const ExtensionDecl& d);
  void add_module(const ModuleDecl& d);
  void add_module(const std::string& name, const std::string& algebra_name, Module m) {
    require(!has_module(name), ErrorKind::InvalidArgument, "duplicate module '" + name + "'");
    modules_.push_back({name, algebra_name, std::move(m)});
  }

  Vec evaluate(const AlgebraEntry& a, const Expr& e) const;

 private:
  PrimeField field_;
  std::vector<AlgebraEntry> algebras_;
  std::vector<ExtensionEntry> extensions_;
  std::vector<ModuleEntry> modules_;

  template <class T>
  static const T* lookup(const std::vector<T>& v, const std::string& name) {
    for (const T& x : v)
      if (x.name == name) return &x;
    return nullptr;
  }
  template <class T>
  static const T* find(const std::vector<T>& v, const std::string& name, const std::string& what) {
    const T* x = lookup(v, name);
    if (!x) fail(ErrorKind::UnknownSymbol, "unknown " + what + " '" + name + "'");
    return x;
  }
  const AlgebraEntry& algebra_at(const std::string& name, const SourcePos& pos) const {
    const AlgebraEntry* a = lookup(algebras_, name);
    if (!a) fail(ErrorKind::UnknownSymbol, pos.str() + ": unknown algebra '" + name + "'");
    return *a;
  }
  void register_algebra(AlgebraEntry e, const SourcePos& pos) {
    require(!lookup(algebras_, e.name), ErrorKind::InvalidArgument, pos.str() + ": duplicate algebra '" + e.name + "'");
    algebras_.push_back(std::move(e));
  }
  Vec root_term(const QuiverAlgebra& q, const Term& t) const;
  Matrix to_matrix(const IntMatrix& m, std::size_t rows, std::size_t cols, const SourcePos& pos) const;
};

namespace detail {

inline Scalar reduce(const PrimeField& f, long long c) { return f.from_int(c); }

/// Longest path length + 1 for an acyclic quiver; nullopt when the quiver has an oriented cycle.
inline std::optional<std::size_t> acyclic_bound(const Quiver& q) {
  const std::size_t n = q.vertices.size();
  std::vector<std::size_t> indeg(n, 0), longest(n, 0);
  for (const Arrow& a : q.arrows) ++indeg[a.target];
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (!indeg[v]) stack.push_back(v);
  std::size_t seen = 0, best = 0;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    ++seen;
    best = std::max(best, longest[v]);
    for (const Arrow& a : q.arrows)
      if (a.source == v) {
        longest[a.target] = std::max(longest[a.target], longest[v] + 1);
        if (--indeg[a.target] == 0) stack.push_back(a.target);
      }
  }
  if (seen < n) return std::nullopt;
  return std::max<std::size_t>(2, best + 1);
}

}  // namespace detail

/// Presentation described by an algebra block.
inline BoundQuiverPresentation presentation_of(const AlgebraDecl& d, const PrimeField& f) {
  BoundQuiverPresentation p;
  p.name = d.name;
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    const auto& v = d.vertices[i];
    if (std::find(p.quiver.vertices.begin(), p.quiver.vertices.end(), v) != p.quiver.vertices.end())
      fail(ErrorKind::SyntaxError, d.vertex_pos[i].str() + ": duplicate vertex '" + v + "'");
    p.quiver.vertices.push_back(v);
  }
  for (const ArrowDecl& a : d.arrows) {
    if (p.quiver.find_arrow(a.name)) fail(ErrorKind::SyntaxError, a.pos.str() + ": duplicate arrow '" + a.name + "'");
    for (const auto* end : {&a.source, &a.target})
      if (std::find(p.quiver.vertices.begin(), p.quiver.vertices.end(), *end) == p.quiver.vertices.end())
        fail(ErrorKind::UnknownSymbol, a.pos.str() + ": arrow '" + a.name + "' uses unknown vertex '" + *end + "'");
    p.quiver.add_arrow(a.name, a.source, a.target);
  }
  for (const RelationDecl& r : d.relations) {
    PathCombination comb;
    for (const Term& t : r.expr) {
      if (t.basis_index) fail(ErrorKind::SyntaxError, t.pos.str() + ": basis indices are not allowed in relations");
      std::vector<std::size_t> arrows;
      for (const auto& fac : t.factors) {
        auto k = p.quiver.find_arrow(fac);
        if (!k) fail(ErrorKind::UnknownSymbol, t.pos.str() + ": unknown arrow '" + fac + "' in relation");
        arrows.push_back(*k);
      }
      if (arrows.empty() && detail::reduce(f, t.coef) == 0) continue;
      if (arrows.empty())
        fail(ErrorKind::NotAdmissible, t.pos.str() + ": relation term of length 0");
      try {
        comb.emplace_back(detail::reduce(f, t.coef), make_path(p.quiver, arrows));
      } catch (const Error& e) {
        fail(e.kind(), t.pos.str() + ": " + e.message());
      }
    }
    // merge equal paths and drop zero coefficients
    PathCombination merged;
    for (auto& [c, path] : comb) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& x) { return x.second == path; });
      if (it == merged.end()) merged.emplace_back(c, path);
      else it->first = f.add(it->first, c);
    }
    std::erase_if(merged, [](const auto& x) { return x.first == 0; });
    if (merged.empty()) continue;
    p.relations.push_back(std::move(merged));
  }
  if (d.nilpotency) {
    p.nilpotency = *d.nilpotency;
  } else if (auto t = detail::acyclic_bound(p.quiver)) {
    p.nilpotency = *t;
  } else {
    fail(ErrorKind::NotAdmissible, d.pos.str() + ": quiver '" + d.name + "' has an oriented cycle; a nilpotency bound is required");
  }
  try {
    validate_presentation(p);
  } catch (const Error& e) {
    fail(e.kind(), d.pos.str() + ": " + e.message());
  }
  return p;
}

inline void Workspace::add_algebra(const AlgebraDecl& d) {
  auto q = std::make_shared<QuiverAlgebra>(build_algebra(presentation_of(d, field_), field_));
  AlgebraEntry e;
  e.name = d.name;
  e.algebra = q->algebra;
  e.root = q;
  e.root_name = d.name;
  e.to_root = Matrix::identity(field_, q->algebra.dim());
  register_algebra(std::move(e), d.pos);
}

inline Vec Workspace::root_term(const QuiverAlgebra& q, const Term& t) const {
  const Quiver& quiv = q.presentation.quiver;
  const Algebra& a = q.algebra;
  Vec x = a.scale(a.unit(), detail::reduce(field_, t.coef));
  std::optional<std::size_t> prev_end;
  for (const auto& fac : t.factors) {
    std::size_t s = 0, e = 0;
    Vec y;
    if (auto k = quiv.find_arrow(fac)) {
      s = quiv.arrows[*k].source;
      e = quiv.arrows[*k].target;
      y = q.arrow_element(*k);
    } else if (fac.size() > 1 && fac[0] == 'e' &&
               std::find(quiv.vertices.begin(), quiv.vertices.end(), fac.substr(1)) != quiv.vertices.end()) {
      s = e = quiv.vertex_index(fac.substr(1));
      y = q.vertex_idempotent(s);
    } else {
      fail(ErrorKind::UnknownSymbol, t.pos.str() + ": unknown arrow or idempotent '" + fac + "'");
    }
    if (prev_end && *prev_end != s)
      fail(ErrorKind::NonComposablePath, t.pos.str() + ": '" + fac + "' starts at " + quiv.vertices[s] +
                                             " but the preceding factor ends at " + quiv.vertices[*prev_end]);
    prev_end = e;
    x = a.multiply(x, y);
  }
  return x;
}

inline Vec Workspace::evaluate(const AlgebraEntry& a, const Expr& expr) const {
  const PrimeField& f = field_;
  auto add_into = [&](Vec& acc, const Vec& x) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = f.add(acc[i], x[i]);
  };
  // terms with quiver symbols are summed in the root first: individual terms need not lie in a
  Vec out = a.algebra.zero();
  std::optional<Vec> in_root;
  std::optional<SourcePos> first_pos;
  for (const Term& t : expr) {
    if (t.basis_index) {
      if (*t.basis_index >= a.algebra.dim())
        fail(ErrorKind::UnknownSymbol, t.pos.str() + ": basis index " + std::to_string(*t.basis_index) + " out of range");
      add_into(out, a.algebra.scale(a.algebra.basis_element(*t.basis_index), detail::reduce(f, t.coef)));
    } else if (t.factors.empty()) {
      add_into(out, a.algebra.scale(a.algebra.unit(), detail::reduce(f, t.coef)));
    } else {
      if (!a.root) fail(ErrorKind::UnknownSymbol, t.pos.str() + ": algebra '" + a.name + "' has no quiver symbols");
      if (!in_root) in_root = a.root->algebra.zero(), first_pos = t.pos;
      add_into(*in_root, root_term(*a.root, t));
    }
  }
  if (in_root) {
    auto c = a.to_root.solve(*in_root);
    if (!c)
      fail(ErrorKind::InvalidArgument,
           first_pos->str() + ": element " + a.root->algebra.format(*in_root) + " is not in '" + a.name + "'");
    add_into(out, *c);
  }
  return out;
}

inline void Workspace::add_subalgebra(const SubalgebraDecl& d) {
  const AlgebraEntry& parent = algebra_at(d.parent, d.pos);
  require(parent.root != nullptr, ErrorKind::InvalidArgument, d.pos.str() + ": '" + d.parent + "' has no quiver");
  const AlgebraEntry& root = algebra(parent.root_name);
  std::vector<Vec> gens;
  for (const Expr& e : d.generators) {
    const Vec in_parent = evaluate(parent, e);
    gens.push_back(parent.to_root.apply(in_parent));
  }
  Subalgebra s = [&] {
    try {
      return subalgebra_generated(root.algebra, gens);
    } catch (const Error& e) {
      fail(e.kind(), d.pos.str() + ": " + e.message());
    }
  }();
  AlgebraEntry e;
  e.name = d.name;
  e.algebra = s.algebra;
  e.root = parent.root;
  e.root_name = parent.root_name;
  e.to_root = s.inclusion.matrix;
  e.parent = d.parent;
  auto into_parent = solve_rows(parent.to_root, e.to_root);
  require(into_parent.has_value(), ErrorKind::InvariantViolation, "subalgebra escapes its parent");
  e.to_parent = AlgebraMorphism{s.algebra, parent.algebra, *into_parent};
  register_algebra(std::move(e), d.pos);
}

inline Matrix Workspace::to_matrix(const IntMatrix& m, std::size_t rows, std::size_t cols, const SourcePos& pos) const {
  const bool empty_ok = (rows == 0 || cols == 0) && (m.empty() || (m.size() == rows && m.front().empty()));
  if (!empty_ok) {
    const std::size_t c = m.empty() ? 0 : m.front().size();
    if (m.size() != rows || c != cols)
      fail(ErrorKind::InvalidArgument, pos.str() + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                                           " matrix, found " + std::to_string(m.size()) + "x" + std::to_string(c));
  }
  Matrix out(field_, rows, cols);
  for (std::size_t i = 0; i < rows && i < m.size(); ++i)
    for (std::size_t j = 0; j < cols && j < m[i].size(); ++j) out(i, j) = detail::reduce(field_, m[i][j]);
  return out;
}

inline void Workspace::add_extension(const ExtensionDecl& d) {
  require(!lookup(extensions_, d.name), ErrorKind::InvalidArgument, d.pos.str() + ": duplicate extension '" + d.name + "'");
  const AlgebraEntry& target = algebra_at(d.target, d.pos);
  ExtensionEntry x{d.name, d.kind, AlgebraMorphism::identity(target.algebra), d.source, d.target};
  switch (d.kind) {
    case ExtensionKind::Identity:
      require(d.source == d.target, ErrorKind::InvalidArgument, d.pos.str() + ": identity extension needs B = A");
      break;
    case ExtensionKind::Ground: {
      x.map = unit_morphism(target.algebra);
      if (const AlgebraEntry* b = lookup(algebras_, d.source)) {
        require(b->algebra.dim() == 1, ErrorKind::InvalidArgument, d.pos.str() + ": '" + d.source + "' is not the ground field");
        x.map.source = b->algebra;
      } else {
        AlgebraEntry g;
        g.name = d.source;
        g.algebra = x.map.source;
        g.root_name = d.source;
        g.to_root = Matrix::identity(field_, 1);
        register_algebra(std::move(g), d.pos);
      }
      break;
    }
    case ExtensionKind::Inclusion: {
      const AlgebraEntry& source = algebra_at(d.source, d.pos);
      require(source.root && target.root && source.root_name == target.root_name, ErrorKind::AlgebraMismatch,
              d.pos.str() + ": '" + d.source + "' and '" + d.target + "' do not live in a common quiver algebra");
      auto m = solve_rows(target.to_root, source.to_root);
      require(m.has_value(), ErrorKind::AlgebraMismatch, d.pos.str() + ": '" + d.source + "' is not contained in '" + d.target + "'");
      x.map = {source.algebra, target.algebra, *m};
      break;
    }
    case ExtensionKind::Matrix: {
      const AlgebraEntry& source = algebra_at(d.source, d.pos);
      x.map = {source.algebra, target.algebra, to_matrix(d.matrix, source.algebra.dim(), target.algebra.dim(), d.pos)};
      require(check_morphism(x.map), ErrorKind::InvalidArgument,
              d.pos.str() + ": matrix does not define a unital algebra homomorphism");
      break;
    }
  }
  extensions_.push_back(std::move(x));
}

inline void Workspace::add_module(const ModuleDecl& d) {
  require(!has_module(d.name), ErrorKind::InvalidArgument, d.pos.str() + ": duplicate module '" + d.name + "'");
  const AlgebraEntry& a = algebra_at(d.algebra, d.pos);
  const Algebra& alg = a.algebra;
  auto vertex_of = [&]() -> std::size_t {
    require(a.is_root(), ErrorKind::InvalidArgument, d.pos.str() + ": vertex shorthand needs a quiver algebra; use [k]");
    const Quiver& q = a.root->presentation.quiver;
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
      if (q.vertices[v] == d.vertex) return v;
    fail(ErrorKind::UnknownSymbol, d.pos.str() + ": unknown vertex '" + d.vertex + "'");
  };
  auto class_projective = [&]() -> Module {
    const ProjectiveData& pd = projective_data(alg);
    if (*d.class_index >= pd.classes())
      fail(ErrorKind::UnknownSymbol, d.pos.str() + ": projective class " + std::to_string(*d.class_index) + " out of range");
    return pd.projectives[*d.class_index];
  };
  Module m;
  switch (d.shape) {
    case ModuleShape::Regular: m = Module::regular(alg); break;
    case ModuleShape::Projective:
      if (d.class_index) {
        m = class_projective();
      } else {
        const Vec e = a.root->vertex_idempotent(vertex_of());
        m = submodule(Module::regular(alg), detail::left_ideal_of_idempotent(alg, e)).module;
      }
      break;
    case ModuleShape::Simple:
      if (d.class_index) {
        class_projective();
        m = projective_data(alg).simples[*d.class_index];
      } else {
        const Vec e = a.root->vertex_idempotent(vertex_of());
        m = top(submodule(Module::regular(alg), detail::left_ideal_of_idempotent(alg, e)).module).module;
      }
      break;
    case ModuleShape::Explicit: {
      std::vector<std::pair<Vec, Matrix>> given;
      std::optional<std::vector<std::size_t>> offsets;
      std::size_t dim = 0;
      if (d.vertexdims) {
        require(a.is_root(), ErrorKind::InvalidArgument, d.pos.str() + ": vertexdims needs a quiver algebra");
        const Quiver& q = a.root->presentation.quiver;
        require(d.vertexdims->size() == q.vertices.size(), ErrorKind::InvalidArgument,
                d.pos.str() + ": vertexdims needs one entry per vertex (" + std::to_string(q.vertices.size()) + ")");
        offsets.emplace();
        for (auto v : *d.vertexdims) {
          offsets->push_back(dim);
          dim += v;
        }
        require(!d.dim || *d.dim == dim, ErrorKind::InvalidArgument, d.pos.str() + ": dim disagrees with vertexdims");
        for (std::size_t v = 0; v < q.vertices.size(); ++v) {
          Matrix ev(field_, dim, dim);
          for (std::size_t k = 0; k < (*d.vertexdims)[v]; ++k) ev((*offsets)[v] + k, (*offsets)[v] + k) = 1;
          given.emplace_back(a.root->vertex_idempotent(v), std::move(ev));
        }
      } else {
        require(d.dim.has_value(), ErrorKind::InvalidArgument, d.pos.str() + ": module '" + d.name + "' needs 'dim'");
        dim = *d.dim;
      }
      for (const ActDecl& act : d.acts) {
        const Vec x = evaluate(a, act.symbol);
        // quiver form: a single arrow acts by its block e_t M -> e_s M
        const bool single_arrow = offsets && act.symbol.size() == 1 && act.symbol[0].factors.size() == 1 &&
                                  act.symbol[0].coef == 1 && a.root->presentation.quiver.find_arrow(act.symbol[0].factors[0]);
        if (single_arrow) {
          const Quiver& q = a.root->presentation.quiver;
          const Arrow& ar = q.arrows[*q.find_arrow(act.symbol[0].factors[0])];
          const std::size_t ds = (*d.vertexdims)[ar.source], dt = (*d.vertexdims)[ar.target];
          const Matrix block = to_matrix(act.matrix, dt, ds, act.pos);
          Matrix full(field_, dim, dim);
          for (std::size_t i = 0; i < dt; ++i)
            for (std::size_t j = 0; j < ds; ++j) full((*offsets)[ar.target] + i, (*offsets)[ar.source] + j) = block(i, j);
          given.emplace_back(x, std::move(full));
        } else {
          given.emplace_back(x, to_matrix(act.matrix, dim, dim, act.pos));
        }
      }
      if (offsets) {
        // quiver form: arrows without an 'act' line act by zero
        const Quiver& q = a.root->presentation.quiver;
        for (std::size_t k = 0; k < q.arrows.size(); ++k) {
          const bool stated = std::any_of(d.acts.begin(), d.acts.end(), [&](const ActDecl& act) {
            return act.symbol.size() == 1 && act.symbol[0].factors.size() == 1 && act.symbol[0].factors[0] == q.arrows[k].name;
          });
          if (!stated) given.emplace_back(a.root->arrow_element(k), Matrix(field_, dim, dim));
        }
      }
      try {
        m = module_from_actions(alg, dim, given);
      } catch (const Error& e) {
        fail(e.kind(), d.pos.str() + ": module '" + d.name + "': " + e.message());
      }
      break;
    }
  }
  modules_.push_back({d.name, d.algebra, std::move(m)});
}

/// Builds every declaration in order. The document's field line takes precedence over default_prime.
inline Workspace load_workspace(const Document& doc, Scalar default_prime = PrimeField::kDefaultPrime) {
  Workspace ws(PrimeField(doc.prime.value_or(default_prime)));
  for (const auto& [kind, idx] : doc.order) {
    switch (kind) {
      case DeclKind::Algebra: ws.add_algebra(doc.algebras[idx]); break;
      case DeclKind::Subalgebra: ws.add_subalgebra(doc.subalgebras[idx]); break;
      case DeclKind::Extension: ws.add_extension(doc.extensions[idx]); break;
      case DeclKind::Module: ws.add_module(doc.modules[idx]); break;
    }
  }
  return ws;
}

inline Workspace load_workspace(std::string_view text, Scalar default_prime = PrimeField::kDefaultPrime) {
  return load_workspace(parse_document(text), default_prime);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Presentation of the first algebra block of a document.
inline BoundQuiverPresentation parse_presentation(std::string_view text, Scalar default_prime = PrimeField::kDefaultPrime) {
  const Document doc = parse_document(text);
  require(!doc.algebras.empty(), ErrorKind::SyntaxError, "document declares no algebra");
  return presentation_of(doc.algebras.front(), PrimeField(doc.prime.value_or(default_prime)));
}

}  // namespace fdalg
