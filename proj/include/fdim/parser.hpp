// SPDX-License-Identifier: Apache-2.0
//
// Line-oriented input language for algebras, subalgebras, extensions and modules.
//
//   algebra <name>                      field gfp <p>
//   vertex <id> [<id> ...]              arrow <name> : <src> -> <tgt>
//   rel <expr> [= <expr>]               nilpotency <t>
//   subalgebra <name> of <parent> generated by <expr> [, <expr> ...]
//   extension <name> : <B> -> <A> inclusion | identity | ground | matrix <matrix>
//   module <name> over <algebra> [simple <v> | projective <v> | regular]
//   dim <n>   vertexdims <d1> ...   act <expr> = <matrix>
//
// An <expr> is a signed sum of terms c*x1*...*xk where each xi is an arrow name or an idempotent e<vertex>;
// "[k]" names basis element k. Matrices are nested bracket lists and may span lines. '#' starts a comment.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdim/error.hpp"

namespace fdalg {

struct SourcePos {
  std::size_t line = 0;
  std::size_t col = 0;
  std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

struct Term {
  long long coef = 1;
  std::vector<std::string> factors;  // empty means a scalar multiple of the identity
  std::optional<std::size_t> basis_index;
  SourcePos pos;
};
using Expr = std::vector<Term>;

using IntMatrix = std::vector<std::vector<long long>>;

struct ArrowDecl {
  std::string name, source, target;
  SourcePos pos;
};

struct RelationDecl {
  Expr expr;  // lhs - rhs
  SourcePos pos;
};

struct AlgebraDecl {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<SourcePos> vertex_pos;
  std::vector<ArrowDecl> arrows;
  std::vector<RelationDecl> relations;
  std::optional<std::size_t> nilpotency;
  SourcePos pos;
};

struct SubalgebraDecl {
  std::string name, parent;
  std::vector<Expr> generators;
  SourcePos pos;
};

enum class ExtensionKind { Inclusion, Identity, Ground, Matrix };

struct ExtensionDecl {
  std::string name, source, target;
  ExtensionKind kind = ExtensionKind::Inclusion;
  IntMatrix matrix;
  SourcePos pos;
};

struct ActDecl {
  Expr symbol;
  IntMatrix matrix;
  SourcePos pos;
};

enum class ModuleShape { Explicit, Simple, Projective, Regular };

struct ModuleDecl {
  std::string name, algebra;
  ModuleShape shape = ModuleShape::Explicit;
  std::string vertex;                    // for Simple / Projective
  std::optional<std::size_t> class_index;  // "[k]" form for Simple / Projective
  std::optional<std::size_t> dim;
  std::optional<std::vector<std::size_t>> vertexdims;
  std::vector<ActDecl> acts;
  SourcePos pos;
};

enum class DeclKind { Algebra, Subalgebra, Extension, Module };

struct Document {
  std::optional<std::uint32_t> prime;
  std::vector<AlgebraDecl> algebras;
  std::vector<SubalgebraDecl> subalgebras;
  std::vector<ExtensionDecl> extensions;
  std::vector<ModuleDecl> modules;
  std::vector<std::pair<DeclKind, std::size_t>> order;  // declaration order across kinds
};

namespace detail {

enum class Tok { Word, Colon, Arrow, Star, Plus, Minus, Equals, Comma, LBracket, RBracket, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

inline bool is_word_byte(unsigned char c) { return c >= 0x80 || std::isalnum(c) || c == '_' || c == '\''; }

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, depth = 0;
  auto err = [&](const std::string& m) { fail(ErrorKind::SyntaxError, std::to_string(line) + ":" + std::to_string(col) + ": " + m); };
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i)
      if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) ++col;  // count code points
  };
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    const SourcePos pos{line, col};
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      if (depth == 0 && !out.empty() && out.back().kind != Tok::Newline) out.push_back({Tok::Newline, "", pos});
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", pos});
      advance(2);
      continue;
    }
    if (c == 0xE2 && src.substr(i, 3) == "\xE2\x86\x92") {  // U+2192
      out.push_back({Tok::Arrow, "->", pos});
      advance(3);
      continue;
    }
    Tok k = Tok::End;
    switch (c) {
      case ':': k = Tok::Colon; break;
      case '*': k = Tok::Star; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '=': k = Tok::Equals; break;
      case ',': k = Tok::Comma; break;
      case '[': k = Tok::LBracket; ++depth; break;
      case ']':
        if (depth == 0) err("unbalanced ']'");
        k = Tok::RBracket;
        --depth;
        break;
      default: break;
    }
    if (k != Tok::End) {
      out.push_back({k, std::string(1, static_cast<char>(c)), pos});
      advance(1);
      continue;
    }
    if (!is_word_byte(c)) err(std::string("unexpected character '") + static_cast<char>(c) + "'");
    std::size_t j = i;
    while (j < src.size() && is_word_byte(static_cast<unsigned char>(src[j]))) ++j;
    out.push_back({Tok::Word, std::string(src.substr(i, j - i)), pos});
    advance(j - i);
  }
  if (depth) err("unterminated '['");
  if (!out.empty() && out.back().kind != Tok::Newline) out.push_back({Tok::Newline, "", {line, col}});
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

inline bool is_integer(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Document run() {
    Document doc;
    while (peek().kind != Tok::End) {
      if (peek().kind == Tok::Newline) {
        ++k_;
        continue;
      }
      const Token kw = expect_word("a statement keyword");
      const std::string& w = kw.text;
      if (w == "algebra") {
        AlgebraDecl a;
        a.pos = kw.pos;
        a.name = expect_word("algebra name").text;
        doc.order.emplace_back(DeclKind::Algebra, doc.algebras.size());
        doc.algebras.push_back(std::move(a));
        context_ = Context::Algebra;
      } else if (w == "field") {
        const Token g = expect_word("'gfp'");
        if (g.text != "gfp") error(g.pos, "expected 'gfp', found '" + g.text + "'");
        const Token p = expect_word("prime");
        if (!is_integer(p.text) || p.text.size() > 9) error(p.pos, "expected a prime, found '" + p.text + "'");
        doc.prime = static_cast<std::uint32_t>(std::stoul(p.text));
      } else if (w == "vertex") {
        AlgebraDecl& a = current_algebra(doc, kw);
        while (peek().kind == Tok::Word) {
          const Token v = next();
          a.vertices.push_back(v.text);
          a.vertex_pos.push_back(v.pos);
        }
        if (a.vertices.empty()) error(kw.pos, "vertex statement without identifiers");
      } else if (w == "arrow") {
        AlgebraDecl& a = current_algebra(doc, kw);
        ArrowDecl ar;
        ar.pos = kw.pos;
        const Token n = expect_word("arrow name");
        if (is_integer(n.text)) error(n.pos, "arrow names must not be numerals");
        ar.name = n.text;
        expect(Tok::Colon, "':'");
        ar.source = expect_word("source vertex").text;
        expect(Tok::Arrow, "'->'");
        ar.target = expect_word("target vertex").text;
        a.arrows.push_back(std::move(ar));
      } else if (w == "rel") {
        AlgebraDecl& a = current_algebra(doc, kw);
        RelationDecl r;
        r.pos = kw.pos;
        r.expr = parse_expr();
        expect(Tok::Equals, "'='");
        Expr rhs = parse_expr();
        for (Term& t : rhs) {
          t.coef = -t.coef;
          r.expr.push_back(std::move(t));
        }
        a.relations.push_back(std::move(r));
      } else if (w == "nilpotency") {
        AlgebraDecl& a = current_algebra(doc, kw);
        const Token t = expect_word("nilpotency bound");
        if (!is_integer(t.text)) error(t.pos, "expected an integer, found '" + t.text + "'");
        a.nilpotency = std::stoul(t.text);
      } else if (w == "subalgebra") {
        SubalgebraDecl s;
        s.pos = kw.pos;
        s.name = expect_word("subalgebra name").text;
        expect_keyword("of");
        s.parent = expect_word("parent algebra").text;
        expect_keyword("generated");
        expect_keyword("by");
        s.generators.push_back(parse_expr());
        while (peek().kind == Tok::Comma) {
          ++k_;
          s.generators.push_back(parse_expr());
        }
        doc.order.emplace_back(DeclKind::Subalgebra, doc.subalgebras.size());
        doc.subalgebras.push_back(std::move(s));
        context_ = Context::None;
      } else if (w == "extension") {
        ExtensionDecl e;
        e.pos = kw.pos;
        e.name = expect_word("extension name").text;
        expect(Tok::Colon, "':'");
        e.source = expect_word("source algebra").text;
        expect(Tok::Arrow, "'->'");
        e.target = expect_word("target algebra").text;
        const Token kind = expect_word("extension kind");
        if (kind.text == "inclusion") e.kind = ExtensionKind::Inclusion;
        else if (kind.text == "identity") e.kind = ExtensionKind::Identity;
        else if (kind.text == "ground") e.kind = ExtensionKind::Ground;
        else if (kind.text == "matrix") {
          e.kind = ExtensionKind::Matrix;
          e.matrix = parse_matrix();
        } else
          error(kind.pos, "unknown extension kind '" + kind.text + "'");
        doc.order.emplace_back(DeclKind::Extension, doc.extensions.size());
        doc.extensions.push_back(std::move(e));
        context_ = Context::None;
      } else if (w == "module") {
        ModuleDecl m;
        m.pos = kw.pos;
        m.name = expect_word("module name").text;
        expect_keyword("over");
        m.algebra = expect_word("algebra name").text;
        if (peek().kind == Tok::Word) {
          const Token s = next();
          if (s.text == "regular") {
            m.shape = ModuleShape::Regular;
          } else if (s.text == "simple" || s.text == "projective") {
            m.shape = s.text == "simple" ? ModuleShape::Simple : ModuleShape::Projective;
            if (peek().kind == Tok::LBracket) {
              m.class_index = parse_index();
            } else {
              m.vertex = expect_word("vertex").text;
            }
          } else {
            error(s.pos, "expected 'simple', 'projective' or 'regular', found '" + s.text + "'");
          }
        }
        doc.order.emplace_back(DeclKind::Module, doc.modules.size());
        doc.modules.push_back(std::move(m));
        context_ = Context::Module;
      } else if (w == "dim") {
        ModuleDecl& m = current_module(doc, kw);
        const Token t = expect_word("dimension");
        if (!is_integer(t.text)) error(t.pos, "expected an integer, found '" + t.text + "'");
        m.dim = std::stoul(t.text);
      } else if (w == "vertexdims") {
        ModuleDecl& m = current_module(doc, kw);
        std::vector<std::size_t> d;
        while (peek().kind == Tok::Word) {
          const Token t = next();
          if (!is_integer(t.text)) error(t.pos, "expected an integer, found '" + t.text + "'");
          d.push_back(std::stoul(t.text));
        }
        m.vertexdims = std::move(d);
      } else if (w == "act") {
        ModuleDecl& m = current_module(doc, kw);
        ActDecl a;
        a.pos = peek().pos;
        a.symbol = parse_expr();
        expect(Tok::Equals, "'='");
        a.matrix = parse_matrix();
        m.acts.push_back(std::move(a));
      } else {
        error(kw.pos, "unknown statement '" + w + "'");
      }
      if (peek().kind != Tok::Newline && peek().kind != Tok::End)
        error(peek().pos, "unexpected '" + peek().text + "' at end of statement");
    }
    return doc;
  }

 private:
  enum class Context { None, Algebra, Module };

  std::vector<Token> toks_;
  std::size_t k_ = 0;
  Context context_ = Context::None;

  [[noreturn]] static void error(const SourcePos& p, const std::string& m) { fail(ErrorKind::SyntaxError, p.str() + ": " + m); }

  const Token& peek() const { return toks_[k_]; }
  Token next() { return toks_[k_++]; }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) error(peek().pos, "expected " + what + ", found " + describe(peek()));
    return next();
  }
  Token expect_word(const std::string& what) { return expect(Tok::Word, what); }
  void expect_keyword(const std::string& w) {
    const Token t = expect_word("'" + w + "'");
    if (t.text != w) error(t.pos, "expected '" + w + "', found '" + t.text + "'");
  }
  static std::string describe(const Token& t) {
    if (t.kind == Tok::Newline) return "end of line";
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

  AlgebraDecl& current_algebra(Document& doc, const Token& kw) {
    if (context_ != Context::Algebra) error(kw.pos, "'" + kw.text + "' outside an algebra block");
    return doc.algebras.back();
  }
  ModuleDecl& current_module(Document& doc, const Token& kw) {
    if (context_ != Context::Module) error(kw.pos, "'" + kw.text + "' outside a module block");
    return doc.modules.back();
  }

  std::size_t parse_index() {
    expect(Tok::LBracket, "'['");
    const Token t = expect_word("index");
    if (!is_integer(t.text)) error(t.pos, "expected an index, found '" + t.text + "'");
    expect(Tok::RBracket, "']'");
    return std::stoul(t.text);
  }

  Term parse_term(bool negative) {
    Term t;
    t.pos = peek().pos;
    t.coef = negative ? -1 : 1;
    bool any = false;
    for (;;) {
      if (peek().kind == Tok::LBracket) {
        if (t.basis_index || !t.factors.empty()) error(peek().pos, "basis index must be the only factor");
        t.basis_index = parse_index();
      } else {
        const Token w = expect_word("a path, idempotent or coefficient");
        if (is_integer(w.text)) {
          if (!t.factors.empty() || t.basis_index) error(w.pos, "coefficients must precede path factors");
          if (w.text.size() > 18) error(w.pos, "coefficient too large");
          t.coef *= std::stoll(w.text);
        } else {
          if (t.basis_index) error(w.pos, "basis index must be the only factor");
          t.factors.push_back(w.text);
        }
      }
      any = true;
      if (peek().kind != Tok::Star) break;
      ++k_;
    }
    if (!any) error(t.pos, "empty term");
    return t;
  }

  Expr parse_expr() {
    Expr e;
    bool negative = false;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) negative = next().kind == Tok::Minus;
    e.push_back(parse_term(negative));
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      negative = next().kind == Tok::Minus;
      e.push_back(parse_term(negative));
    }
    return e;
  }

 public:
  std::vector<Expr> expr_list() {
    std::vector<Expr> out{parse_expr()};
    while (peek().kind == Tok::Comma) {
      ++k_;
      out.push_back(parse_expr());
    }
    while (peek().kind == Tok::Newline) ++k_;
    if (peek().kind != Tok::End) error(peek().pos, "unexpected '" + peek().text + "' after expression");
    return out;
  }

 private:
  long long parse_entry() {
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      ++k_;
      negative = true;
    }
    const Token t = expect_word("matrix entry");
    if (!is_integer(t.text) || t.text.size() > 18) error(t.pos, "expected an integer entry, found '" + t.text + "'");
    const long long v = std::stoll(t.text);
    return negative ? -v : v;
  }

  IntMatrix parse_matrix() {
    IntMatrix m;
    const SourcePos start = peek().pos;
    expect(Tok::LBracket, "'['");
    if (peek().kind == Tok::RBracket) {
      ++k_;
      return m;
    }
    for (;;) {
      std::vector<long long> row;
      expect(Tok::LBracket, "'[' opening a matrix row");
      if (peek().kind != Tok::RBracket) {
        row.push_back(parse_entry());
        while (peek().kind == Tok::Comma) {
          ++k_;
          row.push_back(parse_entry());
        }
      }
      expect(Tok::RBracket, "']' closing a matrix row");
      if (!m.empty() && row.size() != m.front().size()) error(start, "ragged matrix rows");
      m.push_back(std::move(row));
      if (peek().kind != Tok::Comma) break;
      ++k_;
    }
    expect(Tok::RBracket, "']' closing the matrix");
    return m;
  }
};

}  // namespace detail

/// Parses a document; throws SyntaxError with line:col on malformed input.
inline Document parse_document(std::string_view text) { return detail::Parser(text).run(); }

/// Parses a comma-separated list of algebra expressions such as "e1, a*b - c".
inline std::vector<Expr> parse_expression_list(std::string_view text) { return detail::Parser(text).expr_list(); }

}  // namespace fdalg
