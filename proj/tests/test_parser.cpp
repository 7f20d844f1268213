// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <string>

#include "support.hpp"

using namespace fdalg;
using fdalg::testing::error_kind_of;
using fdalg::testing::load_data;

namespace {

std::string message_of(const std::string& text) {
  try {
    load_workspace(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

bool mentions(const std::string& msg, const std::string& needle) { return msg.find(needle) != std::string::npos; }

}  // namespace

TEST(Lexer, SyntaxErrorsCarryLineAndColumn) {
  const std::string bad = "algebra A\nvertex 1 2\narrow a 1 -> 2\n";
  EXPECT_EQ(error_kind_of([&] { parse_document(bad); }), ErrorKind::SyntaxError);
  EXPECT_TRUE(mentions(message_of(bad), "3:9:")) << message_of(bad);

  const std::string unknown = "algebra A\nvertex 1\nfrobnicate 3\n";
  EXPECT_TRUE(mentions(message_of(unknown), "3:1:")) << message_of(unknown);
  EXPECT_TRUE(mentions(message_of(unknown), "frobnicate"));
}

TEST(Lexer, ColumnsCountCodePoints) {
  // 'λ' is two bytes; the stray token starts at code point 18 and byte 19
  const std::string text = "algebra A\nvertex 1\narrow λ : 1 -> 1 zz\n";
  EXPECT_TRUE(mentions(message_of(text), "3:18:")) << message_of(text);
}

TEST(Lexer, CommentsAndBracketedNewlines) {
  const std::string text =
      "# leading comment\n"
      "algebra L   # trailing comment\n"
      "vertex 1\n"
      "arrow x : 1 -> 1\n"
      "rel x*x = 0\n"
      "nilpotency 2\n"
      "module M over L\n"
      "dim 2\n"
      "act x = [[0, 1],\n"
      "         [0, 0]]\n";
  Workspace ws = load_workspace(text);
  EXPECT_EQ(ws.module("M").module.dim(), 2u);
}

TEST(Parser, FieldLineOverridesDefault) {
  Workspace ws = load_workspace("field gfp 7\nalgebra A\nvertex 1\n", 32003);
  EXPECT_EQ(ws.field().p(), 7u);
  Workspace ws2 = load_workspace("algebra A\nvertex 1\n", 11);
  EXPECT_EQ(ws2.field().p(), 11u);
}

TEST(Parser, RelationWithRightHandSide) {
  // a*b = c*d identifies the two length-2 paths of the commutative square
  const std::string text =
      "algebra Sq\nvertex 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\n"
      "rel a*b = c*d\n";
  Workspace ws = load_workspace(text);
  EXPECT_EQ(ws.algebra("Sq").algebra.dim(), 4u + 4u + 1u);
}

TEST(Parser, UnicodeIdentifiers) {
  Workspace ws = load_data("example1.fdq");
  EXPECT_EQ(ws.algebra("A").algebra.dim(), 20u);
  EXPECT_TRUE(ws.has_extension("ιCA"));
  EXPECT_EQ(ws.extension("ιCA").source, "C");
}

TEST(Parser, UnknownSymbols) {
  EXPECT_EQ(error_kind_of([] { load_workspace("algebra A\nvertex 1\narrow a : 1 -> 9\n"); }), ErrorKind::UnknownSymbol);
  EXPECT_EQ(error_kind_of([] { load_workspace("algebra A\nvertex 1 2\narrow a : 1 -> 2\nrel a*q = 0\n"); }),
            ErrorKind::UnknownSymbol);
  EXPECT_EQ(error_kind_of([] { load_workspace("algebra A\nvertex 1\nmodule M over Z simple 1\n"); }),
            ErrorKind::UnknownSymbol);
  EXPECT_EQ(error_kind_of([] { load_workspace("algebra A\nvertex 1\nmodule M over A simple 4\n"); }),
            ErrorKind::UnknownSymbol);
}

TEST(Parser, NonComposableGenerator) {
  const std::string text = "algebra A\nvertex 1 2 3\narrow a : 1 -> 2\narrow b : 3 -> 2\nsubalgebra B of A generated by a*b\n";
  EXPECT_EQ(error_kind_of([&] { load_workspace(text); }), ErrorKind::NonComposablePath);
}

TEST(Parser, GeneratorSumsNeedNotSplit) {
  // e2 alone is not in B but e2 + e3 is
  const std::string text =
      "algebra A\nvertex 1 2 3\narrow a : 1 -> 2\nsubalgebra B of A generated by e1, e2+e3, a\n"
      "subalgebra C of B generated by e1, e2+e3\n";
  Workspace ws = load_workspace(text);
  EXPECT_EQ(ws.algebra("B").algebra.dim(), 3u);
  EXPECT_EQ(ws.algebra("C").algebra.dim(), 2u);
  const std::string bad = "algebra A\nvertex 1 2 3\narrow a : 1 -> 2\nsubalgebra B of A generated by e1, e2+e3\n"
                          "subalgebra C of B generated by e2\n";
  EXPECT_EQ(error_kind_of([&] { load_workspace(bad); }), ErrorKind::InvalidArgument);
}

TEST(Modules, ShorthandShapes) {
  Workspace ws = load_data("a2.fdq");
  // left modules over 1 -> 2 with paths composed left to right: A e2 = span{e2, a}
  EXPECT_EQ(ws.module("S1").module.dim(), 1u);
  EXPECT_EQ(ws.module("S2").module.dim(), 1u);
  EXPECT_EQ(ws.module("P1").module.dim(), 1u);
  EXPECT_EQ(ws.module("P2").module.dim(), 2u);
  for (const char* name : {"S1", "S2", "P1", "P2"}) EXPECT_TRUE(ws.module(name).module.satisfies_axioms()) << name;
}

TEST(Modules, QuiverFormBlocks) {
  // the arrow a : 1 -> 2 maps the vertex-2 part onto the vertex-1 part
  const std::string text =
      "algebra A2\nvertex 1 2\narrow a : 1 -> 2\n"
      "module M over A2\nvertexdims 1 1\nact a = [[1]]\n"
      "module Z over A2\nvertexdims 1 1\n"
      "module W over A2\nvertexdims 2 1\nact a = [[1, 0]]\n";
  Workspace ws = load_workspace(text);
  const Module& m = ws.module("M").module;
  EXPECT_EQ(m.dim(), 2u);
  EXPECT_EQ(radical_layers(m), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(radical_layers(ws.module("Z").module), (std::vector<std::size_t>{2}));
  const Module& w = ws.module("W").module;
  EXPECT_EQ(w.dim(), 3u);
  EXPECT_EQ(radical_of_module(w).dim(), 1u);
}

TEST(Modules, WrongBlockShapeIsRejected) {
  const std::string text = "algebra A2\nvertex 1 2\narrow a : 1 -> 2\nmodule W over A2\nvertexdims 2 1\nact a = [[1], [0]]\n";
  EXPECT_EQ(error_kind_of([&] { load_workspace(text); }), ErrorKind::InvalidArgument);
}

TEST(Modules, RelationViolationsAreRejected) {
  const std::string ok = "algebra L\nvertex 1\narrow x : 1 -> 1\nrel x*x = 0\nnilpotency 2\n"
                         "module M over L\ndim 2\nact x = [[0, 1], [0, 0]]\n";
  EXPECT_TRUE(load_workspace(ok).module("M").module.satisfies_axioms());
  const std::string bad = "algebra L\nvertex 1\narrow x : 1 -> 1\nrel x*x = 0\nnilpotency 2\n"
                          "module M over L\ndim 2\nact x = [[1, 0], [0, 0]]\n";
  EXPECT_EQ(error_kind_of([&] { load_workspace(bad); }), ErrorKind::InvalidArgument);
}

TEST(Modules, SubalgebraModulesByGenerators) {
  // over B = span{1, a} inside A2 the element a squares to zero
  const std::string text =
      "algebra A2\nvertex 1 2\narrow a : 1 -> 2\nsubalgebra B of A2 generated by e1+e2, a\n"
      "module M over B\ndim 2\nact a = [[0, 1], [0, 0]]\n";
  Workspace ws = load_workspace(text);
  EXPECT_EQ(ws.algebra("B").algebra.dim(), 2u);
  EXPECT_TRUE(ws.module("M").module.satisfies_axioms());
  const std::string quiver_form = "algebra A2\nvertex 1 2\narrow a : 1 -> 2\nsubalgebra B of A2 generated by e1+e2, a\n"
                                  "module M over B\nvertexdims 1 1\n";
  EXPECT_EQ(error_kind_of([&] { load_workspace(quiver_form); }), ErrorKind::InvalidArgument);
}

TEST(Extensions, Kinds) {
  Workspace ws = load_data("loop.fdq");
  EXPECT_EQ(ws.extension("u").map.source.dim(), 1u);
  EXPECT_TRUE(check_morphism(ws.extension("u").map));
  EXPECT_TRUE(check_morphism(ws.extension("id").map));
  EXPECT_EQ(error_kind_of([] { load_workspace("algebra A\nvertex 1\nalgebra B\nvertex 1\nextension x : A -> B inclusion\n"); }),
            ErrorKind::AlgebraMismatch);
  EXPECT_EQ(error_kind_of([] { load_workspace("algebra A\nvertex 1 2\nextension x : A -> A matrix [[1, 0], [0, 0]]\n"); }),
            ErrorKind::InvalidArgument);
  Workspace m = load_workspace("algebra A\nvertex 1 2\nextension s : A -> A matrix [[0, 1], [1, 0]]\n");
  EXPECT_TRUE(check_morphism(m.extension("s").map));
}
