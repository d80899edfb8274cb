#include <doctest.h>

#include <algorithm>
#include <random>

#include "koszuldual/corpus.hpp"
#include "koszuldual/errors.hpp"
#include "koszuldual/io.hpp"
#include "random_presentations.hpp"

using namespace koszuldual;

namespace {

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

ErrorKind kind_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("parse accepted bad input: " << text);
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("smallest bound A3") {
  auto a = parse("vertices: 1 2 3\narrows: a: 1->2; b: 2->3\nrelations: a*b");
  CHECK(a.quiver().num_vertices() == 3);
  CHECK(a.relations().size() == 1);
  CHECK(a.field().is_rational());
}

TEST_CASE("example 6 document parses with one relation") {
  auto a = corpus_example("ex6");
  CHECK(a.quiver().num_vertices() == 5);
  CHECK(a.quiver().num_arrows() == 4);
  CHECK(a.relations().size() == 1);
  CHECK(a.name() == "ex6");
}

TEST_CASE("semantic and syntax errors") {
  CHECK(kind_of("vertices: 1 2 3\narrows: a: 1->2; c: 1->3\nrelations: a*c") == ErrorKind::SemanticError);
  CHECK(kind_of("vertices: 1 2\narrows: a: 1->2\nrelations: a*z") == ErrorKind::SemanticError);
  CHECK(kind_of("vertices: 1 2\narrows: a: 1->3") == ErrorKind::SemanticError);
  CHECK(kind_of("vertices: 1 2 3\narrows: a: 1->2; b: 2->3\nrelations: a") == ErrorKind::SemanticError);
  CHECK(kind_of("vertices: 1 2 3 4\narrows: a: 1->2; b: 2->3; c: 2->4\nrelations: a*b + a*c") ==
        ErrorKind::SemanticError);
  CHECK(kind_of("vertices: 1 2\narrows: a 1->2") == ErrorKind::SyntaxError);
  CHECK(kind_of("vertex: 1 2") == ErrorKind::SyntaxError);
  CHECK(kind_of("field: R\nvertices: 1") == ErrorKind::SyntaxError);
  CHECK(kind_of("field: GF(8)\nvertices: 1") == ErrorKind::SemanticError);
  CHECK(kind_of("field: GF(5)\nvertices: 1 2 3\narrows: a: 1->2; b: 2->3\nrelations: 1/5 a*b") ==
        ErrorKind::SemanticError);
}

TEST_CASE("errors carry line and column") {
  try {
    parse("vertices: 1 2\narrows: a: 1->2;\n  b 2->1");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("coefficients, fractions and prime fields") {
  auto a = parse(
      "field: GF(7)\nvertices: 1 2 3 4\narrows: a: 1->2; b: 2->4; c: 1->3; d: 3->4\n"
      "relations: 2 a*b - 1/2 c*d");
  REQUIRE(a.relations().size() == 1);
  // normalized to a*b + k c*d with k = -(1/2)/2 = -1/4 = 5 in GF(7)
  CHECK(a.relations()[0].terms[1].coef.to_string() == "5");

  auto q = parse("vertices: 1 2 3 4\narrows: a: 1->2; b: 2->4; c: 1->3; d: 3->4\nrelations: 3*a*b + 3/2 c*d");
  CHECK(q.relations()[0].terms[1].coef.to_string() == "1/2");
}

TEST_CASE("declaration order does not matter") {
  auto a = parse("vertices: 3 1 2\narrows: b: 2->3; a: 1->2\nrelations: a*b");
  auto b = parse("arrows: a: 1->2\nvertices: 1 2 3\narrows: b: 2->3\nrelations: a * b ;");
  CHECK(a == b);
}

TEST_CASE("bracketed and primed names round trip") {
  auto a = parse(
      "quiver cover\nvertices: 1[0] 1[-1] 2[0]\narrows: a[0]: 1[0]->2[0]; b'^op: 2[0] -> 1[-1]\n"
      "relations: a[0]*b'^op");
  CHECK(a.quiver().arrow_index("b'^op") >= 0);
  CHECK(parse(serialize(a)) == a);
}

TEST_CASE("round trip over the corpus and random presentations") {
  for (const auto& e : bundled_corpus()) {
    auto a = parse(e.text);
    auto b = parse(serialize(a));
    CHECK(a == b);
    CHECK(a.name() == b.name());
    CHECK(serialize(a) == serialize(b));
  }
  std::mt19937 rng(21);
  for (int t = 0; t < 100; ++t) {
    Field f = t % 2 ? Field::prime(7) : Field::rationals();
    auto a = testgen::random_presentation(rng, f, 8, 0.5);
    CHECK(parse(serialize(a)) == a);
  }
}

TEST_CASE("dot export") {
  auto one = parse("vertices: 1 2\narrows: a: 1->2");
  auto d = to_dot(one);
  CHECK(d.rfind("digraph", 0) == 0);
  CHECK(count(d, "->") == 1);
  CHECK(count(d, "dashed") == 0);

  auto ex4 = corpus_example("ex4");
  auto d4 = to_dot(ex4);
  CHECK(count(d4, "[label=") == 8);
  // one chord per relation of the reconstructed file (alpha*beta was added)
  CHECK(count(d4, "dashed") == 3);
  CHECK(count(d4, "->") == 11);
  CHECK(count(d4, ";\n") - count(d4, "->") - 1 == 8);  // node statements (rankdir is the extra one)

  auto h = parse("vertices: 1 2 3\narrows: a: 1->2; b: 2->3");
  CHECK(count(to_dot(h), "dashed") == 0);
}
