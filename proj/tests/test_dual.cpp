#include <doctest.h>

#include <random>
#include <set>

#include "koszuldual/corpus.hpp"
#include "koszuldual/dual.hpp"
#include "koszuldual/errors.hpp"
#include "koszuldual/graded.hpp"
#include "koszuldual/io.hpp"
#include "random_presentations.hpp"

using namespace koszuldual;

namespace {

QuadraticPresentation linear_a(int n, bool all_zero) {
  std::string text = "quiver A" + std::to_string(n) + "\nvertices:";
  for (int i = 1; i <= n; ++i) text += " " + std::to_string(i);
  text += "\narrows:";
  for (int i = 1; i < n; ++i)
    text += " a" + std::to_string(i) + ": " + std::to_string(i) + " -> " + std::to_string(i + 1) + ";";
  if (all_zero) {
    text += "\nrelations:";
    for (int i = 1; i + 1 < n; ++i) text += " a" + std::to_string(i) + "*a" + std::to_string(i + 1) + ";";
  }
  return parse(text + "\n");
}

std::set<std::string> relation_strings(const QuadraticPresentation& a) {
  std::set<std::string> out;
  for (const auto& r : a.relations()) out.insert(combo_to_string(a.quiver(), r));
  return out;
}

}  // namespace

TEST_CASE("dual of the path algebra of A5 kills every length-2 path") {
  auto a = linear_a(5, false);
  auto d = dual(a);
  CHECK(d.relations().size() == 3);
  CHECK(d.quiver() == a.quiver().opposite());
  for (const auto& r : d.relations()) CHECK(r.is_monomial());
  CHECK(relation_strings(d) ==
        std::set<std::string>{"a2^op*a1^op", "a3^op*a2^op", "a4^op*a3^op"});
  // and back again
  CHECK(dual(linear_a(5, true)).relations().empty());
}

TEST_CASE("dual of the one-relation example") {
  auto d = dual(corpus_example("ex6"));
  CHECK(relation_strings(d) == std::set<std::string>{"theta^op*gamma^op", "alpha^op*theta^op"});
  CHECK(d.name() == "ex6^op");
}

TEST_CASE("commutativity relation dualizes to the anticommuting sum") {
  auto a = corpus_example("ex1");
  auto d = dual(a);
  const Quiver& q = d.quiver();
  int s = q.vertex_index("5"), t = q.vertex_index("2");
  ExactMatrix w = d.block_relations(s, t);
  REQUIRE(w.rows() == 1);
  REQUIRE(w.cols() == 2);
  CHECK(w.at(0, 0) == w.at(0, 1));
  // alpha*alpha' and beta'*delta are free in A, so their reversals become relations
  CHECK(d.relations().size() == 1 + 2);
}

TEST_CASE("reversal bijection pairs every length-2 path") {
  auto a = corpus_example("ex1");
  auto r = dual_with_reversal(a);
  std::size_t total = 0;
  for (auto [s, t] : a.blocks()) total += a.block_paths(s, t).size();
  CHECK(r.reversal.size() == total);
  const Quiver& q = a.quiver();
  const Quiver& qo = r.presentation.quiver();
  for (const auto& [p, rev] : r.reversal) {
    CHECK(qo.vertex(rev.source) == q.vertex(p.target));
    CHECK(qo.vertex(rev.target) == q.vertex(p.source));
    CHECK(qo.arrow(rev.arrows[0]).id == op_id(q.arrow(p.arrows[1]).id));
    CHECK(qo.arrow(rev.arrows[1]).id == op_id(q.arrow(p.arrows[0]).id));
  }
}

TEST_CASE("double dual recovers the presentation") {
  std::mt19937 rng(11);
  for (Field f : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
    for (int t = 0; t < 60; ++t) {
      auto a = testgen::random_presentation(rng, f, 6, 0.5);
      auto rep = double_dual_isomorphic(a);
      CHECK(rep.isomorphic);
      CHECK(dual(dual(a)) == a);
      for (const auto& [k, v] : rep.arrow_map) CHECK(k == v);
    }
  }
}

TEST_CASE("dimensions of I and its dual are complementary in each block") {
  std::mt19937 rng(12);
  for (int t = 0; t < 80; ++t) {
    auto a = testgen::random_presentation(rng, Field::rationals(), 6, 0.6);
    auto d = dual(a);
    for (auto [s, u] : a.blocks()) {
      std::size_t n = a.block_paths(s, u).size();
      int ds = d.quiver().vertex_index(a.quiver().vertex(u));
      int du = d.quiver().vertex_index(a.quiver().vertex(s));
      CHECK(a.block_relations(s, u).rows() + d.block_relations(ds, du).rows() == n);
    }
  }
}

TEST_CASE("monomial presentations have monomial duals") {
  std::mt19937 rng(13);
  for (int t = 0; t < 60; ++t) {
    auto a = testgen::random_monomial(rng, 7, false, false);
    auto d = dual(a);
    CHECK(d.is_monomial());
    // a*b in I exactly when b^op*a^op is free in the dual
    const Quiver& q = a.quiver();
    const Quiver& qo = d.quiver();
    for (int x = 0; x < q.num_arrows(); ++x)
      for (int y : q.out_arrows(q.target(x))) {
        int xo = qo.arrow_index(op_id(q.arrow(x).id));
        int yo = qo.arrow_index(op_id(q.arrow(y).id));
        CHECK(a.in_ideal(x, y) != d.in_ideal(yo, xo));
      }
  }
}

TEST_CASE("dual respects the field") {
  auto a = parse(
      "quiver sq\nfield: GF(3)\nvertices: 1 2 3 4\narrows: a: 1 -> 2; b: 2 -> 4; c: 1 -> 3; d: 3 -> 4\n"
      "relations: a*b + c*d\n");
  auto d = dual(a);
  CHECK(d.field() == Field::prime(3));
  REQUIRE(d.relations().size() == 1);
  // complement of (1,1) over GF(3) is (1,-1) = (1,2)
  CHECK(d.relations()[0].terms.size() == 2);
  CHECK(d.relations()[0].terms[1].coef == Scalar::from_int(Field::prime(3), 2));
}

TEST_CASE("finite dimensionality") {
  auto ex5 = corpus_example("ex5");
  auto fd = is_finite_dimensional(dual(ex5));
  CHECK(fd.verdict == Finiteness::Infinite);
  CHECK(fd.witness_cycle.size() == 2);
  CHECK(std::set<std::string>(fd.witness_cycle.begin(), fd.witness_cycle.end()) ==
        std::set<std::string>{"alpha^op", "beta^op"});

  auto a5 = is_finite_dimensional(linear_a(5, false));
  CHECK(a5.verdict == Finiteness::Finite);
  CHECK(a5.dims == std::vector<int>{5, 4, 3, 2, 1});

  auto sq = is_finite_dimensional(corpus_example("ex1"));
  CHECK(sq.verdict == Finiteness::Finite);
  CHECK(sq.dims.size() >= 3);
  CHECK(sq.dims[0] == 6);
  CHECK(sq.dims[1] == 6);

  // a loop with a non-monomial relation whose growth is never seen to stop
  auto loop = parse("quiver l\nvertices: 1\narrows: x: 1 -> 1; y: 1 -> 1\nrelations: x*y - y*x\n");
  auto lr = is_finite_dimensional(loop, 6);
  CHECK(lr.verdict == Finiteness::Unknown);
  CHECK(lr.dims == std::vector<int>{1, 2, 3, 4, 5, 6, 7});

  auto nil = parse("quiver n\nvertices: 1\narrows: x: 1 -> 1\nrelations: x*x\n");
  CHECK(is_finite_dimensional(nil).verdict == Finiteness::Finite);
  auto free_loop = parse("quiver n\nvertices: 1\narrows: x: 1 -> 1\n");
  auto fl = is_finite_dimensional(free_loop);
  CHECK(fl.verdict == Finiteness::Infinite);
  CHECK(fl.witness_cycle == std::vector<std::string>{"x"});
}

TEST_CASE("monomial finiteness agrees with the degree table") {
  std::mt19937 rng(14);
  for (int t = 0; t < 60; ++t) {
    auto a = testgen::random_monomial(rng, 5, false, false);
    auto fd = is_finite_dimensional(a);
    REQUIRE(fd.verdict != Finiteness::Unknown);
    // with at most 5 vertices a nilpotent monomial algebra dies by degree #arrows+1
    int bound = a.quiver().num_arrows() + 1;
    auto dims = GradedTable(a, bound).dims();
    if (fd.verdict == Finiteness::Finite) {
      CHECK(dims.back() == 0);
      for (std::size_t d = 0; d < fd.dims.size(); ++d) CHECK(fd.dims[d] == dims[d]);
    } else {
      CHECK(dims.back() > 0);
    }
  }
}
