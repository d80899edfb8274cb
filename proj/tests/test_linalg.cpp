#include <doctest.h>

#include <random>

#include "koszuldual/matrix.hpp"

using namespace koszuldual;

namespace {

ExactMatrix random_matrix(Field f, std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi,
                          double density = 0.6) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution nz(density);
  ExactMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (nz(rng)) m.at(i, j) = Scalar::from_int(f, val(rng));
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and GF(p)") {
  Field q = Field::rationals();
  Scalar half = Scalar::from_fraction(q, 1, 2);
  CHECK((half + half).is_one());
  CHECK((half * Scalar::from_int(q, 4)) == Scalar::from_int(q, 2));
  CHECK((-half).to_string() == "-1/2");

  Field f7 = Field::prime(7);
  Scalar three = Scalar::from_int(f7, 3);
  CHECK((three * three.inverse()).is_one());
  CHECK(Scalar::from_int(f7, -1).to_string() == "6");
  CHECK(Scalar::from_fraction(f7, 1, 2) == Scalar::from_int(f7, 4));
  CHECK_THROWS(Scalar::from_fraction(f7, 1, 7));
  CHECK_THROWS(Field::prime(8));
  CHECK_THROWS(three + half);
}

TEST_CASE("rref examples") {
  Field q = Field::rationals();
  auto id = ExactMatrix::identity(q, 3);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  auto dep = ExactMatrix::from_ints(q, {{1, 2}, {2, 4}});
  auto rd = rref(dep);
  CHECK(rd.rank() == 1);
  CHECK(rd.reduced == ExactMatrix::from_ints(q, {{1, 2}, {0, 0}}));
}

TEST_CASE("rref is idempotent on random 6x6 over GF(7)") {
  std::mt19937 rng(7);
  Field f7 = Field::prime(7);
  for (int t = 0; t < 50; ++t) {
    auto m = random_matrix(f7, rng, 6, 6, 0, 6);
    auto once = rref(m).reduced;
    CHECK(rref(once).reduced == once);
  }
}

TEST_CASE("parallel rref matches serial rref") {
  std::mt19937 rng(11);
  for (Field f : {Field::rationals(), Field::prime(7), Field::prime(2147483647u)}) {
    for (int t = 0; t < 20; ++t) {
      auto m = random_matrix(f, rng, 9, 12, -5, 5);
      auto a = rref(m), b = rref_parallel(m);
      CHECK(a.reduced == b.reduced);
      CHECK(a.pivots == b.pivots);
    }
  }
}

TEST_CASE("orthogonal complement examples") {
  Field q = Field::rationals();
  auto whole = ExactMatrix::identity(q, 3);
  CHECK(orthogonal_complement(whole, 3).rows() == 0);

  ExactMatrix zero(q, 0, 3);
  CHECK(orthogonal_complement(zero, 3).rows() == 3);

  auto w = ExactMatrix::from_ints(q, {{1, 1}});
  auto perp = orthogonal_complement(w, 2);
  REQUIRE(perp.rows() == 1);
  CHECK(same_row_space(perp, ExactMatrix::from_ints(q, {{1, -1}})));
}

TEST_CASE("kernel vectors are annihilated") {
  std::mt19937 rng(3);
  Field q = Field::rationals();
  for (int t = 0; t < 30; ++t) {
    auto m = random_matrix(q, rng, 4, 7, -3, 3);
    auto k = kernel(m);
    CHECK(k.rows() + rank(m) == 7);
    CHECK((m * k.transpose()).is_zero());
  }
}

TEST_CASE("double perp returns the original subspace") {
  std::mt19937 rng(5);
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    for (int t = 0; t < 40; ++t) {
      std::size_t n = 1 + rng() % 7;
      auto w = random_matrix(f, rng, rng() % (n + 1), n, -4, 4);
      auto pp = orthogonal_complement(orthogonal_complement(w, n), n);
      CHECK(same_row_space(pp, w));
      CHECK(rank(w) + orthogonal_complement(w, n).rows() == n);
    }
  }
}

TEST_CASE("graded complement agrees with the ungraded one") {
  std::mt19937 rng(9);
  Field q = Field::rationals();
  for (int t = 0; t < 30; ++t) {
    auto w = random_matrix(q, rng, 3, 5, -2, 2);
    std::vector<int> one_degree(5, 4);
    CHECK(same_row_space(orthogonal_complement_graded(w, one_degree), orthogonal_complement(w, 5)));
  }
  // two components, homogeneous rows
  auto w = ExactMatrix::from_ints(q, {{1, 1, 0, 0}, {0, 0, 2, 3}});
  auto g = orthogonal_complement_graded(w, {0, 0, 1, 1});
  CHECK(same_row_space(g, orthogonal_complement(w, 4)));
  CHECK_THROWS(orthogonal_complement_graded(ExactMatrix::from_ints(q, {{1, 0, 1, 0}}), {0, 0, 1, 1}));
}

TEST_CASE("rank over Q agrees with rank over a large prime") {
  std::mt19937 rng(13);
  const std::uint32_t big = 2147483647u;
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 2 + rng() % 5, c = 2 + rng() % 5;
    std::vector<std::vector<long long>> ints(r, std::vector<long long>(c));
    for (auto& row : ints)
      for (auto& x : row) x = static_cast<long long>(rng() % 21) - 10;
    // force a dependency now and then
    if (t % 3 == 0) ints[0] = ints[1];
    CHECK(rank(ExactMatrix::from_ints(Field::rationals(), ints)) ==
          rank(ExactMatrix::from_ints(Field::prime(big), ints)));
  }
}
