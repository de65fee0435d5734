#include <doctest.h>

#include <random>

#include "omega4/mat.hpp"

using namespace omega4;

namespace {

Mat random_mat(PrimeField f, int r, int c, std::mt19937_64& rng) {
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<uint32_t>(rng() % f.p);
  return m;
}

}  // namespace

TEST_CASE("field arithmetic basics") {
  PrimeField f(5);
  CHECK(f.add(3, 4) == 2);
  CHECK(f.sub(1, 3) == 3);
  CHECK(f.mul(2, 4) == 3);
  CHECK(f.inv(2) == 3);
  CHECK(f.reduce(-1) == 4);
  CHECK_THROWS_AS(PrimeField(6), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
}

TEST_CASE("rref identity and zero") {
  PrimeField f(5);
  Mat id = Mat::identity(f, 2);
  Rref e = rref(id);
  CHECK(e.m == id);
  CHECK(e.pivots == std::vector<int>{0, 1});
  CHECK(e.rank == 2);

  Mat z(f, 3, 2);
  Rref ez = rref(z);
  CHECK(ez.rank == 0);
  CHECK(ez.pivots.empty());
}

TEST_CASE("rref rank-1 example over F_5") {
  // [[1,2],[2,4]] row-reduces to [[1,2],[0,0]].
  PrimeField f(5);
  Mat m = Mat::from_rows(f, {{1, 2}, {2, 4}}, 2);
  Rref e = rref(m);
  CHECK(e.rank == 1);
  CHECK(e.m.row(0) == Vec{1, 2});
  CHECK(e.pivots == std::vector<int>{0});
}

TEST_CASE("kernel basis examples") {
  PrimeField f2(2);
  CHECK(kernel_basis(Mat::identity(f2, 3)).empty());

  Mat z(f2, 4, 4);
  auto k = kernel_basis(z);
  REQUIRE(k.size() == 4);
  for (int i = 0; i < 4; ++i) {
    Vec e(4, 0);
    e[i] = 1;
    CHECK(k[i] == e);
  }

  Mat row = Mat::from_rows(f2, {{1, 1}}, 2);
  auto k2 = kernel_basis(row);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == Vec{1, 1});
}

TEST_CASE("solve examples") {
  PrimeField f(5);
  Mat id = Mat::identity(f, 3);
  Vec b{1, 2, 3};
  CHECK(solve(id, b) == b);

  Mat z(f, 2, 2);
  CHECK(!solve(z, Vec{1, 0}).has_value());

  // 2x = 3 mod 5 has the solution x = 4.
  Mat two = Mat::from_rows(f, {{2}}, 1);
  auto x = solve(two, Vec{3});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 4);
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
  for (uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    std::mt19937_64 rng(42 + p);
    for (int trial = 0; trial < 30; ++trial) {
      int r = 1 + static_cast<int>(rng() % 6);
      int c = 1 + static_cast<int>(rng() % 6);
      Mat m = random_mat(f, r, c, rng);
      Rref e = rref(m);
      auto ker = kernel_basis(m);
      CHECK(e.rank + static_cast<int>(ker.size()) == c);
      for (const Vec& v : ker) CHECK(vec_is_zero(mat_apply(m, v)));
      Rref e2 = rref(e.m);
      CHECK(e2.m == e.m);
      // Solvable systems solve exactly.
      Vec x(c);
      for (int j = 0; j < c; ++j) x[j] = static_cast<uint32_t>(rng() % p);
      Vec b = mat_apply(m, x);
      auto sol = solve(m, b);
      REQUIRE(sol.has_value());
      CHECK(mat_apply(m, *sol) == b);
    }
  }
}

TEST_CASE("subspace operations") {
  PrimeField f2(2);
  Mat e1 = Mat::from_rows(f2, {{1, 0}}, 2);
  Mat e2 = Mat::from_rows(f2, {{0, 1}}, 2);
  CHECK(subspace_intersect(e1, e2).rows() == 0);
  CHECK(subspace_equal(subspace_intersect(e1, e1), e1));
  CHECK(subspace_sum(e1, e2).rows() == 2);
  CHECK(subspace_member(e1, Vec{1, 0}));
  CHECK(!subspace_member(e1, Vec{0, 1}));

  // Quotient of F_3^3 by span{e1+e2}: 2-dimensional, projection kills e1+e2.
  PrimeField f3(3);
  Mat u = Mat::from_rows(f3, {{1, 1, 0}}, 3);
  QuotientWithSection q = subspace_quotient(u, 3);
  CHECK(q.projection.rows() == 2);
  CHECK(vec_is_zero(mat_apply(q.projection, Vec{1, 1, 0})));
  // The section composed with the projection is the identity on the quotient.
  Mat round = mat_mul(q.projection, transpose(q.section));
  CHECK(round == Mat::identity(f3, 2));
}

TEST_CASE("modular dimension law for random subspaces") {
  for (uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    std::mt19937_64 rng(7 * p);
    for (int trial = 0; trial < 30; ++trial) {
      int n = 2 + static_cast<int>(rng() % 5);
      Mat u = row_space(random_mat(f, 1 + static_cast<int>(rng() % n), n, rng));
      Mat w = row_space(random_mat(f, 1 + static_cast<int>(rng() % n), n, rng));
      Mat s = subspace_sum(u, w);
      Mat i = subspace_intersect(u, w);
      CHECK(s.rows() + i.rows() == u.rows() + w.rows());
      CHECK(subspace_contains(u, i));
      CHECK(subspace_contains(w, i));
      CHECK(subspace_contains(s, u));
    }
  }
}

TEST_CASE("inverse and zero-dimensional edge cases") {
  PrimeField f(3);
  Mat m = Mat::from_rows(f, {{1, 1}, {0, 1}}, 2);
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(mat_mul(m, *inv) == Mat::identity(f, 2));
  CHECK(!inverse(Mat(f, 2, 2)).has_value());

  Mat empty(f, 0, 0);
  CHECK(rref(empty).rank == 0);
  CHECK(mat_mul(empty, empty) == empty);
  CHECK(Mat::identity(f, 0) == empty);
}
