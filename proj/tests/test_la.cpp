#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "feq/la.hpp"
#include "oracles.hpp"

using namespace feq;

TEST_CASE("matrix product") {
  Field gf2(2, 1);
  MatFF M1 = MatFF::from_ints(gf2, {{0, 1}, {1, 1}});
  CHECK(M1 * M1 == MatFF::from_ints(gf2, {{1, 1}, {1, 0}}));

  Field gf4(2, 2);
  std::mt19937_64 rng(7);
  MatFF A = oracle::random_matrix(gf4, 3, 3, rng);
  CHECK(MatFF::identity(gf4, 3) * A == A);
  CHECK(A * MatFF::identity(gf4, 3) == A);

  MatFF M1q(gf4, 2, 2);
  M1q.set(0, 1, gf4.one());
  M1q.set(1, 0, gf4.one());
  M1q.set(1, 1, gf4.one());
  CHECK(M1q.transpose() == M1q);  // symmetric

  CHECK_THROWS_AS(A * MatFF(gf4, 2, 2), Error);
  CHECK_THROWS_AS(A + MatFF(gf4, 2, 2), Error);
  CHECK_THROWS_AS(MatFF::from_ints(gf2, {{1}}) * MatFF::from_ints(Field(3, 1), {{1}}), Error);
}

TEST_CASE("kernel, rank, rref") {
  Field gf2(2, 1);
  MatFF Z(gf2, 3, 4);
  auto kb = kernel(Z);
  CHECK(kb.dimension() == 4);

  MatFF A = MatFF::from_ints(gf2, {{1, 1}, {1, 1}});
  auto k1 = kernel(A);
  REQUIRE(k1.dimension() == 1);
  CHECK(k1.vectors[0][0] == gf2.one());
  CHECK(k1.vectors[0][1] == gf2.one());

  MatFF inv2 = MatFF::from_ints(gf2, {{1, 1}, {0, 1}});
  CHECK(kernel(inv2).dimension() == 0);
  CHECK(rank(inv2) == 2);

  // rank + nullity = cols, random samples over several fields
  std::mt19937_64 rng(11);
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    Field f(p, n);
    for (int trial = 0; trial < 25; ++trial) {
      MatFF M = oracle::random_matrix(f, 4, 6, rng);
      CHECK(rank(M) + kernel(M).dimension() == M.cols());
      for (const auto& v : kernel(M).vectors) {
        auto img = mat_apply(M, v);
        CHECK(std::all_of(img.begin(), img.end(), [](const Elem& e) { return e.is_zero(); }));
      }
    }
  }
}

TEST_CASE("solve") {
  Field gf5(5, 1);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    MatFF A = oracle::random_matrix(gf5, 4, 4, rng);
    MatFF x0 = oracle::random_matrix(gf5, 4, 1, rng);
    std::vector<Elem> xv;
    for (std::size_t i = 0; i < 4; ++i) xv.push_back(x0.at(i, 0));
    auto b = mat_apply(A, xv);
    auto x = solve(A, b);
    REQUIRE(x.has_value());
    CHECK(mat_apply(A, *x) == b);
  }
  // inconsistent system
  MatFF A = MatFF::from_ints(gf5, {{1, 0}, {1, 0}});
  std::vector<Elem> b{gf5.from_int(1), gf5.from_int(2)};
  CHECK(!solve(A, b).has_value());
}

TEST_CASE("characteristic polynomial basics") {
  Field gf3(3, 1);
  for (std::size_t n = 1; n <= 4; ++n) {
    PolyFF expected = PolyFF::constant(gf3, gf3.one());
    PolyFF lin(gf3, {-gf3.one(), gf3.one()});
    for (std::size_t i = 0; i < n; ++i) expected = expected * lin;
    CHECK(char_poly(MatFF::identity(gf3, n)) == expected);  // (t-1)^n
  }

  Field gf2(2, 1);
  MatFF M1 = MatFF::from_ints(gf2, {{0, 1}, {1, 1}});
  CHECK(char_poly(M1) == PolyFF::parse(gf2, "x^2+x+1"));

  // the 4x4 matrix from the worked GF(4) example
  MatFF P = MatFF::from_ints(gf2, {{0, 1, 0, 1}, {1, 1, 1, 1}, {0, 1, 0, 0}, {1, 1, 0, 0}});
  PolyFF cp = char_poly(P);
  PolyFF expected = PolyFF::parse(gf2, "x+1") * PolyFF::parse(gf2, "x+1") * PolyFF::parse(gf2, "x^2+x+1");
  CHECK(cp == expected);
  CHECK(cp.str("t") == "t^4+t^3+t+1");

  CHECK_THROWS_AS(char_poly(MatFF(gf2, 2, 3)), Error);
}

TEST_CASE("char_poly matches Leibniz expansion") {
  std::mt19937_64 rng(17);
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}, {7, 1}, {2, 3}}) {
    Field f(p, n);
    for (std::size_t m = 1; m <= 4; ++m)
      for (int trial = 0; trial < 10; ++trial) {
        MatFF A = oracle::random_matrix(f, m, m, rng);
        CHECK(char_poly(A) == oracle::leibniz_char_poly(A));
      }
  }
}

TEST_CASE("Cayley-Hamilton") {
  std::mt19937_64 rng(19);
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    Field f(p, n);
    for (std::size_t m = 2; m <= 6; ++m)
      for (int trial = 0; trial < 5; ++trial) {
        MatFF A = oracle::random_matrix(f, m, m, rng);
        CHECK(oracle::poly_at_matrix(char_poly(A), A).is_zero());
      }
  }
}

TEST_CASE("roots in field") {
  Field gf4(2, 2);
  PolyFF cp = PolyFF::parse(gf4, "x+1") * PolyFF::parse(gf4, "x+1") * PolyFF::parse(gf4, "x^2+x+1");
  auto roots = roots_in_field(cp);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].first == gf4.one());
  CHECK(roots[0].second == 2);
  CHECK(roots[1].first == gf4.gen());
  CHECK(roots[1].second == 1);
  CHECK(roots[2].first == gf4.one() + gf4.gen());
  CHECK(roots[2].second == 1);

  Field gf7(7, 1);
  Elem c = gf7.from_int(5);
  auto lin = roots_in_field(PolyFF(gf7, {-c, gf7.one()}));
  REQUIRE(lin.size() == 1);
  CHECK(lin[0].first == c);
  CHECK(lin[0].second == 1);

  Field gf3(3, 1);
  CHECK(roots_in_field(PolyFF::parse(gf3, "x^2+1")).empty());
  CHECK_THROWS_AS(roots_in_field(PolyFF(gf3)), Error);
}

TEST_CASE("eigenspace") {
  Field gf3(3, 1);
  auto full = eigenspace(MatFF::identity(gf3, 4), gf3.one());
  CHECK(full.dimension() == 4);
  CHECK(eigenspace(MatFF::identity(gf3, 4), gf3.from_int(2)).dimension() == 0);

  std::mt19937_64 rng(23);
  Field gf4(2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    MatFF A = oracle::random_matrix(gf4, 4, 4, rng);
    for (std::uint64_t gi = 0; gi < 4; ++gi) {
      Elem g = gf4.from_index(gi);
      for (const auto& v : eigenspace(A, g).vectors) {
        auto img = mat_apply(A, v);
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(img[i] == g * v[i]);
      }
    }
  }
}

TEST_CASE("matrix text format") {
  Field gf4(2, 2);
  MatFF M(gf4, 2, 2);
  M.set(0, 1, gf4.one());
  M.set(1, 0, gf4.one());
  M.set(1, 1, gf4.one() + gf4.gen());
  CHECK(M.str() == "0,1;1,1+a");
  CHECK(MatFF::parse(gf4, M.str()) == M);
}
