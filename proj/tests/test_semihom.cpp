#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "feq/semihom.hpp"
#include "oracles.hpp"

using namespace feq;

namespace {

// Independent evaluator: B extended Z_p-bilinearly from basis values.
Elem eval_biadd(const Field& f, const std::vector<std::vector<Elem>>& B, const Elem& u, const Elem& v) {
  Elem acc = f.zero();
  for (std::uint32_t k = 0; k < f.degree(); ++k)
    for (std::uint32_t l = 0; l < f.degree(); ++l) {
      std::uint64_t c = std::uint64_t{u.coeffs()[k]} * v.coeffs()[l] % f.p();
      acc = acc + f.from_int(static_cast<std::int64_t>(c)) * B[k][l];
    }
  return acc;
}

// Exhaustive search over all q^(n^2) bi-additive maps for a non-zero one with
// B(alpha u, beta v) = gamma B(u, v) on every pair of field elements.
bool brute_biadd_exists(const Field& f, const Elem& alpha, const Elem& beta, const Elem& gamma) {
  std::uint32_t n = f.degree();
  std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n * n; ++i) total *= q;
  auto elems = f.elements();
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<std::vector<Elem>> B(n, std::vector<Elem>(n, f.zero()));
    std::uint64_t c = code;
    for (std::uint32_t k = 0; k < n; ++k)
      for (std::uint32_t l = 0; l < n; ++l) {
        B[k][l] = f.from_index(c % q);
        c /= q;
      }
    bool ok = true;
    for (std::uint64_t i = 0; i < q && ok; ++i)
      for (std::uint64_t j = 0; j < q && ok; ++j)
        ok = eval_biadd(f, B, alpha * elems[i], beta * elems[j]) ==
             gamma * eval_biadd(f, B, elems[i], elems[j]);
    if (ok) return true;
  }
  return false;
}

// Exhaustive search over all p^(n^2) Z_p-linear maps for a non-zero one with
// L(alpha x) = beta L(x) everywhere.
bool brute_add_exists(const Field& f, const Elem& alpha, const Elem& beta) {
  Field zp(f.p(), 1);
  std::uint32_t n = f.degree();
  std::uint64_t p = f.p();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n * n; ++i) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    MatFF L(zp, n, n);
    std::uint64_t c = code;
    for (std::uint32_t r = 0; r < n; ++r)
      for (std::uint32_t s = 0; s < n; ++s) {
        L.set(r, s, zp.from_int(static_cast<std::int64_t>(c % p)));
        c /= p;
      }
    bool ok = true;
    for (std::uint64_t i = 0; i < f.order() && ok; ++i) {
      Elem x = f.from_index(i);
      ok = apply_zp_linear(f, L, alpha * x) == beta * apply_zp_linear(f, L, x);
    }
    if (ok) return true;
  }
  return false;
}

MatFF lift(const Field& big, const MatFF& small) {
  MatFF out(big, small.rows(), small.cols());
  for (std::size_t i = 0; i < small.rows(); ++i)
    for (std::size_t j = 0; j < small.cols(); ++j)
      out.set(i, j, big.from_int(static_cast<std::int64_t>(small.at(i, j).coeffs()[0])));
  return out;
}

}  // namespace

TEST_CASE("translation matrices") {
  Field gf4(2, 2);
  auto t4 = translation_matrices(gf4);
  Field zp2(2, 1);
  REQUIRE(t4.size() == 2);
  CHECK(t4[0] == MatFF::identity(zp2, 2));
  CHECK(t4[1] == MatFF::from_ints(zp2, {{0, 1}, {1, 1}}));

  Field gf9(3, 2);
  CHECK(translation_matrices(gf9)[0] == MatFF::identity(Field(3, 1), 2));

  Field gf8(2, 3);
  auto t8 = translation_matrices(gf8);
  CHECK(t8[1] == MatFF::from_ints(zp2, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}));
  // M^i is multiplication by a^i: columns carry the coordinates of a^i * a^k
  Field zp = zp2;
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t k = 0; k < 3; ++k) {
      Elem prod = gf8.gen().pow(i) * gf8.gen().pow(k);
      for (std::uint32_t j = 0; j < 3; ++j)
        CHECK(t8[i].at(j, k) == zp.from_int(static_cast<std::int64_t>(prod.coeffs()[j])));
    }
}

TEST_CASE("operator matrix reproduces the worked example") {
  Field gf4(2, 2);
  Elem a = gf4.gen();
  OperatorRep rep = operator_matrix(gf4, gf4.one() + a, a);
  CHECK(rep.P == lift(gf4, MatFF::from_ints(Field(2, 1),
                                            {{0, 1, 0, 1}, {1, 1, 1, 1}, {0, 1, 0, 0}, {1, 1, 0, 0}})));

  OperatorRep id = operator_matrix(gf4, gf4.one(), gf4.one());
  CHECK(id.P == MatFF::identity(gf4, 4));
}

TEST_CASE("operator matrix agrees with the transpose-sandwich form on all inputs") {
  Field gf4(2, 2);
  Elem a = gf4.gen();
  OperatorRep rep = operator_matrix(gf4, gf4.one() + a, a);
  auto trans = translation_matrices(gf4);
  MatFF left = lift(gf4, trans[0] + trans[1]).transpose();   // (M0 + M1)^T
  MatFF right = lift(gf4, trans[1]);                         // M1
  for (std::uint64_t code = 0; code < 256; ++code) {
    MatFF X(gf4, 2, 2);
    std::uint64_t c = code;
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t l = 0; l < 2; ++l) {
        X.set(k, l, gf4.from_index(c % 4));
        c /= 4;
      }
    MatFF Y = left * X * right;
    std::vector<Elem> vecX, vecY;
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t l = 0; l < 2; ++l) {
        vecX.push_back(X.at(k, l));
        vecY.push_back(Y.at(k, l));
      }
    CHECK(mat_apply(rep.P, vecX) == vecY);
  }
}

TEST_CASE("possible gamma values") {
  Field gf4(2, 2);
  Elem a = gf4.gen();
  auto gs = biadd_gammas(gf4, gf4.one() + a, a);
  REQUIRE(gs.size() == 3);
  CHECK(gs[0].first == gf4.one());
  CHECK(gs[0].second == 2);
  CHECK(gs[1].first == a);
  CHECK(gs[1].second == 1);
  CHECK(gs[2].first == gf4.one() + a);
  CHECK(gs[2].second == 1);

  auto ones = biadd_gammas(gf4, gf4.one(), gf4.one());
  REQUIRE(ones.size() == 1);
  CHECK(ones[0].first == gf4.one());
  CHECK(ones[0].second == 4);

  Field gf3(3, 1);
  auto sc = biadd_gammas(gf3, gf3.from_int(2), gf3.from_int(2));
  REQUIRE(sc.size() == 1);
  CHECK(sc[0].first == gf3.one());  // 2*2 = 4 = 1 mod 3

  CHECK_THROWS_AS(biadd_gammas(gf4, gf4.zero(), a), Error);
}

TEST_CASE("gammas are definitionally the non-zero characteristic roots") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 2}, {3, 1}, {2, 3}, {3, 2}}) {
    Field f(p, n);
    std::mt19937_64 rng(29 + p + n);
    std::uniform_int_distribution<std::uint64_t> dist(1, f.order() - 1);
    for (int trial = 0; trial < 5; ++trial) {
      Elem alpha = f.from_index(dist(rng));
      Elem beta = f.from_index(dist(rng));
      auto gs = biadd_gammas(f, alpha, beta);
      auto roots = roots_in_field(char_poly(operator_matrix(f, alpha, beta).P));
      std::vector<std::pair<Elem, std::size_t>> nz;
      for (auto& r : roots)
        if (!r.first.is_zero()) nz.push_back(r);
      CHECK(gs == nz);
    }
  }
}

TEST_CASE("biadd_decide with exhaustive oracle on GF(4)") {
  Field f(2, 2);
  for (std::uint64_t ai = 1; ai < 4; ++ai)
    for (std::uint64_t bi = 1; bi < 4; ++bi)
      for (std::uint64_t gi = 1; gi < 4; ++gi) {
        Elem alpha = f.from_index(ai), beta = f.from_index(bi), gamma = f.from_index(gi);
        auto w = biadd_decide(f, alpha, beta, gamma);
        CHECK(w.has_value() == brute_biadd_exists(f, alpha, beta, gamma));
        if (w) {
          CHECK(!w->B.is_zero());
          CHECK(biadd_verify(*w));
        }
      }
}

TEST_CASE("biadd_decide trivial and absent cases") {
  Field f(2, 2);
  Elem a = f.gen();
  auto w = biadd_decide(f, f.one(), f.one(), f.one());
  REQUIRE(w.has_value());
  CHECK(biadd_verify(*w));

  // gamma outside the eigenvalue set: absent (here none exists for alpha=1+a,
  // beta=a only when gamma is 0, which is rejected; use a=alpha=beta, gamma=1+a)
  auto gs = biadd_gammas(f, a, a);
  bool has_one_plus_a = false;
  for (auto& [g, m] : gs) has_one_plus_a |= (g == f.one() + a);
  auto w2 = biadd_decide(f, a, a, f.one() + a);
  CHECK(w2.has_value() == has_one_plus_a);

  CHECK_THROWS_AS(biadd_decide(f, a, a, f.zero()), Error);
}

TEST_CASE("tampered witness fails verification") {
  Field f(2, 2);
  Elem a = f.gen();
  auto w = biadd_decide(f, f.one() + a, a, a);
  REQUIRE(w.has_value());
  REQUIRE(biadd_verify(*w));
  BiAddWitness bad = *w;
  bad.B.set(0, 0, bad.B.at(0, 0) + f.one());
  // the perturbed map may or may not still satisfy the relation; compare with
  // the independent evaluator to decide which
  std::vector<std::vector<Elem>> Bv(2, std::vector<Elem>(2, f.zero()));
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l) Bv[k][l] = bad.B.at(k, l);
  bool still_ok = true;
  for (std::uint64_t i = 0; i < 4 && still_ok; ++i)
    for (std::uint64_t j = 0; j < 4 && still_ok; ++j)
      still_ok = eval_biadd(f, Bv, bad.alpha * f.from_index(i), bad.beta * f.from_index(j)) ==
                 bad.gamma * eval_biadd(f, Bv, f.from_index(i), f.from_index(j));
  CHECK(biadd_verify(bad) == still_ok);

  // E00 with (alpha, beta, gamma) = (1+a, a, 1) violates the relation
  BiAddWitness e00{f, f.one() + a, a, f.one(), MatFF(f, 2, 2)};
  e00.B.set(0, 0, f.one());
  CHECK(!biadd_verify(e00));
}

TEST_CASE("GF(8) decisions cross-checked against a directly assembled system") {
  Field f(2, 3);
  // Independent route: unknowns B(b_k, b_l), equations from bilinear expansion
  // of B(alpha b_k, beta b_l) = gamma B(b_k, b_l); kernel dimension > 0 iff a
  // non-zero witness exists.
  auto direct_exists = [&](const Elem& alpha, const Elem& beta, const Elem& gamma) {
    std::uint32_t n = f.degree();
    MatFF sys(f, n * n, n * n);
    for (std::uint32_t k = 0; k < n; ++k)
      for (std::uint32_t l = 0; l < n; ++l) {
        Elem u = alpha * f.gen().pow(k);
        Elem v = beta * f.gen().pow(l);
        std::size_t row = std::size_t{k} * n + l;
        for (std::uint32_t r = 0; r < n; ++r)
          for (std::uint32_t s = 0; s < n; ++s) {
            std::uint64_t c = std::uint64_t{u.coeffs()[r]} * v.coeffs()[s] % f.p();
            sys.set(row, std::size_t{r} * n + s, f.from_int(static_cast<std::int64_t>(c)));
          }
        sys.set(row, row, sys.at(row, row) - gamma);
      }
    return kernel(sys).dimension() > 0;
  };
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> dist(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    Elem alpha = f.from_index(dist(rng));
    Elem beta = f.from_index(dist(rng));
    Elem gamma = f.from_index(dist(rng));
    auto w = biadd_decide(f, alpha, beta, gamma);
    CHECK(w.has_value() == direct_exists(alpha, beta, gamma));
    if (w) CHECK(biadd_verify(*w));
  }
}

TEST_CASE("add_decide with exhaustive oracle on GF(4), GF(8), GF(9)") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 2}, {2, 3}, {3, 2}}) {
    Field f(p, n);
    for (std::uint64_t ai = 1; ai < f.order(); ++ai)
      for (std::uint64_t bi = 1; bi < f.order(); ++bi) {
        Elem alpha = f.from_index(ai), beta = f.from_index(bi);
        auto w = add_decide(f, alpha, beta);
        bool brute = brute_add_exists(f, alpha, beta);
        CHECK(w.has_value() == brute);
        // Frobenius-orbit criterion
        bool orbit = false;
        for (std::uint32_t j = 0; j < n; ++j) orbit |= (alpha.frobenius(j) == beta);
        CHECK(w.has_value() == orbit);
        if (w) {
          CHECK(!w->L.is_zero());
          CHECK(add_verify(*w));
        }
      }
  }
}

TEST_CASE("add_decide named examples") {
  Field f(2, 2);
  Elem a = f.gen();
  CHECK(add_decide(f, a, f.one() + a).has_value());   // 1+a = a^2, conjugate
  CHECK(!add_decide(f, f.one(), a).has_value());      // forces the zero map
  auto w = add_decide(f, a, a);
  REQUIRE(w.has_value());
  CHECK(add_verify(*w));
  CHECK_THROWS_AS(add_decide(f, f.zero(), a), Error);
}

TEST_CASE("homogeneity field") {
  Field f(2, 2);
  Field zp(2, 1);
  auto ident = homogeneity_field(f, MatFF::identity(zp, 2));
  CHECK(ident.degree == 2);
  CHECK(ident.members.size() == 4);

  // Frobenius x -> x^2 as a Z_2-matrix: 1 -> 1, a -> a^2 = 1+a
  MatFF frob = MatFF::from_ints(zp, {{1, 1}, {0, 1}});
  auto hf = homogeneity_field(f, frob);
  CHECK(hf.degree == 1);
  REQUIRE(hf.members.size() == 2);
  CHECK(hf.members[0] == f.zero());
  CHECK(hf.members[1] == f.one());

  auto zero = homogeneity_field(f, MatFF(zp, 2, 2));
  CHECK(zero.degree == 2);
  CHECK(zero.members.size() == 4);

  // GF(16): the map fixing GF(4) pointwise and killing a complement has H = GF(4)
  Field g(2, 4);
  auto w = add_decide(g, g.gen(), g.gen());
  REQUIRE(w.has_value());
  auto h = homogeneity_field(g, w->L);
  CHECK(g.degree() % h.degree == 0);
}

TEST_CASE("intersect_constraints") {
  Field f(2, 2);
  Elem a = f.gen();
  auto single = intersect_constraints(f, {{f.one(), f.one(), f.one()}});
  CHECK(single.dimension == 4);  // n^2

  auto eig = intersect_constraints(f, {{f.one() + a, a, a}});
  CHECK(eig.dimension == eigenspace(operator_matrix(f, f.one() + a, a).P, a).dimension());

  Field gf3(3, 1);
  auto none = intersect_constraints(gf3, {{gf3.one(), gf3.one(), gf3.from_int(2)}});
  CHECK(none.dimension == 0);

  CHECK_THROWS_AS(intersect_constraints(f, {{f.zero(), a, a}}), Error);

  // every basis element satisfies all relations
  auto ws = intersect_constraints(f, {{f.one() + a, a, f.one()}, {a, f.one() + a, f.one()}});
  for (const auto& B : ws.basis) {
    std::vector<std::vector<Elem>> Bv(2, std::vector<Elem>(2, f.zero()));
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t l = 0; l < 2; ++l) Bv[k][l] = B.at(k, l);
    for (std::uint64_t i = 0; i < 4; ++i)
      for (std::uint64_t j = 0; j < 4; ++j) {
        Elem u = f.from_index(i), v = f.from_index(j);
        CHECK(eval_biadd(f, Bv, (f.one() + a) * u, a * v) == eval_biadd(f, Bv, u, v));
        CHECK(eval_biadd(f, Bv, a * u, (f.one() + a) * v) == eval_biadd(f, Bv, u, v));
      }
  }
}

TEST_CASE("additive constraint space") {
  Field f(2, 2);
  Elem a = f.gen();
  // single constraint dimension matches the decision procedure
  for (std::uint64_t ai = 1; ai < 4; ++ai)
    for (std::uint64_t bi = 1; bi < 4; ++bi) {
      Elem alpha = f.from_index(ai), beta = f.from_index(bi);
      auto ws = additive_constraint_space(f, {{alpha, beta}});
      CHECK((ws.dimension > 0) == add_decide(f, alpha, beta).has_value());
      CHECK(ws.dimension % f.degree() == 0);  // closed under field scaling
      for (const auto& L : ws.basis)
        for (std::uint64_t i = 0; i < 4; ++i) {
          Elem x = f.from_index(i);
          CHECK(apply_zp_linear(f, L, alpha * x) == beta * apply_zp_linear(f, L, x));
        }
    }
  // identity constraint leaves everything
  auto all = additive_constraint_space(f, {{f.one(), f.one()}});
  CHECK(all.dimension == 4);
  // incompatible pair: a -> a and a -> 1+a simultaneously force zero
  auto none = additive_constraint_space(f, {{a, a}, {a, f.one() + a}});
  CHECK(none.dimension == 0);
}
