#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "feq/ff.hpp"

using namespace feq;

namespace {

// Scan monic degree-n polynomials over Z_p in encoding order and return the
// first with no root in Z_p.  Valid irreducibility oracle for degree <= 3.
std::vector<std::uint32_t> first_rootless_cubic(std::uint64_t p, std::uint32_t n) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> f(n + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[n] = 1;
    bool rootless = true;
    for (std::uint64_t x = 0; x < p && rootless; ++x) {
      std::uint64_t acc = 0;
      for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
      if (acc == 0) rootless = false;
    }
    if (rootless) return f;
  }
  return {};
}

}  // namespace

TEST_CASE("canonical modulus") {
  Field gf4(2, 2);
  CHECK(gf4.modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2+x+1
  Field gf7(7, 1);
  CHECK(gf7.modulus() == std::vector<std::uint32_t>{0, 1});  // x
  Field gf8(2, 3);
  CHECK(gf8.modulus() == first_rootless_cubic(2, 3));
  CHECK(gf8.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3+x+1
}

TEST_CASE("field constructor rejects bad input") {
  CHECK_THROWS_AS(Field(4, 1), Error);
  CHECK_THROWS_AS(Field(1, 1), Error);
  CHECK_THROWS_AS(Field(2, 0), Error);
  CHECK_THROWS_AS(Field(2, 40), Error);  // beyond enumeration bound
  try {
    Field(9, 2);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_prime);
  }
}

TEST_CASE("gf4 arithmetic matches the tables") {
  Field f(2, 2);
  Elem a = f.gen();
  Elem one = f.one();
  CHECK(a * a == one + a);
  CHECK((one + a) * a == one);
  CHECK(a + a == f.zero());
  for (std::uint64_t i = 0; i < 4; ++i) {
    Elem x = f.from_index(i);
    CHECK(one * x == x);
  }
}

TEST_CASE("division and inverses") {
  Field f(3, 2);
  CHECK_THROWS_AS(f.zero().inv(), Error);
  for (std::uint64_t i = 1; i < f.order(); ++i) {
    Elem u = f.from_index(i);
    CHECK(u.inv() * u == f.one());
    CHECK(u / u == f.one());
  }
}

TEST_CASE("field mismatch is rejected") {
  Field f(2, 2), g(3, 1);
  CHECK_THROWS_AS(f.one() + g.one(), Error);
  Field f2(2, 2);
  CHECK(f.one() + f2.one() == f.zero());  // same field, different instances
}

TEST_CASE("frobenius") {
  Field f(2, 2);
  Elem a = f.gen();
  CHECK(a.frobenius(1) == f.one() + a);
  for (std::uint64_t i = 0; i < 4; ++i) CHECK(f.from_index(i).frobenius(0) == f.from_index(i));
  CHECK_THROWS_AS(a.frobenius(2), Error);

  Field g(2, 3);
  for (std::uint64_t i = 0; i < 8; ++i) {
    Elem u = g.from_index(i);
    CHECK(u.frobenius(1).frobenius(1) == u.frobenius(2));
  }
}

TEST_CASE("frobenius is a field automorphism fixing Z_p") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 8}, {3, 4}, {5, 3}, {13, 2}}) {
    Field f(p, n);
    REQUIRE(f.order() <= 256);
    auto elems = f.elements();
    for (const auto& u : elems)
      for (const auto& v : elems) {
        CHECK((u + v).frobenius(1) == u.frobenius(1) + v.frobenius(1));
        CHECK((u * v).frobenius(1) == u.frobenius(1) * v.frobenius(1));
      }
    for (std::uint64_t c = 0; c < p; ++c)
      CHECK(f.from_int(static_cast<std::int64_t>(c)).frobenius(1) == f.from_int(static_cast<std::int64_t>(c)));
  }
}

TEST_CASE("minimal polynomials") {
  Field f(2, 2);
  Field zp(2, 1);
  Elem a = f.gen();

  // oracle: least-degree monic polynomial over Z_2 vanishing at a
  PolyFF best(zp);
  for (std::uint32_t deg = 1; deg <= 2 && best.is_zero(); ++deg) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << deg); ++code) {
      std::vector<Elem> c;
      for (std::uint32_t i = 0; i < deg; ++i) c.push_back(f.from_int((code >> i) & 1));
      c.push_back(f.one());
      PolyFF cand(f, c);
      if (cand.eval(a).is_zero()) {
        std::vector<Elem> cz;
        for (std::uint32_t i = 0; i <= deg; ++i) cz.push_back(zp.from_int((i < deg) ? ((code >> i) & 1) : 1));
        best = PolyFF(zp, cz);
        break;
      }
    }
  }
  REQUIRE(!best.is_zero());
  CHECK(minimal_poly(a) == best);
  CHECK(minimal_poly(a).str() == "x^2+x+1");
  CHECK(minimal_poly(f.zero()).str() == "x");
  CHECK(minimal_poly(f.one() + a) == minimal_poly(a));  // Frobenius conjugate
}

TEST_CASE("minimal polynomial divides x^q - x") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 4}, {3, 3}, {5, 2}}) {
    Field f(p, n);
    Field zp(p, 1);
    PolyFF xq_minus_x = PolyFF::monomial(zp, f.order()) - PolyFF::x(zp);
    for (const auto& u : f.elements()) {
      PolyFF m = minimal_poly(u);
      CHECK(m.is_monic());
      CHECK(static_cast<std::uint32_t>(m.degree()) <= n);
      CHECK(n % static_cast<std::uint32_t>(m.degree()) == 0);
      CHECK(PolyFF::divrem(xq_minus_x, m).second.is_zero());
    }
  }
}

TEST_CASE("subfields") {
  Field gf4(2, 2);
  auto sf = subfields(gf4);
  REQUIRE(sf.size() == 2);
  CHECK(sf[0].degree == 1);
  REQUIRE(sf[0].members.size() == 2);
  CHECK(sf[0].members[0] == gf4.zero());
  CHECK(sf[0].members[1] == gf4.one());
  CHECK(sf[1].degree == 2);
  CHECK(sf[1].members.size() == 4);

  Field gf16(2, 4);
  auto sf16 = subfields(gf16);
  std::vector<std::uint32_t> degs;
  std::vector<std::size_t> sizes;
  for (const auto& s : sf16) {
    degs.push_back(s.degree);
    sizes.push_back(s.members.size());
  }
  CHECK(degs == std::vector<std::uint32_t>{1, 2, 4});
  CHECK(sizes == std::vector<std::size_t>{2, 4, 16});
  // closure under field operations
  for (const auto& s : sf16)
    for (const auto& u : s.members)
      for (const auto& v : s.members) {
        CHECK(s.contains(u + v));
        CHECK(s.contains(u * v));
        if (!v.is_zero()) CHECK(s.contains(u / v));
      }
}

TEST_CASE("multiplicative group is cyclic and inverses hold, all fields up to 4096") {
  for (std::uint64_t p = 2; p <= 4096; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint32_t n = 1;; ++n) {
      std::uint64_t q = 1;
      bool fits = true;
      for (std::uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > 4096) {
          fits = false;
          break;
        }
      }
      if (!fits) break;
      Field f(p, n);
      // inverses, exhaustively
      for (std::uint64_t i = 1; i < q; ++i) {
        Elem u = f.from_index(i);
        if (!(u.inv() * u == f.one())) {
          CHECK_MESSAGE(false, "inverse failed with p=", p, " n=", n, " i=", i);
          break;
        }
      }
      // cyclic: some element has order q-1 (check exponents (q-1)/ell)
      std::uint64_t m = q - 1;
      std::vector<std::uint64_t> ells;
      std::uint64_t mm = m;
      for (std::uint64_t d = 2; d * d <= mm; ++d)
        if (mm % d == 0) {
          ells.push_back(d);
          while (mm % d == 0) mm /= d;
        }
      if (mm > 1) ells.push_back(mm);
      bool found = false;
      for (std::uint64_t i = 1; i < q && !found; ++i) {
        Elem u = f.from_index(i);
        bool gen = true;
        for (std::uint64_t ell : ells)
          if (u.pow(m / ell) == f.one()) {
            gen = false;
            break;
          }
        found = gen;
      }
      CHECK_MESSAGE(found, "no generator found for p=", p, " n=", n);
    }
  }
}

TEST_CASE("encode/decode round-trips") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 5}, {3, 3}, {7, 2}, {31, 1}}) {
    Field f(p, n);
    for (std::uint64_t i = 0; i < f.order(); ++i) CHECK(f.from_index(i).index() == i);
  }
}

TEST_CASE("element text syntax") {
  Field f(2, 2);
  CHECK(f.zero().str() == "0");
  CHECK(f.one().str() == "1");
  CHECK(f.gen().str() == "a");
  CHECK((f.one() + f.gen()).str() == "1+a");
  CHECK(f.parse("1+a") == f.one() + f.gen());
  CHECK(f.parse("a") == f.gen());
  CHECK(f.parse("0") == f.zero());
  CHECK(f.parse("2") == f.gen());  // bare canonical index
  CHECK(f.parse(" 1 + a ") == f.parse("1+a"));

  Field g(3, 3);
  Elem u = g.from_coeffs({2, 0, 1});
  CHECK(u.str() == "2+a^2");
  CHECK(g.parse(u.str()) == u);
  Elem v = g.from_coeffs({0, 2, 2});
  CHECK(v.str() == "2*a+2*a^2");
  CHECK(g.parse(v.str()) == v);
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    Elem w = g.from_index(i);
    CHECK(g.parse(w.str()) == w);
    CHECK(g.parse(std::to_string(i)) == w);
  }
  CHECK_THROWS_AS(g.parse("5+a"), Error);   // coefficient not reduced
  CHECK_THROWS_AS(g.parse("a^3"), Error);   // power out of basis range
  CHECK_THROWS_AS(g.parse("999"), Error);   // index out of range
  CHECK_THROWS_AS(g.parse(""), Error);
}

TEST_CASE("polynomial text syntax") {
  Field zp(2, 1);
  PolyFF m = PolyFF::parse(zp, "x^2+x+1");
  CHECK(m.degree() == 2);
  CHECK(m.str() == "x^2+x+1");
  CHECK(PolyFF::parse(zp, "1+x+x^2") == m);  // ascending accepted
  Field f(2, 2);
  PolyFF e = PolyFF::parse(f, "(1+a)*x^2+a*x+1");
  CHECK(e.coeff(2) == f.one() + f.gen());
  CHECK(e.str() == "(1+a)*x^2+a*x+1");
  CHECK(PolyFF::parse(f, e.str()) == e);
}

TEST_CASE("polynomial arithmetic basics") {
  Field zp(5, 1);
  PolyFF f = PolyFF::parse(zp, "x^3+2*x+1");
  PolyFF g = PolyFF::parse(zp, "x+4");
  auto [q, r] = PolyFF::divrem(f, g);
  CHECK(q * g + r == f);
  CHECK(r.degree() < g.degree());
  CHECK(PolyFF::gcd_monic(f * g, g) == g.scaled(g.lead().inv()));
  CHECK(f.eval(zp.from_int(1)) == zp.from_int(4));
}
