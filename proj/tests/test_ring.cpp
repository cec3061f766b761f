#include "doctest.h"
#include "ringcode/cyclo.hpp"
#include "support.hpp"

using namespace ringcode;
using ring::RingElement;

TEST_CASE("ring arithmetic with u^2 = 0") {
  auto f4 = gf::GaloisField::builtin(2, 1);
  auto f9 = gf::GaloisField::builtin(3, 1);
  ring::ChainRing R4(f4), R9(f9);
  CHECK(R9.mul(R9.u(), R9.u()) == R9.zero());
  const RingElement one_plus_u{1, 1};
  CHECK(R4.mul(one_plus_u, one_plus_u) == R4.one());
  CHECK(R9.mul(one_plus_u, R9.sub(R9.one(), R9.u())) == R9.one());
}

TEST_CASE("conjugation") {
  auto f9 = gf::GaloisField::builtin(3, 1);
  ring::ChainRing R(f9);
  CHECK(R.conj(R.u()) == R.neg(R.u()));
  CHECK(R.conj(R.parse("w + u*1")) == R.parse("w^3 + u*2"));
  for (int t = 0; t < 500; ++t) {
    const RingElement x{testing::random_elt(*f9), testing::random_elt(*f9)};
    const RingElement y{testing::random_elt(*f9), testing::random_elt(*f9)};
    CHECK(R.conj(R.conj(x)) == x);
    CHECK(R.conj(R.mul(x, y)) == R.mul(R.conj(x), R.conj(y)));
    CHECK(R.conj(R.add(x, y)) == R.add(R.conj(x), R.conj(y)));
  }
}

TEST_CASE("inverses") {
  auto f9 = gf::GaloisField::builtin(3, 1);
  ring::ChainRing R(f9);
  CHECK(R.inv({1, 1}) == R.sub(R.one(), R.u()));
  CHECK(R.inv(R.constant(2)) == R.constant(2));
  CHECK_THROWS_AS(R.inv(R.u()), ParameterError);
  for (int t = 0; t < 300; ++t) {
    const RingElement x{testing::random_nonzero(*f9), testing::random_elt(*f9)};
    CHECK(R.is_unit(x));
    CHECK(R.mul(x, R.inv(x)) == R.one());
  }
  CHECK_FALSE(R.is_unit({0, 5}));
}

TEST_CASE("text syntax") {
  auto f9 = gf::GaloisField::builtin(3, 1);
  ring::ChainRing R(f9);
  CHECK(R.parse("w^3 + u*2") == RingElement{f9->parse("w^3"), 2});
  CHECK(R.parse("u") == R.u());
  CHECK(R.parse("u*w") == RingElement{0, f9->parse("w")});
  CHECK(R.format(R.parse("1 + u*0")) == "1");
  for (int t = 0; t < 100; ++t) {
    const RingElement x{testing::random_elt(*f9), testing::random_elt(*f9)};
    CHECK(R.parse(R.format(x)) == x);
  }
  CHECK_THROWS_AS(R.parse("1 + v*2"), ParameterError);
}

TEST_CASE("polynomials over R") {
  auto f9 = gf::GaloisField::builtin(3, 1);
  ring::ChainRing R(f9);
  const ring::RingPoly x{R.zero(), R.one()};
  CHECK(R.poly_mul(x, x) == ring::RingPoly{R.zero(), R.zero(), R.one()});
  CHECK(R.poly_mul(x, {}).empty());
  // x^5 - 2 reduced modulo x^5 - 2(1+u) is 2u.
  const RingElement two = R.constant(2);
  ring::RingPoly f(6, R.zero()), g(6, R.zero());
  f[5] = g[5] = R.one();
  f[0] = R.neg(two);
  g[0] = R.neg(R.mul(two, {1, 1}));
  CHECK(R.poly_mod(f, g) == ring::RingPoly{R.mul(two, R.u())});
  ring::RingPoly bad{R.one(), R.u()};
  CHECK_THROWS_AS(R.poly_mod(f, bad), ParameterError);
}

TEST_CASE("(x^n - beta)^{p^e} = alpha u in the ambient ring") {
  struct Case {
    unsigned p, m, n, e;
    const char* alpha;
  };
  for (const auto& c : {Case{3, 1, 5, 0, "w^4"}, Case{3, 1, 10, 0, "w^4"}, Case{2, 1, 5, 1, "w"},
                        Case{2, 2, 3, 1, "w^6"}, Case{2, 1, 17, 1, "w"}, Case{3, 1, 7, 1, "w^2"}}) {
    auto f = gf::GaloisField::builtin(c.p, c.m);
    auto cs = cyclo::build_cosets(f, f->parse(c.alpha), c.n, c.e);
    ring::ChainRing R(f);
    ring::RingPoly base(c.n + 1, R.zero());
    base[c.n] = R.one();
    base[0] = R.neg(R.constant(cs->beta));
    ring::RingPoly power{R.one()};
    for (unsigned i = 0; i < cs->pe; ++i) power = R.poly_mul(power, base);
    ring::RingPoly modulus(cs->N + 1, R.zero());
    modulus[cs->N] = R.one();
    modulus[0] = R.neg(RingElement{cs->alpha, cs->alpha});
    CAPTURE(c.n);
    CHECK(R.poly_mod(power, modulus) == ring::RingPoly{RingElement{0, cs->alpha}});
    CHECK(R.poly_mod(R.poly_mul(power, power), modulus).empty());
  }
}

TEST_CASE("conjugation commutes with polynomial products") {
  auto f = gf::GaloisField::builtin(2, 2);
  ring::ChainRing R(f);
  for (int t = 0; t < 100; ++t) {
    const auto a = testing::random_ring_vector(*f, 4), b = testing::random_ring_vector(*f, 3);
    CHECK(R.poly_conj(R.poly_mul(a, b)) == R.poly_mul(R.poly_conj(a), R.poly_conj(b)));
  }
}
