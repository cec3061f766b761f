#include <cstdlib>

#include "doctest.h"
#include "support.hpp"

using namespace ringcode;

namespace {

codes::LinearCodeF random_linear_code(const gf::FieldPtr& f, std::size_t k, std::size_t n) {
  for (;;) {
    Matrix g(0, n);
    for (std::size_t i = 0; i < k; ++i) g.append_row(testing::random_vector(*f, n));
    auto c = codes::linear_code(f, g);
    if (c.dimension() == k) return c;
  }
}

void check_certificate(const codes::LinearCodeF& c, const distance::DistanceResult& r) {
  if (!r.exact) return;
  REQUIRE(r.certificate.size() == c.length);
  CHECK(maps::hamming_weight(r.certificate) == r.d);
  CHECK(la::in_row_space(*c.field, c.generator, r.certificate));
}

}  // namespace

TEST_CASE("known distances") {
  auto f9 = gf::GaloisField::builtin(3, 1);
  auto cs = cyclo::build_cosets(f9, f9->parse("w^4"), 5, 0);
  const auto tor = codes::torsion(codes::code_from_exponents(cs, {{1, 2}}));
  REQUIRE(tor.dimension() == 3);
  const auto ex = distance::min_distance_exhaustive(tor, 1u << 20);
  CHECK(ex.d == 3);
  CHECK(ex.method == "exhaustive");
  CHECK(ex.work == 729);
  const auto cr = distance::min_distance_column_rank(tor, 8);
  CHECK(cr.d == 3);
  CHECK(cr.method == "column-rank");
  check_certificate(tor, ex);
  check_certificate(tor, cr);

  auto cs10 = cyclo::build_cosets(f9, f9->parse("w^4"), 10, 0);
  const auto tor10 = codes::torsion(codes::code_from_exponents(cs10, {{5, 2}, {3, 2}}));
  REQUIRE(tor10.dimension() == 7);
  CHECK(distance::min_distance_column_rank(tor10, 8).d == 4);

  Matrix id(0, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Elt> r(4, 0);
    r[i] = 1;
    id.append_row(r);
  }
  const auto full = codes::linear_code(f9, id);
  CHECK(distance::min_distance_exhaustive(full, 1u << 20).d == 1);
  CHECK(distance::min_distance_column_rank(full, 8).d == 1);
}

TEST_CASE("engines agree with each other and with listing") {
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    auto f = gf::GaloisField::builtin(p, m);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 4 + testing::rng()() % 6;
      const std::size_t k = 1 + testing::rng()() % 3;
      const auto c = random_linear_code(f, k, n);
      const auto ex = distance::min_distance_exhaustive(c, 1u << 20);
      const auto cr = distance::min_distance_column_rank(c, static_cast<unsigned>(n));
      CHECK(ex.d == testing::brute_distance(*f, c.generator));
      CHECK(cr.d == ex.d);
      CHECK(cr.exact);
      check_certificate(c, ex);
      check_certificate(c, cr);
      const auto both = distance::min_distance(c);
      CHECK(both.d == ex.d);
      CHECK(both.cross_checked);
    }
  }
}

TEST_CASE("lower bounds when the cap is reached") {
  auto f = gf::GaloisField::builtin(3, 1);
  auto cs = cyclo::build_cosets(f, f->parse("w^4"), 5, 0);
  const auto tor = codes::torsion(codes::code_from_exponents(cs, {{1, 2}}));
  const auto r = distance::min_distance_column_rank(tor, 2);
  CHECK_FALSE(r.exact);
  CHECK(r.d == 3);
  CHECK(r.certificate.empty());
}

TEST_CASE("monotonicity on nested codes") {
  auto f = gf::GaloisField::builtin(3, 1);
  auto cs = cyclo::build_cosets(f, f->parse("w^4"), 10, 0);
  for (int t = 0; t < 20; ++t) {
    const auto big = testing::random_code(cs);
    auto e = big.exponents();
    for (auto& a : e) a = std::min<unsigned>(cs->max_exponent(), a + testing::rng()() % 2);
    const codes::ConstacyclicCode small(cs, e);
    const auto tb = codes::torsion(big), ts = codes::torsion(small);
    if (ts.dimension() == 0) continue;
    distance::Options o;
    o.d_cap = 10;
    o.cross_check = false;
    CHECK(distance::min_distance(ts, o).d >= distance::min_distance(tb, o).d);
  }
}

TEST_CASE("results do not depend on the worker count") {
  auto f = gf::GaloisField::builtin(2, 2);
  for (int t = 0; t < 10; ++t) {
    const auto c = random_linear_code(f, 4, 12);
    const auto a = distance::min_distance_exhaustive(c, 1u << 20, 1);
    const auto b = distance::min_distance_exhaustive(c, 1u << 20, 4);
    CHECK(a.d == b.d);
    CHECK(a.certificate == b.certificate);
    CHECK(a.work == b.work);
    const auto x = distance::min_distance_column_rank(c, 8, 1);
    const auto y = distance::min_distance_column_rank(c, 8, 5);
    CHECK(x.d == y.d);
    CHECK(x.certificate == y.certificate);
    CHECK(x.work == y.work);
  }
}

TEST_CASE("ring codes through torsion") {
  auto f = gf::GaloisField::builtin(3, 1);
  auto cs = cyclo::build_cosets(f, f->parse("w^4"), 5, 0);
  const auto d = codes::code_from_exponents(cs, {{1, 2}});
  CHECK(distance::min_distance_R(d).d == 3);
  CHECK(distance::min_distance_R_exhaustive(d, 1u << 20).d == 3);
  const auto uR = codes::code_from_exponents(cs, {{1, 1}, {3, 1}, {5, 1}});
  CHECK(distance::min_distance_R(uR).d == 1);
  const auto zero = codes::code_from_exponents(cs, {{1, 2}, {3, 2}, {5, 2}});
  CHECK_THROWS_AS(distance::min_distance_R(zero), ParameterError);
}

TEST_CASE("budgets") {
  auto f = gf::GaloisField::builtin(3, 1);
  const auto c = random_linear_code(f, 6, 8);
  CHECK_THROWS_AS(distance::min_distance_exhaustive(c, 1000), BudgetExceeded);
  CHECK(distance::default_budget() > 0);
}
