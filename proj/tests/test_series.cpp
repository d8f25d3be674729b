#include <doctest.h>

#include <random>
#include <stdexcept>

#include "greenring/core.hpp"
#include "greenring/powers.hpp"
#include "greenring/series.hpp"
#include "support.hpp"

using namespace greenring;

namespace {

GreenSeries series(std::vector<GreenElement> c) { return GreenSeries(std::move(c)); }

const GreenElement V1 = from_indec(1);

GreenSeries random_series(std::mt19937& rng, unsigned trunc) {
  GreenSeries s(trunc);
  for (unsigned k = 0; k <= trunc; ++k) s[k] = test::random_virtual(rng, 8);
  return s;
}

}  // namespace

TEST_CASE("construction and truncation") {
  const GreenSeries zero(3);
  CHECK(zero.trunc() == 3);
  for (const auto& c : zero.coeffs()) CHECK(c.is_zero());
  CHECK(GreenSeries::unit(2) == series({V1, {}, {}}));
  CHECK(series({V1, from_indec(3)}).truncated(3) == series({V1, from_indec(3), {}, {}}));
  CHECK(series({V1, from_indec(3), V1}).truncated(1) == series({V1, from_indec(3)}));
  CHECK_THROWS_AS(GreenSeries(std::vector<GreenElement>{}), std::invalid_argument);
}

TEST_CASE("mul: difference of squares and zero") {
  CHECK(mul(series({V1, V1, {}}), series({V1, -V1, {}})) == series({V1, {}, -V1}));
  const GreenSeries a = series({V1, from_indec(5), from_indec(3)});
  CHECK(mul(a, GreenSeries(2)) == GreenSeries(2));
  CHECK(mul(a, GreenSeries::unit(2)) == a);
  CHECK_THROWS_AS(mul(a, GreenSeries::unit(3)), std::invalid_argument);
}

TEST_CASE("mul: lambda_t(V_3) lambda_t(V_1) is lambda_t(V_3 + V_1)") {
  const GroupContext ctx(2);
  const GreenSeries lhs = mul(exterior_series(from_indec(3), 4, ctx), exterior_series(V1, 4, ctx));
  const GreenSeries oracle = test::oracle_lambda(GreenElement{{1, 1}, {3, 1}}, 4, 2);
  CHECK(lhs == oracle);
  CHECK(exterior_series(GreenElement{{1, 1}, {3, 1}}, 4, ctx) == oracle);
}

TEST_CASE("inverse") {
  CHECK(inverse(series({V1, V1, {}, {}})) == series({V1, -V1, V1, -V1}));
  const GreenSeries l3 = exterior_series(from_indec(3), 3, GroupContext(2));
  CHECK(inverse(inverse(l3)) == l3);
  for (unsigned n = 1; n <= 3; ++n) {
    const unsigned q = 1u << n;
    GreenSeries p = GreenSeries::unit(3 * q);
    p[q] = -V1;
    GreenSeries expected(3 * q);
    for (unsigned k = 0; k <= 3 * q; k += q) expected[k] = V1;
    CHECK(inverse(p) == expected);
  }
  const GreenSeries neg = series({-V1, from_indec(3), {}});
  CHECK(mul(neg, inverse(neg)) == GreenSeries::unit(2));
  CHECK_THROWS_AS(inverse(series({from_indec(2), V1})), std::invalid_argument);
  CHECK_THROWS_AS(inverse(series({V1 * BigInt(2), V1})), std::invalid_argument);
  CHECK_THROWS_AS(inverse(GreenSeries(2)), std::invalid_argument);
}

TEST_CASE("derivative") {
  CHECK(derivative(series({V1, from_indec(2), V1})) == series({from_indec(2), V1 * BigInt(2)}));
  CHECK(derivative(series({from_indec(7), {}, {}})) == GreenSeries(1));
  CHECK(derivative(series({from_indec(7)})) == GreenSeries(0));
  const GreenSeries l2 = test::oracle_lambda(from_indec(2), 2, 1);
  CHECK(l2 == series({V1, from_indec(2), V1}));
  CHECK(derivative(exterior_series(from_indec(2), 2, GroupContext(1))) == series({from_indec(2), V1 * BigInt(2)}));
}

TEST_CASE("substitute_t_squared") {
  CHECK(substitute_t_squared(series({V1, from_indec(3)}), 3) == series({V1, {}, from_indec(3), {}}));
  CHECK(substitute_t_squared(GreenSeries(4), 4) == GreenSeries(4));
  CHECK(substitute_t_squared(GreenSeries::unit(2), 5) == GreenSeries::unit(5));
  CHECK(substitute_t_squared(series({V1, from_indec(3), from_indec(5)}), 2) == series({V1, {}, from_indec(3)}));
}

TEST_CASE("series power") {
  const GreenSeries a = series({V1, from_indec(3), from_indec(2), {}});
  CHECK(power(a, 0) == GreenSeries::unit(3));
  CHECK(power(a, 1) == a);
  CHECK(power(a, 5) == mul(mul(mul(a, a), mul(a, a)), a));
  CHECK_THROWS_AS(power(a, -1), std::invalid_argument);
}

TEST_CASE("Kouwenhoven identity") {
  // lambda_t(V_3), lambda_t(V_1) over C_4, as used by the q = 2 case.
  CHECK(test::oracle_lambda(from_indec(3), 4, 2) == exterior_series(from_indec(3), 4, GroupContext(2)));
  CHECK(check_kouwenhoven(2, 4));
  CHECK(check_kouwenhoven(4, 6));
  CHECK(check_kouwenhoven(8, 16));
  CHECK_THROWS_AS(check_kouwenhoven(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_kouwenhoven(3, 6), std::invalid_argument);
  CHECK_THROWS_AS(check_kouwenhoven(1, 6), std::invalid_argument);
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(2024);
  for (unsigned trunc = 0; trunc <= 6; ++trunc)
    for (int k = 0; k < 6; ++k) {
      const GreenSeries a = random_series(rng, trunc), b = random_series(rng, trunc), c = random_series(rng, trunc);
      CHECK(mul(a, b) == mul(b, a));
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      CHECK(mul(a, GreenSeries::unit(trunc)) == a);
      CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
      CHECK(a - a == GreenSeries(trunc));
      GreenSeries u = a;
      u[0] = (k % 2 == 0) ? V1 : -V1;
      const GreenSeries inv = inverse(u);
      CHECK(mul(u, inv) == GreenSeries::unit(trunc));
      CHECK(mul(inv, u) == GreenSeries::unit(trunc));
    }
}

TEST_CASE("lambda_t is multiplicative") {
  std::mt19937 rng(99);
  const GroupContext ctx(3);
  for (int k = 0; k < 40; ++k) {
    const GreenElement a = test::random_genuine(rng, 8, 20), b = test::random_genuine(rng, 8, 20);
    CHECK(exterior_series(a + b, 6, ctx) == mul(exterior_series(a, 6, ctx), exterior_series(b, 6, ctx)));
  }
}
