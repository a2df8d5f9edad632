#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qdouble/cyclotomic.hpp"
#include "qdouble/error.hpp"

using namespace qdouble;

static const unsigned kOrders[] = {1, 2, 3, 4, 6, 8, 12};

static CycScalar z(unsigned n, long long k = 1) { return root_of_unity(n, k); }
static CycScalar q(unsigned n, long num, long den = 1) { return CycScalar::rational(n, Rational(num, den)); }

TEST_CASE("root_of_unity examples") {
  CHECK(z(1, 0) == CycScalar::one(1));
  CHECK(z(4, 2) == q(4, -1));
  CHECK(z(3, 1) + z(3, 2) == q(3, -1));
  CHECK(z(5, 7) == z(5, 2));
  CHECK(z(6, -1) == z(6, 5));
}

TEST_CASE("order 0 is rejected") {
  CHECK_THROWS_AS(root_of_unity(0, 1), Error);
  try {
    root_of_unity(0, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
}

TEST_CASE("cyclotomic polynomials match the division oracle") {
  for (unsigned n = 1; n <= 24; ++n) {
    CAPTURE(n);
    CHECK(cyclotomic_polynomial(n) == oracle::cyclotomic(n));
  }
}

TEST_CASE("powers of zeta match long division by Phi_N") {
  for (unsigned n : kOrders)
    for (unsigned k = 0; k < 3 * n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto expect = oracle::power_mod(n, k);
      const auto got = z(n, 1).pow(k);
      REQUIRE(got.coeffs().size() == expect.size());
      for (std::size_t i = 0; i < expect.size(); ++i) CHECK(got.coeffs()[i] == expect[i]);
    }
}

TEST_CASE("ring operation examples") {
  CHECK(mul(z(4), z(4)) == q(4, -1));
  CHECK(mul(mul(z(6), z(6)), z(6)) == q(6, -1));
  // zeta_6^3 by division: x^3 = (x+1)(x^2-x+1) - 1
  const auto r = oracle::power_mod(6, 3);
  CHECK(r[0] == -1);
  CHECK(r[1] == 0);
  std::mt19937_64 rng(1);
  for (unsigned n : kOrders) {
    const auto x = oracle::random_scalar(n, rng);
    CHECK(add(x, neg(x)).is_zero());
  }
}

TEST_CASE("mismatched orders are rejected") {
  CHECK_THROWS_AS(add(z(3), z(4)), Error);
  CHECK_THROWS_AS((void)(z(3) == z(6)), Error);
}

TEST_CASE("inverse examples") {
  for (unsigned n : kOrders)
    for (unsigned k = 0; k < n; ++k) CHECK(inv(z(n, k)) == z(n, n - k));
  CHECK(inv(q(3, 1) + z(3)) == -z(3));
  CHECK(inv(q(4, 2) + z(4)) == (q(4, 2) - z(4)) * q(4, 1, 5));
  try {
    inv(CycScalar::zero(5));
    FAIL("expected division by zero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::division_by_zero);
  }
}

TEST_CASE("embed examples") {
  CHECK(embed(z(2), 4) == z(4, 2));
  for (unsigned m : {1u, 2u, 6u, 12u}) CHECK(embed(CycScalar::one(1), m) == CycScalar::one(m));
  CHECK(embed(z(3, 1), 12) == z(12, 4));
  CHECK_THROWS_AS(embed(z(4), 6), Error);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (unsigned n : kOrders)
    for (int rep = 0; rep < 20; ++rep) {
      CAPTURE(n);
      const auto a = oracle::random_scalar(n, rng), b = oracle::random_scalar(n, rng), c = oracle::random_scalar(n, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK(a * CycScalar::one(n) == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == CycScalar::one(n));
    }
}

TEST_CASE("arithmetic agrees with evaluation into prime fields") {
  std::mt19937_64 rng(11);
  for (unsigned n : kOrders)
    for (unsigned which : {0u, 1u}) {
      const oracle::PrimeFieldEval ev(n, which);
      CAPTURE(n);
      CAPTURE(ev.prime());
      for (int rep = 0; rep < 20; ++rep) {
        const auto a = oracle::random_scalar(n, rng), b = oracle::random_scalar(n, rng, true);
        CHECK(ev(a + b) == ev.add(ev(a), ev(b)));
        CHECK(ev(a * b) == ev.mul(ev(a), ev(b)));
        CHECK(ev(a / b) == ev.mul(ev(a), ev.inv(ev(b))));
        CHECK(ev(z(n, rep)) == ev.pow(ev(z(n)), static_cast<std::uint64_t>(rep)));
      }
    }
}

TEST_CASE("zeta^N = 1 and Phi_N(zeta) = 0") {
  for (unsigned n : kOrders) {
    CHECK(z(n).pow(n) == CycScalar::one(n));
    CycScalar acc = CycScalar::zero(n);
    const auto& phi = oracle::cyclotomic(n);
    for (std::size_t i = phi.size(); i-- > 0;) acc = acc * z(n) + q(n, phi[i]);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("embed is an injective ring map") {
  std::mt19937_64 rng(3);
  const std::pair<unsigned, unsigned> pairs[] = {{1, 4}, {2, 4}, {3, 6}, {3, 12}, {4, 12}, {6, 12}, {4, 8}};
  for (auto [n, m] : pairs)
    for (int rep = 0; rep < 15; ++rep) {
      const auto a = oracle::random_scalar(n, rng), b = oracle::random_scalar(n, rng);
      CHECK(embed(a * b, m) == embed(a, m) * embed(b, m));
      CHECK(embed(a + b, m) == embed(a, m) + embed(b, m));
      CHECK((embed(a, m) == embed(b, m)) == (a == b));
      CHECK(embed(a, m) == embed(a, m));
    }
}

TEST_CASE("root_order") {
  CHECK(z(12, 4).root_order() == 3);
  CHECK(q(5, -1).root_order() == 2);
  CHECK((q(4, 2) + z(4)).root_order() == 0);
}
