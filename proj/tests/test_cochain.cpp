#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qdouble/cochain.hpp"
#include "qdouble/error.hpp"

using namespace qdouble;

static Cochain3 z2_table(int x, int y, int zz, CycScalar v) {
  auto phi = trivial_cocycle(make_group("zn:2"));
  return phi.embedded(v.order()).with_entry({x, y, zz}, v);
}

// independent exhaustive check of the pentagon identity and phi(x,e,y) = 1
static bool oracle_is_cocycle(const Cochain3& phi) {
  const auto& G = phi.group();
  const int n = G.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!phi(x, 0, y).is_one()) return false;
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          if (!(phi(y, s, t) * phi(x, G.mul(y, s), t) * phi(x, y, s) ==
                phi(x, y, G.mul(s, t)) * phi(G.mul(x, y), s, t)))
            return false;
    }
  return true;
}

TEST_CASE("verify_3cocycle examples") {
  CHECK(verify_3cocycle(trivial_cocycle(make_group("s:3"))).passed());
  const auto sign = z2_table(1, 1, 1, CycScalar::rational(2, -1));
  CHECK(oracle_is_cocycle(sign));
  CHECK(verify_3cocycle(sign).passed());
  const auto bad = z2_table(1, 1, 0, CycScalar::rational(2, -1));
  CHECK_FALSE(oracle_is_cocycle(bad));
  const Report r = verify_3cocycle(bad);
  CHECK_FALSE(r.passed());
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->witness.has_value());
}

TEST_CASE("a middle-slot violation is reported as normalization") {
  const auto bad = z2_table(1, 0, 1, CycScalar::rational(2, -1));
  const Report r = verify_3cocycle(bad);
  const auto* c = r.find("cocycle.normalized");
  REQUIRE(c != nullptr);
  CHECK(c->status == Status::fail);
  CHECK(c->witness->point == Point{1, 1});
}

TEST_CASE("standard cyclic cocycles match the formula") {
  for (int n : {2, 3, 4, 6})
    for (int p = 0; p < n; ++p) {
      CAPTURE(n);
      CAPTURE(p);
      const auto phi = standard_cocycle_cyclic(n, p);
      CHECK(oracle_is_cocycle(phi));
      const unsigned N = static_cast<unsigned>(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            CHECK(embed(phi(a, b, c), N) == CycScalar::root_of_unity(N, p * a * ((b + c) / n)));
    }
  const auto z2 = standard_cocycle_cyclic(2, 1);
  CHECK(z2(1, 1, 1) == CycScalar::rational(2, -1));
  int minus = 0;
  for (const auto& v : z2.values()) minus += v.is_one() ? 0 : 1;
  CHECK(minus == 1);
  const auto z3 = standard_cocycle_cyclic(3, 1);
  CHECK(z3(1, 2, 2) == CycScalar::root_of_unity(3, 1));
  CHECK(z3(2, 2, 2) == CycScalar::root_of_unity(3, 2));
  const auto untwisted = standard_cocycle_cyclic(4, 0);
  for (const auto& v : untwisted.values()) CHECK(v.is_one());
}

TEST_CASE("coboundaries and twists") {
  const auto s3 = make_group("s:3");
  Cochain2 one(s3, 1, std::vector<CycScalar>(36, CycScalar::one(1)));
  const auto d_one = coboundary(one);
  for (const auto& v : d_one.values()) CHECK(v.is_one());

  std::mt19937_64 rng(5);
  const auto z2 = make_group("zn:2");
  for (int rep = 0; rep < 5; ++rep) CHECK(coboundary(random_normalized_cochain2(z2, 4, rng))(1, 1, 1).is_one());

  for (int rep = 0; rep < 20; ++rep) {
    const auto beta = random_normalized_cochain2(s3, 6, rng);
    const auto db = coboundary(beta);
    CHECK(oracle_is_cocycle(db));
    CHECK(verify_3cocycle(db).passed());
  }
  const auto phi = standard_cocycle_cyclic(4, 1);
  const auto tw = twist(phi, random_normalized_cochain2(phi.group_ptr(), 4, rng));
  CHECK(verify_3cocycle(tw).passed());

  std::vector<CycScalar> vals(4, CycScalar::one(2));
  vals[1] = CycScalar::rational(2, -1);  // beta(0,1) = -1
  CHECK_THROWS_AS(coboundary(Cochain2(z2, 2, vals)), Error);
}

TEST_CASE("cohomology by brute force") {
  const auto z2 = make_group("zn:2");
  const auto triv = trivial_cocycle(z2);
  const auto sign = standard_cocycle_cyclic(2, 1);
  auto same = are_cohomologous_bruteforce(sign, sign, 4);
  CHECK(same.cohomologous);
  REQUIRE(same.witness);
  const auto no = are_cohomologous_bruteforce(triv, sign, 4);
  CHECK_FALSE(no.cohomologous);
  CHECK(no.candidates_checked == 4);

  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 5; ++rep) {
    const auto phi = standard_cocycle_cyclic(3, 1);
    const auto beta = random_normalized_cochain2(phi.group_ptr(), 3, rng);
    const auto phi2 = twist(phi, beta);
    const auto res = are_cohomologous_bruteforce(phi, phi2, 3);
    CHECK(res.cohomologous);
    REQUIRE(res.witness);
    const auto back = twist(phi, *res.witness);
    CHECK(back.values() == phi2.embedded(back.order()).values());
  }
  CHECK_THROWS_AS(are_cohomologous_bruteforce(trivial_cocycle(make_group("s:3")), trivial_cocycle(make_group("s:3")), 12, 1000),
                  Error);
}

TEST_CASE("chi examples") {
  const auto chi_s3 = chi_from_phi(trivial_cocycle(make_group("s:3")));
  for (const auto& v : chi_s3.values()) CHECK(v.is_one());
  const auto chi = chi_from_phi(standard_cocycle_cyclic(2, 1));
  CHECK(chi(1, 1, 1) == CycScalar::rational(2, -1));
  CHECK(chi(1, 1, 0).is_one());
  CHECK(chi(0, 1, 1).is_one());
  CHECK(chi(1, 0, 1).is_one());
}

TEST_CASE("chi normalization, oracle formula and 2-cocycle law") {
  std::mt19937_64 rng(2);
  std::vector<Cochain3> phis;
  for (int n : {2, 3, 4, 6})
    for (int p = 0; p < n; ++p) phis.push_back(standard_cocycle_cyclic(n, p));
  phis.push_back(trivial_cocycle(make_group("s:3")));
  phis.push_back(coboundary(random_normalized_cochain2(make_group("s:3"), 2, rng)));
  phis.push_back(twist(standard_cocycle_cyclic(4, 1), random_normalized_cochain2(make_group("zn:4"), 4, rng)));
  for (const auto& phi : phis) {
    CAPTURE(phi.label);
    const auto chi = chi_from_phi(phi);
    const oracle::DoubleOracle o{phi, phi.group()};
    const int n = phi.group().size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int s = 0; s < n; ++s) {
          CHECK(chi(x, y, s) == o.chi(x, y, s));
          if (phi.group().is_abelian()) CHECK(chi(x, y, s) == phi(x, y, s) * phi(s, x, y) / phi(x, s, y));
        }
    for (int x = 0; x < n; ++x)
      for (int s = 0; s < n; ++s) {
        CHECK(chi(x, 0, s).is_one());
        CHECK(chi(0, x, s).is_one());
        CHECK(chi(x, s, 0).is_one());
      }
    CHECK(verify_chi_2cocycle(chi).passed());
    CHECK(verify_full_normalization(phi).passed());
  }
}

TEST_CASE("corrupted chi fails with a witness") {
  const auto chi = chi_from_phi(standard_cocycle_cyclic(3, 1));
  const auto bad = chi.with_entry({1, 2, 1}, CycScalar::root_of_unity(3, 1) * chi(1, 2, 1));
  const Report r = verify_chi_2cocycle(bad);
  REQUIRE_FALSE(r.passed());
  const auto* f = r.first_failure();
  const auto res = replay_clause(chi_clauses(bad), f->name, f->witness->point);
  CHECK(res.status == Status::fail);
}
