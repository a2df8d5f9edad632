#include "doctest.h"
#include "oracles.hpp"
#include "qdouble/dpr.hpp"
#include "qdouble/error.hpp"
#include "qdouble/qhopf.hpp"

using namespace qdouble;

static std::vector<Cochain3> small_catalog() {
  return {trivial_cocycle(make_group("zn:2")), standard_cocycle_cyclic(2, 1), standard_cocycle_cyclic(3, 1),
          standard_cocycle_cyclic(4, 1), trivial_cocycle(make_group("s:3"))};
}

TEST_CASE("structure constants match the product and coproduct formulas") {
  for (const auto& phi : small_catalog()) {
    CAPTURE(phi.label);
    const auto D = build_dpr(phi);
    const auto& G = phi.group();
    const int n = G.size();
    const oracle::DoubleOracle o{phi, G};
    const auto& A = D.qhopf->algebra;
    REQUIRE(A.dim == n * n);
    for (int x = 0; x < n; ++x)
      for (int s = 0; s < n; ++s)
        for (int y = 0; y < n; ++y)
          for (int t = 0; t < n; ++t) {
            const auto got = tensor_mul(basis_vector(A, x * n + s), basis_vector(A, y * n + t), A);
            for (int z = 0; z < n; ++z)
              for (int u = 0; u < n; ++u) CHECK(got.coeff({z * n + u}) == o.product(x, s, y, t, z, u));
          }
    for (int x = 0; x < n; ++x)
      for (int s = 0; s < n; ++s) {
        TensorElement expect(2, n * n, phi.order());
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (G.mul(a, b) == s) expect.add({x * n + a, x * n + b}, o.ratio(x, a, b));
        CHECK(D.qhopf->coproduct[static_cast<std::size_t>(x * n + s)] == expect);
        CHECK(D.qhopf->counit[static_cast<std::size_t>(x * n + s)] ==
              (s == 0 ? CycScalar::one(phi.order()) : CycScalar::zero(phi.order())));
      }
  }
}

TEST_CASE("product examples") {
  const auto D = build_dpr(standard_cocycle_cyclic(2, 1));
  const auto& A = D.qhopf->algebra;
  // (1 (x) d_1)(1 (x) d_1) = -(0 (x) d_1)
  TensorElement expect(1, 4, 2);
  expect.add({D.index(0, 1)}, CycScalar::rational(2, -1));
  CHECK(tensor_mul(basis_vector(A, D.index(1, 1)), basis_vector(A, D.index(1, 1)), A) == expect);

  const auto T = build_dpr(trivial_cocycle(make_group("zn:2")));
  const auto& B = T.qhopf->algebra;
  for (int x = 0; x < 2; ++x)
    for (int s = 0; s < 2; ++s)
      for (int y = 0; y < 2; ++y)
        for (int t = 0; t < 2; ++t) {
          TensorElement e(1, 4, 1);
          if (s == t) e.add({T.index((x + y) % 2, t)}, CycScalar::one(1));
          CHECK(tensor_mul(basis_vector(B, T.index(x, s)), basis_vector(B, T.index(y, t)), B) == e);
        }
}

TEST_CASE("the group part multiplies as kG^op") {
  const auto D = build_dpr(trivial_cocycle(make_group("s:3")));
  const auto& G = *D.group;
  const auto& A = D.qhopf->algebra;
  bool noncommuting = false;
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      CHECK(tensor_mul(embed_group(D, x), embed_group(D, y), A) == embed_group(D, G.mul(y, x)));
      noncommuting = noncommuting || G.mul(x, y) != G.mul(y, x);
    }
  CHECK(noncommuting);
}

TEST_CASE("unit is two-sided") {
  for (const auto& phi : small_catalog()) {
    const auto D = build_dpr(phi);
    const auto& A = D.qhopf->algebra;
    for (int i = 0; i < A.dim; ++i) {
      CHECK(tensor_mul(A.unit, basis_vector(A, i), A) == basis_vector(A, i));
      CHECK(tensor_mul(basis_vector(A, i), A.unit, A) == basis_vector(A, i));
    }
  }
}

TEST_CASE("verify_dpr passes on the small catalog") {
  for (const auto& phi : small_catalog()) {
    CAPTURE(phi.label);
    const Report r = verify_dpr(attach_antipode(build_dpr(phi)));
    CHECK(r.passed());
    for (const auto& c : r.clauses()) CHECK(c.status == Status::pass);
  }
}

TEST_CASE("trivial group gives a one-dimensional double") {
  const auto D = attach_antipode(build_dpr(trivial_cocycle(make_group("zn:1"))));
  CHECK(D.qhopf->dim() == 1);
  CHECK(verify_dpr(D).passed());
}

TEST_CASE("degeneration to the ordinary double") {
  for (const char* g : {"zn:2", "prod(zn:2,zn:2)", "s:3"}) {
    const auto D = build_dpr(trivial_cocycle(make_group(g)));
    CHECK(run_clauses(dpr_degeneration_clauses(D)).passed());
    CHECK(D.qhopf->associator == tensor_unit(D.qhopf->algebra, 3));
  }
  const auto T = build_dpr(standard_cocycle_cyclic(2, 1));
  const Report r = run_clauses(dpr_degeneration_clauses(T));
  CHECK(r.find("degeneration.hopf.trivial_associator")->status == Status::fail);
}

TEST_CASE("antipode coefficients") {
  const auto T = attach_antipode(build_dpr(trivial_cocycle(make_group("s:3"))));
  REQUIRE_FALSE(T.antipode_absent);
  const auto& G = *T.group;
  for (int x = 0; x < 6; ++x)
    for (int s = 0; s < 6; ++s) {
      TensorElement e(1, 36, 1);
      e.add({T.index(G.inv(x), G.conj(x, G.inv(s)))}, CycScalar::one(1));
      CHECK((*T.qhopf->antipode)[static_cast<std::size_t>(T.index(x, s))] == e);
    }
  CHECK(*T.qhopf->alpha == T.qhopf->algebra.unit);
  CHECK(*T.qhopf->beta == T.qhopf->algebra.unit);

  const auto Z = attach_antipode(build_dpr(standard_cocycle_cyclic(2, 1)));
  REQUIRE_FALSE(Z.antipode_absent);
  CHECK(verify_antipode(*Z.qhopf).passed());
  const auto& S11 = (*Z.qhopf->antipode)[static_cast<std::size_t>(Z.index(1, 1))];
  REQUIRE(S11.size() == 1);
  const auto c = S11.terms().begin()->second.embed(4);
  const bool in_mu4 = c == CycScalar::one(4) || c == -CycScalar::one(4) || c == CycScalar::root_of_unity(4, 1) ||
                      c == CycScalar::root_of_unity(4, 3);
  CHECK(in_mu4);
}

TEST_CASE("unverified cocycles are rejected") {
  const auto bad = trivial_cocycle(make_group("zn:2")).embedded(2).with_entry({1, 1, 0}, CycScalar::rational(2, -1));
  try {
    build_dpr(bad);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
}

TEST_CASE("mutations fail with replayable witnesses") {
  struct Case {
    const char* group;
    int n, p;
    DprMutation m;
    const char* clause;
  };
  const Case cases[] = {
      {"zn:3", 3, 1, DprMutation::invert_coproduct_ratio, "quasitriangular.qqua.coproduct_left"},
      {"zn:4", 4, 1, DprMutation::drop_chi, "quasitriangular.qqua.coproduct_right"},
      {"zn:2", 2, 1, DprMutation::drop_coproduct_ratio, "quasitriangular.qqua.coproduct_left"},
      {"zn:2", 2, 1, DprMutation::drop_rmatrix_term, "quasitriangular.rmatrix.invertible"},
      {"zn:3", 3, 1, DprMutation::swap_rmatrix_legs, "quasitriangular.qqua.coproduct_left"},
      {"zn:3", 3, 1, DprMutation::literal_rmatrix, "quasitriangular.qqua.coproduct_left"},
  };
  for (const auto& c : cases) {
    CAPTURE(mutation_name(c.m));
    const auto D = build_dpr(standard_cocycle_cyclic(c.n, c.p), c.m);
    const auto cl = dpr_clauses(D);
    const Report r = run_clauses(cl);
    const auto* f = r.find(c.clause);
    REQUIRE(f != nullptr);
    REQUIRE(f->status == Status::fail);
    CHECK(replay_clause(cl, f->name, f->witness->point).status == Status::fail);
  }
}

TEST_CASE("literal R fails on S3 as well") {
  const auto D = build_dpr(trivial_cocycle(make_group("s:3")), DprMutation::literal_rmatrix);
  CHECK_FALSE(verify_quasitriangular(*D.qhopf).passed());
}

TEST_CASE("mutation names round trip") {
  for (auto m : {DprMutation::none, DprMutation::drop_chi, DprMutation::flip_chi_sign, DprMutation::invert_coproduct_ratio,
                 DprMutation::drop_coproduct_ratio, DprMutation::drop_rmatrix_term, DprMutation::swap_rmatrix_legs,
                 DprMutation::literal_rmatrix})
    CHECK(parse_mutation(mutation_name(m)) == m);
  CHECK(parse_mutation("swap-rmatrix-legs") == DprMutation::swap_rmatrix_legs);
  CHECK_THROWS_AS(parse_mutation("nope"), Error);
}
