#include "doctest.h"
#include "qdouble/dpr.hpp"
#include "qdouble/error.hpp"
#include "qdouble/qhopf.hpp"

using namespace qdouble;

// kZ2 written out by hand: e0 = 1, e1 = g, g^2 = 1, Delta g = g (x) g.
static QuasiHopfData hand_kz2() {
  const unsigned N = 1;
  const auto one = CycScalar::one(N);
  QuasiHopfData H;
  H.label = "kZ2";
  H.algebra.dim = 2;
  H.algebra.order = N;
  H.algebra.mul = {{{0, one}}, {{1, one}}, {{1, one}}, {{0, one}}};
  H.algebra.unit = TensorElement(1, 2, N);
  H.algebra.unit.add({0}, one);
  for (int i = 0; i < 2; ++i) {
    TensorElement d(2, 2, N);
    d.add({i, i}, one);
    H.coproduct.push_back(d);
    H.counit.push_back(one);
  }
  H.associator = TensorElement(3, 2, N);
  H.associator.add({0, 0, 0}, one);
  std::vector<TensorElement> S;
  for (int i = 0; i < 2; ++i) S.push_back(basis_vector(H.algebra, i));
  H.antipode = S;
  H.alpha = H.algebra.unit;
  H.beta = H.algebra.unit;
  TensorElement R(2, 2, N);
  R.add({0, 0}, one);
  H.rmatrix = R;
  return H;
}

TEST_CASE("tensor_mul basics") {
  const auto D = build_dpr(standard_cocycle_cyclic(2, 1));
  const auto& A = D.qhopf->algebra;
  for (int k = 1; k <= 3; ++k) {
    const auto u = tensor_unit(A, k);
    TensorElement x(k, A.dim, A.order);
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = (i * 3 + 1) % A.dim;
    x.add(idx, CycScalar::rational(A.order, 3));
    CHECK(tensor_mul(u, x, A) == x);
    CHECK(tensor_mul(x, u, A) == x);
  }
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      TensorElement expect(1, A.dim, A.order);
      for (const auto& [k, c] : A.product(i, j)) expect.add({k}, c);
      CHECK(tensor_mul(basis_vector(A, i), basis_vector(A, j), A) == expect);
    }
  const auto& phi = D.qhopf->associator;
  CHECK(tensor_mul(phi, tensor_inverse(phi, A), A) == tensor_unit(A, 3));
}

TEST_CASE("tensor_inverse examples") {
  const auto D = build_dpr(trivial_cocycle(make_group("zn:2")));
  const auto& A = D.qhopf->algebra;
  for (int k = 1; k <= 3; ++k) CHECK(tensor_inverse(tensor_unit(A, k), A) == tensor_unit(A, k));
  const auto& R = *D.qhopf->rmatrix;
  const auto Ri = tensor_inverse(R, A);
  CHECK(tensor_mul(R, Ri, A) == tensor_unit(A, 2));
  CHECK(tensor_mul(Ri, R, A) == tensor_unit(A, 2));

  // d_e (x) 1 in k(Z2)^(x)2 is a zero divisor
  const auto F = build_function_algebra(trivial_cocycle(make_group("zn:2")));
  TensorElement z(2, 2, 1);
  z.add({0, 0}, CycScalar::one(1));
  z.add({0, 1}, CycScalar::one(1));
  try {
    tensor_inverse(z, F.algebra);
    FAIL("expected not_invertible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_invertible);
  }
}

TEST_CASE("counit legs and the middle counit of phi") {
  const auto D = build_dpr(standard_cocycle_cyclic(3, 1));
  const auto& H = *D.qhopf;
  for (int i = 0; i < H.dim(); ++i) {
    CHECK(counit_extend(H, 1, H.coproduct[static_cast<std::size_t>(i)]) == basis_vector(H.algebra, i));
    CHECK(counit_extend(H, 0, H.coproduct[static_cast<std::size_t>(i)]) == basis_vector(H.algebra, i));
  }
  CHECK(counit_extend(H, 1, H.associator) == tensor_unit(H.algebra, 2));
}

TEST_CASE("coproduct_extend on a group algebra duplicates indices") {
  const auto K = build_group_algebra(make_group("s:3"));
  for (int x = 0; x < 6; ++x) {
    const auto t = coproduct_extend(K, 0, K.coproduct[static_cast<std::size_t>(x)]);
    TensorElement expect(3, 6, 1);
    expect.add({x, x, x}, CycScalar::one(1));
    CHECK(t == expect);
  }
}

TEST_CASE("ordinary Hopf algebras pass every clause") {
  const auto H = hand_kz2();
  CHECK(verify_quasibialgebra(H).passed());
  CHECK(verify_antipode(H).passed());
  CHECK(verify_quasitriangular(H).passed());
  CHECK(run_clauses(ordinary_hopf_clauses(std::make_shared<const QuasiHopfData>(H))).passed());
  const auto K = build_group_algebra(make_group("s:3"));
  CHECK(verify_quasibialgebra(K).passed());
  CHECK(verify_antipode(K).passed());
}

TEST_CASE("the twisted function algebra has an antipode") {
  for (const auto& phi : {standard_cocycle_cyclic(2, 1), standard_cocycle_cyclic(3, 1), standard_cocycle_cyclic(4, 1),
                          trivial_cocycle(make_group("s:3"))}) {
    CAPTURE(phi.label);
    const auto F = build_function_algebra(phi);
    CHECK(verify_quasibialgebra(F).passed());
    CHECK(verify_antipode(F).passed());
  }
}

TEST_CASE("twisted double over Z2 passes quasi-bialgebra and quasitriangularity") {
  const auto D = build_dpr(standard_cocycle_cyclic(2, 1));
  CHECK(verify_quasibialgebra(*D.qhopf).passed());
  CHECK(verify_quasitriangular(*D.qhopf).passed());
}

TEST_CASE("missing antipode data is skipped, not failed") {
  const auto D = build_dpr(standard_cocycle_cyclic(2, 1));
  const Report r = verify_antipode(*D.qhopf);
  CHECK(r.passed());
  REQUIRE_FALSE(r.clauses().empty());
  for (const auto& c : r.clauses()) CHECK(c.status == Status::skipped);
}

TEST_CASE("a broken bialgebra is caught") {
  auto H = hand_kz2();
  H.coproduct[1] = TensorElement(2, 2, 1);
  H.coproduct[1].add({1, 0}, CycScalar::one(1));
  const Report r = verify_quasibialgebra(H);
  CHECK_FALSE(r.passed());
  // Delta g = g (x) 1 is still multiplicative and coassociative
  CHECK(r.find("coproduct.multiplicative")->status == Status::pass);
  const bool left = r.find("counit.left")->status == Status::fail;
  const bool right = r.find("counit.right")->status == Status::fail;
  CHECK(left != right);
}

TEST_CASE("deleting the coproduct ratio on Z2 is caught by the R-matrix") {
  // For abelian G the associator conjugation in quasi-coassociativity cancels
  // the ratio, so that clause alone cannot see the deletion.
  const auto D = build_dpr(standard_cocycle_cyclic(2, 1), DprMutation::drop_coproduct_ratio);
  CHECK(verify_quasibialgebra(*D.qhopf).find("quasi_coassociativity")->status == Status::pass);
  const Report r = verify_quasitriangular(*D.qhopf);
  const auto* c = r.find("qqua.coproduct_left");
  REQUIRE(c->status == Status::fail);
  const auto res = replay_clause(quasitriangular_clauses(D.qhopf), c->name, c->witness->point);
  CHECK(res.status == Status::fail);
}

TEST_CASE("a dropped R term is caught") {
  const auto D = build_dpr(standard_cocycle_cyclic(2, 1), DprMutation::drop_rmatrix_term);
  const Report r = verify_quasitriangular(*D.qhopf);
  CHECK(r.find("rmatrix.invertible")->status == Status::fail);
  CHECK(r.find("qqua.coproduct_left")->status == Status::fail);
}

TEST_CASE("compare_tensors witnesses the first differing tuple") {
  TensorElement a(2, 3, 1), b(2, 3, 1);
  a.add({1, 2}, CycScalar::one(1));
  b.add({1, 2}, CycScalar::one(1));
  CHECK_FALSE(compare_tensors(a, b, nullptr));
  b.add({2, 0}, CycScalar::one(1));
  const auto w = compare_tensors(a, b, nullptr);
  REQUIRE(w);
  CHECK(w->point == Point{2, 0});
  const Point other{1, 2};
  CHECK_FALSE(compare_tensors(a, b, &other));
}
