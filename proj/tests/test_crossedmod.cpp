#include "doctest.h"
#include "qdouble/crossedmod.hpp"
#include "qdouble/error.hpp"

using namespace qdouble;

namespace {

using ObjPtr = std::shared_ptr<const CrossedGModule>;

ObjPtr share(CrossedGModule V) { return std::make_shared<const CrossedGModule>(std::move(V)); }

// Two-dimensional object on Z_n: basis u (degree a), w (degree b), trivial action.
// Only a genuine object when phi is trivial on the relevant degrees, so it is
// used with the untwisted or the grading-only checks.
CrossedGModule two_point(const Cochain3& phi, int a, int b) {
  CrossedGModule V;
  V.group = phi.group_ptr();
  V.phi = std::make_shared<const Cochain3>(phi);
  V.dim = 2;
  V.grading = {a, b};
  const int n = V.group->size();
  V.action.resize(static_cast<std::size_t>(2 * n));
  for (int v = 0; v < 2; ++v)
    for (int x = 0; x < n; ++x) V.action[static_cast<std::size_t>(v * n + x)] = {{v, CycScalar::one(phi.order())}};
  V.label = "two_point";
  return V;
}

}  // namespace

TEST_CASE("sparse maps") {
  auto id = SparseMap::identity(3, 1);
  CHECK(id.nnz() == 3);
  CHECK(id.is_monomial());
  CHECK(id.rank() == 3);
  SparseMap m(3, 3, 1);
  m.set_column(0, {{1, CycScalar::one(1)}});
  m.set_column(1, {{1, CycScalar::rational(1, 2)}});
  CHECK(m.rank() == 1);
  CHECK(m.after(id) == m);
  CHECK(id.after(m) == m);
  const auto k = kron(id, m);
  CHECK(k.rows() == 9);
  CHECK(k.entry(1, 0) == CycScalar::one(1));
  CHECK(k.entry(4, 3) == CycScalar::one(1));
  CHECK(first_difference(m, id).has_value());
}

TEST_CASE("kron refuses to exceed the entry budget") {
  const std::size_t n = 1500;
  SparseMap dense(n, n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::pair<std::uint64_t, CycScalar>> col;
    for (std::uint64_t i = 0; i < n; ++i) col.push_back({i, CycScalar::one(1)});
    dense.set_column(j, std::move(col));
  }
  try {
    (void)kron(dense, dense);
    FAIL("expected budget_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
  }
}

TEST_CASE("regular and ideal objects are cocycle crossed modules") {
  for (const auto& phi : {standard_cocycle_cyclic(2, 1), standard_cocycle_cyclic(4, 1), trivial_cocycle(make_group("s:3"))}) {
    CAPTURE(phi.label);
    CHECK(verify_object(trivial_object(phi)).passed());
    CHECK(verify_object(regular_object(phi)).passed());
    for (int s = 0; s < phi.group().size(); ++s) CHECK(verify_object(ideal_object(phi, s)).passed());
  }
}

TEST_CASE("the twisted sign shows up in the regular action on Z2") {
  const auto phi = standard_cocycle_cyclic(2, 1);
  const auto V = regular_object(phi);
  REQUIRE(V.dim == 4);
  // basis y*2 + t; (y (x) d_t) <| x = chi(y,x)(t) yx (x) d_t
  for (int v = 0; v < 4; ++v)
    for (int x = 0; x < 2; ++x) {
      const auto& img = V.act(v, x);
      REQUIRE(img.size() == 1);
      const int y = v / 2, t = v % 2;
      CHECK(img[0].first == ((y + x) % 2) * 2 + t);
      const bool negative = v == 3 && x == 1;
      CHECK(img[0].second == CycScalar::rational(2, negative ? -1 : 1));
    }
  CHECK(V.grading == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("tensor product grading and action ratio") {
  const auto phi = standard_cocycle_cyclic(2, 1);
  const auto V = regular_object(phi);
  const auto VV = tensor_objects(V, V);
  CHECK(VV.dim == 16);
  CHECK(verify_object(VV).passed());
  // (v (x) w) <| 1 with |v| = |w| = 1 carries r(1,1,1) = phi(1,1,1)^2/phi(1,1,1) = -1
  const int v = 1, w = 1;  // e (x) d_1
  const auto& img = VV.act(v * 4 + w, 1);
  REQUIRE(img.size() == 1);
  CHECK(img[0].first == 3 * 4 + 3);
  CHECK(img[0].second == CycScalar::rational(2, -1));
}

TEST_CASE("associator is diagonal with phi of the degrees") {
  const auto phi = standard_cocycle_cyclic(2, 1);
  const auto V = regular_object(phi);
  const auto A = associator(V, V, V);
  CHECK(A.is_monomial());
  for (int i = 0; i < 64; ++i) {
    const int a = V.grading[static_cast<std::size_t>(i / 16)], b = V.grading[static_cast<std::size_t>((i / 4) % 4)],
              c = V.grading[static_cast<std::size_t>(i % 4)];
    CHECK(A.entry(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) == phi(a, b, c));
  }
  CHECK(associator_inverse(V, V, V).after(A) == SparseMap::identity(64, 2));
}

TEST_CASE("braiding is a morphism and squares to something other than the identity") {
  const auto phi = trivial_cocycle(make_group("zn:2"));
  const auto V = two_point(phi, 1, 1);
  const auto VV = tensor_objects(V, V);
  const auto Psi = braiding(V, V);
  CHECK(verify_morphism(Psi, VV, VV, true).passed());

  const auto phi4 = standard_cocycle_cyclic(4, 1);
  const auto R = regular_object(phi4);
  const auto RR = tensor_objects(R, R);
  const auto P = braiding(R, R);
  CHECK(verify_morphism(P, RR, RR, true).passed());
  CHECK_FALSE(P.after(P) == SparseMap::identity(static_cast<std::size_t>(RR.dim), phi4.order()));
}

TEST_CASE("hexagons, braid relation and pentagon hold") {
  for (const auto& phi : {standard_cocycle_cyclic(2, 1), standard_cocycle_cyclic(3, 1), standard_cocycle_cyclic(4, 2),
                          trivial_cocycle(make_group("s:3"))}) {
    CAPTURE(phi.label);
    const auto R = share(regular_object(phi));
    const auto I = share(ideal_object(phi, 1));
    const auto T = share(trivial_object(phi));
    const Report r = run_clauses(hexagon_clauses(R, I, R));
    CHECK(r.passed());
    CHECK(run_clauses(hexagon_clauses(I, T, I)).passed());
    CHECK(run_clauses(pentagon_clauses({R, I, R, I})).passed());
  }
}

TEST_CASE("wrong braidings fail the checks") {
  for (const auto& phi : {standard_cocycle_cyclic(4, 1), trivial_cocycle(make_group("s:3"))}) {
    CAPTURE(phi.label);
    const auto R = share(regular_object(phi));
    const auto cl = hexagon_clauses(R, R, R, BraidingVariant::inverted_degree);
    const Report r = run_clauses(cl);
    REQUIRE_FALSE(r.passed());
    const auto* f = r.first_failure();
    CHECK(replay_clause(cl, f->name, f->witness->point).status == Status::fail);
  }
  const auto phi = trivial_cocycle(make_group("s:3"));
  const auto R = regular_object(phi);
  const auto RR = tensor_objects(R, R);
  const Report lit = verify_morphism(braiding(R, R, BraidingVariant::flip_left_degree), RR, RR, true);
  CHECK_FALSE(lit.passed());
}

TEST_CASE("naturality against right multiplications") {
  const auto phi = standard_cocycle_cyclic(2, 1);
  const auto D = build_dpr(phi);
  const auto R = share(regular_object(phi));
  for (int b = 0; b < 4; ++b) {
    CAPTURE(b);
    auto f = std::make_shared<const SparseMap>(regular_right_multiplication(D, b));
    auto g = std::make_shared<const SparseMap>(regular_right_multiplication(D, 3 - b));
    CHECK(run_clauses(naturality_clauses(R, R, f, R, R, g)).passed());
  }
}

TEST_CASE("a map that ignores the grading is not a morphism") {
  const auto phi = standard_cocycle_cyclic(2, 1);
  const auto R = regular_object(phi);
  SparseMap swap01(4, 4, 2);
  swap01.set_column(0, {{1, CycScalar::one(2)}});
  swap01.set_column(1, {{0, CycScalar::one(2)}});
  swap01.set_column(2, {{2, CycScalar::one(2)}});
  swap01.set_column(3, {{3, CycScalar::one(2)}});
  const Report r = verify_morphism(swap01, R, R, true);
  CHECK(r.find("morphism.grading")->status == Status::fail);
  CHECK(r.find("morphism.invertible")->status == Status::pass);
}

TEST_CASE("corrupted objects are detected") {
  const auto phi = standard_cocycle_cyclic(2, 1);
  auto V = regular_object(phi);
  V.action[static_cast<std::size_t>(3 * 2 + 1)][0].second = CycScalar::one(2);
  const auto cl = object_clauses(share(V));
  const Report r = run_clauses(cl);
  const auto* f = r.find("object.cocycle_action");
  REQUIRE(f->status == Status::fail);
  CHECK(replay_clause(cl, f->name, f->witness->point).status == Status::fail);

  auto W = regular_object(phi);
  W.grading[1] = 0;
  CHECK_FALSE(verify_object(W).passed());
}

TEST_CASE("crossed modules and D-modules correspond") {
  for (const auto& phi : {standard_cocycle_cyclic(2, 1), standard_cocycle_cyclic(3, 1), trivial_cocycle(make_group("s:3"))}) {
    CAPTURE(phi.label);
    const auto D = build_dpr(phi);
    const auto Dp = std::make_shared<const DPRInstance>(D);
    for (const auto& V : {regular_object(phi), ideal_object(phi, 1), trivial_object(phi)}) {
      const auto M = crossed_to_module(D, V);
      CHECK(run_clauses(module_clauses(D.qhopf, std::make_shared<const LeftModule>(M))).passed());
      const auto back = module_to_crossed(D, M);
      CHECK(back.grading == V.grading);
      for (std::size_t i = 0; i < V.action.size(); ++i) CHECK(back.action[i] == V.action[i]);
    }
    const auto R = share(regular_object(phi));
    const auto I = share(ideal_object(phi, 0));
    CHECK(run_clauses(transport_clauses(Dp, R, I, R)).passed());
  }
}

TEST_CASE("a module violating the representation law is rejected") {
  const auto phi = standard_cocycle_cyclic(2, 1);
  const auto D = build_dpr(phi);
  auto M = crossed_to_module(D, regular_object(phi));
  M.act[static_cast<std::size_t>(D.index(1, 1))] = SparseMap::identity(4, 2);
  CHECK_THROWS_AS(module_to_crossed(D, M), Error);
}

TEST_CASE("regular module of D matches the regular object") {
  const auto phi = standard_cocycle_cyclic(3, 1);
  const auto D = build_dpr(phi);
  const auto M = std::make_shared<const LeftModule>(regular_module(*D.qhopf));
  CHECK(run_clauses(module_clauses(D.qhopf, M)).passed());
  const auto V = module_to_crossed(D, *M);
  CHECK(verify_object(V).passed());
}

TEST_CASE("variant names round trip") {
  for (auto b : {BraidingVariant::standard, BraidingVariant::inverted_degree, BraidingVariant::flip_left_degree})
    CHECK(parse_braiding_variant(braiding_variant_name(b)) == b);
  CHECK_THROWS_AS(parse_braiding_variant("sideways"), Error);
}
