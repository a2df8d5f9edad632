#include "doctest.h"
#include "qdouble/reconstruct.hpp"

using namespace qdouble;

namespace {

const std::vector<std::string> kRelations = {"doufh", "doufg", "doudelta", "doudelta.h", "douR", "douphi", "douact"};

Report run(const DPRInstance& D, const ReconstructOptions& opts = {}) { return run_clauses(reconstruct_clauses(D, opts)); }

}  // namespace

TEST_CASE("paired bases") {
  const auto D = build_dpr(standard_cocycle_cyclic(3, 1));
  const auto P = make_paired_bases(D);
  CHECK(P.n() == 3);
  // f^b f^c = f^{bc}: kG is the dual of k(G)
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 3; ++c) {
      TensorElement e(1, 3, P.H->order());
      e.add({(b + c) % 3}, CycScalar::one(P.H->order()));
      CHECK(P.dual_product(b, c) == e);
    }
  // Delta f^c = f^c (x) f^c
  for (int c = 0; c < 3; ++c) {
    const auto terms = P.dual_coproduct_n(c, 3);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].first == std::vector<int>{c, c, c});
  }
  CHECK(P.iota_star(0) == D.qhopf->algebra.unit);
  CHECK(tensor_mul(P.phi_inv, P.H->associator, P.H->algebra) == tensor_unit(P.H->algebra, 3));
}

TEST_CASE("all relations hold") {
  for (const auto& phi : {trivial_cocycle(make_group("zn:2")), standard_cocycle_cyclic(2, 1), standard_cocycle_cyclic(3, 1),
                          standard_cocycle_cyclic(4, 1), standard_cocycle_cyclic(4, 2), trivial_cocycle(make_group("s:3"))}) {
    CAPTURE(phi.label);
    const Report r = run(build_dpr(phi));
    for (const auto& name : kRelations) {
      CAPTURE(name);
      REQUIRE(r.find(name) != nullptr);
      CHECK(r.find(name)->status == Status::pass);
    }
  }
}

TEST_CASE("the report wrappers agree with the clause lists") {
  const auto D = build_dpr(standard_cocycle_cyclic(2, 1));
  CHECK(verify_doufh(D).passed());
  CHECK(verify_doufg(D).passed());
  CHECK(verify_doudelta(D).passed());
  CHECK(verify_douR_douphi_douact(D).passed());
  CHECK(verify_douR_douphi_douact(D).clauses().size() == 3);
}

TEST_CASE("a sign flip in chi breaks the H-H* cross relation") {
  for (const auto& phi : {standard_cocycle_cyclic(2, 1), trivial_cocycle(make_group("s:3"))}) {
    CAPTURE(phi.label);
    const auto D = build_dpr(phi, DprMutation::flip_chi_sign);
    const auto cl = reconstruct_clauses(D);
    const Report r = run_clauses(cl);
    const auto* f = r.find("doufh");
    REQUIRE(f->status == Status::fail);
    CHECK(replay_clause(cl, "doufh", f->witness->point).status == Status::fail);
  }
}

TEST_CASE("dropping the second associator copy is detected on twisted groups") {
  const auto D = build_dpr(standard_cocycle_cyclic(4, 1));
  ReconstructOptions o;
  o.drop_phi_prime = true;
  const Report r = run(D, o);
  CHECK(r.find("doufg")->status == Status::fail);
  CHECK(r.find("doudelta")->status == Status::fail);
  CHECK(r.find("doufh")->status == Status::pass);

  // with phi trivial there is nothing to drop
  CHECK(run(build_dpr(trivial_cocycle(make_group("s:3"))), o).passed());
}

TEST_CASE("a different associator on H breaks the coproduct relation") {
  const auto phi = standard_cocycle_cyclic(2, 1);
  const auto D = build_dpr(phi);
  ReconstructOptions o;
  o.associator_override = trivial_cocycle(phi.group_ptr()).embedded(phi.order());
  const Report r = run(D, o);
  CHECK_FALSE(r.passed());
  CHECK(r.find("douphi")->status == Status::fail);
}

TEST_CASE("swapped R legs fail douR with a replayable witness") {
  for (const auto& phi : {standard_cocycle_cyclic(2, 1), standard_cocycle_cyclic(3, 1)}) {
    const auto D = build_dpr(phi, DprMutation::swap_rmatrix_legs);
    const auto cl = reconstruct_clauses(D);
    const Report r = run_clauses(cl);
    const auto* f = r.find("douR");
    REQUIRE(f->status == Status::fail);
    CHECK(replay_clause(cl, "douR", f->witness->point).status == Status::fail);
    CHECK(r.find("doufh")->status == Status::pass);
  }
}

TEST_CASE("a product without chi breaks the action relation") {
  const auto D = build_dpr(standard_cocycle_cyclic(4, 1), DprMutation::drop_chi);
  const Report r = run(D);
  CHECK(r.find("douact")->status == Status::fail);
}
