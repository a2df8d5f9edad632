#include "qdouble/reconstruct.hpp"

#include "qdouble/error.hpp"

namespace qdouble {

namespace {

std::optional<std::string> diff_detail(const TensorElement& lhs, const TensorElement& rhs) {
  if (lhs == rhs) return std::nullopt;
  std::string s = "lhs " + lhs.to_string() + " != rhs " + rhs.to_string();
  if (s.size() > 240) s = s.substr(0, 237) + "...";
  return s;
}

struct Term3 {
  int a, b, c;
  CycScalar v;
};

std::vector<Term3> terms3(const TensorElement& t) {
  std::vector<Term3> out;
  for (const auto& [k, c] : t.terms()) {
    const auto idx = t.decode(k);
    out.push_back({idx[0], idx[1], idx[2], c});
  }
  return out;
}

}  // namespace

TensorElement PairedBases::iota(const TensorElement& h) const {
  TensorElement out(1, D->qhopf->dim(), D->qhopf->order());
  for (const auto& [k, c] : h.terms()) out.add({D->index(0, static_cast<int>(k))}, c);
  return out;
}

TensorElement PairedBases::iota_star(int f) const { return embed_group(*D, f); }

TensorElement PairedBases::dual_product(int b, int c) const {
  TensorElement out(1, n(), H->order());
  for (int a = 0; a < n(); ++a) {
    const auto& d = H->coproduct[static_cast<std::size_t>(a)];
    const auto v = d.coeff({b, c});
    if (!v.is_zero()) out.add({a}, v);
  }
  return out;
}

std::vector<std::pair<std::vector<int>, CycScalar>> PairedBases::dual_coproduct_n(int f, int k) const {
  std::vector<std::pair<std::vector<int>, CycScalar>> cur{{{f}, CycScalar::one(H->order())}};
  for (int step = 1; step < k; ++step) {
    std::vector<std::pair<std::vector<int>, CycScalar>> next;
    for (const auto& [tuple, c] : cur)
      for (const auto& [ab, w] : dual_coproduct[static_cast<std::size_t>(tuple[0])]) {
        std::vector<int> t{ab.first, ab.second};
        t.insert(t.end(), tuple.begin() + 1, tuple.end());
        next.push_back({std::move(t), c * w});
      }
    cur = std::move(next);
  }
  return cur;
}

PairedBases make_paired_bases(const DPRInstance& D, const ReconstructOptions& opts) {
  PairedBases P;
  P.D = std::make_shared<const DPRInstance>(D);
  const Cochain3& phi = opts.associator_override ? *opts.associator_override : D.phi;
  require(phi.group().table() == D.group->table(), ErrorCode::invalid_argument, "associator over a different group");
  require(phi.order() == D.qhopf->order(), ErrorCode::invalid_argument, "associator over a different scalar order");
  P.H = std::make_shared<const QuasiHopfData>(build_function_algebra(phi));
  P.phi_inv = tensor_inverse(P.H->associator, P.H->algebra);
  const int n = P.n();
  P.dual_coproduct.assign(static_cast<std::size_t>(n), {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& [c, w] : P.H->algebra.product(a, b)) P.dual_coproduct[static_cast<std::size_t>(c)].push_back({{a, b}, w});
  return P;
}

// f(1) . phi^-(1) . h <f(2), phi^-(2) beta S phi^-(3)>
//   = <f(1), h(1)(1)> <f(3), phi^-(2) beta S(phi^-(3) h(2))> h(1)(2) . f(2) . phi^-(1)
ClauseList doufh_clauses(std::shared_ptr<const PairedBases> P) {
  const long long n = P->n();
  ClauseList cl;
  cl.push_back({"doufh", [P, n](const Point* only) {
                  const auto& H = *P->H;
                  const auto& HA = H.algebra;
                  const auto& DA = P->D->qhopf->algebra;
                  const auto inv = terms3(P->phi_inv);
                  return scan_points({n, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int f = static_cast<int>(p[0]), s = static_cast<int>(p[1]);
                    const auto h = basis_vector(HA, s);
                    TensorElement lhs(1, DA.dim, DA.order), rhs(1, DA.dim, DA.order);
                    for (const auto& [fs, cf] : P->dual_coproduct_n(f, 2))
                      for (const auto& t : inv) {
                        const auto x = tensor_mul(tensor_mul(basis_vector(HA, t.b), *H.beta, HA),
                                                  apply_antipode(H, basis_vector(HA, t.c)), HA);
                        const auto pv = P->pair(fs[1], x);
                        if (pv.is_zero()) continue;
                        auto term = tensor_mul(tensor_mul(P->iota_star(fs[0]), P->iota(basis_vector(HA, t.a)), DA),
                                               P->iota(h), DA);
                        lhs += term.scaled(cf * t.v * pv);
                      }
                    // h(1)(1) (x) h(1)(2) (x) h(2)
                    const auto h3 = coproduct_extend(H, 0, H.coproduct[static_cast<std::size_t>(s)]);
                    for (const auto& [fs, cf] : P->dual_coproduct_n(f, 3))
                      for (const auto& [hk, hc] : h3.terms()) {
                        const auto hi = h3.decode(hk);
                        const auto p1 = P->pair(fs[0], basis_vector(HA, hi[0]));
                        if (p1.is_zero()) continue;
                        for (const auto& t : inv) {
                          const auto sarg = algebra_product(HA, t.c, hi[2]);
                          if (sarg.empty()) continue;
                          const auto x = tensor_mul(tensor_mul(basis_vector(HA, t.b), *H.beta, HA), apply_antipode(H, sarg), HA);
                          const auto p3 = P->pair(fs[2], x);
                          if (p3.is_zero()) continue;
                          auto term = tensor_mul(tensor_mul(P->iota(basis_vector(HA, hi[1])), P->iota_star(fs[1]), DA),
                                                 P->iota(basis_vector(HA, t.a)), DA);
                          rhs += term.scaled(cf * hc * t.v * p1 * p3);
                        }
                      }
                    return diff_detail(lhs, rhs);
                  });
                }, {}});
  return cl;
}

// <g(1),phi1><f(2),phi3> f(1) . phi2 . g(2)
//   = <g(1),phi'1><f(1),phi'2><g(3),phi2><f(3),phi3> phi'3 . (g(2) f(2)) . phi1
ClauseList doufg_clauses(std::shared_ptr<const PairedBases> P, bool drop_phi_prime) {
  const long long n = P->n();
  ClauseList cl;
  cl.push_back({"doufg", [P, n, drop_phi_prime](const Point* only) {
                  const auto& H = *P->H;
                  const auto& HA = H.algebra;
                  const auto& DA = P->D->qhopf->algebra;
                  const auto phi = terms3(H.associator);
                  const auto phi_prime = drop_phi_prime ? terms3(tensor_unit(HA, 3)) : phi;
                  return scan_points({n, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int f = static_cast<int>(p[0]), g = static_cast<int>(p[1]);
                    TensorElement lhs(1, DA.dim, DA.order), rhs(1, DA.dim, DA.order);
                    for (const auto& [gs, cg] : P->dual_coproduct_n(g, 2))
                      for (const auto& [fs, cf] : P->dual_coproduct_n(f, 2))
                        for (const auto& t : phi) {
                          const auto pv = P->pair(gs[0], basis_vector(HA, t.a)) * P->pair(fs[1], basis_vector(HA, t.c));
                          if (pv.is_zero()) continue;
                          auto term = tensor_mul(tensor_mul(P->iota_star(fs[0]), P->iota(basis_vector(HA, t.b)), DA),
                                                 P->iota_star(gs[1]), DA);
                          lhs += term.scaled(cg * cf * t.v * pv);
                        }
                    for (const auto& [gs, cg] : P->dual_coproduct_n(g, 3))
                      for (const auto& [fs, cf] : P->dual_coproduct_n(f, 3)) {
                        TensorElement gf(1, DA.dim, DA.order);
                        const auto prod = P->dual_product(gs[1], fs[1]);
                        for (const auto& [k, c] : prod.terms())
                          gf += P->iota_star(static_cast<int>(k)).scaled(c);
                        if (gf.empty()) continue;
                        for (const auto& t1 : phi_prime) {
                          const auto p1 = P->pair(gs[0], basis_vector(HA, t1.a)) * P->pair(fs[0], basis_vector(HA, t1.b));
                          if (p1.is_zero()) continue;
                          const auto left = tensor_mul(P->iota(basis_vector(HA, t1.c)), gf, DA);
                          for (const auto& t : phi) {
                            const auto p2 = P->pair(gs[2], basis_vector(HA, t.b)) * P->pair(fs[2], basis_vector(HA, t.c));
                            if (p2.is_zero()) continue;
                            rhs += tensor_mul(left, P->iota(basis_vector(HA, t.a)), DA).scaled(cg * cf * t1.v * t.v * p1 * p2);
                          }
                        }
                      }
                    return diff_detail(lhs, rhs);
                  });
                }, {}});
  return cl;
}

// Delta_D f = <f(1),phi'1><f(3),phi^-2><f(5),phi3>
//             phi'2 . f(2) . phi^-1 phi1 (x) phi'3 phi^-3 . f(4) . phi2
ClauseList doudelta_clauses(std::shared_ptr<const PairedBases> P, bool drop_phi_prime) {
  const long long n = P->n();
  ClauseList cl;
  cl.push_back({"doudelta", [P, n, drop_phi_prime](const Point* only) {
                  const auto& H = *P->H;
                  const auto& HA = H.algebra;
                  const auto& DA = P->D->qhopf->algebra;
                  const auto phi = terms3(H.associator);
                  const auto phi_prime = drop_phi_prime ? terms3(tensor_unit(HA, 3)) : phi;
                  const auto inv = terms3(P->phi_inv);
                  return scan_points({n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int f = static_cast<int>(p[0]);
                    const auto lhs = coproduct_extend(*P->D->qhopf, 0, P->iota_star(f));
                    TensorElement rhs(2, DA.dim, DA.order);
                    for (const auto& [fs, cf] : P->dual_coproduct_n(f, 5))
                      for (const auto& t1 : phi_prime) {
                        const auto p1 = P->pair(fs[0], basis_vector(HA, t1.a));
                        if (p1.is_zero()) continue;
                        for (const auto& ti : inv) {
                          const auto p3 = P->pair(fs[2], basis_vector(HA, ti.b));
                          if (p3.is_zero()) continue;
                          const auto right_h = algebra_product(HA, t1.c, ti.c);
                          if (right_h.empty()) continue;
                          for (const auto& t : phi) {
                            const auto p5 = P->pair(fs[4], basis_vector(HA, t.c));
                            if (p5.is_zero()) continue;
                            const auto left_h = algebra_product(HA, ti.a, t.a);
                            if (left_h.empty()) continue;
                            const auto left = tensor_mul(tensor_mul(P->iota(basis_vector(HA, t1.b)), P->iota_star(fs[1]), DA),
                                                         P->iota(left_h), DA);
                            const auto right = tensor_mul(tensor_mul(P->iota(right_h), P->iota_star(fs[3]), DA),
                                                          P->iota(basis_vector(HA, t.b)), DA);
                            rhs += outer(left, right).scaled(cf * t1.v * ti.v * t.v * p1 * p3 * p5);
                          }
                        }
                      }
                    return diff_detail(lhs, rhs);
                  });
                }, {}});
  cl.push_back({"doudelta.h", [P, n](const Point* only) {
                  return scan_points({n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int s = static_cast<int>(p[0]);
                    const auto lhs = coproduct_extend(*P->D->qhopf, 0, P->iota(basis_vector(P->H->algebra, s)));
                    TensorElement rhs(2, P->D->qhopf->dim(), P->D->qhopf->order());
                    for (const auto& [k, c] : P->H->coproduct[static_cast<std::size_t>(s)].terms()) {
                      const auto idx = P->H->coproduct[static_cast<std::size_t>(s)].decode(k);
                      rhs.add({P->D->index(0, idx[0]), P->D->index(0, idx[1])}, c);
                    }
                    return diff_detail(lhs, rhs);
                  });
                }, {}});
  return cl;
}

ClauseList douR_douphi_douact_clauses(std::shared_ptr<const PairedBases> P) {
  const long long n = P->n();
  ClauseList cl;
  cl.push_back({"douR", [P, n](const Point* only) -> std::optional<Witness> {
                  const auto& Dq = *P->D->qhopf;
                  if (!Dq.rmatrix) return Witness{{}, "double has no R-matrix"};
                  TensorElement R(2, Dq.dim(), Dq.order());
                  for (int a = 0; a < n; ++a) R += outer(P->iota_star(a), P->iota(basis_vector(P->H->algebra, a)));
                  return compare_tensors(*Dq.rmatrix, R, only);
                }, {}});
  cl.push_back({"douphi", [P](const Point* only) {
                  const auto& Dq = *P->D->qhopf;
                  TensorElement phi(3, Dq.dim(), Dq.order());
                  for (const auto& t : terms3(P->H->associator))
                    phi.add({P->D->index(0, t.a), P->D->index(0, t.b), P->D->index(0, t.c)}, t.v);
                  return compare_tensors(Dq.associator, phi, only);
                }, {}});
  // (f (x) h) |> v = <f, (h |> v)^(1)> (h |> v)^(2) on the regular object,
  // where the coaction paired with f^a is v <| a and h acts by degree.
  cl.push_back({"douact", [P, n](const Point* only) {
                  const auto& DA = P->D->qhopf->algebra;
                  const auto V = regular_object(P->D->phi);
                  const long long m = V.dim;
                  return scan_points({n, n, m}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int f = static_cast<int>(p[0]), s = static_cast<int>(p[1]), v = static_cast<int>(p[2]);
                    const auto fh = tensor_mul(P->iota_star(f), P->iota(basis_vector(P->H->algebra, s)), DA);
                    const auto lhs = tensor_mul(fh, basis_vector(DA, v), DA);
                    TensorElement rhs(1, DA.dim, DA.order);
                    const CycScalar hv = basis_vector(P->H->algebra, s).coeff({V.grading[static_cast<std::size_t>(v)]});
                    if (!hv.is_zero())
                      for (const auto& [u, c] : V.act(v, f)) rhs.add({u}, hv * c);
                    return diff_detail(lhs, rhs);
                  });
                }, {}});
  return cl;
}

Report verify_doufh(const DPRInstance& D, const ReconstructOptions& opts) {
  return run_clauses(doufh_clauses(std::make_shared<const PairedBases>(make_paired_bases(D, opts))));
}

Report verify_doufg(const DPRInstance& D, const ReconstructOptions& opts) {
  return run_clauses(doufg_clauses(std::make_shared<const PairedBases>(make_paired_bases(D, opts)), opts.drop_phi_prime));
}

Report verify_doudelta(const DPRInstance& D, const ReconstructOptions& opts) {
  return run_clauses(doudelta_clauses(std::make_shared<const PairedBases>(make_paired_bases(D, opts)), opts.drop_phi_prime));
}

Report verify_douR_douphi_douact(const DPRInstance& D, const ReconstructOptions& opts) {
  return run_clauses(douR_douphi_douact_clauses(std::make_shared<const PairedBases>(make_paired_bases(D, opts))));
}

ClauseList reconstruct_clauses(const DPRInstance& D, const ReconstructOptions& opts) {
  auto P = std::make_shared<const PairedBases>(make_paired_bases(D, opts));
  ClauseList cl;
  append_clauses(cl, doufh_clauses(P), "");
  append_clauses(cl, doufg_clauses(P, opts.drop_phi_prime), "");
  append_clauses(cl, doudelta_clauses(P, opts.drop_phi_prime), "");
  append_clauses(cl, douR_douphi_douact_clauses(P), "");
  return cl;
}

}  // namespace qdouble
