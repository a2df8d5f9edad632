#include "qdouble/qhopf.hpp"

#include <mutex>

#include "qdouble/error.hpp"

namespace qdouble {

namespace {

std::string clip(std::string s) {
  if (s.size() > 240) s = s.substr(0, 237) + "...";
  return s;
}

// Lazily computed inverses of phi and R, shared by the clauses of one run.
struct InverseCache {
  QuasiHopfPtr H;
  std::once_flag phi_once, r_once;
  std::optional<TensorElement> phi_inv, r_inv;
  std::string phi_err, r_err;

  const TensorElement* phi_inverse() {
    std::call_once(phi_once, [this] {
      try {
        phi_inv = tensor_inverse(H->associator, H->algebra);
      } catch (const Error& e) {
        phi_err = e.what();
      }
    });
    return phi_inv ? &*phi_inv : nullptr;
  }
  const TensorElement* r_inverse() {
    std::call_once(r_once, [this] {
      try {
        r_inv = tensor_inverse(*H->rmatrix, H->algebra);
      } catch (const Error& e) {
        r_err = e.what();
      }
    });
    return r_inv ? &*r_inv : nullptr;
  }
};

Witness whole(const std::string& detail) { return Witness{{}, detail}; }

std::optional<std::string> diff_detail(const TensorElement& lhs, const TensorElement& rhs) {
  if (lhs == rhs) return std::nullopt;
  return clip("lhs " + lhs.to_string() + " != rhs " + rhs.to_string());
}

TensorElement scalar_unit(const AlgebraData& alg, const CycScalar& c) { return alg.unit.scaled(c); }

}  // namespace

std::optional<Witness> compare_tensors(const TensorElement& lhs, const TensorElement& rhs, const Point* only) {
  if (only) {
    std::vector<int> idx(only->begin(), only->end());
    require(static_cast<int>(idx.size()) == lhs.arity(), ErrorCode::invalid_argument,
            "witness point has wrong arity: " + point_to_string(*only));
    for (int i : idx)
      require(i >= 0 && i < lhs.dim(), ErrorCode::invalid_argument,
              "witness point out of range: " + point_to_string(*only));
    const CycScalar a = lhs.coeff(idx), b = rhs.coeff(idx);
    if (a == b) return std::nullopt;
    return Witness{*only, "lhs coefficient " + a.to_string() + " != rhs coefficient " + b.to_string()};
  }
  const auto key = first_difference(lhs, rhs);
  if (!key) return std::nullopt;
  const auto idx = lhs.decode(*key);
  Point p(idx.begin(), idx.end());
  const CycScalar a = lhs.coeff(idx), b = rhs.coeff(idx);
  return Witness{p, "lhs coefficient " + a.to_string() + " != rhs coefficient " + b.to_string()};
}

TensorElement algebra_product(const AlgebraData& alg, int i, int j) {
  TensorElement t(1, alg.dim, alg.order);
  for (const auto& [k, c] : alg.product(i, j)) t.add({k}, c);
  return t;
}

TensorElement apply_antipode(const QuasiHopfData& H, const TensorElement& a) {
  require(H.antipode.has_value(), ErrorCode::invalid_argument, "no antipode");
  require(a.arity() == 1, ErrorCode::invalid_argument, "apply_antipode needs arity 1");
  return apply_on_leg(a, 0, *H.antipode);
}

TensorElement opposite_coproduct(const QuasiHopfData& H, int h) {
  return permute_legs(H.coproduct[static_cast<std::size_t>(h)], {2, 1});
}

ClauseList algebra_clauses(QuasiHopfPtr H) {
  const long long d = H->dim();
  ClauseList cl;
  cl.push_back({"algebra.associativity", [H, d](const Point* only) {
                  const auto& A = H->algebra;
                  return scan_points({d, d, d}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int i = static_cast<int>(p[0]), j = static_cast<int>(p[1]), k = static_cast<int>(p[2]);
                    auto lhs = tensor_mul(algebra_product(A, i, j), basis_vector(A, k), A);
                    auto rhs = tensor_mul(basis_vector(A, i), algebra_product(A, j, k), A);
                    return diff_detail(lhs, rhs);
                  });
                }, {}});
  cl.push_back({"algebra.unit", [H, d](const Point* only) {
                  const auto& A = H->algebra;
                  return scan_points({d}, only, [&](const Point& p) -> std::optional<std::string> {
                    const auto e = basis_vector(A, static_cast<int>(p[0]));
                    if (auto w = diff_detail(tensor_mul(A.unit, e, A), e)) return "left: " + *w;
                    if (auto w = diff_detail(tensor_mul(e, A.unit, A), e)) return "right: " + *w;
                    return std::nullopt;
                  });
                }, {}});
  return cl;
}

ClauseList quasibialgebra_clauses(QuasiHopfPtr H) {
  const long long d = H->dim();
  auto cache = std::make_shared<InverseCache>();
  cache->H = H;
  ClauseList cl = algebra_clauses(H);

  cl.push_back({"coproduct.multiplicative", [H, d](const Point* only) {
                  const auto& A = H->algebra;
                  return scan_points({d, d}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int i = static_cast<int>(p[0]), j = static_cast<int>(p[1]);
                    auto lhs = coproduct_extend(*H, 0, algebra_product(A, i, j));
                    auto rhs = tensor_mul(H->coproduct[static_cast<std::size_t>(i)],
                                          H->coproduct[static_cast<std::size_t>(j)], A);
                    return diff_detail(lhs, rhs);
                  });
                }, {}});
  cl.push_back({"coproduct.unital", [H](const Point* only) {
                  return compare_tensors(coproduct_extend(*H, 0, H->algebra.unit), tensor_unit(H->algebra, 2), only);
                }, {}});
  cl.push_back({"counit.multiplicative", [H, d](const Point* only) {
                  const auto& A = H->algebra;
                  return scan_points({d, d}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int i = static_cast<int>(p[0]), j = static_cast<int>(p[1]);
                    const auto lhs = counit_value(*H, algebra_product(A, i, j));
                    const auto rhs = H->counit[static_cast<std::size_t>(i)] * H->counit[static_cast<std::size_t>(j)];
                    if (lhs == rhs) return std::nullopt;
                    return "eps(e_i e_j) = " + lhs.to_string() + " != " + rhs.to_string();
                  });
                }, {}});
  cl.push_back({"counit.unital", [H](const Point* only) {
                  return scan_points({}, only, [&](const Point&) -> std::optional<std::string> {
                    const auto v = counit_value(*H, H->algebra.unit);
                    if (v.is_one()) return std::nullopt;
                    return "eps(1) = " + v.to_string();
                  });
                }, {}});
  cl.push_back({"associator.invertible", [cache](const Point* only) -> std::optional<Witness> {
                  return scan_points({}, only, [&](const Point&) -> std::optional<std::string> {
                    if (cache->phi_inverse()) return std::nullopt;
                    return cache->phi_err;
                  });
                }, {}});
  cl.push_back({"quasi_coassociativity", [H, d, cache](const Point* only) -> std::optional<Witness> {
                  const auto* phi_inv = cache->phi_inverse();
                  if (!phi_inv) return whole("associator is not invertible: " + cache->phi_err);
                  const auto& A = H->algebra;
                  return scan_points({d}, only, [&](const Point& p) -> std::optional<std::string> {
                    const auto& dh = H->coproduct[static_cast<std::size_t>(p[0])];
                    auto lhs = tensor_mul(tensor_mul(H->associator, coproduct_extend(*H, 0, dh), A), *phi_inv, A);
                    auto rhs = coproduct_extend(*H, 1, dh);
                    return diff_detail(lhs, rhs);
                  });
                }, {}});
  cl.push_back({"counit.left", [H, d](const Point* only) {
                  return scan_points({d}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int h = static_cast<int>(p[0]);
                    return diff_detail(counit_extend(*H, 0, H->coproduct[static_cast<std::size_t>(h)]),
                                       basis_vector(H->algebra, h));
                  });
                }, {}});
  cl.push_back({"counit.right", [H, d](const Point* only) {
                  return scan_points({d}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int h = static_cast<int>(p[0]);
                    return diff_detail(counit_extend(*H, 1, H->coproduct[static_cast<std::size_t>(h)]),
                                       basis_vector(H->algebra, h));
                  });
                }, {}});
  cl.push_back({"pentagon", [H](const Point* only) {
                  const auto& A = H->algebra;
                  const auto& phi = H->associator;
                  auto lhs = tensor_mul(tensor_mul(place_legs(phi, {1, 2, 3}, 4, A), coproduct_extend(*H, 1, phi), A),
                                        place_legs(phi, {0, 1, 2}, 4, A), A);
                  auto rhs = tensor_mul(coproduct_extend(*H, 2, phi), coproduct_extend(*H, 0, phi), A);
                  return compare_tensors(lhs, rhs, only);
                }, {}});
  cl.push_back({"associator.counit_middle", [H](const Point* only) {
                  return compare_tensors(counit_extend(*H, 1, H->associator), tensor_unit(H->algebra, 2), only);
                }, {}});
  return cl;
}

Report verify_quasibialgebra(const QuasiHopfData& H) {
  return run_clauses(quasibialgebra_clauses(std::make_shared<const QuasiHopfData>(H)));
}

ClauseList antipode_clauses(QuasiHopfPtr H) {
  static const char* names[] = {"antipode.alpha",   "antipode.beta",          "antipode.phi_beta_alpha",
                                "antipode.phiinv_alpha_beta", "antipode.antihomomorphism", "antipode.bijective"};
  ClauseList cl;
  if (!H->antipode || !H->alpha || !H->beta) {
    for (const char* n : names) cl.push_back({n, nullptr, std::string("no antipode data attached")});
    return cl;
  }
  const long long d = H->dim();
  auto cache = std::make_shared<InverseCache>();
  cache->H = H;

  cl.push_back({names[0], [H, d](const Point* only) {
                  const auto& A = H->algebra;
                  return scan_points({d}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int h = static_cast<int>(p[0]);
                    TensorElement lhs(1, A.dim, A.order);
                    for (const auto& [k, c] : H->coproduct[static_cast<std::size_t>(h)].terms()) {
                      const auto idx = H->coproduct[static_cast<std::size_t>(h)].decode(k);
                      auto t = tensor_mul(tensor_mul(apply_antipode(*H, basis_vector(A, idx[0])), *H->alpha, A),
                                          basis_vector(A, idx[1]), A);
                      lhs += t.scaled(c);
                    }
                    return diff_detail(lhs, H->alpha->scaled(H->counit[static_cast<std::size_t>(h)]));
                  });
                }, {}});
  cl.push_back({names[1], [H, d](const Point* only) {
                  const auto& A = H->algebra;
                  return scan_points({d}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int h = static_cast<int>(p[0]);
                    TensorElement lhs(1, A.dim, A.order);
                    for (const auto& [k, c] : H->coproduct[static_cast<std::size_t>(h)].terms()) {
                      const auto idx = H->coproduct[static_cast<std::size_t>(h)].decode(k);
                      auto t = tensor_mul(tensor_mul(basis_vector(A, idx[0]), *H->beta, A),
                                          apply_antipode(*H, basis_vector(A, idx[1])), A);
                      lhs += t.scaled(c);
                    }
                    return diff_detail(lhs, H->beta->scaled(H->counit[static_cast<std::size_t>(h)]));
                  });
                }, {}});
  cl.push_back({names[2], [H](const Point* only) {
                  const auto& A = H->algebra;
                  TensorElement lhs(1, A.dim, A.order);
                  for (const auto& [k, c] : H->associator.terms()) {
                    const auto idx = H->associator.decode(k);
                    auto t = tensor_mul(basis_vector(A, idx[0]), *H->beta, A);
                    t = tensor_mul(t, apply_antipode(*H, basis_vector(A, idx[1])), A);
                    t = tensor_mul(tensor_mul(t, *H->alpha, A), basis_vector(A, idx[2]), A);
                    lhs += t.scaled(c);
                  }
                  return compare_tensors(lhs, A.unit, only);
                }, {}});
  cl.push_back({names[3], [H, cache](const Point* only) -> std::optional<Witness> {
                  const auto* phi_inv = cache->phi_inverse();
                  if (!phi_inv) return whole("associator is not invertible: " + cache->phi_err);
                  const auto& A = H->algebra;
                  TensorElement lhs(1, A.dim, A.order);
                  for (const auto& [k, c] : phi_inv->terms()) {
                    const auto idx = phi_inv->decode(k);
                    auto t = tensor_mul(apply_antipode(*H, basis_vector(A, idx[0])), *H->alpha, A);
                    t = tensor_mul(tensor_mul(t, basis_vector(A, idx[1]), A), *H->beta, A);
                    t = tensor_mul(t, apply_antipode(*H, basis_vector(A, idx[2])), A);
                    lhs += t.scaled(c);
                  }
                  return compare_tensors(lhs, A.unit, only);
                }, {}});
  cl.push_back({names[4], [H, d](const Point* only) {
                  const auto& A = H->algebra;
                  return scan_points({d, d}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int i = static_cast<int>(p[0]), j = static_cast<int>(p[1]);
                    auto lhs = apply_antipode(*H, algebra_product(A, i, j));
                    auto rhs = tensor_mul(apply_antipode(*H, basis_vector(A, j)), apply_antipode(*H, basis_vector(A, i)), A);
                    return diff_detail(lhs, rhs);
                  });
                }, {}});
  cl.push_back({names[5], [H, d](const Point* only) {
                  return scan_points({}, only, [&](const Point&) -> std::optional<std::string> {
                    SparseColumns cols;
                    for (const auto& img : *H->antipode) cols.emplace_back(img.terms().begin(), img.terms().end());
                    const auto rank = sparse_rank(cols, static_cast<std::size_t>(d));
                    if (rank == static_cast<std::size_t>(d)) return std::nullopt;
                    return "antipode has rank " + std::to_string(rank) + " < " + std::to_string(d);
                  });
                }, {}});
  return cl;
}

Report verify_antipode(const QuasiHopfData& H) {
  return run_clauses(antipode_clauses(std::make_shared<const QuasiHopfData>(H)));
}

ClauseList quasitriangular_clauses(QuasiHopfPtr H) {
  static const char* names[] = {"rmatrix.invertible", "qqua.coproduct_left", "qqua.coproduct_right",
                                "rmatrix.intertwining", "rmatrix.quasi_ybe"};
  ClauseList cl;
  if (!H->rmatrix) {
    for (const char* n : names) cl.push_back({n, nullptr, std::string("no R-matrix attached")});
    return cl;
  }
  const long long d = H->dim();
  auto cache = std::make_shared<InverseCache>();
  cache->H = H;

  cl.push_back({names[0], [cache](const Point* only) -> std::optional<Witness> {
                  return scan_points({}, only, [&](const Point&) -> std::optional<std::string> {
                    if (cache->r_inverse()) return std::nullopt;
                    return cache->r_err;
                  });
                }, {}});
  // (Delta x id)R = phi312 R13 phi132^-1 R23 phi
  cl.push_back({names[1], [H, cache](const Point* only) -> std::optional<Witness> {
                  const auto* phi_inv = cache->phi_inverse();
                  if (!phi_inv) return whole("associator is not invertible: " + cache->phi_err);
                  const auto& A = H->algebra;
                  const auto& R = *H->rmatrix;
                  const auto& phi = H->associator;
                  auto rhs = tensor_mul(permute_legs(phi, {3, 1, 2}), place_legs(R, {0, 2}, 3, A), A);
                  rhs = tensor_mul(rhs, permute_legs(*phi_inv, {1, 3, 2}), A);
                  rhs = tensor_mul(tensor_mul(rhs, place_legs(R, {1, 2}, 3, A), A), phi, A);
                  return compare_tensors(coproduct_extend(*H, 0, R), rhs, only);
                }, {}});
  // (id x Delta)R = phi231^-1 R13 phi213 R12 phi^-1
  cl.push_back({names[2], [H, cache](const Point* only) -> std::optional<Witness> {
                  const auto* phi_inv = cache->phi_inverse();
                  if (!phi_inv) return whole("associator is not invertible: " + cache->phi_err);
                  const auto& A = H->algebra;
                  const auto& R = *H->rmatrix;
                  const auto& phi = H->associator;
                  auto rhs = tensor_mul(permute_legs(*phi_inv, {2, 3, 1}), place_legs(R, {0, 2}, 3, A), A);
                  rhs = tensor_mul(rhs, permute_legs(phi, {2, 1, 3}), A);
                  rhs = tensor_mul(tensor_mul(rhs, place_legs(R, {0, 1}, 3, A), A), *phi_inv, A);
                  return compare_tensors(coproduct_extend(*H, 1, R), rhs, only);
                }, {}});
  cl.push_back({names[3], [H, d](const Point* only) {
                  const auto& A = H->algebra;
                  return scan_points({d}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int h = static_cast<int>(p[0]);
                    auto lhs = tensor_mul(*H->rmatrix, H->coproduct[static_cast<std::size_t>(h)], A);
                    auto rhs = tensor_mul(opposite_coproduct(*H, h), *H->rmatrix, A);
                    return diff_detail(lhs, rhs);
                  });
                }, {}});
  cl.push_back({names[4], [H, cache](const Point* only) -> std::optional<Witness> {
                  const auto* phi_inv = cache->phi_inverse();
                  if (!phi_inv) return whole("associator is not invertible: " + cache->phi_err);
                  const auto& A = H->algebra;
                  const auto& R = *H->rmatrix;
                  const auto& phi = H->associator;
                  const auto R12 = place_legs(R, {0, 1}, 3, A), R13 = place_legs(R, {0, 2}, 3, A),
                             R23 = place_legs(R, {1, 2}, 3, A);
                  auto lhs = tensor_mul(R12, permute_legs(phi, {3, 1, 2}), A);
                  lhs = tensor_mul(tensor_mul(lhs, R13, A), permute_legs(*phi_inv, {1, 3, 2}), A);
                  lhs = tensor_mul(tensor_mul(lhs, R23, A), phi, A);
                  auto rhs = tensor_mul(permute_legs(phi, {3, 2, 1}), R23, A);
                  rhs = tensor_mul(tensor_mul(rhs, permute_legs(*phi_inv, {2, 3, 1}), A), R13, A);
                  rhs = tensor_mul(tensor_mul(rhs, permute_legs(phi, {2, 1, 3}), A), R12, A);
                  return compare_tensors(lhs, rhs, only);
                }, {}});
  return cl;
}

Report verify_quasitriangular(const QuasiHopfData& H) {
  return run_clauses(quasitriangular_clauses(std::make_shared<const QuasiHopfData>(H)));
}

ClauseList ordinary_hopf_clauses(QuasiHopfPtr H) {
  const long long d = H->dim();
  ClauseList cl;
  cl.push_back({"hopf.trivial_associator", [H](const Point* only) {
                  return compare_tensors(H->associator, tensor_unit(H->algebra, 3), only);
                }, {}});
  cl.push_back({"hopf.coassociativity", [H, d](const Point* only) {
                  return scan_points({d}, only, [&](const Point& p) -> std::optional<std::string> {
                    const auto& dh = H->coproduct[static_cast<std::size_t>(p[0])];
                    return diff_detail(coproduct_extend(*H, 0, dh), coproduct_extend(*H, 1, dh));
                  });
                }, {}});
  return cl;
}

}  // namespace qdouble
