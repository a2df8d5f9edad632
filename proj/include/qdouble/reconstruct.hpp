#pragma once

// The general double relations checked on D^phi(G) with H = k^phi(G) and
// H* = kG. Everything on the H side (products, coproducts, phi, S, beta,
// the dual coproduct and dual product) is evaluated from H's structure
// constants, not from group-specific shortcuts.

#include <memory>
#include <optional>

#include "qdouble/crossedmod.hpp"
#include "qdouble/dpr.hpp"

namespace qdouble {

/// H = k^phi(G) with basis e_a = d_a, dual basis f^a = a in kG, and the two
/// inclusions into D: iota(e_a) = e (x) d_a, iota*(f^a) = sum_t a (x) d_t.
struct PairedBases {
  std::shared_ptr<const DPRInstance> D;
  QuasiHopfPtr H;
  /// phi^-1 in H^(x)3
  TensorElement phi_inv{3, 1, 1};
  /// dual_coproduct[c] = Delta f^c as ((a, b), m^c_ab)
  std::vector<std::vector<std::pair<std::pair<int, int>, CycScalar>>> dual_coproduct;

  int n() const noexcept { return H->dim(); }
  TensorElement iota(const TensorElement& h) const;
  TensorElement iota_star(int f) const;
  /// <f^a, X> for X in H
  CycScalar pair(int f, const TensorElement& X) const { return X.coeff({f}); }
  /// f^b f^c in H*, dual to Delta of H
  TensorElement dual_product(int b, int c) const;
  /// (Delta (x) id)^(k-1) f as k-tuples of dual basis indices
  std::vector<std::pair<std::vector<int>, CycScalar>> dual_coproduct_n(int f, int k) const;
};

struct ReconstructOptions {
  /// Replaces the second associator copy phi' in (doufg) and (doudelta) by 1.
  bool drop_phi_prime = false;
  /// Uses this cocycle for H instead of D's own (associator mutation).
  std::optional<Cochain3> associator_override;
};

PairedBases make_paired_bases(const DPRInstance& D, const ReconstructOptions& opts = {});

ClauseList doufh_clauses(std::shared_ptr<const PairedBases> P);
ClauseList doufg_clauses(std::shared_ptr<const PairedBases> P, bool drop_phi_prime = false);
ClauseList doudelta_clauses(std::shared_ptr<const PairedBases> P, bool drop_phi_prime = false);
/// (douR) against the stored R, (douphi) against the stored associator,
/// (douact) against left multiplication on the regular object.
ClauseList douR_douphi_douact_clauses(std::shared_ptr<const PairedBases> P);

Report verify_doufh(const DPRInstance& D, const ReconstructOptions& opts = {});
Report verify_doufg(const DPRInstance& D, const ReconstructOptions& opts = {});
Report verify_doudelta(const DPRInstance& D, const ReconstructOptions& opts = {});
Report verify_douR_douphi_douact(const DPRInstance& D, const ReconstructOptions& opts = {});

/// All relations: doufh, doufg, doudelta, doudelta.h, douR, douphi, douact.
ClauseList reconstruct_clauses(const DPRInstance& D, const ReconstructOptions& opts = {});

}  // namespace qdouble
