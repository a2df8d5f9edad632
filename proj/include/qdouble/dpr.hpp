#pragma once

// The twisted quantum double D^phi(G) = kG^op >|_chi k(G) with its
// quasi-Hopf and quasitriangular data, plus the two small quasi-Hopf algebras
// it is built from: k^phi(G) and kG.
//
// Basis: x (x) delta_s has linear index x*n + s.
//   (x (x) d_s)(y (x) d_t) = [y s y^-1 = t] chi(y,x)(t) (yx (x) d_t)
//   Delta(x (x) d_s) = sum_{ab=s} r(x,a,b) (x (x) d_a) (x) (x (x) d_b)
//   r(x,a,b) = phi(x, x^-1 a x, x^-1 b x) phi(a,b,x) / phi(a, x, x^-1 b x)
//   eps(x (x) d_s) = [s = e],  1 = sum_s e (x) d_s
//   phi_D = sum phi(a,b,c) (e (x) d_a) (x) (e (x) d_b) (x) (e (x) d_c)
//   R = sum_{x,s} (x (x) d_s) (x) (e (x) d_x)

#include <memory>
#include <optional>
#include <string>

#include "qdouble/cochain.hpp"
#include "qdouble/qhopf.hpp"

namespace qdouble {

/// Deliberate single defects, used to show the verifiers are sensitive.
enum class DprMutation {
  none,
  drop_chi,                // product without the chi factor
  invert_coproduct_ratio,  // r(x,a,b) replaced by 1/r(x,a,b)
  drop_coproduct_ratio,    // r(x,a,b) replaced by 1
  drop_rmatrix_term,       // first term of R removed
  swap_rmatrix_legs,       // R21 in place of R
  literal_rmatrix,         // sum (e (x) d_x) (x) (x (x) d_s)
  flip_chi_sign,           // chi(e,x)(t) negated for x != e
};

const char* mutation_name(DprMutation m);
/// Accepts the names above with '-' or '_'.
DprMutation parse_mutation(const std::string& s);

struct DPRInstance {
  GroupPtr group;
  Cochain3 phi;
  AdCochain2 chi;
  QuasiHopfPtr qhopf;
  DprMutation mutation = DprMutation::none;
  /// Set by attach_antipode when no monomial antipode was found.
  bool antipode_absent = false;
  std::string antipode_diagnostic;

  int n() const noexcept { return group->size(); }
  int index(int x, int s) const noexcept { return x * n() + s; }
};

/// Builds D^phi(G). phi must pass verify_3cocycle (invalid_argument otherwise).
DPRInstance build_dpr(const Cochain3& phi, DprMutation mutation = DprMutation::none);

/// Installs S(x (x) d_s) = c(x,s) x^-1 (x) d_{x^-1 s^-1 x}, alpha = 1 and
/// beta = sum_s phi(s,s^-1,s)^-1 (e (x) d_s), with
///   c(x,s) = 1 / (r(x,s,s^-1) chi(x,x^-1)(s^-1)),
/// the unique monomial solution of the first antipode identity once alpha = 1.
/// The candidate is then run through verify_antipode; if any clause fails the
/// antipode is dropped and the instance is marked absent with the failing
/// clause as diagnostic.
DPRInstance attach_antipode(const DPRInstance& D);

/// k^phi(G): functions on G with Delta d_s = sum_{ab=s} d_a (x) d_b, the
/// associator phi, S(d_s) = d_{s^-1}, alpha = 1, beta = sum phi(s,s^-1,s)^-1 d_s.
QuasiHopfData build_function_algebra(const Cochain3& phi);

/// kG as an ordinary Hopf algebra, R = 1 (x) 1, over Q(zeta_order).
QuasiHopfData build_group_algebra(GroupPtr g, unsigned order = 1);

/// Images of k(G) and kG in D: d_s -> e (x) d_s, x -> sum_t x (x) d_t.
TensorElement embed_function(const DPRInstance& D, int s);
TensorElement embed_group(const DPRInstance& D, int x);

/// Quasi-bialgebra, quasitriangular and antipode clauses of D, plus the
/// k^phi(G) subalgebra checks and phi_D = embedded phi.
ClauseList dpr_clauses(const DPRInstance& D);
Report verify_dpr(const DPRInstance& D);

/// Ordinary Hopf checks (trivial associator, coassociativity); used for the
/// untwisted degeneration.
ClauseList dpr_degeneration_clauses(const DPRInstance& D);

}  // namespace qdouble
