#pragma once

// Exhaustive verification of the quasi-bialgebra, antipode and
// quasitriangularity axioms on a QuasiHopfData given by structure constants.
//
// Clause names are stable and are what `--replay` refers to. Per-basis clauses
// use the basis indices as the witness point; whole-tensor identities use the
// first basis tuple where the two sides differ.

#include <memory>

#include "qdouble/report.hpp"
#include "qdouble/tensor.hpp"

namespace qdouble {

using QuasiHopfPtr = std::shared_ptr<const QuasiHopfData>;

/// Associativity and two-sided unit of the structure constants.
ClauseList algebra_clauses(QuasiHopfPtr H);

/// algebra + Delta, epsilon multiplicative and unital, associator invertible,
/// quasi-coassociativity, both counit laws, pentagon, (id x eps x id)phi = 1x1.
ClauseList quasibialgebra_clauses(QuasiHopfPtr H);
Report verify_quasibialgebra(const QuasiHopfData& H);

/// The four antipode identities, anti-multiplicativity and bijectivity of S.
/// Every clause is `skipped` when S, alpha or beta is missing.
ClauseList antipode_clauses(QuasiHopfPtr H);
Report verify_antipode(const QuasiHopfData& H);

/// R invertible, both coproduct identities for R, R Delta(h) = Delta^op(h) R
/// and the quasi-Yang-Baxter equation
///   R12 phi312 R13 phi132^-1 R23 phi = phi321 R23 phi231^-1 R13 phi213 R12.
/// Skipped when R is missing.
ClauseList quasitriangular_clauses(QuasiHopfPtr H);
Report verify_quasitriangular(const QuasiHopfData& H);

/// Coassociativity and trivial associator: the ordinary Hopf case.
ClauseList ordinary_hopf_clauses(QuasiHopfPtr H);

/// Helpers shared with the other verifiers.
TensorElement algebra_product(const AlgebraData& alg, int i, int j);
TensorElement apply_antipode(const QuasiHopfData& H, const TensorElement& a);
/// Delta^op(e_h)
TensorElement opposite_coproduct(const QuasiHopfData& H, int h);

/// Compares two tensors; nullopt if equal, otherwise the first differing key
/// (decoded into a point) and both coefficients. With `only`, compares just
/// that basis tuple.
std::optional<Witness> compare_tensors(const TensorElement& lhs, const TensorElement& rhs, const Point* only);

}  // namespace qdouble
