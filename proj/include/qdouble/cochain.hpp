#pragma once

// Group cochains with values in Q(zeta_N)^x: 3-cocycles phi, normalized
// 2-cochains beta (for coboundary twists), and the induced Ad-2-cocycle chi.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qdouble/cyclotomic.hpp"
#include "qdouble/group.hpp"
#include "qdouble/report.hpp"

namespace qdouble {

/// Dense table over G^k of scalars of a single cyclotomic order. The tag keeps
/// phi, beta and chi distinct types.
template <int Arity, class Tag>
class GroupTable {
 public:
  GroupTable(GroupPtr g, unsigned order, std::vector<CycScalar> values);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  unsigned order() const noexcept { return order_; }
  const std::vector<CycScalar>& values() const noexcept { return values_; }

  template <class... I>
  const CycScalar& operator()(I... idx) const {
    static_assert(sizeof...(I) == Arity);
    return values_[flat(idx...)];
  }

  /// Copy with every value embedded into Q(zeta_m).
  GroupTable embedded(unsigned m) const;
  /// Copy with one entry replaced (mutation fixtures).
  GroupTable with_entry(std::vector<int> idx, CycScalar v) const;

  std::string label;

 private:
  template <class... I>
  std::size_t flat(I... idx) const {
    std::size_t k = 0;
    ((k = k * static_cast<std::size_t>(group_->size()) + static_cast<std::size_t>(idx)), ...);
    return k;
  }

  GroupPtr group_;
  unsigned order_;
  std::vector<CycScalar> values_;
};

struct Cochain3Tag {};
struct Cochain2Tag {};
struct AdCochain2Tag {};

/// phi(x, y, z)
using Cochain3 = GroupTable<3, Cochain3Tag>;
/// beta(x, y)
using Cochain2 = GroupTable<2, Cochain2Tag>;
/// chi(x, y)(s), stored at (x, y, s)
using AdCochain2 = GroupTable<3, AdCochain2Tag>;

extern template class GroupTable<3, Cochain3Tag>;
extern template class GroupTable<2, Cochain2Tag>;
extern template class GroupTable<3, AdCochain2Tag>;

Cochain3 trivial_cocycle(GroupPtr g);

/// Pentagon identity phi(y,s,t)phi(x,ys,t)phi(x,y,s) = phi(x,y,st)phi(xy,s,t)
/// on G^4, middle normalization phi(x,e,y) = 1, and invertibility.
Report verify_3cocycle(const Cochain3& phi);
ClauseList cocycle_clauses(const Cochain3& phi);

/// phi(e,y,z) = 1 and phi(x,y,e) = 1. Holds for every verified cocycle.
Report verify_full_normalization(const Cochain3& phi);

/// phi_p(a,b,c) = zeta_n^{p a floor((b+c)/n)} on zn:n, over the smallest
/// field containing its values. Self-verifies; throws ErrorCode::internal if
/// that fails.
Cochain3 standard_cocycle_cyclic(int n, long long p);

/// (d beta)(x,y,z) = beta(y,z) beta(x,yz) beta(xy,z)^{-1} beta(x,y)^{-1}.
/// Rejects non-normalized beta.
Cochain3 coboundary(const Cochain2& beta);
/// phi * d(beta), pointwise, over the lcm of both orders.
Cochain3 twist(const Cochain3& phi, const Cochain2& beta);

/// Uniformly random normalized mu_N-valued 2-cochain.
Cochain2 random_normalized_cochain2(GroupPtr g, unsigned n, std::mt19937_64& rng);

struct CohomologyResult {
  bool cohomologous = false;
  /// beta with phi2 = phi1 * d(beta) when cohomologous.
  std::optional<Cochain2> witness;
  std::size_t candidates_checked = 0;
};

/// Searches all normalized mu_N-valued 2-cochains beta for phi2 = phi1 d(beta).
/// Throws ErrorCode::budget_exceeded beyond `budget` candidates.
CohomologyResult are_cohomologous_bruteforce(const Cochain3& phi1, const Cochain3& phi2, unsigned root_order,
                                             std::size_t budget = 1'000'000);

/// chi(x,y)(s) = phi(x,y,(xy)^{-1} s xy) phi(s,x,y) / phi(x, x^{-1} s x, y)
AdCochain2 chi_from_phi(const Cochain3& phi);

/// The Ad-twisted 2-cocycle law in the form the twisted product needs:
///   chi(b,a)(c^{-1} t c) chi(c,ba)(t) = chi(c,b)(t) chi(cb,a)(t)
/// i.e. chi21(x,y)<|s chi21(x.y,s) = chi21(y,s) chi21(x,y.s) over G^op with
/// (f<|s)(t) = f(s^{-1} t s). Also checks normalization and invertibility.
Report verify_chi_2cocycle(const AdCochain2& chi);
ClauseList chi_clauses(const AdCochain2& chi);

}  // namespace qdouble
