#include "qdouble/cochain.hpp"

#include <cmath>
#include <numeric>

#include "qdouble/error.hpp"

namespace qdouble {

template <int Arity, class Tag>
GroupTable<Arity, Tag>::GroupTable(GroupPtr g, unsigned order, std::vector<CycScalar> values)
    : group_(std::move(g)), order_(order), values_(std::move(values)) {
  require(group_ != nullptr, ErrorCode::invalid_argument, "cochain needs a group");
  std::size_t expect = 1;
  for (int i = 0; i < Arity; ++i) expect *= static_cast<std::size_t>(group_->size());
  require(values_.size() == expect, ErrorCode::invalid_argument,
          "cochain table has " + std::to_string(values_.size()) + " entries, expected " + std::to_string(expect));
  for (const auto& v : values_) {
    require(v.order() == order_, ErrorCode::invalid_argument, "cochain value has mismatched cyclotomic order");
    require(!v.is_zero(), ErrorCode::invalid_argument, "cochain values must be invertible (found 0)");
  }
}

template <int Arity, class Tag>
GroupTable<Arity, Tag> GroupTable<Arity, Tag>::embedded(unsigned m) const {
  std::vector<CycScalar> vals;
  vals.reserve(values_.size());
  for (const auto& v : values_) vals.push_back(v.embed(m));
  GroupTable out(group_, m, std::move(vals));
  out.label = label;
  return out;
}

template <int Arity, class Tag>
GroupTable<Arity, Tag> GroupTable<Arity, Tag>::with_entry(std::vector<int> idx, CycScalar v) const {
  require(idx.size() == Arity, ErrorCode::invalid_argument, "wrong index arity");
  std::size_t k = 0;
  for (int i : idx) {
    require(i >= 0 && i < group_->size(), ErrorCode::invalid_argument, "index out of range");
    k = k * static_cast<std::size_t>(group_->size()) + static_cast<std::size_t>(i);
  }
  const unsigned m = lcm_order(order_, v.order());
  GroupTable out = embedded(m);
  out.values_[k] = v.embed(m);
  require(!out.values_[k].is_zero(), ErrorCode::invalid_argument, "cochain values must be invertible");
  out.label = label + "+mutated";
  return out;
}

template class GroupTable<3, Cochain3Tag>;
template class GroupTable<2, Cochain2Tag>;
template class GroupTable<3, AdCochain2Tag>;

Cochain3 trivial_cocycle(GroupPtr g) {
  const auto n = static_cast<std::size_t>(g->size());
  Cochain3 phi(g, 1, std::vector<CycScalar>(n * n * n, CycScalar::one(1)));
  phi.label = "trivial";
  return phi;
}

ClauseList cocycle_clauses(const Cochain3& phi_in) {
  auto phi = std::make_shared<const Cochain3>(phi_in);
  const long long n = phi->group().size();
  ClauseList cl;
  cl.push_back({"cocycle.invertible", [phi, n](const Point* only) {
                  return scan_points({n, n, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    if (!(*phi)(p[0], p[1], p[2]).is_zero()) return std::nullopt;
                    return "phi value is zero";
                  });
                }});
  cl.push_back({"cocycle.pentagon", [phi, n](const Point* only) {
                  const auto& G = phi->group();
                  return scan_points({n, n, n, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int x = static_cast<int>(p[0]), y = static_cast<int>(p[1]), s = static_cast<int>(p[2]),
                              t = static_cast<int>(p[3]);
                    const auto& f = *phi;
                    auto lhs = f(y, s, t) * f(x, G.mul(y, s), t) * f(x, y, s);
                    auto rhs = f(x, y, G.mul(s, t)) * f(G.mul(x, y), s, t);
                    if (lhs == rhs) return std::nullopt;
                    return "lhs " + lhs.to_string() + " != rhs " + rhs.to_string();
                  });
                }});
  cl.push_back({"cocycle.normalized", [phi, n](const Point* only) {
                  return scan_points({n, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const auto& v = (*phi)(p[0], 0, p[1]);
                    if (v.is_one()) return std::nullopt;
                    return "phi(x,e,y) = " + v.to_string();
                  });
                }});
  return cl;
}

Report verify_3cocycle(const Cochain3& phi) { return run_clauses(cocycle_clauses(phi)); }

Report verify_full_normalization(const Cochain3& phi_in) {
  auto phi = std::make_shared<const Cochain3>(phi_in);
  const long long n = phi->group().size();
  ClauseList cl;
  cl.push_back({"cocycle.normalized_left", [phi, n](const Point* only) {
                  return scan_points({n, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    if ((*phi)(0, p[0], p[1]).is_one()) return std::nullopt;
                    return "phi(e,y,z) != 1";
                  });
                }});
  cl.push_back({"cocycle.normalized_right", [phi, n](const Point* only) {
                  return scan_points({n, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    if ((*phi)(p[0], p[1], 0).is_one()) return std::nullopt;
                    return "phi(x,y,e) != 1";
                  });
                }});
  return run_clauses(cl);
}

Cochain3 standard_cocycle_cyclic(int n, long long p) {
  auto g = cyclic_group(n);
  long long pr = ((p % n) + n) % n;
  const unsigned gcd = static_cast<unsigned>(std::gcd(static_cast<long long>(n), pr));
  const unsigned order = pr == 0 ? 1u : static_cast<unsigned>(n) / gcd;
  const long long step = pr == 0 ? 0 : pr / gcd;
  std::vector<CycScalar> vals;
  vals.reserve(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) vals.push_back(CycScalar::root_of_unity(order, step * a * ((b + c) / n)));
  Cochain3 phi(g, order, std::move(vals));
  phi.label = "std:zn:" + std::to_string(n) + ":p=" + std::to_string(pr);
  require(verify_3cocycle(phi).passed(), ErrorCode::internal, "standard cyclic cocycle failed self-verification");
  return phi;
}

static bool is_normalized(const Cochain2& beta) {
  const int n = beta.group().size();
  for (int x = 0; x < n; ++x)
    if (!beta(x, 0).is_one() || !beta(0, x).is_one()) return false;
  return true;
}

Cochain3 coboundary(const Cochain2& beta) {
  require(is_normalized(beta), ErrorCode::invalid_argument, "coboundary needs a normalized 2-cochain");
  const auto& G = beta.group();
  const int n = G.size();
  std::vector<CycScalar> vals;
  vals.reserve(static_cast<std::size_t>(n) * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        vals.push_back(beta(y, z) * beta(x, G.mul(y, z)) / (beta(G.mul(x, y), z) * beta(x, y)));
  Cochain3 out(beta.group_ptr(), beta.order(), std::move(vals));
  out.label = "d(" + beta.label + ")";
  return out;
}

Cochain3 twist(const Cochain3& phi, const Cochain2& beta) {
  require(phi.group_ptr() == beta.group_ptr() || phi.group().table() == beta.group().table(),
          ErrorCode::invalid_argument, "twist needs cochains on the same group");
  const unsigned m = lcm_order(phi.order(), beta.order());
  const Cochain3 d = coboundary(beta.embedded(m));
  const Cochain3 base = phi.embedded(m);
  std::vector<CycScalar> vals;
  vals.reserve(base.values().size());
  for (std::size_t i = 0; i < base.values().size(); ++i) vals.push_back(base.values()[i] * d.values()[i]);
  Cochain3 out(phi.group_ptr(), m, std::move(vals));
  out.label = phi.label + "*d(" + beta.label + ")";
  return out;
}

Cochain2 random_normalized_cochain2(GroupPtr g, unsigned n, std::mt19937_64& rng) {
  const int sz = g->size();
  std::uniform_int_distribution<long long> dist(0, static_cast<long long>(n) - 1);
  std::vector<CycScalar> vals;
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y)
      vals.push_back(x == 0 || y == 0 ? CycScalar::one(n) : CycScalar::root_of_unity(n, dist(rng)));
  Cochain2 beta(std::move(g), n, std::move(vals));
  beta.label = "random_mu" + std::to_string(n);
  return beta;
}

CohomologyResult are_cohomologous_bruteforce(const Cochain3& phi1, const Cochain3& phi2, unsigned root_order,
                                             std::size_t budget) {
  require(root_order >= 1, ErrorCode::invalid_argument, "root order must be positive");
  require(phi1.group().table() == phi2.group().table(), ErrorCode::invalid_argument,
          "cohomology search needs cochains on the same group");
  const auto& G = phi1.group();
  const int n = G.size();
  const std::size_t free_slots = static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1);
  double total = std::pow(static_cast<double>(root_order), static_cast<double>(free_slots));
  if (total > static_cast<double>(budget))
    fail(ErrorCode::budget_exceeded, "cohomology search needs " + std::to_string(root_order) + "^" +
                                         std::to_string(free_slots) + " candidates, budget " +
                                         std::to_string(budget));

  const unsigned m = lcm_order(root_order, lcm_order(phi1.order(), phi2.order()));
  const Cochain3 a = phi1.embedded(m), b = phi2.embedded(m);
  // ratio phi2/phi1 as exponents of zeta_N; entries outside mu_N rule out any beta.
  std::vector<CycScalar> roots;
  for (unsigned k = 0; k < root_order; ++k) roots.push_back(CycScalar::root_of_unity(root_order, k).embed(m));
  std::vector<int> target;
  target.reserve(a.values().size());
  CohomologyResult result;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    const CycScalar r = b.values()[i] / a.values()[i];
    int found = -1;
    for (unsigned k = 0; k < root_order; ++k)
      if (roots[k] == r) {
        found = static_cast<int>(k);
        break;
      }
    if (found < 0) return result;
    target.push_back(found);
  }

  const long long N = root_order;
  std::vector<long long> e(static_cast<std::size_t>(n * n), 0);  // beta exponents, normalized
  auto slot = [n](int x, int y) { return static_cast<std::size_t>(x * n + y); };
  std::vector<std::size_t> free_idx;
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) free_idx.push_back(slot(x, y));

  while (true) {
    ++result.candidates_checked;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n; ++z) {
          long long d = e[slot(y, z)] + e[slot(x, G.mul(y, z))] - e[slot(G.mul(x, y), z)] - e[slot(x, y)];
          d = ((d % N) + N) % N;
          if (d != target[static_cast<std::size_t>((x * n + y) * n + z)]) {
            ok = false;
            break;
          }
        }
    if (ok) {
      std::vector<CycScalar> vals;
      for (long long k : e) vals.push_back(CycScalar::root_of_unity(root_order, k));
      Cochain2 beta(phi1.group_ptr(), root_order, std::move(vals));
      beta.label = "witness";
      result.cohomologous = true;
      result.witness = std::move(beta);
      return result;
    }
    std::size_t i = 0;
    for (; i < free_idx.size(); ++i) {
      if (++e[free_idx[i]] < N) break;
      e[free_idx[i]] = 0;
    }
    if (i == free_idx.size()) break;
  }
  return result;
}

AdCochain2 chi_from_phi(const Cochain3& phi) {
  const auto& G = phi.group();
  const int n = G.size();
  std::vector<CycScalar> vals;
  vals.reserve(static_cast<std::size_t>(n) * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int s = 0; s < n; ++s)
        vals.push_back(phi(x, y, G.conj(G.mul(x, y), s)) * phi(s, x, y) / phi(x, G.conj(x, s), y));
  AdCochain2 chi(phi.group_ptr(), phi.order(), std::move(vals));
  chi.label = "chi(" + phi.label + ")";
  return chi;
}

ClauseList chi_clauses(const AdCochain2& chi_in) {
  auto chi = std::make_shared<const AdCochain2>(chi_in);
  const long long n = chi->group().size();
  ClauseList cl;
  cl.push_back({"chi.invertible", [chi, n](const Point* only) {
                  return scan_points({n, n, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    if (!(*chi)(p[0], p[1], p[2]).is_zero()) return std::nullopt;
                    return "chi value is zero";
                  });
                }});
  cl.push_back({"chi.two_cocycle", [chi, n](const Point* only) {
                  const auto& G = chi->group();
                  // point (a, b, c, t)
                  return scan_points({n, n, n, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int a = static_cast<int>(p[0]), b = static_cast<int>(p[1]), c = static_cast<int>(p[2]),
                              t = static_cast<int>(p[3]);
                    const auto& f = *chi;
                    auto lhs = f(b, a, G.conj(c, t)) * f(c, G.mul(b, a), t);
                    auto rhs = f(c, b, t) * f(G.mul(c, b), a, t);
                    if (lhs == rhs) return std::nullopt;
                    return "lhs " + lhs.to_string() + " != rhs " + rhs.to_string();
                  });
                }});
  cl.push_back({"chi.normalized", [chi, n](const Point* only) {
                  // point (x, s): checks chi(x,e)(s), chi(e,x)(s) and chi(x,s)(e)
                  return scan_points({n, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const auto& f = *chi;
                    if (!f(p[0], 0, p[1]).is_one()) return "chi(x,e)(s) != 1";
                    if (!f(0, p[0], p[1]).is_one()) return "chi(e,x)(s) != 1";
                    if (!f(p[0], p[1], 0).is_one()) return "chi(x,y)(e) != 1";
                    return std::nullopt;
                  });
                }});
  return cl;
}

Report verify_chi_2cocycle(const AdCochain2& chi) { return run_clauses(chi_clauses(chi)); }

}  // namespace qdouble
