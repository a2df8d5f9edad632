#include "qdouble/dpr.hpp"

#include <algorithm>

#include "qdouble/error.hpp"

namespace qdouble {

const char* mutation_name(DprMutation m) {
  switch (m) {
    case DprMutation::none: return "none";
    case DprMutation::drop_chi: return "drop_chi";
    case DprMutation::invert_coproduct_ratio: return "invert_coproduct_ratio";
    case DprMutation::drop_coproduct_ratio: return "drop_coproduct_ratio";
    case DprMutation::drop_rmatrix_term: return "drop_rmatrix_term";
    case DprMutation::swap_rmatrix_legs: return "swap_rmatrix_legs";
    case DprMutation::literal_rmatrix: return "literal_rmatrix";
    case DprMutation::flip_chi_sign: return "flip_chi_sign";
  }
  return "?";
}

DprMutation parse_mutation(const std::string& s) {
  std::string k = s;
  std::replace(k.begin(), k.end(), '-', '_');
  for (auto m : {DprMutation::none, DprMutation::drop_chi, DprMutation::invert_coproduct_ratio,
                 DprMutation::drop_coproduct_ratio, DprMutation::drop_rmatrix_term, DprMutation::swap_rmatrix_legs, DprMutation::literal_rmatrix,
                 DprMutation::flip_chi_sign})
    if (k == mutation_name(m)) return m;
  fail(ErrorCode::invalid_argument, "unknown mutation '" + s + "'");
}

namespace {

CycScalar coproduct_ratio(const FiniteGroup& G, const Cochain3& phi, int x, int a, int b) {
  return phi(x, G.conj(x, a), G.conj(x, b)) * phi(a, b, x) / phi(a, x, G.conj(x, b));
}

void require_cocycle(const Cochain3& phi) {
  const Report r = verify_3cocycle(phi);
  if (const auto* f = r.first_failure())
    fail(ErrorCode::invalid_argument, "cocycle '" + phi.label + "' fails " + f->name + " at " +
                                          point_to_string(f->witness->point) + ": " + f->witness->detail);
}

// Re-indexes a tensor over k^phi(G) (basis d_s) into D (basis e (x) d_s).
TensorElement embed_h_tensor(const TensorElement& t, int d_dim) {
  TensorElement out(t.arity(), d_dim, t.order());
  for (const auto& [k, c] : t.terms()) out.add(t.decode(k), c);
  return out;
}

}  // namespace

DPRInstance build_dpr(const Cochain3& phi, DprMutation mutation) {
  require_cocycle(phi);
  const auto gp = phi.group_ptr();
  const FiniteGroup& G = *gp;
  const int n = G.size();
  const int d = n * n;
  const unsigned N = phi.order();

  AdCochain2 chi = chi_from_phi(phi);
  auto H = std::make_shared<QuasiHopfData>();
  H->label = "D^phi(" + G.label() + ")[" + phi.label + "]";
  H->algebra.dim = d;
  H->algebra.order = N;
  H->algebra.mul.assign(static_cast<std::size_t>(d) * d, {});
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < n; ++s)
      for (int y = 0; y < n; ++y) {
        const int t = G.mul(G.mul(y, s), G.inv(y));
        CycScalar c = mutation == DprMutation::drop_chi ? CycScalar::one(N) : chi(y, x, t);
        if (mutation == DprMutation::flip_chi_sign && y == 0 && x != 0) c = -c;
        H->algebra.mul[static_cast<std::size_t>((x * n + s) * d + (y * n + t))].push_back({G.mul(y, x) * n + t, c});
      }
  H->algebra.unit = TensorElement(1, d, N);
  for (int s = 0; s < n; ++s) H->algebra.unit.add({s}, CycScalar::one(N));

  H->coproduct.assign(static_cast<std::size_t>(d), TensorElement(2, d, N));
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        CycScalar r = coproduct_ratio(G, phi, x, a, b);
        if (mutation == DprMutation::invert_coproduct_ratio) r = r.inverse();
        if (mutation == DprMutation::drop_coproduct_ratio) r = CycScalar::one(N);
        H->coproduct[static_cast<std::size_t>(x * n + G.mul(a, b))].add({x * n + a, x * n + b}, r);
      }
  H->counit.assign(static_cast<std::size_t>(d), CycScalar::zero(N));
  for (int x = 0; x < n; ++x) H->counit[static_cast<std::size_t>(x * n)] = CycScalar::one(N);

  H->associator = TensorElement(3, d, N);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) H->associator.add({a, b, c}, phi(a, b, c));

  TensorElement R(2, d, N);
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < n; ++s) {
      if (mutation == DprMutation::literal_rmatrix)
        R.add({x, x * n + s}, CycScalar::one(N));
      else
        R.add({x * n + s, x}, CycScalar::one(N));
    }
  if (mutation == DprMutation::drop_rmatrix_term) {
    TensorElement cut(2, d, N);
    bool first = true;
    for (const auto& [k, c] : R.terms()) {
      if (first) {
        first = false;
        continue;
      }
      cut.add_key(k, c);
    }
    R = cut;
  }
  if (mutation == DprMutation::swap_rmatrix_legs) R = permute_legs(R, {2, 1});
  H->rmatrix = std::move(R);

  if (mutation == DprMutation::drop_chi) {
    std::vector<CycScalar> ones(chi.values().size(), CycScalar::one(N));
    chi = AdCochain2(gp, N, std::move(ones));
  }
  return DPRInstance{gp, phi, std::move(chi), std::move(H), mutation, false, {}};
}

DPRInstance attach_antipode(const DPRInstance& D) {
  const FiniteGroup& G = *D.group;
  const int n = G.size();
  const int d = n * n;
  const unsigned N = D.qhopf->order();
  auto H = std::make_shared<QuasiHopfData>(*D.qhopf);

  std::vector<TensorElement> S(static_cast<std::size_t>(d), TensorElement(1, d, N));
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < n; ++s) {
      const int si = G.inv(s), xi = G.inv(x);
      const CycScalar c = (coproduct_ratio(G, D.phi, x, s, si) * D.chi(x, xi, si)).inverse();
      S[static_cast<std::size_t>(x * n + s)].add({xi * n + G.conj(x, si)}, c);
    }
  TensorElement beta(1, d, N);
  for (int s = 0; s < n; ++s) beta.add({s}, D.phi(s, G.inv(s), s).inverse());
  H->antipode = std::move(S);
  H->alpha = H->algebra.unit;
  H->beta = std::move(beta);

  DPRInstance out = D;
  const Report r = verify_antipode(*H);
  if (const auto* f = r.first_failure()) {
    out.antipode_absent = true;
    out.antipode_diagnostic = "monomial candidate fails " + f->name + " at " + point_to_string(f->witness->point) +
                              ": " + f->witness->detail;
    return out;
  }
  out.qhopf = std::move(H);
  out.antipode_absent = false;
  out.antipode_diagnostic.clear();
  return out;
}

QuasiHopfData build_function_algebra(const Cochain3& phi) {
  const FiniteGroup& G = phi.group();
  const int n = G.size();
  const unsigned N = phi.order();
  QuasiHopfData H;
  H.label = "k^phi(" + G.label() + ")[" + phi.label + "]";
  H.algebra.dim = n;
  H.algebra.order = N;
  H.algebra.mul.assign(static_cast<std::size_t>(n) * n, {});
  for (int s = 0; s < n; ++s) H.algebra.mul[static_cast<std::size_t>(s * n + s)].push_back({s, CycScalar::one(N)});
  H.algebra.unit = TensorElement(1, n, N);
  for (int s = 0; s < n; ++s) H.algebra.unit.add({s}, CycScalar::one(N));
  H.coproduct.assign(static_cast<std::size_t>(n), TensorElement(2, n, N));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) H.coproduct[static_cast<std::size_t>(G.mul(a, b))].add({a, b}, CycScalar::one(N));
  H.counit.assign(static_cast<std::size_t>(n), CycScalar::zero(N));
  H.counit[0] = CycScalar::one(N);
  H.associator = TensorElement(3, n, N);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) H.associator.add({a, b, c}, phi(a, b, c));
  std::vector<TensorElement> S(static_cast<std::size_t>(n), TensorElement(1, n, N));
  TensorElement beta(1, n, N);
  for (int s = 0; s < n; ++s) {
    S[static_cast<std::size_t>(s)].add({G.inv(s)}, CycScalar::one(N));
    beta.add({s}, phi(s, G.inv(s), s).inverse());
  }
  H.antipode = std::move(S);
  H.alpha = H.algebra.unit;
  H.beta = std::move(beta);
  return H;
}

QuasiHopfData build_group_algebra(GroupPtr g, unsigned order) {
  const FiniteGroup& G = *g;
  const int n = G.size();
  QuasiHopfData H;
  H.label = "k" + G.label();
  H.algebra.dim = n;
  H.algebra.order = order;
  H.algebra.mul.assign(static_cast<std::size_t>(n) * n, {});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      H.algebra.mul[static_cast<std::size_t>(x * n + y)].push_back({G.mul(x, y), CycScalar::one(order)});
  H.algebra.unit = TensorElement(1, n, order);
  H.algebra.unit.add({0}, CycScalar::one(order));
  H.coproduct.assign(static_cast<std::size_t>(n), TensorElement(2, n, order));
  for (int x = 0; x < n; ++x) H.coproduct[static_cast<std::size_t>(x)].add({x, x}, CycScalar::one(order));
  H.counit.assign(static_cast<std::size_t>(n), CycScalar::one(order));
  H.associator = TensorElement(3, n, order);
  H.associator.add({0, 0, 0}, CycScalar::one(order));
  std::vector<TensorElement> S(static_cast<std::size_t>(n), TensorElement(1, n, order));
  for (int x = 0; x < n; ++x) S[static_cast<std::size_t>(x)].add({G.inv(x)}, CycScalar::one(order));
  H.antipode = std::move(S);
  H.alpha = H.algebra.unit;
  H.beta = H.algebra.unit;
  TensorElement R(2, n, order);
  R.add({0, 0}, CycScalar::one(order));
  H.rmatrix = std::move(R);
  return H;
}

TensorElement embed_function(const DPRInstance& D, int s) {
  TensorElement t(1, D.qhopf->dim(), D.qhopf->order());
  t.add({D.index(0, s)}, CycScalar::one(D.qhopf->order()));
  return t;
}

TensorElement embed_group(const DPRInstance& D, int x) {
  TensorElement t(1, D.qhopf->dim(), D.qhopf->order());
  for (int s = 0; s < D.n(); ++s) t.add({D.index(x, s)}, CycScalar::one(D.qhopf->order()));
  return t;
}

ClauseList dpr_clauses(const DPRInstance& D) {
  ClauseList cl;
  append_clauses(cl, quasibialgebra_clauses(D.qhopf), "quasibialgebra");
  append_clauses(cl, quasitriangular_clauses(D.qhopf), "quasitriangular");
  append_clauses(cl, antipode_clauses(D.qhopf), "");

  auto Dp = std::make_shared<const DPRInstance>(D);
  auto Hf = std::make_shared<const QuasiHopfData>(build_function_algebra(D.phi));
  const long long n = D.n();
  cl.push_back({"dpr.subalgebra.product", [Dp, Hf, n](const Point* only) {
                  return scan_points({n, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int i = static_cast<int>(p[0]), j = static_cast<int>(p[1]);
                    auto lhs = tensor_mul(embed_function(*Dp, i), embed_function(*Dp, j), Dp->qhopf->algebra);
                    auto rhs = embed_h_tensor(algebra_product(Hf->algebra, i, j), Dp->qhopf->dim());
                    if (lhs == rhs) return std::nullopt;
                    return "iota(e_i) iota(e_j) = " + lhs.to_string() + " != iota(e_i e_j) = " + rhs.to_string();
                  });
                }, {}});
  cl.push_back({"dpr.subalgebra.unit", [Dp, Hf](const Point* only) {
                  return compare_tensors(Dp->qhopf->algebra.unit, embed_h_tensor(Hf->algebra.unit, Dp->qhopf->dim()),
                                         only);
                }, {}});
  cl.push_back({"dpr.subalgebra.coproduct", [Dp, Hf, n](const Point* only) {
                  return scan_points({n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int s = static_cast<int>(p[0]);
                    auto lhs = coproduct_extend(*Dp->qhopf, 0, embed_function(*Dp, s));
                    auto rhs = embed_h_tensor(Hf->coproduct[static_cast<std::size_t>(s)], Dp->qhopf->dim());
                    if (lhs == rhs) return std::nullopt;
                    return "Delta_D(iota d_s) = " + lhs.to_string() + " != " + rhs.to_string();
                  });
                }, {}});
  cl.push_back({"dpr.subalgebra.counit", [Dp, Hf, n](const Point* only) {
                  return scan_points({n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int s = static_cast<int>(p[0]);
                    const auto lhs = counit_value(*Dp->qhopf, embed_function(*Dp, s));
                    const auto& rhs = Hf->counit[static_cast<std::size_t>(s)];
                    if (lhs == rhs) return std::nullopt;
                    return "eps_D(iota d_s) = " + lhs.to_string() + " != " + rhs.to_string();
                  });
                }, {}});
  cl.push_back({"dpr.associator_embedded", [Dp, Hf](const Point* only) {
                  return compare_tensors(Dp->qhopf->associator, embed_h_tensor(Hf->associator, Dp->qhopf->dim()), only);
                }, {}});
  return cl;
}

Report verify_dpr(const DPRInstance& D) { return run_clauses(dpr_clauses(D)); }

ClauseList dpr_degeneration_clauses(const DPRInstance& D) {
  ClauseList cl;
  append_clauses(cl, ordinary_hopf_clauses(D.qhopf), "degeneration");
  return cl;
}

}  // namespace qdouble
