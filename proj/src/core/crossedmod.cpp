#include "qdouble/crossedmod.hpp"

#include <algorithm>
#include <map>

#include "qdouble/error.hpp"

namespace qdouble {

using Column = std::vector<std::pair<std::uint64_t, CycScalar>>;

// ---------------------------------------------------------------------------
// SparseMap

SparseMap::SparseMap(std::size_t rows, std::size_t cols, unsigned order) : rows_(rows), order_(order), cols_(cols) {}

SparseMap SparseMap::identity(std::size_t n, unsigned order) {
  SparseMap m(n, n, order);
  for (std::size_t j = 0; j < n; ++j) m.cols_[j].push_back({j, CycScalar::one(order)});
  return m;
}

std::size_t SparseMap::nnz() const noexcept {
  std::size_t k = 0;
  for (const auto& c : cols_) k += c.size();
  return k;
}

bool SparseMap::is_monomial() const noexcept {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.size() <= 1; });
}

void SparseMap::set_column(std::size_t j, Column entries) {
  require(j < cols_.size(), ErrorCode::invalid_argument, "column out of range");
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Column merged;
  for (auto& [r, c] : entries) {
    require(r < rows_, ErrorCode::invalid_argument, "row out of range");
    require(c.order() == order_, ErrorCode::invalid_argument, "map entry has mismatched order");
    if (!merged.empty() && merged.back().first == r)
      merged.back().second += c;
    else
      merged.push_back({r, std::move(c)});
  }
  std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
  cols_[j] = std::move(merged);
}

CycScalar SparseMap::entry(std::size_t row, std::size_t col) const {
  for (const auto& [r, c] : cols_.at(col))
    if (r == row) return c;
  return CycScalar::zero(order_);
}

SparseMap SparseMap::after(const SparseMap& other) const {
  require(other.rows_ == cols_.size(), ErrorCode::invalid_argument,
          "cannot compose: inner dimensions " + std::to_string(other.rows_) + " and " + std::to_string(cols_.size()));
  require(order_ == other.order_, ErrorCode::invalid_argument, "cannot compose maps of different orders");
  SparseMap out(rows_, other.cols(), order_);
  std::size_t total = 0;
  for (std::size_t j = 0; j < other.cols(); ++j) {
    const auto& src = other.cols_[j];
    if (src.size() == 1 && cols_[src[0].first].size() <= 1) {
      // monomial fast path
      const auto& mid = cols_[src[0].first];
      if (!mid.empty()) out.cols_[j].push_back({mid[0].first, mid[0].second * src[0].second});
    } else {
      Column acc;
      for (const auto& [k, c] : src)
        for (const auto& [r, v] : cols_[k]) acc.push_back({r, v * c});
      out.set_column(j, std::move(acc));
    }
    total += out.cols_[j].size();
    require(total <= kMaxMapEntries, ErrorCode::budget_exceeded, "map composition exceeds the entry budget");
  }
  return out;
}

bool operator==(const SparseMap& a, const SparseMap& b) {
  return a.rows_ == b.rows_ && a.order_ == b.order_ && a.cols_ == b.cols_;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const SparseMap& a, const SparseMap& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::invalid_argument, "comparing maps of different shape");
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto& ca = a.cols_[j];
    const auto& cb = b.cols_[j];
    if (ca == cb) continue;
    std::size_t i = 0;
    while (i < ca.size() && i < cb.size() && ca[i] == cb[i]) ++i;
    std::size_t row;
    if (i == ca.size())
      row = cb[i].first;
    else if (i == cb.size())
      row = ca[i].first;
    else
      row = std::min(ca[i].first, cb[i].first);
    return std::make_pair(j, row);
  }
  return std::nullopt;
}

std::size_t SparseMap::rank() const { return sparse_rank(cols_, rows_); }

SparseMap kron(const SparseMap& a, const SparseMap& b) {
  require(a.order() == b.order(), ErrorCode::invalid_argument, "kron of maps of different orders");
  require(a.nnz() * b.nnz() <= kMaxMapEntries, ErrorCode::budget_exceeded, "tensor product of maps exceeds the entry budget");
  SparseMap out(a.rows() * b.rows(), a.cols() * b.cols(), a.order());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Column col;
      for (const auto& [ra, va] : a.column(i))
        for (const auto& [rb, vb] : b.column(j)) col.push_back({ra * b.rows() + rb, va * vb});
      out.set_column(i * b.cols() + j, std::move(col));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Objects

namespace {

CycScalar tensor_ratio(const FiniteGroup& G, const Cochain3& phi, int x, int a, int b) {
  return phi(x, G.conj(x, a), G.conj(x, b)) * phi(a, b, x) / phi(a, x, G.conj(x, b));
}

CycScalar action_ratio(const FiniteGroup& G, const Cochain3& phi, int s, int x, int y) {
  const int xy = G.mul(x, y);
  return phi(x, y, G.conj(xy, s)) * phi(s, x, y) / phi(x, G.conj(x, s), y);
}

SparseVec add_into(std::map<int, CycScalar>& acc) {
  SparseVec out;
  for (auto& [k, v] : acc)
    if (!v.is_zero()) out.push_back({k, v});
  return out;
}

void accumulate(std::map<int, CycScalar>& acc, int k, const CycScalar& v) {
  auto [it, inserted] = acc.try_emplace(k, v);
  if (!inserted) it->second += v;
}

SparseVec act_vec(const CrossedGModule& V, const SparseVec& vec, int x) {
  std::map<int, CycScalar> acc;
  for (const auto& [w, c] : vec)
    for (const auto& [u, a] : V.act(w, x)) accumulate(acc, u, c * a);
  return add_into(acc);
}

std::string vec_string(const SparseVec& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + std::to_string(v[i].first) + ":" + v[i].second.to_string();
  return s + "}";
}

CrossedGModule make_object(const Cochain3& phi, int dim, std::string label) {
  CrossedGModule V;
  V.group = phi.group_ptr();
  V.phi = std::make_shared<const Cochain3>(phi);
  V.dim = dim;
  V.grading.assign(static_cast<std::size_t>(dim), 0);
  V.action.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(phi.group().size()), {});
  V.label = std::move(label);
  return V;
}

void require_compatible(const CrossedGModule& V, const CrossedGModule& W) {
  require(V.group->table() == W.group->table(), ErrorCode::invalid_argument, "objects over different groups");
  require(V.phi->order() == W.phi->order() && V.phi->values() == W.phi->values(), ErrorCode::invalid_argument,
          "objects over different cocycles");
}

std::optional<Witness> compare_maps(const SparseMap& lhs, const SparseMap& rhs, const Point* only) {
  if (only) {
    require(only->size() == 2, ErrorCode::invalid_argument, "map witness is (column, row)");
    const auto col = static_cast<std::size_t>((*only)[0]), row = static_cast<std::size_t>((*only)[1]);
    require((*only)[0] >= 0 && (*only)[1] >= 0 && col < lhs.cols() && row < lhs.rows(), ErrorCode::invalid_argument,
            "map witness out of range");
    const auto a = lhs.entry(row, col), b = rhs.entry(row, col);
    if (a == b) return std::nullopt;
    return Witness{*only, "lhs entry " + a.to_string() + " != rhs entry " + b.to_string()};
  }
  const auto d = first_difference(lhs, rhs);
  if (!d) return std::nullopt;
  const auto [col, row] = *d;
  return Witness{{static_cast<long long>(col), static_cast<long long>(row)},
                 "lhs entry " + lhs.entry(row, col).to_string() + " != rhs entry " + rhs.entry(row, col).to_string()};
}

std::vector<int> tensor_grading(const FiniteGroup& G, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() * b.size());
  for (int ga : a)
    for (int gb : b) out.push_back(G.mul(ga, gb));
  return out;
}

SparseMap associator_grades(const FiniteGroup& G, const Cochain3& phi, const std::vector<int>& gv,
                            const std::vector<int>& gw, const std::vector<int>& gz, bool inverse) {
  const std::size_t n = gv.size() * gw.size() * gz.size();
  require(n <= kMaxMapEntries, ErrorCode::budget_exceeded, "associator exceeds the entry budget");
  (void)G;
  SparseMap m(n, n, phi.order());
  std::size_t j = 0;
  for (int a : gv)
    for (int b : gw)
      for (int c : gz) {
        const CycScalar v = inverse ? phi(a, b, c).inverse() : phi(a, b, c);
        m.set_column(j, {{j, v}});
        ++j;
      }
  return m;
}

}  // namespace

CrossedGModule trivial_object(const Cochain3& phi) {
  CrossedGModule V = make_object(phi, 1, "trivial");
  for (int x = 0; x < phi.group().size(); ++x) V.action[static_cast<std::size_t>(x)] = {{0, CycScalar::one(phi.order())}};
  return V;
}

CrossedGModule regular_object(const Cochain3& phi) {
  const FiniteGroup& G = phi.group();
  const int n = G.size();
  require(static_cast<std::size_t>(n) * n * n <= kMaxMapEntries, ErrorCode::budget_exceeded, "regular object too large");
  CrossedGModule V = make_object(phi, n * n, "regular");
  const AdCochain2 chi = chi_from_phi(phi);
  for (int y = 0; y < n; ++y)
    for (int t = 0; t < n; ++t) {
      const int v = y * n + t;
      V.grading[static_cast<std::size_t>(v)] = G.conj(y, t);
      for (int x = 0; x < n; ++x)
        V.action[static_cast<std::size_t>(v * n + x)] = {{G.mul(y, x) * n + t, chi(y, x, t)}};
    }
  return V;
}

CrossedGModule ideal_object(const Cochain3& phi, int s) {
  const FiniteGroup& G = phi.group();
  const int n = G.size();
  require(s >= 0 && s < n, ErrorCode::invalid_argument, "ideal_object: element out of range");
  CrossedGModule V = make_object(phi, n, "ideal(" + std::to_string(s) + ")");
  const AdCochain2 chi = chi_from_phi(phi);
  for (int y = 0; y < n; ++y) {
    V.grading[static_cast<std::size_t>(y)] = G.conj(y, s);
    for (int x = 0; x < n; ++x) V.action[static_cast<std::size_t>(y * n + x)] = {{G.mul(y, x), chi(y, x, s)}};
  }
  return V;
}

ClauseList object_clauses(std::shared_ptr<const CrossedGModule> V) {
  const long long m = V->dim, n = V->group->size();
  ClauseList cl;
  cl.push_back({"object.shape", [V, m, n](const Point* only) {
                  return scan_points({}, only, [&](const Point&) -> std::optional<std::string> {
                    if (static_cast<long long>(V->grading.size()) != m) return "grading table has wrong length";
                    if (static_cast<long long>(V->action.size()) != m * n) return "action table has wrong length";
                    for (int g : V->grading)
                      if (g < 0 || g >= n) return "grading value out of range";
                    for (const auto& vec : V->action)
                      for (const auto& [u, c] : vec)
                        if (u < 0 || u >= m || c.order() != V->order()) return "action entry out of range";
                    return std::nullopt;
                  });
                }, {}});
  cl.push_back({"object.grading", [V, m, n](const Point* only) {
                  const auto& G = *V->group;
                  return scan_points({m, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int v = static_cast<int>(p[0]), x = static_cast<int>(p[1]);
                    const int want = G.conj(x, V->grading[static_cast<std::size_t>(v)]);
                    for (const auto& [u, c] : V->act(v, x))
                      if (V->grading[static_cast<std::size_t>(u)] != want)
                        return "v<|x has a component of degree " + std::to_string(V->grading[static_cast<std::size_t>(u)]) +
                               ", expected " + std::to_string(want);
                    return std::nullopt;
                  });
                }, {}});
  cl.push_back({"object.unit", [V, m](const Point* only) {
                  return scan_points({m}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int v = static_cast<int>(p[0]);
                    const SparseVec want{{v, CycScalar::one(V->order())}};
                    if (V->act(v, 0) == want) return std::nullopt;
                    return "v<|e = " + vec_string(V->act(v, 0));
                  });
                }, {}});
  cl.push_back({"object.cocycle_action", [V, m, n](const Point* only) {
                  const auto& G = *V->group;
                  return scan_points({m, n, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int v = static_cast<int>(p[0]), x = static_cast<int>(p[1]), y = static_cast<int>(p[2]);
                    const auto lhs = act_vec(*V, V->act(v, x), y);
                    const CycScalar r = action_ratio(G, *V->phi, V->grading[static_cast<std::size_t>(v)], x, y);
                    SparseVec rhs;
                    for (const auto& [u, c] : V->act(v, G.mul(x, y))) rhs.push_back({u, c * r});
                    if (lhs == rhs) return std::nullopt;
                    return "(v<|x)<|y = " + vec_string(lhs) + " != " + vec_string(rhs);
                  });
                }, {}});
  return cl;
}

Report verify_object(const CrossedGModule& V) {
  return run_clauses(object_clauses(std::make_shared<const CrossedGModule>(V)));
}

CrossedGModule tensor_objects(const CrossedGModule& V, const CrossedGModule& W) {
  require_compatible(V, W);
  const FiniteGroup& G = *V.group;
  const int n = G.size();
  const std::size_t dim = static_cast<std::size_t>(V.dim) * static_cast<std::size_t>(W.dim);
  require(dim * static_cast<std::size_t>(n) <= kMaxMapEntries, ErrorCode::budget_exceeded,
          "tensor object exceeds the entry budget");
  CrossedGModule T = make_object(*V.phi, static_cast<int>(dim), "(" + V.label + " (x) " + W.label + ")");
  T.phi = V.phi;
  T.grading = tensor_grading(G, V.grading, W.grading);
  for (int v = 0; v < V.dim; ++v)
    for (int w = 0; w < W.dim; ++w) {
      const int a = V.grading[static_cast<std::size_t>(v)], b = W.grading[static_cast<std::size_t>(w)];
      const int idx = v * W.dim + w;
      for (int x = 0; x < n; ++x) {
        const CycScalar r = tensor_ratio(G, *V.phi, x, a, b);
        SparseVec out;
        for (const auto& [v2, c1] : V.act(v, x))
          for (const auto& [w2, c2] : W.act(w, x)) out.push_back({v2 * W.dim + w2, r * c1 * c2});
        std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        T.action[static_cast<std::size_t>(idx * n + x)] = std::move(out);
      }
    }
  return T;
}

SparseMap associator(const CrossedGModule& V, const CrossedGModule& W, const CrossedGModule& Z) {
  require_compatible(V, W);
  require_compatible(V, Z);
  return associator_grades(*V.group, *V.phi, V.grading, W.grading, Z.grading, false);
}

SparseMap associator_inverse(const CrossedGModule& V, const CrossedGModule& W, const CrossedGModule& Z) {
  require_compatible(V, W);
  require_compatible(V, Z);
  return associator_grades(*V.group, *V.phi, V.grading, W.grading, Z.grading, true);
}

const char* braiding_variant_name(BraidingVariant b) {
  switch (b) {
    case BraidingVariant::standard: return "standard";
    case BraidingVariant::inverted_degree: return "inverted_degree";
    case BraidingVariant::flip_left_degree: return "flip_left_degree";
  }
  return "?";
}

BraidingVariant parse_braiding_variant(const std::string& s) {
  std::string k = s;
  std::replace(k.begin(), k.end(), '-', '_');
  for (auto b : {BraidingVariant::standard, BraidingVariant::inverted_degree, BraidingVariant::flip_left_degree})
    if (k == braiding_variant_name(b)) return b;
  fail(ErrorCode::invalid_argument, "unknown braiding variant '" + s + "'");
}

SparseMap braiding(const CrossedGModule& V, const CrossedGModule& W, BraidingVariant variant) {
  require_compatible(V, W);
  const FiniteGroup& G = *V.group;
  const std::size_t vd = static_cast<std::size_t>(V.dim), wd = static_cast<std::size_t>(W.dim);
  require(vd * wd <= kMaxMapEntries, ErrorCode::budget_exceeded, "braiding exceeds the entry budget");
  SparseMap m(wd * vd, vd * wd, V.order());
  for (std::size_t v = 0; v < vd; ++v)
    for (std::size_t w = 0; w < wd; ++w) {
      Column col;
      const int gv = V.grading[v], gw = W.grading[w];
      switch (variant) {
        case BraidingVariant::standard:
          for (const auto& [v2, c] : V.act(static_cast<int>(v), gw)) col.push_back({w * vd + static_cast<std::size_t>(v2), c});
          break;
        case BraidingVariant::inverted_degree:
          for (const auto& [v2, c] : V.act(static_cast<int>(v), G.inv(gw)))
            col.push_back({w * vd + static_cast<std::size_t>(v2), c});
          break;
        case BraidingVariant::flip_left_degree:
          for (const auto& [w2, c] : W.act(static_cast<int>(w), gv)) col.push_back({static_cast<std::size_t>(w2) * vd + v, c});
          break;
      }
      m.set_column(v * wd + w, std::move(col));
    }
  return m;
}

ClauseList morphism_clauses(std::shared_ptr<const SparseMap> f, std::shared_ptr<const CrossedGModule> V,
                            std::shared_ptr<const CrossedGModule> W, bool require_invertible) {
  require(f->cols() == static_cast<std::size_t>(V->dim) && f->rows() == static_cast<std::size_t>(W->dim),
          ErrorCode::invalid_argument, "morphism has the wrong shape");
  require_compatible(*V, *W);
  const long long m = V->dim, n = V->group->size();
  ClauseList cl;
  cl.push_back({"morphism.grading", [f, V, W, m](const Point* only) {
                  return scan_points({m}, only, [&](const Point& p) -> std::optional<std::string> {
                    const auto v = static_cast<std::size_t>(p[0]);
                    for (const auto& [r, c] : f->column(v))
                      if (W->grading[r] != V->grading[v])
                        return "f(v) has a component of degree " + std::to_string(W->grading[r]) + " != |v| = " +
                               std::to_string(V->grading[v]);
                    return std::nullopt;
                  });
                }, {}});
  cl.push_back({"morphism.action", [f, V, W, m, n](const Point* only) {
                  return scan_points({m, n}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int v = static_cast<int>(p[0]), x = static_cast<int>(p[1]);
                    std::map<int, CycScalar> acc;
                    for (const auto& [u, c] : V->act(v, x))
                      for (const auto& [r, a] : f->column(static_cast<std::size_t>(u))) accumulate(acc, static_cast<int>(r), c * a);
                    const SparseVec lhs = add_into(acc);
                    SparseVec fv;
                    for (const auto& [r, a] : f->column(static_cast<std::size_t>(v))) fv.push_back({static_cast<int>(r), a});
                    const SparseVec rhs = act_vec(*W, fv, x);
                    if (lhs == rhs) return std::nullopt;
                    return "f(v<|x) = " + vec_string(lhs) + " != f(v)<|x = " + vec_string(rhs);
                  });
                }, {}});
  if (require_invertible)
    cl.push_back({"morphism.invertible", [f](const Point* only) {
                    return scan_points({}, only, [&](const Point&) -> std::optional<std::string> {
                      if (f->rows() != f->cols()) return "map is not square";
                      const auto r = f->rank();
                      if (r == f->cols()) return std::nullopt;
                      return "rank " + std::to_string(r) + " < " + std::to_string(f->cols());
                    });
                  }, {}});
  return cl;
}

Report verify_morphism(const SparseMap& f, const CrossedGModule& V, const CrossedGModule& W, bool require_invertible) {
  return run_clauses(morphism_clauses(std::make_shared<const SparseMap>(f), std::make_shared<const CrossedGModule>(V),
                                      std::make_shared<const CrossedGModule>(W), require_invertible));
}

ClauseList hexagon_clauses(std::shared_ptr<const CrossedGModule> V, std::shared_ptr<const CrossedGModule> W,
                           std::shared_ptr<const CrossedGModule> Z, BraidingVariant variant) {
  require_compatible(*V, *W);
  require_compatible(*V, *Z);
  auto VW = std::make_shared<const CrossedGModule>(tensor_objects(*V, *W));
  auto WV = std::make_shared<const CrossedGModule>(tensor_objects(*W, *V));
  const unsigned N = V->order();
  const auto id = [N](const CrossedGModule& X) { return SparseMap::identity(static_cast<std::size_t>(X.dim), N); };

  ClauseList cl;
  append_clauses(cl, morphism_clauses(std::make_shared<const SparseMap>(braiding(*V, *W, variant)), VW, WV, true),
                 "braiding");
  cl.push_back({"hexagon.tensrep", [=](const Point* only) {
                  const auto lhs = braiding(*VW, *Z, variant);
                  auto rhs = kron(id(*V), braiding(*W, *Z, variant)).after(associator(*V, *W, *Z));
                  rhs = associator_inverse(*V, *Z, *W).after(rhs);
                  rhs = kron(braiding(*V, *Z, variant), id(*W)).after(rhs);
                  rhs = associator(*Z, *V, *W).after(rhs);
                  return compare_maps(lhs, rhs, only);
                }, {}});
  cl.push_back({"hexagon.repcat", [=](const Point* only) {
                  auto lhs = associator(*W, *V, *Z).after(kron(braiding(*V, *W, variant), id(*Z)));
                  lhs = kron(id(*W), braiding(*V, *Z, variant)).after(lhs);
                  const CrossedGModule WZ = tensor_objects(*W, *Z);
                  auto rhs = braiding(*V, WZ, variant).after(associator(*V, *W, *Z));
                  rhs = associator(*W, *Z, *V).after(rhs);
                  return compare_maps(lhs, rhs, only);
                }, {}});
  cl.push_back({"braid_relation", [=](const Point* only) {
                  // (V W) Z -> (Z W) V along both hexagon routes
                  auto a = associator(*W, *V, *Z).after(kron(braiding(*V, *W, variant), id(*Z)));
                  a = kron(id(*W), braiding(*V, *Z, variant)).after(a);
                  a = associator_inverse(*W, *Z, *V).after(a);
                  a = kron(braiding(*W, *Z, variant), id(*V)).after(a);
                  auto b = kron(id(*V), braiding(*W, *Z, variant)).after(associator(*V, *W, *Z));
                  b = associator_inverse(*V, *Z, *W).after(b);
                  b = kron(braiding(*V, *Z, variant), id(*W)).after(b);
                  b = associator(*Z, *V, *W).after(b);
                  b = kron(id(*Z), braiding(*V, *W, variant)).after(b);
                  b = associator_inverse(*Z, *W, *V).after(b);
                  return compare_maps(a, b, only);
                }, {}});
  return cl;
}

Report verify_hexagon(const CrossedGModule& V, const CrossedGModule& W, const CrossedGModule& Z, BraidingVariant variant) {
  return run_clauses(hexagon_clauses(std::make_shared<const CrossedGModule>(V), std::make_shared<const CrossedGModule>(W),
                                     std::make_shared<const CrossedGModule>(Z), variant));
}

ClauseList pentagon_clauses(std::vector<std::shared_ptr<const CrossedGModule>> objs) {
  require(objs.size() == 4, ErrorCode::invalid_argument, "pentagon needs four objects");
  for (const auto& o : objs) require_compatible(*objs[0], *o);
  ClauseList cl;
  cl.push_back({"pentagon.objects", [objs](const Point* only) {
                  const auto& G = *objs[0]->group;
                  const auto& phi = *objs[0]->phi;
                  const auto &a = objs[0]->grading, &b = objs[1]->grading, &c = objs[2]->grading, &d = objs[3]->grading;
                  const unsigned N = phi.order();
                  const auto ab = tensor_grading(G, a, b), bc = tensor_grading(G, b, c), cd = tensor_grading(G, c, d);
                  auto lhs = associator_grades(G, phi, a, b, cd, false).after(associator_grades(G, phi, ab, c, d, false));
                  auto rhs = associator_grades(G, phi, a, bc, d, false)
                                 .after(kron(associator_grades(G, phi, a, b, c, false), SparseMap::identity(d.size(), N)));
                  rhs = kron(SparseMap::identity(a.size(), N), associator_grades(G, phi, b, c, d, false)).after(rhs);
                  return compare_maps(lhs, rhs, only);
                }, {}});
  return cl;
}

ClauseList naturality_clauses(std::shared_ptr<const CrossedGModule> V, std::shared_ptr<const CrossedGModule> Vp,
                              std::shared_ptr<const SparseMap> f, std::shared_ptr<const CrossedGModule> Z,
                              std::shared_ptr<const CrossedGModule> Zp, std::shared_ptr<const SparseMap> g,
                              BraidingVariant variant) {
  ClauseList cl;
  append_clauses(cl, morphism_clauses(f, V, Vp, false), "f");
  append_clauses(cl, morphism_clauses(g, Z, Zp, false), "g");
  cl.push_back({"naturality", [=](const Point* only) {
                  const auto lhs = kron(*g, *f).after(braiding(*V, *Z, variant));
                  const auto rhs = braiding(*Vp, *Zp, variant).after(kron(*f, *g));
                  return compare_maps(lhs, rhs, only);
                }, {}});
  return cl;
}

SparseMap regular_right_multiplication(const DPRInstance& D, int b) {
  const auto& A = D.qhopf->algebra;
  SparseMap m(static_cast<std::size_t>(A.dim), static_cast<std::size_t>(A.dim), A.order);
  for (int v = 0; v < A.dim; ++v) {
    Column col;
    for (const auto& [k, c] : A.product(v, b)) col.push_back({static_cast<std::uint64_t>(k), c});
    m.set_column(static_cast<std::size_t>(v), std::move(col));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Modules

LeftModule regular_module(const QuasiHopfData& H) {
  const auto& A = H.algebra;
  LeftModule M;
  M.dim = A.dim;
  for (int b = 0; b < A.dim; ++b) {
    SparseMap m(static_cast<std::size_t>(A.dim), static_cast<std::size_t>(A.dim), A.order);
    for (int v = 0; v < A.dim; ++v) {
      Column col;
      for (const auto& [k, c] : A.product(b, v)) col.push_back({static_cast<std::uint64_t>(k), c});
      m.set_column(static_cast<std::size_t>(v), std::move(col));
    }
    M.act.push_back(std::move(m));
  }
  return M;
}

namespace {

SparseVec apply_map(const SparseMap& m, const SparseVec& v) {
  std::map<int, CycScalar> acc;
  for (const auto& [k, c] : v)
    for (const auto& [r, a] : m.column(static_cast<std::size_t>(k))) accumulate(acc, static_cast<int>(r), c * a);
  return add_into(acc);
}

}  // namespace

ClauseList module_clauses(QuasiHopfPtr H, std::shared_ptr<const LeftModule> M) {
  const long long d = H->dim(), m = M->dim;
  require(static_cast<long long>(M->act.size()) == d, ErrorCode::invalid_argument, "module needs one matrix per basis element");
  for (const auto& a : M->act)
    require(a.rows() == static_cast<std::size_t>(m) && a.cols() == static_cast<std::size_t>(m) && a.order() == H->order(),
            ErrorCode::invalid_argument, "module matrix has the wrong shape or order");
  ClauseList cl;
  cl.push_back({"module.representation", [H, M, d, m](const Point* only) {
                  return scan_points({d, d, m}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int i = static_cast<int>(p[0]), j = static_cast<int>(p[1]), v = static_cast<int>(p[2]);
                    const SparseVec ev{{v, CycScalar::one(H->order())}};
                    const auto lhs = apply_map(M->act[static_cast<std::size_t>(i)], apply_map(M->act[static_cast<std::size_t>(j)], ev));
                    std::map<int, CycScalar> acc;
                    for (const auto& [k, c] : H->algebra.product(i, j))
                      for (const auto& [r, a] : M->act[static_cast<std::size_t>(k)].column(static_cast<std::size_t>(v)))
                        accumulate(acc, static_cast<int>(r), c * a);
                    const auto rhs = add_into(acc);
                    if (lhs == rhs) return std::nullopt;
                    return "e_i |> (e_j |> v) = " + vec_string(lhs) + " != (e_i e_j) |> v = " + vec_string(rhs);
                  });
                }, {}});
  cl.push_back({"module.unit", [H, M, m](const Point* only) {
                  return scan_points({m}, only, [&](const Point& p) -> std::optional<std::string> {
                    const int v = static_cast<int>(p[0]);
                    std::map<int, CycScalar> acc;
                    for (const auto& [k, c] : H->algebra.unit.terms())
                      for (const auto& [r, a] : M->act[k].column(static_cast<std::size_t>(v))) accumulate(acc, static_cast<int>(r), c * a);
                    const auto got = add_into(acc);
                    const SparseVec want{{v, CycScalar::one(H->order())}};
                    if (got == want) return std::nullopt;
                    return "1 |> v = " + vec_string(got);
                  });
                }, {}});
  return cl;
}

LeftModule crossed_to_module(const DPRInstance& D, const CrossedGModule& V) {
  const int n = D.n();
  require(V.group->table() == D.group->table(), ErrorCode::invalid_argument, "object and double use different groups");
  require(V.order() == D.qhopf->order(), ErrorCode::invalid_argument, "object and double use different scalar orders");
  LeftModule M;
  M.dim = V.dim;
  const auto m = static_cast<std::size_t>(V.dim);
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < n; ++s) {
      SparseMap a(m, m, V.order());
      for (int v = 0; v < V.dim; ++v) {
        if (V.grading[static_cast<std::size_t>(v)] != s) continue;
        Column col;
        for (const auto& [u, c] : V.act(v, x)) col.push_back({static_cast<std::uint64_t>(u), c});
        a.set_column(static_cast<std::size_t>(v), std::move(col));
      }
      M.act.push_back(std::move(a));
    }
  return M;
}

CrossedGModule module_to_crossed(const DPRInstance& D, const LeftModule& M) {
  auto Mp = std::make_shared<const LeftModule>(M);
  const Report r = run_clauses(module_clauses(D.qhopf, Mp));
  if (const auto* f = r.first_failure())
    fail(ErrorCode::invalid_argument, "module data fails " + f->name + " at " + point_to_string(f->witness->point) + ": " +
                                          f->witness->detail);
  const int n = D.n();
  CrossedGModule V = make_object(D.phi, M.dim, "module");
  const CycScalar one = CycScalar::one(D.qhopf->order());
  for (int v = 0; v < M.dim; ++v) {
    int deg = -1;
    for (int s = 0; s < n; ++s) {
      const auto& col = M.act[static_cast<std::size_t>(D.index(0, s))].column(static_cast<std::size_t>(v));
      if (col.empty()) continue;
      if (col.size() != 1 || col[0].first != static_cast<std::uint64_t>(v) || !(col[0].second == one) || deg >= 0)
        fail(ErrorCode::invalid_argument, "basis vector " + std::to_string(v) + " is not homogeneous");
      deg = s;
    }
    require(deg >= 0, ErrorCode::invalid_argument, "basis vector " + std::to_string(v) + " has no degree");
    V.grading[static_cast<std::size_t>(v)] = deg;
    for (int x = 0; x < n; ++x) {
      std::map<int, CycScalar> acc;
      for (int t = 0; t < n; ++t)
        for (const auto& [r2, c] : M.act[static_cast<std::size_t>(D.index(x, t))].column(static_cast<std::size_t>(v)))
          accumulate(acc, static_cast<int>(r2), c);
      V.action[static_cast<std::size_t>(v * n + x)] = add_into(acc);
    }
  }
  return V;
}

ClauseList transport_clauses(std::shared_ptr<const DPRInstance> D, std::shared_ptr<const CrossedGModule> V,
                             std::shared_ptr<const CrossedGModule> W, std::shared_ptr<const CrossedGModule> Z) {
  require(D->qhopf->rmatrix.has_value(), ErrorCode::invalid_argument, "double has no R-matrix");
  auto MV = std::make_shared<const LeftModule>(crossed_to_module(*D, *V));
  auto MW = std::make_shared<const LeftModule>(crossed_to_module(*D, *W));
  auto MZ = std::make_shared<const LeftModule>(crossed_to_module(*D, *Z));
  ClauseList cl;
  // Psi_{V,W}(v (x) w) = sum R2 |> w (x) R1 |> v
  cl.push_back({"transport.rmatrix", [=](const Point* only) {
                  const auto& R = *D->qhopf->rmatrix;
                  const auto vd = static_cast<std::size_t>(V->dim), wd = static_cast<std::size_t>(W->dim);
                  SparseMap rhs(wd * vd, vd * wd, V->order());
                  std::vector<Column> cols(vd * wd);
                  for (const auto& [k, c] : R.terms()) {
                    const auto idx = R.decode(k);
                    const auto& a1 = MV->act[static_cast<std::size_t>(idx[0])];
                    const auto& a2 = MW->act[static_cast<std::size_t>(idx[1])];
                    for (std::size_t v = 0; v < vd; ++v) {
                      if (a1.column(v).empty()) continue;
                      for (std::size_t w = 0; w < wd; ++w)
                        for (const auto& [v2, x1] : a1.column(v))
                          for (const auto& [w2, x2] : a2.column(w)) cols[v * wd + w].push_back({w2 * vd + v2, c * x1 * x2});
                    }
                  }
                  for (std::size_t j = 0; j < cols.size(); ++j) rhs.set_column(j, std::move(cols[j]));
                  return compare_maps(braiding(*V, *W), rhs, only);
                }, {}});
  // Phi_{V,W,Z} = phi |> on (V (x) W) (x) Z
  cl.push_back({"transport.associator", [=](const Point* only) {
                  const auto& phi = D->qhopf->associator;
                  const auto vd = static_cast<std::size_t>(V->dim), wd = static_cast<std::size_t>(W->dim),
                             zd = static_cast<std::size_t>(Z->dim);
                  std::vector<Column> cols(vd * wd * zd);
                  for (const auto& [k, c] : phi.terms()) {
                    const auto idx = phi.decode(k);
                    const auto& a1 = MV->act[static_cast<std::size_t>(idx[0])];
                    const auto& a2 = MW->act[static_cast<std::size_t>(idx[1])];
                    const auto& a3 = MZ->act[static_cast<std::size_t>(idx[2])];
                    for (std::size_t v = 0; v < vd; ++v) {
                      if (a1.column(v).empty()) continue;
                      for (std::size_t w = 0; w < wd; ++w) {
                        if (a2.column(w).empty()) continue;
                        for (std::size_t z = 0; z < zd; ++z)
                          for (const auto& [v2, x1] : a1.column(v))
                            for (const auto& [w2, x2] : a2.column(w))
                              for (const auto& [z2, x3] : a3.column(z))
                                cols[(v * wd + w) * zd + z].push_back({(v2 * wd + w2) * zd + z2, c * x1 * x2 * x3});
                      }
                    }
                  }
                  SparseMap rhs(vd * wd * zd, vd * wd * zd, V->order());
                  for (std::size_t j = 0; j < cols.size(); ++j) rhs.set_column(j, std::move(cols[j]));
                  return compare_maps(associator(*V, *W, *Z), rhs, only);
                }, {}});
  // crossed_to_module(V (x) W) = (crossed_to_module(V) (x) crossed_to_module(W)) o Delta
  cl.push_back({"transport.tensor", [=](const Point* only) {
                  const CrossedGModule VW = tensor_objects(*V, *W);
                  const LeftModule MVW = crossed_to_module(*D, VW);
                  const long long d = D->qhopf->dim();
                  const auto wd = static_cast<std::size_t>(W->dim);
                  return scan_points({d, VW.dim}, only, [&](const Point& p) -> std::optional<std::string> {
                    const auto b = static_cast<std::size_t>(p[0]);
                    const auto j = static_cast<std::size_t>(p[1]);
                    const auto v = j / wd, w = j % wd;
                    Column acc;
                    const auto& dl = D->qhopf->coproduct[b];
                    for (const auto& [k, c] : dl.terms()) {
                      const auto idx = dl.decode(k);
                      for (const auto& [v2, x1] : MV->act[static_cast<std::size_t>(idx[0])].column(v))
                        for (const auto& [w2, x2] : MW->act[static_cast<std::size_t>(idx[1])].column(w))
                          acc.push_back({v2 * wd + w2, c * x1 * x2});
                    }
                    SparseMap tmp(MVW.act[b].rows(), 1, V->order());
                    tmp.set_column(0, std::move(acc));
                    if (tmp.column(0) == MVW.act[b].column(j)) return std::nullopt;
                    return std::string("Delta(b) acting on v (x) w differs from the tensor object action");
                  });
                }, {}});
  return cl;
}

}  // namespace qdouble
