#include "qdouble/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qdouble/error.hpp"

namespace qdouble {

TensorElement::TensorElement(int arity, int dim, unsigned order) : arity_(arity), dim_(dim), order_(order) {
  require(arity >= 1 && dim >= 1 && order >= 1, ErrorCode::invalid_argument, "invalid tensor shape");
  long double span = 1;
  for (int i = 0; i < arity; ++i) span *= dim;
  require(span < 9.0e18L, ErrorCode::invalid_argument, "tensor index space too large");
}

TensorElement::Key TensorElement::encode(std::span<const int> idx) const {
  require(static_cast<int>(idx.size()) == arity_, ErrorCode::invalid_argument, "tensor index has wrong arity");
  Key k = 0;
  for (int i : idx) {
    require(i >= 0 && i < dim_, ErrorCode::invalid_argument, "tensor index out of range");
    k = k * static_cast<Key>(dim_) + static_cast<Key>(i);
  }
  return k;
}

std::vector<int> TensorElement::decode(Key key) const {
  std::vector<int> idx(static_cast<std::size_t>(arity_));
  for (int i = arity_; i-- > 0;) {
    idx[static_cast<std::size_t>(i)] = static_cast<int>(key % static_cast<Key>(dim_));
    key /= static_cast<Key>(dim_);
  }
  return idx;
}

void TensorElement::add_key(Key key, const CycScalar& c) {
  if (c.is_zero()) return;
  require(c.order() == order_, ErrorCode::invalid_argument, "tensor coefficient has mismatched order");
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElement::add(std::span<const int> idx, const CycScalar& c) { add_key(encode(idx), c); }

CycScalar TensorElement::coeff(std::span<const int> idx) const {
  auto it = terms_.find(encode(idx));
  return it == terms_.end() ? CycScalar::zero(order_) : it->second;
}

static void check_compatible(const TensorElement& a, const TensorElement& b) {
  require(a.arity() == b.arity() && a.dim() == b.dim(), ErrorCode::invalid_argument,
          "tensor arity/dimension mismatch");
  require(a.order() == b.order(), ErrorCode::invalid_argument, "tensor order mismatch");
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  check_compatible(*this, o);
  for (const auto& [k, c] : o.terms_) add_key(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  check_compatible(*this, o);
  for (const auto& [k, c] : o.terms_) add_key(k, -c);
  return *this;
}

TensorElement TensorElement::scaled(const CycScalar& c) const {
  TensorElement r(arity_, dim_, order_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.order_ == b.order_ && a.terms_ == b.terms_;
}

std::optional<TensorElement::Key> first_difference(const TensorElement& a, const TensorElement& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) return ia->first;
    if (ia == a.terms_.end() || ib->first < ia->first) return ib->first;
    if (!(ia->second == ib->second)) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

std::string TensorElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")e";
    const auto idx = decode(k);
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "[") << idx[i];
    os << ']';
  }
  if (first) os << '0';
  return os.str();
}

TensorElement basis_vector(const AlgebraData& alg, int i) {
  TensorElement t(1, alg.dim, alg.order);
  t.add({i}, CycScalar::one(alg.order));
  return t;
}

TensorElement tensor_unit(const AlgebraData& alg, int arity) {
  TensorElement t = alg.unit;
  for (int i = 1; i < arity; ++i) t = outer(t, alg.unit);
  return t;
}

namespace {

using Key = TensorElement::Key;

// Multiplies the basis tuples ia and ib leg by leg and accumulates
// coef * (product) into out.
void mul_tuples(const std::vector<int>& ia, const std::vector<int>& ib, const CycScalar& coef,
                const AlgebraData& alg, TensorElement& out) {
  const std::size_t k = ia.size();
  const std::vector<std::pair<int, CycScalar>>* legs[8];
  std::vector<const std::vector<std::pair<int, CycScalar>>*> legs_heap;
  auto** lp = legs;
  if (k > 8) {
    legs_heap.resize(k);
    lp = legs_heap.data();
  }
  for (std::size_t i = 0; i < k; ++i) {
    lp[i] = &alg.product(ia[i], ib[i]);
    if (lp[i]->empty()) return;
  }
  // Enumerate the cartesian product of the per-leg expansions.
  std::vector<std::size_t> pos(k, 0);
  const Key d = static_cast<Key>(alg.dim);
  while (true) {
    Key key = 0;
    CycScalar c = coef;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& [idx, v] = (*lp[i])[pos[i]];
      key = key * d + static_cast<Key>(idx);
      if (!v.is_one()) c *= v;
    }
    out.add_key(key, c);
    std::size_t i = k;
    while (i-- > 0) {
      if (++pos[i] < lp[i]->size()) break;
      pos[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
}

struct Decoded {
  std::vector<std::vector<int>> idx;
  std::vector<const CycScalar*> coef;
};

Decoded decode_all(const TensorElement& t) {
  Decoded d;
  d.idx.reserve(t.size());
  d.coef.reserve(t.size());
  for (const auto& [k, c] : t.terms()) {
    d.idx.push_back(t.decode(k));
    d.coef.push_back(&c);
  }
  return d;
}

}  // namespace

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b, const AlgebraData& alg) {
  check_compatible(a, b);
  require(a.dim() == alg.dim, ErrorCode::invalid_argument, "tensor dimension does not match algebra");
  TensorElement out(a.arity(), a.dim(), a.order());
  const Decoded da = decode_all(a), db = decode_all(b);
  for (std::size_t i = 0; i < da.idx.size(); ++i)
    for (std::size_t j = 0; j < db.idx.size(); ++j) {
      // skip the scalar product when some leg multiplies to zero
      bool zero = false;
      for (std::size_t l = 0; l < da.idx[i].size(); ++l)
        if (alg.product(da.idx[i][l], db.idx[j][l]).empty()) {
          zero = true;
          break;
        }
      if (zero) continue;
      mul_tuples(da.idx[i], db.idx[j], *da.coef[i] * *db.coef[j], alg, out);
    }
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Solves the dense system M x = rhs in place; returns false if singular.
bool dense_solve(std::vector<std::vector<CycScalar>>& m, std::vector<CycScalar>& rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const CycScalar inv = m[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const CycScalar f = m[r][col];
      for (std::size_t j = col; j < n; ++j)
        if (!m[col][j].is_zero()) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return true;
}

}  // namespace

TensorElement tensor_inverse(const TensorElement& a, const AlgebraData& alg, std::size_t block_limit) {
  require(a.dim() == alg.dim && a.order() == alg.order, ErrorCode::invalid_argument,
          "tensor does not match algebra");
  const int k = a.arity();
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) n *= static_cast<std::size_t>(alg.dim);
  require(n <= 5'000'000, ErrorCode::budget_exceeded, "tensor_inverse system too large");

  // Column j of the left-multiplication operator is a * e_j.
  std::vector<std::vector<std::pair<Key, CycScalar>>> cols(n);
  const Decoded da = decode_all(a);
  std::vector<int> ej(static_cast<std::size_t>(k));
  TensorElement tmp(k, alg.dim, alg.order);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t rem = j;
    for (int l = k; l-- > 0;) {
      ej[static_cast<std::size_t>(l)] = static_cast<int>(rem % static_cast<std::size_t>(alg.dim));
      rem /= static_cast<std::size_t>(alg.dim);
    }
    tmp = TensorElement(k, alg.dim, alg.order);
    for (std::size_t t = 0; t < da.idx.size(); ++t) {
      bool zero = false;
      for (int l = 0; l < k && !zero; ++l)
        zero = alg.product(da.idx[t][static_cast<std::size_t>(l)], ej[static_cast<std::size_t>(l)]).empty();
      if (!zero) mul_tuples(da.idx[t], ej, *da.coef[t], alg, tmp);
    }
    cols[j].assign(tmp.terms().begin(), tmp.terms().end());
    if (cols[j].empty()) fail(ErrorCode::not_invertible, "tensor is not invertible (zero column)");
  }

  // Connected blocks of the bipartite row/column graph; rows are offset by n.
  UnionFind uf(2 * n);
  std::vector<char> row_seen(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [r, c] : cols[j]) {
      uf.unite(j, n + static_cast<std::size_t>(r));
      row_seen[static_cast<std::size_t>(r)] = 1;
    }
  for (std::size_t r = 0; r < n; ++r)
    if (!row_seen[r]) fail(ErrorCode::not_invertible, "tensor is not invertible (zero row)");

  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
  for (std::size_t j = 0; j < n; ++j) blocks[uf.find(j)].first.push_back(j);
  for (std::size_t r = 0; r < n; ++r) blocks[uf.find(n + r)].second.push_back(r);

  const TensorElement rhs_full = tensor_unit(alg, k);
  TensorElement x(k, alg.dim, alg.order);
  for (auto& [root, rc] : blocks) {
    auto& [bcols, brows] = rc;
    if (bcols.size() != brows.size()) fail(ErrorCode::not_invertible, "tensor is not invertible (non-square block)");
    const std::size_t m = bcols.size();
    require(m <= block_limit, ErrorCode::budget_exceeded,
            "tensor_inverse block of size " + std::to_string(m) + " exceeds limit");
    std::map<std::size_t, std::size_t> row_local;
    for (std::size_t i = 0; i < m; ++i) row_local[brows[i]] = i;
    std::vector<std::vector<CycScalar>> mat(m, std::vector<CycScalar>(m, CycScalar::zero(alg.order)));
    std::vector<CycScalar> rhs(m, CycScalar::zero(alg.order));
    for (std::size_t cj = 0; cj < m; ++cj)
      for (const auto& [r, c] : cols[bcols[cj]]) mat[row_local.at(static_cast<std::size_t>(r))][cj] = c;
    bool any_rhs = false;
    for (std::size_t i = 0; i < m; ++i) {
      auto it = rhs_full.terms().find(static_cast<Key>(brows[i]));
      if (it != rhs_full.terms().end()) {
        rhs[i] = it->second;
        any_rhs = true;
      }
    }
    if (!dense_solve(mat, rhs)) fail(ErrorCode::not_invertible, "tensor is not invertible (singular block)");
    if (!any_rhs) continue;
    for (std::size_t cj = 0; cj < m; ++cj) x.add_key(static_cast<Key>(bcols[cj]), rhs[cj]);
  }

  const TensorElement one = tensor_unit(alg, k);
  if (!(tensor_mul(a, x, alg) == one)) fail(ErrorCode::internal, "right inverse check failed");
  if (!(tensor_mul(x, a, alg) == one))
    fail(ErrorCode::internal, "element has a right inverse that is not a left inverse");
  return x;
}

TensorElement coproduct_extend(const QuasiHopfData& H, int leg, const TensorElement& a) {
  require(leg >= 0 && leg < a.arity(), ErrorCode::invalid_argument, "coproduct leg out of range");
  TensorElement out(a.arity() + 1, a.dim(), a.order());
  std::vector<int> idx(static_cast<std::size_t>(a.arity() + 1));
  for (const auto& [k, c] : a.terms()) {
    const auto src = a.decode(k);
    const auto& delta = H.coproduct[static_cast<std::size_t>(src[static_cast<std::size_t>(leg)])];
    for (const auto& [k2, c2] : delta.terms()) {
      const int p = static_cast<int>(k2 / static_cast<Key>(a.dim()));
      const int q = static_cast<int>(k2 % static_cast<Key>(a.dim()));
      std::size_t w = 0;
      for (int i = 0; i < a.arity(); ++i) {
        if (i == leg) {
          idx[w++] = p;
          idx[w++] = q;
        } else {
          idx[w++] = src[static_cast<std::size_t>(i)];
        }
      }
      out.add(idx, c * c2);
    }
  }
  return out;
}

TensorElement counit_extend(const QuasiHopfData& H, int leg, const TensorElement& a) {
  require(a.arity() >= 2, ErrorCode::invalid_argument, "counit_extend needs arity >= 2");
  require(leg >= 0 && leg < a.arity(), ErrorCode::invalid_argument, "counit leg out of range");
  TensorElement out(a.arity() - 1, a.dim(), a.order());
  std::vector<int> idx;
  for (const auto& [k, c] : a.terms()) {
    const auto src = a.decode(k);
    const CycScalar& e = H.counit[static_cast<std::size_t>(src[static_cast<std::size_t>(leg)])];
    if (e.is_zero()) continue;
    idx.clear();
    for (int i = 0; i < a.arity(); ++i)
      if (i != leg) idx.push_back(src[static_cast<std::size_t>(i)]);
    out.add(idx, c * e);
  }
  return out;
}

CycScalar counit_value(const QuasiHopfData& H, const TensorElement& a) {
  require(a.arity() == 1, ErrorCode::invalid_argument, "counit_value needs arity 1");
  CycScalar s = CycScalar::zero(a.order());
  for (const auto& [k, c] : a.terms()) s += c * H.counit[static_cast<std::size_t>(k)];
  return s;
}

TensorElement permute_legs(const TensorElement& a, std::span<const int> positions) {
  require(static_cast<int>(positions.size()) == a.arity(), ErrorCode::invalid_argument, "bad leg permutation");
  TensorElement out(a.arity(), a.dim(), a.order());
  std::vector<int> idx(positions.size());
  for (const auto& [k, c] : a.terms()) {
    const auto src = a.decode(k);
    for (std::size_t m = 0; m < src.size(); ++m) idx[static_cast<std::size_t>(positions[m] - 1)] = src[m];
    out.add(idx, c);
  }
  return out;
}

TensorElement permute_legs(const TensorElement& a, std::initializer_list<int> positions) {
  return permute_legs(a, std::span<const int>(positions.begin(), positions.size()));
}

TensorElement place_legs(const TensorElement& a, std::span<const int> positions, int arity, const AlgebraData& alg) {
  require(static_cast<int>(positions.size()) == a.arity() && arity >= a.arity(), ErrorCode::invalid_argument,
          "bad leg placement");
  std::vector<int> rest;
  for (int i = 0; i < arity; ++i)
    if (std::find(positions.begin(), positions.end(), i) == positions.end()) rest.push_back(i);
  const TensorElement fill = rest.empty() ? TensorElement(1, alg.dim, alg.order) : tensor_unit(alg, static_cast<int>(rest.size()));
  TensorElement out(arity, a.dim(), a.order());
  std::vector<int> idx(static_cast<std::size_t>(arity));
  for (const auto& [k, c] : a.terms()) {
    const auto src = a.decode(k);
    for (std::size_t m = 0; m < src.size(); ++m) idx[static_cast<std::size_t>(positions[m])] = src[m];
    if (rest.empty()) {
      out.add(idx, c);
      continue;
    }
    for (const auto& [kf, cf] : fill.terms()) {
      const auto f = fill.decode(kf);
      for (std::size_t m = 0; m < rest.size(); ++m) idx[static_cast<std::size_t>(rest[m])] = f[m];
      out.add(idx, c * cf);
    }
  }
  return out;
}

TensorElement place_legs(const TensorElement& a, std::initializer_list<int> positions, int arity,
                         const AlgebraData& alg) {
  return place_legs(a, std::span<const int>(positions.begin(), positions.size()), arity, alg);
}

TensorElement outer(const TensorElement& a, const TensorElement& b) {
  require(a.dim() == b.dim() && a.order() == b.order(), ErrorCode::invalid_argument, "outer product mismatch");
  TensorElement out(a.arity() + b.arity(), a.dim(), a.order());
  Key scale = 1;
  for (int i = 0; i < b.arity(); ++i) scale *= static_cast<Key>(b.dim());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add_key(ka * scale + kb, ca * cb);
  return out;
}

TensorElement apply_on_leg(const TensorElement& a, int leg, const std::vector<TensorElement>& images) {
  require(leg >= 0 && leg < a.arity(), ErrorCode::invalid_argument, "leg out of range");
  require(static_cast<int>(images.size()) == a.dim(), ErrorCode::invalid_argument, "linear map has wrong size");
  TensorElement out(a.arity(), a.dim(), a.order());
  for (const auto& [k, c] : a.terms()) {
    auto idx = a.decode(k);
    const auto& img = images[static_cast<std::size_t>(idx[static_cast<std::size_t>(leg)])];
    for (const auto& [ki, ci] : img.terms()) {
      idx[static_cast<std::size_t>(leg)] = static_cast<int>(ki);
      out.add(idx, c * ci);
    }
  }
  return out;
}

TensorElement embed_tensor(const TensorElement& a, unsigned m) {
  TensorElement out(a.arity(), a.dim(), m);
  for (const auto& [k, c] : a.terms()) out.add_key(k, c.embed(m));
  return out;
}

std::size_t sparse_rank(const SparseColumns& cols, std::size_t rows, std::size_t block_limit) {
  const std::size_t n = cols.size();
  UnionFind uf(n + rows);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [r, c] : cols[j]) {
      require(r < rows, ErrorCode::invalid_argument, "sparse_rank: row index out of range");
      uf.unite(j, n + static_cast<std::size_t>(r));
    }
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
  for (std::size_t j = 0; j < n; ++j)
    if (!cols[j].empty()) blocks[uf.find(j)].first.push_back(j);
  for (const auto& col : cols)
    for (const auto& [r, c] : col) blocks[uf.find(n + static_cast<std::size_t>(r))].second.push_back(r);

  std::size_t rank = 0;
  for (auto& [root, rc] : blocks) {
    auto& [bcols, brows] = rc;
    std::sort(brows.begin(), brows.end());
    brows.erase(std::unique(brows.begin(), brows.end()), brows.end());
    if (bcols.size() == 1 && brows.size() == 1) {
      ++rank;
      continue;
    }
    require(bcols.size() <= block_limit && brows.size() <= block_limit, ErrorCode::budget_exceeded,
            "sparse_rank block exceeds limit");
    std::map<std::size_t, std::size_t> row_local;
    for (std::size_t i = 0; i < brows.size(); ++i) row_local[brows[i]] = i;
    const unsigned order = cols[bcols[0]].front().second.order();
    std::vector<std::vector<CycScalar>> m(brows.size(), std::vector<CycScalar>(bcols.size(), CycScalar::zero(order)));
    for (std::size_t cj = 0; cj < bcols.size(); ++cj)
      for (const auto& [r, c] : cols[bcols[cj]]) m[row_local.at(static_cast<std::size_t>(r))][cj] = c;
    std::size_t row = 0;
    for (std::size_t col = 0; col < bcols.size() && row < brows.size(); ++col) {
      std::size_t piv = row;
      while (piv < brows.size() && m[piv][col].is_zero()) ++piv;
      if (piv == brows.size()) continue;
      std::swap(m[piv], m[row]);
      const CycScalar inv = m[row][col].inverse();
      for (std::size_t r = row + 1; r < brows.size(); ++r) {
        if (m[r][col].is_zero()) continue;
        const CycScalar f = m[r][col] * inv;
        for (std::size_t j = col; j < bcols.size(); ++j)
          if (!m[row][j].is_zero()) m[r][j] -= f * m[row][j];
      }
      ++row;
    }
    rank += row;
  }
  return rank;
}

}  // namespace qdouble
