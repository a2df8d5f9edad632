#pragma once

// Sparse tensors over a finite-dimensional algebra given by structure
// constants, and the quasi-Hopf data that lives on them.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdouble/cyclotomic.hpp"

namespace qdouble {

/// Element of A^{(x)k} as a sparse map from basis k-tuples to scalars. Keys
/// are the tuples read as base-dim numbers, so iteration is lexicographic.
/// Zero coefficients are never stored.
class TensorElement {
 public:
  using Key = std::uint64_t;

  TensorElement(int arity, int dim, unsigned order);

  int arity() const noexcept { return arity_; }
  int dim() const noexcept { return dim_; }
  unsigned order() const noexcept { return order_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const std::map<Key, CycScalar>& terms() const noexcept { return terms_; }

  Key encode(std::span<const int> idx) const;
  std::vector<int> decode(Key key) const;

  /// Adds c to the coefficient at idx.
  void add(std::span<const int> idx, const CycScalar& c);
  void add(std::initializer_list<int> idx, const CycScalar& c) { add(std::span<const int>(idx.begin(), idx.size()), c); }
  void add_key(Key key, const CycScalar& c);
  /// Coefficient at idx (zero if absent).
  CycScalar coeff(std::span<const int> idx) const;
  CycScalar coeff(std::initializer_list<int> idx) const { return coeff(std::span<const int>(idx.begin(), idx.size())); }

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement scaled(const CycScalar& c) const;

  friend bool operator==(const TensorElement& a, const TensorElement& b);

  /// First key where a and b differ, for witnesses.
  friend std::optional<Key> first_difference(const TensorElement& a, const TensorElement& b);

  std::string to_string() const;

 private:
  int arity_;
  int dim_;
  unsigned order_;
  std::map<Key, CycScalar> terms_;
};

/// Associative unital algebra by structure constants: e_i e_j = sum_k c^k_ij e_k.
struct AlgebraData {
  int dim = 0;
  unsigned order = 1;
  /// mul[i*dim + j] = sparse coefficient list of e_i e_j
  std::vector<std::vector<std::pair<int, CycScalar>>> mul;
  /// arity-1 tensor
  TensorElement unit{1, 1, 1};

  const std::vector<std::pair<int, CycScalar>>& product(int i, int j) const {
    return mul[static_cast<std::size_t>(i * dim + j)];
  }
};

/// (H, Delta, epsilon, phi, S, alpha, beta, R) on a basis.
struct QuasiHopfData {
  AlgebraData algebra;
  /// coproduct[i] = Delta(e_i), arity 2
  std::vector<TensorElement> coproduct;
  /// counit[i] = epsilon(e_i)
  std::vector<CycScalar> counit;
  /// phi, arity 3
  TensorElement associator{3, 1, 1};
  /// antipode[i] = S(e_i), arity 1
  std::optional<std::vector<TensorElement>> antipode;
  std::optional<TensorElement> alpha;
  std::optional<TensorElement> beta;
  /// R, arity 2
  std::optional<TensorElement> rmatrix;

  std::string label;

  int dim() const noexcept { return algebra.dim; }
  unsigned order() const noexcept { return algebra.order; }
};

/// e_i as an arity-1 tensor.
TensorElement basis_vector(const AlgebraData& alg, int i);

/// unit^{(x)k}
TensorElement tensor_unit(const AlgebraData& alg, int arity);

/// Componentwise product in A^{(x)k}.
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b, const AlgebraData& alg);

/// Two-sided inverse in A^{(x)k} by exact elimination of the left
/// multiplication operator. The operator is split into connected blocks, each
/// solved densely. Throws ErrorCode::not_invertible when singular, and
/// ErrorCode::internal when only a one-sided inverse exists.
TensorElement tensor_inverse(const TensorElement& a, const AlgebraData& alg, std::size_t block_limit = 729);

/// Applies Delta to tensor leg `leg` (0-based); arity grows by one.
TensorElement coproduct_extend(const QuasiHopfData& H, int leg, const TensorElement& a);
/// Applies epsilon to leg `leg`; arity shrinks by one (input arity >= 2).
TensorElement counit_extend(const QuasiHopfData& H, int leg, const TensorElement& a);
/// epsilon on an arity-1 tensor.
CycScalar counit_value(const QuasiHopfData& H, const TensorElement& a);

/// a_{p}: leg m of `a` is moved to position positions[m] (1-based), so
/// permute_legs(phi, {3,1,2}) is phi_{312} = phi2 (x) phi3 (x) phi1.
TensorElement permute_legs(const TensorElement& a, std::span<const int> positions);
TensorElement permute_legs(const TensorElement& a, std::initializer_list<int> positions);

/// Places the legs of `a` at the given 0-based positions of an arity-k tensor,
/// with the unit on the remaining legs (R_13 = place_legs(R, {0, 2}, 3)).
TensorElement place_legs(const TensorElement& a, std::span<const int> positions, int arity, const AlgebraData& alg);
TensorElement place_legs(const TensorElement& a, std::initializer_list<int> positions, int arity,
                         const AlgebraData& alg);

/// a (x) b
TensorElement outer(const TensorElement& a, const TensorElement& b);

/// Applies a linear map (images of basis vectors, arity 1) to one leg.
TensorElement apply_on_leg(const TensorElement& a, int leg, const std::vector<TensorElement>& images);

/// The same tensor with every coefficient embedded into Q(zeta_m).
TensorElement embed_tensor(const TensorElement& a, unsigned m);

/// Sparse matrix as a list of columns of (row, value) entries.
using SparseColumns = std::vector<std::vector<std::pair<std::uint64_t, CycScalar>>>;

/// Exact rank of a sparse matrix with `rows` rows. The matrix is split into
/// connected blocks first; a block larger than block_limit throws
/// ErrorCode::budget_exceeded.
std::size_t sparse_rank(const SparseColumns& cols, std::size_t rows, std::size_t block_limit = 4096);

}  // namespace qdouble
