#pragma once

// Cocycle crossed G-modules: G-graded spaces with a right action twisted by
// the 3-cocycle, their tensor product, associator and braiding, and the
// dictionary with left D^phi(G)-modules.
//
// Conventions (on homogeneous basis vectors):
//   |v <| x| = x^-1 |v| x
//   (v <| x) <| y = chi(x,y)(|v|) v <| (xy)
//   |v (x) w| = |v||w|,  (v (x) w) <| x = r(x,|v|,|w|) v<|x (x) w<|x
//   Phi((v (x) w) (x) z) = phi(|v|,|w|,|z|) v (x) (w (x) z)
//   Psi(v (x) w) = w (x) v <| |w|
// Basis of V (x) W: index v * dim(W) + w. Both bracketings of a triple share
// the same index, so the associator is diagonal.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qdouble/dpr.hpp"
#include "qdouble/report.hpp"

namespace qdouble {

using SparseVec = std::vector<std::pair<int, CycScalar>>;

/// Upper bound on stored entries of any map or action table. Exceeding it
/// throws ErrorCode::budget_exceeded instead of densifying.
inline constexpr std::size_t kMaxMapEntries = 2'000'000;

/// Column-sparse matrix. Compositions never densify.
class SparseMap {
 public:
  SparseMap(std::size_t rows, std::size_t cols, unsigned order);
  static SparseMap identity(std::size_t n, unsigned order);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_.size(); }
  unsigned order() const noexcept { return order_; }
  std::size_t nnz() const noexcept;
  bool is_monomial() const noexcept;

  /// Column j as (row, value) pairs sorted by row.
  const std::vector<std::pair<std::uint64_t, CycScalar>>& column(std::size_t j) const { return cols_[j]; }
  void set_column(std::size_t j, std::vector<std::pair<std::uint64_t, CycScalar>> entries);
  CycScalar entry(std::size_t row, std::size_t col) const;

  /// this o other
  SparseMap after(const SparseMap& other) const;

  friend bool operator==(const SparseMap& a, const SparseMap& b);
  /// First (col, row) where a and b differ.
  friend std::optional<std::pair<std::size_t, std::size_t>> first_difference(const SparseMap& a, const SparseMap& b);

  std::size_t rank() const;

 private:
  std::size_t rows_;
  unsigned order_;
  std::vector<std::vector<std::pair<std::uint64_t, CycScalar>>> cols_;
};

/// a (x) b on the product bases (column index i * b.cols() + j).
SparseMap kron(const SparseMap& a, const SparseMap& b);

struct CrossedGModule {
  GroupPtr group;
  std::shared_ptr<const Cochain3> phi;
  int dim = 0;
  /// grading[v] = |v|
  std::vector<int> grading;
  /// action[v * |G| + x] = v <| x
  std::vector<SparseVec> action;
  std::string label;

  unsigned order() const noexcept { return phi->order(); }
  const SparseVec& act(int v, int x) const { return action[static_cast<std::size_t>(v * group->size() + x)]; }
};

/// dim 1, degree e, trivial action.
CrossedGModule trivial_object(const Cochain3& phi);
/// D^phi(G) itself: basis y (x) d_t, |y (x) d_t| = y^-1 t y,
/// (y (x) d_t) <| x = chi(y,x)(t) yx (x) d_t.
CrossedGModule regular_object(const Cochain3& phi);
/// The left ideal D (e (x) d_s) of the regular object: basis x (x) d_s for x in G.
CrossedGModule ideal_object(const Cochain3& phi, int s);

ClauseList object_clauses(std::shared_ptr<const CrossedGModule> V);
Report verify_object(const CrossedGModule& V);

CrossedGModule tensor_objects(const CrossedGModule& V, const CrossedGModule& W);

/// Phi_{V,W,Z}: (V (x) W) (x) Z -> V (x) (W (x) Z).
SparseMap associator(const CrossedGModule& V, const CrossedGModule& W, const CrossedGModule& Z);
SparseMap associator_inverse(const CrossedGModule& V, const CrossedGModule& W, const CrossedGModule& Z);

enum class BraidingVariant {
  standard,          // w (x) v <| |w|
  inverted_degree,   // w (x) v <| |w|^-1  (mutation)
  flip_left_degree,  // w <| |v| (x) v
};

const char* braiding_variant_name(BraidingVariant b);
BraidingVariant parse_braiding_variant(const std::string& s);

/// Psi_{V,W}: V (x) W -> W (x) V.
SparseMap braiding(const CrossedGModule& V, const CrossedGModule& W, BraidingVariant variant = BraidingVariant::standard);

/// Grading preservation, action intertwining and invertibility (exact rank) of f: V -> W.
ClauseList morphism_clauses(std::shared_ptr<const SparseMap> f, std::shared_ptr<const CrossedGModule> V,
                            std::shared_ptr<const CrossedGModule> W, bool require_invertible);
Report verify_morphism(const SparseMap& f, const CrossedGModule& V, const CrossedGModule& W,
                       bool require_invertible = false);

/// Both hexagons, the braid relation on (V (x) W) (x) Z, and the morphism
/// property of every braiding and associator involved.
ClauseList hexagon_clauses(std::shared_ptr<const CrossedGModule> V, std::shared_ptr<const CrossedGModule> W,
                           std::shared_ptr<const CrossedGModule> Z, BraidingVariant variant = BraidingVariant::standard);
Report verify_hexagon(const CrossedGModule& V, const CrossedGModule& W, const CrossedGModule& Z,
                      BraidingVariant variant = BraidingVariant::standard);

/// Pentagon for the associator on four objects.
ClauseList pentagon_clauses(std::vector<std::shared_ptr<const CrossedGModule>> objs);

/// (g (x) f) o Psi_{V,Z} = Psi_{V',Z'} o (f (x) g) for morphisms f: V -> V',
/// g: Z -> Z'.
ClauseList naturality_clauses(std::shared_ptr<const CrossedGModule> V, std::shared_ptr<const CrossedGModule> Vp,
                              std::shared_ptr<const SparseMap> f, std::shared_ptr<const CrossedGModule> Z,
                              std::shared_ptr<const CrossedGModule> Zp, std::shared_ptr<const SparseMap> g,
                              BraidingVariant variant = BraidingVariant::standard);

/// Right multiplication by the basis element b of D on the regular object;
/// a module endomorphism.
SparseMap regular_right_multiplication(const DPRInstance& D, int b);

/// A left module over a quasi-Hopf algebra: act[b] is the matrix of e_b.
struct LeftModule {
  int dim = 0;
  std::vector<SparseMap> act;
};

LeftModule regular_module(const QuasiHopfData& H);
/// Representation law on basis pairs and unit action.
ClauseList module_clauses(QuasiHopfPtr H, std::shared_ptr<const LeftModule> M);

/// (x (x) d_s) |> v = [s = |v|] v <| x
LeftModule crossed_to_module(const DPRInstance& D, const CrossedGModule& V);
/// Grading from the projections (e (x) d_s) |>, action from (x (x) 1) |>.
/// Throws invalid_argument if M fails the representation law (with the
/// witness pair in the message) or a basis vector is not homogeneous.
CrossedGModule module_to_crossed(const DPRInstance& D, const LeftModule& M);

/// Psi_{V,W} equals flip o (R |> -) on V (x) W, and Phi_{V,W,Z} equals the
/// action of phi on (V (x) W) (x) Z, with the module structures from
/// crossed_to_module.
ClauseList transport_clauses(std::shared_ptr<const DPRInstance> D, std::shared_ptr<const CrossedGModule> V,
                             std::shared_ptr<const CrossedGModule> W, std::shared_ptr<const CrossedGModule> Z);

}  // namespace qdouble
