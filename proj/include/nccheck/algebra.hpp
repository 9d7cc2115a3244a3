#pragma once

#include <cstdint>
#include <vector>

#include "nccheck/numlin.hpp"

namespace nccheck {

/// A *-closed subalgebra of M_n, stored by an orthonormal basis.
class OperatorAlgebra {
 public:
  OperatorAlgebra() = default;
  OperatorAlgebra(MatrixSubspace subspace, bool unital)
      : subspace_(std::move(subspace)), unital_(unital) {}

  const MatrixSubspace& subspace() const { return subspace_; }
  bool unital() const { return unital_; }
  Index dim() const { return subspace_.dim(); }
  Index hilbert_dim() const { return subspace_.ambient_dim(); }

  std::vector<ComplexMatrix> basis() const { return subspace_.basis_matrices(); }
  bool contains(const ComplexMatrix& x, double tol = kDefaultTol) const {
    return subspace_.contains(x, tol);
  }

 private:
  MatrixSubspace subspace_;
  bool unital_ = true;
};

/// Smallest (unital) *-subalgebra of M_n containing `generators`.
OperatorAlgebra generate_star_algebra(Index hilbert_dim, const std::vector<ComplexMatrix>& generators,
                                      bool unital = true, double tol = kDefaultTol);

/// Commutant of a *-algebra. Elements X ↦ Σ_k b_k X b_k* over an orthonormal
/// basis of B land in B′; two random ones generate B′ (with probability one),
/// and every resulting basis element is checked against B before returning.
OperatorAlgebra commutant(const OperatorAlgebra& b, double tol = kDefaultTol);

/// Commutant of an arbitrary subspace. Routes through the *-algebra path when
/// the subspace is *-closed, and through commutant_nullspace otherwise.
OperatorAlgebra commutant(const MatrixSubspace& s, double tol = kDefaultTol);

struct NullspaceCommutant {
  OperatorAlgebra algebra;
  Index constraint_rank = 0;  // rank of the stacked system X ↦ ([X, g_k])_k
};

/// Joint null space of X ↦ Xg − gX over the basis of `s`, by one dense SVD.
/// Cost grows like n⁶; intended for n ≲ 10 and as a test oracle.
NullspaceCommutant commutant_nullspace(const MatrixSubspace& s, double tol = kDefaultTol);

/// S° = {J s* J⁻¹ : s ∈ S}.
OperatorAlgebra circ_image(const AntilinearOperator& j, const OperatorAlgebra& b,
                           double tol = kDefaultTol);

/// Worst closure defects over basis elements: distance of x·y and x* from the span, and of 1 (when unital).
struct ClosureDefect {
  double product = 0.0;
  double adjoint = 0.0;
  double unit = 0.0;
};

ClosureDefect closure_defect(const OperatorAlgebra& a);
bool verify_closure(const OperatorAlgebra& a, double tol = kDefaultTol);

/// Largest ‖[x, y]‖ over basis elements of the two subspaces.
double max_commutator_norm(const MatrixSubspace& s, const MatrixSubspace& t);

/// Whether every basis element of `s` satisfies s* ∈ S.
bool is_star_closed(const MatrixSubspace& s, double tol = kDefaultTol);

}  // namespace nccheck
