#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nccheck {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Rank decisions (span, null spaces, membership).
inline constexpr double kDefaultTol = 1e-9;
/// Identity checks on exactly representable inputs.
inline constexpr double kIdentityTol = 1e-12;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A type invariant of a domain object failed. `invariant()` names it.
class InvariantViolation : public std::invalid_argument {
 public:
  InvariantViolation(std::string invariant, const std::string& detail)
      : std::invalid_argument(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

template <typename Derived>
ComplexMatrix adjoint(const Eigen::MatrixBase<Derived>& m) {
  return m.adjoint();
}

template <typename A, typename B>
ComplexMatrix commutator(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a * b - b * a;
}

template <typename A, typename B>
ComplexMatrix anticommutator(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a * b + b * a;
}

/// Kronecker product, first factor outermost: (a ⊗ b)(i1*n2 + i2, j1*n2 + j2) = a(i1,j1) b(i2,j2).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

/// Pauli matrix σ_k, k = 0..3 (σ_0 = identity).
ComplexMatrix pauli(int k);

ComplexMatrix identity(Index n);

/// Column-major flattening and its inverse.
ComplexVector vectorize(const ComplexMatrix& m);
ComplexMatrix unvectorize(const ComplexVector& v, Index n);

/// Antilinear map v ↦ K·conj(v) with unitary kernel K.
class AntilinearOperator {
 public:
  explicit AntilinearOperator(ComplexMatrix kernel, double tol = kDefaultTol);

  /// Plain entrywise conjugation on C^n.
  static AntilinearOperator conjugation(Index n);

  Index dim() const { return kernel_.rows(); }
  const ComplexMatrix& kernel() const { return kernel_; }

  ComplexVector apply(const ComplexVector& v) const;
  ComplexVector apply_inverse(const ComplexVector& v) const;

  /// J² as a linear operator: K·conj(K).
  ComplexMatrix square() const;

  /// J·X·J⁻¹ as a linear operator: K·conj(X)·K*.
  ComplexMatrix conjugate(const ComplexMatrix& x) const;

 private:
  ComplexMatrix kernel_;
};

/// ξ° = J ξ* J⁻¹, which equals K·ξᵀ·K*.
ComplexMatrix circ(const AntilinearOperator& j, const ComplexMatrix& x);

/// Linear subspace of n×n matrices with a basis orthonormal under Tr(X*Y).
///
/// The basis is stored as the columns of an n²×k frame of vectorized matrices.
class MatrixSubspace {
 public:
  MatrixSubspace() = default;
  explicit MatrixSubspace(Index ambient_dim);

  /// Builds from a frame whose columns are already orthonormal.
  static MatrixSubspace from_orthonormal_frame(Index ambient_dim, ComplexMatrix frame);

  /// The whole matrix algebra M_n.
  static MatrixSubspace full(Index ambient_dim);

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return count_; }
  bool empty() const { return dim() == 0; }

  /// n²×k block of orthonormal columns.
  auto frame() const { return storage_.leftCols(count_); }
  ComplexMatrix basis(Index k) const;
  std::vector<ComplexMatrix> basis_matrices() const;

  /// Gram-Schmidt step: appends the normalized component of `x` orthogonal to the
  /// current span if its relative residual exceeds `tol`. Returns whether it grew.
  bool extend(const ComplexMatrix& x, double tol = kDefaultTol);

  ComplexMatrix project(const ComplexMatrix& x) const;
  /// Frobenius norm of the component of `x` orthogonal to the subspace.
  double distance(const ComplexMatrix& x) const;
  bool contains(const ComplexMatrix& x, double tol = kDefaultTol) const;

  /// Coordinates of `x` in the orthonormal basis.
  ComplexVector coordinates(const ComplexMatrix& x) const;

 private:
  void check_dim(const ComplexMatrix& x) const;

  Index ambient_dim_ = 0;
  Index count_ = 0;
  ComplexMatrix storage_;
};

/// Orthonormal basis of the span of `matrices`. Inputs whose residual after
/// orthogonalization is ≤ tol (relative to their own norm) are discarded.
/// An empty list gives the zero subspace of ambient dimension `ambient_dim`.
MatrixSubspace span(const std::vector<ComplexMatrix>& matrices, double tol = kDefaultTol,
                    Index ambient_dim = 0);

/// Every basis element of `small` lies within tol of its projection onto `big`.
bool subspace_contains(const MatrixSubspace& big, const MatrixSubspace& small,
                       double tol = kDefaultTol);

bool subspace_equal(const MatrixSubspace& s, const MatrixSubspace& t, double tol = kDefaultTol);

/// Sum of subspaces (span of the union of bases).
MatrixSubspace subspace_sum(const MatrixSubspace& s, const MatrixSubspace& t,
                            double tol = kDefaultTol);

}  // namespace nccheck
