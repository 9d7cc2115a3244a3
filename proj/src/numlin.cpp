#include "nccheck/numlin.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace nccheck {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  // σ_max² is the top eigenvalue of m*m; plenty accurate for thresholds.
  const ComplexMatrix g = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

ComplexMatrix pauli(int k) {
  const Complex i(0.0, 1.0);
  ComplexMatrix s(2, 2);
  switch (k) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::out_of_range("pauli index must be 0..3");
  }
  return s;
}

ComplexMatrix identity(Index n) { return ComplexMatrix::Identity(n, n); }

ComplexVector vectorize(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvectorize(const ComplexVector& v, Index n) {
  if (v.size() != n * n) throw DimensionMismatch("unvectorize: length is not n²");
  return Eigen::Map<const ComplexMatrix>(v.data(), n, n);
}

// --- AntilinearOperator -------------------------------------------------------

AntilinearOperator::AntilinearOperator(ComplexMatrix kernel, double tol)
    : kernel_(std::move(kernel)) {
  if (kernel_.rows() != kernel_.cols() || kernel_.rows() == 0) {
    throw InvariantViolation("J kernel square", "antilinear kernel must be a nonempty square matrix");
  }
  if (!kernel_.allFinite()) {
    throw InvariantViolation("J kernel finite", "antilinear kernel has non-finite entries");
  }
  const double defect = (kernel_ * kernel_.adjoint() - identity(kernel_.rows())).norm();
  if (defect > tol) {
    throw InvariantViolation("J isometric",
                             "kernel is not unitary (‖KK* − I‖ = " + std::to_string(defect) + ")");
  }
}

AntilinearOperator AntilinearOperator::conjugation(Index n) {
  return AntilinearOperator(identity(n));
}

ComplexVector AntilinearOperator::apply(const ComplexVector& v) const {
  return kernel_ * v.conjugate();
}

ComplexVector AntilinearOperator::apply_inverse(const ComplexVector& v) const {
  return (kernel_.adjoint() * v).conjugate();
}

ComplexMatrix AntilinearOperator::square() const { return kernel_ * kernel_.conjugate(); }

ComplexMatrix AntilinearOperator::conjugate(const ComplexMatrix& x) const {
  if (x.rows() != dim() || x.cols() != dim()) throw DimensionMismatch("J·X·J⁻¹: dimension mismatch");
  return kernel_ * x.conjugate() * kernel_.adjoint();
}

ComplexMatrix circ(const AntilinearOperator& j, const ComplexMatrix& x) {
  if (x.rows() != j.dim() || x.cols() != j.dim()) throw DimensionMismatch("circ: dimension mismatch");
  return j.kernel() * x.transpose() * j.kernel().adjoint();
}

// --- MatrixSubspace -----------------------------------------------------------

MatrixSubspace::MatrixSubspace(Index ambient_dim) : ambient_dim_(ambient_dim) {}

MatrixSubspace MatrixSubspace::from_orthonormal_frame(Index ambient_dim, ComplexMatrix frame) {
  if (frame.rows() != ambient_dim * ambient_dim) {
    throw DimensionMismatch("frame rows must equal ambient_dim²");
  }
  MatrixSubspace s(ambient_dim);
  s.count_ = frame.cols();
  s.storage_ = std::move(frame);
  return s;
}

MatrixSubspace MatrixSubspace::full(Index ambient_dim) {
  const Index n2 = ambient_dim * ambient_dim;
  return from_orthonormal_frame(ambient_dim, ComplexMatrix::Identity(n2, n2));
}

ComplexMatrix MatrixSubspace::basis(Index k) const {
  if (k < 0 || k >= count_) throw std::out_of_range("subspace basis index");
  return unvectorize(storage_.col(k), ambient_dim_);
}

std::vector<ComplexMatrix> MatrixSubspace::basis_matrices() const {
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (Index k = 0; k < count_; ++k) out.push_back(basis(k));
  return out;
}

void MatrixSubspace::check_dim(const ComplexMatrix& x) const {
  if (x.rows() != ambient_dim_ || x.cols() != ambient_dim_) {
    throw DimensionMismatch("matrix of size " + std::to_string(x.rows()) + "×" +
                            std::to_string(x.cols()) + " in subspace of M_" +
                            std::to_string(ambient_dim_));
  }
}

bool MatrixSubspace::extend(const ComplexMatrix& x, double tol) {
  check_dim(x);
  const double scale = x.norm();
  if (!(scale > 0.0)) return false;
  const Index n2 = ambient_dim_ * ambient_dim_;
  if (count_ >= n2) return false;

  ComplexVector r = vectorize(x) / scale;
  const auto q = frame();
  for (int pass = 0; pass < 2 && count_ > 0; ++pass) {
    r -= q * (q.adjoint() * r);
  }
  const double residual = r.norm();
  if (residual <= tol) return false;

  if (storage_.cols() == count_) {
    const Index cap = std::min<Index>(n2, std::max<Index>(8, 2 * count_));
    storage_.conservativeResize(n2, cap);
  }
  storage_.col(count_) = r / residual;
  ++count_;
  return true;
}

ComplexVector MatrixSubspace::coordinates(const ComplexMatrix& x) const {
  check_dim(x);
  return frame().adjoint() * vectorize(x);
}

ComplexMatrix MatrixSubspace::project(const ComplexMatrix& x) const {
  check_dim(x);
  if (count_ == 0) return ComplexMatrix::Zero(ambient_dim_, ambient_dim_);
  return unvectorize(frame() * coordinates(x), ambient_dim_);
}

double MatrixSubspace::distance(const ComplexMatrix& x) const { return (x - project(x)).norm(); }

bool MatrixSubspace::contains(const ComplexMatrix& x, double tol) const {
  return distance(x) <= tol * std::max(1.0, x.norm());
}

MatrixSubspace span(const std::vector<ComplexMatrix>& matrices, double tol, Index ambient_dim) {
  if (matrices.empty()) return MatrixSubspace(ambient_dim);
  const Index n = matrices.front().rows();
  if (ambient_dim != 0 && ambient_dim != n) throw DimensionMismatch("span: ambient dimension");
  MatrixSubspace s(n);
  for (const auto& m : matrices) s.extend(m, tol);
  return s;
}

bool subspace_contains(const MatrixSubspace& big, const MatrixSubspace& small, double tol) {
  if (small.dim() == 0) return true;
  if (big.ambient_dim() != small.ambient_dim()) throw DimensionMismatch("subspace ambient mismatch");
  if (big.dim() < small.dim()) return false;
  const auto qb = big.frame();
  const auto qs = small.frame();
  const ComplexMatrix residual = qs - qb * (qb.adjoint() * qs);
  return residual.colwise().norm().maxCoeff() <= tol;
}

bool subspace_equal(const MatrixSubspace& s, const MatrixSubspace& t, double tol) {
  if (s.dim() == 0 && t.dim() == 0) return true;
  if (s.ambient_dim() != t.ambient_dim()) throw DimensionMismatch("subspace ambient mismatch");
  return s.dim() == t.dim() && subspace_contains(s, t, tol) && subspace_contains(t, s, tol);
}

MatrixSubspace subspace_sum(const MatrixSubspace& s, const MatrixSubspace& t, double tol) {
  if (s.ambient_dim() != t.ambient_dim() && s.dim() > 0 && t.dim() > 0) {
    throw DimensionMismatch("subspace ambient mismatch");
  }
  MatrixSubspace out(std::max(s.ambient_dim(), t.ambient_dim()));
  for (Index k = 0; k < s.dim(); ++k) out.extend(s.basis(k), tol);
  for (Index k = 0; k < t.dim(); ++k) out.extend(t.basis(k), tol);
  return out;
}

}  // namespace nccheck
