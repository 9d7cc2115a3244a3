#include "nccheck/algebra.hpp"

#include <algorithm>
#include <random>

namespace nccheck {

namespace {

ComplexMatrix random_gaussian(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix x(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) x(i, j) = Complex(normal(rng), normal(rng));
  }
  return x;
}

}  // namespace

OperatorAlgebra generate_star_algebra(Index n, const std::vector<ComplexMatrix>& generators,
                                      bool unital, double tol) {
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generator dimension differs from H");
  }
  const Index full = n * n;
  MatrixSubspace s(n);
  std::vector<ComplexMatrix> retained;
  // applied[k]: how many retained generators have already multiplied basis element k
  std::vector<std::size_t> applied;

  auto add = [&](const ComplexMatrix& x) {
    if (s.extend(x, tol)) applied.push_back(0);
  };
  auto close = [&] {
    for (Index k = 0; k < s.dim() && s.dim() < full; ++k) {
      if (applied[k] == retained.size()) continue;
      const ComplexMatrix bk = s.basis(k);
      const Index m = static_cast<Index>(retained.size() - applied[k]);
      // Screen the pending products as one block; most already lie in the span,
      // and one pass over the frame is far cheaper than m separate ones.
      ComplexMatrix block(full, m);
      for (Index c = 0; c < m; ++c) {
        block.col(c) = vectorize(retained[applied[k] + static_cast<std::size_t>(c)] * bk);
      }
      // ‖r·b_k‖ ≤ ‖r‖ for unit b_k; measuring against ‖r‖ keeps roundoff in
      // products that vanish exactly from being promoted to basis elements
      Eigen::VectorXd scales(m);
      for (Index c = 0; c < m; ++c) scales(c) = retained[applied[k] + static_cast<std::size_t>(c)].norm();
      const auto q = s.frame();
      // one pass is enough to screen; survivors go through the two-pass extend
      const ComplexMatrix resid = block - q * (q.adjoint() * block);
      const Eigen::VectorXd left = resid.colwise().norm();
      for (Index c = 0; c < m && s.dim() < full; ++c) {
        if (left(c) > tol * scales(c)) add(unvectorize(block.col(c), n));
      }
      applied[k] = retained.size();
    }
  };

  if (unital) add(identity(n));
  for (const auto& g : generators) {
    for (const ComplexMatrix& c : {g, ComplexMatrix(g.adjoint())}) {
      if (s.dim() == full) break;
      if (c.norm() == 0.0 || (s.dim() > 0 && s.contains(c, tol))) continue;
      retained.push_back(c);
      add(c);
      close();
    }
  }
  return OperatorAlgebra(std::move(s), unital);
}

OperatorAlgebra commutant(const OperatorAlgebra& b, double tol) {
  const Index n = b.hilbert_dim();
  if (b.dim() == 0) return OperatorAlgebra(MatrixSubspace::full(n), true);
  if (b.dim() == n * n) return OperatorAlgebra(span({identity(n)}, tol), true);

  // Unitize so that the twirl is onto B′.
  MatrixSubspace unitized = b.subspace();
  unitized.extend(identity(n), tol);
  const auto basis = unitized.basis_matrices();

  std::mt19937_64 rng(0x6e63636bULL + static_cast<std::uint64_t>(n));
  std::vector<ComplexMatrix> samples;
  for (int r = 0; r < 2; ++r) {
    const ComplexMatrix x = random_gaussian(n, rng);
    ComplexMatrix y = ComplexMatrix::Zero(n, n);
    for (const auto& bk : basis) y.noalias() += bk * x * bk.adjoint();
    samples.push_back(std::move(y));
  }
  // The samples generate the result, so checking them against B suffices.
  double defect = 0.0;
  for (const auto& y : samples) {
    for (const auto& bk : basis) defect = std::max(defect, commutator(y, bk).norm() / y.norm());
  }
  if (defect > 1e3 * tol) {
    throw InvariantViolation("commutant", "computed element fails to commute (defect " +
                                              std::to_string(defect) + ")");
  }
  return generate_star_algebra(n, samples, true, tol);
}

OperatorAlgebra commutant(const MatrixSubspace& s, double tol) {
  if (s.dim() == 0) return OperatorAlgebra(MatrixSubspace::full(s.ambient_dim()), true);
  if (is_star_closed(s, tol)) {
    return commutant(generate_star_algebra(s.ambient_dim(), s.basis_matrices(), true, tol), tol);
  }
  return commutant_nullspace(s, tol).algebra;
}

NullspaceCommutant commutant_nullspace(const MatrixSubspace& s, double tol) {
  const Index n = s.ambient_dim();
  const Index n2 = n * n;
  if (s.dim() == 0) return {OperatorAlgebra(MatrixSubspace::full(n), true), 0};

  const ComplexMatrix id = identity(n);
  ComplexMatrix system(s.dim() * n2, n2);
  for (Index k = 0; k < s.dim(); ++k) {
    const ComplexMatrix g = s.basis(k);
    // vec(Xg) = (gᵀ ⊗ I) vec X and vec(gX) = (I ⊗ g) vec X
    system.middleRows(k * n2, n2) = kron(g.transpose(), id) - kron(id, g);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol * std::max(1.0, sv(0))) ++rank;
  ComplexMatrix frame = svd.matrixV().rightCols(n2 - rank);
  return {OperatorAlgebra(MatrixSubspace::from_orthonormal_frame(n, std::move(frame)), true), rank};
}

OperatorAlgebra circ_image(const AntilinearOperator& j, const OperatorAlgebra& b, double tol) {
  if (j.dim() != b.hilbert_dim()) throw DimensionMismatch("circ_image: J and algebra act on different spaces");
  MatrixSubspace s(b.hilbert_dim());
  for (Index k = 0; k < b.dim(); ++k) s.extend(circ(j, b.subspace().basis(k)), tol);
  return OperatorAlgebra(std::move(s), b.unital());
}

ClosureDefect closure_defect(const OperatorAlgebra& a) {
  ClosureDefect d;
  const auto basis = a.basis();
  for (const auto& x : basis) {
    d.adjoint = std::max(d.adjoint, a.subspace().distance(x.adjoint()));
    for (const auto& y : basis) d.product = std::max(d.product, a.subspace().distance(x * y));
  }
  if (a.unital()) d.unit = a.subspace().distance(identity(a.hilbert_dim()));
  return d;
}

bool verify_closure(const OperatorAlgebra& a, double tol) {
  const ClosureDefect d = closure_defect(a);
  return d.product <= tol && d.adjoint <= tol && d.unit <= tol * std::max<double>(1.0, a.hilbert_dim());
}

// Frobenius norms; basis elements have unit norm so this is scale free.
double max_commutator_norm(const MatrixSubspace& s, const MatrixSubspace& t) {
  double worst = 0.0;
  const auto tb = t.basis_matrices();
  for (Index k = 0; k < s.dim(); ++k) {
    const ComplexMatrix x = s.basis(k);
    for (const auto& y : tb) worst = std::max(worst, commutator(x, y).norm());
  }
  return worst;
}

bool is_star_closed(const MatrixSubspace& s, double tol) {
  for (Index k = 0; k < s.dim(); ++k) {
    if (!s.contains(s.basis(k).adjoint(), tol)) return false;
  }
  return true;
}

}  // namespace nccheck
