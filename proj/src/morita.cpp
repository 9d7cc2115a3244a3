#include "nccheck/morita.hpp"

#include <stdexcept>

namespace nccheck {

namespace {

std::optional<Witness> strict_witness(const MatrixSubspace& big, const MatrixSubspace& small, double tol) {
  Index best = -1;
  double worst = 0.0;
  for (Index k = 0; k < big.dim(); ++k) {
    const double d = small.distance(big.basis(k));
    if (d > worst) {
      worst = d;
      best = k;
    }
  }
  if (best < 0 || worst <= tol) return std::nullopt;
  return Witness{best, -1, big.basis(best), worst, "basis element outside the smaller side"};
}

}  // namespace

MoritaResult morita_test(const OperatorAlgebra& b1, const OperatorAlgebra& b2, const AntilinearOperator& j,
                         double tol) {
  if (b1.hilbert_dim() != b2.hilbert_dim() || j.dim() != b1.hilbert_dim()) {
    throw DimensionMismatch("morita test: algebras and J act on different spaces");
  }
  const OperatorAlgebra b2c = circ_image(j, b2, tol);
  MoritaResult r;
  OperatorAlgebra left, right;
  if (b1.dim() >= b2.dim()) {
    left = commutant(b1, tol);
    right = b2c;
    r.lhs = "B1'";
    r.rhs = "B2°";
  } else {
    left = b1;
    right = commutant(b2c, tol);
    r.lhs = "B1";
    r.rhs = "(B2°)'";
  }
  r.dim_lhs = left.dim();
  r.dim_rhs = right.dim();
  r.holds = subspace_equal(left.subspace(), right.subspace(), tol);
  if (!r.holds) {
    const bool left_bigger = left.dim() >= right.dim();
    r.witness = strict_witness(left_bigger ? left.subspace() : right.subspace(),
                               left_bigger ? right.subspace() : left.subspace(), tol);
    if (!r.witness) {
      r.witness = strict_witness(left_bigger ? right.subspace() : left.subspace(),
                                 left_bigger ? left.subspace() : right.subspace(), tol);
    }
    if (r.witness) {
      r.witness->description = "element of " + (left_bigger ? r.lhs : r.rhs) + " not in " +
                               (left_bigger ? r.rhs : r.lhs);
    }
  }
  return r;
}

bool morita_equivalent_J(const OperatorAlgebra& b1, const OperatorAlgebra& b2, const AntilinearOperator& j,
                         double tol) {
  return morita_test(b1, b2, j, tol).holds;
}

namespace {

void rename(MoritaResult& r, const std::string& b1, const std::string& b2) {
  auto sub = [&](std::string s) {
    for (auto [from, to] : {std::pair{std::string("B1"), b1}, std::pair{std::string("B2"), b2}}) {
      for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
        s.replace(pos, from.size(), to);
      }
    }
    return s;
  };
  r.lhs = sub(r.lhs);
  r.rhs = sub(r.rhs);
  if (r.witness) r.witness->description = sub(r.witness->description);
}

}  // namespace

MoritaClassification classify(const FiniteSpectralTriple& t) {
  std::optional<OperatorAlgebra> clg;
  if (t.grading()) clg = clifford_gamma(t);
  return classify(t, clifford(t), clg, one_forms(t).dim());
}

MoritaClassification classify(const FiniteSpectralTriple& t, const OperatorAlgebra& cl,
                              const std::optional<OperatorAlgebra>& cl_gamma, Index dim_one_forms) {
  const AntilinearOperator& j = t.j();
  const double tol = t.tol();
  MoritaClassification c;
  c.dim_algebra = t.algebra().dim();
  c.dim_one_forms = dim_one_forms;
  c.dim_clifford = cl.dim();

  c.spin_result = morita_test(cl, t.algebra(), j, tol);
  rename(c.spin_result, "Cl", "A");
  c.spin = c.spin_result.holds;

  c.hodge_result = morita_test(cl, cl, j, tol);
  rename(c.hodge_result, "Cl", "Cl");
  c.hodge = c.hodge_result.holds;

  if (t.grading()) {
    if (!cl_gamma) throw std::invalid_argument("classify: even triple needs Cl^γ");
    c.grading_in_clifford = cl.contains(*t.grading(), tol);
    c.dim_clifford_gamma = cl_gamma->dim();
    MoritaResult r = morita_test(*cl_gamma, t.algebra(), j, tol);
    rename(r, "Cl^γ", "A");
    c.even_spin = r.holds;
    c.even_spin_result = r;
  }
  return c;
}

}  // namespace nccheck
