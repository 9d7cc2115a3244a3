#include "nccheck/product.hpp"

#include <random>
#include <stdexcept>

namespace nccheck {

std::string to_string(JMode m) { return m == JMode::Plain ? "plain" : "koszul"; }

ComplexMatrix koszul_sign(const ComplexMatrix& gamma1, const ComplexMatrix& gamma2) {
  const Index n1 = gamma1.rows(), n2 = gamma2.rows();
  const ComplexMatrix p1 = (identity(n1) - gamma1) / 2.0;
  const ComplexMatrix p2 = (identity(n2) - gamma2) / 2.0;
  return identity(n1 * n2) - 2.0 * kron(p1, p2);
}

FiniteSpectralTriple product_triple(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2, JMode mode) {
  if (!t1.grading()) {
    throw std::invalid_argument("product: the first factor must be even (odd-odd products are not supported)");
  }
  if (mode == JMode::Koszul && !t2.grading()) {
    throw std::invalid_argument("product: the koszul real structure needs both factors even");
  }
  const Index n1 = t1.hilbert_dim(), n2 = t2.hilbert_dim();
  const ComplexMatrix i1 = identity(n1), i2 = identity(n2);
  const ComplexMatrix& g1 = *t1.grading();

  std::vector<ComplexMatrix> gens;
  for (const auto& a : t1.algebra_generators()) gens.push_back(kron(a, i2));
  for (const auto& b : t2.algebra_generators()) gens.push_back(kron(i1, b));

  ComplexMatrix d = kron(t1.dirac(), i2) + kron(g1, t2.dirac());

  std::optional<ComplexMatrix> grading;
  if (t2.grading()) grading = kron(g1, *t2.grading());

  std::optional<RealStructure> real;
  if (t1.real_structure() && t2.real_structure()) {
    ComplexMatrix k = kron(t1.j().kernel(), t2.j().kernel());
    // J(v⊗w) = (−1)^{|v||w|} J₁v ⊗ J₂w: the sign acts before conjugation
    if (mode == JMode::Koszul) k = k * koszul_sign(g1, *t2.grading()).conjugate();
    std::optional<ComplexMatrix> twist;
    const auto& tw1 = t1.real_structure()->twist;
    const auto& tw2 = t2.real_structure()->twist;
    if (tw1 || tw2) twist = kron(tw1 ? *tw1 : i1, tw2 ? *tw2 : i2);
    real = RealStructure{AntilinearOperator(std::move(k)), std::move(twist)};
  }
  return FiniteSpectralTriple(std::move(gens), std::move(d), std::move(grading), std::move(real),
                              std::max(t1.tol(), t2.tol()));
}

GradedOperator::GradedOperator(ComplexMatrix matrix, ComplexMatrix grading, double tol)
    : matrix_(std::move(matrix)), grading_(std::move(grading)) {
  if (matrix_.rows() != grading_.rows() || matrix_.cols() != grading_.cols()) {
    throw DimensionMismatch("graded operator: grading acts on a different space");
  }
  const ComplexMatrix flipped = grading_ * matrix_ * grading_;
  even_ = (matrix_ + flipped) / 2.0;
  odd_ = (matrix_ - flipped) / 2.0;
  const double scale = tol * (1.0 + matrix_.norm());
  // negligible parts are zeroed so spans of homogeneous parts never pick up roundoff
  if (odd_.norm() <= scale) {
    parity_ = Parity::Even;
    odd_.setZero();
  } else if (even_.norm() <= scale) {
    parity_ = Parity::Odd;
    even_.setZero();
  } else {
    parity_ = Parity::Mixed;
  }
}

ComplexMatrix graded_product(const GradedOperator& a, const GradedOperator& b, Side side) {
  if (side == Side::Left) {
    return kron(a.matrix(), b.even_part()) + kron(a.matrix() * a.grading(), b.odd_part());
  }
  return kron(a.even_part(), b.matrix()) + kron(a.odd_part(), b.matrix() * b.grading());
}

void validate_graded_pair(const GradedAlgebraPair& p, double tol) {
  auto check = [&](const OperatorAlgebra& b, const ComplexMatrix& g, const char* which) {
    if (g.rows() != b.hilbert_dim()) throw DimensionMismatch(std::string("graded pair: grading ") + which);
    for (Index k = 0; k < b.dim(); ++k) {
      const ComplexMatrix x = b.subspace().basis(k);
      if (!b.contains(g * x * g, tol)) {
        throw InvariantViolation("graded pair", std::string("algebra ") + which + " is not stable under Ad γ");
      }
    }
  };
  check(p.b1, p.gamma1, "1");
  check(p.b2, p.gamma2, "2");
}

OperatorAlgebra graded_algebra(const GradedAlgebraPair& p, Side side, double tol) {
  validate_graded_pair(p, tol);
  const Index n = p.b1.hilbert_dim() * p.b2.hilbert_dim();
  const auto basis1 = p.b1.basis();
  const auto basis2 = p.b2.basis();
  MatrixSubspace s(n);
  for (const auto& x : basis1) {
    const GradedOperator gx(x, p.gamma1, tol);
    for (const auto& y : basis2) {
      const GradedOperator gy(y, p.gamma2, tol);
      // homogeneous parts separately, so the span is that of homogeneous products
      if (side == Side::Left) {
        s.extend(kron(x, gy.even_part()), tol);
        s.extend(kron(x * p.gamma1, gy.odd_part()), tol);
      } else {
        s.extend(kron(gx.even_part(), y), tol);
        s.extend(kron(gx.odd_part(), y * p.gamma2), tol);
      }
    }
  }
  const bool unital = p.b1.unital() && p.b2.unital();
  const OperatorAlgebra closed = generate_star_algebra(n, s.basis_matrices(), unital, tol);
  if (closed.dim() != s.dim()) {
    throw InvariantViolation("graded algebra closure", "span has dimension " + std::to_string(s.dim()) +
                                                           " but generates " + std::to_string(closed.dim()));
  }
  return OperatorAlgebra(std::move(s), unital);
}

ComplexMatrix alt_dirac(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2) {
  if (!t2.grading()) throw std::invalid_argument("alternative Dirac operator needs the second factor even");
  return kron(t1.dirac(), *t2.grading()) + kron(identity(t1.hilbert_dim()), t2.dirac());
}

GctReport verify_gct(const GradedAlgebraPair& p, double tol) {
  GctReport g;
  g.report.name = "graded commutant theorem";
  g.dim_b1 = p.b1.dim();
  g.dim_b2 = p.b2.dim();
  const OperatorAlgebra lhs = commutant(graded_algebra(p, Side::Left, tol), tol);
  const GradedAlgebraPair primes{commutant(p.b1, tol), commutant(p.b2, tol), p.gamma1, p.gamma2};
  const OperatorAlgebra rhs = graded_algebra(primes, Side::Right, tol);
  g.dim_lhs = lhs.dim();
  g.dim_rhs = rhs.dim();
  g.rhs_in_lhs = subspace_contains(lhs.subspace(), rhs.subspace(), tol);
  g.lhs_in_rhs = subspace_contains(rhs.subspace(), lhs.subspace(), tol);
  g.report.holds = g.rhs_in_lhs && g.lhs_in_rhs;
  g.report.detail = "dim B1 = " + std::to_string(g.dim_b1) + ", dim B2 = " + std::to_string(g.dim_b2) +
                    ", dim (B1⊙B2)' = " + std::to_string(g.dim_lhs) + ", dim B1'⊙'B2' = " +
                    std::to_string(g.dim_rhs);
  return g;
}

GradedAlgebraPair random_graded_pair(std::uint64_t seed, Index dim_max) {
  if (dim_max < 2) throw std::invalid_argument("random graded pair: dim_max must be at least 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::bernoulli_distribution coin(0.5), keep(0.45);

  auto factor = [&](ComplexMatrix& gamma) {
    const Index n = std::uniform_int_distribution<Index>(2, dim_max)(rng);
    const Index plus = std::uniform_int_distribution<Index>(1, n - 1)(rng);
    gamma = ComplexMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) gamma(i, i) = i < plus ? 1.0 : -1.0;
    const int count = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<ComplexMatrix> gens;
    for (int k = 0; k < count; ++k) {
      ComplexMatrix x = ComplexMatrix::Zero(n, n);
      for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i)
          if (keep(rng)) x(i, j) = Complex(normal(rng), normal(rng));
      const ComplexMatrix flipped = gamma * x * gamma;
      gens.push_back(coin(rng) ? ComplexMatrix((x + flipped) / 2.0) : ComplexMatrix((x - flipped) / 2.0));
    }
    return generate_star_algebra(n, gens);
  };
  GradedAlgebraPair p;
  p.b1 = factor(p.gamma1);
  p.b2 = factor(p.gamma2);
  return p;
}

namespace {

MatrixSubspace kron_span(const std::vector<ComplexMatrix>& xs, const std::vector<ComplexMatrix>& ys, double tol) {
  const Index n = xs.empty() || ys.empty() ? 0 : xs.front().rows() * ys.front().rows();
  MatrixSubspace s(n);
  for (const auto& x : xs)
    for (const auto& y : ys) s.extend(kron(x, y), tol);
  return s;
}

std::string dims(Index a, Index b) { return std::to_string(a) + " vs " + std::to_string(b); }

const AntilinearOperator& require_j(const FiniteSpectralTriple& t, const char* what) {
  if (!t.real_structure()) throw std::invalid_argument(std::string(what) + " needs real structures");
  return t.j();
}

}  // namespace

OneFormsDecomposition one_forms_decomposition_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2) {
  OneFormsDecomposition r;
  r.report.name = "one-forms of a product";
  const double tol = std::max(t1.tol(), t2.tol());
  const FiniteSpectralTriple p = product_triple(t1, t2, JMode::Plain);
  const MatrixSubspace omega = one_forms(p);
  const MatrixSubspace omega1 = one_forms(t1), omega2 = one_forms(t2);
  const auto a1 = t1.algebra().basis(), a2 = t2.algebra().basis();

  MatrixSubspace expected = kron_span(omega1.basis_matrices(), a2, tol);
  if (expected.ambient_dim() == 0) expected = MatrixSubspace(p.hilbert_dim());
  for (const auto& a : a1) {
    const ComplexMatrix ga = *t1.grading() * a;
    for (Index k = 0; k < omega2.dim(); ++k) expected.extend(kron(ga, omega2.basis(k)), tol);
  }
  r.one_forms_match = subspace_equal(omega, expected, tol);
  r.dim_one_forms = omega.dim();
  r.report.detail = "dim Ω¹ " + dims(omega.dim(), expected.dim());

  const OperatorAlgebra cl1 = clifford(t1);
  if (cl1.contains(*t1.grading(), tol)) {
    const OperatorAlgebra cl = clifford(p);
    const OperatorAlgebra cl2 = clifford(t2);
    const MatrixSubspace tensor = kron_span(cl1.basis(), cl2.basis(), tol);
    r.cliffordproduct = subspace_equal(cl.subspace(), tensor, tol);
    r.dim_clifford = cl.dim();
    r.report.detail += ", γ₁ ∈ Cl₁, dim Cl " + dims(cl.dim(), tensor.dim());
  } else {
    r.report.detail += ", γ₁ ∉ Cl₁ (tensor clause skipped)";
  }
  r.report.holds = r.one_forms_match && r.cliffordproduct.value_or(true);
  return r;
}

ConditionReport clifford_graded_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2) {
  ConditionReport r;
  r.name = "Cl = Cl1 ⊙ Cl2";
  if (!t2.grading()) throw std::invalid_argument("Cl1 ⊙ Cl2 needs both factors even");
  const double tol = std::max(t1.tol(), t2.tol());
  const FiniteSpectralTriple p = product_triple(t1, t2, JMode::Plain);
  const OperatorAlgebra cl = clifford(p);
  const GradedAlgebraPair pair{clifford(t1), clifford(t2), *t1.grading(), *t2.grading()};
  const OperatorAlgebra rhs = graded_algebra(pair, Side::Left, tol);
  r.holds = subspace_equal(cl.subspace(), rhs.subspace(), tol);
  r.detail = "dim " + dims(cl.dim(), rhs.dim());
  return r;
}

ConditionReport clifford_conjugation_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2) {
  ConditionReport r;
  r.name = "J Cl J^-1 = Cl1° ⊙' Cl2°";
  const double tol = std::max(t1.tol(), t2.tol());
  const FiniteSpectralTriple p = product_triple(t1, t2, JMode::Koszul);
  const OperatorAlgebra lhs = circ_image(require_j(p, "conjugation check"), clifford(p), tol);
  const GradedAlgebraPair pair{circ_image(t1.j(), clifford(t1), tol), circ_image(t2.j(), clifford(t2), tol),
                               *t1.grading(), *t2.grading()};
  const OperatorAlgebra rhs = graded_algebra(pair, Side::Right, tol);
  r.holds = subspace_equal(lhs.subspace(), rhs.subspace(), tol);
  r.detail = "dim " + dims(lhs.dim(), rhs.dim());
  return r;
}

ConditionReport generator_images_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2) {
  ConditionReport r;
  r.name = "koszul J on generators";
  r.holds = true;
  const double tol = std::max(t1.tol(), t2.tol());
  const FiniteSpectralTriple p = product_triple(t1, t2, JMode::Koszul);
  const AntilinearOperator& j = require_j(p, "generator images");
  const ComplexMatrix i1 = identity(t1.hilbert_dim()), i2 = identity(t2.hilbert_dim());
  const ComplexMatrix& g1 = *t1.grading();
  const ComplexMatrix& g2 = *t2.grading();

  auto compare = [&](const ComplexMatrix& lhs, const ComplexMatrix& rhs, const std::string& label) {
    const double v = operator_norm(lhs - rhs);
    r.max_violation = std::max(r.max_violation, v);
    if (v > tol * (1.0 + operator_norm(rhs)) && r.holds) {
      r.holds = false;
      r.witness = Witness{-1, -1, ComplexMatrix(lhs - rhs), v, label};
    }
  };
  for (const auto& a : t1.algebra().basis()) compare(j.conjugate(kron(a.adjoint(), i2)), kron(circ(t1.j(), a), i2), "a1* ⊗ 1");
  const MatrixSubspace w1 = one_forms(t1), w2 = one_forms(t2);
  for (const auto& w : w1.basis_matrices()) compare(j.conjugate(kron(w.adjoint(), i2)), kron(circ(t1.j(), w), g2), "ω1* ⊗ 1");
  for (const auto& a : t2.algebra().basis()) compare(j.conjugate(kron(i1, a.adjoint())), kron(i1, circ(t2.j(), a)), "1 ⊗ a2*");
  for (const auto& w : w2.basis_matrices()) compare(j.conjugate(kron(g1, w.adjoint())), kron(i1, circ(t2.j(), w)), "γ1 ⊗ ω2*");
  r.detail = "max violation " + std::to_string(r.max_violation);
  return r;
}

ProductSigns product_sign_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2) {
  ProductSigns s;
  s.report.name = "product signs";
  s.factor1 = check_signs(t1);
  s.factor2 = check_signs(t2);
  s.product = check_signs(product_triple(t1, t2, JMode::Koszul));
  s.report.holds = true;
  std::string detail;
  const auto e1 = *s.factor1.epsilon_dprime, e2 = *s.factor2.epsilon_dprime;
  if (is_defined(e1) && is_defined(e2)) {
    const int want = sign_value(e1) * sign_value(e2);
    const bool ok = sign_value(*s.product.epsilon_dprime) == want;
    s.report.holds = s.report.holds && ok;
    detail += "ε'' = " + to_string(*s.product.epsilon_dprime) + " (expected " + (want > 0 ? "+1" : "-1") + ")";
    if (e1 == Sign::Plus && e2 == Sign::Plus && is_defined(s.factor1.epsilon) && is_defined(s.factor2.epsilon)) {
      const int we = sign_value(s.factor1.epsilon) * sign_value(s.factor2.epsilon);
      const bool ok_e = sign_value(s.product.epsilon) == we;
      s.report.holds = s.report.holds && ok_e;
      detail += ", ε = " + to_string(s.product.epsilon) + " (expected " + (we > 0 ? "+1" : "-1") + ")";
    } else {
      detail += ", ε = " + to_string(s.product.epsilon) + " (not asserted)";
    }
  } else {
    detail += "factor ε'' undefined, nothing asserted";
  }
  detail += ", ε' = " + to_string(s.product.epsilon_prime) + " (not asserted)";
  s.report.detail = detail;
  return s;
}

SecondOrderProduct second_order_product_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2) {
  SecondOrderProduct s;
  s.report.name = "second order of products";
  s.factors_pass = check_order_two(t1).holds && check_order_two(t2).holds;
  s.koszul = check_order_two(product_triple(t1, t2, JMode::Koszul));
  s.plain = check_order_two(product_triple(t1, t2, JMode::Plain));
  s.report.holds = !s.factors_pass || s.koszul.holds;
  s.report.detail = std::string("factors ") + (s.factors_pass ? "pass" : "do not pass") + ", koszul " +
                    (s.koszul.holds ? "passes" : "fails") + ", plain " + (s.plain.holds ? "passes" : "fails");
  return s;
}

AltDiracIntertwining alt_dirac_intertwining_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2) {
  AltDiracIntertwining a;
  a.report.name = "J D = ε' D~ J";
  const SignReport s1 = check_signs(t1), s2 = check_signs(t2);
  a.applicable = is_defined(s1.epsilon_prime) && s1.epsilon_dprime && is_defined(*s1.epsilon_dprime) &&
                 is_defined(s2.epsilon_prime) &&
                 sign_value(s1.epsilon_prime) * sign_value(*s1.epsilon_dprime) == sign_value(s2.epsilon_prime);
  const FiniteSpectralTriple p = product_triple(t1, t2, JMode::Koszul);
  const ComplexMatrix& k = p.j().kernel();
  const ComplexMatrix dt = alt_dirac(t1, t2);
  const double thr = p.tol() * (1.0 + operator_norm(p.dirac()));
  a.sign = detect_sign(k * p.dirac().conjugate(), dt * k, thr, &a.report);
  a.report.name = "J D = ε' D~ J";
  a.report.holds = !a.applicable || a.sign == s1.epsilon_prime;
  a.report.detail = std::string(a.applicable ? "applicable" : "not applicable") + ", sign " + to_string(a.sign) +
                    ", ε1' = " + to_string(s1.epsilon_prime) + "; " + a.report.detail;
  return a;
}

HodgeProduct hodge_product_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2) {
  HodgeProduct h;
  h.report.name = "J Cl J^-1 = Cl'";
  const FiniteSpectralTriple p = product_triple(t1, t2, JMode::Koszul);
  const OperatorAlgebra cl = clifford(p);
  const OperatorAlgebra lhs = circ_image(require_j(p, "Hodge product"), cl, p.tol());
  const OperatorAlgebra rhs = commutant(cl, p.tol());
  h.dim_conjugated = lhs.dim();
  h.dim_commutant = rhs.dim();
  h.report.holds = subspace_equal(lhs.subspace(), rhs.subspace(), p.tol());
  h.report.detail = "dim J Cl J^-1 = " + std::to_string(lhs.dim()) + ", dim Cl' = " + std::to_string(rhs.dim());
  return h;
}

}  // namespace nccheck
