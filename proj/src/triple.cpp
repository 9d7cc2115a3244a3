#include "nccheck/triple.hpp"

#include <algorithm>
#include <cmath>

namespace nccheck {

namespace {

void require(bool ok, const std::string& invariant, const std::string& detail) {
  if (!ok) throw InvariantViolation(invariant, detail);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double threshold(const FiniteSpectralTriple& t, int dirac_power) {
  return t.tol() * std::pow(1.0 + operator_norm(t.dirac()), dirac_power);
}

enum class Order { Zero, One, Two };

// [L_i, R_k] over all pairs, with L_i = a_i or [D,a_i] and R_k = a_k° or [D,a_k]°.
ConditionReport quantify_pairs(const FiniteSpectralTriple& t, const std::vector<ComplexMatrix>& family,
                               const std::string& name, Order order) {
  ConditionReport r;
  r.name = name;
  r.holds = true;
  const int dirac_power = order == Order::Zero ? 0 : order == Order::One ? 1 : 2;
  const double thr = threshold(t, dirac_power);
  const std::size_t n = family.size();
  std::vector<double> scale(n);
  std::vector<ComplexMatrix> lhs(n), rhs(n);
  for (std::size_t k = 0; k < n; ++k) {
    scale[k] = std::max(1.0, operator_norm(family[k]));
    const ComplexMatrix da = commutator(t.dirac(), family[k]);
    lhs[k] = order == Order::Zero ? family[k] : da;
    rhs[k] = circ(t.j(), order == Order::Two ? da : family[k]);
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const ComplexMatrix m = commutator(lhs[i], rhs[k]);
      const double bound = thr * scale[i] * scale[k];
      // Frobenius bounds the operator norm from above
      const double frob = m.norm();
      if (frob <= bound) continue;
      // the operator norm is only needed when it could be a new maximum or the witness
      if (frob <= r.max_violation && !r.holds) continue;
      const double v = operator_norm(m);
      r.max_violation = std::max(r.max_violation, v);
      if (v > bound && r.holds) {
        r.holds = false;
        r.witness = Witness{static_cast<Index>(i), static_cast<Index>(k), m, v,
                            "pair (" + std::to_string(i) + ", " + std::to_string(k) + ")"};
      }
    }
  }
  r.detail = std::to_string(n) + " elements, threshold " + fmt(thr);
  return r;
}

}  // namespace

FiniteSpectralTriple::FiniteSpectralTriple(std::vector<ComplexMatrix> algebra_generators, ComplexMatrix dirac,
                                           std::optional<ComplexMatrix> grading,
                                           std::optional<RealStructure> real_structure, double tol)
    : generators_(std::move(algebra_generators)),
      dirac_(std::move(dirac)),
      grading_(std::move(grading)),
      real_(std::move(real_structure)),
      tol_(tol) {
  const Index n = dirac_.rows();
  require(n > 0 && dirac_.cols() == n, "dirac square", "D must be a nonempty square matrix");
  require(dirac_.allFinite(), "finite entries", "D has non-finite entries");
  const double dn = operator_norm(dirac_);
  require((dirac_ - dirac_.adjoint()).norm() <= tol * (1.0 + dn), "dirac self-adjoint",
          "‖D − D*‖ = " + fmt((dirac_ - dirac_.adjoint()).norm()));

  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const auto& a = generators_[k];
    require(a.rows() == n && a.cols() == n, "generator dimension",
            "generator " + std::to_string(k) + " is not " + std::to_string(n) + "×" + std::to_string(n));
    require(a.allFinite(), "finite entries", "generator " + std::to_string(k) + " has non-finite entries");
  }

  if (grading_) {
    const ComplexMatrix& g = *grading_;
    require(g.rows() == n && g.cols() == n, "grading dimension", "γ must act on H");
    require((g - g.adjoint()).norm() <= tol, "grading self-adjoint", "γ ≠ γ*");
    require((g * g - identity(n)).norm() <= tol, "grading involutive", "γ² ≠ 1");
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      const double c = commutator(g, generators_[k]).norm();
      require(c <= tol * (1.0 + generators_[k].norm()), "grading commutes with A",
              "‖[γ, a_" + std::to_string(k) + "]‖ = " + fmt(c));
    }
    const double ac = anticommutator(g, dirac_).norm();
    require(ac <= tol * (1.0 + dn), "grading anticommutes with D", "‖{γ, D}‖ = " + fmt(ac));
  }

  if (real_) {
    const ComplexMatrix& k = real_->j.kernel();
    require(k.rows() == n, "J dimension", "J must act on H");
    if (real_->twist) {
      const ComplexMatrix& tau = *real_->twist;
      require(tau.rows() == n && tau.cols() == n, "twist dimension", "τ must act on H");
      require((tau - tau.adjoint()).norm() <= tol, "twist self-adjoint", "τ ≠ τ*");
      require((tau * tau - identity(n)).norm() <= tol, "twist involutive", "τ² ≠ 1");
      // τJ = Jτ as maps: τK = K·conj(τ)
      require((tau * k - k * tau.conjugate()).norm() <= tol, "twist commutes with J", "τJ ≠ Jτ");
      for (std::size_t j = 0; j < generators_.size(); ++j) {
        const double c = commutator(tau, generators_[j]).norm();
        require(c <= tol * (1.0 + generators_[j].norm()), "twist commutes with A",
                "‖[τ, a_" + std::to_string(j) + "]‖ = " + fmt(c));
      }
    }
  }

  algebra_ = generate_star_algebra(n, generators_, true, tol);
}

const AntilinearOperator& FiniteSpectralTriple::j() const {
  if (!real_) throw std::logic_error("triple has no real structure");
  return real_->j;
}

MatrixSubspace one_forms(const FiniteSpectralTriple& t) {
  const auto basis = t.algebra().basis();
  std::vector<ComplexMatrix> comms;
  comms.reserve(basis.size());
  for (const auto& b : basis) comms.push_back(commutator(t.dirac(), b));
  MatrixSubspace s(t.hilbert_dim());
  for (const auto& a : basis) {
    for (const auto& c : comms) s.extend(a * c, t.tol());
  }
  return s;
}

namespace {

// Leibniz: Ω¹ lies in the algebra generated by A and [D, g] over the listed generators g,
// and each [D, g] = 1·[D, g] is a one-form, so this set generates Cl_D(A).
OperatorAlgebra clifford_impl(const FiniteSpectralTriple& t, bool with_grading) {
  std::vector<ComplexMatrix> gens = t.algebra_generators();
  for (const auto& g : t.algebra_generators()) gens.push_back(commutator(t.dirac(), g));
  if (with_grading) {
    if (!t.grading()) throw std::logic_error("clifford_gamma needs a grading");
    gens.push_back(*t.grading());
  }
  return generate_star_algebra(t.hilbert_dim(), gens, true, t.tol());
}

}  // namespace

OperatorAlgebra clifford(const FiniteSpectralTriple& t) { return clifford_impl(t, false); }

OperatorAlgebra clifford_gamma(const FiniteSpectralTriple& t) { return clifford_impl(t, true); }

ConditionReport check_order_zero(const FiniteSpectralTriple& t, const std::vector<ComplexMatrix>& family) {
  return quantify_pairs(t, family, "order zero", Order::Zero);
}
ConditionReport check_order_one(const FiniteSpectralTriple& t, const std::vector<ComplexMatrix>& family) {
  return quantify_pairs(t, family, "order one", Order::One);
}
ConditionReport check_order_two(const FiniteSpectralTriple& t, const std::vector<ComplexMatrix>& family) {
  return quantify_pairs(t, family, "order two", Order::Two);
}

ConditionReport check_order_zero(const FiniteSpectralTriple& t) { return check_order_zero(t, t.algebra().basis()); }
ConditionReport check_order_one(const FiniteSpectralTriple& t) { return check_order_one(t, t.algebra().basis()); }
ConditionReport check_order_two(const FiniteSpectralTriple& t) { return check_order_two(t, t.algebra().basis()); }

namespace {

// Commuting with a generating set of a *-algebra is commuting with the algebra.
double max_commutator_with(const OperatorAlgebra& image, const std::vector<ComplexMatrix>& gens) {
  double worst = 0.0;
  for (Index k = 0; k < image.dim(); ++k) {
    const ComplexMatrix x = image.subspace().basis(k);
    for (const auto& g : gens) worst = std::max(worst, commutator(x, g).norm() / std::max(1.0, g.norm()));
  }
  return worst;
}

}  // namespace

bool clifford_circ_commutes_with_algebra(const FiniteSpectralTriple& t, const OperatorAlgebra& cl) {
  const auto image = circ_image(t.j(), cl, t.tol());
  return max_commutator_with(image, t.algebra_generators()) <= threshold(t, 0) * 10;
}

bool clifford_circ_commutes_with_clifford(const FiniteSpectralTriple& t, const OperatorAlgebra& cl) {
  const auto image = circ_image(t.j(), cl, t.tol());
  std::vector<ComplexMatrix> gens = t.algebra_generators();
  for (const auto& g : t.algebra_generators()) gens.push_back(commutator(t.dirac(), g));
  return max_commutator_with(image, gens) <= threshold(t, 1) * 10;
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Plus: return "+1";
    case Sign::Minus: return "-1";
    case Sign::Undefined: return "undefined";
    case Sign::Degenerate: return "undefined-degenerate";
  }
  return "?";
}

int sign_value(Sign s) {
  return s == Sign::Plus ? 1 : s == Sign::Minus ? -1 : 0;
}

bool is_defined(Sign s) { return s == Sign::Plus || s == Sign::Minus; }

Sign detect_sign(const ComplexMatrix& lhs, const ComplexMatrix& rhs, double thr, ConditionReport* report) {
  const double plus = operator_norm(lhs - rhs);
  const double minus = operator_norm(lhs + rhs);
  const bool p = plus <= thr, m = minus <= thr;
  const Sign s = p && m ? Sign::Degenerate : p ? Sign::Plus : m ? Sign::Minus : Sign::Undefined;
  if (report) {
    report->holds = is_defined(s);
    report->max_violation = std::min(plus, minus);
    report->detail = "‖L − R‖ = " + fmt(plus) + ", ‖L + R‖ = " + fmt(minus) + ", threshold " + fmt(thr);
    if (s == Sign::Undefined) {
      const bool closer_plus = plus <= minus;
      report->witness = Witness{-1, -1, closer_plus ? ComplexMatrix(lhs - rhs) : ComplexMatrix(lhs + rhs),
                                std::min(plus, minus), closer_plus ? "L − R" : "L + R"};
    }
  }
  return s;
}

SignReport check_signs(const FiniteSpectralTriple& t) {
  const ComplexMatrix& k = t.j().kernel();
  const ComplexMatrix& d = t.dirac();
  const Index n = t.hilbert_dim();
  SignReport s;

  // Antilinear compositions are compared through their kernels:
  // J∘X has kernel K·conj(X), X∘J has kernel X·K.
  s.epsilon_report.name = "epsilon (J² = ε)";
  s.epsilon = detect_sign(t.j().square(), identity(n), t.tol(), &s.epsilon_report);

  const double thr_d = t.tol() * (1.0 + operator_norm(d));
  const auto& twist = t.real_structure()->twist;
  s.twisted = twist.has_value();
  if (twist) {
    s.epsilon_prime_report.name = "epsilon' (τJD = ε'DJτ)";
    s.epsilon_prime = detect_sign(*twist * k * d.conjugate(), d * k * twist->conjugate(), thr_d,
                                  &s.epsilon_prime_report);
  } else {
    s.epsilon_prime_report.name = "epsilon' (JD = ε'DJ)";
    s.epsilon_prime = detect_sign(k * d.conjugate(), d * k, thr_d, &s.epsilon_prime_report);
  }

  if (t.grading()) {
    const ComplexMatrix& g = *t.grading();
    ConditionReport r;
    r.name = "epsilon'' (Jγ = ε''γJ)";
    s.epsilon_dprime = detect_sign(k * g.conjugate(), g * k, t.tol(), &r);
    s.epsilon_dprime_report = r;
  }
  return s;
}

std::set<int> ko_dimensions(Sign e, Sign ep, std::optional<Sign> edp) {
  std::set<int> out;
  if (!is_defined(e) || !is_defined(ep) || (edp && !is_defined(*edp))) return out;
  const int a = sign_value(e), b = sign_value(ep);
  if (edp) {
    struct Col { int n, e, ep, edp; };
    static const Col even[] = {
        {0, 1, 1, 1},  {0, 1, -1, 1},  {2, -1, 1, -1}, {2, 1, -1, 1},
        {4, -1, 1, 1}, {4, -1, -1, 1}, {6, 1, 1, -1},  {6, -1, -1, -1},
    };
    const int c = sign_value(*edp);
    for (const auto& col : even) {
      if (col.e == a && col.ep == b && col.edp == c) out.insert(col.n);
    }
  } else {
    struct Col { int n, e, ep; };
    static const Col odd[] = {{1, 1, -1}, {3, -1, 1}, {5, -1, -1}, {7, 1, 1}};
    for (const auto& col : odd) {
      if (col.e == a && col.ep == b) out.insert(col.n);
    }
  }
  return out;
}

std::set<int> ko_dimensions(const SignReport& s) {
  return ko_dimensions(s.epsilon, s.epsilon_prime, s.epsilon_dprime);
}

namespace {

ComplexVector tensor_coordinates(const std::vector<ComplexVector>& parts) {
  ComplexVector out = ComplexVector::Ones(1);
  for (const auto& p : parts) {
    ComplexVector next(out.size() * p.size());
    for (Index i = 0; i < out.size(); ++i) next.segment(i * p.size(), p.size()) = out(i) * p;
    out = std::move(next);
  }
  return out;
}

}  // namespace

HochschildReport check_hochschild_cycle(const FiniteSpectralTriple& t, const HochschildChain& c) {
  HochschildReport h;
  h.report.name = "hochschild cycle";
  const Index n_dim = t.hilbert_dim();
  const auto& a = t.algebra().subspace();
  if (c.empty()) throw std::invalid_argument("empty Hochschild chain");
  const std::size_t len = c.front().factors.size();
  if (len < 1) throw std::invalid_argument("chain terms need at least one factor");

  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].factors.size() != len) throw std::invalid_argument("chain terms have different lengths");
    for (std::size_t k = 0; k < len; ++k) {
      const auto& f = c[i].factors[k];
      if (f.rows() != n_dim || f.cols() != n_dim) throw DimensionMismatch("chain entry dimension");
      if (!a.contains(f, t.tol())) {
        throw std::invalid_argument("chain entry (" + std::to_string(i) + ", " + std::to_string(k) +
                                    ") lies outside the algebra");
      }
    }
  }

  const std::size_t n = len - 1;
  if (n > 0) {
    ComplexVector boundary;
    for (const auto& term : c) {
      const auto& f = term.factors;
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<ComplexVector> parts;
        if (i < n) {
          for (std::size_t k = 0; k < len; ++k) {
            if (k == i) parts.push_back(a.coordinates(f[i] * f[i + 1]));
            else if (k != i + 1) parts.push_back(a.coordinates(f[k]));
          }
        } else {
          parts.push_back(a.coordinates(f[n] * f[0]));
          for (std::size_t k = 1; k < n; ++k) parts.push_back(a.coordinates(f[k]));
        }
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        const ComplexVector v = term.coefficient * sign * tensor_coordinates(parts);
        if (boundary.size() == 0) boundary = v;
        else boundary += v;
      }
    }
    h.boundary_norm = boundary.norm();
    h.boundary = std::move(boundary);
  }

  ComplexMatrix image = ComplexMatrix::Zero(n_dim, n_dim);
  for (const auto& term : c) {
    ComplexMatrix p = term.factors[0];
    for (std::size_t k = 1; k < len; ++k) p = p * commutator(t.dirac(), term.factors[k]);
    image += term.coefficient * p;
  }
  h.image = image;

  const double thr = threshold(t, static_cast<int>(n));
  const double to_one = operator_norm(image - identity(n_dim));
  const double to_gamma = t.grading() ? operator_norm(image - *t.grading()) : INFINITY;
  if (to_one <= thr) {
    h.represents = "1";
    h.residual = to_one;
  } else if (to_gamma <= thr) {
    h.represents = "grading";
    h.residual = to_gamma;
  } else {
    h.represents = "none";
    h.residual = std::min(to_one, to_gamma);
  }

  const bool closed = h.boundary_norm <= thr;
  h.report.holds = closed && h.represents != "none";
  h.report.max_violation = std::max(h.boundary_norm, h.represents == "none" ? h.residual : 0.0);
  h.report.detail = "‖b(c)‖ = " + fmt(h.boundary_norm) + ", π_D(c) represents " + h.represents;
  if (!closed) {
    Witness w{-1, -1, ComplexMatrix(), h.boundary_norm, "nonzero Hochschild boundary"};
    // a 1-chain has its boundary in A itself
    if (n == 1) w.matrix = unvectorize(a.frame() * h.boundary, n_dim);
    h.report.witness = w;
  } else if (h.represents == "none") {
    h.report.witness = Witness{-1, -1, image, h.residual, "π_D(c) is neither 1 nor γ"};
  }
  return h;
}

}  // namespace nccheck
