#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nccheck/triple.hpp"

namespace nccheck::torus {

using Block = Eigen::Matrix2cd;
using Mode = std::pair<int, int>;

/// Σ c_{mn} e^{i(mx+ny)} in H = M₂(L²(𝕋²)) with |m|, |n| ≤ band.
/// Inner product ½∫∫Tr(a*b), so modes are orthogonal with block product ½Tr(c*c′).
class TorusVector {
 public:
  explicit TorusVector(int band);

  int band() const { return band_; }
  Index side() const { return 2 * band_ + 1; }
  /// Throws std::out_of_range outside the band.
  Block& at(int m, int n);
  const Block& at(int m, int n) const;
  bool in_band(int m, int n) const { return std::abs(m) <= band_ && std::abs(n) <= band_; }

  /// Same vector viewed in a larger band.
  TorusVector widened(int band) const;
  static Index dimension(int band) { return 4 * (2 * band + 1) * (2 * band + 1); }
  /// Raw entries, mode-major then column-major within the block, in the given band.
  ComplexVector coordinates(int band) const;
  static TorusVector from_coordinates(const ComplexVector& c, int band);
  static TorusVector basis(int band, Index k);

  Complex inner(const TorusVector& w) const;
  double norm() const;

  TorusVector& operator+=(const TorusVector& w);
  TorusVector& operator*=(Complex c);

 private:
  Index index(int m, int n) const { return (m + band_) * side() + (n + band_); }
  int band_;
  std::vector<Block> coeffs_;
};

TorusVector operator+(TorusVector a, const TorusVector& b);
TorusVector operator-(TorusVector a, const TorusVector& b);
TorusVector operator*(Complex c, TorusVector v);

/// Matrix-valued trigonometric polynomial Σ f_{pq} e^{i(px+qy)}.
class TrigPoly {
 public:
  TrigPoly() = default;
  static TrigPoly constant(const Block& b);
  static TrigPoly monomial(int p, int q, const Block& b);
  /// c·e^{i(px+qy)}·σ₀.
  static TrigPoly scalar(int p, int q, Complex c = 1.0);

  const std::map<Mode, Block>& coefficients() const { return coeffs_; }
  int degree() const;
  bool is_scalar(double tol = kDefaultTol) const;

  /// Pointwise a*, entrywise conjugate, transpose.
  TrigPoly adjoint() const;
  TrigPoly conj() const;
  TrigPoly transpose() const;

  TrigPoly& operator+=(const TrigPoly& g);

 private:
  std::map<Mode, Block> coeffs_;
};

TrigPoly operator+(TrigPoly f, const TrigPoly& g);
TrigPoly operator-(TrigPoly f, const TrigPoly& g);
TrigPoly operator*(const TrigPoly& f, const TrigPoly& g);
TrigPoly operator*(Complex c, const TrigPoly& f);
TrigPoly operator*(const Block& b, const TrigPoly& f);
/// L²-norm distance with the ½Tr normalization.
double distance(const TrigPoly& f, const TrigPoly& g);

Block sigma(int k);
TrigPoly u();  // e^{ix}
TrigPoly v();  // e^{iy}
/// τ(f) = σ₁fᵀσ₁, i.e. [[a,b],[c,d]] ↦ [[d,b],[c,a]] pointwise.
TrigPoly tau(const TrigPoly& f);
/// J₁ applied to a multiplier: σ₁f̄σ₁.
TrigPoly j1_image(const TrigPoly& f);

/// Linear or antilinear operator mapping H_N into H_{N+degree} exactly.
class BandOperator {
 public:
  using Action = std::function<TorusVector(const TorusVector&)>;
  BandOperator(std::string name, int degree, bool antilinear, Action action);

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  bool antilinear() const { return antilinear_; }
  TorusVector operator()(const TorusVector& x) const { return action_(x); }

  /// Columns are the images of the standard basis of H_band in H_{band+degree}.
  /// For an antilinear operator this is its kernel K (A x = K·conj(x)).
  ComplexMatrix materialize(int band) const;

 private:
  std::string name_;
  int degree_;
  bool antilinear_;
  Action action_;
};

BandOperator operator*(const BandOperator& a, const BandOperator& b);  // a∘b
BandOperator operator+(const BandOperator& a, const BandOperator& b);
BandOperator operator-(const BandOperator& a, const BandOperator& b);
BandOperator operator*(Complex c, const BandOperator& a);
BandOperator commutator(const BandOperator& a, const BandOperator& b);
BandOperator anticommutator(const BandOperator& a, const BandOperator& b);

BandOperator identity_op();
/// D = iL_{σ₁}∂x + iL_{σ₂}∂y: mode (m,n) block c ↦ −(mσ₁ + nσ₂)c.
BandOperator dirac();
/// R_{σ₁}i∂x + R_{σ₂}i∂y: c ↦ −c(mσ₁ + nσ₂).
BandOperator right_dirac();
/// Φ = i^k on k-forms, read through the matrix picture: Pauli components
/// (a₀, a₁, a₂, a₃) ↦ (a₀, i·a₁, i·a₂, −a₃). `inverse` gives Φ⁻¹.
BandOperator degree_phase(bool inverse = false);
/// −i(d − d*) = −ΦDΦ⁻¹, the Hodge–Dirac convention for the same geometry.
BandOperator hodge_dirac();
BandOperator left_mult(const TrigPoly& f);
BandOperator right_mult(const TrigPoly& f);
/// γa = σ₃aσ₃.
BandOperator grading();
BandOperator j0();
BandOperator j1();
BandOperator j2();
/// τ = J₁J₂.
BandOperator twist();

/// J_U = L_U R_U J₂ and its inverse J₂ L_{U*} R_{U*}. U must be unitary.
struct RealStructureU {
  BandOperator j, j_inverse;
};
RealStructureU j_u(const TrigPoly& u_matrix, double tol = kDefaultTol);
/// τ_U = L_U R_U τ; requires τ(U) = U* (InvariantViolation otherwise).
BandOperator twist_u(const TrigPoly& u_matrix, double tol = kDefaultTol);

/// lhs = rhs on all of H_band (both outputs compared in the larger band).
ConditionReport operator_identity(const BandOperator& lhs, const BandOperator& rhs, int band,
                                  double tol = kDefaultTol);
/// Operator norm of the restriction to H_band.
double band_norm(const BandOperator& a, int band);
/// lhs = ±rhs on H_band, as in detect_sign.
Sign band_sign(const BandOperator& lhs, const BandOperator& rhs, int band, double thr, ConditionReport* report);

enum class Order { Zero, One, Two };
/// [a, b°], [[D,a], b°] or [[D,a], [D,b]°] over pairs from a family of scalar
/// functions, with b° = J b* J⁻¹. The first violating pair is the witness.
ConditionReport check_order(Order order, const BandOperator& j, const BandOperator& j_inverse,
                            const std::vector<std::pair<std::string, TrigPoly>>& family, int band,
                            double tol = kDefaultTol);

/// Signs of a real structure on H_band; twisted ε′ when a twist is given.
SignReport check_signs(const BandOperator& j, const std::optional<BandOperator>& twist, int band,
                       double tol = kDefaultTol);
/// Same, against an explicit Dirac operator.
SignReport check_signs(const BandOperator& j, const std::optional<BandOperator>& twist, const BandOperator& d,
                       int band, double tol = kDefaultTol);

struct CycleTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<TrigPoly> factors;  // scalar functions a₀, …, a_n
};
using Cycle = std::vector<CycleTerm>;

struct CycleReport {
  ConditionReport report;
  double boundary_norm = 0.0;
  std::string represents;  // "1", "grading" or "none"
  double residual = 0.0;
};

/// b(c) = 0 in the tensor algebra of Fourier monomials, and π_D(c) against 1 and the grading.
/// Throws std::invalid_argument for non-scalar factors or chains of mixed length.
CycleReport check_cycle(const Cycle& c, const BandOperator& grading_op, int band, double tol = kDefaultTol);

/// c = −(i/2)·u*v*⊗(u⊗v − v⊗u).
Cycle orientation_cycle();

/// Default unitaries for the J_U family: diag(e^{±iπ/5}), antidiag(e^{±iπ/7}) and diag(u, u*).
std::vector<std::pair<std::string, TrigPoly>> default_u_family();

struct SuiteItem {
  std::string key;
  ConditionReport report;
  bool expected = true;
  bool as_expected() const { return report.holds == expected; }
};

/// Every checkable claim of the torus model on H_band. Requires band ≥ 3.
std::vector<SuiteItem> run_torus_suite(int band, double tol = kDefaultTol,
                                       const std::vector<std::pair<std::string, TrigPoly>>& u_family =
                                           default_u_family());

}  // namespace nccheck::torus
