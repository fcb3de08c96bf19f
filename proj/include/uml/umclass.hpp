#pragma once

#include "uml/schur.hpp"
#include "uml/series.hpp"

namespace uml {

/// Pole location p and class parameter lambda, both in the open interval (0, 1).
class PoleParams {
 public:
  /// Throws Errc::InvalidArgument outside (0, 1) x (0, 1).
  PoleParams(double p, double lambda);

  double p() const noexcept { return p_; }
  double lambda() const noexcept { return lambda_; }

 private:
  double p_;
  double lambda_;
};

/// A member of the class built from omega through
///   f(z) = z / (1 - z/p + lambda z (V(p) - V(z))),   V' = omega, V(0) = 0.
/// Two evaluation paths are kept: the truncated Taylor series at the origin
/// and the closed-form denominator.
class UmFunction {
 public:
  UmFunction(PoleParams params, SchurFunction omega, int order);

  const PoleParams& params() const noexcept { return params_; }
  const SchurFunction& omega() const noexcept { return omega_; }
  /// Series of z / f(z).
  const ComplexSeries& denom() const noexcept { return denom_; }
  /// Taylor coefficients a_0 = 0, a_1 = 1, a_2, ..., a_N.
  const ComplexSeries& f_series() const noexcept { return f_series_; }
  int order() const noexcept { return f_series_.order(); }
  /// V(p), the integral of omega over [0, p].
  cplx integral_to_pole() const noexcept { return integral_to_pole_; }

 private:
  PoleParams params_;
  SchurFunction omega_;
  cplx integral_to_pole_;
  ComplexSeries denom_;
  ComplexSeries f_series_;
};

struct Disk {
  cplx center;
  double radius;
};

struct ModulusRange {
  double lo;
  double hi;

  bool contains(double x, double tol = 0.0) const noexcept { return x >= lo - tol && x <= hi + tol; }
};

enum class B0Case { I, II, III };

struct B0Bound {
  double bound;
  B0Case which;
};

const char* to_string(B0Case c) noexcept;

/// Requires order >= 4.
UmFunction build(const PoleParams& params, const SchurFunction& omega, int order = kDefaultOrder);

/// z / f(z) from the closed form; vanishes at z = p.
cplx denominator_at(const UmFunction& u, cplx z);

/// Direct evaluation of f anywhere in the disk except the pole (Errc::AtPole within 1e-12).
cplx eval_f(const UmFunction& u, cplx z);

/// U_f = (z/f) - z (z/f)' - 1 as a series, at the build order.
ComplexSeries uf_series(const UmFunction& u);

/// lambda - max |lambda z^2 omega(z)| over a circle of `grid_points` points at `grid_radius`.
double membership_margin(const UmFunction& u, double grid_radius, int grid_points);

// ---- coefficient a_2 -------------------------------------------------------

/// The set {1/p - lambda p u : |u| <= 1}.
Disk a2_disk(const PoleParams& params);

/// a_2 = 1/p - lambda * integral_0^p omega.
cplx a2_closed(const PoleParams& params, const SchurFunction& omega);

/// (1 + lambda p^2) / p
double a2_upper_bound(const PoleParams& params);

// ---- Laurent data at the pole ----------------------------------------------

/// b_{-1} = -p^2 / (1 + lambda p^2 omega(p))
cplx residue(const PoleParams& params, const SchurFunction& omega);

/// [p^2 / (1 + lambda p^2), p^2 / (1 - lambda p^2)]
ModulusRange residue_modulus_range(const PoleParams& params);

/// b_0 = (-2p + lambda p^4 omega'(p)) / (2 (1 + lambda p^2 omega(p))^2)
cplx laurent_b0(const PoleParams& params, const SchurFunction& omega);

/// Default contour radius min(p, 1 - p) / 2.
double default_contour_radius(const PoleParams& params);
inline constexpr int kDefaultContourNodes = 256;

/// Trapezoid rule for (1 / 2 pi i) \oint_{|z-p|=rho} f(z) / (z-p)^{k+1} dz.
/// Requires k >= -1, 0 < rho < min(p, 1-p), nodes >= 64.
cplx laurent_numeric(const UmFunction& u, int k, double rho, int nodes = kDefaultContourNodes);
cplx laurent_numeric(const UmFunction& u, int k);

// ---- the b_0 estimate ------------------------------------------------------

/// (sqrt(17) - 1) / 4, the root of 2p^2 + p - 2 in (0, 1).
double b0_p_threshold();

/// (2p^2 + p - 2) / p^3
double phi(double p);

/// Case I for p <= threshold, II for lambda >= phi(p), III otherwise.
B0Bound b0_bound(const PoleParams& params);

/// D(x) = (A - B x^2) / (1 - C x)^2 with A = 2 - 2p^2 + lambda p^3, B = lambda p^3, C = lambda p^2.
double d_profile(const PoleParams& params, double x);

/// min(1, A / p)
double d_argmax(const PoleParams& params);

/// The a in (-p, 1) with (a + p) / (1 + a p) = A / p; NegatedMobius(a) attains
/// the case III bound. Throws Errc::InfeasibleExtremal when a leaves (-p, 1).
double b0_case_iii_extremal_a(const PoleParams& params);

/// lambda^n p^{n+1} / (1 - lambda p^2)^{n+2}; a conjectured bound, not a theorem.
double bhowmik_parveen_bound(const PoleParams& params, int n);

}  // namespace uml
