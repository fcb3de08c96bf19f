#pragma once

#include <optional>
#include <span>
#include <vector>

namespace uml::counterexample {

/// g(p) = 4 ln(1 + p) - 3p. Positive on (0, p0), negative on (p0, 1].
double threshold_gap(double p);

/// Bisection root of threshold_gap on (1/3, 1).
double find_p0(double tol = 1e-12);

/// find_p0 at full precision, computed once.
double p0();

/// v(p, a) = integral_0^p (a + t) / (1 + a t) dt, for 0 <= a <= 1.
double mobius_integral(double p, double a);
/// The same integral by 64-node Gauss-Legendre; used to cross-check the closed form.
double mobius_integral_quadrature(double p, double a);
/// dv/da = integral_0^p (1 - t^2) / (1 + a t)^2 dt
double mobius_integral_da(double p, double a);

/// w(p, a) = 2 v(p, a) / p - a
double w_profile(double p, double a);
double w_profile_da(double p, double a);
/// -(4/p) integral_0^p t (1 - t^2) / (1 + a t)^3 dt, negative everywhere.
double w_profile_da2(double p, double a);

/// The unique critical point a_p of w(p, .) in (0, 1). Needs p > p0
/// (Errc::NoSignChange otherwise).
double find_w_peak(double p, double tol = 1e-12);

/// The unique a_0 in (0, a_p) with w(p, a_0) = 1.
double find_w_crossing(double p, double tol = 1e-12);

/// L(p, a) = (w(p, a) - 1) / (p^2 - v(p, a)^2): a_3 beats the conjectured
/// bound exactly when lambda < L(p, a).
double lambda_threshold(double p, double a);

/// The limit of L(p, a) as a -> 1:
/// ((4/p) ln(1+p) - 3) / (-4p ln(1+p) + 2p^2). Errc::InvalidRegime for p <= p0.
double lambda_limit(double p);

/// a_3 of f_a: (1/p^2)(1 + lambda (2p v - p^2 a) + lambda^2 p^2 v^2).
double a3_closed(double p, double lambda, double a);

/// (1 + lambda p^2 + lambda^2 p^4) / p^2
double conjectured_bound_n3(double p, double lambda);

struct CertifiedCounterexample {
  double p;
  double lambda;
  double a;           // Mobius parameter of the witness
  double a0;          // lower end of the admissible a-interval
  double a3_series;   // from the truncated Taylor expansion
  double a3_closed;
  double bound;
  double margin;      // a3_closed - bound
  double window_hi;   // lambda_limit(p)
  double threshold;   // L(p, a), strictly above lambda
  double membership_margin;
};

/// Produces a verified violation of the conjectured |a_3| bound.
/// Errc::InvalidRegime unless p in (p0 + 1e-6, 1 - 1e-6); Errc::OutsideWindow
/// if lambda >= lambda_limit(p) - 1e-12; Errc::VerificationFailed if any
/// cross-check of the witness disagrees.
CertifiedCounterexample certify(double p, double lambda);

enum class CellStatus { Certified, OutsideWindow, InvalidRegime, Failed };

const char* to_string(CellStatus s) noexcept;

struct ScanCell {
  double p;
  double lambda;
  CellStatus status;
  std::optional<CertifiedCounterexample> record;
};

/// Row-major over p_grid then lambda_grid.
std::vector<ScanCell> scan(std::span<const double> p_grid, std::span<const double> lambda_grid);

/// Largest disagreement between the closed form and quadrature for v over a
/// fixed parameter grid; throws Errc::VerificationFailed above 1e-12.
double self_check();

}  // namespace uml::counterexample
