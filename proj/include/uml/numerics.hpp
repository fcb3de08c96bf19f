#pragma once

// Small numerical toolkit shared by the modules: fixed-order Gauss-Legendre
// quadrature, bracketed bisection and golden-section maximization.

#include <array>
#include <cmath>
#include <complex>
#include <functional>

namespace uml::numerics {

inline constexpr int kGaussNodes = 64;

struct GaussRule {
  std::array<double, kGaussNodes> nodes;    // on [-1, 1], ascending
  std::array<double, kGaussNodes> weights;
};

/// The 64-point Gauss-Legendre rule, computed once by Newton iteration on P_64.
const GaussRule& gauss_legendre_64();

/// Integral of a real function over [lo, hi].
double integrate(const std::function<double(double)>& f, double lo, double hi);

/// Integral of an analytic function along the straight segment [from, to].
std::complex<double> integrate_segment(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    std::complex<double> from, std::complex<double> to);

/// x - log(1 + x), summed as a series for |x| < 1/2 where the direct
/// difference cancels.
template <class T>
T log1p_remainder(T x) {
  using std::abs;
  using std::log;
  if (abs(x) >= 0.5) return x - log(T(1) + x);
  // sum_{k>=2} (-1)^k x^k / k
  T term = x * x;
  T acc = term / 2.0;
  for (int k = 3; k < 80; ++k) {
    term *= -x;
    const T next = term / static_cast<double>(k);
    acc += next;
    if (abs(next) < 1e-18 * abs(acc)) break;
  }
  return acc;
}

inline constexpr double kBisectTol = 1e-12;
inline constexpr int kBisectMaxIter = 200;

/// Root of `f` on [lo, hi]; requires f(lo) and f(hi) to have opposite signs
/// (throws Errc::NoSignChange otherwise). Stops when the bracket is below `tol`.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol = kBisectTol, int max_iter = kBisectMaxIter);

/// Argmax of a unimodal `f` on [lo, hi], to within `tol` in the argument.
double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double tol);

}  // namespace uml::numerics
