#include "uml/umclass.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "uml/error.hpp"

namespace uml {

namespace {

constexpr double kPoleGuard = 1e-12;

ComplexSeries build_denominator(const PoleParams& params, const SchurFunction& omega,
                                cplx integral_to_pole, int order) {
  const double p = params.p();
  const double lambda = params.lambda();
  // 1 - z/p + lambda z (V(p) - V(z)), V from the termwise antiderivative.
  const ComplexSeries v_series = antidifferentiate(taylor_series(omega, order));
  const ComplexSeries tail = (ComplexSeries::constant(integral_to_pole, order + 1) - v_series).shifted(1);
  std::vector<cplx> base(static_cast<std::size_t>(order) + 1, 0.0);
  base[0] = 1.0;
  base[1] = -1.0 / p;
  return ComplexSeries(std::move(base)) + tail.scaled(lambda).truncated(order);
}

}  // namespace

PoleParams::PoleParams(double p, double lambda) : p_(p), lambda_(lambda) {
  if (!(p > 0.0 && p < 1.0)) throw Error(Errc::InvalidArgument, "p must lie in (0, 1)");
  if (!(lambda > 0.0 && lambda < 1.0)) throw Error(Errc::InvalidArgument, "lambda must lie in (0, 1)");
}

UmFunction::UmFunction(PoleParams params, SchurFunction omega, int order)
    : params_(params),
      omega_(std::move(omega)),
      integral_to_pole_(antiderivative_at(omega_, params_.p())),
      denom_(build_denominator(params_, omega_, integral_to_pole_, order)),
      f_series_(reciprocal(denom_).shifted(1).truncated(order)) {}

const char* to_string(B0Case c) noexcept {
  switch (c) {
    case B0Case::I: return "I";
    case B0Case::II: return "II";
    case B0Case::III: return "III";
  }
  return "?";
}

UmFunction build(const PoleParams& params, const SchurFunction& omega, int order) {
  if (order < 4) throw Error(Errc::InvalidArgument, "series order must be at least 4");
  return UmFunction(params, omega, order);
}

cplx denominator_at(const UmFunction& u, cplx z) {
  const double p = u.params().p();
  return 1.0 - z / p + u.params().lambda() * z * (u.integral_to_pole() - antiderivative_at(u.omega(), z));
}

cplx eval_f(const UmFunction& u, cplx z) {
  if (std::abs(z - u.params().p()) < kPoleGuard) throw Error(Errc::AtPole, "evaluation at the pole");
  if (z == 0.0) return 0.0;
  return z / denominator_at(u, z);
}

ComplexSeries uf_series(const UmFunction& u) {
  const ComplexSeries& d = u.denom();
  const ComplexSeries z_dprime = differentiate(d).shifted(1);
  return d - z_dprime - ComplexSeries::constant(1.0, d.order());
}

double membership_margin(const UmFunction& u, double grid_radius, int grid_points) {
  if (!(grid_radius > 0.0 && grid_radius < 1.0)) {
    throw Error(Errc::InvalidArgument, "grid radius must lie in (0, 1)");
  }
  if (grid_points < 1) throw Error(Errc::InvalidArgument, "grid needs at least one point");
  const double lambda = u.params().lambda();
  double peak = 0.0;
  for (int j = 0; j < grid_points; ++j) {
    const cplx z = std::polar(grid_radius, 2.0 * std::numbers::pi * j / grid_points);
    peak = std::max(peak, std::abs(lambda * z * z * eval(u.omega(), z)));
  }
  return lambda - peak;
}

Disk a2_disk(const PoleParams& params) {
  return {1.0 / params.p(), params.lambda() * params.p()};
}

cplx a2_closed(const PoleParams& params, const SchurFunction& omega) {
  return 1.0 / params.p() - params.lambda() * antiderivative_at(omega, params.p());
}

double a2_upper_bound(const PoleParams& params) {
  const double p = params.p();
  return (1.0 + params.lambda() * p * p) / p;
}

cplx residue(const PoleParams& params, const SchurFunction& omega) {
  const double p = params.p();
  return -p * p / (1.0 + params.lambda() * p * p * eval(omega, p));
}

ModulusRange residue_modulus_range(const PoleParams& params) {
  const double p2 = params.p() * params.p();
  const double c = params.lambda() * p2;
  return {p2 / (1.0 + c), p2 / (1.0 - c)};
}

cplx laurent_b0(const PoleParams& params, const SchurFunction& omega) {
  const double p = params.p();
  const double lambda = params.lambda();
  const cplx den = 1.0 + lambda * p * p * eval(omega, p);
  return (-2.0 * p + lambda * std::pow(p, 4) * deriv(omega, p)) / (2.0 * den * den);
}

double default_contour_radius(const PoleParams& params) {
  return std::min(params.p(), 1.0 - params.p()) / 2.0;
}

cplx laurent_numeric(const UmFunction& u, int k, double rho, int nodes) {
  const double p = u.params().p();
  if (k < -1) throw Error(Errc::InvalidArgument, "Laurent index below -1");
  if (!(rho > 0.0 && rho < std::min(p, 1.0 - p))) {
    throw Error(Errc::InvalidArgument, "contour radius must lie in (0, min(p, 1-p))");
  }
  if (nodes < 64) throw Error(Errc::InvalidArgument, "contour needs at least 64 nodes");
  // With z = p + rho e^{it}: b_k = (1/M) sum_j f(z_j) (rho e^{it_j})^{-k}.
  cplx acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const cplx offset = std::polar(rho, 2.0 * std::numbers::pi * j / nodes);
    acc += eval_f(u, p + offset) * std::pow(offset, -k);
  }
  return acc / static_cast<double>(nodes);
}

cplx laurent_numeric(const UmFunction& u, int k) {
  return laurent_numeric(u, k, default_contour_radius(u.params()), kDefaultContourNodes);
}

double b0_p_threshold() { return (std::sqrt(17.0) - 1.0) / 4.0; }

double phi(double p) {
  if (!(p > 0.0)) throw Error(Errc::InvalidArgument, "phi needs p > 0");
  return (2.0 * p * p + p - 2.0) / (p * p * p);
}

B0Bound b0_bound(const PoleParams& params) {
  const double p = params.p();
  const double lambda = params.lambda();
  if (p <= b0_p_threshold()) return {p / std::pow(1.0 - lambda * p * p, 2), B0Case::I};
  if (lambda >= phi(p)) return {p / std::pow(1.0 - lambda * p * p, 2), B0Case::II};
  const double a = lambda * p * p * p - 2.0 * p * p + 2.0;
  return {(p / (2.0 * (1.0 - p * p))) * a / (1.0 - lambda * p * a), B0Case::III};
}

double d_profile(const PoleParams& params, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(Errc::InvalidArgument, "D(x) needs x in [0, 1]");
  const double p = params.p();
  const double lambda = params.lambda();
  const double a = 2.0 - 2.0 * p * p + lambda * p * p * p;
  const double b = lambda * p * p * p;
  const double c = lambda * p * p;
  return (a - b * x * x) / std::pow(1.0 - c * x, 2);
}

double d_argmax(const PoleParams& params) {
  const double p = params.p();
  const double a = 2.0 - 2.0 * p * p + params.lambda() * p * p * p;
  return std::min(1.0, a / p);
}

double b0_case_iii_extremal_a(const PoleParams& params) {
  const double p = params.p();
  const double x = (2.0 - 2.0 * p * p + params.lambda() * p * p * p) / p;
  const double a = (x - p) / (1.0 - x * p);
  if (!(a > -p && a < 1.0) || !std::isfinite(a)) {
    throw Error(Errc::InfeasibleExtremal,
                "Mobius parameter " + std::to_string(a) + " falls outside (-p, 1)");
  }
  return a;
}

double bhowmik_parveen_bound(const PoleParams& params, int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "n must be nonnegative");
  const double p = params.p();
  const double lambda = params.lambda();
  return std::pow(lambda, n) * std::pow(p, n + 1) / std::pow(1.0 - lambda * p * p, n + 2);
}

}  // namespace uml
