#include "uml/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uml/error.hpp"
#include "uml/numerics.hpp"
#include "uml/umclass.hpp"

namespace uml::counterexample {

namespace {

constexpr double kSmallA = 1e-4;
constexpr double kPoleMargin = 1e-6;
constexpr double kWindowGuard = 1e-12;
constexpr double kEndpointCap = 1.0 - 1e-9;
constexpr double kGoldenTol = 1e-10;
constexpr double kSeriesAgreement = 1e-9;
constexpr int kWitnessOrder = 8;

void require_p(double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error(Errc::InvalidArgument, "p must lie in (0, 1)");
}

void require_a(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw Error(Errc::InvalidArgument, "a must lie in [0, 1]");
}

}  // namespace

double threshold_gap(double p) { return 4.0 * std::log1p(p) - 3.0 * p; }

double find_p0(double tol) {
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  return numerics::bisect(threshold_gap, 1.0 / 3.0, 1.0, tol);
}

double p0() {
  static const double root = find_p0(1e-15);
  return root;
}

double mobius_integral(double p, double a) {
  require_p(p);
  require_a(a);
  if (a < kSmallA) {
    // p^2/2 + a (p - p^3/3) - a^2 (p^2/2 - p^4/4) + a^3 (p^3/3 - p^5/5)
    const double p2 = p * p;
    return p2 / 2.0 + a * (p - p2 * p / 3.0) - a * a * (p2 / 2.0 - p2 * p2 / 4.0) +
           a * a * a * (p2 * p / 3.0 - p2 * p2 * p / 5.0);
  }
  // p/a + ((a^2 - 1)/a^2) ln(1 + ap), regrouped so nothing cancels
  return std::log1p(a * p) + numerics::log1p_remainder(a * p) / (a * a);
}

double mobius_integral_quadrature(double p, double a) {
  require_p(p);
  require_a(a);
  return numerics::integrate([a](double t) { return (a + t) / (1.0 + a * t); }, 0.0, p);
}

double mobius_integral_da(double p, double a) {
  require_p(p);
  require_a(a);
  return numerics::integrate(
      [a](double t) {
        const double d = 1.0 + a * t;
        return (1.0 - t * t) / (d * d);
      },
      0.0, p);
}

double w_profile(double p, double a) { return 2.0 * mobius_integral(p, a) / p - a; }

double w_profile_da(double p, double a) { return 2.0 * mobius_integral_da(p, a) / p - 1.0; }

double w_profile_da2(double p, double a) {
  require_p(p);
  require_a(a);
  return -(4.0 / p) * numerics::integrate(
                          [a](double t) {
                            const double d = 1.0 + a * t;
                            return t * (1.0 - t * t) / (d * d * d);
                          },
                          0.0, p);
}

double find_w_peak(double p, double tol) {
  require_p(p);
  return numerics::bisect([p](double a) { return w_profile_da(p, a); }, 0.0, 1.0, tol);
}

double find_w_crossing(double p, double tol) {
  const double peak = find_w_peak(p, tol);
  return numerics::bisect([p](double a) { return w_profile(p, a) - 1.0; }, 0.0, peak, tol);
}

double lambda_threshold(double p, double a) {
  const double v = mobius_integral(p, a);
  const double den = p * p - v * v;
  if (std::abs(den) < 1e-14) {
    throw Error(Errc::DegenerateDenominator, "p^2 - v^2 vanishes (a too close to 1)");
  }
  return (w_profile(p, a) - 1.0) / den;
}

double lambda_limit(double p) {
  require_p(p);
  if (p <= p0()) throw Error(Errc::InvalidRegime, "p <= p0, the lambda window is empty");
  const double l = std::log1p(p);
  return ((4.0 / p) * l - 3.0) / (-4.0 * p * l + 2.0 * p * p);
}

double a3_closed(double p, double lambda, double a) {
  const double v = mobius_integral(p, a);
  return (1.0 + lambda * (2.0 * p * v - p * p * a) + lambda * lambda * p * p * v * v) / (p * p);
}

double conjectured_bound_n3(double p, double lambda) {
  require_p(p);
  const double c = lambda * p * p;
  return (1.0 + c + c * c) / (p * p);
}

CertifiedCounterexample certify(double p, double lambda) {
  require_p(p);
  if (!(lambda > 0.0 && lambda < 1.0)) throw Error(Errc::InvalidArgument, "lambda must lie in (0, 1)");
  if (p <= p0() + kPoleMargin || p >= 1.0 - kPoleMargin) {
    throw Error(Errc::InvalidRegime, "p must lie in (p0, 1), p0 = " + std::to_string(p0()));
  }
  const double window_hi = lambda_limit(p);
  if (lambda >= window_hi - kWindowGuard) {
    throw Error(Errc::OutsideWindow,
                "lambda must stay below lambda_limit(p) = " + std::to_string(window_hi));
  }

  const double a0 = find_w_crossing(p);
  // a_3 - bound = lambda ((w - 1) - lambda (p^2 - v^2)); take the a maximizing it.
  const auto excess = [p, lambda](double a) {
    const double v = mobius_integral(p, a);
    return (w_profile(p, a) - 1.0) - lambda * (p * p - v * v);
  };
  const double a = numerics::golden_section_max(excess, a0, kEndpointCap, kGoldenTol);

  CertifiedCounterexample rec{};
  rec.p = p;
  rec.lambda = lambda;
  rec.a = a;
  rec.a0 = a0;
  rec.window_hi = window_hi;
  rec.threshold = lambda_threshold(p, a);
  rec.a3_closed = a3_closed(p, lambda, a);
  rec.bound = conjectured_bound_n3(p, lambda);
  rec.margin = rec.a3_closed - rec.bound;

  const UmFunction witness = build(PoleParams(p, lambda), SchurFunction::negated_mobius(a), kWitnessOrder);
  const cplx a3 = witness.f_series()[3];
  rec.a3_series = a3.real();
  rec.membership_margin = membership_margin(witness, kBoundarySampleRadius, kBoundarySamplePoints);

  const auto fail = [](const std::string& why) { throw Error(Errc::VerificationFailed, why); };
  if (!(a > a0 && a < 1.0)) fail("witness parameter left (a0, 1)");
  if (!(rec.threshold > lambda)) fail("L(p, a) does not exceed lambda");
  if (!(rec.margin > 0.0)) fail("closed-form a3 does not exceed the bound");
  if (std::abs(a3.imag()) > kSeriesAgreement || std::abs(rec.a3_series - rec.a3_closed) > kSeriesAgreement) {
    fail("series and closed-form a3 disagree");
  }
  if (!(rec.a3_series > rec.bound)) fail("series a3 does not exceed the bound");
  // a_3 > bound  <=>  lambda < L(p, a), checked in both directions.
  if ((rec.a3_closed > rec.bound) != (lambda < rec.threshold)) fail("a3 / L equivalence broken");
  if (!(rec.membership_margin > 0.0)) fail("witness fails the membership test");
  return rec;
}

const char* to_string(CellStatus s) noexcept {
  switch (s) {
    case CellStatus::Certified: return "certified";
    case CellStatus::OutsideWindow: return "outside-window";
    case CellStatus::InvalidRegime: return "invalid-regime";
    case CellStatus::Failed: return "failed";
  }
  return "?";
}

std::vector<ScanCell> scan(std::span<const double> p_grid, std::span<const double> lambda_grid) {
  std::vector<ScanCell> cells;
  cells.reserve(p_grid.size() * lambda_grid.size());
  for (const double p : p_grid) {
    for (const double lambda : lambda_grid) {
      ScanCell cell{p, lambda, CellStatus::Failed, std::nullopt};
      try {
        cell.record = certify(p, lambda);
        cell.status = CellStatus::Certified;
      } catch (const Error& e) {
        switch (e.code()) {
          case Errc::OutsideWindow: cell.status = CellStatus::OutsideWindow; break;
          case Errc::InvalidRegime: cell.status = CellStatus::InvalidRegime; break;
          default: cell.status = CellStatus::Failed; break;
        }
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

double self_check() {
  double worst = 0.0;
  for (const double p : {0.1, 0.4, 0.7336, 0.8, 0.95, 0.999}) {
    for (const double a : {0.0, 5e-5, 1e-4, 2e-4, 0.1, 0.5, 0.9, 1.0}) {
      worst = std::max(worst, std::abs(mobius_integral(p, a) - mobius_integral_quadrature(p, a)));
    }
  }
  if (worst > 1e-12) {
    throw Error(Errc::VerificationFailed, "closed-form and quadrature v disagree by " + std::to_string(worst));
  }
  return worst;
}

}  // namespace uml::counterexample
