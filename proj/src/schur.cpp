#include "uml/schur.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "uml/error.hpp"
#include "uml/numerics.hpp"

namespace uml {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Constants produced by normalizing e^{i theta} may land one ulp above 1.
constexpr double kUnitSlack = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_inside(cplx z) {
  if (!(std::abs(z) < 1.0)) {
    throw Error(Errc::OutsideDisk, "|z| = " + std::to_string(std::abs(z)));
  }
}

cplx horner(std::span<const cplx> c, cplx z) {
  cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Integral over [0, z] of (a + t) / (1 + a t), expanded in powers of a:
// z^2/2 + sum_{k>=1} (-1)^{k-1} a^k (z^k/k - z^{k+2}/(k+2)), kept through a^4.
cplx mobius_integral_small_a(double a, cplx z) {
  cplx acc = z * z / 2.0;
  double ak = 1.0;
  double sign = 1.0;
  for (int k = 1; k <= 4; ++k) {
    ak *= a;
    acc += sign * ak * (std::pow(z, k) / static_cast<double>(k) - std::pow(z, k + 2) / (k + 2.0));
    sign = -sign;
  }
  return acc;
}

cplx mobius_integral(double a, cplx z) {
  if (std::abs(a) < kSmallMobiusParam) return mobius_integral_small_a(a, z);
  // z/a + ((a^2 - 1)/a^2) log(1 + az) without the 1/a^2 cancellation
  const cplx x = a * z;
  return std::log(1.0 + x) + numerics::log1p_remainder(x) / (a * a);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

SchurFunction SchurFunction::constant(cplx c) {
  if (!(std::abs(c) <= 1.0 + kUnitSlack)) {
    throw Error(Errc::NotInUnitBall, "constant of modulus " + fmt(std::abs(c)));
  }
  return SchurFunction(Constant{c});
}

SchurFunction SchurFunction::negated_mobius(double a) {
  if (!(std::abs(a) < 1.0)) throw Error(Errc::NotInUnitBall, "Mobius parameter " + fmt(a));
  return SchurFunction(NegatedMobius{a});
}

SchurFunction SchurFunction::blaschke(double phase, std::vector<cplx> zeros) {
  if (!std::isfinite(phase)) throw Error(Errc::InvalidArgument, "non-finite phase");
  for (const auto& zk : zeros) {
    if (!(std::abs(zk) < 1.0)) throw Error(Errc::NotInUnitBall, "Blaschke zero outside the disk");
  }
  double theta = std::fmod(phase, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  return SchurFunction(BlaschkeProduct{theta, std::move(zeros)});
}

SchurFunction SchurFunction::taylor(std::vector<cplx> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  double sum = 0.0;
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(Errc::InvalidArgument, "non-finite Taylor coefficient");
    }
    sum += std::abs(c);
  }
  if (sum <= 1.0) return SchurFunction(TaylorSchur{std::move(coeffs), Certification::SumBound});
  SchurFunction candidate(TaylorSchur{std::move(coeffs), Certification::SampledOnly});
  const double peak = boundary_max_modulus(candidate);
  if (peak > 1.0 + kBoundarySampleSlack) {
    throw Error(Errc::NotInUnitBall, "sampled boundary modulus " + fmt(peak));
  }
  return candidate;
}

bool SchurFunction::certified() const noexcept {
  const auto* t = std::get_if<TaylorSchur>(&v_);
  return t == nullptr || t->certification == Certification::SumBound;
}

std::string SchurFunction::describe() const {
  return std::visit(
      overloaded{
          [](const Constant& c) { return "const:" + fmt(c.value.real()) + "," + fmt(c.value.imag()); },
          [](const NegatedMobius& m) { return "negmob:" + fmt(m.a); },
          [](const BlaschkeProduct& b) {
            std::string s = "blaschke:" + fmt(b.phase);
            for (const auto& zk : b.zeros) s += ";" + fmt(zk.real()) + "," + fmt(zk.imag());
            return s;
          },
          [](const TaylorSchur& t) {
            // Real coefficients only round-trip through this form; complex ones
            // are written as re+imi pairs.
            std::string s = "taylor:";
            for (std::size_t k = 0; k < t.coeffs.size(); ++k) {
              if (k) s += ",";
              s += fmt(t.coeffs[k].real());
              if (t.coeffs[k].imag() != 0.0) {
                s += (t.coeffs[k].imag() < 0 ? "" : "+") + fmt(t.coeffs[k].imag()) + "i";
              }
            }
            return s;
          },
      },
      v_);
}

cplx eval(const SchurFunction& omega, cplx z) {
  require_inside(z);
  return std::visit(overloaded{
                        [](const Constant& c) { return c.value; },
                        [z](const NegatedMobius& m) { return -(m.a + z) / (1.0 + m.a * z); },
                        [z](const BlaschkeProduct& b) {
                          cplx acc = std::polar(1.0, b.phase);
                          for (const auto& zk : b.zeros) acc *= (z - zk) / (1.0 - std::conj(zk) * z);
                          return acc;
                        },
                        [z](const TaylorSchur& t) { return horner(t.coeffs, z); },
                    },
                    omega.variant());
}

cplx deriv(const SchurFunction& omega, cplx z) {
  require_inside(z);
  return std::visit(
      overloaded{
          [](const Constant&) { return cplx(0.0); },
          [z](const NegatedMobius& m) {
            const cplx d = 1.0 + m.a * z;
            return -(1.0 - m.a * m.a) / (d * d);
          },
          [z](const BlaschkeProduct& b) {
            // Factor derivative: (1 - |z_k|^2) / (1 - conj(z_k) z)^2.
            const bool near_zero = std::any_of(b.zeros.begin(), b.zeros.end(),
                                               [z](cplx zk) { return std::abs(z - zk) < 1e-8; });
            const cplx unit = std::polar(1.0, b.phase);
            if (!near_zero) {
              cplx value = unit;
              cplx logd = 0.0;
              for (const auto& zk : b.zeros) {
                const cplx den = 1.0 - std::conj(zk) * z;
                value *= (z - zk) / den;
                logd += (1.0 - std::norm(zk)) / ((z - zk) * den);
              }
              return value * logd;
            }
            cplx total = 0.0;
            for (std::size_t k = 0; k < b.zeros.size(); ++k) {
              const cplx den = 1.0 - std::conj(b.zeros[k]) * z;
              cplx term = (1.0 - std::norm(b.zeros[k])) / (den * den);
              for (std::size_t j = 0; j < b.zeros.size(); ++j) {
                if (j != k) term *= (z - b.zeros[j]) / (1.0 - std::conj(b.zeros[j]) * z);
              }
              total += term;
            }
            return unit * total;
          },
          [z](const TaylorSchur& t) {
            cplx acc = 0.0;
            for (std::size_t k = t.coeffs.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * t.coeffs[k];
            return acc;
          },
      },
      omega.variant());
}

ComplexSeries taylor_series(const SchurFunction& omega, int order) {
  if (order < 0) throw Error(Errc::InvalidArgument, "negative series order");
  const auto n = static_cast<std::size_t>(order) + 1;
  return std::visit(
      overloaded{
          [order](const Constant& c) { return ComplexSeries::constant(c.value, order); },
          [n](const NegatedMobius& m) {
            // -a, then -(1 - a^2)(-a)^{k-1}
            std::vector<cplx> v(n);
            v[0] = -m.a;
            double pw = 1.0;
            for (std::size_t k = 1; k < n; ++k) {
              v[k] = -(1.0 - m.a * m.a) * pw;
              pw *= -m.a;
            }
            return ComplexSeries(std::move(v));
          },
          [order, n](const BlaschkeProduct& b) {
            ComplexSeries acc = ComplexSeries::constant(std::polar(1.0, b.phase), order);
            for (const auto& zk : b.zeros) {
              // (z - z_k) * sum_j conj(z_k)^j z^j
              std::vector<cplx> geo(n);
              cplx pw = 1.0;
              for (auto& g : geo) {
                g = pw;
                pw *= std::conj(zk);
              }
              std::vector<cplx> lin(n, 0.0);
              lin[0] = -zk;
              if (n > 1) lin[1] = 1.0;
              acc = acc * ComplexSeries(std::move(lin)) * ComplexSeries(std::move(geo));
            }
            return acc;
          },
          [n](const TaylorSchur& t) {
            std::vector<cplx> v(n, 0.0);
            std::copy_n(t.coeffs.begin(), std::min(n, t.coeffs.size()), v.begin());
            return ComplexSeries(std::move(v));
          },
      },
      omega.variant());
}

cplx antiderivative_at(const SchurFunction& omega, cplx z) {
  require_inside(z);
  return std::visit(overloaded{
                        [z](const Constant& c) { return c.value * z; },
                        [z](const NegatedMobius& m) { return -mobius_integral(m.a, z); },
                        [z, &omega](const BlaschkeProduct&) {
                          return numerics::integrate_segment(
                              [&omega](cplx t) { return eval(omega, t); }, 0.0, z);
                        },
                        [z](const TaylorSchur& t) {
                          cplx acc = 0.0;
                          for (std::size_t k = t.coeffs.size(); k-- > 0;) {
                            acc = acc * z + t.coeffs[k] / static_cast<double>(k + 1);
                          }
                          return acc * z;
                        },
                    },
                    omega.variant());
}

double schwarz_pick_margin(const SchurFunction& omega, std::span<const cplx> samples) {
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& z : samples) {
    const double bound = (1.0 - std::norm(eval(omega, z))) / (1.0 - std::norm(z));
    margin = std::min(margin, bound - std::abs(deriv(omega, z)));
  }
  return margin;
}

double boundary_max_modulus(const SchurFunction& omega, double radius, int points) {
  double peak = 0.0;
  for (int j = 0; j < points; ++j) {
    const cplx z = std::polar(radius, kTwoPi * j / points);
    peak = std::max(peak, std::abs(eval(omega, z)));
  }
  return peak;
}

SchurFunction random_blaschke(int degree, std::uint64_t seed) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "negative Blaschke degree");
  std::mt19937_64 gen(seed);
  const double phase = kTwoPi * uniform01(gen);
  if (degree == 0) {
    const cplx c = std::polar(1.0, phase);
    return SchurFunction::constant(c / std::abs(c));
  }
  std::vector<cplx> zeros;
  zeros.reserve(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; ++k) {
    const double r = kRandomZeroCap * std::sqrt(uniform01(gen));
    const double angle = kTwoPi * uniform01(gen);
    zeros.push_back(std::polar(r, angle));
  }
  return SchurFunction::blaschke(phase, std::move(zeros));
}

}  // namespace uml
