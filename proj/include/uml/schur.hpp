#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "uml/series.hpp"

namespace uml {

// Analytic self-maps of the unit disk with sup-norm at most one.

struct Constant {
  cplx value;
};

/// omega(z) = -(a + z) / (1 + a z), a real in (-1, 1).
struct NegatedMobius {
  double a;
};

/// omega(z) = e^{i phase} * prod_k (z - z_k) / (1 - conj(z_k) z).
struct BlaschkeProduct {
  double phase;
  std::vector<cplx> zeros;
};

enum class Certification {
  SumBound,     // sum |c_k| <= 1, membership is proved
  SampledOnly,  // only a boundary sample was checked; results are uncertified
};

/// A polynomial omega given by its Taylor coefficients.
struct TaylorSchur {
  std::vector<cplx> coeffs;
  Certification certification;
};

inline constexpr int kBoundarySamplePoints = 720;
inline constexpr double kBoundarySampleRadius = 0.999;
inline constexpr double kBoundarySampleSlack = 1e-9;
inline constexpr double kRandomZeroCap = 0.95;
/// |a| below this switches the NegatedMobius antiderivative to its small-a series.
inline constexpr double kSmallMobiusParam = 1e-4;

class SchurFunction {
 public:
  using Variant = std::variant<Constant, NegatedMobius, BlaschkeProduct, TaylorSchur>;

  static SchurFunction constant(cplx c);
  static SchurFunction negated_mobius(double a);
  static SchurFunction blaschke(double phase, std::vector<cplx> zeros);
  /// Certifies by the coefficient-sum test when possible, otherwise falls back
  /// to a boundary sample. Throws Errc::NotInUnitBall when the sample fails too.
  static SchurFunction taylor(std::vector<cplx> coeffs);

  const Variant& variant() const noexcept { return v_; }
  /// False only for TaylorSchur functions that passed the sampled test alone.
  bool certified() const noexcept;
  /// Round-trippable text form: const:re,im | negmob:a | blaschke:theta;re,im;... | taylor:c0,c1,...
  std::string describe() const;

 private:
  explicit SchurFunction(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Throws Errc::OutsideDisk for |z| >= 1.
cplx eval(const SchurFunction& omega, cplx z);
cplx deriv(const SchurFunction& omega, cplx z);

/// Taylor coefficients of omega at the origin through z^order.
ComplexSeries taylor_series(const SchurFunction& omega, int order);

/// V(z) = integral of omega along [0, z]; V(0) = 0, V' = omega.
cplx antiderivative_at(const SchurFunction& omega, cplx z);

/// min over samples of (1 - |omega|^2) / (1 - |z|^2) - |omega'|.
double schwarz_pick_margin(const SchurFunction& omega, std::span<const cplx> samples);

/// max |omega| on `points` equispaced points of |z| = radius.
double boundary_max_modulus(const SchurFunction& omega, double radius = kBoundarySampleRadius,
                            int points = kBoundarySamplePoints);

/// Deterministic pseudo-random Blaschke product with zeros of modulus <= 0.95.
/// Degree 0 yields a unimodular Constant.
SchurFunction random_blaschke(int degree, std::uint64_t seed);

}  // namespace uml
