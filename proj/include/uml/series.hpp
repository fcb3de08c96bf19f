#pragma once

#include <complex>
#include <span>
#include <vector>

namespace uml {

using cplx = std::complex<double>;

/// Default truncation degree for Taylor expansions at the origin.
inline constexpr int kDefaultOrder = 32;

/// Below this modulus the constant term is treated as zero by reciprocal().
inline constexpr double kReciprocalFloor = 1e-12;

/// Truncated power series c_0 + c_1 z + ... + c_N z^N with complex
/// coefficients. Immutable; N + 1 finite coefficients are always stored.
class ComplexSeries {
 public:
  explicit ComplexSeries(std::vector<cplx> coeffs);

  static ComplexSeries zero(int order);
  static ComplexSeries constant(cplx c, int order);
  /// c * z^power, truncated at `order` (zero if power > order).
  static ComplexSeries monomial(cplx c, int power, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  cplx operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  ComplexSeries truncated(int order) const;
  ComplexSeries scaled(cplx factor) const;
  /// Multiplication by z^k; the order grows by k.
  ComplexSeries shifted(int k) const;

 private:
  std::vector<cplx> coeffs_;
};

ComplexSeries add(const ComplexSeries& s, const ComplexSeries& t);
ComplexSeries sub(const ComplexSeries& s, const ComplexSeries& t);
ComplexSeries mul(const ComplexSeries& s, const ComplexSeries& t);

/// Multiplicative inverse via r_0 = 1/c_0, r_n = -(1/c_0) sum_{k=1..n} c_k r_{n-k}.
/// Throws Errc::NearZeroConstantTerm when |c_0| <= kReciprocalFloor.
ComplexSeries reciprocal(const ComplexSeries& s);

/// Termwise derivative. Order drops by one; a constant maps to the order-0 zero series.
ComplexSeries differentiate(const ComplexSeries& s);

/// Termwise antiderivative with zero constant term; order grows by one.
ComplexSeries antidifferentiate(const ComplexSeries& s);

/// Horner evaluation of the truncated polynomial.
cplx eval(const ComplexSeries& s, cplx z);

/// max_k |s_k - t_k| over the common range of indices.
double max_abs_diff(const ComplexSeries& s, const ComplexSeries& t);

inline ComplexSeries operator+(const ComplexSeries& s, const ComplexSeries& t) { return add(s, t); }
inline ComplexSeries operator-(const ComplexSeries& s, const ComplexSeries& t) { return sub(s, t); }
inline ComplexSeries operator*(const ComplexSeries& s, const ComplexSeries& t) { return mul(s, t); }
inline ComplexSeries operator*(cplx c, const ComplexSeries& s) { return s.scaled(c); }

}  // namespace uml
