#include "uml/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uml/error.hpp"

namespace uml {

namespace {

bool finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

int common_order(const ComplexSeries& s, const ComplexSeries& t) {
  return std::min(s.order(), t.order());
}

}  // namespace

ComplexSeries::ComplexSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(Errc::InvalidArgument, "series needs at least one coefficient");
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!finite(coeffs_[k])) {
      throw Error(Errc::InvalidArgument, "non-finite series coefficient at index " + std::to_string(k));
    }
  }
}

ComplexSeries ComplexSeries::zero(int order) { return constant(0.0, order); }

ComplexSeries ComplexSeries::constant(cplx c, int order) {
  if (order < 0) throw Error(Errc::InvalidArgument, "negative series order");
  std::vector<cplx> v(static_cast<std::size_t>(order) + 1, 0.0);
  v[0] = c;
  return ComplexSeries(std::move(v));
}

ComplexSeries ComplexSeries::monomial(cplx c, int power, int order) {
  if (order < 0 || power < 0) throw Error(Errc::InvalidArgument, "negative series order or power");
  std::vector<cplx> v(static_cast<std::size_t>(order) + 1, 0.0);
  if (power <= order) v[static_cast<std::size_t>(power)] = c;
  return ComplexSeries(std::move(v));
}

ComplexSeries ComplexSeries::truncated(int order) const {
  if (order < 0) throw Error(Errc::InvalidArgument, "negative series order");
  if (order > this->order()) {
    throw Error(Errc::InvalidArgument, "cannot extend a truncated series");
  }
  return ComplexSeries({coeffs_.begin(), coeffs_.begin() + order + 1});
}

ComplexSeries ComplexSeries::scaled(cplx factor) const {
  std::vector<cplx> v(coeffs_);
  for (auto& c : v) c *= factor;
  return ComplexSeries(std::move(v));
}

ComplexSeries ComplexSeries::shifted(int k) const {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative shift");
  std::vector<cplx> v(static_cast<std::size_t>(k), 0.0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return ComplexSeries(std::move(v));
}

ComplexSeries add(const ComplexSeries& s, const ComplexSeries& t) {
  const int n = common_order(s, t);
  std::vector<cplx> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[k] = s[k] + t[k];
  return ComplexSeries(std::move(v));
}

ComplexSeries sub(const ComplexSeries& s, const ComplexSeries& t) {
  const int n = common_order(s, t);
  std::vector<cplx> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[k] = s[k] - t[k];
  return ComplexSeries(std::move(v));
}

ComplexSeries mul(const ComplexSeries& s, const ComplexSeries& t) {
  const int n = common_order(s, t);
  std::vector<cplx> v(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) v[i + j] += s[i] * t[j];
  }
  return ComplexSeries(std::move(v));
}

ComplexSeries reciprocal(const ComplexSeries& s) {
  const cplx c0 = s[0];
  if (std::abs(c0) <= kReciprocalFloor) {
    throw Error(Errc::NearZeroConstantTerm, "|c0| = " + std::to_string(std::abs(c0)));
  }
  const int n = s.order();
  const cplx inv = 1.0 / c0;
  std::vector<cplx> r(static_cast<std::size_t>(n) + 1, 0.0);
  r[0] = inv;
  for (int m = 1; m <= n; ++m) {
    cplx acc = 0.0;
    for (int k = 1; k <= m; ++k) acc += s[k] * r[m - k];
    r[m] = -inv * acc;
  }
  return ComplexSeries(std::move(r));
}

ComplexSeries differentiate(const ComplexSeries& s) {
  const int n = s.order();
  if (n == 0) return ComplexSeries::zero(0);
  std::vector<cplx> v(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) v[k - 1] = static_cast<double>(k) * s[k];
  return ComplexSeries(std::move(v));
}

ComplexSeries antidifferentiate(const ComplexSeries& s) {
  const int n = s.order();
  std::vector<cplx> v(static_cast<std::size_t>(n) + 2, 0.0);
  for (int k = 0; k <= n; ++k) v[k + 1] = s[k] / static_cast<double>(k + 1);
  return ComplexSeries(std::move(v));
}

cplx eval(const ComplexSeries& s, cplx z) {
  cplx acc = 0.0;
  for (int k = s.order(); k >= 0; --k) acc = acc * z + s[k];
  return acc;
}

double max_abs_diff(const ComplexSeries& s, const ComplexSeries& t) {
  double worst = 0.0;
  for (int k = 0; k <= common_order(s, t); ++k) worst = std::max(worst, std::abs(s[k] - t[k]));
  return worst;
}

}  // namespace uml
