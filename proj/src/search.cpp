#include "uml/search.hpp"

#include <cmath>
#include <limits>

#include "uml/counterexample.hpp"
#include "uml/error.hpp"

namespace uml::search {

namespace {

constexpr int kMaxRandomDegree = 5;
constexpr int kProbeOrder = 4;
// a_3 and closed-form b_0 are exact to rounding; contour values are not.
constexpr double kExactTol = 1e-12;

double tolerance(const Probe& probe) {
  if (probe.proved()) return kProvedTol;
  if (probe.kind == Quantity::Bn && probe.n > 0) return kProvedTol;
  return kExactTol;
}

double theoretical_max(const PoleParams& params, const Probe& probe) {
  switch (probe.kind) {
    case Quantity::A2: return a2_upper_bound(params);
    case Quantity::A3: return counterexample::conjectured_bound_n3(params.p(), params.lambda());
    case Quantity::Residue: return residue_modulus_range(params).hi;
    case Quantity::B0: return b0_bound(params).bound;
    case Quantity::Bn: return bhowmik_parveen_bound(params, probe.n);
  }
  return 0.0;
}

std::optional<double> theoretical_min(const PoleParams& params, const Probe& probe) {
  switch (probe.kind) {
    case Quantity::A2: return 1.0 / params.p() - params.lambda() * params.p();
    case Quantity::Residue: return residue_modulus_range(params).lo;
    default: return std::nullopt;
  }
}

}  // namespace

std::string Probe::name() const {
  switch (kind) {
    case Quantity::A2: return "a2";
    case Quantity::A3: return "a3";
    case Quantity::Residue: return "residue";
    case Quantity::B0: return "b0";
    case Quantity::Bn: return "bn(" + std::to_string(n) + ")";
  }
  return "?";
}

bool Probe::proved() const noexcept {
  return kind == Quantity::A2 || kind == Quantity::Residue || kind == Quantity::B0;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SchurFunction pool_member(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t s = sample_seed(seed, index);
  return random_blaschke(static_cast<int>(s % (kMaxRandomDegree + 1)), s);
}

std::vector<SchurFunction> random_pool(int samples, std::uint64_t seed) {
  std::vector<SchurFunction> pool;
  pool.reserve(static_cast<std::size_t>(std::max(samples, 0)));
  for (int i = 0; i < samples; ++i) pool.push_back(pool_member(seed, static_cast<std::uint64_t>(i)));
  return pool;
}

std::vector<SchurFunction> extremal_pool(const PoleParams& params) {
  std::vector<SchurFunction> pool{SchurFunction::constant(-1.0)};
  if (b0_bound(params).which == B0Case::III) {
    pool.push_back(SchurFunction::negated_mobius(b0_case_iii_extremal_a(params)));
  }
  return pool;
}

double evaluate(const PoleParams& params, const Probe& probe, const SchurFunction& omega) {
  switch (probe.kind) {
    case Quantity::A2: return std::abs(a2_closed(params, omega));
    case Quantity::A3: return std::abs(build(params, omega, kProbeOrder).f_series()[3]);
    case Quantity::Residue: return std::abs(residue(params, omega));
    case Quantity::B0: return std::abs(laurent_b0(params, omega));
    case Quantity::Bn:
      if (probe.n == 0) return std::abs(laurent_b0(params, omega));
      return std::abs(laurent_numeric(build(params, omega, kProbeOrder), probe.n));
  }
  return 0.0;
}

ProbeReport probe_pool(const PoleParams& params, const Probe& probe, std::span<const SchurFunction> pool,
                       std::uint64_t seed) {
  if (pool.empty()) throw Error(Errc::InvalidArgument, "empty probe pool");
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const double value = evaluate(params, probe, pool[i]);
    if (value > hi) {
      hi = value;
      arg = i;
    }
    lo = std::min(lo, value);
  }
  const double tol = tolerance(probe);
  ProbeReport report{params,
                     static_cast<int>(pool.size()),
                     probe.name(),
                     hi,
                     theoretical_max(params, probe),
                     std::nullopt,
                     theoretical_min(params, probe),
                     probe.proved(),
                     false,
                     pool[arg].describe(),
                     seed};
  report.violated = hi > report.theoretical + tol;
  if (report.theoretical_min) {
    report.observed_min = lo;
    report.violated = report.violated || lo < *report.theoretical_min - tol;
  }
  return report;
}

std::vector<ProbeReport> probe_proved_bounds(const PoleParams& params, int samples, std::uint64_t seed,
                                             bool with_extremals) {
  if (samples < 1) throw Error(Errc::InvalidArgument, "samples must be at least 1");
  std::vector<SchurFunction> pool = random_pool(samples, seed);
  if (with_extremals) {
    for (auto& w : extremal_pool(params)) pool.push_back(std::move(w));
  }
  std::vector<ProbeReport> reports;
  for (const auto kind : {Quantity::A2, Quantity::Residue, Quantity::B0}) {
    reports.push_back(probe_pool(params, Probe{kind}, pool, seed));
  }
  return reports;
}

ProbeReport probe_a3(const PoleParams& params, int grid_size, std::uint64_t seed, int random_samples) {
  if (grid_size < 10) throw Error(Errc::InvalidArgument, "grid_size must be at least 10");
  std::vector<SchurFunction> pool;
  pool.reserve(static_cast<std::size_t>(grid_size + std::max(random_samples, 0) + 1));
  for (int i = 0; i < grid_size; ++i) {
    pool.push_back(SchurFunction::negated_mobius((i + 0.5) / grid_size));
  }
  for (auto& w : random_pool(random_samples, seed)) pool.push_back(std::move(w));
  pool.push_back(SchurFunction::constant(-1.0));
  return probe_pool(params, Probe{Quantity::A3}, pool, seed);
}

ProbeReport probe_bn(const PoleParams& params, int n, int samples, std::uint64_t seed) {
  if (n < 0) throw Error(Errc::InvalidArgument, "n must be nonnegative");
  if (samples < 0) throw Error(Errc::InvalidArgument, "samples must be nonnegative");
  std::vector<SchurFunction> pool = random_pool(samples, seed);
  for (auto& w : extremal_pool(params)) pool.push_back(std::move(w));
  return probe_pool(params, Probe{Quantity::Bn, n}, pool, seed);
}

}  // namespace uml::search
