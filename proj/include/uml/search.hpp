#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uml/schur.hpp"
#include "uml/umclass.hpp"

namespace uml::search {

enum class Quantity { A2, A3, Residue, B0, Bn };

struct Probe {
  Quantity kind;
  int n = 0;  // Laurent index, only for Bn

  /// a2 | a3 | residue | b0 | bn(n)
  std::string name() const;
  /// True for the quantities whose bounds are theorems (a2, residue, b0).
  bool proved() const noexcept;
};

/// Outcome of probing one functional over a pool of Schur functions.
/// Every verdict here is empirical; `certified` is always false.
struct ProbeReport {
  PoleParams params;
  int samples;
  std::string quantity;
  double observed_max;
  double theoretical;
  // Lower end of a two-sided range (a2 disk, residue modulus range).
  std::optional<double> observed_min;
  std::optional<double> theoretical_min;
  bool proved;
  bool violated;
  std::string witness;
  std::uint64_t seed;
  bool certified = false;
};

/// Proved bounds may be exceeded by this much before a report says violated.
inline constexpr double kProvedTol = 1e-9;

/// SplitMix64 mix of (seed, index): the per-sample stream, so any evaluation
/// order reproduces the same pool.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// Random Blaschke product of degree 0..5 for sample `index`.
SchurFunction pool_member(std::uint64_t seed, std::uint64_t index);
std::vector<SchurFunction> random_pool(int samples, std::uint64_t seed);

/// omega = -1, plus the case III Mobius extremal for b_0 when that case applies.
std::vector<SchurFunction> extremal_pool(const PoleParams& params);

/// |value| of the probed functional for one omega.
double evaluate(const PoleParams& params, const Probe& probe, const SchurFunction& omega);

ProbeReport probe_pool(const PoleParams& params, const Probe& probe, std::span<const SchurFunction> pool,
                       std::uint64_t seed);

/// |a2|, |b_{-1}| and |b_0| over `samples` random Blaschke products, plus the
/// named extremals when `with_extremals` is set.
std::vector<ProbeReport> probe_proved_bounds(const PoleParams& params, int samples, std::uint64_t seed,
                                             bool with_extremals = true);

/// max a_3 over NegatedMobius(a) on a uniform grid in (0, 1), `random_samples`
/// random Blaschke products and omega = -1, against the conjectured n = 3 bound.
ProbeReport probe_a3(const PoleParams& params, int grid_size, std::uint64_t seed = 0,
                     int random_samples = 1000);

/// max |b_n| against lambda^n p^{n+1} / (1 - lambda p^2)^{n+2}.
ProbeReport probe_bn(const PoleParams& params, int n, int samples, std::uint64_t seed);

}  // namespace uml::search
