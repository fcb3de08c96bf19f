#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "uml/cli.hpp"
#include "uml/counterexample.hpp"
#include "uml/error.hpp"
#include "uml/search.hpp"
#include "uml/umclass.hpp"

using uml::cplx;
using uml::PoleParams;
using uml::SchurFunction;
namespace cx = uml::counterexample;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

SchurFunction random_omega(oracle::Rng& rng, int variant, std::uint64_t seed) {
  switch (variant % 4) {
    case 0: return SchurFunction::constant(rng.in_disk(1.0));
    case 1: return SchurFunction::negated_mobius(rng.uniform(-0.95, 0.95));
    case 2: return uml::random_blaschke(1 + static_cast<int>(seed % 5), seed);
    default: {
      auto c = rng.coeffs(6, 1.0);
      double total = 0.0;
      for (const auto& x : c) total += std::abs(x);
      for (auto& x : c) x /= total;
      return SchurFunction::taylor(std::move(c));
    }
  }
}

Outcome p0_reproduction() {
  const auto t0 = Clock::now();
  const double p0 = cx::find_p0();
  const double elapsed = seconds_since(t0);
  if (std::abs(p0 - 0.7336) > 5e-4) return fail("p0=" + num(p0));
  if (elapsed >= 1e-3) return fail("took " + num(elapsed) + " s");
  return {true, "p0=" + num(p0) + " in " + num(elapsed * 1e6) + " us"};
}

Outcome certification() {
  const auto t0 = Clock::now();
  double worst_margin = INFINITY, worst_diff = 0.0;
  for (const double p : {0.75, 0.8, 0.85, 0.9, 0.95}) {
    for (const double f : {0.25, 0.75}) {
      const double lambda = f * cx::lambda_limit(p);
      try {
        const auto r = cx::certify(p, lambda);
        worst_margin = std::min(worst_margin, r.margin);
        worst_diff = std::max(worst_diff, std::abs(r.a3_series - r.a3_closed));
      } catch (const uml::Error& e) {
        return fail("p=" + num(p) + " lambda=" + num(lambda) + ": " + e.what());
      }
    }
  }
  const double elapsed = seconds_since(t0);
  if (!(worst_margin > 0.0) || worst_diff > 1e-9) return fail("margin " + num(worst_margin) + " diff " + num(worst_diff));
  if (elapsed >= 1.0) return fail("took " + num(elapsed) + " s");
  return {true, "min margin " + num(worst_margin) + ", max |series-closed| " + num(worst_diff) + ", " +
                    num(elapsed * 1e3) + " ms"};
}

Outcome representation_identity() {
  oracle::Rng rng(2024);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const PoleParams params(rng.uniform(0.1, 0.95), rng.uniform(0.01, 0.99));
    const SchurFunction omega = random_omega(rng, i, 1000 + i);
    const auto u = uml::build(params, omega, 32);
    const auto uf = uml::uf_series(u);
    const auto w = uml::taylor_series(omega, 32);
    for (int k = 0; k < 32; ++k) {
      const cplx expected = k >= 2 ? params.lambda() * w[k - 2] : cplx{};
      worst = std::max(worst, std::abs(uf[k] - expected));
    }
  }
  if (worst > 1e-10) return fail("max deviation " + num(worst));
  return {true, "max deviation " + num(worst)};
}

Outcome extremal_series() {
  double worst = 0.0;
  for (const double p : {0.3, 0.5, 0.7}) {
    for (const double lambda : {0.2, 0.8}) {
      const auto u = uml::build(PoleParams(p, lambda), SchurFunction::constant(-1.0), 21);
      for (int n = 1; n <= 20; ++n) {
        const double expected = oracle::extremal_coefficient(p, lambda, n);
        const double err = std::abs(u.f_series()[n] - expected) / std::max(1.0, std::abs(expected));
        worst = std::max(worst, err);
      }
    }
  }
  if (worst > 1e-10) return fail("max relative deviation " + num(worst));
  return {true, "max relative deviation " + num(worst)};
}

Outcome laurent_forms() {
  const std::vector<SchurFunction> family{SchurFunction::constant(-1.0), SchurFunction::constant({0.3, 0.4}),
                                          SchurFunction::negated_mobius(0.5), SchurFunction::negated_mobius(-0.5),
                                          uml::random_blaschke(3, 11)};
  double worst = 0.0;
  for (const double p : {0.3, 0.5, 0.7, 0.9}) {
    for (const double lambda : {0.1, 0.5, 0.9}) {
      const PoleParams params(p, lambda);
      for (const auto& omega : family) {
        const auto u = uml::build(params, omega);
        worst = std::max(worst, std::abs(uml::residue(params, omega) - uml::laurent_numeric(u, -1)));
        worst = std::max(worst, std::abs(uml::laurent_b0(params, omega) - uml::laurent_numeric(u, 0)));
      }
    }
  }
  if (worst > 1e-8) return fail("max deviation " + num(worst));
  return {true, "max deviation " + num(worst)};
}

bool ten_digits(double attained, double bound) { return std::abs(attained - bound) <= 1e-10 * std::abs(bound); }

Outcome soundness_and_sharpness() {
  int points = 0;
  for (const double p : {0.3, 0.6, 0.79, 0.9}) {
    for (const double lambda : {0.1, 0.5, 0.9}) {
      const PoleParams params(p, lambda);
      for (const auto& r : uml::search::probe_proved_bounds(params, 10000, 17, false)) {
        if (r.violated) return fail(r.quantity + " violated at p=" + num(p) + " lambda=" + num(lambda));
      }
      ++points;
      const SchurFunction minus_one = SchurFunction::constant(-1.0);
      if (!ten_digits(std::abs(uml::a2_closed(params, minus_one)), uml::a2_upper_bound(params)))
        return fail("a2 not attained");
      if (!ten_digits(std::abs(uml::residue(params, minus_one)), uml::residue_modulus_range(params).hi))
        return fail("residue not attained");
      const auto b0 = uml::b0_bound(params);
      if (b0.which != uml::B0Case::III && !ten_digits(std::abs(uml::laurent_b0(params, minus_one)), b0.bound))
        return fail("b0 not attained");
    }
  }
  return {true, std::to_string(points) + " points x 1e4 samples, witnesses attain bounds"};
}

Outcome case_iii() {
  const PoleParams params(0.9, 0.1);
  const auto b0 = uml::b0_bound(params);
  if (b0.which != uml::B0Case::III) return fail("case " + std::string(uml::to_string(b0.which)));
  const double a = uml::b0_case_iii_extremal_a(params);
  if (!(a > -0.9 && a < 1.0)) return fail("a=" + num(a));
  const double attained = std::abs(uml::laurent_b0(params, SchurFunction::negated_mobius(a)));
  const double conjectured = uml::bhowmik_parveen_bound(params, 0);
  if (std::abs(attained - b0.bound) > 1e-9) return fail("attained " + num(attained) + " vs " + num(b0.bound));
  if (!(attained > conjectured)) return fail("attained does not exceed " + num(conjectured));
  return {true, "a=" + num(a) + " |b0|=" + num(attained) + " > " + num(conjectured)};
}

Outcome d_maximizer() {
  oracle::Rng rng(8);
  double worst = 0.0;
  constexpr int kGrid = 1000000;
  for (int i = 0; i < 50; ++i) {
    const PoleParams params(rng.uniform(0.01, 0.99), rng.uniform(0.01, 0.99));
    double best_x = 0.0, best = -INFINITY;
    for (int j = 0; j <= kGrid; ++j) {
      const double x = static_cast<double>(j) / kGrid;
      const double d = uml::d_profile(params, x);
      if (d > best) best = d, best_x = x;
    }
    worst = std::max(worst, std::abs(uml::d_argmax(params) - best_x));
  }
  if (worst > 1e-5) return fail("max deviation " + num(worst));
  return {true, "max deviation " + num(worst)};
}

Outcome equivalence() {
  oracle::Rng rng(99);
  const double p0 = cx::p0();
  int checked = 0, skipped = 0, disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    const double p = rng.uniform(p0, 1.0);
    const double lambda = rng.uniform(0.0, 1.0) * 0.3;
    const double a = rng.uniform(0.0, 1.0);
    if (p <= p0 || lambda <= 0.0 || a <= 0.0) { ++skipped; continue; }
    const double excess = cx::a3_closed(p, lambda, a) - cx::conjectured_bound_n3(p, lambda);
    const double gap = cx::lambda_threshold(p, a) - lambda;
    if (std::abs(excess) < 1e-12 || std::abs(gap) < 1e-12) { ++skipped; continue; }
    ++checked;
    if ((excess > 0.0) != (gap > 0.0)) ++disagreements;
  }
  if (disagreements > 0) return fail(std::to_string(disagreements) + " disagreements");
  return {true, std::to_string(checked) + " checked, " + std::to_string(skipped) + " in guard band"};
}

int run_cli(std::vector<std::string> args, std::string& out) {
  args.insert(args.begin(), "umverify");
  std::ostringstream o, e;
  const int code = uml::cli::run(args, o, e);
  out = o.str();
  return code;
}

Outcome cli_contract() {
  std::string out;
  if (run_cli({"certify", "--p", "0.8", "--lambda", "0.05"}, out) != 0) return fail("certify 0.8/0.05");
  const auto j = nlohmann::json::parse(out);
  const auto rec = cx::certify(0.8, 0.05);
  if (j["a"].get<double>() != rec.a || j["margin"].get<double>() != rec.margin ||
      j["a3_closed"].get<double>() != rec.a3_closed || nlohmann::json::parse(j.dump()) != j)
    return fail("JSON round-trip");
  if (run_cli({"certify", "--p", "0.8", "--lambda", "0.2"}, out) != 1 ||
      nlohmann::json::parse(out)["status"] != "outside-window")
    return fail("certify 0.8/0.2");
  if (run_cli({"certify", "--p", "1.5", "--lambda", "0.05"}, out) != 2) return fail("certify 1.5/0.05");
  return {true, "exit codes 0/1/2, JSON round-trips"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"p0 reproduction", p0_reproduction},
      {"counterexample certification", certification},
      {"representation identity", representation_identity},
      {"extremal series oracle", extremal_series},
      {"Laurent closed forms vs contour", laurent_forms},
      {"proved-bound soundness and sharpness", soundness_and_sharpness},
      {"b0 case III exceeds the conjectured value", case_iii},
      {"D(x) maximizer", d_maximizer},
      {"a3 excess iff lambda below threshold", equivalence},
      {"CLI contract", cli_contract},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %2zu %s: %s\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
