#include "uml/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "uml/counterexample.hpp"
#include "uml/error.hpp"
#include "uml/search.hpp"
#include "uml/umclass.hpp"

namespace uml::cli {

namespace {

using json = nlohmann::ordered_json;
namespace cx = uml::counterexample;

enum class Format { Json, Csv, Text };

// What a subcommand hands back: the JSON document, the flat rows for CSV and
// the exit status.
struct Result {
  json doc;
  std::vector<json> rows;
  int status = kExitOk;
};

constexpr double kUfResidualTol = 1e-10;
constexpr double kLaurentTol = 1e-8;
constexpr int kCurvePoints = 200;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string scalar_text(const json& v) {
  if (v.is_null()) return "null";
  if (v.is_number_float()) return fmt(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const json& v) {
  if (v.is_null()) return "";
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return s;
}

void write_csv(std::ostream& out, const std::vector<json>& rows) {
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [key, _] : rows.front().items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& [_, value] : row.items()) {
      out << (first ? "" : ",") << csv_field(value);
      first = false;
    }
    out << "\n";
  }
}

void write_text(std::ostream& out, const json& doc, const std::string& prefix = "") {
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (doc[i].is_object()) {
        bool first = true;
        for (const auto& [key, value] : doc[i].items()) {
          out << (first ? "" : " ") << key << "=" << scalar_text(value);
          first = false;
        }
        out << "\n";
      } else {
        out << prefix << "[" << i << "]=" << scalar_text(doc[i]) << "\n";
      }
    }
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    if (value.is_structured()) {
      out << prefix << key << ":\n";
      write_text(out, value, prefix + "  ");
    } else {
      out << prefix << key << "=" << scalar_text(value) << "\n";
    }
  }
}

json number_or_null(const std::function<double()>& f) {
  try {
    return f();
  } catch (const Error&) {
    return nullptr;
  }
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> v;
  if (steps == 1) return {lo};
  for (int i = 0; i < steps; ++i) v.push_back(lo + (hi - lo) * i / (steps - 1));
  return v;
}

void write_curve(const std::string& path, const std::string& header,
                 const std::vector<std::pair<double, double>>& points) {
  std::ofstream file(path);
  if (!file) throw Error(Errc::InvalidArgument, "cannot open curve file " + path);
  file << header << "\n";
  for (const auto& [x, y] : points) file << fmt(x) << "," << fmt(y) << "\n";
}

json certificate_json(const cx::CertifiedCounterexample& r) {
  return json{{"status", "certified"},   {"certified", true},
              {"p", r.p},                {"lambda", r.lambda},
              {"a", r.a},                {"a0", r.a0},
              {"a3_series", r.a3_series}, {"a3_closed", r.a3_closed},
              {"bound", r.bound},        {"margin", r.margin},
              {"window_hi", r.window_hi}, {"threshold", r.threshold},
              {"membership_margin", r.membership_margin}};
}

json report_json(const search::ProbeReport& r) {
  return json{{"p", r.params.p()},
              {"lambda", r.params.lambda()},
              {"quantity", r.quantity},
              {"samples", r.samples},
              {"observed_max", r.observed_max},
              {"theoretical", r.theoretical},
              {"observed_min", r.observed_min ? json(*r.observed_min) : json(nullptr)},
              {"theoretical_min", r.theoretical_min ? json(*r.theoretical_min) : json(nullptr)},
              {"proved", r.proved},
              {"violated", r.violated},
              {"certified", r.certified},
              {"witness", r.witness},
              {"seed", r.seed}};
}

void require_unit_interval(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) throw Error(Errc::InvalidArgument, std::string(name) + " must lie in (0, 1)");
}

// ---- subcommands -----------------------------------------------------------

struct RootsArgs {
  std::optional<double> p;
  double tol = 1e-12;
};

Result run_roots(const RootsArgs& a) {
  if (!(a.tol > 0.0)) throw Error(Errc::InvalidArgument, "--root-tol must be positive");
  const double root = cx::find_p0(a.tol);
  Result res;
  res.doc = json{{"p0", root}, {"g_at_p0", cx::threshold_gap(root)}, {"b0_p_threshold", b0_p_threshold()}};
  if (a.p) {
    const double p = *a.p;
    require_unit_interval(p, "--p");
    res.doc["p"] = p;
    res.doc["phi"] = phi(p);
    res.doc["a_p"] = number_or_null([p, &a] { return cx::find_w_peak(p, a.tol); });
    res.doc["a0"] = number_or_null([p, &a] { return cx::find_w_crossing(p, a.tol); });
    res.doc["lambda_limit"] = number_or_null([p] { return cx::lambda_limit(p); });
  }
  res.rows = {res.doc};
  return res;
}

Result run_certify(double p, double lambda) {
  require_unit_interval(p, "--p");
  require_unit_interval(lambda, "--lambda");
  Result res;
  try {
    res.doc = certificate_json(cx::certify(p, lambda));
  } catch (const Error& e) {
    const char* status = e.code() == Errc::OutsideWindow   ? "outside-window"
                         : e.code() == Errc::InvalidRegime ? "invalid-regime"
                                                           : "failed";
    res.doc = json{{"status", status}, {"certified", false}, {"p", p}, {"lambda", lambda}, {"message", e.what()}};
    res.status = kExitNotVerified;
  }
  res.rows = {res.doc};
  return res;
}

struct ScanArgs {
  double p_min = 0.75, p_max = 0.95;
  int p_steps = 5;
  double lambda_min = 0.01, lambda_max = 0.2;
  int lambda_steps = 5;
  std::string curve;
};

Result run_scan(const ScanArgs& a) {
  for (const double x : {a.p_min, a.p_max, a.lambda_min, a.lambda_max}) require_unit_interval(x, "grid bounds");
  if (a.p_steps < 1 || a.lambda_steps < 1) throw Error(Errc::InvalidArgument, "grid steps must be >= 1");
  if (a.p_min > a.p_max || a.lambda_min > a.lambda_max) throw Error(Errc::InvalidArgument, "grid min exceeds max");
  const auto ps = linspace(a.p_min, a.p_max, a.p_steps);
  const auto ls = linspace(a.lambda_min, a.lambda_max, a.lambda_steps);
  Result res;
  res.doc = json::array();
  for (const auto& cell : cx::scan(ps, ls)) {
    json row{{"p", cell.p}, {"lambda", cell.lambda}, {"status", cx::to_string(cell.status)}};
    const auto& r = cell.record;
    row["a"] = r ? json(r->a) : json(nullptr);
    row["a3_closed"] = r ? json(r->a3_closed) : json(nullptr);
    row["a3_series"] = r ? json(r->a3_series) : json(nullptr);
    row["bound"] = r ? json(r->bound) : json(nullptr);
    row["margin"] = r ? json(r->margin) : json(nullptr);
    row["window_hi"] = number_or_null([p = cell.p] { return cx::lambda_limit(p); });
    if (cell.status == cx::CellStatus::Failed) res.status = kExitNotVerified;
    res.doc.push_back(row);
    res.rows.push_back(row);
  }
  if (!a.curve.empty()) {
    std::vector<std::pair<double, double>> pts;
    const double lo = std::max(a.p_min, cx::p0() + 1e-6);
    if (lo < a.p_max) {
      for (const double p : linspace(lo, a.p_max, kCurvePoints)) pts.emplace_back(p, cx::lambda_limit(p));
    }
    write_curve(a.curve, "p,lambda_limit", pts);
  }
  return res;
}

Result run_bounds(double p, double lambda) {
  require_unit_interval(p, "--p");
  require_unit_interval(lambda, "--lambda");
  const PoleParams params(p, lambda);
  const Disk disk = a2_disk(params);
  const ModulusRange range = residue_modulus_range(params);
  const B0Bound b0 = b0_bound(params);
  Result res;
  res.doc = json{{"p", p},
                 {"lambda", lambda},
                 {"a2_center", disk.center.real()},
                 {"a2_radius", disk.radius},
                 {"a2_lower", disk.center.real() - disk.radius},
                 {"a2_upper", a2_upper_bound(params)},
                 {"residue_lo", range.lo},
                 {"residue_hi", range.hi},
                 {"phi", phi(p)},
                 {"b0_p_threshold", b0_p_threshold()},
                 {"b0_bound", b0.bound},
                 {"b0_case", to_string(b0.which)},
                 {"d_argmax", d_argmax(params)},
                 {"b0_case_iii_a", b0.which == B0Case::III
                                       ? json(b0_case_iii_extremal_a(params))
                                       : json(nullptr)},
                 {"bhowmik_parveen_b0", bhowmik_parveen_bound(params, 0)}};
  res.rows = {res.doc};
  return res;
}

struct SeriesArgs {
  double p = 0.0, lambda = 0.0;
  std::string omega = "const:-1,0";
  int order = kDefaultOrder;
};

Result run_series(const SeriesArgs& a) {
  require_unit_interval(a.p, "--p");
  require_unit_interval(a.lambda, "--lambda");
  if (a.order < 4) throw Error(Errc::InvalidArgument, "--order must be at least 4");
  const PoleParams params(a.p, a.lambda);
  const SchurFunction omega = parse_omega(a.omega);
  const UmFunction u = build(params, omega, a.order);

  const ComplexSeries expected = taylor_series(omega, a.order - 2).shifted(2).scaled(a.lambda);
  const ComplexSeries uf = uf_series(u);
  double residual = 0.0;
  for (int k = 0; k < a.order; ++k) residual = std::max(residual, std::abs(uf[k] - expected[k]));

  const cplx res_closed = residue(params, omega);
  const cplx res_contour = laurent_numeric(u, -1);
  const cplx b0_closed = laurent_b0(params, omega);
  const cplx b0_contour = laurent_numeric(u, 0);
  const double margin = membership_margin(u, kBoundarySampleRadius, kBoundarySamplePoints);

  Result res;
  json coeffs = json::array();
  for (int k = 1; k <= a.order; ++k) {
    json row{{"n", k}, {"re", u.f_series()[k].real()}, {"im", u.f_series()[k].imag()}};
    coeffs.push_back(row);
    res.rows.push_back(row);
  }
  const bool ok = residual <= kUfResidualTol && std::abs(res_closed - res_contour) <= kLaurentTol &&
                  std::abs(b0_closed - b0_contour) <= kLaurentTol && margin > 0.0;
  res.doc = json{{"p", a.p},
                 {"lambda", a.lambda},
                 {"omega", omega.describe()},
                 {"omega_certified", omega.certified()},
                 {"order", a.order},
                 {"coefficients", coeffs},
                 {"uf_residual", residual},
                 {"residue_closed_re", res_closed.real()},
                 {"residue_closed_im", res_closed.imag()},
                 {"residue_contour_re", res_contour.real()},
                 {"residue_contour_im", res_contour.imag()},
                 {"b0_closed_re", b0_closed.real()},
                 {"b0_closed_im", b0_closed.imag()},
                 {"b0_contour_re", b0_contour.real()},
                 {"b0_contour_im", b0_contour.imag()},
                 {"membership_margin", margin},
                 {"checks_passed", ok}};
  res.status = ok ? kExitOk : kExitNotVerified;
  return res;
}

struct ProbeArgs {
  double p = 0.0, lambda = 0.0;
  std::string quantity = "proved";
  int n = 0;
  int samples = 1000;
  int grid = 1000;
  std::string curve;
};

Result run_probe(const ProbeArgs& a, std::uint64_t seed) {
  require_unit_interval(a.p, "--p");
  require_unit_interval(a.lambda, "--lambda");
  if (a.samples < 1) throw Error(Errc::InvalidArgument, "--samples must be at least 1");
  const PoleParams params(a.p, a.lambda);
  std::vector<search::ProbeReport> reports;
  if (a.quantity == "proved") {
    reports = search::probe_proved_bounds(params, a.samples, seed);
  } else if (a.quantity == "a3") {
    reports.push_back(search::probe_a3(params, a.grid, seed, a.samples));
  } else if (a.quantity == "bn") {
    if (a.n < 0) throw Error(Errc::InvalidArgument, "--n must be nonnegative");
    reports.push_back(search::probe_bn(params, a.n, a.samples, seed));
  } else {
    search::Quantity kind;
    if (a.quantity == "a2") kind = search::Quantity::A2;
    else if (a.quantity == "residue") kind = search::Quantity::Residue;
    else if (a.quantity == "b0") kind = search::Quantity::B0;
    else throw Error(Errc::InvalidArgument, "unknown quantity " + a.quantity);
    auto pool = search::random_pool(a.samples, seed);
    for (auto& w : search::extremal_pool(params)) pool.push_back(std::move(w));
    reports.push_back(search::probe_pool(params, search::Probe{kind}, pool, seed));
  }
  Result res;
  res.doc = json::array();
  for (const auto& r : reports) {
    res.doc.push_back(report_json(r));
    res.rows.push_back(report_json(r));
    if (r.proved && r.violated) res.status = kExitNotVerified;
  }
  if (!a.curve.empty()) {
    std::vector<std::pair<double, double>> pts;
    for (int i = 1; i < kCurvePoints; ++i) {
      const double x = static_cast<double>(i) / kCurvePoints;
      pts.emplace_back(x, cx::lambda_threshold(a.p, x));
    }
    write_curve(a.curve, "a,L", pts);
  }
  return res;
}

double parse_double(std::string_view s, const char** end) {
  const std::string buf(s);
  char* stop = nullptr;
  const double v = std::strtod(buf.c_str(), &stop);
  if (stop == buf.c_str()) throw Error(Errc::InvalidArgument, "expected a number in '" + buf + "'");
  *end = s.data() + (stop - buf.c_str());
  return v;
}

double parse_real(std::string_view s) {
  const char* end = nullptr;
  const double v = parse_double(s, &end);
  if (end != s.data() + s.size()) throw Error(Errc::InvalidArgument, "trailing text in '" + std::string(s) + "'");
  return v;
}

// re, or re+imi / re-imi
cplx parse_complex_token(std::string_view s) {
  const char* end = nullptr;
  const double re = parse_double(s, &end);
  const std::string_view rest = s.substr(static_cast<std::size_t>(end - s.data()));
  if (rest.empty()) return re;
  if (rest.back() != 'i') throw Error(Errc::InvalidArgument, "malformed complex '" + std::string(s) + "'");
  return {re, parse_real(rest.substr(0, rest.size() - 1))};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

cplx parse_pair(std::string_view s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw Error(Errc::InvalidArgument, "expected <re>,<im> in '" + std::string(s) + "'");
  return {parse_real(parts[0]), parse_real(parts[1])};
}

}  // namespace

SchurFunction parse_omega(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(Errc::InvalidArgument, "omega spec needs a '<kind>:' prefix");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  if (kind == "const") return SchurFunction::constant(parse_pair(body));
  if (kind == "negmob") return SchurFunction::negated_mobius(parse_real(body));
  if (kind == "blaschke") {
    const auto parts = split(body, ';');
    std::vector<cplx> zeros;
    for (std::size_t i = 1; i < parts.size(); ++i) zeros.push_back(parse_pair(parts[i]));
    return SchurFunction::blaschke(parse_real(parts[0]), std::move(zeros));
  }
  if (kind == "taylor") {
    std::vector<cplx> coeffs;
    for (const auto tok : split(body, ',')) coeffs.push_back(parse_complex_token(tok));
    return SchurFunction::taylor(std::move(coeffs));
  }
  throw Error(Errc::InvalidArgument, "unknown omega kind '" + std::string(kind) + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification harness for the meromorphic class U_m(lambda)", "umverify"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name;
  std::uint64_t seed = 0;
  app.add_option("--output-format", format_name, "json | csv | text (default: text for roots, json otherwise)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", seed, "Random seed for probes")->capture_default_str();

  RootsArgs roots;
  auto* roots_cmd = app.add_subcommand("roots", "p0, and the a_p / a0 / lambda-window data for --p");
  roots_cmd->add_option("--p", roots.p, "Pole location");
  roots_cmd->add_option("--root-tol", roots.tol, "Bisection tolerance")->capture_default_str();

  double cert_p = 0.0, cert_lambda = 0.0;
  auto* certify_cmd = app.add_subcommand("certify", "Certify a violation of the conjectured |a3| bound");
  certify_cmd->add_option("--p", cert_p)->required();
  certify_cmd->add_option("--lambda", cert_lambda)->required();

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Certification status over a (p, lambda) grid");
  scan_cmd->add_option("--p-min", scan.p_min)->capture_default_str();
  scan_cmd->add_option("--p-max", scan.p_max)->capture_default_str();
  scan_cmd->add_option("--p-steps", scan.p_steps)->capture_default_str();
  scan_cmd->add_option("--lambda-min", scan.lambda_min)->capture_default_str();
  scan_cmd->add_option("--lambda-max", scan.lambda_max)->capture_default_str();
  scan_cmd->add_option("--lambda-steps", scan.lambda_steps)->capture_default_str();
  scan_cmd->add_option("--emit-curve", scan.curve, "Write (p, lambda_limit(p)) as CSV");

  double bounds_p = 0.0, bounds_lambda = 0.0;
  auto* bounds_cmd = app.add_subcommand("bounds", "a2 disk, residue range and b0 bound");
  bounds_cmd->add_option("--p", bounds_p)->required();
  bounds_cmd->add_option("--lambda", bounds_lambda)->required();

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "Taylor and Laurent data of one class member");
  series_cmd->add_option("--p", series.p)->required();
  series_cmd->add_option("--lambda", series.lambda)->required();
  series_cmd->add_option("--omega", series.omega, "const:re,im | negmob:a | blaschke:theta;re,im;... | taylor:c0,...")
      ->capture_default_str();
  series_cmd->add_option("--order", series.order)->capture_default_str();

  ProbeArgs probe;
  auto* probe_cmd = app.add_subcommand("probe", "Randomized extremal probing of bounds and conjectures");
  probe_cmd->add_option("--p", probe.p)->required();
  probe_cmd->add_option("--lambda", probe.lambda)->required();
  probe_cmd->add_option("--quantity", probe.quantity, "proved | a2 | a3 | residue | b0 | bn")
      ->check(CLI::IsMember({"proved", "a2", "a3", "residue", "b0", "bn"}))
      ->capture_default_str();
  probe_cmd->add_option("--n", probe.n, "Laurent index for bn")->capture_default_str();
  probe_cmd->add_option("--samples", probe.samples)->capture_default_str();
  probe_cmd->add_option("--grid", probe.grid, "Mobius grid size for a3")->capture_default_str();
  probe_cmd->add_option("--emit-curve", probe.curve, "Write (a, L_p(a)) as CSV");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  Format format = roots_cmd->parsed() ? Format::Text : Format::Json;
  if (format_name == "json") format = Format::Json;
  if (format_name == "csv") format = Format::Csv;
  if (format_name == "text") format = Format::Text;

  Result result;
  try {
    cx::self_check();
    if (roots_cmd->parsed()) result = run_roots(roots);
    else if (certify_cmd->parsed()) result = run_certify(cert_p, cert_lambda);
    else if (scan_cmd->parsed()) result = run_scan(scan);
    else if (bounds_cmd->parsed()) result = run_bounds(bounds_p, bounds_lambda);
    else if (series_cmd->parsed()) result = run_series(series);
    else result = run_probe(probe, seed);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool bad_input = e.code() == Errc::InvalidArgument || e.code() == Errc::NotInUnitBall ||
                           e.code() == Errc::OutsideDisk;
    return bad_input ? kExitInvalidInput : kExitNotVerified;
  }

  switch (format) {
    case Format::Json: out << result.doc.dump(2) << "\n"; break;
    case Format::Csv: write_csv(out, result.rows); break;
    case Format::Text: write_text(out, result.doc); break;
  }
  return result.status;
}

}  // namespace uml::cli
