#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "landau/errors.hpp"
#include "landau/extremal.hpp"
#include "landau/radii.hpp"
#include "landau/verify.hpp"
#include "suite.hpp"

namespace landau::cli {
namespace {

using Json = nlohmann::ordered_json;

double parse_number(std::string_view token) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  double value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value))
    throw DomainError("cannot parse number '" + std::string(token) + "'");
  return value;
}

class Printer {
 public:
  explicit Printer(int digits) : digits_(std::clamp(digits, 1, 17)) {}

  std::string str(double x) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits_, x);
    return buf;
  }

  Json json(double x) const {
    if (!std::isfinite(x)) return nullptr;
    return std::strtod(str(x).c_str(), nullptr);
  }

  Json json(const std::optional<double>& x) const { return x ? json(*x) : Json(nullptr); }

  Json json(Complex z) const { return Json::array({json(z.real()), json(z.imag())}); }

 private:
  int digits_;
};

struct ProfileFlags {
  int theorem = 1;
  int p = 1;
  std::string lambda0;
  std::string lambdas;
  std::string ms;
  std::string lambda;
  std::string mstars;
};

struct OutputFlags {
  std::string format = "text";
  int digits = 12;
};

struct GridFlags {
  int radial = 32;
  int angular = 64;
  double margin = verify::kDefaultMargin;
  int boundary_samples = 2048;
  int mc_samples = 10000;
  std::uint64_t seed = 0;
  double rho_factor = 0.99;
  double sigma_factor = 0.99;
};

void add_profile_flags(CLI::App* sub, ProfileFlags& f) {
  sub->add_option("--theorem", f.theorem, "Theorem number 1..8")->check(CLI::Range(1, 8));
  sub->add_option("-p,--order", f.p, "Order p of the poly-analytic function")
      ->check(CLI::PositiveNumber);
  sub->add_option("--lambda0", f.lambda0, "Lambda_0 > 1 (theorems 1, 5)");
  sub->add_option("--lambdas", f.lambdas, "Lambda_1..Lambda_{p-1}, comma separated");
  sub->add_option("--ms", f.ms, "Modulus bounds: M_0..M_{p-1} (theorem 3) or M_1..M_{p-1} (theorem 4)");
  sub->add_option("--lambda", f.lambda, "Lambda > 1 (theorems 4, 8)");
  sub->add_option("--mstars", f.mstars, "M*_k > 1: M*_0.. (theorem 7) or M*_1.. (theorem 8)");
}

void add_output_flags(CLI::App* sub, OutputFlags& f, const char* default_format) {
  f.format = default_format;
  sub->add_option("--format", f.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--digits", f.digits, "Significant digits in output")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
}

void add_grid_flags(CLI::App* sub, GridFlags& f) {
  sub->add_option("--radial", f.radial, "Radial grid count")->capture_default_str();
  sub->add_option("--angular", f.angular, "Angular grid count")->capture_default_str();
  sub->add_option("--margin", f.margin, "Tolerance for strict inequalities")->capture_default_str();
  sub->add_option("--samples", f.boundary_samples, "Boundary samples for coverage checks")
      ->capture_default_str();
  sub->add_option("--mc-samples", f.mc_samples, "Monte Carlo samples")->capture_default_str();
  sub->add_option("--seed", f.seed, "Seed for randomized oracles")
      ->envname("LANDAU_SEED")
      ->capture_default_str();
  sub->add_option("--rho-factor", f.rho_factor, "Univalence is checked on U_{factor * rho}")
      ->capture_default_str();
  sub->add_option("--sigma-factor", f.sigma_factor, "Coverage is checked for radius factor * sigma")
      ->capture_default_str();
}

std::vector<double> values_or_empty(const std::string& text) {
  if (text.empty()) return {};
  return parse_values(text, false);
}

double scalar(const std::string& text, const char* flag) {
  if (text.empty()) throw DomainError(std::string(flag) + " is required for this theorem");
  return parse_number(text);
}

std::vector<double> broadcast(std::vector<double> v, std::size_t n) {
  if (v.size() == 1 && n > 1) v.assign(n, v.front());
  return v;
}

TheoremInput build_input(const ProfileFlags& f) {
  TheoremInput in;
  in.theorem = f.theorem;
  in.p = std::size_t(f.p);
  const std::size_t tail = in.p - 1;
  switch (f.theorem) {
    case 1:
    case 5:
      in.lambda0 = scalar(f.lambda0, "--lambda0");
      in.lambdas = broadcast(values_or_empty(f.lambdas), tail);
      break;
    case 2:
    case 6:
      in.lambdas = broadcast(values_or_empty(f.lambdas), tail);
      break;
    case 3:
      in.moduli = broadcast(values_or_empty(f.ms), in.p);
      break;
    case 4:
      in.lambda = scalar(f.lambda, "--lambda");
      in.moduli = broadcast(values_or_empty(f.ms), tail);
      break;
    case 7:
      in.mstars = broadcast(values_or_empty(f.mstars), in.p);
      break;
    case 8:
      in.lambda = scalar(f.lambda, "--lambda");
      in.mstars = broadcast(values_or_empty(f.mstars), tail);
      break;
    default:
      throw DomainError("--theorem must be in 1..8");
  }
  return in;
}

Json theorem_json(TheoremId id) {
  const int n = static_cast<int>(id);
  if (n >= 1 && n <= 8) return n;
  return to_string(id);
}

Json radii_json(const RadiiResult& r, const Printer& pr) {
  Json j;
  j["theorem"] = theorem_json(r.theorem);
  j["rho"] = pr.json(r.rho);
  j["sigma"] = pr.json(r.sigma);
  j["w"] = pr.json(r.w);
  j["r"] = pr.json(r.r);
  j["residual"] = pr.json(r.residual);
  j["iterations"] = r.iterations;
  j["degenerate"] = r.degenerate;
  j["sharpness_caveat"] = r.sharpness_caveat;
  return j;
}

Json check_json(const verify::VerificationReport& rep, const Printer& pr) {
  Json j;
  j["name"] = rep.check_name;
  j["passed"] = rep.passed;
  j["measured_margin"] = pr.json(rep.measured_margin);
  Json witness = Json::array();
  for (const auto& w : rep.witness) {
    Json point;
    point["z"] = pr.json(w.z);
    point["value"] = pr.json(w.value);
    witness.push_back(point);
  }
  j["witness"] = witness;
  j["note"] = rep.note;
  return j;
}

std::string opt_str(const std::optional<double>& x, const Printer& pr) {
  return x ? pr.str(*x) : std::string();
}

void print_radii_text(std::ostream& out, const RadiiResult& r, const Printer& pr) {
  out << "theorem     " << to_string(r.theorem) << '\n'
      << "rho         " << pr.str(r.rho) << '\n'
      << "sigma       " << pr.str(r.sigma) << '\n';
  if (r.w) out << "w           " << pr.str(*r.w) << '\n';
  if (r.r) out << "r           " << pr.str(*r.r) << '\n';
  out << "residual    " << pr.str(r.residual) << '\n'
      << "iterations  " << r.iterations << '\n';
  if (r.degenerate) out << "note        sigma <= 0: no covered disk asserted\n";
  if (r.sharpness_caveat) out << "note        sigma >= 1: sinh(sigma) sharpness not asserted\n";
}

const char* kRadiiCsvHeader = "theorem,rho,sigma,w,r,residual,iterations,degenerate";

std::string radii_csv_row(const RadiiResult& r, const Printer& pr) {
  std::ostringstream s;
  s << to_string(r.theorem) << ',' << pr.str(r.rho) << ',' << pr.str(r.sigma) << ','
    << opt_str(r.w, pr) << ',' << opt_str(r.r, pr) << ',' << pr.str(r.residual) << ','
    << r.iterations << ',' << (r.degenerate ? "true" : "false");
  return s.str();
}

// ---------------------------------------------------------------------------

int cmd_radii(const ProfileFlags& pf, const OutputFlags& of, std::ostream& out) {
  const Printer pr(of.digits);
  const auto res = compute_radii(build_input(pf));
  if (of.format == "json")
    out << radii_json(res, pr).dump(2) << '\n';
  else if (of.format == "csv")
    out << kRadiiCsvHeader << '\n' << radii_csv_row(res, pr) << '\n';
  else
    print_radii_text(out, res, pr);
  return kExitOk;
}

struct BaselineFlags {
  std::string kind = "landau";
  double M = 2.0;
  double lambda1 = 0.0;
  double lambda2 = 2.0;
  double lambda = 1.0;
  int p = 2;
};

int cmd_baseline(const BaselineFlags& bf, const OutputFlags& of, std::ostream& out) {
  const Printer pr(of.digits);
  BaselineRadii b;
  if (bf.kind == "landau")
    b = classical_landau_baseline(bf.M);
  else if (bf.kind == "A")
    b = theoremA_baseline(bf.lambda1, bf.lambda2);
  else if (bf.kind == "B")
    b = theoremB_baseline(bf.lambda);
  else
    b = theoremC_baseline(bf.M, bf.p);
  if (of.format == "json") {
    Json j;
    j["baseline"] = bf.kind;
    j["r"] = pr.json(b.r);
    j["R"] = pr.json(b.R);
    out << j.dump(2) << '\n';
  } else if (of.format == "csv") {
    out << "baseline,r,R\n" << bf.kind << ',' << pr.str(b.r) << ',' << pr.str(b.R) << '\n';
  } else {
    out << "baseline    " << bf.kind << '\n'
        << "r           " << pr.str(b.r) << '\n'
        << "R           " << pr.str(b.R) << '\n';
  }
  return kExitOk;
}

struct CompareFlags {
  std::string moduli = "1.2,2,5";
  std::string orders = "2,3,5";
};

int cmd_compare(const CompareFlags& cf, const OutputFlags& of, std::ostream& out) {
  const Printer pr(of.digits);
  const auto ms = parse_values(cf.moduli, true);
  const auto ps = parse_values(cf.orders, false);
  struct Row {
    double M;
    int p;
    RadiiResult thm3;
    BaselineRadii c;
  };
  std::vector<Row> rows;
  for (double M : ms) {
    if (!(M > 1.0)) throw DomainError("compare: hypothesis M > 1 violated");
    for (double pd : ps) {
      const int p = int(pd);
      if (pd != double(p) || p < 2) throw DomainError("compare: p must be an integer >= 2");
      rows.push_back({M, p, rho_sigma_thm3(ModulusAll(std::vector<double>(std::size_t(p), M))),
                      theoremC_baseline(M, p)});
    }
  }
  bool all_improved = true;
  for (const auto& r : rows)
    all_improved = all_improved && r.thm3.rho - r.c.r > 0.0 && r.thm3.sigma - r.c.R > 0.0;

  if (of.format == "json") {
    Json j;
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["M"] = pr.json(r.M);
      row["p"] = r.p;
      row["rho3"] = pr.json(r.thm3.rho);
      row["sigma3"] = pr.json(r.thm3.sigma);
      row["rC"] = pr.json(r.c.r);
      row["RC"] = pr.json(r.c.R);
      row["drho"] = pr.json(r.thm3.rho - r.c.r);
      row["dsigma"] = pr.json(r.thm3.sigma - r.c.R);
      arr.push_back(row);
    }
    j["rows"] = arr;
    j["improved"] = all_improved;
    out << j.dump(2) << '\n';
  } else {
    const char sep = of.format == "csv" ? ',' : ' ';
    out << (of.format == "csv" ? "M,p,rho3,sigma3,rC,RC,drho,dsigma"
                               : "M p rho3 sigma3 rC RC drho dsigma")
        << '\n';
    for (const auto& r : rows)
      out << pr.str(r.M) << sep << r.p << sep << pr.str(r.thm3.rho) << sep
          << pr.str(r.thm3.sigma) << sep << pr.str(r.c.r) << sep << pr.str(r.c.R) << sep
          << pr.str(r.thm3.rho - r.c.r) << sep << pr.str(r.thm3.sigma - r.c.R) << '\n';
  }
  return all_improved ? kExitOk : kExitCheckFailed;
}

SuiteOptions suite_options(const GridFlags& gf) {
  SuiteOptions o;
  o.grid = verify::GridSpec(gf.radial, gf.angular, gf.margin);
  o.boundary_samples = gf.boundary_samples;
  o.monte_carlo_samples = gf.mc_samples;
  o.seed = gf.seed;
  o.rho_factor = gf.rho_factor;
  o.sigma_factor = gf.sigma_factor;
  if (!(o.rho_factor > 0.0 && o.rho_factor <= 1.0))
    throw DomainError("--rho-factor must lie in (0, 1]");
  if (!(o.sigma_factor > 0.0)) throw DomainError("--sigma-factor must be positive");
  return o;
}

int cmd_verify(const ProfileFlags& pf, const GridFlags& gf, const OutputFlags& of,
               std::ostream& out) {
  const Printer pr(of.digits);
  const auto result = run_suite(build_input(pf), suite_options(gf));
  if (of.format == "json") {
    Json j = radii_json(result.radii, pr);
    j["passed"] = result.passed;
    Json checks = Json::array();
    for (const auto& c : result.checks) checks.push_back(check_json(c, pr));
    j["checks"] = checks;
    out << j.dump(2) << '\n';
  } else if (of.format == "csv") {
    out << "check,passed,measured_margin\n";
    for (const auto& c : result.checks)
      out << c.check_name << ',' << (c.passed ? "true" : "false") << ','
          << pr.str(c.measured_margin) << '\n';
  } else {
    print_radii_text(out, result.radii, pr);
    for (const auto& c : result.checks)
      out << (c.passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(20) << c.check_name
          << " margin " << pr.str(c.measured_margin) << "  " << c.note << '\n';
    out << (result.passed ? "all checks passed" : "verification FAILED") << '\n';
  }
  return result.passed ? kExitOk : kExitCheckFailed;
}

int cmd_sharpness(const ProfileFlags& pf, double radius, const GridFlags& gf,
                  const OutputFlags& of, std::ostream& out) {
  if (pf.theorem != 1 && pf.theorem != 5)
    throw DomainError("sharpness: the collision construction exists for theorems 1 and 5");
  const Printer pr(of.digits);
  const auto in = build_input(pf);
  const DerivAll profile(in.lambda0, in.lambdas);
  const auto pair = collision_pair(profile, radius);
  const ExtremalSpec spec = F1Family{profile};
  const Complex v1 = extremal_eval(spec, pair.x1);
  const Complex v2 = extremal_eval(spec, pair.x2);
  const double gap = std::abs(v1 - v2);
  const double exp_gap = std::abs(std::exp(v1) - std::exp(v2));

  // The pair, injected into a grid on U_r, must make the injectivity oracle fail.
  const auto opts = suite_options(gf);
  const Complex extras[] = {Complex(pair.x1), Complex(pair.x2)};
  const auto f1 = as_poly_analytic(spec);
  const auto injected = verify::univalence_grid_check(f1, radius, opts.grid, extras);

  const bool demonstrated = gap < 1e-10 && pair.x1 != pair.x2 && !injected.passed;
  if (of.format == "json") {
    Json j;
    j["theorem"] = pf.theorem;
    j["rho"] = pr.json(pair.rho);
    j["r"] = pr.json(radius);
    j["x1"] = pr.json(pair.x1);
    j["x2"] = pr.json(pair.x2);
    j["epsilon"] = pr.json(pair.epsilon);
    j["second_zero"] = pr.json(pair.second_zero);
    j["collision_gap"] = pr.json(gap);
    j["exp_collision_gap"] = pr.json(exp_gap);
    j["checks"] = Json::array({check_json(injected, pr)});
    j["passed"] = demonstrated;
    out << j.dump(2) << '\n';
  } else if (of.format == "csv") {
    out << "theorem,rho,r,x1,x2,collision_gap,exp_collision_gap\n"
        << pf.theorem << ',' << pr.str(pair.rho) << ',' << pr.str(radius) << ','
        << pr.str(pair.x1) << ',' << pr.str(pair.x2) << ',' << pr.str(gap) << ','
        << pr.str(exp_gap) << '\n';
  } else {
    out << "rho               " << pr.str(pair.rho) << '\n'
        << "r                 " << pr.str(radius) << '\n'
        << "x1                " << pr.str(pair.x1) << '\n'
        << "x2                " << pr.str(pair.x2) << '\n'
        << "|F1(x1)-F1(x2)|   " << pr.str(gap) << '\n'
        << "|f1(x1)-f1(x2)|   " << pr.str(exp_gap) << "   (f1 = exp F1)\n"
        << "injected grid     " << (injected.passed ? "no collision found" : "collision detected")
        << " (min ratio " << pr.str(injected.measured_margin) << ")\n"
        << (demonstrated ? "not univalent on U_r: sharpness witnessed" : "sharpness NOT witnessed")
        << '\n';
  }
  return demonstrated ? kExitOk : kExitCheckFailed;
}

int cmd_table(ProfileFlags pf, const OutputFlags& of, std::ostream& out) {
  const Printer pr(of.digits);
  struct Axis {
    const char* name;
    std::string* text;
  };
  Axis axes[] = {{"lambda0", &pf.lambda0}, {"lambdas", &pf.lambdas}, {"ms", &pf.ms},
                 {"lambda", &pf.lambda},   {"mstars", &pf.mstars}};
  Axis* swept = nullptr;
  for (auto& a : axes) {
    if (a.text->find(':') == std::string::npos) continue;
    if (swept) throw DomainError("table: only one parameter may use range syntax");
    swept = &a;
  }
  if (!swept) throw DomainError("table: give one parameter as start:stop:step");
  const auto values = parse_values(*swept->text, true);

  std::vector<std::pair<double, RadiiResult>> rows;
  for (double v : values) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    *swept->text = buf;
    rows.emplace_back(v, compute_radii(build_input(pf)));
  }

  if (of.format == "json") {
    Json arr = Json::array();
    for (const auto& [v, r] : rows) {
      Json row = radii_json(r, pr);
      row["param"] = swept->name;
      row["value"] = pr.json(v);
      arr.push_back(row);
    }
    Json j;
    j["rows"] = arr;
    out << j.dump(2) << '\n';
  } else {
    const char sep = of.format == "csv" ? ',' : ' ';
    out << "theorem,param,value,rho,sigma,w,r,residual,iterations,degenerate\n";
    for (const auto& [v, r] : rows) {
      std::string row = radii_csv_row(r, pr);
      const auto first_comma = row.find(',');
      row.insert(first_comma, std::string(",") + swept->name + "," + pr.str(v));
      if (sep != ',') std::replace(row.begin(), row.end(), ',', sep);
      out << row << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

std::vector<double> parse_values(const std::string& text, bool allow_range) {
  if (text.find(':') != std::string::npos) {
    if (!allow_range) throw DomainError("range syntax '" + text + "' is only accepted by table");
    const auto a = text.find(':');
    const auto b = text.find(':', a + 1);
    if (b == std::string::npos || text.find(':', b + 1) != std::string::npos)
      throw DomainError("range '" + text + "' must be start:stop:step");
    const double start = parse_number(std::string_view(text).substr(0, a));
    const double stop = parse_number(std::string_view(text).substr(a + 1, b - a - 1));
    const double step = parse_number(std::string_view(text).substr(b + 1));
    if (!(step > 0.0) || stop < start) throw DomainError("range '" + text + "' is empty");
    const auto count = std::size_t(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1000000) throw DomainError("range '" + text + "' is too long");
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(start + double(i) * step);
    return out;
  }
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_number(std::string_view(text).substr(pos, end - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Univalence and schlicht-disk radii for poly-analytic and log-p-analytic functions",
               "landau"};
  app.set_config("--config", "", "key=value file with default flag values");
  app.require_subcommand(1);

  ProfileFlags profile;
  OutputFlags radii_out, base_out, cmp_out, ver_out, sharp_out, table_out;
  GridFlags grid;
  BaselineFlags baseline;
  CompareFlags compare;
  double sharp_radius = 1.0;

  auto* radii = app.add_subcommand("radii", "Univalence radius rho and disk radius sigma");
  add_profile_flags(radii, profile);
  add_output_flags(radii, radii_out, "text");

  auto* base = app.add_subcommand("baseline", "Classical Landau and earlier bianalytic/poly-analytic bounds");
  base->add_option("--kind", baseline.kind, "landau, A, B or C")
      ->check(CLI::IsMember({"landau", "A", "B", "C"}));
  base->add_option("--M", baseline.M, "Modulus bound M > 1 (landau, C)");
  base->add_option("--lambda1", baseline.lambda1, "Lambda_1 >= 0 (A)");
  base->add_option("--lambda2", baseline.lambda2, "Lambda_2 > 1 (A)");
  base->add_option("--lambda", baseline.lambda, "Lambda >= 0 (B)");
  base->add_option("-p,--order", baseline.p, "Order p (C)");
  add_output_flags(base, base_out, "text");

  auto* cmp = app.add_subcommand("compare", "Modulus-bounded radii against the earlier uniform bound");
  cmp->add_option("--M", compare.moduli, "M values (list or start:stop:step)")->capture_default_str();
  cmp->add_option("-p,--order", compare.orders, "Orders p (list)")->capture_default_str();
  add_output_flags(cmp, cmp_out, "csv");

  auto* ver = app.add_subcommand("verify", "Run the oracle pipeline on the theorem's witness function");
  add_profile_flags(ver, profile);
  add_grid_flags(ver, grid);
  add_output_flags(ver, ver_out, "text");

  auto* sharp = app.add_subcommand("sharpness", "Exhibit a collision of F_1 just beyond rho_1");
  add_profile_flags(sharp, profile);
  sharp->add_option("-r,--radius", sharp_radius, "Disk radius r in (rho_1, 1]")->capture_default_str();
  add_grid_flags(sharp, grid);
  add_output_flags(sharp, sharp_out, "text");

  auto* table = app.add_subcommand("table", "Sweep one parameter given as start:stop:step");
  add_profile_flags(table, profile);
  add_output_flags(table, table_out, "csv");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*radii) return cmd_radii(profile, radii_out, out);
    if (*base) return cmd_baseline(baseline, base_out, out);
    if (*cmp) return cmd_compare(compare, cmp_out, out);
    if (*ver) return cmd_verify(profile, grid, ver_out, out);
    if (*sharp) return cmd_sharpness(profile, sharp_radius, grid, sharp_out, out);
    if (*table) return cmd_table(profile, table_out, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateResult& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace landau::cli
