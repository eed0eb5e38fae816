#include "biharm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "biharm/atlas.hpp"
#include "biharm/bienergy.hpp"
#include "biharm/hessian.hpp"
#include "biharm/identities.hpp"

namespace biharm::cli {

using Json = nlohmann::ordered_json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  Json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int code = kOk;
};

constexpr double kResidualTol = 1e-6;
constexpr double kWrongAngleFactor = 1e3;
constexpr double kJiangTol = 1e-8;
constexpr double kScalingTol = 1e-10;
constexpr double kFdStep = 1e-2;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json rational_json(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  return r->get_str();
}

void require_cell(const RunConfig& c) {
  if (c.m < 2) throw ConfigError("--m must be at least 2");
  if (c.ell < 1 || c.ell > c.m) throw ConfigError("--ell must lie in 1..m");
}

void require_tensor(const RunConfig& c) {
  if (std::pow(static_cast<double>(c.m), c.ell) > kMaxComponents)
    throw Infeasible("m^ell = " + num(std::pow(static_cast<double>(c.m), c.ell)) + " exceeds " +
                     num(kMaxComponents) + " tensor components");
}

DeformedMap critical_map(const RunConfig& c) {
  if (!solve_alpha(c.m, c.ell))
    throw ConfigError("no proper biharmonic angle at (m, ell) = (" + std::to_string(c.m) + ", " +
                      std::to_string(c.ell) + ")");
  require_tensor(c);
  return DeformedMap::critical(c.m, c.ell);
}

QuadratureSpec full_spec(const RunConfig& c) {
  QuadratureSpec s;
  s.radial_nodes = c.radial_nodes;
  s.mc_samples = c.mc_samples;
  s.rng_seed = c.seed;
  return s;
}

QuadratureSpec annulus_spec(const RunConfig& c) {
  QuadratureSpec s = full_spec(c);
  s.a = c.annulus_inner;
  s.b = 1 - c.annulus_inner;
  return s;
}

Json cell_json(const ParameterCell& p) {
  Json j;
  j["m"] = p.m;
  j["ell"] = p.ell;
  j["sin2alpha"] = rational_json(p.sin2alpha);
  j["sin2alpha_num"] = p.sin2alpha ? Json(p.sin2alpha->get_num().get_str()) : Json(nullptr);
  j["sin2alpha_den"] = p.sin2alpha ? Json(p.sin2alpha->get_den().get_str()) : Json(nullptr);
  j["quadratic_margin"] = p.quadratic_margin;
  j["verdict"] = to_string(p.verdict.kind);
  j["source"] = to_string(p.verdict.source);
  return j;
}

const std::vector<std::string> kCellHeader = {"m",       "ell",    "sin2alpha_num", "sin2alpha_den", "quadratic_margin",
                                              "verdict", "source"};

std::vector<std::string> cell_row(const ParameterCell& p) {
  return {std::to_string(p.m),
          std::to_string(p.ell),
          p.sin2alpha ? p.sin2alpha->get_num().get_str() : "",
          p.sin2alpha ? p.sin2alpha->get_den().get_str() : "",
          std::to_string(p.quadratic_margin),
          to_string(p.verdict.kind),
          to_string(p.verdict.source)};
}

Report cmd_atlas(const RunConfig& c) {
  if (c.m_max < 2 || c.ell_max < 1 || c.ell_max > c.m_max)
    throw ConfigError("atlas needs m_max >= 2 and 1 <= ell_max <= m_max");
  Report r;
  r.doc["command"] = "atlas";
  r.doc["m_max"] = c.m_max;
  r.doc["ell_max"] = c.ell_max;
  Json cells = Json::array();
  int stable = 0;
  r.header = kCellHeader;
  for (const auto& p : atlas(c.m_max, c.ell_max)) {
    cells.push_back(cell_json(p));
    r.rows.push_back(cell_row(p));
    stable += p.verdict.kind == VerdictKind::ProperStrictlyStable;
  }
  r.doc["stable_cells"] = stable;
  r.doc["cells"] = std::move(cells);
  return r;
}

Report cmd_alpha(const RunConfig& c) {
  require_cell(c);
  const ParameterCell p = classify(c.m, c.ell);
  const Rational raw = angle_formula(c.m, c.ell);
  Report r;
  r.doc["command"] = "alpha";
  r.doc["m"] = c.m;
  r.doc["ell"] = c.ell;
  r.doc["ell_eigenvalue"] = ell_eigenvalue(c.m, c.ell);
  r.doc["angle_numerator"] = angle_numerator(c.m, c.ell);
  r.doc["angle_equation_value"] = raw.get_str();
  r.doc["sin2alpha"] = rational_json(p.sin2alpha);
  if (!p.sin2alpha) {
    if (c.m <= 4)
      r.doc["reason"] = "m <= 4: q is not in W^{2,2}";
    else if (raw >= 1)
      r.doc["reason"] = "angle equation gives sin^2(alpha) >= 1";
    else
      r.doc["reason"] = "angle equation gives sin^2(alpha) <= 0";
  }
  r.doc["verdict"] = to_string(p.verdict.kind);
  r.header = kCellHeader;
  r.rows.push_back(cell_row(p));
  return r;
}

Report cmd_verify(const RunConfig& c) {
  require_cell(c);
  require_tensor(c);
  if (c.k_max < 0) throw ConfigError("--k-max must be non-negative");
  const IdentityReport rep = verify_identities(c.m, c.ell, c.k_max);
  Report r;
  r.doc["command"] = "verify-identities";
  r.doc["m"] = c.m;
  r.doc["ell"] = c.ell;
  r.doc["comparison"] = "exact rational polynomials";
  r.doc["tolerance"] = 0;
  Json checks = Json::array();
  r.header = {"identity", "passed", "statement"};
  for (const auto& k : rep.checks) {
    checks.push_back({{"identity", k.name}, {"passed", k.passed}, {"statement", k.detail}});
    r.rows.push_back({k.name, k.passed ? "true" : "false", k.detail});
  }
  r.doc["checks"] = std::move(checks);
  r.doc["all_passed"] = rep.all_passed();
  if (!rep.all_passed()) r.code = kViolation;
  return r;
}

Json energy_json(const EnergyReport& e) {
  return {{"dirichlet", e.dirichlet},         {"bilaplacian_l2", e.bilaplacian_l2}, {"grad4", e.grad4},
          {"bienergy", e.bienergy},           {"membership", e.membership},         {"source", "radial_quadrature"}};
}

Json guarded_energy(int m, int ell, const QuadratureSpec& spec, std::optional<EnergyReport>* out) {
  try {
    const EnergyReport e = sobolev_report(m, ell, spec);
    if (out) *out = e;
    return energy_json(e);
  } catch (const DivergentIntegral& d) {
    return {{"divergent", true}, {"radial_order", d.radial_order()}, {"membership", false}};
  } catch (const std::domain_error& d) {
    return {{"undefined", d.what()}};
  }
}

Report cmd_sobolev(const RunConfig& c) {
  require_cell(c);
  Report r;
  r.doc["command"] = "sobolev";
  r.doc["m"] = c.m;
  r.doc["ell"] = c.ell;
  r.doc["angle_equation_value"] = angle_formula(c.m, c.ell).get_str();
  r.doc["full_ball"] = guarded_energy(c.m, c.ell, full_spec(c), nullptr);
  const QuadratureSpec ann = annulus_spec(c);
  std::optional<EnergyReport> exact;
  Json a = guarded_energy(c.m, c.ell, ann, &exact);
  a["a"] = ann.a;
  a["b"] = ann.b;
  r.doc["annulus"] = std::move(a);
  r.header = {"quantity", "reference", "mc_estimate", "mc_standard_error", "within_3_sigma"};
  if (!solve_alpha(c.m, c.ell) || !exact) {
    r.doc["monte_carlo"] = {{"skipped", "no proper biharmonic angle"}};
    return r;
  }
  require_tensor(c);
  const DeformedMap q = DeformedMap::critical(c.m, c.ell);
  const auto mc = sobolev_mc(q, ann);
  const std::array<std::pair<const char*, double>, 4> refs = {{{"dirichlet", exact->dirichlet},
                                                              {"bilaplacian_l2", exact->bilaplacian_l2},
                                                              {"grad4", exact->grad4},
                                                              {"bienergy", exact->bienergy}}};
  Json m = Json::object();
  m["samples"] = c.mc_samples;
  m["seed"] = c.seed;
  m["tolerance"] = "3 standard errors";
  for (int i = 0; i < 4; ++i) {
    const bool ok = std::abs(mc[i].estimate - refs[i].second) <= 3 * mc[i].standard_error;
    m[refs[i].first] = {{"estimate", mc[i].estimate},
                        {"standard_error", mc[i].standard_error},
                        {"reference", refs[i].second},
                        {"within_3_sigma", ok}};
    r.rows.push_back({refs[i].first, num(refs[i].second), num(mc[i].estimate), num(mc[i].standard_error),
                      ok ? "true" : "false"});
    if (!ok) r.code = kViolation;
  }
  r.doc["monte_carlo"] = std::move(m);
  return r;
}

Json residual_json(const ResidualReport& rep) {
  return {{"value", rep.value},
          {"terms", {rep.terms[0], rep.terms[1], rep.terms[2]}},
          {"largest_term", rep.largest_term}};
}

Report cmd_residual(const RunConfig& c) {
  require_cell(c);
  const DeformedMap q = critical_map(c);
  const QuadratureSpec spec = full_spec(c);
  Report r;
  r.doc["command"] = "residual";
  r.doc["m"] = c.m;
  r.doc["ell"] = c.ell;
  r.doc["sin2alpha"] = solve_alpha(c.m, c.ell)->get_str();
  r.doc["tolerance"] = "|residual| <= 1e-6 * largest term";
  r.header = {"sin2alpha", "field", "residual", "largest_term", "passed"};
  Json crit = Json::array();
  for (const auto& phi : standard_residual_fields(q)) {
    const auto rep = weak_residual(q, phi, spec);
    const bool ok = std::abs(rep.value) <= kResidualTol * rep.largest_term;
    Json j = residual_json(rep);
    j["field"] = phi.describe();
    j["passed"] = ok;
    crit.push_back(std::move(j));
    r.rows.push_back({r.doc["sin2alpha"].get<std::string>(), phi.describe(), num(rep.value), num(rep.largest_term),
                      ok ? "true" : "false"});
    if (!ok) r.code = kViolation;
  }
  r.doc["critical"] = std::move(crit);

  Json wrong = Json::array();
  const double s = q.sin_alpha() * q.sin_alpha();
  for (double ds : {-0.1, 0.1}) {
    const double s2 = s + ds;
    Json side;
    side["sin2alpha"] = s2;
    if (!(s2 > 0 && s2 < 1)) {
      side["skipped"] = "perturbed value outside (0, 1)";
      wrong.push_back(std::move(side));
      continue;
    }
    const DeformedMap p(c.m, c.ell, s2);
    side["tolerance"] = "|residual| > 1e-3 * largest term";
    Json fields = Json::array();
    for (const auto& phi : standard_residual_fields(p)) {
      const auto rep = weak_residual(p, phi, spec);
      const bool ok = std::abs(rep.value) > kWrongAngleFactor * kResidualTol * rep.largest_term;
      Json j = residual_json(rep);
      j["field"] = phi.describe();
      j["passed"] = ok;
      fields.push_back(std::move(j));
      r.rows.push_back({num(s2), phi.describe(), num(rep.value), num(rep.largest_term), ok ? "true" : "false"});
      if (!ok) r.code = kViolation;
    }
    side["fields"] = std::move(fields);
    wrong.push_back(std::move(side));
  }
  r.doc["perturbed"] = std::move(wrong);
  return r;
}

Report cmd_hessian(const RunConfig& c) {
  require_cell(c);
  const DeformedMap q = critical_map(c);
  const QuadratureSpec spec = full_spec(c);
  Report r;
  r.doc["command"] = "hessian";
  r.doc["m"] = c.m;
  r.doc["ell"] = c.ell;
  r.doc["sin2alpha"] = solve_alpha(c.m, c.ell)->get_str();
  r.doc["tolerances"] = {{"sphere_vs_jiang_relative", kJiangTol},
                         {"fd", "reported Richardson error"},
                         {"scaling_relative", kScalingTol}};
  r.header = {"field", "sphere_form", "jiang_form", "fd_value", "fd_error", "sufficient_form", "passed"};
  Json fields = Json::array();
  for (const auto& eta : standard_hessian_fields(q, c.seed)) {
    const HessianReport h = hessian_sphere_form(q, eta, spec);
    const double jiang = hessian_jiang_form(q, eta, spec);
    const FdResult fd = hessian_fd_oracle(q, eta, kFdStep, spec);
    const double h2 = hessian_sphere_form(q, eta.scaled(2.0), spec).sphere_form;
    const double scale = std::max(1.0, std::abs(h.sphere_form));
    const bool jiang_ok = std::abs(h.sphere_form - jiang) <= kJiangTol * scale;
    const bool fd_ok = std::abs(h.sphere_form - fd.value) <= fd.error;
    const bool scaling_ok = std::abs(h2 - 4 * h.sphere_form) <= kScalingTol * 4 * scale;
    const bool ok = jiang_ok && fd_ok && scaling_ok;
    Json terms = Json::object();
    for (const auto& [k, v] : h.margin_terms) terms[k] = v;
    fields.push_back({{"field", eta.describe()},
                      {"quadrature", h.quadrature},
                      {"sphere_form", h.sphere_form},
                      {"terms", std::move(terms)},
                      {"jiang_form", jiang},
                      {"fd", {{"value", fd.value}, {"error", fd.error}, {"step", kFdStep}}},
                      {"sufficient_form", h.sufficient_form},
                      {"scaled_by_2", h2},
                      {"checks", {{"sphere_vs_jiang", jiang_ok}, {"fd", fd_ok}, {"scaling", scaling_ok}}}});
    r.rows.push_back({eta.describe(), num(h.sphere_form), num(jiang), num(fd.value), num(fd.error),
                      num(h.sufficient_form), ok ? "true" : "false"});
    if (!ok) r.code = kViolation;
  }
  r.doc["fields"] = std::move(fields);
  return r;
}

Report cmd_hardy(const RunConfig& c) {
  if (c.m < 3) throw ConfigError("hardy needs m >= 3");
  const QuadratureSpec spec = full_spec(c);
  const double bound = c.m * c.m / 4.0;
  Report r;
  r.doc["command"] = "hardy";
  r.doc["m"] = c.m;
  r.doc["bound"] = bound;
  r.doc["inequality"] = "int |Lap eta|^2 > (m^2/4) int |d eta|^2 / r^2";
  r.header = {"profile_index", "ratio"};
  Json profiles = Json::array();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(2);
  w[0] = 1;
  int i = 0;
  for (const auto& f : standard_hardy_profiles()) {
    const double ratio = hardy_ratio(TestField::radial_scalar(c.m, w, f), spec);
    const bool ok = ratio > bound;
    profiles.push_back({{"profile", f.describe()}, {"ratio", ratio}, {"passed", ok}});
    r.rows.push_back({std::to_string(i++), num(ratio)});
    if (!ok) r.code = kViolation;
  }
  r.doc["profiles"] = std::move(profiles);
  const RayleighResult inf = hardy_infimum(c.m, c.basis_size, c.spline_inner, spec);
  r.doc["spline_infimum"] = {{"basis_size", c.basis_size},
                             {"inner", c.spline_inner},
                             {"minimum", inf.minimum},
                             {"condition", inf.condition},
                             {"passed", inf.minimum > bound}};
  if (!(inf.minimum > bound)) r.code = kViolation;
  return r;
}

Report cmd_search(const RunConfig& c) {
  require_cell(c);
  if (c.basis_size < 2) throw ConfigError("--basis-size must be at least 2");
  const QuadratureSpec spec = full_spec(c);
  const ParameterCell cell = classify(c.m, c.ell);
  Report r;
  r.doc["command"] = "search-instability";
  r.doc["cell"] = cell_json(cell);
  r.doc["basis_size"] = c.basis_size;
  r.doc["spline_inner"] = c.spline_inner;
  r.header = {"basis_index", "rayleigh"};
  if (cell.sin2alpha) {
    const NegativeDirection nd = find_negative_direction(c.m, c.ell, c.basis_size, c.spline_inner, spec);
    Json spectrum = Json::array();
    for (Eigen::Index i = 0; i < nd.rayleigh.spectrum.size(); ++i) {
      spectrum.push_back(nd.rayleigh.spectrum[i]);
      r.rows.push_back({std::to_string(i), num(nd.rayleigh.spectrum[i])});
    }
    Json coeffs = Json::array();
    for (Eigen::Index i = 0; i < nd.rayleigh.minimizer.size(); ++i) coeffs.push_back(nd.rayleigh.minimizer[i]);
    Json pencil = {{"normalization", "int |eta|^2 / r^4"},
                   {"min_rayleigh", nd.rayleigh.minimum},
                   {"condition", nd.rayleigh.condition},
                   {"negative_direction_found", nd.profile.has_value()},
                   {"minimizer_coefficients", std::move(coeffs)},
                   {"spectrum", std::move(spectrum)}};
    Json sens = Json::array();
    std::vector<double> cutoffs = {c.spline_inner, 0.02, 0.05};
    cutoffs.erase(std::unique(cutoffs.begin(), cutoffs.end()), cutoffs.end());
    for (double inner : cutoffs) {
      const auto s = find_negative_direction(c.m, c.ell, c.basis_size, inner, spec);
      sens.push_back({{"inner", inner}, {"min_rayleigh", s.rayleigh.minimum}});
    }
    pencil["cutoff_sensitivity"] = std::move(sens);
    r.doc["equivariant_hessian"] = std::move(pencil);
    if (nd.profile && cell.verdict.kind == VerdictKind::ProperStrictlyStable) r.code = kViolation;
  } else {
    r.doc["equivariant_hessian"] = {{"skipped", "no proper biharmonic angle"}};
  }
  const RayleighResult suff = sufficient_rayleigh_minimum(c.m, c.ell, c.basis_size, c.spline_inner, spec);
  const double margin = c.m * c.m / 4.0 - 3.0 * angle_numerator(c.m, c.ell);
  r.doc["sufficient_form"] = {{"functional", "int |Lap eta|^2 - 3K int |d eta|^2 / r^2"},
                              {"normalization", "int |d eta|^2 / r^2"},
                              {"min_rayleigh", suff.minimum},
                              {"analytic_margin", margin},
                              {"condition", suff.condition}};
  r.doc["note"] =
      "a positive minimum is evidence on the searched spline family only; strict stability follows from the "
      "analytic margin";
  return r;
}

Report cmd_threshold(const RunConfig& c) {
  if (c.ell_max < 1) throw ConfigError("--ell-max must be positive");
  Report r;
  r.doc["command"] = "threshold";
  r.doc["ell_max"] = c.ell_max;
  r.header = {"ell", "threshold", "margin_threshold", "agree", "analytic_margin"};
  Json rows = Json::array();
  for (int ell = 1; ell <= c.ell_max; ++ell) {
    const int t = threshold(ell), mt = margin_threshold(ell);
    const double analytic = t * t / 4.0 - 3.0 * angle_numerator(t, ell);
    rows.push_back({{"ell", ell},
                    {"threshold", t},
                    {"margin_threshold", mt},
                    {"agree", t == mt},
                    {"threshold_exceeds_ell", t > ell},
                    {"quadratic_margin", quadratic_margin(t, ell)},
                    {"analytic_margin", analytic}});
    r.rows.push_back({std::to_string(ell), std::to_string(t), std::to_string(mt), t == mt ? "true" : "false",
                      num(analytic)});
    if (t != mt) r.code = kViolation;
  }
  r.doc["thresholds"] = std::move(rows);
  return r;
}

const std::map<std::string, std::function<Report(const RunConfig&)>>& dispatch() {
  static const std::map<std::string, std::function<Report(const RunConfig&)>> table = {
      {"atlas", cmd_atlas},       {"alpha", cmd_alpha},   {"verify-identities", cmd_verify},
      {"sobolev", cmd_sobolev},   {"residual", cmd_residual}, {"hessian", cmd_hessian},
      {"hardy", cmd_hardy},       {"search-instability", cmd_search}, {"threshold", cmd_threshold}};
  return table;
}

void validate(const RunConfig& c) {
  if (!dispatch().count(c.command)) throw ConfigError("unknown command '" + c.command + "'");
  if (c.radial_nodes < 2) throw ConfigError("--radial-nodes must be at least 2");
  if (c.mc_samples < 2) throw ConfigError("--mc-samples must be at least 2");
  if (c.basis_size < 1) throw ConfigError("--basis-size must be positive");
  if (!(c.annulus_inner > 0 && c.annulus_inner < 0.5)) throw ConfigError("--annulus-inner must lie in (0, 0.5)");
  if (!(c.spline_inner > 0 && c.spline_inner < 1)) throw ConfigError("--spline-inner must lie in (0, 1)");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

void write_csv(const Report& r, std::ostream& out) {
  auto line = [&](const std::vector<std::string>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << csv_field(v[i]);
    out << '\n';
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
}

void write_human(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      out << pad << key << ":\n";
      write_human(v, out, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& e : v) {
        out << pad << "  -\n";
        write_human(e, out, indent + 4);
      }
    } else {
      out << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"atlas",   "alpha",  "verify-identities", "sobolev",
                                                  "residual", "hessian", "hardy", "search-instability",
                                                  "threshold"};
  return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    validate(config);
    report = dispatch().at(config.command)(config);
  } catch (const ConfigError& e) {
    err << "invalid config: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const Infeasible& e) {
    err << "outside feasibility envelope: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "invalid config: " << e.what() << '\n';
    return kInvalidConfig;
  }

  std::ofstream file;
  if (config.output_path) {
    file.open(*config.output_path, std::ios::binary);
    if (!file) {
      err << "invalid config: cannot write " << *config.output_path << '\n';
      return kInvalidConfig;
    }
  }
  std::ostream& sink = config.output_path ? file : out;
  switch (config.format) {
    case Format::Json: sink << report.doc.dump(2) << '\n'; break;
    case Format::Csv: write_csv(report, sink); break;
    case Format::Human: write_human(report.doc, sink, 0); break;
  }
  if (report.code == kViolation) err << "verification failed; see report\n";
  return report.code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numerical checks for deformed generalized radial projections"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json";
  std::string output;
  const std::map<std::string, Format> formats = {{"json", Format::Json}, {"csv", Format::Csv}, {"human", Format::Human}};

  for (const auto& name : commands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--m", cfg.m, "domain dimension");
    sub->add_option("--ell", cfg.ell, "polynomial degree of u");
    sub->add_option("--m-max", cfg.m_max, "atlas: largest m");
    sub->add_option("--ell-max", cfg.ell_max, "atlas, threshold: largest ell");
    sub->add_option("--k-max", cfg.k_max, "verify-identities: highest Laplacian power");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--radial-nodes", cfg.radial_nodes, "Gauss nodes per radial panel");
    sub->add_option("--mc-samples", cfg.mc_samples, "Monte Carlo samples");
    sub->add_option("--basis-size", cfg.basis_size, "radial spline basis size");
    sub->add_option("--annulus-inner", cfg.annulus_inner, "Monte Carlo annulus (a, 1 - a)");
    sub->add_option("--spline-inner", cfg.spline_inner, "inner cutoff of the spline knots");
    sub->add_option("--format", format, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));
    sub->add_option("--out", output, "write the report here");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidConfig;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = formats.at(format);
  if (!output.empty()) cfg.output_path = output;
  return run(cfg, out, err);
}

}  // namespace biharm::cli
