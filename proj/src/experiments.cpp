#include "pwsum/experiments.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pwsum/blaschke.hpp"
#include "pwsum/contours.hpp"
#include "pwsum/diagnostics.hpp"
#include "pwsum/genfun.hpp"

namespace pwsum {

namespace fs = std::filesystem;

Spectrum spectrum_from_config(const Config& cfg) {
  if (cfg.has("spectrum.file")) {
    std::ifstream f(cfg.get("spectrum.file", ""));
    if (!f) throw ConfigError("cannot open spectrum.file");
    return read_spectrum(f);
  }
  FamilyParams p;
  p.delta = cfg.get_double("delta", p.delta);
  p.eps = cfg.get_double("eps", p.eps);
  p.amp = cfg.get_double("amp", p.amp);
  p.points = cfg.get_points("points");
  long count = cfg.get_int("count", 50);
  std::string fam = cfg.get("family", "shifted_integers");
  if (fam == "custom_list" && p.points.empty()) throw ConfigError("custom_list needs points=re:im,...");
  return make_family(fam, p, static_cast<int>(count));
}

PWFunction function_from_config(const Config& cfg) {
  std::string spec = cfg.get("function", "0:0.3:1:0;2.7:0.3:0.5:0");
  std::vector<PWFunction::Atom> atoms;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    for (char& ch : item)
      if (ch == ':') ch = ' ';
    std::istringstream is(item);
    double a, b, c, d;
    if (!(is >> a >> b >> c >> d)) throw ConfigError("function atoms must look like mu_re:mu_im:c_re:c_im");
    atoms.push_back({{a, b}, {c, d}});
  }
  if (atoms.empty()) throw ConfigError("function has no atoms");
  return PWFunction(std::move(atoms));
}

std::vector<SchemeKind> schemes_from_config(const Config& cfg) {
  std::string s = cfg.get("scheme", "all");
  if (s == "all") return {SchemeKind::naive, SchemeKind::projection, SchemeKind::universal};
  std::vector<SchemeKind> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_scheme(item));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  return out;
}

namespace {

ScheduleOptions schedule_options(const Config& cfg) {
  ScheduleOptions o;
  o.ratio = cfg.get_double("l.ratio", o.ratio);
  o.safety = cfg.get_double("alpha.safety", o.safety);
  o.c_grid = static_cast<int>(cfg.get_int("c.grid", o.c_grid));
  return o;
}

double data_radius(const Spectrum& s) { return s.family().lattice() ? s.radius() : 4.0 * s.radius(); }

}  // namespace

WeightScheme scheme_from_config(SchemeKind kind, const Spectrum& s, const Config& cfg) {
  if (kind == SchemeKind::universal) {
    auto cand = default_candidates(cfg.get_double("l.min", 1.0), cfg.get_double("l.max", data_radius(s)));
    int count = static_cast<int>(cfg.get_int("contours.count", 4));
    return WeightScheme::universal(s, cand, count, schedule_options(cfg));
  }
  auto radii = cfg.get_list("schedule", {5.5, 10.5, 20.5, 40.5});
  return kind == SchemeKind::naive ? WeightScheme::naive(s, radii) : WeightScheme::projection(s, radii);
}

namespace {

fs::path output_dir(const Config& cfg) {
  fs::path d = cfg.get("output.dir", "out");
  fs::create_directories(d);
  return d;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  return f;
}

GridFunction grid_from_config(const Config& cfg) {
  try {
    return GridFunction(cfg.get_double("grid.X", 60.0), cfg.get_double("grid.h", 0.01));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void run_diagnose(const Config& cfg) {
  Spectrum s = spectrum_from_config(cfg);
  GeneratingFunction g(s);
  const double X = cfg.get_double("diagnose.X", 20.0);
  const double a = cfg.get_double("a2.shift", 0.0);
  const double h = cfg.get_double("a2.h", 0.01);
  std::vector<ReportRow> rows;
  double a1 = a2_estimate(g, X, a, h), a2 = a2_estimate(g, 2 * X, a, h);
  rows.push_back({"a2", X, a1, a2 / a1});
  rows.push_back({"a2", 2 * X, a2, a2 / a1});
  if (s.size() >= 2) {
    double c = carleson_sup(s);
    double half = c;
    if (s.family().lattice() && s.family().count >= 2) {
      FamilyParams p;
      p.delta = s.family().delta;
      p.eps = p.amp = s.family().amp;
      half = carleson_sup(make_family(s.family().family, p, s.family().count / 2));
    }
    rows.push_back({"carleson", s.radius(), c, c / half});
  }
  IntGReport r = intG_check(g, X, h);
  rows.push_back({"intG_pos", X, r.pos, r.pos_trend()});
  rows.push_back({"intG_neg", X, r.neg, r.neg_trend()});
  auto f = open_out(output_dir(cfg) / "report.csv");
  write_report_csv(f, rows);
}

void run_weights(const Config& cfg) {
  Spectrum s = spectrum_from_config(cfg);
  auto kinds = schemes_from_config(cfg);
  fs::path dir = output_dir(cfg);
  for (SchemeKind k : kinds) {
    WeightScheme ws = scheme_from_config(k, s, cfg);
    std::string name = kinds.size() == 1 ? "weights.csv" : "weights_" + std::string(scheme_name(k)) + ".csv";
    auto f = open_out(dir / name);
    write_weights_csv(f, ws);
  }
}

void run_converge(const Config& cfg) {
  Spectrum s = spectrum_from_config(cfg);
  GeneratingFunction g(s);
  PWFunction F = function_from_config(cfg);
  GridFunction grid = grid_from_config(cfg);
  LagrangeEngine eng(g, grid);
  GridFunction truth = F.sample(grid);
  auto kc = cfg.get_points("K.center");
  cplx center = kc.empty() ? cplx(0.0) : kc.front();
  double kr = cfg.get_double("K.radius", 3.0);
  auto f = open_out(output_dir(cfg) / "errors.csv");
  f << "n,scheme,l2_error,sup_error_K,tail_bound\n";
  char buf[256];
  for (SchemeKind k : schemes_from_config(cfg)) {
    WeightScheme ws = scheme_from_config(k, s, cfg);
    for (std::size_t n = 0; n < ws.steps(); ++n) {
      double e = l2_error(eng.partial_sum(F, ws, n), truth);
      double sk = compactwise_error(eng, F, ws, n, center, kr);
      double tb = eng.tail_bound(F, ws, n);
      std::snprintf(buf, sizeof buf, "%zu,%s,%.17g,%.17g,%.17g\n", n + 1, std::string(scheme_name(k)).c_str(), e,
                    sk, tb);
      f << buf;
    }
  }
}

void run_compare_norms(const Config& cfg) {
  Spectrum s = spectrum_from_config(cfg);
  GeneratingFunction g(s);
  GridFunction grid = grid_from_config(cfg);
  LagrangeEngine eng(g, grid);
  int trials = static_cast<int>(cfg.get_int("trials", 4));
  auto seed = static_cast<std::uint64_t>(cfg.get_int("seed", 1));
  ProbeOptions po;
  po.atoms = static_cast<int>(cfg.get_int("probe.atoms", po.atoms));
  auto f = open_out(output_dir(cfg) / "norms.csv");
  f << "n,scheme,norm_lower_bound\n";
  char buf[160];
  for (SchemeKind k : schemes_from_config(cfg)) {
    WeightScheme ws = scheme_from_config(k, s, cfg);
    for (std::size_t n = 0; n < ws.steps(); ++n) {
      double v = operator_norm_probe(eng, ws, n, trials, seed, po);
      std::snprintf(buf, sizeof buf, "%zu,%s,%.17g\n", n + 1, std::string(scheme_name(k)).c_str(), v);
      f << buf;
    }
  }
}

void run_contours(const Config& cfg) {
  Spectrum s = spectrum_from_config(cfg);
  WeightScheme ws = scheme_from_config(SchemeKind::universal, s, cfg);
  fs::path dir = output_dir(cfg);
  {
    auto f = open_out(dir / "contours.csv");
    write_schedule_csv(f, ws.upper_schedule());
  }
  if (!ws.lower_schedule().steps.empty()) {
    auto f = open_out(dir / "contours_lower.csv");
    write_schedule_csv(f, ws.lower_schedule());
  }
}

void run_factorize(const Config& cfg) {
  Spectrum s = spectrum_from_config(cfg);
  GeneratingFunction g(s);
  auto [su, sl] = split_halfplanes(s);
  BlaschkeProduct bu(su, Halfplane::upper), bl(sl, Halfplane::lower);
  const double X = cfg.get_double("outer.X", 200.0), h = cfg.get_double("outer.h", 0.01);
  auto pts = cfg.get_points("factorize.points");
  if (pts.empty()) pts = {{1, 1}, {0.5, 2}, {-2, 1.5}, {1, -1}, {-0.5, -2}};
  const double tau = exponential_type(s);
  OuterFunction o = OuterFunction::from(g, X, h);
  OuterFunction o2 = OuterFunction::from(g, X / 2, h);
  FactorizationReport r = check_factorization(g, o, bu, bl, pts, tau);
  FactorizationReport r2 = check_factorization(g, o2, bu, bl, pts, tau);
  auto ratio = [](double a, double b) { return b > 0 ? a / b : 0.0; };
  std::vector<ReportRow> rows = {
      {"factorization_upper", X, r.max_rel_error_upper, ratio(r.max_rel_error_upper, r2.max_rel_error_upper)},
      {"factorization_lower", X, r.max_rel_error_lower, ratio(r.max_rel_error_lower, r2.max_rel_error_lower)}};
  auto f = open_out(output_dir(cfg) / "report.csv");
  write_report_csv(f, rows);
}

}  // namespace

void run_subcommand(const std::string& name, const Config& cfg) {
  if (name == "diagnose") run_diagnose(cfg);
  else if (name == "weights") run_weights(cfg);
  else if (name == "converge") run_converge(cfg);
  else if (name == "compare-norms") run_compare_norms(cfg);
  else if (name == "contours") run_contours(cfg);
  else if (name == "factorize-check") run_factorize(cfg);
  else throw ConfigError("unknown subcommand '" + name + "'");
}

int run_cli(const std::string& config_path, const std::string& subcommand, std::ostream& err) {
  try {
    Config cfg = Config::load(config_path);
    std::string sub = subcommand.empty() ? cfg.get("subcommand", "") : subcommand;
    if (sub.empty()) throw ConfigError("no subcommand given");
    run_subcommand(sub, cfg);
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace pwsum
