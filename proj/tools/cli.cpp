#include "cli.hpp"

#include "slag/io.hpp"
#include "slag/necklace.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

namespace slag::cli {

namespace {

namespace fs = std::filesystem;
using io::json;

// A criterion failed; exit 3.
struct CriterionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string config_path;
  std::string out_dir;
  bool json_only = false;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

fs::path output_dir(const Common& c) {
  fs::path dir = ".";
  if (const char* env = std::getenv("SLAGKIT_OUTPUT_DIR"); env && *env) dir = env;
  if (!c.out_dir.empty()) dir = c.out_dir;
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << text;
}

void require_finite(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + " must be finite");
}

ModuliPoint point_from_flat(const std::vector<double>& v) {
  if (v.size() != 6) throw std::invalid_argument("--tau takes six numbers: re1 im1 re2 im2 re3 im3");
  require_finite(v, "--tau");
  return ModuliPoint({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]});
}

HomologyClass class_from_flat(const std::vector<long>& v) {
  if (v.size() != static_cast<std::size_t>(kBasisSize)) throw std::invalid_argument("--class takes 20 integers");
  HomologyClass::Coeffs c{};
  std::copy(v.begin(), v.end(), c.begin());
  return HomologyClass(c);
}

HomologyClass necklace_total() {
  const auto cls = necklace_classes();
  return cls[0] + cls[1] + cls[2];
}

// Flow inputs shared by flow and split-flow.
struct FlowArgs {
  std::vector<double> tau;
  std::vector<double> wall;  // t1, t2 on the necklace wall
  std::vector<long> charge;
  double vol = 1.0;
  double mu0 = 1.0;
  std::optional<double> mu_end;
  double step = 1e-3;
  double tol = 1e-6;
};

void add_flow_options(CLI::App* sub, FlowArgs& f, Common& c) {
  sub->add_option("--config", c.config_path, "JSON run configuration");
  sub->add_option("--tau", f.tau, "moduli point: re1 im1 re2 im2 re3 im3")->expected(6);
  sub->add_option("--wall", f.wall, "necklace wall point from t1, t2: re1 im1 re2 im2")->expected(4);
  sub->add_option("--class", f.charge, "20 integer coefficients of Gamma")->expected(kBasisSize);
  sub->add_option("--vol", f.vol, "volY")->check(CLI::PositiveNumber);
  sub->add_option("--mu0", f.mu0, "starting mu")->check(CLI::PositiveNumber);
  sub->add_option("--mu-end", f.mu_end, "final mu (default 2 mu0)");
  sub->add_option("--step", f.step, "step in log mu");
  sub->add_option("--tol", f.tol, "residual tolerance");
  sub->add_option("--out-dir", c.out_dir, "output directory");
}

struct FlowInputs {
  ModuliPoint m;
  HomologyClass charge;
};

FlowInputs resolve_flow(FlowArgs& f, const Common& c) {
  std::optional<ModuliPoint> m;
  std::optional<HomologyClass> charge;
  if (!c.config_path.empty()) {
    const json j = load_json(c.config_path);
    if (j.contains("tau")) m = io::moduli_from_json(j.at("tau"));
    if (j.contains("class")) charge = io::class_from_json(j.at("class"));
    f.vol = j.value("volY", f.vol);
    f.mu0 = j.value("mu0", f.mu0);
    if (j.contains("mu_end")) f.mu_end = j.at("mu_end").get<double>();
    f.step = j.value("step", f.step);
    f.tol = j.value("tol", f.tol);
  }
  if (!f.tau.empty()) m = point_from_flat(f.tau);
  if (!f.wall.empty()) {
    require_finite(f.wall, "--wall");
    m = necklace_wall_point({f.wall[0], f.wall[1]}, {f.wall[2], f.wall[3]});
  }
  if (!f.charge.empty()) charge = class_from_flat(f.charge);
  if (!std::isfinite(f.vol) || !(f.vol > 0)) throw std::invalid_argument("volY must be positive");
  if (!std::isfinite(f.step) || !(f.step > 0)) throw std::invalid_argument("step must be positive");
  if (!std::isfinite(f.mu0) || !(f.mu0 > 0)) throw std::invalid_argument("mu0 must be positive");
  if (f.mu_end && (!std::isfinite(*f.mu_end) || !(*f.mu_end > 0))) throw std::invalid_argument("mu_end must be positive");
  return {m.value_or(necklace_symmetric_point()), charge.value_or(necklace_total())};
}

int cmd_flow(FlowArgs& f, const Common& c, std::ostream& out) {
  const FlowInputs in = resolve_flow(f, c);
  const double mu_end = f.mu_end.value_or(2.0 * f.mu0);
  const Trajectory traj = integrate({f.mu0, in.m}, in.charge, f.vol, mu_end, f.step);
  const LinearityReport lin = verify_linearity(traj);
  const double obstruction = charge_obstruction(traj);

  const fs::path dir = output_dir(c);
  std::ostringstream csv;
  io::write_trajectory_csv(csv, traj, lin.per_sample);
  write_file(dir / "flow.csv", csv.str());

  json rep = io::to_json(traj);
  rep["max_residual"] = lin.max_residual;
  rep["charge_obstruction"] = obstruction;
  rep["tolerance"] = f.tol;
  rep["step"] = f.step;
  write_file(dir / "flow.json", rep.dump(2) + "\n");
  out << rep.dump(2) << '\n';

  if (traj.status != FlowStatus::Completed) return kNonConvergence;
  return lin.max_residual <= f.tol ? kOk : kCriterionFailure;
}

int cmd_split_flow(FlowArgs& f, const Common& c, const std::string& parts_path, double span, std::ostream& out) {
  const FlowInputs in = resolve_flow(f, c);
  std::vector<HomologyClass> parts;
  if (!parts_path.empty()) {
    for (const auto& p : load_json(parts_path)) parts.push_back(io::class_from_json(p));
  } else if (!c.config_path.empty() && load_json(c.config_path).contains("parts")) {
    for (const auto& p : load_json(c.config_path).at("parts")) parts.push_back(io::class_from_json(p));
  } else {
    const auto cls = necklace_classes();
    parts.assign(cls.begin(), cls.end());
  }
  const SplitFlowNode tree = split_flow({f.mu0, in.m}, in.charge, parts, f.vol, span, f.step);
  const json rep = io::to_json(tree);
  write_file(output_dir(c) / "split_flow.json", rep.dump(2) + "\n");
  out << rep.dump(2) << '\n';
  bool complete = tree.trajectory.status == FlowStatus::Completed;
  for (const auto& ch : tree.children) complete = complete && ch.trajectory.status == FlowStatus::Completed;
  return complete ? kOk : kNonConvergence;
}

int cmd_angles(const Common& c, const std::vector<double>& p_phases, const std::vector<double>& q_phases,
               std::ostream& out) {
  std::optional<SLPlane> p, q;
  if (!c.config_path.empty()) {
    const json j = load_json(c.config_path);
    p = io::plane_from_json(j.at("P"));
    q = io::plane_from_json(j.at("Q"));
  }
  if (!p_phases.empty()) p = plane_from_phases(p_phases);
  if (!q_phases.empty()) q = plane_from_phases(q_phases);
  if (!p || !q) throw std::invalid_argument("two planes are required (--config or --p/--q)");
  const AngleSpectrum s = characteristic_angles(*p, *q);
  json rep = io::to_json(s);
  if (p->dim() == 3) rep["sign"] = oriented_intersection_sign(*p, *q);
  out << rep.dump(2) << '\n';
  return kOk;
}

int cmd_neck(const Common& c, const std::vector<double>& a, const std::vector<double>& phi,
             std::optional<double> area, int samples, double ymax, std::ostream& out) {
  NeckModuli mod;
  json rep;
  if (!a.empty()) {
    require_finite(a, "--a");
    mod.a = a;
    rep = io::to_json(invariants_from_moduli(mod));
    rep["a"] = a;
  } else if (!phi.empty()) {
    if (!area) throw std::invalid_argument("--phi needs --A");
    require_finite(phi, "--phi");
    mod = moduli_from_invariants({phi, *area});
    rep = io::to_json(invariants_from_moduli(mod));
    rep["a"] = mod.a;
  } else {
    throw std::invalid_argument("give --a or --phi with --A");
  }
  if (samples > 0) {
    if (!(ymax > 0) || !std::isfinite(ymax)) throw std::invalid_argument("--ymax must be positive");
    std::ostringstream csv;
    const int m = mod.dim();
    csv << "y,x_index";
    for (int k = 1; k <= m; ++k) csv << ",re_z" << k << ",im_z" << k;
    csv << '\n';
    for (int i = 0; i < samples; ++i) {
      const double y = samples == 1 ? 0.0 : -ymax + 2 * ymax * i / (samples - 1);
      for (int k = 0; k < m; ++k) {
        std::vector<double> x(static_cast<std::size_t>(m), 0.0);
        x[static_cast<std::size_t>(k)] = 1.0;
        const auto z = neck_point(mod, y, x);
        csv << io::format_double(y) << ',' << k;
        for (const auto& v : z) csv << ',' << io::format_double(v.real()) << ',' << io::format_double(v.imag());
        csv << '\n';
      }
    }
    write_file(output_dir(c) / "neck.csv", csv.str());
  }
  out << rep.dump(2) << '\n';
  return kOk;
}

SLConfiguration load_configuration(const Common& c) {
  if (c.config_path.empty()) return necklace_configuration();
  const json j = load_json(c.config_path);
  return io::configuration_from_json(j.contains("configuration") ? j.at("configuration") : j);
}

int cmd_smooth(const Common& c, std::ostream& out) {
  const SLConfiguration config = load_configuration(c);
  const DualGraph g = dual_graph(config);
  const auto rhs = criterion_rhs(config);
  const auto sol = topological_criterion_solve(g, rhs);
  json rep = {{"c", rhs}, {"feasible", sol.has_value()}};
  if (sol) rep["assignment"] = io::to_json(*sol);
  out << rep.dump(2) << '\n';
  return sol ? kOk : kCriterionFailure;
}

int cmd_betti(const Common& c, std::optional<long> d, std::ostream& out) {
  const SLConfiguration config = load_configuration(c);
  std::vector<int> b1;
  for (const auto& comp : config.components) b1.push_back(comp.b1);
  const BettiPair bp = connected_sum_betti(dual_graph(config), b1);
  json rep = {{"b0", bp.b0}, {"b1", bp.b1}};
  if (d) rep["moduli_dimension"] = moduli_dimension(bp.b1, *d);
  out << rep.dump(2) << '\n';
  return kOk;
}

int cmd_kappa(const Common& c, int m, std::optional<double> target, std::optional<double> tau,
              const std::vector<double>& mu, std::ostream& out) {
  json rep = {{"m", m}};
  int code = kOk;
  std::optional<GluingRates> rates;
  if (!c.config_path.empty()) rates = io::rates_from_json(load_json(c.config_path));
  if (tau) {
    GluingRates r;
    r.m = m;
    r.tau = *tau;
    r.mu = mu.empty() ? std::vector<double>{2.5} : mu;
    r.lambda.assign(r.mu.size(), 2.0 - m);
    r.validate();
    rates = r;
  }
  if (rates) {
    const auto w = kappa_window(*rates);
    rep["rates"] = io::to_json(*rates);
    rep["raw_bounds"] = raw_kappa_bounds(*rates);
    if (w) {
      rep["window"] = {{"lower", w->lower}, {"upper", w->upper}, {"binding", w->binding}};
    } else {
      rep["window"] = nullptr;
    }
  }
  if (target) {
    const KappaSearch s = find_rates_for_kappa(m, *target);
    rep["target"] = *target;
    rep["supremum_found"] = s.best_kappa_max;
    rep["found"] = s.rates.has_value();
    if (s.rates) {
      rep["search_rates"] = io::to_json(*s.rates);
      rep["search_window_upper"] = raw_kappa_max(*s.rates);
    } else {
      code = kCriterionFailure;
    }
  }
  if (!rates && !target) throw std::invalid_argument("give --target, --tau or --config");
  out << rep.dump(2) << '\n';
  return code;
}

int cmd_necklace_demo(const Common& c, const std::vector<double>& tau, double vol, std::ostream& out) {
  const ModuliPoint m = tau.empty() ? necklace_symmetric_point() : point_from_flat(tau);
  const NecklaceCertificate cert = necklace_certificate(m, vol);
  const json rep = cert.to_json();
  if (c.json_only) {
    out << rep.dump(2) << '\n';
  } else {
    for (const auto& ch : cert.checks) out << (ch.passed ? "PASS " : "FAIL ") << ch.name << "  " << ch.detail.dump() << '\n';
  }
  write_file(output_dir(c) / "necklace_certificate.json", rep.dump(2) + "\n");
  if (!cert.passed()) {
    std::string failed;
    for (const auto& ch : cert.checks)
      if (!ch.passed) failed += (failed.empty() ? "" : ", ") + ch.name;
    throw CriterionFailure("necklace check failed: " + failed);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"slagkit: central charges, attractor flows and smoothing of sL configurations"};
  app.require_subcommand(1);

  Common common;
  FlowArgs flow_args;

  auto* flow = app.add_subcommand("flow", "integrate the attractor flow and check the closed form");
  add_flow_options(flow, flow_args, common);

  auto* split = app.add_subcommand("split-flow", "split attractor flow tree at a wall point");
  add_flow_options(split, flow_args, common);
  std::string parts_path;
  double span = 0.5;
  split->add_option("--parts", parts_path, "JSON array of part classes");
  split->add_option("--span", span, "mu span on each side of the wall")->check(CLI::PositiveNumber);

  auto* angles = app.add_subcommand("angles", "characteristic angles and intersection sign");
  std::vector<double> p_phases, q_phases;
  angles->add_option("--config", common.config_path, "JSON with frames P and Q");
  angles->add_option("--p", p_phases, "phases of a diagonal plane P");
  angles->add_option("--q", q_phases, "phases of a diagonal plane Q");

  auto* neck = app.add_subcommand("neck", "Lawlor neck invariants, inverse map and samples");
  std::vector<double> neck_a, neck_phi;
  std::optional<double> neck_area;
  int samples = 0;
  double ymax = 5.0;
  neck->add_option("--a", neck_a, "moduli a_1..a_m");
  neck->add_option("--phi", neck_phi, "angles phi_1..phi_m");
  neck->add_option("--A", neck_area, "neck size A");
  neck->add_option("--samples", samples, "number of y samples written to neck.csv")->check(CLI::NonNegativeNumber);
  neck->add_option("--ymax", ymax, "sample range |y| <= ymax");
  neck->add_option("--out-dir", common.out_dir, "output directory");

  auto* smooth = app.add_subcommand("smooth", "topological smoothing criterion");
  smooth->add_option("--config", common.config_path, "configuration JSON (default: necklace)");

  auto* betti = app.add_subcommand("betti", "connected-sum Betti numbers");
  std::optional<long> family_dim;
  betti->add_option("--config", common.config_path, "configuration JSON (default: necklace)");
  betti->add_option("--d", family_dim, "family dimension for the moduli count")->check(CLI::NonNegativeNumber);

  auto* kappa = app.add_subcommand("kappa", "gluing-rate window");
  int m = 3;
  std::optional<double> target, tau;
  std::vector<double> mu;
  kappa->add_option("--m", m, "dimension")->check(CLI::Range(3, 1000));
  kappa->add_option("--target", target, "kappa to realize (> 1)");
  kappa->add_option("--tau", tau, "tau for a direct window evaluation");
  kappa->add_option("--mu", mu, "rates mu_i in (2, 3)");
  kappa->add_option("--config", common.config_path, "GluingRates JSON");

  auto* demo = app.add_subcommand("necklace-demo", "full check of the three-torus necklace");
  std::vector<double> demo_tau;
  double demo_vol = 1.0;
  demo->add_option("--tau", demo_tau, "moduli point: re1 im1 re2 im2 re3 im3")->expected(6);
  demo->add_option("--vol", demo_vol, "volY")->check(CLI::PositiveNumber);
  demo->add_flag("--json", common.json_only, "print the JSON certificate");
  demo->add_option("--out-dir", common.out_dir, "output directory");

  std::vector<std::string> argv_store{"slagkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    if (flow->parsed()) return cmd_flow(flow_args, common, out);
    if (split->parsed()) return cmd_split_flow(flow_args, common, parts_path, span, out);
    if (angles->parsed()) return cmd_angles(common, p_phases, q_phases, out);
    if (neck->parsed()) return cmd_neck(common, neck_a, neck_phi, neck_area, samples, ymax, out);
    if (smooth->parsed()) return cmd_smooth(common, out);
    if (betti->parsed()) return cmd_betti(common, family_dim, out);
    if (kappa->parsed()) return cmd_kappa(common, m, target, tau, mu, out);
    if (demo->parsed()) return cmd_necklace_demo(common, demo_tau, demo_vol, out);
  } catch (const CriterionFailure& e) {
    err << e.what() << '\n';
    return kCriterionFailure;
  } catch (const NonConvergenceError& e) {
    err << "non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const QuadratureError& e) {
    err << "non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const NonTransverseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "malformed input: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace slag::cli
