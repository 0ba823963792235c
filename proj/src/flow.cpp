#include "slag/flow.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

namespace slag {

namespace {

struct State {
  std::array<cplx, 3> tau;
  double t = 0.0;  // tau(mu)
};

State axpy(const State& y, double h, const State& k) {
  State r;
  for (std::size_t a = 0; a < 3; ++a) r.tau[a] = y.tau[a] + h * k.tau[a];
  r.t = y.t + h * k.t;
  return r;
}

cplx holomorphic_charge(const PeriodVector& p, const HomologyClass& charge) {
  cplx w{};
  for (int i = 0; i < kBasisSize; ++i) w += static_cast<double>(charge[i]) * p[static_cast<std::size_t>(i)];
  return w;
}

double wrap(double x) {
  constexpr double pi = std::numbers::pi;
  while (x > pi) x -= 2 * pi;
  while (x <= -pi) x += 2 * pi;
  return x;
}

FlowSample make_sample(double mu, const ModuliPoint& m, double tau, const HomologyClass& charge, double vol_y) {
  const cplx z = central_charge(m, charge, vol_y);
  return {mu, m, z, std::arg(z), tau};
}

}  // namespace

std::string to_string(FlowStatus s) {
  switch (s) {
    case FlowStatus::Completed: return "completed";
    case FlowStatus::ZeroCentralCharge: return "zero_central_charge";
    case FlowStatus::LeftUpperHalfPlane: return "left_upper_half_plane";
  }
  return "unknown";
}

std::array<cplx, 3> flow_rhs(const ModuliPoint& m, const HomologyClass& charge, double vol_y, double zero_tol) {
  const PeriodVector p = holomorphic_periods(m);
  const cplx w = holomorphic_charge(p, charge);
  const double scale = std::exp(0.5 * kahler_potential(m, vol_y));
  if (std::abs(w) * scale < zero_tol) throw ZeroCentralChargeError("central charge vanishes on the flow");
  const auto dk = kahler_gradient(m);
  const Eigen::Matrix3cd h = wp_metric(m).transpose().inverse();
  std::array<cplx, 3> grad;  // d/dtaubar_b log|Z|^2
  for (int b = 0; b < 3; ++b) {
    const cplx dw = holomorphic_charge(period_derivative(m, b), charge);
    grad[static_cast<std::size_t>(b)] = std::conj(dk[static_cast<std::size_t>(b)]) + std::conj(dw / w);
  }
  std::array<cplx, 3> v{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) v[static_cast<std::size_t>(a)] += h(a, b) * grad[static_cast<std::size_t>(b)];
  return v;
}

Trajectory integrate(const FlowState& start, const HomologyClass& charge, double vol_y, double mu_end,
                     double step_log_mu, double z_floor) {
  if (!(step_log_mu > 0.0) || !std::isfinite(step_log_mu)) throw std::invalid_argument("step must be positive");
  if (!(start.mu > 0.0) || !(mu_end > 0.0)) throw std::invalid_argument("mu must be positive");

  Trajectory traj;
  traj.charge = charge;
  traj.vol_y = vol_y;
  traj.samples.push_back(make_sample(start.mu, start.m, 0.0, charge, vol_y));
  if (std::abs(traj.samples.back().z) < z_floor) throw ZeroCentralChargeError("degenerate start: Z vanishes");

  const double u0 = std::log(start.mu);
  const double u1 = std::log(mu_end);
  const double dir = u1 >= u0 ? 1.0 : -1.0;
  const double span = std::abs(u1 - u0);
  const auto nsteps = static_cast<long>(std::ceil(span / step_log_mu - 1e-9));

  // Stage evaluation; on failure records why and returns nullopt.
  FlowStatus fail = FlowStatus::Completed;
  auto deriv = [&](double u, const State& y) -> std::optional<State> {
    if (!ModuliPoint::is_valid(y.tau)) {
      fail = FlowStatus::LeftUpperHalfPlane;
      return std::nullopt;
    }
    const ModuliPoint m(y.tau);
    const cplx z = central_charge(m, charge, vol_y);
    if (std::abs(z) < z_floor) {
      fail = FlowStatus::ZeroCentralCharge;
      return std::nullopt;
    }
    State k;
    k.tau = flow_rhs(m, charge, vol_y, 0.0);
    k.t = -std::exp(-u) / std::abs(z);
    return k;
  };

  State y{start.m.tau(), 0.0};
  double u = u0;
  for (long i = 0; i < nsteps; ++i) {
    const double remaining = span - static_cast<double>(i) * step_log_mu;
    const double h = dir * std::min(step_log_mu, remaining);
    const auto k1 = deriv(u, y);
    const auto k2 = k1 ? deriv(u + h / 2, axpy(y, h / 2, *k1)) : std::nullopt;
    const auto k3 = k2 ? deriv(u + h / 2, axpy(y, h / 2, *k2)) : std::nullopt;
    const auto k4 = k3 ? deriv(u + h, axpy(y, h, *k3)) : std::nullopt;
    if (!k4) {
      traj.status = fail;
      return traj;
    }
    State next;
    for (std::size_t a = 0; a < 3; ++a)
      next.tau[a] = y.tau[a] + h / 6 * (k1->tau[a] + 2.0 * k2->tau[a] + 2.0 * k3->tau[a] + k4->tau[a]);
    next.t = y.t + h / 6 * (k1->t + 2 * k2->t + 2 * k3->t + k4->t);
    if (!ModuliPoint::is_valid(next.tau)) {
      traj.status = FlowStatus::LeftUpperHalfPlane;
      return traj;
    }
    y = next;
    u = (i + 1 == nsteps) ? u1 : u + h;
    traj.samples.push_back(make_sample(std::exp(u), ModuliPoint(y.tau), y.t, charge, vol_y));
    if (std::abs(traj.samples.back().z) < z_floor) {
      traj.status = FlowStatus::ZeroCentralCharge;
      return traj;
    }
  }
  if (nsteps > 0) traj.samples.back().mu = mu_end;
  return traj;
}

LinearityReport verify_linearity(const Trajectory& traj) {
  LinearityReport rep;
  if (traj.samples.empty()) return rep;
  const auto pair = class_pairing_vector(traj.charge);  // <g, Gamma>
  const FlowSample& s0 = traj.front();
  const PeriodVector p0 = normalized_periods(s0.m, traj.vol_y);
  const cplx rot0 = std::polar(1.0, -s0.alpha);
  for (const FlowSample& s : traj.samples) {
    const PeriodVector p = normalized_periods(s.m, traj.vol_y);
    const cplx rot = std::polar(1.0, -s.alpha);
    const double lin = -4.0 * traj.vol_y * s.mu * s.tau;
    double worst = 0.0;
    for (int g = 0; g < kBasisSize; ++g) {
      const auto ug = static_cast<std::size_t>(g);
      const double lhs = (rot * p[ug]).imag();
      const double rhs = lin * static_cast<double>(pair[ug]) + s.mu / s0.mu * (rot0 * p0[ug]).imag();
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    rep.per_sample.push_back(worst);
    rep.max_residual = std::max(rep.max_residual, worst);
  }
  return rep;
}

double charge_obstruction(const Trajectory& traj) {
  double worst = 0.0;
  for (const FlowSample& s : traj.samples) {
    const PeriodVector p = normalized_periods(s.m, traj.vol_y);
    const cplx rot = std::polar(1.0, -s.alpha);
    double acc = 0.0;
    for (int g = 0; g < kBasisSize; ++g)
      acc += static_cast<double>(traj.charge[g]) * (rot * p[static_cast<std::size_t>(g)]).imag();
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

double wall_phase_gap(const ModuliPoint& m, const HomologyClass& g1, const HomologyClass& g2, double vol_y) {
  return wrap(phase(m, g1, vol_y) - phase(m, g2, vol_y));
}

SplitFlowNode split_flow(const FlowState& wall_state, const HomologyClass& charge,
                         const std::vector<HomologyClass>& parts, double vol_y, double mu_span,
                         double step_log_mu, double wall_tol) {
  if (parts.empty()) throw std::invalid_argument("split flow needs at least one part");
  if (!(mu_span > 0.0)) throw std::invalid_argument("mu_span must be positive");
  HomologyClass total;
  for (const auto& p : parts) total += p;
  if (!(total == charge)) throw std::invalid_argument("parts do not sum to the parent class");

  SplitFlowNode node;
  node.charge = charge;
  node.trajectory = integrate(wall_state, charge, vol_y, wall_state.mu + mu_span, step_log_mu);
  if (parts.size() == 1) return node;

  for (const auto& p : parts) {
    const double gap = wall_phase_gap(wall_state.m, p, charge, vol_y);
    if (std::abs(gap) > wall_tol) {
      std::ostringstream os;
      os << "wall condition violated: phase gap " << gap << " exceeds " << wall_tol;
      throw std::invalid_argument(os.str());
    }
  }
  if (!(wall_state.mu - mu_span > 0.0)) throw std::invalid_argument("mu0 - mu_span must stay positive");
  for (const auto& p : parts) {
    SplitFlowNode child;
    child.charge = p;
    child.trajectory = integrate(wall_state, p, vol_y, wall_state.mu - mu_span, step_log_mu);
    node.children.push_back(std::move(child));
  }
  return node;
}

ModuliPoint necklace_wall_point(cplx t1, cplx t2) {
  const cplx p = -1.0 / (t1 * t2);
  const cplx q = -1.0 / ((t1 - 1.0) * (t2 - 1.0));
  // s p + u q = 1
  Eigen::Matrix2d a;
  a << p.real(), q.real(), p.imag(), q.imag();
  const double det = a.determinant();
  if (std::abs(det) < 1e-14) throw std::invalid_argument("degenerate wall equations");
  const Eigen::Vector2d su = a.inverse() * Eigen::Vector2d(1.0, 0.0);
  if (!(su(0) > 0.0) || !(su(1) > 0.0)) throw std::invalid_argument("no necklace wall point over these t1, t2");
  const cplx t3 = su(0) * p;
  return ModuliPoint(t1, t2, t3);
}

}  // namespace slag
