#include "slag/smoothing.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace slag {

using lp::Rational;

void SLConfiguration::validate() const {
  const auto n = static_cast<int>(components.size());
  for (const auto& c : components)
    if (c.b1 < 0) throw std::invalid_argument("b1 must be nonnegative for component " + c.label);
  for (const auto& x : intersections) {
    if (x.tail < 0 || x.tail >= n || x.head < 0 || x.head >= n) {
      std::ostringstream os;
      os << "intersection " << x.label << " references a missing component (" << x.tail << ", " << x.head << ")";
      throw std::invalid_argument(os.str());
    }
  }
}

HomologyClass SLConfiguration::total_charge() const {
  HomologyClass g;
  for (const auto& c : components) g += c.charge;
  return g;
}

std::vector<std::vector<int>> DualGraph::incidence() const {
  std::vector<std::vector<int>> b(static_cast<std::size_t>(vertices), std::vector<int>(edges.size(), 0));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [t, h] = edges[e];
    if (t == h) continue;
    b[static_cast<std::size_t>(t)][e] += 1;
    b[static_cast<std::size_t>(h)][e] -= 1;
  }
  return b;
}

DualGraph dual_graph(const SLConfiguration& config) {
  config.validate();
  DualGraph g;
  g.vertices = static_cast<int>(config.components.size());
  for (const auto& x : config.intersections) g.edges.emplace_back(x.tail, x.head);
  return g;
}

std::vector<long> criterion_rhs(const SLConfiguration& config) {
  const HomologyClass total = config.total_charge();
  std::vector<long> c;
  for (const auto& comp : config.components) c.push_back(intersection(comp.charge, total));
  return c;
}

std::optional<NeckAssignment> topological_criterion_solve(const DualGraph& g, const std::vector<long>& c) {
  if (c.size() != static_cast<std::size_t>(g.vertices)) throw std::invalid_argument("criterion vector has wrong size");
  if (std::accumulate(c.begin(), c.end(), 0L) != 0) throw std::invalid_argument("criterion vector must sum to zero");

  const std::size_t nv = c.size();
  const std::size_t ne = g.edges.size();
  const auto b = g.incidence();
  if (ne == 0) {
    for (long v : c)
      if (v != 0) return std::nullopt;
    return NeckAssignment{{}, {}, Rational(0)};
  }

  // variables: A (ne), s, w (ne), v
  const std::size_t n = 2 * ne + 2;
  const std::size_t is = ne, iv = 2 * ne + 1;
  lp::Matrix a;
  std::vector<Rational> rhs;
  for (std::size_t j = 0; j < nv; ++j) {
    std::vector<Rational> row(n);
    for (std::size_t e = 0; e < ne; ++e) row[e] = b[j][e];
    a.push_back(row);
    rhs.emplace_back(c[j]);
  }
  for (std::size_t e = 0; e < ne; ++e) {
    std::vector<Rational> row(n);
    row[e] = 1;
    row[is] = -1;
    row[ne + 1 + e] = -1;
    a.push_back(row);
    rhs.emplace_back(0);
  }
  {
    std::vector<Rational> row(n);
    row[is] = 1;
    row[iv] = 1;
    a.push_back(row);
    rhs.emplace_back(1);
  }

  std::vector<Rational> cost(n);
  cost[is] = -1;
  const lp::Result first = lp::minimize(a, rhs, cost);
  if (first.status != lp::Status::Optimal) return std::nullopt;
  const Rational s_star = first.x[is];
  if (s_star <= 0) return std::nullopt;

  // fix s = s*, minimize sum A
  a.back() = std::vector<Rational>(n);
  a.back()[is] = 1;
  rhs.back() = s_star;
  std::vector<Rational> cost2(n);
  for (std::size_t e = 0; e < ne; ++e) cost2[e] = 1;
  const lp::Result second = lp::minimize(a, rhs, cost2);
  if (second.status != lp::Status::Optimal) throw std::logic_error("second smoothing LP failed after a feasible first stage");

  NeckAssignment out;
  out.exact.assign(second.x.begin(), second.x.begin() + static_cast<std::ptrdiff_t>(ne));
  out.min_slack = out.exact.front();
  for (const auto& v : out.exact) {
    out.values.push_back(v.convert_to<double>());
    if (v < out.min_slack) out.min_slack = v;
  }
  // exact check of B A = c
  for (std::size_t j = 0; j < nv; ++j) {
    Rational acc = 0;
    for (std::size_t e = 0; e < ne; ++e) acc += b[j][e] * out.exact[e];
    if (acc != c[j]) throw std::logic_error("smoothing LP returned a point off B A = c");
  }
  return out;
}

std::vector<double> joyce_criterion_residual(const ModuliPoint& m, double t, const std::vector<double>& a,
                                             const SLConfiguration& config, double vol_y) {
  const DualGraph g = dual_graph(config);
  if (a.size() != g.edges.size()) throw std::invalid_argument("neck assignment has wrong size");
  const auto b = g.incidence();
  const double alpha = phase(m, config.total_charge(), vol_y);
  const cplx rot = std::polar(1.0, -alpha);
  const double t3 = t * t * t;
  std::vector<double> res;
  for (std::size_t j = 0; j < config.components.size(); ++j) {
    double ba = 0.0;
    for (std::size_t e = 0; e < a.size(); ++e) ba += b[j][e] * a[e];
    const double lhs = (rot * central_charge(m, config.components[j].charge, vol_y)).imag();
    res.push_back(lhs - t3 * ba);
  }
  return res;
}

bool admissible_check(double s_dist, double t, double eps, double kappa, double c) {
  return t > 0.0 && t <= eps && s_dist <= c * std::pow(t, kappa + 1.5);
}

std::string to_string(LiftStatus s) {
  switch (s) {
    case LiftStatus::AtWall: return "at_wall";
    case LiftStatus::Lifted: return "lifted";
    case LiftStatus::Decay: return "decay";
  }
  return "unknown";
}

LiftReport lift_flow(const Trajectory& traj, const SLConfiguration& config, const std::vector<double>& a,
                     double kappa, double c, double eps, double anchor_tol) {
  if (traj.samples.empty()) throw std::invalid_argument("empty trajectory");
  if (!(config.total_charge() == traj.charge))
    throw std::invalid_argument("component classes do not sum to the flow charge");
  const DualGraph g = dual_graph(config);
  if (a.size() != g.edges.size()) throw std::invalid_argument("neck assignment has wrong size");
  const auto b = g.incidence();
  const auto crit = criterion_rhs(config);
  for (std::size_t j = 0; j < crit.size(); ++j) {
    double ba = 0.0;
    for (std::size_t e = 0; e < a.size(); ++e) ba += b[j][e] * a[e];
    if (std::abs(ba - static_cast<double>(crit[j])) > 1e-9)
      throw std::invalid_argument("neck assignment does not satisfy the topological criterion");
  }
  for (double v : a)
    if (!(v > 0.0)) throw std::invalid_argument("neck assignment must be positive");

  const FlowSample& s0 = traj.front();
  const cplx rot0 = std::polar(1.0, -s0.alpha);
  for (const auto& comp : config.components) {
    const double im = (rot0 * central_charge(s0.m, comp.charge, traj.vol_y)).imag();
    if (std::abs(im) > anchor_tol) {
      std::ostringstream os;
      os << "trajectory is not anchored on the wall (|Im| = " << im << " for " << comp.label << ")";
      throw std::invalid_argument(os.str());
    }
  }

  LiftReport rep;
  rep.slope_limit = 4.0 * traj.vol_y / (std::abs(s0.z) * s0.mu);
  for (const FlowSample& s : traj.samples) {
    LiftSample ls;
    ls.mu = s.mu;
    const double dmu = s.mu - s0.mu;
    if (dmu < 0.0) {
      ls.status = LiftStatus::Decay;
      ls.t = std::numeric_limits<double>::quiet_NaN();
    } else if (dmu == 0.0) {
      ls.status = LiftStatus::AtWall;
      ls.t = 0.0;
    } else {
      const double q = -4.0 * traj.vol_y * s.mu * s.tau;
      ls.status = LiftStatus::Lifted;
      ls.t = std::cbrt(std::max(q, 0.0));
      ls.slope = q / dmu;
      ls.admissible = admissible_check(dmu, ls.t, eps, kappa, c);
      const auto r = joyce_criterion_residual(s.m, ls.t, a, config, traj.vol_y);
      for (double v : r) ls.joyce_residual = std::max(ls.joyce_residual, std::abs(v));
      rep.max_joyce_residual = std::max(rep.max_joyce_residual, ls.joyce_residual);
    }
    rep.samples.push_back(ls);
  }
  return rep;
}

BettiPair connected_sum_betti(const DualGraph& g, const std::vector<int>& b1_per_vertex) {
  if (b1_per_vertex.size() != static_cast<std::size_t>(g.vertices))
    throw std::invalid_argument("b1 list has wrong size");
  std::vector<int> parent(static_cast<std::size_t>(g.vertices));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  long b0 = g.vertices;
  for (const auto& [t, h] : g.edges) {
    const int rt = find(t), rh = find(h);
    if (rt != rh) {
      parent[static_cast<std::size_t>(rt)] = rh;
      --b0;
    }
  }
  long b1 = 0;
  for (int v : b1_per_vertex) b1 += v;
  b1 += static_cast<long>(g.edges.size()) - g.vertices + b0;
  return {b0, b1};
}

long moduli_dimension(long b1_n, long d) {
  if (b1_n < 0 || d < 0) throw std::invalid_argument("dimensions must be nonnegative");
  return d + b1_n;
}

}  // namespace slag
