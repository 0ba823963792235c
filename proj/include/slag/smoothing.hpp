#pragma once

// Dual graphs of immersed sL configurations, the topological smoothing
// criterion B A = c with A > 0, Joyce's criterion along the attractor flow,
// and connected-sum Betti numbers.

#include "slag/flow.hpp"
#include "slag/rational_lp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slag {

struct Component {
  std::string label;
  HomologyClass charge;
  int b1 = 0;
};

/// A type-1 transverse point with p+ on component `tail` and p- on `head`.
struct Intersection {
  std::string label;
  int tail = 0;
  int head = 0;
};

struct SLConfiguration {
  std::vector<Component> components;
  std::vector<Intersection> intersections;

  void validate() const;  // throws std::invalid_argument
  HomologyClass total_charge() const;
};

struct DualGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // (tail, head)

  /// B[j][e] = +1 if j is the tail of e, -1 if the head, 0 otherwise (self-loops 0).
  std::vector<std::vector<int>> incidence() const;
};

DualGraph dual_graph(const SLConfiguration& config);

/// c_j = <Gamma_j, Gamma> with Gamma = sum of the component classes.
std::vector<long> criterion_rhs(const SLConfiguration& config);

struct NeckAssignment {
  std::vector<lp::Rational> exact;
  std::vector<double> values;
  lp::Rational min_slack;  // min_e A_e of the returned point
};

/// Decides whether B A = c has a solution with A > 0. The first exact LP
/// maximizes the common slack s <= 1 with A_e >= s; the second fixes s at its
/// optimum and minimizes sum A. For c = 0 this returns the point normalized
/// to min A = 1. Throws std::invalid_argument when sum c != 0 or sizes mismatch.
std::optional<NeckAssignment> topological_criterion_solve(const DualGraph& g, const std::vector<long>& c);

/// residual_j = Im(e^{-i alpha_Gamma} Z_{Gamma_j}) - t^3 (B A)_j.
std::vector<double> joyce_criterion_residual(const ModuliPoint& m, double t, const std::vector<double>& a,
                                             const SLConfiguration& config, double vol_y = 1.0);

/// t in (0, eps] and s_dist <= C t^{kappa + 3/2}.
bool admissible_check(double s_dist, double t, double eps, double kappa, double c);

enum class LiftStatus { AtWall, Lifted, Decay };

std::string to_string(LiftStatus s);

struct LiftSample {
  double mu = 0.0;
  double t = 0.0;  // NaN when not lifted
  LiftStatus status = LiftStatus::AtWall;
  double slope = 0.0;  // t^3 / (mu - mu0)
  bool admissible = false;
  double joyce_residual = 0.0;  // max_j |residual_j|
};

struct LiftReport {
  std::vector<LiftSample> samples;
  double slope_limit = 0.0;         // 4 volY / (|Z_Gamma(mu0)| mu0)
  double max_joyce_residual = 0.0;  // over lifted samples
};

/// t(mu) = (-4 volY mu tau(mu))^{1/3} above the wall; below it the lift is
/// refused with status Decay. Throws std::invalid_argument if A does not solve
/// the criterion, the classes do not sum to the trajectory charge, or the
/// trajectory does not start on the wall (anchor_tol).
LiftReport lift_flow(const Trajectory& traj, const SLConfiguration& config, const std::vector<double>& a,
                     double kappa, double c, double eps, double anchor_tol = 1e-9);

struct BettiPair {
  long b0 = 0;
  long b1 = 0;
};

/// b0 = components of the graph, b1 = sum b1_v + |E| - |V| + b0.
BettiPair connected_sum_betti(const DualGraph& g, const std::vector<int>& b1_per_vertex);

long moduli_dimension(long b1_n, long d);

}  // namespace slag
