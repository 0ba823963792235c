#pragma once

// Gamma-attractor flow on the moduli of C_t1 x C_t2 x C_t3.
//
// In u = log mu the flow reads
//   dtau_a/du = g^{a bbar} (dbar_b K + conj(d_b W / W)),   W = sum n_gamma P_gamma,
// i.e. the gradient of log|Z_Gamma|^2, and tau(mu) obeys dtau/du = -1/(mu |Z_Gamma|).
// Both are advanced together by classical RK4 with a fixed step in u.

#include "slag/moduli.hpp"

#include <array>
#include <string>
#include <vector>

namespace slag {

struct FlowState {
  double mu = 1.0;
  ModuliPoint m;
};

enum class FlowStatus { Completed, ZeroCentralCharge, LeftUpperHalfPlane };

std::string to_string(FlowStatus s);

struct FlowSample {
  double mu = 0.0;
  ModuliPoint m;
  cplx z;              // Z_Gamma
  double alpha = 0.0;  // Arg Z_Gamma
  double tau = 0.0;    // tau(mu), zero at the start
};

struct Trajectory {
  HomologyClass charge;
  double vol_y = 1.0;
  std::vector<FlowSample> samples;
  FlowStatus status = FlowStatus::Completed;

  double mu0() const { return samples.front().mu; }
  const FlowSample& front() const { return samples.front(); }
  const FlowSample& back() const { return samples.back(); }
};

/// dtau_a / d log mu. Throws ZeroCentralChargeError when |Z_Gamma| < zero_tol.
std::array<cplx, 3> flow_rhs(const ModuliPoint& m, const HomologyClass& charge, double vol_y = 1.0,
                             double zero_tol = 1e-10);

/// Integrates from start.mu to mu_end (either direction) with |du| = step_log_mu,
/// shortening the last step. Stops early, recording the status, if |Z| drops
/// below z_floor or a stage leaves the upper half-plane.
Trajectory integrate(const FlowState& start, const HomologyClass& charge, double vol_y, double mu_end,
                     double step_log_mu, double z_floor = 1e-10);

struct LinearityReport {
  double max_residual = 0.0;
  std::vector<double> per_sample;  // max over the 20 basis classes
};

/// Residual of
///   Im(e^{-i a(mu)} Z_g(mu)) = -4 volY mu tau(mu) <g,Gamma> + (mu/mu0) Im(e^{-i a(mu0)} Z_g(mu0))
/// over every basis class g and every sample. The law can only hold when Gamma
/// is supported on the (1,1,1) block, where the periods of Omega live.
LinearityReport verify_linearity(const Trajectory& traj);

/// max over samples of |sum_g n_g Im(e^{-i a} Z_g)|, i.e. [Im(e^{-i a} Omega)].Gamma.
double charge_obstruction(const Trajectory& traj);

/// alpha_{G1} - alpha_{G2} wrapped to (-pi, pi].
double wall_phase_gap(const ModuliPoint& m, const HomologyClass& g1, const HomologyClass& g2, double vol_y = 1.0);

struct SplitFlowNode {
  HomologyClass charge;
  Trajectory trajectory;
  std::vector<SplitFlowNode> children;
};

/// The Gamma-flow runs on [mu0, mu0 + mu_span]; each part flows from the wall
/// point down to mu0 - mu_span. With parts == {Gamma} the result is a single node.
SplitFlowNode split_flow(const FlowState& wall_state, const HomologyClass& charge,
                         const std::vector<HomologyClass>& parts, double vol_y, double mu_span,
                         double step_log_mu, double wall_tol = 1e-9);

/// Point of the L1/L2/L3 necklace wall: tau3 = -s/(t1 t2) with s, u > 0 solving
///   -s/(t1 t2) - 1 = u/((t1 - 1)(t2 - 1)).
/// Throws std::invalid_argument when no such point exists for the given t1, t2.
ModuliPoint necklace_wall_point(cplx t1, cplx t2);

}  // namespace slag
