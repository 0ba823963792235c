#pragma once

// Periods, Kahler potential, central charges and Weil-Petersson geometry of
// the family Y = C_t1 x C_t2 x C_t3 with Omega0 = dz1 ^ dz2 ^ dz3.
//
// The normalized 3-form is Omega = exp(K/2) Omega0 with
//   K = -log(i int Omega0 ^ conj(Omega0)) + log(8 volY),
// so that i int Omega ^ conj(Omega) = 8 volY. volY is a fixed family constant.

#include "slag/homology.hpp"

#include <Eigen/Core>

#include <array>
#include <complex>
#include <stdexcept>

namespace slag {

using cplx = std::complex<double>;
using PeriodVector = std::array<cplx, kBasisSize>;

class ModuliPoint {
 public:
  ModuliPoint(cplx t1, cplx t2, cplx t3);
  explicit ModuliPoint(const std::array<cplx, 3>& tau) : ModuliPoint(tau[0], tau[1], tau[2]) {}

  const std::array<cplx, 3>& tau() const { return tau_; }
  cplx operator[](int a) const { return tau_[static_cast<std::size_t>(a)]; }

  static bool is_valid(const std::array<cplx, 3>& tau);

 private:
  std::array<cplx, 3> tau_;
};

struct NecklaceConstraint {
  cplx r1;  // t1 t2 t3
  cplx r2;  // (t1 - 1)(t2 - 1)(t3 - 1)

  /// Im r1 = Im r2 = 0 within tol, Re r1 < 0 < Re r2.
  bool admissible(double tol = 1e-12) const;
};

NecklaceConstraint necklace_constraint(const ModuliPoint& m);

class SignConventionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroCentralChargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegeneratePointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integrals of Omega0 over the canonical basis: prod p_i on (g1,g2,g3) with
/// p = 1 for alpha and p = tau_i for beta; zero on the (2,1,0) cycles.
PeriodVector holomorphic_periods(const ModuliPoint& m);

/// Exact d/dtau_a of holomorphic_periods.
PeriodVector period_derivative(const ModuliPoint& m, int a);

/// int_Y w ^ eta from period vectors.
cplx cup_pairing(const PeriodVector& w, const PeriodVector& eta);

PeriodVector conjugate(const PeriodVector& p);

/// int_Y Omega0 ^ conj(Omega0). Throws SignConventionError unless
/// i * result is real and positive (relative tolerance 1e-12).
cplx pairing_omega0(const ModuliPoint& m);

double kahler_potential(const ModuliPoint& m, double vol_y = 1.0);

/// dK/dtau_a (the antiholomorphic derivative is its conjugate).
std::array<cplx, 3> kahler_gradient(const ModuliPoint& m);

/// Periods of the normalized Omega.
PeriodVector normalized_periods(const ModuliPoint& m, double vol_y = 1.0);

cplx central_charge(const ModuliPoint& m, const HomologyClass& charge, double vol_y = 1.0);

/// Argument of Z in (-pi, pi]. Throws ZeroCentralChargeError if |Z| < zero_tol.
double phase(const ModuliPoint& m, const HomologyClass& charge, double vol_y = 1.0,
             double zero_tol = 1e-10);

/// g_{a bbar} = d_a d_bbar K, computed from exact period derivatives.
Eigen::Matrix3cd wp_metric(const ModuliPoint& m);

/// chi_a = D_a Omega = d_a Omega + (1/2)(d_a K) Omega as period vectors.
std::array<PeriodVector, 3> chi_vectors(const ModuliPoint& m, double vol_y = 1.0);

/// Terms of the Hodge decomposition of a real harmonic 3-form Xi given by its
/// periods on the (1,1,1) block:
///   Xi = (1/8volY) ( i Zbar(Xi) Omega - i g^{a bbar} Dbar_b Zbar(Xi) chi_a + conj + conj ).
struct HodgeDecomposition {
  using Block = std::array<cplx, kSymmetricBlock>;
  Block omega;      // (3,0)
  Block chi;        // (2,1)
  Block chi_bar;    // (1,2)
  Block omega_bar;  // (0,3)
  double residual = 0.0;
};

HodgeDecomposition hodge_decompose(const ModuliPoint& m, double vol_y,
                                   const std::array<double, kSymmetricBlock>& xi,
                                   double tol = 1e-8);

}  // namespace slag
