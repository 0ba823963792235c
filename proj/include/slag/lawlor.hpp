#pragma once

// Lawlor necks L^{phi,A} in C^m: the map a -> (phi, A), its inverse, sample
// points, and checks of the special Lagrangian condition and of scaling.

#include <complex>
#include <stdexcept>
#include <vector>

namespace slag {

struct NeckModuli {
  std::vector<double> a;  // a_k > 0, m = a.size() >= 3

  int dim() const { return static_cast<int>(a.size()); }
  void validate() const;  // throws std::invalid_argument
};

struct NeckInvariants {
  std::vector<double> phi;
  double area = 0.0;  // A
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P(x) = (prod(1 + a_k x^2) - 1) / x^2, evaluated as sum_j e_j(a) x^{2(j-1)}.
double p_eval(const NeckModuli& a, double x);

/// Surface area of the unit sphere S^{m-1}, 2 pi^{m/2} / Gamma(m/2).
double sphere_area(int m);

NeckInvariants invariants_from_moduli(const NeckModuli& a);

/// Damped Newton in log a with a finite-difference Jacobian.
/// Throws std::invalid_argument for infeasible (phi, A), NonConvergenceError
/// after max_iter iterations.
NeckModuli moduli_from_invariants(const NeckInvariants& inv, int max_iter = 200, double tol = 1e-12);

/// psi_k(y) = a_k int_{-inf}^{y} dx / ((1 + a_k x^2) sqrt(P(x))).
double psi(const NeckModuli& a, int k, double y);

/// (z_1(y) x_1, ..., z_m(y) x_m) with z_k = e^{i psi_k(y)} sqrt(1/a_k + y^2); |x| = 1.
std::vector<std::complex<double>> neck_point(const NeckModuli& a, double y, const std::vector<double>& x);

struct SLResidual {
  double omega = 0.0;     // max |omega(u, v)| over pairs of the orthonormal tangent frame
  double im_omega = 0.0;  // |Im Omega(frame)|
  double re_omega = 0.0;  // |Re Omega(frame)|, 1 for a calibrated plane
};

SLResidual sl_residual(const NeckModuli& a, double y, const std::vector<double>& x);

/// Max discrepancy of t.L^{phi,A} = L^{phi, t^m A} over the sample grids
/// (phi, relative A, and pointwise neck_point(a/t^2, t y, x) vs t neck_point(a, y, x)).
double scaling_check(const NeckModuli& a, double t, const std::vector<double>& ys,
                     const std::vector<std::vector<double>>& xs);

}  // namespace slag
