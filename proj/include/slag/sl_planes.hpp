#pragma once

// Special Lagrangian m-planes A.R^m in C^m, given by a unitary frame A.

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

namespace slag {

struct SLPlane {
  Eigen::MatrixXcd frame;  // unitary columns
  int orientation = 1;     // +1: columns are positively ordered

  int dim() const { return static_cast<int>(frame.cols()); }
  /// Omega(oriented frame) = orientation * det(frame), a unit complex number.
  std::complex<double> calibration() const;
};

class NonTransverseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument unless frame is square and A^dagger A = I within tol.
SLPlane plane_from_frame(const Eigen::MatrixXcd& frame, int orientation = 1, double tol = 1e-12);

/// Orthonormalizes real-spanning vectors (columns) for the real inner product
/// Re<u,v>. The span must be Lagrangian, otherwise std::invalid_argument.
SLPlane plane_from_spanning(const Eigen::MatrixXcd& vectors, int orientation = 1, double tol = 1e-10);

/// Pi^phi = {(e^{i phi_1} x_1, ..., e^{i phi_m} x_m)}.
SLPlane plane_from_phases(const std::vector<double>& phi);

/// True if the frames differ by a real orthogonal matrix on the right.
bool same_plane(const SLPlane& p, const SLPlane& q, double tol = 1e-10);

struct AngleSpectrum {
  std::vector<double> angles;  // ascending, in (0, pi)
  int type = 0;                // sum(angles) = type * pi
};

/// Angles are half-arguments in (0, pi) of the eigenvalues of S = M M^T with
/// M = P^dagger Q. Throws NonTransverseError if some angle is within
/// transverse_tol of 0 or pi, std::invalid_argument if the angle sum is not a
/// multiple of pi within 1e-9.
AngleSpectrum characteristic_angles(const SLPlane& p, const SLPlane& q, double transverse_tol = 1e-8);

/// Sign of the 6x6 real determinant [P | Q] for m = 3, with both planes
/// oriented by the calibration Re(e^{-i theta} Omega), e^{i theta} the phase of
/// the oriented plane P. Equals +1 exactly when the pair has type 1.
int oriented_intersection_sign(const SLPlane& p, const SLPlane& q, double transverse_tol = 1e-8);

/// Column-wise realification (Re z1, Im z1, ..., Re zm, Im zm).
Eigen::MatrixXd realify(const Eigen::MatrixXcd& vectors);

}  // namespace slag
