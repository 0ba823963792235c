#include "slag/sl_planes.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace slag {

namespace {

constexpr double kPi = std::numbers::pi;

void require_square(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw std::invalid_argument("frame must be a nonempty square matrix");
}

}  // namespace

std::complex<double> SLPlane::calibration() const { return static_cast<double>(orientation) * frame.determinant(); }

SLPlane plane_from_frame(const Eigen::MatrixXcd& frame, int orientation, double tol) {
  require_square(frame);
  if (orientation != 1 && orientation != -1) throw std::invalid_argument("orientation must be +1 or -1");
  const Eigen::MatrixXcd gram = frame.adjoint() * frame;
  const double err = (gram - Eigen::MatrixXcd::Identity(frame.cols(), frame.cols())).cwiseAbs().maxCoeff();
  if (err > tol) {
    std::ostringstream os;
    os << "frame is not unitary (deviation " << err << ")";
    throw std::invalid_argument(os.str());
  }
  return {frame, orientation};
}

SLPlane plane_from_spanning(const Eigen::MatrixXcd& vectors, int orientation, double tol) {
  require_square(vectors);
  const Eigen::Index m = vectors.cols();
  Eigen::MatrixXcd q = vectors;
  for (Eigen::Index j = 0; j < m; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        const double c = q.col(i).dot(q.col(j)).real();  // Re <q_i, q_j>
        q.col(j) -= c * q.col(i);
      }
    }
    const double n = q.col(j).norm();
    if (n < tol) throw std::invalid_argument("spanning vectors are linearly dependent over R");
    q.col(j) /= n;
  }
  return plane_from_frame(q, orientation, tol);
}

SLPlane plane_from_phases(const std::vector<double>& phi) {
  if (phi.empty()) throw std::invalid_argument("empty phase vector");
  const auto m = static_cast<Eigen::Index>(phi.size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(m, m);
  for (Eigen::Index k = 0; k < m; ++k) a(k, k) = std::polar(1.0, phi[static_cast<std::size_t>(k)]);
  return {a, 1};
}

bool same_plane(const SLPlane& p, const SLPlane& q, double tol) {
  if (p.dim() != q.dim()) return false;
  const Eigen::MatrixXcd m = p.frame.adjoint() * q.frame;
  if (m.imag().cwiseAbs().maxCoeff() > tol) return false;
  const double det = m.real().determinant();
  return (det > 0) == (p.orientation == q.orientation);
}

AngleSpectrum characteristic_angles(const SLPlane& p, const SLPlane& q, double transverse_tol) {
  if (p.dim() != q.dim()) throw std::invalid_argument("planes of different dimension");
  const Eigen::MatrixXcd m = p.frame.adjoint() * q.frame;
  const Eigen::MatrixXcd s = m * m.transpose();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(s, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigen decomposition failed");

  AngleSpectrum out;
  for (Eigen::Index k = 0; k < s.rows(); ++k) {
    double arg = std::arg(es.eigenvalues()(k));  // (-pi, pi]
    if (arg < 0) arg += 2 * kPi;                 // [0, 2 pi)
    const double phi = arg / 2;
    if (phi < transverse_tol || kPi - phi < transverse_tol) {
      std::ostringstream os;
      os << "planes are not transverse (angle " << phi << ")";
      throw NonTransverseError(os.str());
    }
    out.angles.push_back(phi);
  }
  std::stable_sort(out.angles.begin(), out.angles.end());
  double sum = 0.0;
  for (double a : out.angles) sum += a;
  const double k = std::round(sum / kPi);
  if (std::abs(sum - k * kPi) > 1e-9) {
    std::ostringstream os;
    os << "angle sum " << sum << " is not a multiple of pi: planes are not special Lagrangian of a common phase";
    throw std::invalid_argument(os.str());
  }
  out.type = static_cast<int>(k);
  return out;
}

Eigen::MatrixXd realify(const Eigen::MatrixXcd& vectors) {
  Eigen::MatrixXd r(2 * vectors.rows(), vectors.cols());
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
      r(2 * i, j) = vectors(i, j).real();
      r(2 * i + 1, j) = vectors(i, j).imag();
    }
  }
  return r;
}

int oriented_intersection_sign(const SLPlane& p, const SLPlane& q, double transverse_tol) {
  if (p.dim() != 3 || q.dim() != 3) throw std::invalid_argument("intersection sign is defined for m = 3");
  characteristic_angles(p, q, transverse_tol);  // transversality and common phase

  const std::complex<double> phase_p = p.calibration();
  const double rel = (std::conj(phase_p) * q.calibration()).real();  // +-1
  const int q_sign = rel > 0 ? 1 : -1;

  Eigen::MatrixXd cols(6, 6);
  cols.leftCols(3) = realify(p.frame);
  cols.rightCols(3) = realify(q.frame);
  if (p.orientation < 0) cols.col(0) *= -1.0;
  if (q.orientation * q_sign < 0) cols.col(3) *= -1.0;
  const double det = cols.determinant();
  if (std::abs(det) < 1e-12) throw NonTransverseError("planes are not transverse");
  return det > 0 ? 1 : -1;
}

}  // namespace slag
