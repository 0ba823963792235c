#include "slag/lawlor.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace slag {

namespace {

using boost::math::quadrature::gauss_kronrod;
using cplx = std::complex<double>;

constexpr double kQuadTol = 1e-13;

// e_0 .. e_m of a.
std::vector<double> elementary(const std::vector<double>& a) {
  std::vector<double> e(a.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t j = k + 1; j >= 1; --j) e[j] += a[k] * e[j - 1];
  return e;
}

// R(s) = s^{2m - 2} P(1/s) = sum_{j>=1} e_j s^{2(m-j)}
double r_eval(const std::vector<double>& e, double s) {
  const std::size_t m = e.size() - 1;
  double acc = 0.0;
  const double s2 = s * s;
  for (std::size_t j = 1; j <= m; ++j) acc = acc * s2 + e[j];
  return acc;
}

double p_from_e(const std::vector<double>& e, double x) {
  const std::size_t m = e.size() - 1;
  double acc = 0.0;
  const double x2 = x * x;
  for (std::size_t j = m; j >= 1; --j) acc = acc * x2 + e[j];
  return acc;
}

template <class F>
double integrate(F f, double lo, double hi) {
  if (hi <= lo) return 0.0;
  double err = 0.0;
  // Boost compares an unscaled panel error against a scaled tolerance, so short
  // intervals bisect to full depth. Integrate over [0, 1] instead.
  const double w = hi - lo;
  auto g = [&](double t) { return w * f(lo + w * t); };
  const double v = gauss_kronrod<double, 61>::integrate(g, 0.0, 1.0, 20, kQuadTol, &err);
  if (!std::isfinite(v) || err > 1e-10 * std::max(1.0, std::abs(v))) {
    std::ostringstream os;
    os << "quadrature did not converge (error estimate " << err << ")";
    throw QuadratureError(os.str());
  }
  return v;
}

// a_k int_0^y dx / ((1 + a_k x^2) sqrt P), y >= 0, split at x = 1 with x = 1/s beyond.
double half_integral(const std::vector<double>& e, double ak, double y) {
  const auto m = static_cast<int>(e.size()) - 1;
  auto inner = [&](double x) { return 1.0 / ((1.0 + ak * x * x) * std::sqrt(p_from_e(e, x))); };
  auto outer = [&](double s) {
    return std::pow(s, m - 1) / ((s * s + ak) * std::sqrt(r_eval(e, s)));
  };
  double v = integrate(inner, 0.0, std::min(y, 1.0));
  if (y > 1.0) v += integrate(outer, 1.0 / y, 1.0);
  return ak * v;
}

double half_phi(const std::vector<double>& e, double ak) {
  const auto m = static_cast<int>(e.size()) - 1;
  auto inner = [&](double x) { return 1.0 / ((1.0 + ak * x * x) * std::sqrt(p_from_e(e, x))); };
  auto outer = [&](double s) {
    return std::pow(s, m - 1) / ((s * s + ak) * std::sqrt(r_eval(e, s)));
  };
  return ak * (integrate(inner, 0.0, 1.0) + integrate(outer, 0.0, 1.0));
}

std::vector<double> residual(const NeckModuli& a, const NeckInvariants& target) {
  const NeckInvariants inv = invariants_from_moduli(a);
  const std::size_t m = a.a.size();
  std::vector<double> f(m);
  for (std::size_t k = 0; k + 1 < m; ++k) f[k] = inv.phi[k] - target.phi[k];
  f[m - 1] = std::log(inv.area) - std::log(target.area);
  return f;
}

double max_abs(const std::vector<double>& v) {
  double r = 0.0;
  for (double x : v) r = std::max(r, std::abs(x));
  return r;
}

}  // namespace

void NeckModuli::validate() const {
  if (a.size() < 3) throw std::invalid_argument("Lawlor necks need m >= 3");
  for (double v : a)
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("neck moduli must be positive");
}

double p_eval(const NeckModuli& a, double x) { return p_from_e(elementary(a.a), x); }

double sphere_area(int m) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m);
}

NeckInvariants invariants_from_moduli(const NeckModuli& a) {
  a.validate();
  const auto e = elementary(a.a);
  NeckInvariants inv;
  double prod = 1.0;
  for (double ak : a.a) {
    inv.phi.push_back(2.0 * half_phi(e, ak));
    prod *= ak;
  }
  inv.area = sphere_area(a.dim()) / std::sqrt(prod);
  return inv;
}

NeckModuli moduli_from_invariants(const NeckInvariants& inv, int max_iter, double tol) {
  const std::size_t m = inv.phi.size();
  if (m < 3) throw std::invalid_argument("Lawlor necks need m >= 3");
  double sum = 0.0;
  for (double p : inv.phi) {
    if (!(p > 0.0 && p < std::numbers::pi)) throw std::invalid_argument("phi_k must lie in (0, pi)");
    sum += p;
  }
  if (std::abs(sum - std::numbers::pi) > 1e-6) throw std::invalid_argument("phi must sum to pi");
  if (!(inv.area > 0.0) || !std::isfinite(inv.area)) throw std::invalid_argument("A must be positive");

  // seed a_k = 1/phi_k^2, then rescale so that A matches
  NeckModuli a;
  for (double p : inv.phi) a.a.push_back(1.0 / (p * p));
  {
    double prod = 1.0;
    for (double v : a.a) prod *= v;
    const double area = sphere_area(static_cast<int>(m)) / std::sqrt(prod);
    const double lambda = std::pow(area / inv.area, 2.0 / static_cast<double>(m));
    for (double& v : a.a) v *= lambda;
  }

  std::vector<double> f = residual(a, inv);
  for (int it = 0; it < max_iter; ++it) {
    if (max_abs(f) < tol) return a;
    Eigen::MatrixXd jac(m, m);
    const double h = 1e-6;
    for (std::size_t j = 0; j < m; ++j) {
      NeckModuli ap = a, am = a;
      ap.a[j] *= std::exp(h);
      am.a[j] *= std::exp(-h);
      const auto fp = residual(ap, inv);
      const auto fm = residual(am, inv);
      for (std::size_t i = 0; i < m; ++i)
        jac(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (fp[i] - fm[i]) / (2 * h);
    }
    Eigen::VectorXd rhs(m);
    for (std::size_t i = 0; i < m; ++i) rhs(static_cast<Eigen::Index>(i)) = -f[i];
    Eigen::VectorXd step = jac.fullPivLu().solve(rhs);
    // a full Newton step can throw the a_k far apart, where the quadrature breaks down
    const double longest = step.cwiseAbs().maxCoeff();
    if (longest > 1.0) step /= longest;

    double lambda = 1.0;
    bool accepted = false;
    for (int back = 0; back < 40; ++back, lambda *= 0.5) {
      NeckModuli trial = a;
      for (std::size_t j = 0; j < m; ++j) trial.a[j] *= std::exp(lambda * step(static_cast<Eigen::Index>(j)));
      std::vector<double> ft;
      try {
        ft = residual(trial, inv);
      } catch (const QuadratureError&) {
        continue;
      }
      if (max_abs(ft) < max_abs(f)) {
        a = trial;
        f = ft;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // no descent left: accept if we are at the noise floor of the quadrature
      if (max_abs(f) < 1e3 * tol) return a;
      break;
    }
  }
  if (max_abs(f) < tol) return a;
  std::ostringstream os;
  os << "inverse Lawlor map did not converge (residual " << max_abs(f) << ")";
  throw NonConvergenceError(os.str());
}

double psi(const NeckModuli& a, int k, double y) {
  a.validate();
  if (k < 0 || k >= a.dim()) throw std::out_of_range("neck index");
  const auto e = elementary(a.a);
  const double ak = a.a[static_cast<std::size_t>(k)];
  const double half = half_phi(e, ak);
  if (std::isinf(y)) return y > 0 ? 2 * half : 0.0;
  const double part = half_integral(e, ak, std::abs(y));
  return y >= 0 ? half + part : half - part;
}

std::vector<cplx> neck_point(const NeckModuli& a, double y, const std::vector<double>& x) {
  a.validate();
  if (x.size() != a.a.size()) throw std::invalid_argument("direction has wrong dimension");
  double n2 = 0.0;
  for (double v : x) n2 += v * v;
  if (std::abs(n2 - 1.0) > 1e-10) throw std::invalid_argument("direction must be a unit vector");
  std::vector<cplx> z(x.size());
  for (int k = 0; k < a.dim(); ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const double r = std::sqrt(1.0 / a.a[uk] + y * y);
    z[uk] = std::polar(r, psi(a, k, y)) * x[uk];
  }
  return z;
}

SLResidual sl_residual(const NeckModuli& a, double y, const std::vector<double>& x) {
  a.validate();
  const int m = a.dim();
  if (x.size() != a.a.size()) throw std::invalid_argument("direction has wrong dimension");
  const auto e = elementary(a.a);
  const double py = p_from_e(e, y);

  Eigen::VectorXd xv(m);
  for (int k = 0; k < m; ++k) xv(k) = x[static_cast<std::size_t>(k)];
  xv.normalize();

  // orthonormal basis of x^perp
  Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(m, m) - xv * xv.transpose();
  Eigen::MatrixXd sphere(m, m - 1);
  {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(proj, Eigen::ComputeFullU);
    sphere = svd.matrixU().leftCols(m - 1);
  }

  Eigen::MatrixXcd frame(m, m);
  for (int k = 0; k < m; ++k) {
    const double ak = a.a[static_cast<std::size_t>(k)];
    const double r = std::sqrt(1.0 / ak + y * y);
    const double dpsi = ak / ((1.0 + ak * y * y) * std::sqrt(py));
    const cplx rot = std::polar(1.0, psi(a, k, y));
    frame(k, 0) = rot * cplx(y / r, dpsi * r) * xv(k);
    for (int j = 0; j < m - 1; ++j) frame(k, j + 1) = rot * r * sphere(k, j);
  }
  // real Gram-Schmidt
  for (int j = 0; j < m; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < j; ++i) frame.col(j) -= frame.col(i).dot(frame.col(j)).real() * frame.col(i);
    frame.col(j).normalize();
  }

  SLResidual res;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) res.omega = std::max(res.omega, std::abs(frame.col(i).dot(frame.col(j)).imag()));
  const cplx det = frame.determinant();
  res.im_omega = std::abs(det.imag());
  res.re_omega = std::abs(det.real());
  return res;
}

double scaling_check(const NeckModuli& a, double t, const std::vector<double>& ys,
                     const std::vector<std::vector<double>>& xs) {
  if (!(t > 0.0)) throw std::invalid_argument("scale must be positive");
  a.validate();
  NeckModuli scaled = a;
  for (double& v : scaled.a) v /= t * t;
  const NeckInvariants i0 = invariants_from_moduli(a);
  const NeckInvariants i1 = invariants_from_moduli(scaled);
  double worst = 0.0;
  for (std::size_t k = 0; k < i0.phi.size(); ++k) worst = std::max(worst, std::abs(i0.phi[k] - i1.phi[k]));
  const double expect = std::pow(t, a.dim()) * i0.area;
  worst = std::max(worst, std::abs(i1.area - expect) / expect);
  for (double y : ys) {
    for (const auto& x : xs) {
      const auto p0 = neck_point(a, y, x);
      const auto p1 = neck_point(scaled, t * y, x);
      for (std::size_t k = 0; k < p0.size(); ++k) worst = std::max(worst, std::abs(p1[k] - t * p0[k]));
    }
  }
  return worst;
}

}  // namespace slag
