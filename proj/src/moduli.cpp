#include "slag/moduli.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace slag {

namespace {

constexpr cplx kI{0.0, 1.0};

// Period of Omega0 on the (1,1,1) cycle with bit pattern `bits`, optionally
// differentiated in tau_a.
cplx monomial(const std::array<cplx, 3>& tau, int bits, int diff) {
  cplx v{1.0, 0.0};
  for (int i = 0; i < 3; ++i) {
    const bool beta = (bits >> (2 - i)) & 1;
    if (i == diff) {
      if (!beta) return {0.0, 0.0};
      continue;
    }
    if (beta) v *= tau[static_cast<std::size_t>(i)];
  }
  return v;
}

// i * int Omega0 ^ conj(Omega0) and its first derivatives.
struct NormData {
  double n = 0.0;
  std::array<cplx, 3> dn{};
};

NormData norm_data(const ModuliPoint& m) {
  const PeriodVector p = holomorphic_periods(m);
  const PeriodVector pc = conjugate(p);
  NormData d;
  d.n = (kI * cup_pairing(p, pc)).real();
  for (int a = 0; a < 3; ++a) d.dn[static_cast<std::size_t>(a)] = kI * cup_pairing(period_derivative(m, a), pc);
  return d;
}

}  // namespace

ModuliPoint::ModuliPoint(cplx t1, cplx t2, cplx t3) : tau_{t1, t2, t3} {
  if (!is_valid(tau_)) {
    std::ostringstream os;
    os << "moduli point outside the upper half-plane: " << t1 << ' ' << t2 << ' ' << t3;
    throw std::invalid_argument(os.str());
  }
}

bool ModuliPoint::is_valid(const std::array<cplx, 3>& tau) {
  for (const auto& t : tau) {
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag()) || !(t.imag() > 0.0)) return false;
  }
  return true;
}

bool NecklaceConstraint::admissible(double tol) const {
  return std::abs(r1.imag()) <= tol && r1.real() < 0.0 && std::abs(r2.imag()) <= tol && r2.real() > 0.0;
}

NecklaceConstraint necklace_constraint(const ModuliPoint& m) {
  const auto& t = m.tau();
  return {t[0] * t[1] * t[2], (t[0] - 1.0) * (t[1] - 1.0) * (t[2] - 1.0)};
}

PeriodVector holomorphic_periods(const ModuliPoint& m) {
  PeriodVector p{};
  for (int bits = 0; bits < kSymmetricBlock; ++bits) p[static_cast<std::size_t>(bits)] = monomial(m.tau(), bits, -1);
  return p;
}

PeriodVector period_derivative(const ModuliPoint& m, int a) {
  PeriodVector p{};
  for (int bits = 0; bits < kSymmetricBlock; ++bits) p[static_cast<std::size_t>(bits)] = monomial(m.tau(), bits, a);
  return p;
}

cplx cup_pairing(const PeriodVector& w, const PeriodVector& eta) {
  const auto& x = cup_product_matrix();
  cplx s{0.0, 0.0};
  for (int i = 0; i < kBasisSize; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (w[ui] == cplx{}) continue;
    for (int j = 0; j < kBasisSize; ++j) {
      const int c = x[ui][static_cast<std::size_t>(j)];
      if (c != 0) s += w[ui] * static_cast<double>(c) * eta[static_cast<std::size_t>(j)];
    }
  }
  return s;
}

PeriodVector conjugate(const PeriodVector& p) {
  PeriodVector out;
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = std::conj(p[i]);
  return out;
}

cplx pairing_omega0(const ModuliPoint& m) {
  const PeriodVector p = holomorphic_periods(m);
  const cplx r = cup_pairing(p, conjugate(p));
  const cplx ir = kI * r;
  if (!(ir.real() > 0.0) || std::abs(ir.imag()) > 1e-12 * std::abs(ir)) {
    std::ostringstream os;
    os << "i * int Omega0 ^ conj(Omega0) = " << ir << " is not positive";
    throw SignConventionError(os.str());
  }
  return r;
}

double kahler_potential(const ModuliPoint& m, double vol_y) {
  if (!(vol_y > 0.0)) throw std::invalid_argument("volY must be positive");
  const double n = (kI * pairing_omega0(m)).real();
  return -std::log(n) + std::log(8.0 * vol_y);
}

std::array<cplx, 3> kahler_gradient(const ModuliPoint& m) {
  const NormData d = norm_data(m);
  std::array<cplx, 3> g;
  for (std::size_t a = 0; a < 3; ++a) g[a] = -d.dn[a] / d.n;
  return g;
}

PeriodVector normalized_periods(const ModuliPoint& m, double vol_y) {
  const double scale = std::exp(0.5 * kahler_potential(m, vol_y));
  PeriodVector p = holomorphic_periods(m);
  for (auto& v : p) v *= scale;
  return p;
}

cplx central_charge(const ModuliPoint& m, const HomologyClass& charge, double vol_y) {
  const PeriodVector p = normalized_periods(m, vol_y);
  cplx z{0.0, 0.0};
  for (int i = 0; i < kBasisSize; ++i) z += static_cast<double>(charge[i]) * p[static_cast<std::size_t>(i)];
  return z;
}

double phase(const ModuliPoint& m, const HomologyClass& charge, double vol_y, double zero_tol) {
  const cplx z = central_charge(m, charge, vol_y);
  if (std::abs(z) < zero_tol) throw ZeroCentralChargeError("central charge vanishes");
  return std::arg(z);
}

Eigen::Matrix3cd wp_metric(const ModuliPoint& m) {
  const NormData d = norm_data(m);
  std::array<PeriodVector, 3> dp;
  for (int a = 0; a < 3; ++a) dp[static_cast<std::size_t>(a)] = period_derivative(m, a);
  Eigen::Matrix3cd g;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const auto ua = static_cast<std::size_t>(a);
      const auto ub = static_cast<std::size_t>(b);
      const cplx nab = kI * cup_pairing(dp[ua], conjugate(dp[ub]));
      g(a, b) = -nab / d.n + d.dn[ua] * std::conj(d.dn[ub]) / (d.n * d.n);
    }
  }
  return g;
}

std::array<PeriodVector, 3> chi_vectors(const ModuliPoint& m, double vol_y) {
  const double scale = std::exp(0.5 * kahler_potential(m, vol_y));
  const PeriodVector p = holomorphic_periods(m);
  const auto dk = kahler_gradient(m);
  std::array<PeriodVector, 3> chi;
  for (int a = 0; a < 3; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    const PeriodVector dp = period_derivative(m, a);
    for (int i = 0; i < kBasisSize; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      chi[ua][ui] = scale * (dp[ui] + dk[ua] * p[ui]);
    }
  }
  return chi;
}

HodgeDecomposition hodge_decompose(const ModuliPoint& m, double vol_y,
                                   const std::array<double, kSymmetricBlock>& xi, double tol) {
  PeriodVector x{};
  for (int i = 0; i < kSymmetricBlock; ++i) x[static_cast<std::size_t>(i)] = xi[static_cast<std::size_t>(i)];

  const PeriodVector omega = normalized_periods(m, vol_y);
  const PeriodVector omega_bar = conjugate(omega);
  const auto chi = chi_vectors(m, vol_y);
  // h(a, b) = g^{a bbar}, i.e. sum_b h(a,b) g(c,b) = delta_ac.
  const Eigen::Matrix3cd h = wp_metric(m).transpose().inverse();

  const cplx z = cup_pairing(x, omega);
  const cplx zbar = cup_pairing(x, omega_bar);
  std::array<cplx, 3> dz{}, dzbar{};
  for (std::size_t b = 0; b < 3; ++b) {
    dz[b] = cup_pairing(x, chi[b]);
    dzbar[b] = cup_pairing(x, conjugate(chi[b]));
  }

  const double norm = 1.0 / (8.0 * vol_y);
  HodgeDecomposition out;
  double residual = 0.0;
  for (int i = 0; i < kSymmetricBlock; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    cplx t_chi{}, t_chi_bar{};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const auto ua = static_cast<std::size_t>(a);
        const auto ub = static_cast<std::size_t>(b);
        t_chi += -kI * h(a, b) * dzbar[ub] * chi[ua][ui];
        // g^{b abar} D_b Z chibar_a
        t_chi_bar += kI * h(b, a) * dz[ub] * std::conj(chi[ua][ui]);
      }
    }
    out.omega[ui] = norm * kI * zbar * omega[ui];
    out.chi[ui] = norm * t_chi;
    out.chi_bar[ui] = norm * t_chi_bar;
    out.omega_bar[ui] = -norm * kI * z * omega_bar[ui];
    const cplx sum = out.omega[ui] + out.chi[ui] + out.chi_bar[ui] + out.omega_bar[ui];
    residual = std::max(residual, std::abs(sum - x[ui]));
  }
  out.residual = residual;
  if (!(residual <= tol)) {
    std::ostringstream os;
    os << "Hodge reconstruction residual " << residual << " exceeds " << tol;
    throw DegeneratePointError(os.str());
  }
  return out;
}

}  // namespace slag
