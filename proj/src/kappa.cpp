#include "slag/kappa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace slag {

GluingRates GluingRates::from_deltas(int m, double d0, const std::vector<double>& d) {
  GluingRates r;
  r.m = m;
  r.tau = 1.0 - d0;
  for (double di : d) {
    r.mu.push_back(2.0 + di);
    r.lambda.push_back(2.0 - m);
  }
  return r;
}

void GluingRates::validate() const {
  if (m < 3) throw std::invalid_argument("m must be at least 3");
  if (mu.empty() || mu.size() != lambda.size()) throw std::invalid_argument("mu and lambda must be nonempty and of equal size");
  double lower = static_cast<double>(m) / (m + 1);
  for (double v : mu) {
    if (!(v > 2.0 && v < 3.0)) throw std::invalid_argument("mu_i must lie in (2, 3)");
    lower = std::max(lower, (m + 2.0) / (2.0 * v + m - 2.0));
  }
  if (!(tau > lower && tau < 1.0)) throw std::invalid_argument("tau outside its admissible interval");
}

std::array<double, kKappaFamilies> raw_kappa_bounds(const GluingRates& r) {
  r.validate();
  const double m = r.m;
  const double t = r.tau;
  std::array<double, kKappaFamilies> b;
  b.fill(std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < r.mu.size(); ++i) {
    const double cone = t * (r.mu[i] - 2.0);
    const double neck = (1.0 - t) * (2.0 - r.lambda[i]);
    b[0] = std::min(b[0], t * (1.0 + m / 2) + cone - m / 2);
    b[1] = std::min(b[1], t * (1.0 + m / 2) + neck - m / 2);
    b[2] = std::min(b[2], cone + 1.0);
    b[3] = std::min(b[3], neck + 1.0);
    b[4] = std::min(b[4], -t / 2 + cone + 1.5);
    b[5] = std::min(b[5], -t / 2 + neck + 1.5);
  }
  b[6] = (m + 1) * t - m + 1.0;
  return b;
}

double raw_kappa_max(const GluingRates& r) {
  const auto b = raw_kappa_bounds(r);
  return *std::min_element(b.begin(), b.end());
}

double delta_kappa_max(const GluingRates& r) {
  r.validate();
  const double m = r.m;
  for (double l : r.lambda)
    if (l != 2.0 - m) throw std::invalid_argument("the closed form assumes lambda_i = 2 - m");
  const double d0 = 1.0 - r.tau;
  double v = std::min(d0 * (m / 2 - 1.0), 1.0 - d0 * (m + 1));
  for (double mu : r.mu) v = std::min(v, (1.0 - d0) * (mu - 2.0) - d0 * (1.0 + m / 2));
  return 1.0 + v;
}

bool raw_system_holds(const GluingRates& r, double kappa, double tol) {
  const auto b = raw_kappa_bounds(r);
  return std::all_of(b.begin(), b.end(), [&](double x) { return kappa <= x + tol; });
}

std::optional<KappaWindow> kappa_window(const GluingRates& r) {
  const auto b = raw_kappa_bounds(r);
  const auto it = std::min_element(b.begin(), b.end());
  if (!(*it > 1.0)) return std::nullopt;
  KappaWindow w;
  w.upper = *it;
  w.binding = static_cast<int>(it - b.begin());
  return w;
}

KappaSearch find_rates_for_kappa(int m, double kappa_target, int necks) {
  if (m < 3) throw std::invalid_argument("m must be at least 3");
  if (!(kappa_target > 1.0)) throw std::invalid_argument("kappa must be strictly greater than 1");
  if (necks < 1) throw std::invalid_argument("need at least one neck");

  const double top = 1.0 / (m + 1);
  auto rates_at = [&](double d0) {
    const double lo = (1.0 + m / 2.0) * d0 / (1.0 - d0);
    return GluingRates::from_deltas(m, d0, std::vector<double>(static_cast<std::size_t>(necks), lo + 0.9 * (1.0 - lo)));
  };
  auto score = [&](double d0) {
    try {
      return raw_kappa_max(rates_at(d0));
    } catch (const std::invalid_argument&) {
      return -std::numeric_limits<double>::infinity();
    }
  };

  constexpr int kGrid = 64;
  std::vector<double> grid;
  const double lo = std::log(top * 1e-6), hi = std::log(top * (1.0 - 1e-9));
  for (int k = 0; k < kGrid; ++k) grid.push_back(std::exp(lo + (hi - lo) * k / (kGrid - 1)));

  std::size_t best = 0;
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (score(grid[k]) > score(grid[best])) best = k;

  // golden section on the bracket around the best grid point
  double a = grid[best == 0 ? 0 : best - 1];
  double b = grid[std::min(best + 1, grid.size() - 1)];
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    if (score(c) > score(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  double d0 = 0.5 * (a + b);
  if (score(grid[best]) > score(d0)) d0 = grid[best];

  KappaSearch out;
  out.best_kappa_max = score(d0);
  if (out.best_kappa_max >= kappa_target) out.rates = rates_at(d0);
  return out;
}

}  // namespace slag
