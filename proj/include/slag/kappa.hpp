#pragma once

// Gluing-rate exponents kappa for Lawlor necks glued into a conical sL.
//
// For each neck i the system reads
//   tau(1+m/2) + tau(mu_i-2)            >= kappa + m/2
//   tau(1+m/2) + (1-tau)(2-lambda_i)    >= kappa + m/2
//   tau(mu_i-2)                         >= kappa - 1
//   (1-tau)(2-lambda_i)                 >= kappa - 1
//   -tau/2 + tau(mu_i-2)                >= kappa - 3/2
//   -tau/2 + (1-tau)(2-lambda_i)        >= kappa - 3/2
//   (m+1) tau                           >= kappa + m - 1
// With tau = 1 - d0, mu_i = 2 + d_i and lambda_i = 2 - m the binding bound is
//   kappa <= 1 + min_i { (1-d0) d_i - d0 (1+m/2), d0 (m/2 - 1), 1 - d0 (m+1) }.

#include <array>
#include <optional>
#include <vector>

namespace slag {

inline constexpr int kKappaFamilies = 7;

struct GluingRates {
  int m = 3;
  std::vector<double> mu;      // mu_i in (2, 3)
  std::vector<double> lambda;  // lambda_i, 2 - m for Lawlor necks
  double tau = 0.0;

  /// tau = 1 - d0, mu_i = 2 + d_i, lambda_i = 2 - m.
  static GluingRates from_deltas(int m, double d0, const std::vector<double>& d);

  /// Throws std::invalid_argument unless m >= 3, mu_i in (2,3), sizes agree and
  /// max{m/(m+1), (m+2)/(2 mu_i + m - 2)} < tau < 1.
  void validate() const;
};

/// Upper bound on kappa implied by each inequality family (minimized over i).
std::array<double, kKappaFamilies> raw_kappa_bounds(const GluingRates& r);

double raw_kappa_max(const GluingRates& r);

/// The closed min{...} form; requires lambda_i = 2 - m.
double delta_kappa_max(const GluingRates& r);

/// Whether every inequality holds at kappa, with slack tol.
bool raw_system_holds(const GluingRates& r, double kappa, double tol = 0.0);

struct KappaWindow {
  double lower = 1.0;  // open end
  double upper = 1.0;  // closed end, kappa_max
  int binding = 0;     // index of the family attaining kappa_max
};

/// (1, kappa_max] if kappa_max > 1, otherwise nullopt.
std::optional<KappaWindow> kappa_window(const GluingRates& r);

struct KappaSearch {
  std::optional<GluingRates> rates;  // present iff the target lies in its window
  double best_kappa_max = 1.0;       // supremum found by grid + refinement
};

/// Searches tau = 1 - d0, mu_i = 2 + d_i over d0 in (0, 1/(m+1)) with
/// d_i = lo + 0.9 (1 - lo), lo = (1+m/2) d0 / (1-d0). Throws
/// std::invalid_argument for kappa_target <= 1 or m < 3.
KappaSearch find_rates_for_kappa(int m, double kappa_target, int necks = 1);

}  // namespace slag
