#pragma once

// Dense two-phase primal simplex over exact rationals (GMP), Bland's rule.
// Problems are in standard form: minimize c.x subject to A x = b, x >= 0.

#include <boost/multiprecision/gmp.hpp>

#include <vector>

namespace slag::lp {

using Rational = boost::multiprecision::mpq_rational;
using Matrix = std::vector<std::vector<Rational>>;

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational objective;
};

/// Rows of a must all have size c.size(); b.size() == a.size().
Result minimize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace slag::lp
