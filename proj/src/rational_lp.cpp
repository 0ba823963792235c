#include "slag/rational_lp.hpp"

#include <stdexcept>

namespace slag::lp {

namespace {

// Tableau rows 0..m-1 are constraints (last column = rhs); basis[i] is the
// basic variable of row i.
struct Tableau {
  Matrix t;
  std::vector<std::size_t> basis;
  std::size_t nvars = 0;

  Rational& rhs(std::size_t i) { return t[i][nvars]; }

  void pivot(std::size_t r, std::size_t col) {
    const Rational p = t[r][col];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][col] == 0) continue;
      const Rational f = t[i][col];
      for (std::size_t j = 0; j <= nvars; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    basis[r] = col;
  }
};

// Reduced costs d_j = c_j - c_B B^{-1} a_j, with B^{-1} A held in the tableau.
std::vector<Rational> reduced_costs(const Tableau& tab, const std::vector<Rational>& cost,
                                    const std::vector<bool>& allowed) {
  std::vector<Rational> d(tab.nvars);
  for (std::size_t j = 0; j < tab.nvars; ++j) {
    if (!allowed[j]) continue;
    Rational v = cost[j];
    for (std::size_t i = 0; i < tab.t.size(); ++i)
      if (tab.t[i][j] != 0) v -= cost[tab.basis[i]] * tab.t[i][j];
    d[j] = v;
  }
  return d;
}

// Returns false when unbounded.
bool run_simplex(Tableau& tab, const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
  for (;;) {
    const auto d = reduced_costs(tab, cost, allowed);
    std::size_t enter = tab.nvars;
    for (std::size_t j = 0; j < tab.nvars; ++j) {
      if (allowed[j] && d[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == tab.nvars) return true;

    std::size_t leave = tab.t.size();
    Rational best;
    for (std::size_t i = 0; i < tab.t.size(); ++i) {
      if (tab.t[i][enter] <= 0) continue;
      const Rational ratio = tab.rhs(i) / tab.t[i][enter];
      if (leave == tab.t.size() || ratio < best || (ratio == best && tab.basis[i] < tab.basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == tab.t.size()) return false;
    tab.pivot(leave, enter);
  }
}

}  // namespace

Result minimize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("lp: rhs size mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("lp: row size mismatch");

  // phase 1 with one artificial per row
  Tableau tab;
  tab.nvars = n + m;
  tab.t.assign(m, std::vector<Rational>(n + m + 1));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    tab.t[i][n + i] = 1;
    tab.rhs(i) = flip ? Rational(-b[i]) : b[i];
    tab.basis[i] = n + i;
  }
  std::vector<Rational> cost1(n + m);
  for (std::size_t i = 0; i < m; ++i) cost1[n + i] = 1;
  std::vector<bool> all(n + m, true);
  run_simplex(tab, cost1, all);

  Rational infeas = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= n) infeas += tab.rhs(i);
  Result res;
  if (infeas != 0) {
    res.status = Status::Infeasible;
    return res;
  }

  // drive artificials out of the basis; drop redundant rows
  for (std::size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (tab.t[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col == n) {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    tab.pivot(i, col);
    ++i;
  }

  std::vector<Rational> cost2(n + m);
  for (std::size_t j = 0; j < n; ++j) cost2[j] = c[j];
  std::vector<bool> real(n + m, false);
  for (std::size_t j = 0; j < n; ++j) real[j] = true;
  if (!run_simplex(tab, cost2, real)) {
    res.status = Status::Unbounded;
    return res;
  }

  res.status = Status::Optimal;
  res.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.t.size(); ++i)
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.rhs(i);
  res.objective = 0;
  for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
  return res;
}

}  // namespace slag::lp
