#pragma once

// Random graphs, random unitary frames and the chain-level Betti oracle.

#include "helpers.hpp"
#include "slag/smoothing.hpp"

#include <numeric>

namespace slag::testing {

inline DualGraph random_graph(int nv, int ne) {
  DualGraph g;
  g.vertices = nv;
  for (int e = 0; e < ne; ++e)
    g.edges.emplace_back(static_cast<int>(uniform_int(0, nv - 1)), static_cast<int>(uniform_int(0, nv - 1)));
  return g;
}

// rank over Q by fraction-free elimination
inline long exact_rank(std::vector<std::vector<long long>> m) {
  long rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[static_cast<std::size_t>(rank)]);
    const auto& piv = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const long long f = m[r][c], pv = piv[c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * pv - piv[k] * f;
      long long gcd = 0;
      for (auto v : m[r]) gcd = std::gcd(gcd, v);
      if (gcd > 1)
        for (auto& v : m[r]) v /= gcd;
    }
    ++rank;
  }
  return rank;
}

// graph of spaces: H_1 = (+) H_1(vertex) (+) ker(d1), H_0 = coker(d1)
inline BettiPair chain_oracle(const DualGraph& g, const std::vector<int>& b1) {
  std::vector<std::vector<long long>> d1(static_cast<std::size_t>(g.vertices), std::vector<long long>(g.edges.size(), 0));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    d1[static_cast<std::size_t>(g.edges[e].second)][e] += 1;
    d1[static_cast<std::size_t>(g.edges[e].first)][e] -= 1;
  }
  const long r = exact_rank(d1);
  long total = 0;
  for (int v : b1) total += v;
  return {g.vertices - r, total + static_cast<long>(g.edges.size()) - r};
}

inline Eigen::MatrixXcd random_unitary(int m) {
  Eigen::MatrixXcd g(m, m);
  std::normal_distribution<double> n;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = cplx(n(rng()), n(rng()));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  // Haar: absorb the phases of diag(R)
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < m; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline Eigen::MatrixXcd random_special_unitary(int m) {
  Eigen::MatrixXcd q = random_unitary(m);
  q.col(0) /= q.determinant();
  return q;
}

inline Eigen::MatrixXd random_rotation(int m) {
  Eigen::MatrixXd g(m, m);
  std::normal_distribution<double> n;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = n(rng());
  Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

}  // namespace slag::testing
