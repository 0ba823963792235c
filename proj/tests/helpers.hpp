#pragma once

// Shared generators and oracles for the test suites.

#include "slag/homology.hpp"
#include "slag/moduli.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace slag::testing {

using cplx = std::complex<double>;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline long uniform_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline ModuliPoint random_point() {
  return ModuliPoint({uniform(-1.5, 1.5), uniform(0.3, 2.5)}, {uniform(-1.5, 1.5), uniform(0.3, 2.5)},
                     {uniform(-1.5, 1.5), uniform(0.3, 2.5)});
}

inline HomologyClass random_class(long bound = 5) {
  HomologyClass c;
  for (int i = 0; i < kBasisSize; ++i) c[i] = uniform_int(-bound, bound);
  return c;
}

/// Random class supported on the (1,1,1) block.
inline HomologyClass random_block_class(long bound = 3) {
  HomologyClass c;
  for (int i = 0; i < kSymmetricBlock; ++i) c[i] = uniform_int(-bound, bound);
  return c;
}

/// Real 6 x 3 tangent frame of a basis cycle in R^6 = (x1, y1, x2, y2, x3, y3),
/// with alpha -> (1, 0), beta -> (0, 1) in each factor and a degree-2 factor
/// contributing both directions in complex order.
inline Eigen::MatrixXd cycle_frame(const KunnethCycle& c) {
  std::vector<Eigen::VectorXd> cols;
  for (int i = 0; i < 3; ++i) {
    const auto k = static_cast<std::size_t>(i);
    auto unit = [&](int j) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(6);
      v(2 * i + j) = 1.0;
      return v;
    };
    if (c.degree[k] == 2) {
      cols.push_back(unit(0));
      cols.push_back(unit(1));
    } else if (c.degree[k] == 1) {
      cols.push_back(unit(*c.generator[k] == Generator::Alpha ? 0 : 1));
    }
  }
  Eigen::MatrixXd f(6, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) f.col(static_cast<Eigen::Index>(j)) = cols[j];
  return f;
}

/// Intersection number of two basis cycles from the determinant of the
/// concatenated frames (0 unless the frames are complementary).
inline int determinant_oracle(const KunnethCycle& a, const KunnethCycle& b) {
  const Eigen::MatrixXd fa = cycle_frame(a), fb = cycle_frame(b);
  if (fa.cols() + fb.cols() != 6) return 0;
  Eigen::MatrixXd m(6, 6);
  m << fa, fb;
  return static_cast<int>(std::lround(m.determinant()));
}

/// i int Omega0 ^ conj(Omega0) by fiberwise integration:
/// int_{C_t} dz ^ dzbar = -2i Im t, reordering dz1 dz2 dz3 dzb1 dzb2 dzb3 to
/// (dz1 dzb1)(dz2 dzb2)(dz3 dzb3) costs three transpositions.
inline cplx fiberwise_pairing(const ModuliPoint& m) {
  cplx v = -1.0;
  for (const auto& t : m.tau()) v *= cplx(0.0, -2.0 * t.imag());
  return v;
}

}  // namespace slag::testing
