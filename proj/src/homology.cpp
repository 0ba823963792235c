#include "slag/homology.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace slag {

namespace {

std::vector<KunnethCycle> make_basis() {
  std::vector<KunnethCycle> out;
  out.reserve(kBasisSize);
  for (int bits = 0; bits < 8; ++bits) {
    KunnethCycle c;
    c.degree = {1, 1, 1};
    for (int i = 0; i < 3; ++i) {
      c.generator[static_cast<std::size_t>(i)] =
          ((bits >> (2 - i)) & 1) ? Generator::Beta : Generator::Alpha;
    }
    out.push_back(c);
  }
  std::array<int, 3> deg{0, 1, 2};
  do {
    for (Generator g : {Generator::Alpha, Generator::Beta}) {
      KunnethCycle c;
      c.degree = deg;
      for (int i = 0; i < 3; ++i) {
        if (deg[static_cast<std::size_t>(i)] == 1) c.generator[static_cast<std::size_t>(i)] = g;
      }
      out.push_back(c);
    }
  } while (std::next_permutation(deg.begin(), deg.end()));
  return out;
}

// Pairing on H_*(C_tau) of complementary degrees; alpha.beta = +1.
int factor_pairing(int da, std::optional<Generator> ga, int db, std::optional<Generator> gb) {
  if (da + db != 2) return 0;
  if (da != 1) return 1;  // [C].pt = pt.[C] = 1
  if (*ga == *gb) return 0;
  return *ga == Generator::Alpha ? 1 : -1;
}

IntMatrix20 make_form() {
  const auto& basis = build_basis();
  IntMatrix20 q{};
  for (int i = 0; i < kBasisSize; ++i) {
    for (int j = 0; j < kBasisSize; ++j) {
      q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          basis_intersection(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
    }
  }
  return q;
}

IntMatrix20 make_cup_matrix() {
  const auto& q = intersection_form();
  Eigen::Matrix<double, kBasisSize, kBasisSize> qd;
  for (int i = 0; i < kBasisSize; ++i)
    for (int j = 0; j < kBasisSize; ++j) qd(i, j) = q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  const Eigen::Matrix<double, kBasisSize, kBasisSize> inv_t = qd.inverse().transpose();
  IntMatrix20 x{};
  for (int i = 0; i < kBasisSize; ++i)
    for (int j = 0; j < kBasisSize; ++j)
      x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(std::lround(inv_t(i, j)));
  // Q X^T = I must hold exactly.
  for (int i = 0; i < kBasisSize; ++i) {
    for (int j = 0; j < kBasisSize; ++j) {
      long s = 0;
      for (int k = 0; k < kBasisSize; ++k)
        s += static_cast<long>(q[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) *
             x[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      if (s != (i == j ? 1 : 0)) throw std::logic_error("intersection form is not unimodular");
    }
  }
  return x;
}

}  // namespace

bool KunnethCycle::is_valid() const {
  int sum = 0;
  for (int i = 0; i < 3; ++i) {
    const int d = degree[static_cast<std::size_t>(i)];
    if (d < 0 || d > 2) return false;
    if ((d == 1) != generator[static_cast<std::size_t>(i)].has_value()) return false;
    sum += d;
  }
  return sum == 3;
}

std::string KunnethCycle::name() const {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    if (i) os << '*';
    const auto k = static_cast<std::size_t>(i);
    switch (degree[k]) {
      case 0: os << "pt" << i + 1; break;
      case 2: os << "[C" << i + 1 << ']'; break;
      default: os << (*generator[k] == Generator::Alpha ? 'a' : 'b') << i + 1; break;
    }
  }
  return os.str();
}

const std::vector<KunnethCycle>& build_basis() {
  static const std::vector<KunnethCycle> basis = make_basis();
  return basis;
}

int basis_index(const KunnethCycle& cycle) {
  const auto& basis = build_basis();
  auto it = std::find(basis.begin(), basis.end(), cycle);
  return it == basis.end() ? -1 : static_cast<int>(it - basis.begin());
}

HomologyClass HomologyClass::basis(int index) {
  if (index < 0 || index >= kBasisSize) throw std::out_of_range("basis index");
  HomologyClass c;
  c[index] = 1;
  return c;
}

HomologyClass HomologyClass::product(const H1Class& f1, const H1Class& f2, const H1Class& f3) {
  const std::array<H1Class, 3> f{f1, f2, f3};
  HomologyClass c;
  for (int bits = 0; bits < 8; ++bits) {
    long coeff = 1;
    for (int i = 0; i < 3; ++i) {
      const bool beta = (bits >> (2 - i)) & 1;
      coeff *= beta ? f[static_cast<std::size_t>(i)].beta : f[static_cast<std::size_t>(i)].alpha;
    }
    c[bits] = coeff;
  }
  return c;
}

bool HomologyClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](long v) { return v == 0; });
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& o) {
  for (int i = 0; i < kBasisSize; ++i) (*this)[i] += o[i];
  return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& o) {
  for (int i = 0; i < kBasisSize; ++i) (*this)[i] -= o[i];
  return *this;
}

HomologyClass operator-(const HomologyClass& a) { return -1 * a; }

HomologyClass operator*(long k, const HomologyClass& a) {
  HomologyClass c = a;
  for (int i = 0; i < kBasisSize; ++i) c[i] *= k;
  return c;
}

int basis_intersection(const KunnethCycle& a, const KunnethCycle& b) {
  int value = 1;
  for (int i = 0; i < 3; ++i) {
    const auto k = static_cast<std::size_t>(i);
    value *= factor_pairing(a.degree[k], a.generator[k], b.degree[k], b.generator[k]);
    if (value == 0) return 0;
  }
  // Reorder (a1 a2 a3 b1 b2 b3) -> (a1 b1 a2 b2 a3 b3).
  const int swaps = b.degree[0] * (a.degree[1] + a.degree[2]) + b.degree[1] * a.degree[2];
  return (swaps % 2) ? -value : value;
}

const IntMatrix20& intersection_form() {
  static const IntMatrix20 q = make_form();
  return q;
}

long intersection(const HomologyClass& gamma, const HomologyClass& delta) {
  const auto& q = intersection_form();
  long s = 0;
  for (int i = 0; i < kBasisSize; ++i) {
    if (gamma[i] == 0) continue;
    for (int j = 0; j < kBasisSize; ++j)
      s += gamma[i] * q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * delta[j];
  }
  return s;
}

std::array<long, kBasisSize> class_pairing_vector(const HomologyClass& charge) {
  const auto& q = intersection_form();
  std::array<long, kBasisSize> out{};
  for (int i = 0; i < kBasisSize; ++i) {
    long s = 0;
    for (int j = 0; j < kBasisSize; ++j) s += q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * charge[j];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

long long integer_determinant(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long long sign = 1;
  long long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

const IntMatrix20& cup_product_matrix() {
  static const IntMatrix20 x = make_cup_matrix();
  return x;
}

}  // namespace slag
