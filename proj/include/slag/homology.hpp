#pragma once

// Integer model of H_3 of the product torus C_t1 x C_t2 x C_t3.
//
// Each elliptic factor has H_1 basis (alpha, beta) lifting to (1, tau) in C.
// The Kunneth basis of H_3 has 20 cycles: 8 of shape (1,1,1) and 12 where the
// degrees are a permutation of (2,1,0).
//
// Canonical order: the (1,1,1) cycles first, indexed by 4*g1 + 2*g2 + g3 with
// alpha -> 0 and beta -> 1; then the remaining 12 sorted lexicographically by
// (degree tuple, generator of the degree-1 factor).
//
// Orientation: a degree-2 factor carries the complex orientation (1, tau);
// a product cycle carries the product orientation in factor order.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace slag {

inline constexpr int kBasisSize = 20;
inline constexpr int kSymmetricBlock = 8;  // leading (1,1,1) block

enum class Generator : std::uint8_t { Alpha = 0, Beta = 1 };

struct KunnethCycle {
  std::array<int, 3> degree{};
  std::array<std::optional<Generator>, 3> generator{};

  bool is_valid() const;
  bool is_triple_one() const { return degree == std::array<int, 3>{1, 1, 1}; }
  std::string name() const;  // e.g. "a1*b2*a3", "[C1]*b2*pt3"

  friend bool operator==(const KunnethCycle&, const KunnethCycle&) = default;
};

/// The 20 Kunneth cycles in canonical order.
const std::vector<KunnethCycle>& build_basis();

/// Index of a cycle in the canonical basis, or -1.
int basis_index(const KunnethCycle& cycle);

/// Coefficients of a class in H_1(C_tau; Z) with respect to (alpha, beta).
struct H1Class {
  long alpha = 0;
  long beta = 0;
};

class HomologyClass {
 public:
  using Coeffs = std::array<long, kBasisSize>;

  HomologyClass() { coeffs_.fill(0); }
  explicit HomologyClass(const Coeffs& coeffs) : coeffs_(coeffs) {}

  static HomologyClass basis(int index);

  /// Product class f1 x f2 x f3 of three 1-cycles; lands in the (1,1,1) block.
  static HomologyClass product(const H1Class& f1, const H1Class& f2, const H1Class& f3);

  long operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  long& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const;

  HomologyClass& operator+=(const HomologyClass& o);
  HomologyClass& operator-=(const HomologyClass& o);
  friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
  friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a -= b; }
  friend HomologyClass operator-(const HomologyClass& a);
  friend HomologyClass operator*(long k, const HomologyClass& a);
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

 private:
  Coeffs coeffs_;
};

using IntMatrix20 = std::array<std::array<int, kBasisSize>, kBasisSize>;

/// Intersection number of two basis cycles by the per-factor product rule.
int basis_intersection(const KunnethCycle& a, const KunnethCycle& b);

/// Q with Q[i][j] = <e_i, e_j>. Antisymmetric and unimodular.
const IntMatrix20& intersection_form();

/// Oriented intersection number <gamma, delta>; bilinear and antisymmetric.
long intersection(const HomologyClass& gamma, const HomologyClass& delta);

/// Q * coeffs(Gamma). Entry gamma is the integral over gamma of the
/// Poincare-dual 3-form of Gamma, which equals <gamma, Gamma>.
std::array<long, kBasisSize> class_pairing_vector(const HomologyClass& charge);

/// Exact determinant of an integer matrix (fraction-free elimination).
long long integer_determinant(std::vector<std::vector<long long>> m);

/// Q^{-T}, the matrix of the cup-product pairing in period coordinates:
/// int_Y w ^ eta = P_w^T Q^{-T} P_eta. Entries are integers since Q is unimodular.
const IntMatrix20& cup_product_matrix();

}  // namespace slag
