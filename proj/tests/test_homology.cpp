#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace slag;
using namespace slag::testing;

namespace {

KunnethCycle triple(Generator a, Generator b, Generator c) {
  KunnethCycle k;
  k.degree = {1, 1, 1};
  k.generator = {a, b, c};
  return k;
}

HomologyClass product_class(long a, long b) { return HomologyClass::product({a, b}, {a, b}, {a, b}); }

}  // namespace

TEST_CASE("basis has 20 distinct valid cycles in canonical order") {
  const auto& basis = build_basis();
  REQUIRE(basis.size() == 20);
  std::set<std::string> names;
  int triples = 0;
  for (const auto& c : basis) {
    CHECK(c.is_valid());
    names.insert(c.name());
    triples += c.is_triple_one();
  }
  CHECK(names.size() == 20);
  CHECK(triples == 8);
  for (int i = 0; i < 8; ++i) CHECK(basis[static_cast<std::size_t>(i)].is_triple_one());
  CHECK(basis_index(triple(Generator::Alpha, Generator::Alpha, Generator::Alpha)) == 0);
  CHECK(basis_index(triple(Generator::Beta, Generator::Beta, Generator::Beta)) == 7);
  CHECK(basis_index(triple(Generator::Alpha, Generator::Beta, Generator::Alpha)) == 2);
  for (std::size_t i = 9; i < 20; ++i) {
    const auto& p = basis[i - 1];
    const auto& q = basis[i];
    CHECK((p.degree < q.degree || (p.degree == q.degree && p.name() < q.name())));
  }
  // stable across calls
  CHECK(&build_basis() == &basis);
}

TEST_CASE("invalid cycles are recognized") {
  KunnethCycle c;
  c.degree = {1, 1, 0};
  CHECK_FALSE(c.is_valid());
  c.degree = {2, 1, 0};
  CHECK_FALSE(c.is_valid());  // missing generator on the degree-1 factor
  c.generator[1] = Generator::Beta;
  CHECK(c.is_valid());
  c.generator[0] = Generator::Alpha;
  CHECK_FALSE(c.is_valid());
  CHECK(basis_index(KunnethCycle{}) == -1);
}

TEST_CASE("intersection form is antisymmetric and unimodular") {
  const auto& q = intersection_form();
  std::vector<std::vector<long long>> m(20, std::vector<long long>(20));
  for (std::size_t i = 0; i < 20; ++i) {
    for (std::size_t j = 0; j < 20; ++j) {
      CHECK(q[i][j] == -q[j][i]);
      m[i][j] = q[i][j];
    }
  }
  CHECK(std::llabs(integer_determinant(m)) == 1);
}

TEST_CASE("Koszul rule agrees with the determinant oracle on all 400 pairs") {
  const auto& basis = build_basis();
  const auto& q = intersection_form();
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = 0; j < 20; ++j) {
      CAPTURE(basis[i].name());
      CAPTURE(basis[j].name());
      CHECK(q[i][j] == determinant_oracle(basis[i], basis[j]));
    }
}

TEST_CASE("pairs of non-complementary shape do not intersect") {
  const auto& basis = build_basis();
  for (const auto& a : basis)
    for (const auto& b : basis) {
      bool complementary = true;
      for (std::size_t k = 0; k < 3; ++k) complementary = complementary && a.degree[k] + b.degree[k] == 2;
      if (!complementary) CHECK(basis_intersection(a, b) == 0);
    }
}

TEST_CASE("necklace intersection table") {
  const HomologyClass l1 = product_class(1, 0);
  const HomologyClass l2 = -product_class(0, 1);
  const HomologyClass l3 = product_class(-1, 1);
  CHECK(intersection(l1, l2) == 1);
  CHECK(intersection(l2, l1) == -1);
  CHECK(intersection(l2, l3) == 1);
  CHECK(intersection(l3, l1) == 1);
  CHECK(intersection(l1, l1) == 0);
  // <a1a2a3, b1b2b3> under the chosen convention
  CHECK(intersection(HomologyClass::basis(0), HomologyClass::basis(7)) == -1);
  CHECK(determinant_oracle(triple(Generator::Alpha, Generator::Alpha, Generator::Alpha),
                           triple(Generator::Beta, Generator::Beta, Generator::Beta)) == -1);
}

TEST_CASE("class_pairing_vector") {
  CHECK(class_pairing_vector(HomologyClass{}) == std::array<long, 20>{});

  const HomologyClass l1 = product_class(1, 0);
  const HomologyClass l2 = -product_class(0, 1);
  const HomologyClass l3 = product_class(-1, 1);
  const HomologyClass gamma = l1 + l2 + l3;
  const auto v = class_pairing_vector(gamma);
  long at_l1 = 0;
  for (int i = 0; i < 20; ++i) at_l1 += l1[i] * v[static_cast<std::size_t>(i)];
  // <L1, L2> + <L1, L3> = 1 - 1
  CHECK(at_l1 == 0);
  CHECK(at_l1 == intersection(l1, gamma));

  for (int trial = 0; trial < 50; ++trial) {
    const HomologyClass g = random_class();
    const HomologyClass h = random_class();
    const auto pg = class_pairing_vector(g);
    const auto ph = class_pairing_vector(h);
    const auto pgh = class_pairing_vector(g + 3 * h);
    for (int i = 0; i < 20; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      CHECK(pgh[ui] == pg[ui] + 3 * ph[ui]);
      CHECK(pg[ui] == intersection(HomologyClass::basis(i), g));
    }
  }
}

TEST_CASE("self-intersection vanishes and the form is bilinear on random classes") {
  for (int trial = 0; trial < 200; ++trial) {
    const HomologyClass a = random_class(), b = random_class(), c = random_class();
    CHECK(intersection(a, a) == 0);
    CHECK(intersection(a, b) == -intersection(b, a));
    CHECK(intersection(a + b, c) == intersection(a, c) + intersection(b, c));
    CHECK(intersection(-2 * a, c) == -2 * intersection(a, c));
  }
}

TEST_CASE("class arithmetic") {
  const HomologyClass a = random_class();
  CHECK((a - a).is_zero());
  CHECK((a + (-a)).is_zero());
  CHECK(HomologyClass{}.is_zero());
  CHECK(HomologyClass::basis(3)[3] == 1);
  CHECK_THROWS_AS(HomologyClass::basis(20), std::out_of_range);
}

TEST_CASE("cup product matrix inverts the intersection form") {
  const auto& q = intersection_form();
  const auto& x = cup_product_matrix();
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = 0; j < 20; ++j) {
      long s = 0;
      for (std::size_t k = 0; k < 20; ++k) s += static_cast<long>(q[i][k]) * x[j][k];
      CHECK(s == (i == j ? 1 : 0));
    }
}

TEST_CASE("integer determinant matches floating point on random matrices") {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(uniform_int(1, 6));
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
    Eigen::MatrixXd d(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const long v = uniform_int(-4, 4);
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        d(i, j) = static_cast<double>(v);
      }
    CHECK(integer_determinant(m) == std::llround(d.determinant()));
  }
  CHECK(integer_determinant({}) == 1);
  CHECK(integer_determinant({{0, 1}, {1, 0}}) == -1);
}
