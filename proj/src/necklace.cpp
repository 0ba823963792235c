#include "slag/necklace.hpp"

#include <cmath>
#include <numbers>

namespace slag {

namespace {

constexpr double kPi = std::numbers::pi;

SLPlane diagonal_plane(const std::array<cplx, 3>& dirs) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(3, 3);
  for (int k = 0; k < 3; ++k) a(k, k) = dirs[static_cast<std::size_t>(k)] / std::abs(dirs[static_cast<std::size_t>(k)]);
  return plane_from_frame(a);
}

}  // namespace

std::array<HomologyClass, 3> necklace_classes() {
  const H1Class a{1, 0}, b{0, 1}, ba{-1, 1};
  return {HomologyClass::product(a, a, a), -HomologyClass::product(b, b, b), HomologyClass::product(ba, ba, ba)};
}

ModuliPoint necklace_symmetric_point() {
  const cplx w = std::polar(1.0, kPi / 3);
  return ModuliPoint(w, w, w);
}

std::array<SLPlane, 3> necklace_planes(const ModuliPoint& m) {
  const auto& t = m.tau();
  return {diagonal_plane({1.0, 1.0, 1.0}), diagonal_plane({-t[0], -t[1], -t[2]}),
          diagonal_plane({t[0] - 1.0, t[1] - 1.0, t[2] - 1.0})};
}

SLConfiguration necklace_configuration() {
  const auto cls = necklace_classes();
  SLConfiguration c;
  for (int j = 0; j < 3; ++j)
    c.components.push_back({"L" + std::to_string(j + 1), cls[static_cast<std::size_t>(j)], 3});
  c.intersections = {{"p12", 0, 1}, {"p23", 1, 2}, {"p31", 2, 0}};
  return c;
}

bool NecklaceCertificate::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

nlohmann::json NecklaceCertificate::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", passed()}, {"checks", arr}};
}

NecklaceCertificate necklace_certificate(const ModuliPoint& m, double vol_y) {
  NecklaceCertificate cert;
  const auto cls = necklace_classes();
  const SLConfiguration config = necklace_configuration();

  {
    const NecklaceConstraint nc = necklace_constraint(m);
    cert.checks.push_back({"constraints",
                           nc.admissible(1e-12),
                           {{"t1t2t3", {nc.r1.real(), nc.r1.imag()}},
                            {"(t1-1)(t2-1)(t3-1)", {nc.r2.real(), nc.r2.imag()}}}});
  }

  const auto planes = necklace_planes(m);
  const std::array<std::pair<int, int>, 3> cyc{{{0, 1}, {1, 2}, {2, 0}}};
  {
    bool ok = true;
    nlohmann::json d = nlohmann::json::object();
    for (const auto& [i, j] : cyc) {
      const long hom = intersection(cls[static_cast<std::size_t>(i)], cls[static_cast<std::size_t>(j)]);
      int geo = 0;
      try {
        geo = oriented_intersection_sign(planes[static_cast<std::size_t>(i)], planes[static_cast<std::size_t>(j)]);
      } catch (const std::exception&) {
        geo = 0;
      }
      const std::string key = "L" + std::to_string(i + 1) + ".L" + std::to_string(j + 1);
      d[key] = {{"homology", hom}, {"planes", geo}};
      ok = ok && hom == 1 && geo == 1;
    }
    cert.checks.push_back({"intersections", ok, d});
  }

  {
    bool ok = true;
    nlohmann::json d = nlohmann::json::object();
    const std::array<std::tuple<int, int, double>, 3> want{{{0, 1, kPi}, {0, 2, 2 * kPi}, {1, 2, kPi}}};
    for (const auto& [i, j, target] : want) {
      const std::string key = "(L" + std::to_string(i + 1) + ",L" + std::to_string(j + 1) + ")";
      try {
        const auto s = characteristic_angles(planes[static_cast<std::size_t>(i)], planes[static_cast<std::size_t>(j)]);
        double sum = 0.0;
        for (double a : s.angles) sum += a;
        d[key] = {{"angles", s.angles}, {"sum", sum}, {"type", s.type}};
        ok = ok && std::abs(sum - target) <= 1e-9;
      } catch (const std::exception& e) {
        d[key] = {{"error", e.what()}};
        ok = false;
      }
    }
    cert.checks.push_back({"angle_sums", ok, d});
  }

  {
    bool ok = true;
    nlohmann::json d = nlohmann::json::object();
    try {
      const double a_total = phase(m, config.total_charge(), vol_y);
      d["Gamma"] = a_total;
      for (int j = 0; j < 3; ++j) {
        const double a = phase(m, cls[static_cast<std::size_t>(j)], vol_y);
        d["L" + std::to_string(j + 1)] = a;
        ok = ok && std::abs(wall_phase_gap(m, cls[static_cast<std::size_t>(j)], config.total_charge(), vol_y)) <= 1e-12;
      }
    } catch (const std::exception& e) {
      d["error"] = e.what();
      ok = false;
    }
    cert.checks.push_back({"phases", ok, d});
  }

  {
    const DualGraph g = dual_graph(config);
    const auto c = criterion_rhs(config);
    const auto sol = topological_criterion_solve(g, c);
    bool ok = sol.has_value();
    nlohmann::json d = {{"c", c}};
    if (sol) {
      for (const auto& v : sol->exact) ok = ok && v > 0 && v == sol->exact.front();
      d["A"] = sol->values;
    }
    cert.checks.push_back({"smoothing", ok, d});
  }

  {
    std::vector<int> b1;
    for (const auto& comp : config.components) b1.push_back(comp.b1);
    DualGraph disjoint = dual_graph(config);
    disjoint.edges.clear();
    const BettiPair before = connected_sum_betti(disjoint, b1);
    const BettiPair after = connected_sum_betti(dual_graph(config), b1);
    cert.checks.push_back({"betti",
                           before.b1 == 9 && after.b1 == 10 && after.b0 == 1,
                           {{"disjoint_b1", before.b1}, {"connected_sum_b1", after.b1}, {"b0", after.b0}}});
  }
  return cert;
}

}  // namespace slag
