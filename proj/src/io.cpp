#include "slag/io.hpp"

#include <cmath>
#include <locale>
#include <ostream>
#include <sstream>

namespace slag::io {

std::string format_double(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << v;
  return os.str();
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex number must be [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json to_json(const ModuliPoint& m) {
  json j = json::array();
  for (const auto& t : m.tau()) j.push_back(to_json(t));
  return j;
}

ModuliPoint moduli_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("moduli point must be three [re, im] pairs");
  return ModuliPoint(complex_from_json(j.at(0)), complex_from_json(j.at(1)), complex_from_json(j.at(2)));
}

json to_json(const HomologyClass& c) { return json(c.coeffs()); }

HomologyClass class_from_json(const json& j) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(kBasisSize))
    throw std::invalid_argument("homology class must be an array of 20 integers");
  HomologyClass::Coeffs c{};
  for (int i = 0; i < kBasisSize; ++i) {
    const json& v = j.at(static_cast<std::size_t>(i));
    if (!v.is_number_integer()) throw std::invalid_argument("homology class entries must be integers");
    c[static_cast<std::size_t>(i)] = v.get<long>();
  }
  return HomologyClass(c);
}

json to_json(const SLPlane& p) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < p.frame.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < p.frame.cols(); ++k) row.push_back(to_json(p.frame(i, k)));
    rows.push_back(row);
  }
  return {{"frame", rows}, {"orientation", p.orientation}};
}

SLPlane plane_from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("frame") : j;
  const int orientation = j.is_object() ? j.value("orientation", 1) : 1;
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("frame must be a nonempty matrix");
  const auto m = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd a(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const json& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m) throw std::invalid_argument("frame must be square");
    for (Eigen::Index k = 0; k < m; ++k) a(i, k) = complex_from_json(row.at(static_cast<std::size_t>(k)));
  }
  return plane_from_frame(a, orientation, 1e-10);
}

json to_json(const AngleSpectrum& s) { return {{"angles", s.angles}, {"type", s.type}}; }

json to_json(const SLConfiguration& c) {
  json comps = json::array();
  for (const auto& comp : c.components)
    comps.push_back({{"label", comp.label}, {"class", to_json(comp.charge)}, {"b1", comp.b1}});
  json xs = json::array();
  for (const auto& x : c.intersections) xs.push_back({{"label", x.label}, {"tail", x.tail}, {"head", x.head}});
  return {{"components", comps}, {"intersections", xs}};
}

SLConfiguration configuration_from_json(const json& j) {
  SLConfiguration c;
  for (const auto& comp : j.at("components")) {
    Component k;
    k.label = comp.value("label", "");
    k.charge = class_from_json(comp.at("class"));
    k.b1 = comp.value("b1", 0);
    c.components.push_back(k);
  }
  if (j.contains("intersections")) {
    for (const auto& x : j.at("intersections")) {
      Intersection it;
      if (x.is_array()) {
        it.tail = x.at(0).get<int>();
        it.head = x.at(1).get<int>();
      } else {
        it.label = x.value("label", "");
        it.tail = x.at("tail").get<int>();
        it.head = x.at("head").get<int>();
      }
      c.intersections.push_back(it);
    }
  }
  c.validate();
  return c;
}

json to_json(const NeckAssignment& a) {
  json exact = json::array();
  for (const auto& v : a.exact) exact.push_back(v.str());
  return {{"A", a.values}, {"exact", exact}, {"min_slack", a.min_slack.str()}};
}

json to_json(const NeckInvariants& inv) { return {{"phi", inv.phi}, {"A", inv.area}}; }

json to_json(const NeckModuli& a) { return {{"a", a.a}}; }

json to_json(const GluingRates& r) { return {{"m", r.m}, {"mu", r.mu}, {"lambda", r.lambda}, {"tau", r.tau}}; }

GluingRates rates_from_json(const json& j) {
  GluingRates r;
  r.m = j.at("m").get<int>();
  r.mu = j.at("mu").get<std::vector<double>>();
  r.lambda = j.contains("lambda") ? j.at("lambda").get<std::vector<double>>()
                                  : std::vector<double>(r.mu.size(), 2.0 - r.m);
  r.tau = j.at("tau").get<double>();
  r.validate();
  return r;
}

json to_json(const Trajectory& t) {
  json j = {{"class", to_json(t.charge)},
            {"volY", t.vol_y},
            {"status", to_string(t.status)},
            {"samples", t.samples.size()}};
  if (!t.samples.empty()) {
    j["mu_start"] = t.front().mu;
    j["mu_end"] = t.back().mu;
    j["start"] = to_json(t.front().m);
    j["end"] = to_json(t.back().m);
    j["tau_of_mu_end"] = t.back().tau;
  }
  return j;
}

json to_json(const SplitFlowNode& node) {
  json kids = json::array();
  for (const auto& c : node.children) kids.push_back(to_json(c));
  return {{"class", to_json(node.charge)}, {"trajectory", to_json(node.trajectory)}, {"children", kids}};
}

json to_json(const LiftReport& rep) {
  json samples = json::array();
  for (const auto& s : rep.samples) {
    json js = {{"mu", s.mu}, {"status", to_string(s.status)}};
    if (s.status == LiftStatus::Lifted) {
      js["t"] = s.t;
      js["slope"] = s.slope;
      js["admissible"] = s.admissible;
      js["joyce_residual"] = s.joyce_residual;
    }
    samples.push_back(js);
  }
  return {{"slope_limit", rep.slope_limit}, {"max_joyce_residual", rep.max_joyce_residual}, {"samples", samples}};
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const std::vector<double>& residual) {
  os << "mu,re_tau1,im_tau1,re_tau2,im_tau2,re_tau3,im_tau3,re_Z,im_Z,alpha,tau_of_mu,residual\n";
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const FlowSample& s = traj.samples[i];
    os << format_double(s.mu);
    for (const auto& t : s.m.tau()) os << ',' << format_double(t.real()) << ',' << format_double(t.imag());
    os << ',' << format_double(s.z.real()) << ',' << format_double(s.z.imag()) << ',' << format_double(s.alpha) << ','
       << format_double(s.tau) << ',' << (i < residual.size() ? format_double(residual[i]) : std::string("nan")) << '\n';
  }
}

}  // namespace slag::io
