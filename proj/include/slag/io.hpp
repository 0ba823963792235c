#pragma once

// JSON and CSV conversion for the toolkit's value types.

#include "slag/flow.hpp"
#include "slag/kappa.hpp"
#include "slag/lawlor.hpp"
#include "slag/sl_planes.hpp"
#include "slag/smoothing.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace slag::io {

using nlohmann::json;

/// Shortest round-tripping text at 17 significant digits, classic locale.
std::string format_double(double v);

json to_json(cplx z);  // [re, im]
cplx complex_from_json(const json& j);

json to_json(const ModuliPoint& m);  // three [re, im] pairs
ModuliPoint moduli_from_json(const json& j);

json to_json(const HomologyClass& c);  // length-20 integer array
HomologyClass class_from_json(const json& j);

json to_json(const SLPlane& p);  // {"frame": m x m of [re, im], "orientation": +-1}
SLPlane plane_from_json(const json& j);

json to_json(const AngleSpectrum& s);

json to_json(const SLConfiguration& c);
SLConfiguration configuration_from_json(const json& j);

json to_json(const NeckAssignment& a);  // values plus exact "p/q" strings
json to_json(const NeckInvariants& inv);
json to_json(const NeckModuli& a);

json to_json(const GluingRates& r);
GluingRates rates_from_json(const json& j);

json to_json(const Trajectory& t);  // summary: charge, status, endpoints, sample count
json to_json(const SplitFlowNode& node);
json to_json(const LiftReport& rep);

/// Columns: mu, Re/Im tau1..tau3, Re/Im Z, alpha, tau_of_mu, residual.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const std::vector<double>& residual);

}  // namespace slag::io
