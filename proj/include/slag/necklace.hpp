#pragma once

// The necklace of three sL tori L1 = a1a2a3, L2 = -b1b2b3, L3 = (b-a)^3 in
// C_t1 x C_t2 x C_t3, and the certificate run over it.

#include "slag/smoothing.hpp"
#include "slag/sl_planes.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <vector>

namespace slag {

std::array<HomologyClass, 3> necklace_classes();

/// tau = (e^{i pi/3}, e^{i pi/3}, e^{i pi/3}).
ModuliPoint necklace_symmetric_point();

/// Linear lifts of L1, L2, L3 to C^3 at the moduli point m: the columns of
/// L_j are the unit vectors along the per-factor 1-cycle, e.g. -tau_k/|tau_k|.
std::array<SLPlane, 3> necklace_planes(const ModuliPoint& m);

/// Three T^3 components (b1 = 3) with intersections L1->L2, L2->L3, L3->L1.
SLConfiguration necklace_configuration();

struct CertificateCheck {
  std::string name;
  bool passed = false;
  nlohmann::json detail;
};

struct NecklaceCertificate {
  std::vector<CertificateCheck> checks;
  bool passed() const;
  nlohmann::json to_json() const;
};

NecklaceCertificate necklace_certificate(const ModuliPoint& m, double vol_y = 1.0);

}  // namespace slag
