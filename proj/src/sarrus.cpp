#include "dpm/sarrus.hpp"

#include <cmath>
#include <stdexcept>

namespace dpm {

SarrusParams SarrusParams::make(double a, double gamma, double phi) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("SarrusParams::make: edge length a must be positive and finite");
  }
  const double pi = std::acos(-1.0);
  if (!(gamma > 0.0) || !(gamma < pi)) {
    throw std::invalid_argument("SarrusParams::make: gamma must lie in (0, pi)");
  }
  if (!(phi >= 0.0) || !(phi <= pi / 2.0 + kGeometryTol)) {
    throw std::invalid_argument("SarrusParams::make: phi must lie in [0, pi/2]");
  }
  SarrusParams p;
  p.a = a;
  p.gamma = gamma;
  p.alpha = gamma / 2.0;
  p.b = a / 2.0;
  p.l = a / 2.0;
  p.phi = phi;
  return p;
}

std::array<Screw, 3> limb1_screws(const SarrusParams& p) {
  const double sa = std::sin(p.alpha);
  const double ca = std::cos(p.alpha);
  const double sp = std::sin(p.phi);
  const double cp = std::cos(p.phi);
  const Vec3 w(sa, 0.0, ca);
  std::array<Screw, 3> s;
  s[0] = Screw{w, Vec3(-p.b * ca * sp, p.l * ca, p.b * sa * sp)};
  s[1] = Screw{w, Vec3(0.0, p.l * ca - p.b * cp, 0.0)};
  s[2] = Screw{w, Vec3(p.b * ca * sp, p.l * ca, -p.b * sa * sp)};
  return s;
}

std::array<Screw, 3> limb2_screws(const SarrusParams& p) {
  const double sa = std::sin(p.alpha);
  const double ca = std::cos(p.alpha);
  const double sp = std::sin(p.phi);
  const double cp = std::cos(p.phi);
  const Vec3 w(-sa, 0.0, ca);
  std::array<Screw, 3> s;
  s[0] = Screw{w, Vec3(-p.b * ca * sp, -p.l * ca, -p.b * sa * sp)};
  s[1] = Screw{w, Vec3(0.0, p.b * cp - p.l * ca, 0.0)};
  s[2] = Screw{w, Vec3(p.b * ca * sp, -p.l * ca, p.b * sa * sp)};
  return s;
}

Mat6 local_joint_screws(const SarrusParams& p) {
  const auto l1 = limb1_screws(p);
  const auto l2 = limb2_screws(p);
  Mat6 m;
  for (int i = 0; i < 3; ++i) {
    m.col(i) = l1[static_cast<std::size_t>(i)].to_vector();
    m.col(i + 3) = l2[static_cast<std::size_t>(i)].to_vector();
  }
  return m;
}

std::array<Screw, 3> limb_constraint_system(const std::array<Screw, 3>& limb) {
  // Stack the three motion screws as rows, post-multiply by the swap operator
  // so that ordinary nullspace vectors of the product are reciprocal screws.
  ScrewMatrix rows(3, 6);
  for (int i = 0; i < 3; ++i) {
    rows.row(i) = limb[static_cast<std::size_t>(i)].to_vector().transpose();
  }
  if (numerical_rank(rows) != 3) {
    throw std::runtime_error(
        "limb_constraint_system: limb screw system is degenerate (rank != 3)");
  }
  ScrewMatrix swapped(3, 6);
  swapped.block(0, 0, 3, 3) = rows.block(0, 3, 3, 3);
  swapped.block(0, 3, 3, 3) = rows.block(0, 0, 3, 3);
  const auto basis = nullspace_basis(swapped, kDefaultRankTol);
  if (basis.size() != 3) {
    throw std::runtime_error("limb_constraint_system: reciprocal space is not 3-dimensional");
  }
  std::array<Screw, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = Screw::from_vector(basis[i]);
  }
  return out;
}

Screw equivalent_motion_screw(const SarrusParams&) {
  return Screw{Vec3::Zero(), Vec3(0.0, 1.0, 0.0)};
}

double platform_separation(const SarrusParams& p) {
  return 2.0 * p.b * std::sin(p.phi);
}

}  // namespace dpm
