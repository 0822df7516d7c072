#pragma once

#include "dpm/screw.hpp"

#include <array>

namespace dpm {

/// Geometry of one Sarrus construction element in its local frame
/// {x_i, y_i, z_i}: the origin sits at the centre of the virtual plane
/// between the two platforms, the y-axis along the straight-line motion
/// direction, the z-axis perpendicular to the virtual plane. Each limb is a
/// pair of panels of length b hinged at the knee; the two limbs' hinge-axis
/// directions subtend the angle gamma, with alpha = gamma / 2.
struct SarrusParams {
  double a;      ///< host edge length
  double gamma;  ///< angle between the two limbs' hinge-axis directions (rad)
  double alpha;  ///< gamma / 2 (rad)
  double b;      ///< panel length, a / 2
  double l;      ///< hinge offset from the origin along x, a / 2
  double phi;    ///< folding angle between a half-limb and its platform (rad)

  /// Builds a parameter set with the pinned relations alpha = gamma/2 and
  /// b = l = a/2. Throws std::invalid_argument when a <= 0, gamma is outside
  /// (0, pi), or phi is outside [0, pi/2].
  static SarrusParams make(double a, double gamma, double phi);
};

/// Motion screws of limb 1 in the local frame. All three are revolute screws
/// with parallel axes in direction [sin(alpha), 0, cos(alpha)]:
///   S1 = [sin a, 0, cos a | -b cos a sin phi,  l cos a,            b sin a sin phi]
///   S2 = [sin a, 0, cos a |  0,                l cos a - b cos phi, 0              ]
///   S3 = [sin a, 0, cos a |  b cos a sin phi,  l cos a,           -b sin a sin phi]
std::array<Screw, 3> limb1_screws(const SarrusParams& p);

/// Motion screws of limb 2, the x -> -x mirror of limb 1 with axis direction
/// [-sin(alpha), 0, cos(alpha)]:
///   S4 = [-sin a, 0, cos a | -b cos a sin phi, -l cos a,           -b sin a sin phi]
///   S5 = [-sin a, 0, cos a |  0,                b cos phi - l cos a, 0             ]
///   S6 = [-sin a, 0, cos a |  b cos a sin phi, -l cos a,            b sin a sin phi]
std::array<Screw, 3> limb2_screws(const SarrusParams& p);

/// All six local joint screws as columns [S1 .. S6] of a 6x6 matrix
/// (limb 1 then limb 2), the per-unit block used by the constraint assembly.
Mat6 local_joint_screws(const SarrusParams& p);

/// Orthonormal basis of the 3-dimensional reciprocal (constraint) space of a
/// parallel-axis 3-revolute limb: every returned screw has zero reciprocal
/// product with every input screw. Throws std::runtime_error when the input
/// system does not have rank 3 (degenerate limb).
std::array<Screw, 3> limb_constraint_system(const std::array<Screw, 3>& limb);

/// The single motion screw reciprocal to both limbs' constraint systems:
/// a pure translation along the local y-axis, [0,0,0 | 0,1,0].
/// Independent of every parameter; the argument fixes the call-site contract.
Screw equivalent_motion_screw(const SarrusParams& p);

/// Relative displacement of platform 2 from platform 1 along the local
/// y-axis: 2 b sin(phi), each half-limb panel contributing b sin(phi).
double platform_separation(const SarrusParams& p);

}  // namespace dpm
