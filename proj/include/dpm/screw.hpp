#pragma once

#include <Eigen/Dense>

#include <vector>

namespace dpm {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Dense real matrix; assembled constraint matrices stack one 6-row band per
/// independent loop.
using ScrewMatrix = Eigen::MatrixXd;

/// Tolerance for exact geometric invariants (orthonormality, unit axes).
inline constexpr double kGeometryTol = 1e-12;

/// Default relative threshold for rank decisions: a singular value counts as
/// nonzero when sigma > tol * sigma_max * max(rows, cols).
inline constexpr double kDefaultRankTol = 1e-9;

/// Twist (or wrench) in ray-order Pluecker coordinates [omega | v]:
/// omega is the angular direction, v the moment / linear part.
struct Screw {
  Vec3 omega = Vec3::Zero();
  Vec3 v = Vec3::Zero();

  Screw() = default;
  Screw(const Vec3& omega_, const Vec3& v_) : omega(omega_), v(v_) {}

  /// Rotation about a unit axis through a point: [axis | point x axis].
  /// Throws std::invalid_argument unless |axis| = 1 within 1e-12.
  static Screw revolute(const Vec3& axis, const Vec3& point);

  /// Pure translation along a unit direction: [0 | dir].
  /// Throws std::invalid_argument unless |dir| = 1 within 1e-12.
  static Screw prismatic(const Vec3& dir);

  static Screw from_vector(const Vec6& s) { return Screw(s.head<3>(), s.tail<3>()); }
  Vec6 to_vector() const;

  bool is_zero(double tol = kGeometryTol) const {
    return omega.norm() <= tol && v.norm() <= tol;
  }
};

/// Symmetric reciprocal pairing omega_a . v_b + omega_b . v_a (the virtual
/// work of a twist against a wrench in ray order). Total function.
double reciprocal_product(const Screw& a, const Screw& b);

/// Proper rigid displacement (R, p). The constructor rejects R that is not a
/// rotation: ||R^T R - I|| <= 1e-12 and det R = +1 within 1e-12.
struct RigidTransform {
  Mat3 R = Mat3::Identity();
  Vec3 p = Vec3::Zero();

  RigidTransform() = default;
  RigidTransform(const Mat3& R_, const Vec3& p_);
};

/// Skew-symmetric matrix of w, so that skew(w) * u = w x u.
Mat3 skew(const Vec3& w);

/// Adjoint action on a screw: [R*omega | skew(p)*R*omega + R*v].
/// Preserves the reciprocal pairing of any two screws.
Screw adjoint(const RigidTransform& T, const Screw& s);

/// 6x6 adjoint matrix [[R, 0], [skew(p)R, R]] (acts on ray-order columns).
Mat6 adjoint_matrix(const RigidTransform& T);

/// Number of singular values above tol * sigma_max * max(rows, cols).
/// Throws std::invalid_argument on an empty matrix or non-finite entries.
int numerical_rank(const ScrewMatrix& M, double tol = kDefaultRankTol);

/// Orthonormal basis of the right nullspace (columns of V past the rank, per
/// the same threshold as numerical_rank). size() == cols - rank.
std::vector<Eigen::VectorXd> nullspace_basis(const ScrewMatrix& M,
                                             double tol = kDefaultRankTol);

}  // namespace dpm
