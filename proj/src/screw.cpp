#include "dpm/screw.hpp"

#include <cmath>
#include <stdexcept>

namespace dpm {

Screw Screw::revolute(const Vec3& axis, const Vec3& point) {
  if (std::abs(axis.norm() - 1.0) > kGeometryTol) {
    throw std::invalid_argument("Screw::revolute: axis must be a unit vector");
  }
  return Screw(axis, point.cross(axis));
}

Screw Screw::prismatic(const Vec3& dir) {
  if (std::abs(dir.norm() - 1.0) > kGeometryTol) {
    throw std::invalid_argument("Screw::prismatic: direction must be a unit vector");
  }
  return Screw(Vec3::Zero(), dir);
}

Vec6 Screw::to_vector() const {
  Vec6 s;
  s.head<3>() = omega;
  s.tail<3>() = v;
  return s;
}

double reciprocal_product(const Screw& a, const Screw& b) {
  return a.omega.dot(b.v) + b.omega.dot(a.v);
}

RigidTransform::RigidTransform(const Mat3& R_, const Vec3& p_) : R(R_), p(p_) {
  const double ortho_err = (R.transpose() * R - Mat3::Identity()).norm();
  if (ortho_err > kGeometryTol || std::abs(R.determinant() - 1.0) > kGeometryTol) {
    throw std::invalid_argument(
        "RigidTransform: R must be orthonormal with det +1 (tol 1e-12)");
  }
}

Mat3 skew(const Vec3& w) {
  Mat3 m;
  m << 0, -w.z(), w.y(),
       w.z(), 0, -w.x(),
       -w.y(), w.x(), 0;
  return m;
}

Screw adjoint(const RigidTransform& T, const Screw& s) {
  const Vec3 w = T.R * s.omega;
  return Screw(w, skew(T.p) * w + T.R * s.v);
}

Mat6 adjoint_matrix(const RigidTransform& T) {
  Mat6 A = Mat6::Zero();
  A.topLeftCorner<3, 3>() = T.R;
  A.bottomLeftCorner<3, 3>() = skew(T.p) * T.R;
  A.bottomRightCorner<3, 3>() = T.R;
  return A;
}

namespace {

void validate_matrix(const ScrewMatrix& M, const char* who) {
  if (M.size() == 0) {
    throw std::invalid_argument(std::string(who) + ": empty matrix");
  }
  if (!M.allFinite()) {
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
  }
}

int rank_from_singular_values(const Eigen::VectorXd& sv, double tol,
                              Eigen::Index rows, Eigen::Index cols) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double thresh = tol * sv(0) * static_cast<double>(std::max(rows, cols));
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > thresh) ++r;
  }
  return r;
}

}  // namespace

int numerical_rank(const ScrewMatrix& M, double tol) {
  validate_matrix(M, "numerical_rank");
  if (tol <= 0.0) {
    throw std::invalid_argument("numerical_rank: tolerance must be positive");
  }
  Eigen::BDCSVD<ScrewMatrix> svd(M);
  return rank_from_singular_values(svd.singularValues(), tol, M.rows(), M.cols());
}

std::vector<Eigen::VectorXd> nullspace_basis(const ScrewMatrix& M, double tol) {
  validate_matrix(M, "nullspace_basis");
  if (tol <= 0.0) {
    throw std::invalid_argument("nullspace_basis: tolerance must be positive");
  }
  Eigen::BDCSVD<ScrewMatrix> svd(M, Eigen::ComputeFullV);
  const int r = rank_from_singular_values(svd.singularValues(), tol, M.rows(), M.cols());
  std::vector<Eigen::VectorXd> basis;
  basis.reserve(static_cast<size_t>(M.cols() - r));
  for (Eigen::Index c = r; c < M.cols(); ++c) {
    basis.push_back(svd.matrixV().col(c));
  }
  return basis;
}

}  // namespace dpm
