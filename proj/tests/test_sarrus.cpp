#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "dpm/sarrus.hpp"

using namespace dpm;

namespace {
const double kPi = std::acos(-1.0);

// projection of s onto the span of the three basis screws
double span_residual(const std::array<Screw, 3>& basis, const Vec6& s) {
  Eigen::Matrix<double, 6, 3> B;
  for (int i = 0; i < 3; ++i) B.col(i) = basis[static_cast<std::size_t>(i)].to_vector();
  const Eigen::Matrix<double, 6, 3> Q =
      Eigen::HouseholderQR<Eigen::Matrix<double, 6, 3>>(B).householderQ() *
      Eigen::Matrix<double, 6, 3>::Identity();
  return (s - Q * (Q.transpose() * s)).norm();
}
}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(SarrusParams::make(0.0, 1.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(SarrusParams::make(-1.0, 1.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(SarrusParams::make(1.0, 0.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(SarrusParams::make(1.0, kPi, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(SarrusParams::make(1.0, 1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(SarrusParams::make(1.0, 1.0, kPi / 2.0 + 0.1), std::invalid_argument);

  const SarrusParams p = SarrusParams::make(2.0, 1.0, 0.4);
  CHECK(p.alpha == doctest::Approx(0.5));
  CHECK(p.b == doctest::Approx(1.0));
  CHECK(p.l == doctest::Approx(1.0));
}

TEST_CASE("joint screw coordinates") {
  const double a = 1.0, gamma = 1.1, phi = 0.7;
  const SarrusParams p = SarrusParams::make(a, gamma, phi);
  const double al = gamma / 2.0, b = a / 2.0, l = a / 2.0;
  const double sa = std::sin(al), ca = std::cos(al), sp = std::sin(phi), cp = std::cos(phi);

  const auto L1 = limb1_screws(p);
  const auto L2 = limb2_screws(p);

  CHECK(L1[0].to_vector().isApprox(
      (Vec6() << sa, 0, ca, -b * ca * sp, l * ca, b * sa * sp).finished(), 1e-14));
  CHECK(L1[1].to_vector().isApprox(
      (Vec6() << sa, 0, ca, 0, l * ca - b * cp, 0).finished(), 1e-14));
  CHECK(L1[2].to_vector().isApprox(
      (Vec6() << sa, 0, ca, b * ca * sp, l * ca, -b * sa * sp).finished(), 1e-14));
  CHECK(L2[0].to_vector().isApprox(
      (Vec6() << -sa, 0, ca, -b * ca * sp, -l * ca, -b * sa * sp).finished(), 1e-14));
  CHECK(L2[1].to_vector().isApprox(
      (Vec6() << -sa, 0, ca, 0, b * cp - l * ca, 0).finished(), 1e-14));
  CHECK(L2[2].to_vector().isApprox(
      (Vec6() << -sa, 0, ca, b * ca * sp, -l * ca, b * sa * sp).finished(), 1e-14));

  // the matrix form stacks the six screws as columns in joint order
  const Mat6 S = local_joint_screws(p);
  for (int i = 0; i < 3; ++i) {
    CHECK(S.col(i).isApprox(L1[static_cast<std::size_t>(i)].to_vector(), 1e-14));
    CHECK(S.col(i + 3).isApprox(L2[static_cast<std::size_t>(i)].to_vector(), 1e-14));
  }

  // each limb's three axes are parallel (Sarrus condition)
  CHECK(L1[0].omega.cross(L1[1].omega).norm() < 1e-14);
  CHECK(L1[1].omega.cross(L1[2].omega).norm() < 1e-14);
  CHECK(L2[0].omega.cross(L2[2].omega).norm() < 1e-14);
}

TEST_CASE("folded-flat middle joint moment") {
  // at phi = 0 the limb-2 middle joint moment is [0, b - l cos(alpha), 0]
  const SarrusParams p = SarrusParams::make(1.0, 1.1, 0.0);
  const auto L2 = limb2_screws(p);
  const double expect_y = p.b - p.l * std::cos(p.alpha);
  CHECK(L2[1].to_vector()[4] == doctest::Approx(expect_y).epsilon(1e-14));
}

TEST_CASE("limb constraint systems") {
  const double gamma = 2.0 * std::atan(1.2);
  const SarrusParams p = SarrusParams::make(1.0, gamma, 0.6);
  const double ta = std::tan(p.alpha), cta = 1.0 / std::tan(p.alpha);

  const auto L1 = limb1_screws(p);
  const auto L2 = limb2_screws(p);
  const auto C1 = limb_constraint_system(L1);
  const auto C2 = limb_constraint_system(L2);

  // every constraint screw is reciprocal to every screw of its limb
  for (const Screw& c : C1) {
    for (const Screw& s : L1) CHECK(std::abs(reciprocal_product(c, s)) < 1e-12);
  }
  for (const Screw& c : C2) {
    for (const Screw& s : L2) CHECK(std::abs(reciprocal_product(c, s)) < 1e-12);
  }

  // the span equals the closed-form three-system for each limb
  const Vec6 w1a = (Vec6() << ta, 0, 1, 0, 0, 0).finished().normalized();
  const Vec6 wy = (Vec6() << 0, 0, 0, 0, 1, 0).finished();
  const Vec6 w1c = (Vec6() << 0, 0, 0, -cta, 0, 1).finished().normalized();
  CHECK(span_residual(C1, w1a) < 1e-10);
  CHECK(span_residual(C1, wy) < 1e-10);
  CHECK(span_residual(C1, w1c) < 1e-10);
  const Vec6 w2a = (Vec6() << -ta, 0, 1, 0, 0, 0).finished().normalized();
  const Vec6 w2c = (Vec6() << 0, 0, 0, cta, 0, 1).finished().normalized();
  CHECK(span_residual(C2, w2a) < 1e-10);
  CHECK(span_residual(C2, wy) < 1e-10);
  CHECK(span_residual(C2, w2c) < 1e-10);

  // combined multiset: rank 5 with a pure-translation nullspace along y
  ScrewMatrix comb(6, 6);
  for (int i = 0; i < 3; ++i) {
    comb.col(i) = C1[static_cast<std::size_t>(i)].to_vector();
    comb.col(i + 3) = C2[static_cast<std::size_t>(i)].to_vector();
  }
  CHECK(numerical_rank(comb.transpose()) == 5);

  // motion reciprocal to all six constraints = straight-line screw
  ScrewMatrix pairing(6, 6);
  // the reciprocal pairing swaps the angular and moment blocks
  for (int i = 0; i < 6; ++i) {
    Vec6 c = comb.col(i);
    pairing.row(i) << c[3], c[4], c[5], c[0], c[1], c[2];
  }
  const auto motion = nullspace_basis(pairing);
  REQUIRE(motion.size() == 1);
  const Vec6 m = motion[0];
  const Vec6 want = equivalent_motion_screw(p).to_vector();
  CHECK(std::min((m - want).norm(), (m + want).norm()) < 1e-12);
}

TEST_CASE("constraint space is fold-independent") {
  const double gamma = 1.3;
  const auto Ca = limb_constraint_system(limb1_screws(SarrusParams::make(1.0, gamma, 0.2)));
  const auto Cb = limb_constraint_system(limb1_screws(SarrusParams::make(1.0, gamma, 1.2)));
  for (const Screw& c : Cb) {
    CHECK(span_residual(Ca, c.to_vector()) < 1e-10);
  }
}

TEST_CASE("degenerate limb rejected") {
  // three identical screws span rank 1, not 3
  const SarrusParams p = SarrusParams::make(1.0, 1.1, 0.4);
  const Screw s = limb1_screws(p)[0];
  CHECK_THROWS_AS(limb_constraint_system({s, s, s}), std::runtime_error);
}

TEST_CASE("equivalent motion screw and separation") {
  const SarrusParams p = SarrusParams::make(3.0, 0.9, 0.5);
  const Vec6 eq = equivalent_motion_screw(p).to_vector();
  CHECK(eq.isApprox((Vec6() << 0, 0, 0, 0, 1, 0).finished(), 1e-15));
  CHECK(platform_separation(p) == doctest::Approx(2.0 * p.b * std::sin(p.phi)).epsilon(1e-15));
  CHECK(platform_separation(SarrusParams::make(3.0, 0.9, 0.0)) == doctest::Approx(0.0));
}

TEST_CASE("seeded reciprocity sample") {
  std::mt19937 rng(20260818);
  std::uniform_real_distribution<double> ua(0.1, 5.0);
  std::uniform_real_distribution<double> ug(0.15, kPi - 0.15);
  std::uniform_real_distribution<double> up(0.0, kPi / 2.0);
  for (int k = 0; k < 200; ++k) {
    const SarrusParams p = SarrusParams::make(ua(rng), ug(rng), up(rng));
    const auto L1 = limb1_screws(p);
    const auto C1 = limb_constraint_system(L1);
    for (const Screw& c : C1) {
      for (const Screw& s : L1) CHECK(std::abs(reciprocal_product(c, s)) < 1e-10);
    }
  }
}
