#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "dpm/kinematics.hpp"

using namespace dpm;

namespace {
const double kPi = std::acos(-1.0);
const double deg = kPi / 180.0;

Mechanism make(const char* name, double phi_deg) {
  const PolyhedronKind kind = PolyhedronKind::parse(name);
  return build_mechanism(kind, 1.0, gamma_max(kind), phi_deg * deg);
}

// distance of the first platform's plane from the origin (Newell normal)
double platform_plane_distance(const ConfigurationMesh& mesh) {
  const MeshFace& f = mesh.faces.front();
  REQUIRE(f.label == FaceLabel::Platform);
  Vec3 nrm = Vec3::Zero();
  for (std::size_t i = 0; i < f.verts.size(); ++i) {
    const Vec3& p = mesh.vertices[static_cast<std::size_t>(f.verts[i])];
    const Vec3& q = mesh.vertices[static_cast<std::size_t>(f.verts[(i + 1) % f.verts.size()])];
    nrm += p.cross(q);
  }
  return std::abs(nrm.normalized().dot(mesh.vertices[static_cast<std::size_t>(f.verts[0])]));
}

bool vertex_set_invariant(const std::vector<Vec3>& pts, const Mat3& g) {
  for (const Vec3& p : pts) {
    const Vec3 q = g * p;
    double best = 1e9;
    for (const Vec3& r : pts) best = std::min(best, (q - r).norm());
    if (best > 1e-9) return false;
  }
  return true;
}

Mat3 rodrigues(const Vec3& axis, double angle) {
  const Mat3 K = skew(axis.normalized());
  return Mat3::Identity() + std::sin(angle) * K + (1.0 - std::cos(angle)) * K * K;
}

std::set<std::pair<int, int>> undirected_edges(const ConfigurationMesh& mesh) {
  std::set<std::pair<int, int>> out;
  for (const MeshFace& f : mesh.faces) {
    for (std::size_t i = 0; i < f.verts.size(); ++i) {
      const int a = f.verts[i];
      const int b = f.verts[(i + 1) % f.verts.size()];
      out.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return out;
}
}  // namespace

TEST_CASE("curve endpoints") {
  const CurveSample s0 = tetra_deployment_point(1.0, 0.0);
  CHECK(s0.r == doctest::Approx(std::sqrt(6.0) / 12.0).epsilon(1e-12));
  CHECK(s0.R == doctest::Approx(std::sqrt(6.0) / 4.0).epsilon(1e-12));
  CHECK(s0.V == doctest::Approx(std::sqrt(2.0) / 12.0).epsilon(1e-12));
  const CurveSample s9 = tetra_deployment_point(1.0, kPi / 2.0);
  CHECK(s9.r == doctest::Approx(std::sqrt(6.0) / 3.0).epsilon(1e-12));
  CHECK(s9.R == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s9.V == doctest::Approx(5.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));

  // length scaling: r, R scale with a; V with a^3
  const CurveSample sa = tetra_deployment_point(2.0, 0.4);
  const CurveSample s1 = tetra_deployment_point(1.0, 0.4);
  CHECK(sa.r == doctest::Approx(2.0 * s1.r).epsilon(1e-14));
  CHECK(sa.R == doctest::Approx(2.0 * s1.R).epsilon(1e-14));
  CHECK(sa.V == doctest::Approx(8.0 * s1.V).epsilon(1e-14));
}

TEST_CASE("curve properties on a fine grid") {
  CurveSample prev;
  bool first = true;
  for (int i = 0; i <= 180; ++i) {
    const double phi = kPi / 2.0 * i / 180.0;
    const CurveSample s = tetra_deployment_point(1.0, phi);
    CHECK(s.r < s.R);
    if (!first) {
      CHECK(s.r > prev.r);
      CHECK(s.R > prev.R);
      CHECK(s.V > prev.V);
    }
    prev = s;
    first = false;
  }

  // dV/dphi: central difference against the analytic derivative
  for (double phi_deg : {10.0, 30.0, 45.0, 60.0, 80.0}) {
    const double phi = phi_deg * deg;
    const double h = 1e-5;
    const double fd =
        (tetra_deployment_point(1.0, phi + h).V - tetra_deployment_point(1.0, phi - h).V) /
        (2.0 * h);
    const double sp = std::sin(phi), cp = std::cos(phi);
    const double analytic =
        std::sqrt(2.0) * (3.0 * sp * sp * cp + 18.0 * sp * cp + 9.0 * cp) / 12.0;
    CHECK(fd == doctest::Approx(analytic).epsilon(1e-6));
  }
}

TEST_CASE("curve validation") {
  CHECK_THROWS_AS(tetra_deployment_point(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(tetra_deployment_point(-2.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(tetra_deployment_point(1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(tetra_deployment_point(1.0, kPi / 2.0 + 0.1), std::invalid_argument);
  CHECK_THROWS_AS(tetra_deployment_curve(1.0, 1), std::invalid_argument);
  const auto two = tetra_deployment_curve(1.0, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].phi == 0.0);
  CHECK(two[1].phi == doctest::Approx(kPi / 2.0));
  CHECK(tetra_deployment_curve(1.0, 91).size() == 91);
}

TEST_CASE("mesh counts and watertightness") {
  struct Row {
    const char* name;
    int platform, limb, newface;
  };
  const Row rows[] = {
      {"tetrahedron", 4, 6, 4},
      {"cube", 6, 12, 8},
      {"dodecahedron", 12, 30, 20},
      {"prism5", 7, 15, 10},
  };
  for (const Row& row : rows) {
    for (double phi_deg : {0.0, 37.0, 90.0}) {
      CAPTURE(row.name);
      CAPTURE(phi_deg);
      const Mechanism mech = make(row.name, phi_deg);
      const ConfigurationMesh mesh = configuration_mesh(mech);
      CHECK(is_watertight(mesh));
      // Euler characteristic of a sphere
      CHECK(static_cast<int>(mesh.vertices.size()) - mesh_edge_count(mesh) +
                static_cast<int>(mesh.faces.size()) ==
            2);

      int n_platform = 0, n_limb = 0, n_newface = 0;
      for (const MeshFace& f : mesh.faces) {
        if (f.label == FaceLabel::Platform) ++n_platform;
        if (f.label == FaceLabel::Limb) ++n_limb;
        if (f.label == FaceLabel::NewFace) ++n_newface;
      }
      CHECK(n_platform == row.platform);
      if (phi_deg == 0.0) {
        // folded flat: the plain solid, split corners all welded
        CHECK(n_limb == 0);
        CHECK(n_newface == 0);
        CHECK(mesh.vertices.size() == mech.poly.verts.size());
        CHECK(mesh.delta == 0.0);
      } else {
        CHECK(n_limb == row.limb);
        CHECK(n_newface == row.newface);
      }

      // every platform edge keeps length a
      for (const MeshFace& f : mesh.faces) {
        if (f.label != FaceLabel::Platform) continue;
        for (std::size_t i = 0; i < f.verts.size(); ++i) {
          const Vec3& p = mesh.vertices[static_cast<std::size_t>(f.verts[i])];
          const Vec3& q =
              mesh.vertices[static_cast<std::size_t>(f.verts[(i + 1) % f.verts.size()])];
          CHECK((p - q).norm() == doctest::Approx(mech.a).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("mesh agrees with the closed forms") {
  for (int i = 0; i < 19; ++i) {
    const double phi_deg = 90.0 * i / 18.0;
    CAPTURE(phi_deg);
    const Mechanism mech = make("tetrahedron", phi_deg);
    const ConfigurationMesh mesh = configuration_mesh(mech);
    const CurveSample s = tetra_deployment_point(1.0, phi_deg * deg);
    CHECK(platform_plane_distance(mesh) == doctest::Approx(s.r).epsilon(1e-6));
    CHECK(max_vertex_radius(mesh) == doctest::Approx(s.R).epsilon(1e-6));
    CHECK(mesh_volume(mesh) == doctest::Approx(s.V).epsilon(1e-6));
  }
}

TEST_CASE("deployed hulls") {
  // fully deployed tetrahedron: 12 vertices on the unit sphere, 24 edges of
  // length a
  {
    const ConfigurationMesh mesh = configuration_mesh(make("tetrahedron", 90.0));
    CHECK(mesh.vertices.size() == 12);
    for (const Vec3& p : mesh.vertices) {
      CHECK(p.norm() == doctest::Approx(1.0).epsilon(1e-9));
    }
    const auto edges = undirected_edges(mesh);
    CHECK(edges.size() == 24);
    for (const auto& [i, j] : edges) {
      CHECK((mesh.vertices[static_cast<std::size_t>(i)] -
             mesh.vertices[static_cast<std::size_t>(j)])
                .norm() == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  // fully deployed cube: 24 equidistant vertices, 48 unit edges
  {
    const ConfigurationMesh mesh = configuration_mesh(make("cube", 90.0));
    CHECK(mesh.vertices.size() == 24);
    const double r0 = mesh.vertices.front().norm();
    for (const Vec3& p : mesh.vertices) {
      CHECK(p.norm() == doctest::Approx(r0).epsilon(1e-9));
    }
    const auto edges = undirected_edges(mesh);
    CHECK(edges.size() == 48);
    for (const auto& [i, j] : edges) {
      CHECK((mesh.vertices[static_cast<std::size_t>(i)] -
             mesh.vertices[static_cast<std::size_t>(j)])
                .norm() == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  // fully deployed dodecahedron: 60 equidistant vertices, 120 unit edges
  {
    const ConfigurationMesh mesh = configuration_mesh(make("dodecahedron", 90.0));
    CHECK(mesh.vertices.size() == 60);
    const double r0 = mesh.vertices.front().norm();
    for (const Vec3& p : mesh.vertices) {
      CHECK(p.norm() == doctest::Approx(r0).epsilon(1e-9));
    }
    CHECK(undirected_edges(mesh).size() == 120);
  }
}

TEST_CASE("symmetry preservation") {
  // the deployed vertex set stays invariant under the host solid's point
  // group generators at every fold angle
  const Mat3 cyc = (Mat3() << 0, 1, 0, 0, 0, 1, 1, 0, 0).finished();  // x->y->z->x

  for (double phi_deg : {15.0, 40.0, 75.0}) {
    CAPTURE(phi_deg);
    {
      const ConfigurationMesh mesh = configuration_mesh(make("tetrahedron", phi_deg));
      const Mat3 swap_xy = (Mat3() << 0, 1, 0, 1, 0, 0, 0, 0, 1).finished();
      CHECK(vertex_set_invariant(mesh.vertices, cyc));
      CHECK(vertex_set_invariant(mesh.vertices, swap_xy));
    }
    {
      const ConfigurationMesh mesh = configuration_mesh(make("cube", phi_deg));
      Mat3 flip_x = Mat3::Identity();
      flip_x(0, 0) = -1.0;
      CHECK(vertex_set_invariant(mesh.vertices, cyc));
      CHECK(vertex_set_invariant(mesh.vertices, flip_x));
    }
    {
      const Mechanism mech = make("dodecahedron", phi_deg);
      const ConfigurationMesh mesh = configuration_mesh(mech);
      CHECK(vertex_set_invariant(mesh.vertices, cyc));
      CHECK(vertex_set_invariant(mesh.vertices, -Mat3::Identity()));
      // five-fold rotation about a face axis
      const Mat3 r5 = rodrigues(mech.poly.faces[0].normal, 2.0 * kPi / 5.0);
      CHECK(vertex_set_invariant(mesh.vertices, r5));
    }
  }
}

TEST_CASE("mesh metadata") {
  const ConfigurationMesh mesh = configuration_mesh(make("dodecahedron", 30.0));
  CHECK(mesh.kind == PolyhedronKind::dodecahedron());
  CHECK(mesh.a == 1.0);
  CHECK(mesh.phi == doctest::Approx(30.0 * deg));
  CHECK(mesh.delta ==
        doctest::Approx(face_displacement(1.0, 58.282526 * deg, 30.0 * deg)).epsilon(1e-6));
  // the build's source-catalog flags ride along
  CHECK_FALSE(mesh.notes.empty());
  CHECK(face_label_name(FaceLabel::Platform) == "platform");
  CHECK(face_label_name(FaceLabel::Limb) == "limb");
  CHECK(face_label_name(FaceLabel::NewFace) == "newface");
}
