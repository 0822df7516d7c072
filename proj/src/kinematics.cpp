#include "dpm/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace dpm {

namespace {

const double kPi = std::acos(-1.0);

void validate_curve_args(double a, double phi) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("deployment curve: edge length must be positive and finite");
  }
  if (!(phi >= 0.0) || phi > kPi / 2.0 + kGeometryTol) {
    throw std::invalid_argument("deployment curve: fold angle must lie in [0, pi/2]");
  }
}

}  // namespace

CurveSample tetra_deployment_point(double a, double phi) {
  validate_curve_args(a, phi);
  const double sp = std::sin(std::min(phi, kPi / 2.0));
  CurveSample s;
  s.phi = phi;
  s.r = std::sqrt(6.0) * a * (3.0 * sp + 1.0) / 12.0;
  s.R = a * std::sqrt((3.0 * sp * sp + 2.0 * sp + 3.0) / 8.0);
  s.V = std::sqrt(2.0) * a * a * a * (sp * sp * sp + 9.0 * sp * sp + 9.0 * sp + 1.0) / 12.0;
  return s;
}

std::vector<CurveSample> tetra_deployment_curve(double a, int samples) {
  if (samples < 2) {
    throw std::invalid_argument("deployment curve: need at least 2 samples");
  }
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double phi = (kPi / 2.0) * i / (samples - 1);
    out.push_back(tetra_deployment_point(a, phi));
  }
  return out;
}

std::string face_label_name(FaceLabel label) {
  switch (label) {
    case FaceLabel::Platform:
      return "platform";
    case FaceLabel::Limb:
      return "limb";
    case FaceLabel::NewFace:
      return "newface";
  }
  throw std::invalid_argument("face_label_name: unknown label");
}

ConfigurationMesh configuration_mesh(const Mechanism& mech) {
  const Polyhedron& poly = mech.poly;
  ConfigurationMesh mesh;
  mesh.kind = mech.kind;
  mesh.a = mech.a;
  mesh.phi = mech.phi;
  mesh.delta = face_displacement(mech.a, mech.beta_min, mech.phi);
  mesh.notes = mech.notes;

  // weld coincident corners on a 1 nm grid
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, int> vid;
  const auto add = [&](const Vec3& p) {
    const auto key = std::make_tuple(std::llround(p.x() / 1e-9), std::llround(p.y() / 1e-9),
                                     std::llround(p.z() / 1e-9));
    const auto it = vid.find(key);
    if (it != vid.end()) return it->second;
    const int id = static_cast<int>(mesh.vertices.size());
    vid.emplace(key, id);
    mesh.vertices.push_back(p);
    return id;
  };

  std::vector<std::vector<int>> faces_at_vertex(poly.verts.size());
  for (std::size_t fi = 0; fi < poly.faces.size(); ++fi) {
    const PolyFace& f = poly.faces[fi];
    MeshFace mf;
    mf.label = FaceLabel::Platform;
    for (int v : f.verts) {
      mf.verts.push_back(add(poly.verts[static_cast<std::size_t>(v)] + mesh.delta * f.normal));
      faces_at_vertex[static_cast<std::size_t>(v)].push_back(static_cast<int>(fi));
    }
    mesh.faces.push_back(std::move(mf));
  }

  for (const PolyEdge& e : poly.edges) {
    const Vec3& n1 = poly.faces[static_cast<std::size_t>(e.f1)].normal;
    const Vec3& n2 = poly.faces[static_cast<std::size_t>(e.f2)].normal;
    const Vec3& pa = poly.verts[static_cast<std::size_t>(e.va)];
    const Vec3& pb = poly.verts[static_cast<std::size_t>(e.vb)];
    MeshFace mf;
    mf.label = FaceLabel::Limb;
    mf.verts = {add(pa + mesh.delta * n1), add(pb + mesh.delta * n1), add(pb + mesh.delta * n2),
                add(pa + mesh.delta * n2)};
    if (std::set<int>(mf.verts.begin(), mf.verts.end()).size() == 4) {
      mesh.faces.push_back(std::move(mf));
    }
  }

  for (std::size_t v = 0; v < poly.verts.size(); ++v) {
    std::vector<int> ids;
    for (int fi : faces_at_vertex[v]) {
      ids.push_back(add(poly.verts[v] + mesh.delta * poly.faces[static_cast<std::size_t>(fi)].normal));
    }
    if (std::set<int>(ids.begin(), ids.end()).size() != ids.size() || ids.size() < 3) continue;
    Vec3 c = Vec3::Zero();
    for (int i : ids) c += mesh.vertices[static_cast<std::size_t>(i)];
    c /= static_cast<double>(ids.size());
    const Vec3 d = c.normalized();
    const Vec3 e1 = (mesh.vertices[static_cast<std::size_t>(ids[0])] - c).normalized();
    const Vec3 e2 = d.cross(e1);
    std::vector<std::pair<double, int>> order;
    for (int i : ids) {
      const Vec3 rel = mesh.vertices[static_cast<std::size_t>(i)] - c;
      order.emplace_back(std::atan2(rel.dot(e2), rel.dot(e1)), i);
    }
    std::sort(order.begin(), order.end());
    MeshFace mf;
    mf.label = FaceLabel::NewFace;
    for (const auto& [ang, i] : order) mf.verts.push_back(i);
    mesh.faces.push_back(std::move(mf));
  }

  // wind every face counter-clockwise seen from outside the body
  Vec3 ctr = Vec3::Zero();
  for (const Vec3& p : mesh.vertices) ctr += p;
  ctr /= static_cast<double>(mesh.vertices.size());
  for (MeshFace& mf : mesh.faces) {
    Vec3 nrm = Vec3::Zero();
    Vec3 fc = Vec3::Zero();
    const std::size_t m = mf.verts.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Vec3& p = mesh.vertices[static_cast<std::size_t>(mf.verts[i])];
      const Vec3& q = mesh.vertices[static_cast<std::size_t>(mf.verts[(i + 1) % m])];
      nrm += p.cross(q);
      fc += p;
    }
    fc /= static_cast<double>(m);
    if (nrm.dot(fc - ctr) < 0.0) std::reverse(mf.verts.begin(), mf.verts.end());
  }
  return mesh;
}

double mesh_volume(const ConfigurationMesh& mesh) {
  double vol = 0.0;
  for (const MeshFace& mf : mesh.faces) {
    for (std::size_t k = 1; k + 1 < mf.verts.size(); ++k) {
      vol += mesh.vertices[static_cast<std::size_t>(mf.verts[0])].dot(
                 mesh.vertices[static_cast<std::size_t>(mf.verts[k])].cross(
                     mesh.vertices[static_cast<std::size_t>(mf.verts[k + 1])])) /
             6.0;
    }
  }
  return vol;
}

namespace {

std::map<std::pair<int, int>, int> edge_use_counts(const ConfigurationMesh& mesh) {
  std::map<std::pair<int, int>, int> cnt;
  for (const MeshFace& mf : mesh.faces) {
    const std::size_t m = mf.verts.size();
    for (std::size_t k = 0; k < m; ++k) {
      const int i = mf.verts[k];
      const int j = mf.verts[(k + 1) % m];
      ++cnt[{std::min(i, j), std::max(i, j)}];
    }
  }
  return cnt;
}

}  // namespace

bool is_watertight(const ConfigurationMesh& mesh) {
  const auto cnt = edge_use_counts(mesh);
  if (cnt.empty()) return false;
  for (const auto& [e, c] : cnt) {
    if (c != 2) return false;
  }
  return true;
}

int mesh_edge_count(const ConfigurationMesh& mesh) {
  return static_cast<int>(edge_use_counts(mesh).size());
}

double max_vertex_radius(const ConfigurationMesh& mesh) {
  double r = 0.0;
  for (const Vec3& p : mesh.vertices) r = std::max(r, p.norm());
  return r;
}

}  // namespace dpm
