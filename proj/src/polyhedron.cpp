#include "dpm/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace dpm {

namespace {

const double kPi = std::acos(-1.0);

/// Recovers each face as the set of vertices maximizing v.n, ordered
/// counterclockwise around the outward normal.
std::vector<PolyFace> faces_from_normals(const std::vector<Vec3>& verts,
                                         const std::vector<Vec3>& normals) {
  std::vector<PolyFace> faces;
  faces.reserve(normals.size());
  for (const Vec3& raw : normals) {
    const Vec3 n = raw.normalized();
    double dmax = -1e300;
    for (const Vec3& v : verts) dmax = std::max(dmax, n.dot(v));
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
      if (n.dot(verts[i]) > dmax - 1e-9) idx.push_back(i);
    }
    if (idx.size() < 3) {
      throw std::runtime_error("faces_from_normals: face with fewer than 3 vertices");
    }
    Vec3 c = Vec3::Zero();
    for (int i : idx) c += verts[static_cast<std::size_t>(i)];
    c /= static_cast<double>(idx.size());
    const Vec3 e1 = (verts[static_cast<std::size_t>(idx[0])] - c).normalized();
    const Vec3 e2 = n.cross(e1);
    std::vector<std::pair<double, int>> ang;
    ang.reserve(idx.size());
    for (int i : idx) {
      const Vec3 d = verts[static_cast<std::size_t>(i)] - c;
      ang.emplace_back(std::atan2(d.dot(e2), d.dot(e1)), i);
    }
    std::sort(ang.begin(), ang.end());
    PolyFace f;
    f.normal = n;
    for (const auto& [a, i] : ang) f.verts.push_back(i);
    faces.push_back(std::move(f));
  }
  return faces;
}

std::vector<PolyEdge> edges_of(const std::vector<PolyFace>& faces) {
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    const auto& idx = faces[static_cast<std::size_t>(fi)].verts;
    const int m = static_cast<int>(idx.size());
    for (int k = 0; k < m; ++k) {
      int i = idx[static_cast<std::size_t>(k)];
      int j = idx[static_cast<std::size_t>((k + 1) % m)];
      if (i > j) std::swap(i, j);
      edge_faces[{i, j}].push_back(fi);
    }
  }
  std::vector<PolyEdge> out;
  out.reserve(edge_faces.size());
  for (const auto& [key, fl] : edge_faces) {
    if (fl.size() != 2) {
      throw std::runtime_error("edges_of: edge not shared by exactly two faces");
    }
    out.push_back(PolyEdge{key.first, key.second, fl[0], fl[1]});
  }
  return out;
}

}  // namespace

PolyhedronKind PolyhedronKind::prism(int n) {
  if (n < 3) throw std::invalid_argument("PolyhedronKind::prism: N must be >= 3");
  return {PolyTag::Prism, n};
}

PolyhedronKind PolyhedronKind::parse(const std::string& name) {
  if (name == "tetrahedron") return tetrahedron();
  if (name == "cube") return cube();
  if (name == "dodecahedron") return dodecahedron();
  if (name == "truncated-tetrahedron") return {PolyTag::TruncatedTetrahedron, 0};
  if (name == "truncated-cube") return {PolyTag::TruncatedCube, 0};
  if (name == "truncated-octahedron") return {PolyTag::TruncatedOctahedron, 0};
  if (name == "truncated-cuboctahedron") return {PolyTag::TruncatedCuboctahedron, 0};
  if (name == "truncated-dodecahedron") return {PolyTag::TruncatedDodecahedron, 0};
  if (name == "truncated-icosahedron") return {PolyTag::TruncatedIcosahedron, 0};
  if (name == "truncated-icosidodecahedron") return {PolyTag::TruncatedIcosidodecahedron, 0};
  if (name.rfind("prism", 0) == 0 && name.size() > 5) {
    const std::string digits = name.substr(5);
    if (digits.find_first_not_of("0123456789") == std::string::npos) {
      const long n = std::stol(digits);
      if (n >= 3 && n <= 1000) return prism(static_cast<int>(n));
      throw std::invalid_argument("PolyhedronKind::parse: prism N must be in [3, 1000]");
    }
  }
  throw std::invalid_argument("PolyhedronKind::parse: unknown polyhedron '" + name + "'");
}

std::string PolyhedronKind::name() const {
  switch (tag) {
    case PolyTag::Tetrahedron: return "tetrahedron";
    case PolyTag::Cube: return "cube";
    case PolyTag::Dodecahedron: return "dodecahedron";
    case PolyTag::Prism: return "prism" + std::to_string(n);
    case PolyTag::TruncatedTetrahedron: return "truncated-tetrahedron";
    case PolyTag::TruncatedCube: return "truncated-cube";
    case PolyTag::TruncatedOctahedron: return "truncated-octahedron";
    case PolyTag::TruncatedCuboctahedron: return "truncated-cuboctahedron";
    case PolyTag::TruncatedDodecahedron: return "truncated-dodecahedron";
    case PolyTag::TruncatedIcosahedron: return "truncated-icosahedron";
    case PolyTag::TruncatedIcosidodecahedron: return "truncated-icosidodecahedron";
  }
  return "unknown";
}

bool PolyhedronKind::constructible() const {
  return tag == PolyTag::Tetrahedron || tag == PolyTag::Cube ||
         tag == PolyTag::Dodecahedron || tag == PolyTag::Prism;
}

Polyhedron build_polyhedron(const PolyhedronKind& kind, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("build_polyhedron: edge length a must be positive and finite");
  }
  if (!kind.constructible()) {
    throw std::runtime_error("build_polyhedron: '" + kind.name() +
                             "' is catalog data only and not constructible in this version; "
                             "use the table command for its counts and angles");
  }
  std::vector<Vec3> verts;
  std::vector<Vec3> normals;
  switch (kind.tag) {
    case PolyTag::Tetrahedron: {
      const double s = a / (2.0 * std::sqrt(2.0));
      verts = {Vec3(-1, -1, -1) * s, Vec3(-1, 1, 1) * s, Vec3(1, -1, 1) * s,
               Vec3(1, 1, -1) * s};
      // the face opposite vertex i has outward normal -v_i
      for (int i = 0; i < 4; ++i) normals.push_back(-verts[static_cast<std::size_t>(i)]);
      break;
    }
    case PolyTag::Cube: {
      const double s = a / 2.0;
      for (double sx : {-1.0, 1.0})
        for (double sy : {-1.0, 1.0})
          for (double sz : {-1.0, 1.0}) verts.emplace_back(sx * s, sy * s, sz * s);
      normals = {Vec3(1, 0, 0),  Vec3(-1, 0, 0), Vec3(0, 1, 0),
                 Vec3(0, -1, 0), Vec3(0, 0, 1),  Vec3(0, 0, -1)};
      break;
    }
    case PolyTag::Dodecahedron: {
      const double t = (1.0 + std::sqrt(5.0)) / 2.0;  // golden ratio
      const double s = a * t / 2.0;                   // raw edge length 2/t
      for (double sx : {-1.0, 1.0})
        for (double sy : {-1.0, 1.0})
          for (double sz : {-1.0, 1.0}) verts.emplace_back(sx * s, sy * s, sz * s);
      for (double s1 : {-1.0, 1.0}) {
        for (double s2 : {-1.0, 1.0}) {
          verts.emplace_back(0.0, s1 / t * s, s2 * t * s);
          verts.emplace_back(s1 / t * s, s2 * t * s, 0.0);
          verts.emplace_back(s1 * t * s, 0.0, s2 / t * s);
        }
      }
      for (double s1 : {-1.0, 1.0}) {
        for (double s2 : {-1.0, 1.0}) {
          normals.emplace_back(s1, 0.0, s2 * t);
          normals.emplace_back(s1 * t, s2, 0.0);
          normals.emplace_back(0.0, s1 * t, s2);
        }
      }
      break;
    }
    case PolyTag::Prism: {
      const int N = kind.n;
      const double rho = a / (2.0 * std::sin(kPi / N));
      for (int k = 0; k < N; ++k) {
        const double th = 2.0 * kPi * k / N;
        verts.emplace_back(rho * std::cos(th), rho * std::sin(th), a / 2.0);
      }
      for (int k = 0; k < N; ++k) {
        const double th = 2.0 * kPi * k / N;
        verts.emplace_back(rho * std::cos(th), rho * std::sin(th), -a / 2.0);
      }
      normals.emplace_back(0.0, 0.0, 1.0);
      normals.emplace_back(0.0, 0.0, -1.0);
      for (int k = 0; k < N; ++k) {
        const double th = 2.0 * kPi * (k + 0.5) / N;
        normals.emplace_back(std::cos(th), std::sin(th), 0.0);
      }
      break;
    }
    default:
      throw std::runtime_error("build_polyhedron: unhandled kind");
  }
  Polyhedron p;
  p.kind = kind;
  p.a = a;
  p.verts = std::move(verts);
  p.faces = faces_from_normals(p.verts, normals);
  p.edges = edges_of(p.faces);
  return p;
}

}  // namespace dpm
