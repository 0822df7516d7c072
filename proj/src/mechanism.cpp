#include "dpm/mechanism.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>

namespace dpm {

namespace {

const double kPi = std::acos(-1.0);

// ------------------------------------------------------------------------
// Canonical frame catalogs: fixed unit ordering and P/Q orientation for the
// three equal-dihedral kinds. Each row stores the rotation matrix (row-major,
// columns = [x y z]) and the direction of the frame origin. Two rows carry
// documented corrections; see the notes attached in build_mechanism.
// ------------------------------------------------------------------------

struct FrameCatalogRow {
  std::array<std::array<double, 3>, 3> R;  // row-major
  std::array<double, 3> dir;
};

const double kSq2 = std::sqrt(2.0) / 2.0;
const double kCA = (std::sqrt(5.0) + 1.0) / 4.0;  // cos 36 deg
const double kCB = (std::sqrt(5.0) - 1.0) / 4.0;  // cos 72 deg
const double kCH = 0.5;

const std::array<FrameCatalogRow, 6> kTetraFrameCatalog = {{
    {{{{-kSq2, -kSq2, 0}, {kSq2, -kSq2, 0}, {0, 0, 1}}}, {0, 0, 1}},
    {{{{0, 0, -1}, {-kSq2, -kSq2, 0}, {-kSq2, kSq2, 0}}}, {-1, 0, 0}},
    {{{{kSq2, -kSq2, 0}, {0, 0, -1}, {kSq2, kSq2, 0}}}, {0, -1, 0}},
    {{{{0, 0, 1}, {-kSq2, -kSq2, 0}, {kSq2, -kSq2, 0}}}, {1, 0, 0}},
    {{{{-kSq2, kSq2, 0}, {0, 0, 1}, {kSq2, kSq2, 0}}}, {0, 1, 0}},
    {{{{-kSq2, -kSq2, 0}, {-kSq2, kSq2, 0}, {0, 0, -1}}}, {0, 0, -1}},
}};

// Row 5: the printed origin direction duplicates row 1; the corrected entry
// is the unique edge-midpoint direction missing from the printed set.
const std::array<FrameCatalogRow, 12> kCubeFrameCatalog = {{
    {{{{0, -kSq2, kSq2}, {1, 0, 0}, {0, kSq2, kSq2}}}, {1, 0, 1}},
    {{{{-1, 0, 0}, {0, -kSq2, kSq2}, {0, kSq2, kSq2}}}, {0, 1, 1}},
    {{{{0, kSq2, -kSq2}, {-1, 0, 0}, {0, kSq2, kSq2}}}, {-1, 0, 1}},
    {{{{1, 0, 0}, {0, kSq2, -kSq2}, {0, kSq2, kSq2}}}, {0, -1, 1}},
    {{{{0, kSq2, kSq2}, {0, -kSq2, kSq2}, {1, 0, 0}}}, {1, 1, 0}},
    {{{{0, kSq2, -kSq2}, {0, kSq2, kSq2}, {1, 0, 0}}}, {-1, 1, 0}},
    {{{{0, -kSq2, -kSq2}, {0, kSq2, -kSq2}, {1, 0, 0}}}, {-1, -1, 0}},
    {{{{0, -kSq2, kSq2}, {0, -kSq2, -kSq2}, {1, 0, 0}}}, {1, -1, 0}},
    {{{{0, kSq2, kSq2}, {1, 0, 0}, {0, kSq2, -kSq2}}}, {1, 0, -1}},
    {{{{-1, 0, 0}, {0, kSq2, kSq2}, {0, kSq2, -kSq2}}}, {0, 1, -1}},
    {{{{0, -kSq2, -kSq2}, {-1, 0, 0}, {0, kSq2, -kSq2}}}, {-1, 0, -1}},
    {{{{1, 0, 0}, {0, -kSq2, -kSq2}, {0, kSq2, -kSq2}}}, {0, -1, -1}},
}};

// Row 16: the printed entry at (3,2) is -1/2, which breaks orthonormality;
// the geometric construction (y = z cross x) forces +1/2.
const std::array<FrameCatalogRow, 30> kDodecaFrameCatalog = {{
    {{{{-kCA, -kCH, -kCB}, {kCB, -kCA, kCH}, {-kCH, kCB, kCA}}}, {-kCB, kCH, kCA}},
    {{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}, {0, 0, 1}},
    {{{{kCA, -kCH, -kCB}, {kCB, kCA, -kCH}, {kCH, kCB, kCA}}}, {-kCB, -kCH, kCA}},
    {{{{kCH, kCB, -kCA}, {-kCA, kCH, -kCB}, {kCB, kCA, kCH}}}, {-kCA, -kCB, kCH}},
    {{{{-kCH, kCB, -kCA}, {-kCA, -kCH, kCB}, {-kCB, kCA, kCH}}}, {-kCA, kCB, kCH}},
    {{{{-kCB, kCA, -kCH}, {-kCH, kCB, kCA}, {kCA, kCH, kCB}}}, {-kCH, kCA, kCB}},
    {{{{-kCA, kCH, kCB}, {-kCB, -kCA, kCH}, {kCH, kCB, kCA}}}, {kCB, kCH, kCA}},
    {{{{-kCA, -kCH, kCB}, {kCB, -kCA, -kCH}, {kCH, -kCB, kCA}}}, {kCB, -kCH, kCA}},
    {{{{-kCB, -kCA, -kCH}, {kCH, kCB, -kCA}, {kCA, -kCH, kCB}}}, {-kCH, -kCA, kCB}},
    {{{{0, 0, -1}, {0, 1, 0}, {1, 0, 0}}}, {-1, 0, 0}},
    {{{{kCB, kCA, -kCH}, {kCH, kCB, kCA}, {kCA, -kCH, -kCB}}}, {-kCH, kCA, -kCB}},
    {{{{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}}}, {0, 1, 0}},
    {{{{kCB, kCA, kCH}, {-kCH, -kCB, kCA}, {kCA, -kCH, kCB}}}, {kCH, kCA, kCB}},
    {{{{-kCH, -kCB, kCA}, {kCA, -kCH, kCB}, {kCB, kCA, kCH}}}, {kCA, kCB, kCH}},
    {{{{-kCH, kCB, kCA}, {-kCA, -kCH, -kCB}, {kCB, -kCA, kCH}}}, {kCA, -kCB, kCH}},
    {{{{kCB, -kCA, kCH}, {kCH, -kCB, -kCA}, {kCA, kCH, kCB}}}, {kCH, -kCA, kCB}},
    {{{{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}}, {0, -1, 0}},
    {{{{kCB, -kCA, -kCH}, {-kCH, kCB, -kCA}, {kCA, kCH, -kCB}}}, {-kCH, -kCA, -kCB}},
    {{{{-kCH, kCB, -kCA}, {kCA, kCH, -kCB}, {kCB, -kCA, -kCH}}}, {-kCA, -kCB, -kCH}},
    {{{{-kCH, -kCB, -kCA}, {-kCA, kCH, kCB}, {kCB, kCA, -kCH}}}, {-kCA, kCB, -kCH}},
    {{{{-kCB, kCA, kCH}, {kCH, -kCB, kCA}, {kCA, kCH, -kCB}}}, {kCH, kCA, -kCB}},
    {{{{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}}, {1, 0, 0}},
    {{{{-kCB, -kCA, kCH}, {-kCH, -kCB, -kCA}, {kCA, -kCH, -kCB}}}, {kCH, -kCA, -kCB}},
    {{{{-kCA, -kCH, -kCB}, {-kCB, kCA, -kCH}, {kCH, -kCB, -kCA}}}, {-kCB, -kCH, -kCA}},
    {{{{-kCA, kCH, -kCB}, {kCB, kCA, kCH}, {kCH, kCB, -kCA}}}, {-kCB, kCH, -kCA}},
    {{{{kCA, kCH, kCB}, {kCB, -kCA, kCH}, {kCH, -kCB, -kCA}}}, {kCB, kCH, -kCA}},
    {{{{kCH, -kCB, kCA}, {-kCA, -kCH, kCB}, {kCB, -kCA, -kCH}}}, {kCA, kCB, -kCH}},
    {{{{-kCH, -kCB, kCA}, {-kCA, kCH, -kCB}, {-kCB, -kCA, -kCH}}}, {kCA, -kCB, -kCH}},
    {{{{-kCA, kCH, kCB}, {kCB, kCA, -kCH}, {-kCH, -kCB, -kCA}}}, {kCB, -kCH, -kCA}},
    {{{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}}, {0, 0, -1}},
}};

Mat3 catalog_rotation(const FrameCatalogRow& row) {
  Mat3 R;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) R(i, j) = row.R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return R;
}

/// Reorders/reorients geometric frames to a catalog: each catalog row is
/// matched by origin direction, then the rotation must agree either directly
/// or after the P/Q swap (x -> -x, y -> -y).
std::vector<SarrusUnit> match_catalog(std::vector<SarrusUnit> frames,
                                      const FrameCatalogRow* catalog, int n) {
  if (static_cast<int>(frames.size()) != n) {
    throw std::runtime_error("match_catalog: unit count does not match catalog size");
  }
  std::vector<bool> used(frames.size(), false);
  std::vector<SarrusUnit> out;
  out.reserve(frames.size());
  for (int r = 0; r < n; ++r) {
    const Vec3 dir = Vec3(catalog[r].dir[0], catalog[r].dir[1], catalog[r].dir[2]).normalized();
    int found = -1;
    for (std::size_t i = 0; i < frames.size(); ++i) {
      if (!used[i]) {
        if ((frames[i].mid.normalized() - dir).norm() < 1e-6) {
          found = static_cast<int>(i);
          break;
        }
      }
    }
    if (found < 0) {
      throw std::runtime_error("match_catalog: no edge matches a catalog origin direction");
    }
    SarrusUnit u = frames[static_cast<std::size_t>(found)];
    const Mat3 Rt = catalog_rotation(catalog[r]);
    if ((u.R - Rt).norm() > 1e-9) {
      Mat3 Rs = u.R;
      Rs.col(0) = -u.R.col(0);
      Rs.col(1) = -u.R.col(1);
      if ((Rs - Rt).norm() > 1e-9) {
        throw std::runtime_error("match_catalog: frame rotation does not match the catalog");
      }
      u.R = Rs;
      std::swap(u.faceP, u.faceQ);
      std::swap(u.va, u.vb);
    }
    u.index = r + 1;
    used[static_cast<std::size_t>(found)] = true;
    out.push_back(u);
  }
  return out;
}

std::map<std::pair<int, int>, int> unit_by_face_pair(const std::vector<SarrusUnit>& units) {
  std::map<std::pair<int, int>, int> m;
  for (std::size_t i = 0; i < units.size(); ++i) {
    int a = units[i].faceP, b = units[i].faceQ;
    if (a > b) std::swap(a, b);
    m[{a, b}] = static_cast<int>(i);
  }
  return m;
}

std::vector<std::vector<int>> faces_at_vertices(const Polyhedron& poly) {
  std::vector<std::vector<int>> vert_faces(poly.verts.size());
  for (int fi = 0; fi < static_cast<int>(poly.faces.size()); ++fi) {
    for (int v : poly.faces[static_cast<std::size_t>(fi)].verts) {
      vert_faces[static_cast<std::size_t>(v)].push_back(fi);
    }
  }
  return vert_faces;
}

/// Closure loops: one per host vertex except the last. The platform cycle
/// around vertex v visits its incident faces in angular order about the
/// vertex direction, crossing the shared Sarrus unit at each step through the
/// limb on the vertex's side of the unit.
std::vector<Loop> closure_loops(const Polyhedron& poly, const std::vector<SarrusUnit>& units) {
  const auto vert_faces = faces_at_vertices(poly);
  const auto by_pair = unit_by_face_pair(units);
  std::vector<Loop> loops;
  const int nv = static_cast<int>(poly.verts.size());
  for (int v = 0; v < nv - 1; ++v) {
    std::vector<int> fl = vert_faces[static_cast<std::size_t>(v)];
    const Vec3 d = poly.verts[static_cast<std::size_t>(v)].normalized();
    const Vec3 n0 = poly.faces[static_cast<std::size_t>(fl[0])].normal;
    const Vec3 e1 = (n0 - n0.dot(d) * d).normalized();
    const Vec3 e2 = d.cross(e1);
    std::vector<std::pair<double, int>> ang;
    ang.reserve(fl.size());
    for (int f : fl) {
      const Vec3 n = poly.faces[static_cast<std::size_t>(f)].normal;
      const Vec3 proj = n - n.dot(d) * d;
      ang.emplace_back(std::atan2(proj.dot(e2), proj.dot(e1)), f);
    }
    std::sort(ang.begin(), ang.end());
    fl.clear();
    for (const auto& [a, f] : ang) fl.push_back(f);

    Loop loop;
    loop.unit_loop = false;
    loop.index = v;
    const int m = static_cast<int>(fl.size());
    for (int k = 0; k < m; ++k) {
      const int fa = fl[static_cast<std::size_t>(k)];
      const int fb = fl[static_cast<std::size_t>((k + 1) % m)];
      int a = fa, b = fb;
      if (a > b) std::swap(a, b);
      const auto it = by_pair.find({a, b});
      if (it == by_pair.end()) {
        throw std::runtime_error("closure_loops: adjacent faces share no Sarrus unit");
      }
      const int ui = it->second;
      const SarrusUnit& u = units[static_cast<std::size_t>(ui)];
      const double xloc = u.xhat().dot(poly.verts[static_cast<std::size_t>(v)] - u.mid);
      const int limb = xloc > 0 ? 2 : 1;
      int sgn;
      if (limb == 1) {
        sgn = (fa == u.faceQ) ? +1 : -1;
      } else {
        sgn = (fa == u.faceQ) ? -1 : +1;
      }
      const int direction = (limb == 1) ? sgn : -sgn;  // +1 when crossing Q -> P
      loop.crossings.push_back(LimbCrossing{ui, limb, sgn, direction});
      // joint steps in traversal order (joint ids 6u+0..2 = limb 1, 6u+3..5 = limb 2);
      // a Q -> P crossing meets the limb's joints in ascending id order
      const int base = 6 * ui + (limb == 1 ? 0 : 3);
      if (direction > 0) {
        for (int j = 0; j < 3; ++j) loop.steps.push_back(LoopStep{base + j, sgn});
      } else {
        for (int j = 2; j >= 0; --j) loop.steps.push_back(LoopStep{base + j, sgn});
      }
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

}  // namespace

std::vector<SarrusUnit> sarrus_unit_frames(const Polyhedron& poly) {
  std::vector<SarrusUnit> out;
  out.reserve(poly.edges.size());
  for (const PolyEdge& e : poly.edges) {
    const Vec3 n1 = poly.faces[static_cast<std::size_t>(e.f1)].normal;
    const Vec3 n2 = poly.faces[static_cast<std::size_t>(e.f2)].normal;
    const Vec3 z = (n1 + n2).normalized();
    const Vec3 y = (n1 - n2).normalized();
    const Vec3 x = y.cross(z);
    SarrusUnit u;
    u.faceP = e.f1;
    u.faceQ = e.f2;
    u.va = e.va;
    u.vb = e.vb;
    const Vec3 va = poly.verts[static_cast<std::size_t>(e.va)];
    const Vec3 vb = poly.verts[static_cast<std::size_t>(e.vb)];
    u.mid = 0.5 * (va + vb);
    if (x.dot(va - u.mid) > 0) std::swap(u.va, u.vb);
    u.R.col(0) = x;
    u.R.col(1) = y;
    u.R.col(2) = z;
    const double sinb = std::clamp(z.dot(n1), -1.0, 1.0);
    u.beta = std::asin(sinb);
    u.index = static_cast<int>(out.size()) + 1;
    out.push_back(u);
  }
  return out;
}

std::vector<SarrusUnit> canonical_sarrus_units(const Polyhedron& poly) {
  std::vector<SarrusUnit> frames = sarrus_unit_frames(poly);
  switch (poly.kind.tag) {
    case PolyTag::Tetrahedron:
      return match_catalog(std::move(frames), kTetraFrameCatalog.data(), 6);
    case PolyTag::Cube:
      return match_catalog(std::move(frames), kCubeFrameCatalog.data(), 12);
    case PolyTag::Dodecahedron:
      return match_catalog(std::move(frames), kDodecaFrameCatalog.data(), 30);
    default:
      return frames;
  }
}

double min_beta(const std::vector<SarrusUnit>& units) {
  if (units.empty()) throw std::invalid_argument("min_beta: no units");
  double b = units[0].beta;
  for (const SarrusUnit& u : units) b = std::min(b, u.beta);
  return b;
}

std::vector<double> fold_angles(const std::vector<SarrusUnit>& units, double phi) {
  const double cbmax = std::cos(min_beta(units));
  const double s = std::sin(phi);
  std::vector<double> out;
  out.reserve(units.size());
  for (const SarrusUnit& u : units) {
    const double su = s * std::cos(u.beta) / cbmax;
    if (su > 1.0 + 1e-9) {
      throw std::runtime_error("fold_angles: fold angle exceeds the admissible range");
    }
    out.push_back(std::asin(std::clamp(su, -1.0, 1.0)));
  }
  return out;
}

double face_displacement(double a, double beta_min, double phi) {
  return (a / 2.0) * std::sin(phi) / std::cos(beta_min);
}

Vec3 unit_origin(const SarrusUnit& u, double delta) {
  return u.mid + delta * std::sin(u.beta) * u.zhat();
}

double gamma_max(const PolyhedronKind& kind) {
  if (!kind.constructible()) {
    throw std::runtime_error("gamma_max: '" + kind.name() +
                             "' is catalog data only and not constructible in this version");
  }
  const Polyhedron poly = build_polyhedron(kind, 1.0);
  const std::vector<SarrusUnit> units = sarrus_unit_frames(poly);
  const auto vert_faces = faces_at_vertices(poly);
  Vec3 centroid = Vec3::Zero();
  for (const Vec3& v : poly.verts) centroid += v;
  centroid /= static_cast<double>(poly.verts.size());
  double amax = kPi;
  for (const SarrusUnit& u : units) {
    for (const auto& [vi, send] : {std::pair<int, int>{u.va, -1}, {u.vb, +1}}) {
      const auto& fl = vert_faces[static_cast<std::size_t>(vi)];
      if (fl.size() != 3) {
        throw std::runtime_error("gamma_max: vertex figure is not a triangle");
      }
      const Vec3 n1 = poly.faces[static_cast<std::size_t>(fl[0])].normal;
      const Vec3 n2 = poly.faces[static_cast<std::size_t>(fl[1])].normal;
      const Vec3 n3 = poly.faces[static_cast<std::size_t>(fl[2])].normal;
      Vec3 ntri = (n2 - n1).cross(n3 - n1).normalized();
      const Vec3 v = poly.verts[static_cast<std::size_t>(vi)];
      if (ntri.dot((v - centroid).normalized()) < 0) ntri = -ntri;
      const Vec3 x_in = -static_cast<double>(send) * u.xhat();
      const double den = x_in.dot(ntri);
      if (std::abs(den) < 1e-14) {
        throw std::runtime_error("gamma_max: degenerate vertex-end geometry");
      }
      const double ta = -u.zhat().dot(ntri) / den;
      amax = std::min(amax, std::atan(ta));
    }
  }
  return 2.0 * amax;
}

Mechanism build_mechanism(const PolyhedronKind& kind, double a, double gamma, double phi) {
  if (!kind.constructible()) {
    throw std::runtime_error("build_mechanism: '" + kind.name() +
                             "' is catalog data only and not constructible in this version; "
                             "use the table command for its counts and angles");
  }
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("build_mechanism: edge length a must be positive and finite");
  }
  const double gmax = gamma_max(kind);
  if (!(gamma > 0.0) || gamma > gmax + 1e-12) {
    throw std::invalid_argument(
        "build_mechanism: gamma is outside the interference bound (0, " +
        std::to_string(gmax * 180.0 / kPi) + " deg] for " + kind.name());
  }
  if (!(phi >= 0.0) || phi > kPi / 2.0 + kGeometryTol) {
    throw std::invalid_argument("build_mechanism: phi must lie in [0, pi/2]");
  }

  Mechanism mech;
  mech.kind = kind;
  mech.a = a;
  mech.gamma = gamma;
  mech.phi = phi;
  mech.poly = build_polyhedron(kind, a);
  mech.units = canonical_sarrus_units(mech.poly);
  mech.beta_min = min_beta(mech.units);

  const int nF = static_cast<int>(mech.poly.faces.size());
  const int nU = static_cast<int>(mech.units.size());

  // links: platforms first, then four panel links per unit (lower = Q-side)
  MechanismGraph& g = mech.graph;
  g.n_links = nF + 4 * nU;
  g.link_labels.reserve(static_cast<std::size_t>(g.n_links));
  for (int f = 0; f < nF; ++f) g.link_labels.push_back("platform_" + std::to_string(f));
  for (int u = 0; u < nU; ++u) {
    const std::string s = "sarrus" + std::to_string(u + 1);
    g.link_labels.push_back(s + "_limb1_lower");
    g.link_labels.push_back(s + "_limb1_upper");
    g.link_labels.push_back(s + "_limb2_lower");
    g.link_labels.push_back(s + "_limb2_upper");
  }

  // joints: six per unit, ids 6u+0..5 = (S1..S6) of the unit
  for (int u = 0; u < nU; ++u) {
    const SarrusUnit& su = mech.units[static_cast<std::size_t>(u)];
    const int P = su.faceP;
    const int Q = su.faceQ;
    const int A = nF + 4 * u + 0;
    const int B = nF + 4 * u + 1;
    const int C = nF + 4 * u + 2;
    const int D = nF + 4 * u + 3;
    g.joints.push_back(Joint{6 * u + 0, Q, A, u, 1, 0});
    g.joints.push_back(Joint{6 * u + 1, A, B, u, 1, 1});
    g.joints.push_back(Joint{6 * u + 2, B, P, u, 1, 2});
    g.joints.push_back(Joint{6 * u + 3, C, Q, u, 2, 0});
    g.joints.push_back(Joint{6 * u + 4, D, C, u, 2, 1});
    g.joints.push_back(Joint{6 * u + 5, P, D, u, 2, 2});
  }

  // one 6R loop per unit: Q -> A -> B -> P -> D -> C -> Q, all joints forward
  for (int u = 0; u < nU; ++u) {
    Loop loop;
    loop.unit_loop = true;
    loop.index = u;
    loop.steps = {LoopStep{6 * u + 0, +1}, LoopStep{6 * u + 1, +1}, LoopStep{6 * u + 2, +1},
                  LoopStep{6 * u + 5, +1}, LoopStep{6 * u + 4, +1}, LoopStep{6 * u + 3, +1}};
    loop.crossings = {LimbCrossing{u, 1, +1, +1}, LimbCrossing{u, 2, +1, -1}};
    g.loops.push_back(std::move(loop));
  }
  for (Loop& loop : closure_loops(mech.poly, mech.units)) {
    g.loops.push_back(std::move(loop));
  }

  const int expected_loops = static_cast<int>(g.joints.size()) - g.n_links + 1;
  if (static_cast<int>(g.loops.size()) != expected_loops) {
    throw std::runtime_error("build_mechanism: loop basis size violates the Euler identity");
  }

  // frames at the build configuration
  const double delta = face_displacement(a, mech.beta_min, phi);
  mech.frames.reserve(static_cast<std::size_t>(nU));
  for (int u = 0; u < nU; ++u) {
    const SarrusUnit& su = mech.units[static_cast<std::size_t>(u)];
    const Vec3 origin = unit_origin(su, delta);
    PlatformFrame fr;
    fr.index = su.index;
    fr.R = su.R;
    fr.d = origin.norm();
    fr.dir = origin / fr.d;
    mech.frames.push_back(fr);
  }

  switch (kind.tag) {
    case PolyTag::Cube:
      mech.notes.push_back(
          "frame catalog row 5: printed origin direction duplicates row 1; corrected to the "
          "unique missing edge direction [1,1,0]/sqrt(2)");
      break;
    case PolyTag::Dodecahedron:
      mech.notes.push_back(
          "frame catalog row 16: printed entry (3,2) = -1/2 is not orthonormal; corrected to "
          "+1/2 per the geometric construction");
      mech.notes.push_back(
          "deployment limit: source catalog prints 139.18 deg while the accompanying text "
          "gives 138.19 deg; the geometric value 138.189685 deg is used for bounds and both "
          "readings are retained in the catalog row");
      break;
    case PolyTag::Prism:
      mech.notes.push_back(
          "deployment-limit closed form in the source catalog is typographically garbled; "
          "the geometric value is used and the printed formula is reported as unverifiable");
      break;
    default:
      break;
  }
  return mech;
}

std::vector<PlatformFrame> platform_frames(const PolyhedronKind& kind) {
  return build_mechanism(kind, 1.0, gamma_max(kind), 0.0).frames;
}

const std::vector<Loop>& independent_loops(const MechanismGraph& graph) {
  // connectivity over links
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(graph.n_links));
  for (const Joint& j : graph.joints) {
    adj[static_cast<std::size_t>(j.link_a)].push_back(j.link_b);
    adj[static_cast<std::size_t>(j.link_b)].push_back(j.link_a);
  }
  std::vector<bool> seen(static_cast<std::size_t>(graph.n_links), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    const int l = q.front();
    q.pop();
    for (int m : adj[static_cast<std::size_t>(l)]) {
      if (!seen[static_cast<std::size_t>(m)]) {
        seen[static_cast<std::size_t>(m)] = true;
        ++count;
        q.push(m);
      }
    }
  }
  if (count != graph.n_links) {
    throw std::runtime_error("independent_loops: link graph is disconnected");
  }
  const int expected = static_cast<int>(graph.joints.size()) - graph.n_links + 1;
  if (static_cast<int>(graph.loops.size()) != expected) {
    throw std::runtime_error("independent_loops: loop count violates the Euler identity");
  }
  return graph.loops;
}

namespace {

Table1Row platonic_row(const std::string& name, int sarrus, int links, int joints,
                       double beta_deg, int face, double gmax_deg) {
  Table1Row r;
  r.group = "platonic";
  r.name = name;
  r.n_sarrus = sarrus;
  r.n_link = links;
  r.n_joint = joints;
  r.beta = {BetaEntry{beta_deg, face, face}};
  r.gamma_max_deg = gmax_deg;
  return r;
}

Table1Row archimedean_row(const std::string& name, int sarrus, int links, int joints,
                          std::vector<BetaEntry> beta, double gmax_deg) {
  Table1Row r;
  r.group = "archimedean";
  r.name = name;
  r.n_sarrus = sarrus;
  r.n_link = links;
  r.n_joint = joints;
  r.beta = std::move(beta);
  r.gamma_max_deg = gmax_deg;
  r.notes = {"catalog data only; not constructible in this version"};
  return r;
}

}  // namespace

Table1Row table1_row(const PolyhedronKind& kind) {
  switch (kind.tag) {
    case PolyTag::Tetrahedron:
      return platonic_row("tetrahedron", 6, 28, 36, 35.26, 3, 70.53);
    case PolyTag::Cube: {
      Table1Row r = platonic_row("cube", 12, 54, 72, 45.0, 4, 109.47);
      r.notes = {
          "frame catalog row 5: printed origin direction duplicates row 1; corrected to the "
          "unique missing edge direction [1,1,0]/sqrt(2)"};
      return r;
    }
    case PolyTag::Dodecahedron: {
      Table1Row r = platonic_row("dodecahedron", 30, 132, 180, 58.28, 5, 139.18);
      r.notes = {
          "catalog prints gamma_max 139.18 deg; accompanying text gives 138.19 deg; geometric "
          "value 138.189685 deg (neither reading silently altered)"};
      return r;
    }
    case PolyTag::TruncatedTetrahedron:
      return archimedean_row("truncated-tetrahedron", 18, 80, 108,
                             {BetaEntry{54.74, 3, 6}, BetaEntry{35.26, 6, 6}}, 129.52);
    case PolyTag::TruncatedCube:
      return archimedean_row("truncated-cube", 36, 158, 216,
                             {BetaEntry{62.63, 3, 8}, BetaEntry{45.0, 8, 8}}, 147.35);
    case PolyTag::TruncatedOctahedron:
      return archimedean_row("truncated-octahedron", 36, 158, 216,
                             {BetaEntry{62.63, 4, 6}, BetaEntry{54.74, 6, 6}}, 143.13);
    case PolyTag::TruncatedCuboctahedron:
      return archimedean_row(
          "truncated-cuboctahedron", 72, 314, 432,
          {BetaEntry{72.37, 4, 6}, BetaEntry{67.5, 4, 8}, BetaEntry{62.63, 6, 8}}, 155.09);
    case PolyTag::TruncatedDodecahedron:
      return archimedean_row("truncated-dodecahedron", 90, 392, 540,
                             {BetaEntry{71.31, 3, 10}, BetaEntry{58.28, 10, 10}}, 160.61);
    case PolyTag::TruncatedIcosahedron:
      return archimedean_row("truncated-icosahedron", 90, 392, 540,
                             {BetaEntry{69.09, 6, 6}, BetaEntry{71.31, 5, 6}}, 156.72);
    case PolyTag::TruncatedIcosidodecahedron:
      return archimedean_row(
          "truncated-icosidodecahedron", 180, 782, 1080,
          {BetaEntry{79.55, 4, 6}, BetaEntry{74.14, 4, 10}, BetaEntry{71.31, 6, 10}}, 164.89);
    case PolyTag::Prism: {
      const int N = kind.n;
      if (N < 3) throw std::invalid_argument("table1_row: prism N must be >= 3");
      Table1Row r;
      r.group = "prism";
      r.name = "prism" + std::to_string(N);
      r.N = N;
      r.n_sarrus = 3 * N;
      r.n_link = 13 * N + 2;
      r.n_joint = 18 * N;
      r.beta = {BetaEntry{90.0 * (N - 2) / N, 4, 4}, BetaEntry{45.0, 4, N}};
      r.gamma_max_deg = gamma_max(kind) * 180.0 / kPi;
      r.notes = {
          "deployment-limit closed form in the source catalog is typographically garbled; "
          "geometric value reported, printed formula unverifiable"};
      return r;
    }
  }
  throw std::invalid_argument("table1_row: unknown kind");
}

std::vector<Table1Row> table1_rows() {
  std::vector<Table1Row> rows;
  rows.push_back(table1_row(PolyhedronKind::tetrahedron()));
  rows.push_back(table1_row(PolyhedronKind::cube()));
  rows.push_back(table1_row(PolyhedronKind::dodecahedron()));
  for (PolyTag tag : {PolyTag::TruncatedTetrahedron, PolyTag::TruncatedCube,
                      PolyTag::TruncatedOctahedron, PolyTag::TruncatedCuboctahedron,
                      PolyTag::TruncatedDodecahedron, PolyTag::TruncatedIcosahedron,
                      PolyTag::TruncatedIcosidodecahedron}) {
    rows.push_back(table1_row(PolyhedronKind{tag, 0}));
  }
  for (int n = 3; n <= 10; ++n) {
    rows.push_back(table1_row(PolyhedronKind::prism(n)));
  }
  return rows;
}

}  // namespace dpm
