#pragma once

#include "dpm/screw.hpp"

#include <string>
#include <vector>

namespace dpm {

/// Host polyhedron families. The first four are fully constructible as
/// mechanisms; the truncated families are carried as catalog data only.
enum class PolyTag {
  Tetrahedron,
  Cube,
  Dodecahedron,
  Prism,
  TruncatedTetrahedron,
  TruncatedCube,
  TruncatedOctahedron,
  TruncatedCuboctahedron,
  TruncatedDodecahedron,
  TruncatedIcosahedron,
  TruncatedIcosidodecahedron,
};

/// A polyhedron family selector; n is the gonality for Prism (n >= 3),
/// unused otherwise.
struct PolyhedronKind {
  PolyTag tag = PolyTag::Tetrahedron;
  int n = 0;

  static PolyhedronKind tetrahedron() { return {PolyTag::Tetrahedron, 0}; }
  static PolyhedronKind cube() { return {PolyTag::Cube, 0}; }
  static PolyhedronKind dodecahedron() { return {PolyTag::Dodecahedron, 0}; }
  static PolyhedronKind prism(int n);

  /// Accepts "tetrahedron", "cube", "dodecahedron", "prismN" (N >= 3), and
  /// the seven catalog-only names "truncated-tetrahedron", "truncated-cube",
  /// "truncated-octahedron", "truncated-cuboctahedron",
  /// "truncated-dodecahedron", "truncated-icosahedron",
  /// "truncated-icosidodecahedron". Throws std::invalid_argument otherwise.
  static PolyhedronKind parse(const std::string& name);

  std::string name() const;

  /// True for the kinds with a full geometric construction
  /// (tetrahedron, cube, dodecahedron, prism).
  bool constructible() const;

  bool operator==(const PolyhedronKind& o) const { return tag == o.tag && n == o.n; }
};

/// One face: outward unit normal plus vertex indices ordered counterclockwise
/// when viewed from outside (right-hand rule about the normal).
struct PolyFace {
  Vec3 normal;
  std::vector<int> verts;
};

/// One edge: vertex pair (va < vb) and the two incident faces.
struct PolyEdge {
  int va;
  int vb;
  int f1;
  int f2;
};

/// Convex polyhedron centered at the origin with uniform edge length a.
struct Polyhedron {
  PolyhedronKind kind;
  double a = 1.0;
  std::vector<Vec3> verts;
  std::vector<PolyFace> faces;
  std::vector<PolyEdge> edges;  ///< sorted by (va, vb)
};

/// Builds the canonical vertex/face/edge model for a constructible kind with
/// edge length a. Throws std::invalid_argument for a <= 0 and
/// std::runtime_error with a "not constructible" message for catalog-only
/// kinds.
Polyhedron build_polyhedron(const PolyhedronKind& kind, double a);

}  // namespace dpm
