#pragma once

#include <string>
#include <vector>

#include "dpm/mechanism.hpp"

namespace dpm {

// Closed-form deployment curves for the regular-tetrahedron mechanism with
// edge length a: inradius r, circumradius R, and envelope volume V as
// functions of the fold angle phi in [0, pi/2].
struct CurveSample {
  double phi = 0.0;  // radians
  double r = 0.0;
  double R = 0.0;
  double V = 0.0;
};

CurveSample tetra_deployment_point(double a, double phi);

// Evenly spaced samples over [0, pi/2] inclusive; samples >= 2.
std::vector<CurveSample> tetra_deployment_curve(double a, int samples);

// Configuration envelope: every platform translated d along its outward
// normal, limb quadrilaterals spanning each split edge, and one new polygon
// per original vertex.  Coincident corners are welded; degenerate faces
// (folded flat at phi = 0) are dropped; all faces wind counter-clockwise
// seen from outside.
enum class FaceLabel { Platform, Limb, NewFace };

std::string face_label_name(FaceLabel label);

struct MeshFace {
  FaceLabel label = FaceLabel::Platform;
  std::vector<int> verts;  // indices into ConfigurationMesh::vertices
};

struct ConfigurationMesh {
  PolyhedronKind kind;
  double a = 0.0;
  double phi = 0.0;
  double delta = 0.0;  // outward face displacement
  std::vector<Vec3> vertices;
  std::vector<MeshFace> faces;
  std::vector<std::string> notes;
};

ConfigurationMesh configuration_mesh(const Mechanism& mech);

// Signed volume enclosed by the mesh (divergence theorem over the faces).
double mesh_volume(const ConfigurationMesh& mesh);

// True when every undirected edge is shared by exactly two faces.
bool is_watertight(const ConfigurationMesh& mesh);

// Number of distinct undirected edges.
int mesh_edge_count(const ConfigurationMesh& mesh);

double max_vertex_radius(const ConfigurationMesh& mesh);

}  // namespace dpm
