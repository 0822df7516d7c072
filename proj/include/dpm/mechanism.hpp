#pragma once

#include "dpm/polyhedron.hpp"
#include "dpm/sarrus.hpp"
#include "dpm/screw.hpp"

#include <string>
#include <vector>

namespace dpm {

/// One Sarrus construction element placed on a host-polyhedron edge.
/// The local frame columns are [x y z]: z along the bisector of the two
/// adjacent face normals, y along the inter-platform straight-line motion
/// direction (from face Q toward face P), x = y cross z along the edge, with
/// vertex va on the negative-x side. beta is half the dihedral angle between
/// the two platforms.
struct SarrusUnit {
  int index = 0;  ///< 1-based canonical index
  Mat3 R;         ///< columns [x y z]
  Vec3 mid;       ///< host edge midpoint
  int faceP = -1;
  int faceQ = -1;
  int va = -1;  ///< vertex at local x = -l
  int vb = -1;  ///< vertex at local x = +l
  double beta = 0.0;  ///< half dihedral angle (rad)

  Vec3 xhat() const { return R.col(0); }
  Vec3 yhat() const { return R.col(1); }
  Vec3 zhat() const { return R.col(2); }
};

/// Pose of one Sarrus local frame in the body frame: origin p = d * dir.
struct PlatformFrame {
  int index = 0;  ///< 1-based, same order as SarrusUnit
  Mat3 R;
  Vec3 dir;
  double d = 0.0;
};

/// A joint between two links; positive sense is link_a -> link_b. The joint's
/// motion screw in the owning unit's local frame is limb screw `pos` of limb
/// `limb` (pos 0,1,2 = lower hinge, knee, upper hinge).
struct Joint {
  int id = 0;
  int link_a = 0;
  int link_b = 0;
  int unit = 0;  ///< owning Sarrus unit, 0-based
  int limb = 1;  ///< 1 or 2
  int pos = 0;   ///< 0..2 within the limb chain
};

/// One signed traversal step of a loop: joint crossed in its positive sense
/// (sign = +1) or reversed (-1).
struct LoopStep {
  int joint = 0;
  int sign = 1;
};

/// Unit-level summary of a loop crossing one limb of one Sarrus unit.
/// joint_sign is the common sign of the three joint steps; direction is +1
/// when the crossing goes from platform Q to platform P.
struct LimbCrossing {
  int unit = 0;
  int limb = 1;
  int joint_sign = 1;
  int direction = 1;
};

/// An independent loop: either the 6R loop of one Sarrus unit or an
/// inter-unit closure loop around one host vertex.
struct Loop {
  bool unit_loop = false;
  int index = 0;  ///< unit index (unit loops) or host vertex index (closure)
  std::vector<LoopStep> steps;
  std::vector<LimbCrossing> crossings;
};

/// Link-joint graph of the assembled mechanism. Links 0..F-1 are the F
/// platforms (one per host face); each Sarrus unit contributes four panel
/// links. Loop count = joints - links + 1.
struct MechanismGraph {
  int n_links = 0;
  std::vector<std::string> link_labels;
  std::vector<Joint> joints;
  std::vector<Loop> loops;
};

/// A fully constructed deployable polyhedral mechanism at a build
/// configuration (a, gamma, phi). Frames are evaluated at phi.
struct Mechanism {
  PolyhedronKind kind;
  double a = 1.0;
  double gamma = 0.0;
  double phi = 0.0;
  Polyhedron poly;
  std::vector<SarrusUnit> units;
  MechanismGraph graph;
  std::vector<PlatformFrame> frames;
  double beta_min = 0.0;
  std::vector<std::string> notes;  ///< kind-relevant source-catalog flags
};

/// Catalog row: construction element count, link/joint counts, half-dihedral
/// angles with their face pairs, and the deployment-limit angle, all in the
/// source catalog's printed units (degrees, rounded as printed).
struct BetaEntry {
  double value_deg = 0.0;
  int face_m = 0;
  int face_n = 0;
};

struct Table1Row {
  std::string group;  ///< "platonic" | "archimedean" | "prism"
  std::string name;
  int N = 0;  ///< prism gonality, 0 otherwise
  int n_sarrus = 0;
  int n_link = 0;
  int n_joint = 0;
  std::vector<BetaEntry> beta;
  double gamma_max_deg = 0.0;
  std::vector<std::string> notes;
};

/// Geometric edge frames in raw edge order (no canonical reindexing):
/// one SarrusUnit per host edge. Pure geometry, used by the mesh module too.
std::vector<SarrusUnit> sarrus_unit_frames(const Polyhedron& poly);

/// Units in canonical order: for tetrahedron/cube/dodecahedron the order and
/// P/Q orientation of the embedded frame catalogs (two documented catalog
/// corrections applied); for prisms, raw edge order.
/// Throws std::runtime_error if the geometry cannot be matched.
std::vector<SarrusUnit> canonical_sarrus_units(const Polyhedron& poly);

/// Smallest half-dihedral angle over all units (rad); the binding class for
/// the deployment parameterization.
double min_beta(const std::vector<SarrusUnit>& units);

/// Per-unit fold angles for input fold angle phi of the minimum-beta class:
/// sin(phi_u) = sin(phi) cos(beta_u) / cos(beta_min).
std::vector<double> fold_angles(const std::vector<SarrusUnit>& units, double phi);

/// Uniform outward face displacement at input fold angle phi:
/// delta = (a/2) sin(phi) / cos(beta_min).
double face_displacement(double a, double beta_min, double phi);

/// Local-frame origin of unit u at displacement delta:
/// O_u = mid + delta sin(beta_u) z_u.
Vec3 unit_origin(const SarrusUnit& u, double delta);

/// Largest admissible gamma (rad) before panel interference at full fold,
/// derived from the vertex-end geometry of each unit.
double gamma_max(const PolyhedronKind& kind);

/// Builds the full mechanism. Throws std::runtime_error for catalog-only
/// kinds ("not constructible"); std::invalid_argument for a <= 0,
/// gamma outside (0, gamma_max], or phi outside [0, pi/2].
Mechanism build_mechanism(const PolyhedronKind& kind, double a, double gamma, double phi);

/// Frame poses (R, dir; d at the folded reference) in canonical order.
std::vector<PlatformFrame> platform_frames(const PolyhedronKind& kind);

/// Validates connectivity and the loop-count identity
/// (loops = joints - links + 1) and returns the loop basis.
const std::vector<Loop>& independent_loops(const MechanismGraph& graph);

/// Catalog row for any source-catalog kind, including the seven data-only
/// truncated families. Throws std::invalid_argument for non-catalog kinds.
Table1Row table1_row(const PolyhedronKind& kind);

/// All catalog rows in source order; prisms parameterized N = 3..10.
std::vector<Table1Row> table1_rows();

}  // namespace dpm
