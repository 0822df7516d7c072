#pragma once

#include "dpm/mechanism.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpm {

/// Constraint-assembly route: Original uses all revolute joints (six columns
/// per Sarrus unit, one 6-row band per loop); Equivalent collapses each
/// Sarrus unit to its straight-line motion screw (one column per unit, bands
/// only for the inter-unit closure loops, whose unit-loop bands vanish
/// identically).
enum class Method { Original, Equivalent };

Method parse_method(const std::string& name);
std::string method_name(Method m);

/// Analysis configuration. phi is the input fold angle of the minimum-beta
/// class; fold_override (used by the integrator) supplies per-unit fold
/// angles directly and bypasses the synchronized-path parameterization.
struct AnalysisConfig {
  double phi = 0.0;
  double d_scale = 1.0;  ///< uniform scale on frame origins (rank-genericity audits)
  double tol = kDefaultRankTol;
  std::optional<std::vector<double>> fold_override;
};

/// Per-unit joint screws mapped to the body frame at the configuration.
std::vector<Mat6> global_unit_screws(const Mechanism& mech, const AnalysisConfig& config);

/// Assembles the loop constraint matrix for the requested method.
ScrewMatrix assemble_constraint_matrix(const Mechanism& mech, const AnalysisConfig& config,
                                       Method method);

struct AnalysisReport {
  PolyhedronKind kind;
  Method method = Method::Original;
  double phi = 0.0;
  double tol = kDefaultRankTol;
  double d_scale = 1.0;
  int n_sarrus = 0;
  int n_links = 0;
  int n_graph_joints = 0;
  int n_loops = 0;
  int n_joints = 0;  ///< column-level joint count (original: all revolutes; equivalent: one per unit)
  int rows = 0;
  int cols = 0;
  int rank = 0;
  int mobility = 0;
  std::vector<double> motion_mode;  ///< unit-norm nullspace vector, first fold rate positive; present iff mobility == 1
  std::vector<double> fold_angles;  ///< per-unit fold angles (rad)
  std::vector<std::string> notes;
};

/// Rank, mobility = columns - rank, and the motion mode when unique.
AnalysisReport compute_mobility(const Mechanism& mech, const AnalysisConfig& config,
                                Method method);

struct SyncReport {
  std::vector<double> outer_rates;  ///< per unit, from the original-method mode
  std::vector<double> mid_rates;    ///< per unit, knee rate (sign-adjusted)
  double unit_internal_dev_rel = 0.0;  ///< agreement of the four outer-joint rates within a unit
  double class_spread_rel = 0.0;       ///< outer-rate spread within each half-dihedral class
  double mid_ratio_dev_rel = 0.0;      ///< deviation of mid rates from twice the outer rates
  double cross_class_dev_rel = 0.0;    ///< spread of rate * cos(fold)/cos(beta) across classes
  int n_classes = 1;
  bool pass = false;
  std::vector<std::string> notes;
};

/// Extracts per-unit fold rates from the original-method motion mode and
/// verifies the synchronization pattern: equal outer rates within each
/// half-dihedral class (all units for the equal-dihedral kinds), knee rates
/// equal to twice the outer rates, and the cross-class weight
/// rate * cos(fold)/cos(beta) constant. Throws std::runtime_error when the
/// mobility at the configuration is not 1.
SyncReport synchronization_check(const Mechanism& mech, const AnalysisConfig& config);

struct RankSample {
  double phi = 0.0;
  int rank = 0;
  bool endpoint = false;  ///< fully folded/deployed boundary, excluded from the generic claim
};

struct SweepReport {
  Method method = Method::Original;
  int generic_rank = 0;
  std::vector<RankSample> samples;
  std::vector<double> deviation_phis;  ///< interior sample angles whose rank differs
  bool pass = false;
};

/// Rank profile over [phi_from, phi_to] with `steps` evenly spaced samples.
/// The generic rank is taken at the middle interior sample; exact boundary
/// configurations are recorded but never judged.
SweepReport sweep_rank(const Mechanism& mech, double phi_from, double phi_to, int steps,
                       Method method, double tol, double d_scale = 1.0);

struct TrajectoryState {
  double path_phi = 0.0;      ///< fold angle of unit 1 (the path parameter)
  std::vector<double> folds;  ///< per-unit fold angles
  std::vector<double> mids;   ///< per-unit knee angles
};

struct Trajectory {
  std::vector<TrajectoryState> states;
  double max_fold_spread = 0.0;    ///< max over states of (max fold - min fold), rad
  double max_mid_deviation = 0.0;  ///< max over states of |mid - 2 fold|, rad
  bool pass = false;               ///< both bounds < 1e-6 rad
};

/// Integrates the normalized motion mode with the classical fixed-step
/// fourth-order scheme from a state where every fold angle equals phi0 until
/// the unit-1 fold angle reaches phi1. Throws std::runtime_error (naming the
/// offending angle) if the mobility leaves 1 anywhere along the path.
Trajectory integrate_motion(const Mechanism& mech, double phi0, double phi1, int steps,
                            double tol = kDefaultRankTol);

/// Mean-centered translational velocity of every platform induced by the
/// method's motion mode (angular parts are checked to vanish). Used for
/// radial-motion and method-agreement audits.
std::vector<Vec3> platform_translation_rates(const Mechanism& mech,
                                             const AnalysisConfig& config, Method method);

}  // namespace dpm
