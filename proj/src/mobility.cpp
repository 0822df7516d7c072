#include "dpm/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dpm {

namespace {

const double kPi = std::acos(-1.0);

std::vector<double> effective_folds(const Mechanism& mech, const AnalysisConfig& config) {
  const std::size_t nU = mech.units.size();
  if (config.fold_override) {
    const auto& f = *config.fold_override;
    if (f.size() != nU) {
      throw std::invalid_argument("analysis config: fold override size mismatch");
    }
    for (double x : f) {
      if (!(x >= 0.0) || x > kPi / 2.0 + kGeometryTol) {
        throw std::invalid_argument("analysis config: fold override outside [0, pi/2]");
      }
    }
    return f;
  }
  if (!(config.phi >= 0.0) || config.phi > kPi / 2.0 + kGeometryTol) {
    throw std::invalid_argument("analysis config: phi must lie in [0, pi/2]");
  }
  return fold_angles(mech.units, config.phi);
}

void validate_config(const AnalysisConfig& config) {
  if (!(config.d_scale > 0.0) || !std::isfinite(config.d_scale)) {
    throw std::invalid_argument("analysis config: d_scale must be positive and finite");
  }
  if (!(config.tol > 0.0)) {
    throw std::invalid_argument("analysis config: tolerance must be positive");
  }
}

int count_closure_loops(const MechanismGraph& g) {
  int n = 0;
  for (const Loop& loop : g.loops) {
    if (!loop.unit_loop) ++n;
  }
  return n;
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "original") return Method::Original;
  if (name == "equivalent") return Method::Equivalent;
  throw std::invalid_argument("parse_method: unknown method '" + name +
                              "' (expected 'original' or 'equivalent')");
}

std::string method_name(Method m) {
  return m == Method::Original ? "original" : "equivalent";
}

std::vector<Mat6> global_unit_screws(const Mechanism& mech, const AnalysisConfig& config) {
  validate_config(config);
  const std::vector<double> folds = effective_folds(mech, config);
  std::vector<Mat6> out;
  out.reserve(mech.units.size());
  for (std::size_t u = 0; u < mech.units.size(); ++u) {
    const SarrusUnit& su = mech.units[u];
    const SarrusParams params = SarrusParams::make(mech.a, mech.gamma, folds[u]);
    const double delta_u = params.b * std::sin(folds[u]) / std::cos(su.beta);
    const Vec3 origin = unit_origin(su, delta_u) * config.d_scale;
    const RigidTransform T(su.R, origin);
    out.push_back(adjoint_matrix(T) * local_joint_screws(params));
  }
  return out;
}

ScrewMatrix assemble_constraint_matrix(const Mechanism& mech, const AnalysisConfig& config,
                                       Method method) {
  const MechanismGraph& g = mech.graph;
  const int nU = static_cast<int>(mech.units.size());
  if (method == Method::Original) {
    const std::vector<Mat6> Sg = global_unit_screws(mech, config);
    const int rows = 6 * static_cast<int>(g.loops.size());
    ScrewMatrix M = ScrewMatrix::Zero(rows, 6 * nU);
    int band = 0;
    for (const Loop& loop : g.loops) {
      for (const LoopStep& step : loop.steps) {
        const Joint& j = g.joints[static_cast<std::size_t>(step.joint)];
        const int pos = step.joint - 6 * j.unit;
        M.block<6, 1>(6 * band, step.joint) +=
            static_cast<double>(step.sign) * Sg[static_cast<std::size_t>(j.unit)].col(pos);
      }
      ++band;
    }
    return M;
  }
  // Equivalent: one straight-line screw per unit; unit-loop bands vanish
  // identically (the unit's two limbs cross its prismatic once each way), so
  // only closure loops contribute rows.
  validate_config(config);
  effective_folds(mech, config);  // domain validation; the screws are fold-independent
  const int rows = 6 * count_closure_loops(g);
  ScrewMatrix M = ScrewMatrix::Zero(rows, nU);
  int band = 0;
  for (const Loop& loop : g.loops) {
    if (loop.unit_loop) continue;
    for (const LimbCrossing& c : loop.crossings) {
      const Vec3 y = mech.units[static_cast<std::size_t>(c.unit)].yhat();
      M.block<3, 1>(6 * band + 3, c.unit) += static_cast<double>(c.direction) * y;
    }
    ++band;
  }
  return M;
}

AnalysisReport compute_mobility(const Mechanism& mech, const AnalysisConfig& config,
                                Method method) {
  const ScrewMatrix M = assemble_constraint_matrix(mech, config, method);
  AnalysisReport rep;
  rep.kind = mech.kind;
  rep.method = method;
  rep.phi = config.phi;
  rep.tol = config.tol;
  rep.d_scale = config.d_scale;
  rep.n_sarrus = static_cast<int>(mech.units.size());
  rep.n_links = mech.graph.n_links;
  rep.n_graph_joints = static_cast<int>(mech.graph.joints.size());
  rep.n_loops = static_cast<int>(mech.graph.loops.size());
  rep.rows = static_cast<int>(M.rows());
  rep.cols = static_cast<int>(M.cols());
  rep.n_joints = rep.cols == 6 * rep.n_sarrus ? rep.n_graph_joints : rep.n_sarrus;
  rep.rank = numerical_rank(M, config.tol);
  rep.mobility = rep.cols - rep.rank;
  rep.fold_angles = effective_folds(mech, config);
  rep.notes = mech.notes;
  if (rep.mobility == 1) {
    const auto basis = nullspace_basis(M, config.tol);
    Eigen::VectorXd v = basis.at(0);
    if (v(0) < 0.0) v = -v;
    rep.motion_mode.assign(v.data(), v.data() + v.size());
  }
  return rep;
}

SyncReport synchronization_check(const Mechanism& mech, const AnalysisConfig& config) {
  const AnalysisReport rep = compute_mobility(mech, config, Method::Original);
  if (rep.mobility != 1) {
    throw std::runtime_error("synchronization_check: mobility is " +
                             std::to_string(rep.mobility) + ", no unique motion mode");
  }
  const std::vector<double>& v = rep.motion_mode;
  const std::size_t nU = mech.units.size();
  SyncReport out;
  out.outer_rates.reserve(nU);
  out.mid_rates.reserve(nU);
  double scale = 0.0;
  double internal_dev = 0.0;
  for (std::size_t u = 0; u < nU; ++u) {
    const double outer = v[6 * u];
    out.outer_rates.push_back(outer);
    scale = std::max(scale, std::abs(outer));
    for (int k : {2, 3, 5}) {
      internal_dev = std::max(internal_dev, std::abs(v[6 * u + static_cast<std::size_t>(k)] - outer));
    }
    // the two knee rates; the knee rotates opposite the outer hinges
    const double mid = 0.5 * (-v[6 * u + 1] - v[6 * u + 4]);
    internal_dev = std::max(internal_dev, std::abs(v[6 * u + 1] - v[6 * u + 4]));
    out.mid_rates.push_back(mid);
  }
  if (scale <= 0.0) {
    throw std::runtime_error("synchronization_check: degenerate motion mode");
  }
  out.unit_internal_dev_rel = internal_dev / scale;

  // half-dihedral classes
  std::vector<double> class_betas;
  std::vector<int> class_of(nU, -1);
  for (std::size_t u = 0; u < nU; ++u) {
    const double b = mech.units[u].beta;
    int ci = -1;
    for (std::size_t c = 0; c < class_betas.size(); ++c) {
      if (std::abs(class_betas[c] - b) < 1e-9) {
        ci = static_cast<int>(c);
        break;
      }
    }
    if (ci < 0) {
      ci = static_cast<int>(class_betas.size());
      class_betas.push_back(b);
    }
    class_of[u] = ci;
  }
  out.n_classes = static_cast<int>(class_betas.size());

  double class_spread = 0.0;
  for (std::size_t c = 0; c < class_betas.size(); ++c) {
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (std::size_t u = 0; u < nU; ++u) {
      if (class_of[u] != static_cast<int>(c)) continue;
      const double r = out.outer_rates[u];
      lo = first ? r : std::min(lo, r);
      hi = first ? r : std::max(hi, r);
      first = false;
    }
    class_spread = std::max(class_spread, hi - lo);
  }
  out.class_spread_rel = class_spread / scale;

  double mid_dev = 0.0;
  for (std::size_t u = 0; u < nU; ++u) {
    mid_dev = std::max(mid_dev, std::abs(out.mid_rates[u] - 2.0 * out.outer_rates[u]));
  }
  out.mid_ratio_dev_rel = mid_dev / (2.0 * scale);

  // cross-class law: rate * cos(fold) / cos(beta) constant over all units
  double wlo = 0.0, whi = 0.0;
  for (std::size_t u = 0; u < nU; ++u) {
    const double w =
        out.outer_rates[u] * std::cos(rep.fold_angles[u]) / std::cos(mech.units[u].beta);
    wlo = u == 0 ? w : std::min(wlo, w);
    whi = u == 0 ? w : std::max(whi, w);
  }
  out.cross_class_dev_rel = (whi - wlo) / std::max(std::abs(wlo), std::abs(whi));

  out.pass = out.unit_internal_dev_rel < 1e-9 && out.class_spread_rel < 1e-9 &&
             out.mid_ratio_dev_rel < 1e-9 && out.cross_class_dev_rel < 1e-9;
  out.notes = rep.notes;
  if (out.n_classes > 1) {
    out.notes.push_back(
        "multiple half-dihedral classes: fold rates equalize within each class and follow "
        "the class weight cos(beta)/cos(fold) across classes");
  }
  return out;
}

SweepReport sweep_rank(const Mechanism& mech, double phi_from, double phi_to, int steps,
                       Method method, double tol, double d_scale) {
  if (!(phi_from >= 0.0) || !(phi_from < phi_to) || phi_to > kPi / 2.0 + kGeometryTol) {
    throw std::invalid_argument("sweep_rank: need 0 <= phi_from < phi_to <= pi/2");
  }
  if (steps < 2) {
    throw std::invalid_argument("sweep_rank: need at least 2 steps");
  }
  SweepReport out;
  out.method = method;
  out.samples.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double phi = phi_from + (phi_to - phi_from) * i / (steps - 1);
    AnalysisConfig cfg;
    cfg.phi = std::min(phi, kPi / 2.0);
    cfg.tol = tol;
    cfg.d_scale = d_scale;
    const ScrewMatrix M = assemble_constraint_matrix(mech, cfg, method);
    RankSample s;
    s.phi = phi;
    s.rank = numerical_rank(M, tol);
    s.endpoint = phi < 1e-12 || phi > kPi / 2.0 - 1e-12;
    out.samples.push_back(s);
  }
  std::vector<int> interior;
  for (int i = 0; i < steps; ++i) {
    if (!out.samples[static_cast<std::size_t>(i)].endpoint) interior.push_back(i);
  }
  if (interior.empty()) {
    throw std::runtime_error("sweep_rank: no interior samples to define the generic rank");
  }
  out.generic_rank = out.samples[static_cast<std::size_t>(interior[interior.size() / 2])].rank;
  for (int i : interior) {
    if (out.samples[static_cast<std::size_t>(i)].rank != out.generic_rank) {
      out.deviation_phis.push_back(out.samples[static_cast<std::size_t>(i)].phi);
    }
  }
  out.pass = out.deviation_phis.empty();
  return out;
}

Trajectory integrate_motion(const Mechanism& mech, double phi0, double phi1, int steps,
                            double tol) {
  if (!(phi0 > 0.0) || !(phi1 < kPi / 2.0) || !(phi0 <= phi1)) {
    throw std::invalid_argument("integrate_motion: need 0 < phi0 <= phi1 < pi/2");
  }
  if (steps < 1) {
    throw std::invalid_argument("integrate_motion: need at least 1 step");
  }
  const std::size_t nU = mech.units.size();

  // rates of (folds, mids) along the path parameterized by the unit-1 fold
  const auto rates_at = [&](const std::vector<double>& folds, std::vector<double>& dfold,
                            std::vector<double>& dmid) {
    AnalysisConfig cfg;
    cfg.tol = tol;
    cfg.fold_override = folds;
    const AnalysisReport rep = compute_mobility(mech, cfg, Method::Original);
    if (rep.mobility != 1) {
      throw std::runtime_error(
          "integrate_motion: mobility left 1 near fold angle " +
          std::to_string(folds[0] * 180.0 / kPi) + " deg (rank " + std::to_string(rep.rank) + ")");
    }
    const double v0 = rep.motion_mode[0];
    if (std::abs(v0) < 1e-12) {
      throw std::runtime_error("integrate_motion: path parameter rate vanished near fold angle " +
                               std::to_string(folds[0] * 180.0 / kPi) + " deg");
    }
    dfold.resize(nU);
    dmid.resize(nU);
    for (std::size_t u = 0; u < nU; ++u) {
      dfold[u] = rep.motion_mode[6 * u] / v0;
      dmid[u] = -rep.motion_mode[6 * u + 1] / v0;
    }
  };

  Trajectory traj;
  std::vector<double> folds(nU, phi0);
  std::vector<double> mids(nU, 2.0 * phi0);
  const auto record = [&]() {
    TrajectoryState st;
    st.path_phi = folds[0];
    st.folds = folds;
    st.mids = mids;
    double lo = folds[0], hi = folds[0], mdev = 0.0;
    for (std::size_t u = 0; u < nU; ++u) {
      lo = std::min(lo, folds[u]);
      hi = std::max(hi, folds[u]);
      mdev = std::max(mdev, std::abs(mids[u] - 2.0 * folds[u]));
    }
    traj.max_fold_spread = std::max(traj.max_fold_spread, hi - lo);
    traj.max_mid_deviation = std::max(traj.max_mid_deviation, mdev);
    traj.states.push_back(std::move(st));
  };
  record();

  if (phi1 > phi0) {
    const double h = (phi1 - phi0) / steps;
    std::vector<double> k1f(nU), k1m(nU), k2f(nU), k2m(nU), k3f(nU), k3m(nU), k4f(nU), k4m(nU);
    std::vector<double> tmp(nU);
    for (int s = 0; s < steps; ++s) {
      rates_at(folds, k1f, k1m);
      for (std::size_t u = 0; u < nU; ++u) tmp[u] = folds[u] + 0.5 * h * k1f[u];
      rates_at(tmp, k2f, k2m);
      for (std::size_t u = 0; u < nU; ++u) tmp[u] = folds[u] + 0.5 * h * k2f[u];
      rates_at(tmp, k3f, k3m);
      for (std::size_t u = 0; u < nU; ++u) tmp[u] = folds[u] + h * k3f[u];
      rates_at(tmp, k4f, k4m);
      for (std::size_t u = 0; u < nU; ++u) {
        folds[u] += h / 6.0 * (k1f[u] + 2.0 * k2f[u] + 2.0 * k3f[u] + k4f[u]);
        mids[u] += h / 6.0 * (k1m[u] + 2.0 * k2m[u] + 2.0 * k3m[u] + k4m[u]);
      }
      record();
    }
  }
  traj.pass = traj.max_fold_spread < 1e-6 && traj.max_mid_deviation < 1e-6;
  return traj;
}

std::vector<Vec3> platform_translation_rates(const Mechanism& mech,
                                             const AnalysisConfig& config, Method method) {
  const AnalysisReport rep = compute_mobility(mech, config, method);
  if (rep.mobility != 1) {
    throw std::runtime_error("platform_translation_rates: mobility is not 1");
  }
  const std::vector<double>& v = rep.motion_mode;
  const std::size_t nF = mech.poly.faces.size();
  std::vector<Mat6> Sg;
  if (method == Method::Original) Sg = global_unit_screws(mech, config);

  // propagate twists over the platform adjacency (each unit joins P and Q)
  std::vector<std::vector<int>> units_at_face(nF);
  for (std::size_t u = 0; u < mech.units.size(); ++u) {
    units_at_face[static_cast<std::size_t>(mech.units[u].faceP)].push_back(static_cast<int>(u));
    units_at_face[static_cast<std::size_t>(mech.units[u].faceQ)].push_back(static_cast<int>(u));
  }
  std::vector<Vec6> twist(nF, Vec6::Zero());
  std::vector<bool> seen(nF, false);
  seen[0] = true;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int ui : units_at_face[static_cast<std::size_t>(f)]) {
      const SarrusUnit& u = mech.units[static_cast<std::size_t>(ui)];
      const int g = u.faceP == f ? u.faceQ : u.faceP;
      if (seen[static_cast<std::size_t>(g)]) continue;
      Vec6 t;
      if (method == Method::Original) {
        // limb 1 carries Q -> P: twist(P) - twist(Q) = S1 q1 + S2 q2 + S3 q3
        t = Sg[static_cast<std::size_t>(ui)].block<6, 3>(0, 0) *
            Vec3(v[6 * static_cast<std::size_t>(ui)], v[6 * static_cast<std::size_t>(ui) + 1],
                 v[6 * static_cast<std::size_t>(ui) + 2]);
      } else {
        t.setZero();
        t.tail<3>() = v[static_cast<std::size_t>(ui)] * u.yhat();
      }
      if (u.faceP == f) t = -t;  // crossing P -> Q
      twist[static_cast<std::size_t>(g)] = twist[static_cast<std::size_t>(f)] + t;
      seen[static_cast<std::size_t>(g)] = true;
      stack.push_back(g);
    }
  }
  double scale = 0.0;
  for (const Vec6& t : twist) scale = std::max(scale, t.tail<3>().norm());
  for (const Vec6& t : twist) {
    if (t.head<3>().norm() > 1e-9 * std::max(1.0, scale)) {
      throw std::runtime_error("platform_translation_rates: platform twists are not pure translations");
    }
  }
  Vec3 mean = Vec3::Zero();
  for (const Vec6& t : twist) mean += t.tail<3>();
  mean /= static_cast<double>(nF);
  std::vector<Vec3> out;
  out.reserve(nF);
  for (const Vec6& t : twist) out.push_back(t.tail<3>() - mean);
  return out;
}

}  // namespace dpm
