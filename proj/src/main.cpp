#include <clocale>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpm/kinematics.hpp"
#include "dpm/mechanism.hpp"
#include "dpm/mobility.hpp"
#include "dpm/output.hpp"
#include "dpm/polyhedron.hpp"

namespace {

constexpr double kPiHalfDeg = 90.0;

double deg2rad(double deg) { return deg * std::acos(-1.0) / 180.0; }
double rad2deg(double rad) { return rad * 180.0 / std::acos(-1.0); }

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit_error_json(const std::string& type, const std::string& message) {
  dpm::JsonValue doc = dpm::JsonValue::object();
  doc.set("schema_version", dpm::JsonValue::str("1"));
  dpm::JsonValue err = dpm::JsonValue::object();
  err.set("type", dpm::JsonValue::str(type));
  err.set("message", dpm::JsonValue::str(message));
  doc.set("error", std::move(err));
  std::fputs(doc.dump().c_str(), stderr);
}

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw IoError("cannot open output path: " + out_path);
  f << content;
  f.flush();
  if (!f) throw IoError("failed writing output path: " + out_path);
}

// single tolerance resolution point: flag > DPM_TOL environment > 1e-9
double resolve_tol(bool flag_given, double flag_value) {
  if (flag_given) {
    if (!(flag_value > 0.0) || !std::isfinite(flag_value)) {
      throw std::invalid_argument("--tol must be positive and finite");
    }
    return flag_value;
  }
  if (const char* env = std::getenv("DPM_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("DPM_TOL must be a positive finite number, got '" +
                                  std::string(env) + "'");
    }
    return v;
  }
  return dpm::kDefaultRankTol;
}

void check_format(const std::string& format, const std::vector<std::string>& allowed) {
  for (const std::string& a : allowed) {
    if (format == a) return;
  }
  std::string msg = "--format must be one of:";
  for (const std::string& a : allowed) msg += " " + a;
  msg += "; got '" + format + "'";
  throw std::invalid_argument(msg);
}

dpm::JsonValue notes_json(const std::vector<std::string>& notes) {
  dpm::JsonValue arr = dpm::JsonValue::array();
  for (const std::string& n : notes) arr.push(dpm::JsonValue::str(n));
  return arr;
}

dpm::JsonValue vector_json(const std::vector<double>& values) {
  dpm::JsonValue arr = dpm::JsonValue::array();
  for (double v : values) arr.push(dpm::JsonValue::number(v));
  return arr;
}

const char* kCurveReadingNote =
    "outer-radius closed form: the source prints the divisor 8 in a linear rendering whose "
    "grouping is ambiguous; it is read inside the radical, the only reading that matches both "
    "endpoint values";

// ---- analyze -------------------------------------------------------------

struct AnalyzeArgs {
  std::string polyhedron;
  double a = 1.0;
  double gamma_deg = -1.0;  // negative: use the geometric deployment limit
  double phi_deg = 30.0;
  std::string method = "original";
  double d_scale = 1.0;
  double tol = 0.0;
  bool tol_given = false;
  std::string format = "json";
  std::string out;
};

int run_analyze(const AnalyzeArgs& args) {
  check_format(args.format, {"json"});
  const dpm::PolyhedronKind kind = dpm::PolyhedronKind::parse(args.polyhedron);
  const dpm::Method method = dpm::parse_method(args.method);
  if (!(args.phi_deg >= 0.0) || args.phi_deg > kPiHalfDeg) {
    throw std::invalid_argument("--phi-deg must lie in [0, 90]");
  }
  const double gamma = args.gamma_deg < 0.0 ? dpm::gamma_max(kind) : deg2rad(args.gamma_deg);
  const dpm::Mechanism mech = dpm::build_mechanism(kind, args.a, gamma, deg2rad(args.phi_deg));
  dpm::AnalysisConfig cfg;
  cfg.phi = deg2rad(args.phi_deg);
  cfg.d_scale = args.d_scale;
  cfg.tol = resolve_tol(args.tol_given, args.tol);
  const dpm::AnalysisReport rep = dpm::compute_mobility(mech, cfg, method);

  dpm::JsonValue doc = dpm::JsonValue::object();
  doc.set("schema_version", dpm::JsonValue::str("1"));
  doc.set("command", dpm::JsonValue::str("analyze"));
  dpm::JsonValue a = dpm::JsonValue::object();
  a.set("polyhedron", dpm::JsonValue::str(kind.name()));
  a.set("a", dpm::JsonValue::number(args.a));
  a.set("gamma_deg", dpm::JsonValue::number(rad2deg(gamma)));
  a.set("phi_deg", dpm::JsonValue::number(args.phi_deg));
  a.set("method", dpm::JsonValue::str(dpm::method_name(method)));
  a.set("d_scale", dpm::JsonValue::number(cfg.d_scale));
  a.set("tol", dpm::JsonValue::number(cfg.tol));
  doc.set("arguments", std::move(a));
  dpm::JsonValue counts = dpm::JsonValue::object();
  counts.set("sarrus_units", dpm::JsonValue::integer(rep.n_sarrus));
  counts.set("links", dpm::JsonValue::integer(rep.n_links));
  counts.set("joints", dpm::JsonValue::integer(rep.n_graph_joints));
  counts.set("loops", dpm::JsonValue::integer(rep.n_loops));
  doc.set("counts", std::move(counts));
  dpm::JsonValue matrix = dpm::JsonValue::object();
  matrix.set("rows", dpm::JsonValue::integer(rep.rows));
  matrix.set("cols", dpm::JsonValue::integer(rep.cols));
  doc.set("matrix", std::move(matrix));
  doc.set("n_joints", dpm::JsonValue::integer(rep.n_joints));
  doc.set("rank", dpm::JsonValue::integer(rep.rank));
  doc.set("mobility", dpm::JsonValue::integer(rep.mobility));
  std::vector<double> folds_deg;
  folds_deg.reserve(rep.fold_angles.size());
  for (double f : rep.fold_angles) folds_deg.push_back(rad2deg(f));
  doc.set("fold_angles_deg", vector_json(folds_deg));
  if (rep.mobility == 1) {
    doc.set("motion_mode", vector_json(rep.motion_mode));
  }
  doc.set("notes", notes_json(rep.notes));
  write_output(doc.dump(), args.out);
  return 0;
}

// ---- curves --------------------------------------------------------------

struct CurvesArgs {
  double a = 1.0;
  int samples = 91;
  std::string format = "csv";
  std::string out;
};

int run_curves(const CurvesArgs& args) {
  check_format(args.format, {"csv", "json"});
  const std::vector<dpm::CurveSample> samples = dpm::tetra_deployment_curve(args.a, args.samples);
  if (args.format == "csv") {
    write_output(dpm::curves_csv(samples), args.out);
    return 0;
  }
  dpm::JsonValue doc = dpm::JsonValue::object();
  doc.set("schema_version", dpm::JsonValue::str("1"));
  doc.set("command", dpm::JsonValue::str("curves"));
  dpm::JsonValue a = dpm::JsonValue::object();
  a.set("polyhedron", dpm::JsonValue::str("tetrahedron"));
  a.set("a", dpm::JsonValue::number(args.a));
  a.set("samples", dpm::JsonValue::integer(args.samples));
  doc.set("arguments", std::move(a));
  dpm::JsonValue rows = dpm::JsonValue::array();
  for (const dpm::CurveSample& s : samples) {
    dpm::JsonValue row = dpm::JsonValue::object();
    row.set("phi_deg", dpm::JsonValue::number(rad2deg(s.phi)));
    row.set("r", dpm::JsonValue::number(s.r));
    row.set("R", dpm::JsonValue::number(s.R));
    row.set("V", dpm::JsonValue::number(s.V));
    rows.push(std::move(row));
  }
  doc.set("samples", std::move(rows));
  doc.set("notes", notes_json({kCurveReadingNote}));
  write_output(doc.dump(), args.out);
  return 0;
}

// ---- mesh ----------------------------------------------------------------

struct MeshArgs {
  std::string polyhedron;
  double a = 1.0;
  double gamma_deg = -1.0;
  double phi_deg = 0.0;
  std::string format = "obj";
  std::string out;
};

int run_mesh(const MeshArgs& args) {
  check_format(args.format, {"obj", "json"});
  const dpm::PolyhedronKind kind = dpm::PolyhedronKind::parse(args.polyhedron);
  if (!(args.phi_deg >= 0.0) || args.phi_deg > kPiHalfDeg) {
    throw std::invalid_argument("--phi-deg must lie in [0, 90]");
  }
  const double gamma = args.gamma_deg < 0.0 ? dpm::gamma_max(kind) : deg2rad(args.gamma_deg);
  const dpm::Mechanism mech = dpm::build_mechanism(kind, args.a, gamma, deg2rad(args.phi_deg));
  dpm::ConfigurationMesh mesh = dpm::configuration_mesh(mech);
  mesh.notes.push_back(
      "volume convention: the enclosed envelope (side openings spanned by limb and vertex "
      "faces), which coincides with the convex hull of the displaced platform corners");
  if (args.format == "obj") {
    write_output(dpm::mesh_obj(mesh), args.out);
    return 0;
  }
  dpm::JsonValue doc = dpm::JsonValue::object();
  doc.set("schema_version", dpm::JsonValue::str("1"));
  doc.set("command", dpm::JsonValue::str("mesh"));
  dpm::JsonValue a = dpm::JsonValue::object();
  a.set("polyhedron", dpm::JsonValue::str(kind.name()));
  a.set("a", dpm::JsonValue::number(args.a));
  a.set("gamma_deg", dpm::JsonValue::number(rad2deg(gamma)));
  a.set("phi_deg", dpm::JsonValue::number(args.phi_deg));
  doc.set("arguments", std::move(a));
  int n_platform = 0, n_limb = 0, n_newface = 0;
  for (const dpm::MeshFace& f : mesh.faces) {
    if (f.label == dpm::FaceLabel::Platform) ++n_platform;
    if (f.label == dpm::FaceLabel::Limb) ++n_limb;
    if (f.label == dpm::FaceLabel::NewFace) ++n_newface;
  }
  dpm::JsonValue counts = dpm::JsonValue::object();
  counts.set("vertices", dpm::JsonValue::integer(static_cast<long long>(mesh.vertices.size())));
  counts.set("faces", dpm::JsonValue::integer(static_cast<long long>(mesh.faces.size())));
  counts.set("platform", dpm::JsonValue::integer(n_platform));
  counts.set("limb", dpm::JsonValue::integer(n_limb));
  counts.set("newface", dpm::JsonValue::integer(n_newface));
  counts.set("edges", dpm::JsonValue::integer(dpm::mesh_edge_count(mesh)));
  doc.set("counts", std::move(counts));
  doc.set("face_displacement", dpm::JsonValue::number(mesh.delta));
  doc.set("watertight", dpm::JsonValue::boolean(dpm::is_watertight(mesh)));
  doc.set("volume", dpm::JsonValue::number(dpm::mesh_volume(mesh)));
  doc.set("max_vertex_radius", dpm::JsonValue::number(dpm::max_vertex_radius(mesh)));
  dpm::JsonValue verts = dpm::JsonValue::array();
  for (const dpm::Vec3& p : mesh.vertices) {
    verts.push(vector_json({p.x(), p.y(), p.z()}));
  }
  doc.set("vertices", std::move(verts));
  dpm::JsonValue faces = dpm::JsonValue::array();
  for (const dpm::MeshFace& f : mesh.faces) {
    dpm::JsonValue fj = dpm::JsonValue::object();
    fj.set("label", dpm::JsonValue::str(dpm::face_label_name(f.label)));
    dpm::JsonValue ids = dpm::JsonValue::array();
    for (int i : f.verts) ids.push(dpm::JsonValue::integer(i));
    fj.set("verts", std::move(ids));
    faces.push(std::move(fj));
  }
  doc.set("faces", std::move(faces));
  doc.set("notes", notes_json(mesh.notes));
  write_output(doc.dump(), args.out);
  return 0;
}

// ---- table ---------------------------------------------------------------

struct TableArgs {
  std::string format = "csv";
  std::string out;
};

int run_table(const TableArgs& args) {
  check_format(args.format, {"csv", "json"});
  const std::vector<dpm::Table1Row> rows = dpm::table1_rows();
  if (args.format == "csv") {
    write_output(dpm::table_csv(rows), args.out);
    return 0;
  }
  dpm::JsonValue doc = dpm::JsonValue::object();
  doc.set("schema_version", dpm::JsonValue::str("1"));
  doc.set("command", dpm::JsonValue::str("table"));
  dpm::JsonValue arr = dpm::JsonValue::array();
  for (const dpm::Table1Row& row : rows) {
    dpm::JsonValue rj = dpm::JsonValue::object();
    rj.set("group", dpm::JsonValue::str(row.group));
    rj.set("polyhedron", dpm::JsonValue::str(row.name));
    if (row.N > 0) rj.set("N", dpm::JsonValue::integer(row.N));
    rj.set("n_sarrus", dpm::JsonValue::integer(row.n_sarrus));
    rj.set("n_link", dpm::JsonValue::integer(row.n_link));
    rj.set("n_joint", dpm::JsonValue::integer(row.n_joint));
    rj.set("beta", dpm::JsonValue::str(dpm::format_beta_entries(row.beta)));
    rj.set("gamma_max_deg", dpm::JsonValue::number(row.gamma_max_deg));
    rj.set("notes", notes_json(row.notes));
    arr.push(std::move(rj));
  }
  doc.set("rows", std::move(arr));
  write_output(doc.dump(), args.out);
  return 0;
}

// ---- sweep ---------------------------------------------------------------

struct SweepArgs {
  std::string polyhedron;
  double a = 1.0;
  double gamma_deg = -1.0;
  std::string method = "original";
  double from_deg = 5.0;
  double to_deg = 85.0;
  int steps = 81;
  double d_scale = 1.0;
  double tol = 0.0;
  bool tol_given = false;
  std::string format = "json";
  std::string out;
};

int run_sweep(const SweepArgs& args) {
  check_format(args.format, {"json"});
  const dpm::PolyhedronKind kind = dpm::PolyhedronKind::parse(args.polyhedron);
  const dpm::Method method = dpm::parse_method(args.method);
  const double gamma = args.gamma_deg < 0.0 ? dpm::gamma_max(kind) : deg2rad(args.gamma_deg);
  const double tol = resolve_tol(args.tol_given, args.tol);
  const dpm::Mechanism mech = dpm::build_mechanism(kind, args.a, gamma, deg2rad(30.0));
  const dpm::SweepReport rep = dpm::sweep_rank(mech, deg2rad(args.from_deg), deg2rad(args.to_deg),
                                               args.steps, method, tol, args.d_scale);

  dpm::JsonValue doc = dpm::JsonValue::object();
  doc.set("schema_version", dpm::JsonValue::str("1"));
  doc.set("command", dpm::JsonValue::str("sweep"));
  dpm::JsonValue a = dpm::JsonValue::object();
  a.set("polyhedron", dpm::JsonValue::str(kind.name()));
  a.set("a", dpm::JsonValue::number(args.a));
  a.set("gamma_deg", dpm::JsonValue::number(rad2deg(gamma)));
  a.set("method", dpm::JsonValue::str(dpm::method_name(method)));
  a.set("from_deg", dpm::JsonValue::number(args.from_deg));
  a.set("to_deg", dpm::JsonValue::number(args.to_deg));
  a.set("steps", dpm::JsonValue::integer(args.steps));
  a.set("d_scale", dpm::JsonValue::number(args.d_scale));
  a.set("tol", dpm::JsonValue::number(tol));
  doc.set("arguments", std::move(a));
  doc.set("generic_rank", dpm::JsonValue::integer(rep.generic_rank));
  dpm::JsonValue samples = dpm::JsonValue::array();
  for (const dpm::RankSample& s : rep.samples) {
    dpm::JsonValue sj = dpm::JsonValue::object();
    sj.set("phi_deg", dpm::JsonValue::number(rad2deg(s.phi)));
    sj.set("rank", dpm::JsonValue::integer(s.rank));
    sj.set("endpoint", dpm::JsonValue::boolean(s.endpoint));
    samples.push(std::move(sj));
  }
  doc.set("samples", std::move(samples));
  std::vector<double> dev_deg;
  for (double p : rep.deviation_phis) dev_deg.push_back(rad2deg(p));
  doc.set("deviations_phi_deg", vector_json(dev_deg));
  doc.set("pass", dpm::JsonValue::boolean(rep.pass));
  doc.set("notes", notes_json(mech.notes));
  write_output(doc.dump(), args.out);
  if (!rep.pass) {
    emit_error_json("verdict_failed", "rank deviates from the generic value at phi_deg " +
                                          dpm::format_double(dev_deg.front()));
    return 1;
  }
  return 0;
}

// ---- sync ----------------------------------------------------------------

struct SyncArgs {
  std::string polyhedron;
  double a = 1.0;
  double gamma_deg = -1.0;
  double phi0_deg = 10.0;
  double phi1_deg = 80.0;
  int steps = 200;
  double tol = 0.0;
  bool tol_given = false;
  std::string format = "json";
  std::string out;
};

int run_sync(const SyncArgs& args) {
  check_format(args.format, {"json"});
  const dpm::PolyhedronKind kind = dpm::PolyhedronKind::parse(args.polyhedron);
  const double gamma = args.gamma_deg < 0.0 ? dpm::gamma_max(kind) : deg2rad(args.gamma_deg);
  const double tol = resolve_tol(args.tol_given, args.tol);
  const dpm::Mechanism mech = dpm::build_mechanism(kind, args.a, gamma, deg2rad(args.phi0_deg));

  dpm::AnalysisConfig cfg;
  cfg.phi = deg2rad(args.phi0_deg);
  cfg.tol = tol;
  const dpm::SyncReport rates = dpm::synchronization_check(mech, cfg);
  const dpm::Trajectory traj =
      dpm::integrate_motion(mech, deg2rad(args.phi0_deg), deg2rad(args.phi1_deg), args.steps, tol);
  const bool pass = rates.pass && traj.pass;

  dpm::JsonValue doc = dpm::JsonValue::object();
  doc.set("schema_version", dpm::JsonValue::str("1"));
  doc.set("command", dpm::JsonValue::str("sync"));
  dpm::JsonValue a = dpm::JsonValue::object();
  a.set("polyhedron", dpm::JsonValue::str(kind.name()));
  a.set("a", dpm::JsonValue::number(args.a));
  a.set("gamma_deg", dpm::JsonValue::number(rad2deg(gamma)));
  a.set("phi0_deg", dpm::JsonValue::number(args.phi0_deg));
  a.set("phi1_deg", dpm::JsonValue::number(args.phi1_deg));
  a.set("steps", dpm::JsonValue::integer(args.steps));
  a.set("tol", dpm::JsonValue::number(tol));
  doc.set("arguments", std::move(a));
  dpm::JsonValue rj = dpm::JsonValue::object();
  rj.set("outer_rates", vector_json(rates.outer_rates));
  rj.set("mid_rates", vector_json(rates.mid_rates));
  rj.set("unit_internal_dev_rel", dpm::JsonValue::number(rates.unit_internal_dev_rel));
  rj.set("class_spread_rel", dpm::JsonValue::number(rates.class_spread_rel));
  rj.set("mid_ratio_dev_rel", dpm::JsonValue::number(rates.mid_ratio_dev_rel));
  rj.set("cross_class_dev_rel", dpm::JsonValue::number(rates.cross_class_dev_rel));
  rj.set("n_classes", dpm::JsonValue::integer(rates.n_classes));
  rj.set("pass", dpm::JsonValue::boolean(rates.pass));
  doc.set("rate_check", std::move(rj));
  dpm::JsonValue tj = dpm::JsonValue::object();
  tj.set("states", dpm::JsonValue::integer(static_cast<long long>(traj.states.size())));
  tj.set("max_fold_spread_rad", dpm::JsonValue::number(traj.max_fold_spread));
  tj.set("max_mid_deviation_rad", dpm::JsonValue::number(traj.max_mid_deviation));
  std::vector<double> final_deg;
  for (double f : traj.states.back().folds) final_deg.push_back(rad2deg(f));
  tj.set("final_fold_angles_deg", vector_json(final_deg));
  tj.set("pass", dpm::JsonValue::boolean(traj.pass));
  doc.set("trajectory", std::move(tj));
  doc.set("pass", dpm::JsonValue::boolean(pass));
  doc.set("notes", notes_json(rates.notes));
  write_output(doc.dump(), args.out);
  if (!pass) {
    emit_error_json("verdict_failed",
                    rates.pass ? "trajectory spread exceeded 1e-6 rad over [" +
                                     dpm::format_double(args.phi0_deg) + ", " +
                                     dpm::format_double(args.phi1_deg) + "] deg"
                               : "fold-rate synchronization deviates beyond 1e-9 relative at "
                                 "phi_deg " + dpm::format_double(args.phi0_deg));
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  CLI::App app{"Kinematics and mobility toolkit for Sarrus-linked deployable polyhedra"};
  app.require_subcommand(1);
  int exit_code = 0;

  AnalyzeArgs an;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Constraint-matrix rank, mobility, and motion mode at one configuration");
  analyze->add_option("--polyhedron", an.polyhedron,
                      "tetrahedron | cube | dodecahedron | prismN (N >= 3)")
      ->required();
  analyze->add_option("--a", an.a, "platform edge length")->capture_default_str();
  analyze->add_option("--gamma-deg", an.gamma_deg,
                      "panel apex angle in degrees (default: the deployment limit)");
  analyze->add_option("--phi-deg", an.phi_deg, "fold angle in degrees")->capture_default_str();
  analyze->add_option("--method", an.method, "original | equivalent")->capture_default_str();
  analyze->add_option("--d-scale", an.d_scale, "radial placement scale (rank invariance probe)")
      ->capture_default_str();
  analyze->add_option("--tol", an.tol, "rank tolerance (default 1e-9, or DPM_TOL)");
  analyze->add_option("--format", an.format, "json")->capture_default_str();
  analyze->add_option("--out", an.out, "output path (default: stdout)");
  analyze->callback([&] {
    an.tol_given = analyze->count("--tol") > 0;
    exit_code = run_analyze(an);
  });

  CurvesArgs cu;
  CLI::App* curves = app.add_subcommand(
      "curves", "Tetrahedron deployment curves r, R, V over the full fold range");
  curves->add_option("--a", cu.a, "platform edge length")->capture_default_str();
  curves->add_option("--samples", cu.samples, "evenly spaced samples over [0, 90] deg")
      ->capture_default_str();
  curves->add_option("--format", cu.format, "csv | json")->capture_default_str();
  curves->add_option("--out", cu.out, "output path (default: stdout)");
  curves->callback([&] { exit_code = run_curves(cu); });

  MeshArgs me;
  CLI::App* mesh = app.add_subcommand("mesh", "Configuration envelope as a labeled OBJ mesh");
  mesh->add_option("--polyhedron", me.polyhedron,
                   "tetrahedron | cube | dodecahedron | prismN (N >= 3)")
      ->required();
  mesh->add_option("--a", me.a, "platform edge length")->capture_default_str();
  mesh->add_option("--gamma-deg", me.gamma_deg,
                   "panel apex angle in degrees (default: the deployment limit)");
  mesh->add_option("--phi-deg", me.phi_deg, "fold angle in degrees")->capture_default_str();
  mesh->add_option("--format", me.format, "obj | json")->capture_default_str();
  mesh->add_option("--out", me.out, "output path (default: stdout)");
  mesh->callback([&] { exit_code = run_mesh(me); });

  TableArgs ta;
  CLI::App* table = app.add_subcommand(
      "table", "Mechanism catalog: counts, half-dihedral classes, deployment limits");
  table->add_option("--format", ta.format, "csv | json")->capture_default_str();
  table->add_option("--out", ta.out, "output path (default: stdout)");
  table->callback([&] { exit_code = run_table(ta); });

  SweepArgs sw;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Constraint-matrix rank over a fold-angle range (constancy verdict)");
  sweep->add_option("--polyhedron", sw.polyhedron,
                    "tetrahedron | cube | dodecahedron | prismN (N >= 3)")
      ->required();
  sweep->add_option("--a", sw.a, "platform edge length")->capture_default_str();
  sweep->add_option("--gamma-deg", sw.gamma_deg,
                    "panel apex angle in degrees (default: the deployment limit)");
  sweep->add_option("--method", sw.method, "original | equivalent")->capture_default_str();
  sweep->add_option("--from-deg", sw.from_deg, "range start in degrees")->capture_default_str();
  sweep->add_option("--to-deg", sw.to_deg, "range end in degrees")->capture_default_str();
  sweep->add_option("--steps", sw.steps, "number of samples (inclusive endpoints)")
      ->capture_default_str();
  sweep->add_option("--d-scale", sw.d_scale, "radial placement scale (rank invariance probe)")
      ->capture_default_str();
  sweep->add_option("--tol", sw.tol, "rank tolerance (default 1e-9, or DPM_TOL)");
  sweep->add_option("--format", sw.format, "json")->capture_default_str();
  sweep->add_option("--out", sw.out, "output path (default: stdout)");
  sweep->callback([&] {
    sw.tol_given = sweep->count("--tol") > 0;
    exit_code = run_sweep(sw);
  });

  SyncArgs sy;
  CLI::App* sync = app.add_subcommand(
      "sync", "Fold-rate synchronization check and motion-mode trajectory integration");
  sync->add_option("--polyhedron", sy.polyhedron,
                   "tetrahedron | cube | dodecahedron | prismN (N >= 3)")
      ->required();
  sync->add_option("--a", sy.a, "platform edge length")->capture_default_str();
  sync->add_option("--gamma-deg", sy.gamma_deg,
                   "panel apex angle in degrees (default: the deployment limit)");
  sync->add_option("--phi0-deg", sy.phi0_deg, "trajectory start fold angle in degrees")
      ->capture_default_str();
  sync->add_option("--phi1-deg", sy.phi1_deg, "trajectory end fold angle in degrees")
      ->capture_default_str();
  sync->add_option("--steps", sy.steps, "integration steps")->capture_default_str();
  sync->add_option("--tol", sy.tol, "rank tolerance (default 1e-9, or DPM_TOL)");
  sync->add_option("--format", sy.format, "json")->capture_default_str();
  sync->add_option("--out", sy.out, "output path (default: stdout)");
  sync->callback([&] {
    sy.tol_given = sync->count("--tol") > 0;
    exit_code = run_sync(sy);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    emit_error_json("invalid_argument", e.what());
    return 2;
  } catch (const IoError& e) {
    emit_error_json("io_error", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    emit_error_json("invalid_argument", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error_json("computation_error", e.what());
    return 1;
  }
  return exit_code;
}
