#include "dpm/output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dpm {

std::string format_double(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("format_double: non-finite value");
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::Object;
  return v;
}

JsonValue JsonValue::array() {
  JsonValue v;
  v.kind_ = Kind::Array;
  return v;
}

JsonValue JsonValue::str(std::string s) {
  JsonValue v;
  v.kind_ = Kind::String;
  v.string_ = std::move(s);
  return v;
}

JsonValue JsonValue::number(double x) {
  JsonValue v;
  v.kind_ = Kind::Number;
  v.number_ = x;
  return v;
}

JsonValue JsonValue::integer(long long n) {
  JsonValue v;
  v.kind_ = Kind::Integer;
  v.integer_ = n;
  return v;
}

JsonValue JsonValue::boolean(bool b) {
  JsonValue v;
  v.kind_ = Kind::Bool;
  v.bool_ = b;
  return v;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
  if (kind_ != Kind::Object) {
    throw std::invalid_argument("JsonValue::set: not an object");
  }
  for (auto& [k, old] : members_) {
    if (k == key) {
      old = std::move(v);
      return *this;
    }
  }
  members_.emplace_back(key, std::move(v));
  return *this;
}

JsonValue& JsonValue::push(JsonValue v) {
  if (kind_ != Kind::Array) {
    throw std::invalid_argument("JsonValue::push: not an array");
  }
  elements_.push_back(std::move(v));
  return *this;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void JsonValue::write(std::string& out, int indent, int depth) const {
  const std::string pad(static_cast<std::size_t>(indent) * (static_cast<std::size_t>(depth) + 1),
                        ' ');
  const std::string close_pad(static_cast<std::size_t>(indent) * static_cast<std::size_t>(depth),
                              ' ');
  switch (kind_) {
    case Kind::Null:
      out += "null";
      break;
    case Kind::Bool:
      out += bool_ ? "true" : "false";
      break;
    case Kind::Integer:
      out += std::to_string(integer_);
      break;
    case Kind::Number:
      out += format_double(number_);
      break;
    case Kind::String:
      out += '"';
      out += json_escape(string_);
      out += '"';
      break;
    case Kind::Object: {
      if (members_.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      for (std::size_t i = 0; i < members_.size(); ++i) {
        out += pad;
        out += '"';
        out += json_escape(members_[i].first);
        out += "\": ";
        members_[i].second.write(out, indent, depth + 1);
        if (i + 1 < members_.size()) out += ',';
        out += '\n';
      }
      out += close_pad;
      out += '}';
      break;
    }
    case Kind::Array: {
      if (elements_.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        out += pad;
        elements_[i].write(out, indent, depth + 1);
        if (i + 1 < elements_.size()) out += ',';
        out += '\n';
      }
      out += close_pad;
      out += ']';
      break;
    }
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  out += '\n';
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string curves_csv(const std::vector<CurveSample>& samples) {
  const double rad2deg = 180.0 / std::acos(-1.0);
  std::string out = "phi_deg,r,R,V\n";
  for (const CurveSample& s : samples) {
    out += format_double(s.phi * rad2deg);
    out += ',';
    out += format_double(s.r);
    out += ',';
    out += format_double(s.R);
    out += ',';
    out += format_double(s.V);
    out += '\n';
  }
  return out;
}

namespace {

// catalog angles print with at most two decimals, trailing zeros trimmed
std::string trim2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string join_notes(const std::vector<std::string>& notes) {
  std::string out;
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) out += " | ";
    out += notes[i];
  }
  return out;
}

}  // namespace

std::string format_beta_entries(const std::vector<BetaEntry>& entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += "; ";
    out += trim2(entries[i].value_deg);
    out += "_(";
    out += std::to_string(entries[i].face_m);
    out += ',';
    out += std::to_string(entries[i].face_n);
    out += ')';
  }
  return out;
}

std::string table_csv(const std::vector<Table1Row>& rows) {
  std::string out = "group,polyhedron,N,n_sarrus,n_link,n_joint,beta,gamma_max,notes\n";
  for (const Table1Row& row : rows) {
    out += csv_field(row.group);
    out += ',';
    out += csv_field(row.name);
    out += ',';
    if (row.N > 0) out += std::to_string(row.N);
    out += ',';
    out += std::to_string(row.n_sarrus);
    out += ',';
    out += std::to_string(row.n_link);
    out += ',';
    out += std::to_string(row.n_joint);
    out += ',';
    out += csv_field(format_beta_entries(row.beta));
    out += ',';
    out += trim2(row.gamma_max_deg);
    out += ',';
    out += csv_field(join_notes(row.notes));
    out += '\n';
  }
  return out;
}

std::string mesh_obj(const ConfigurationMesh& mesh) {
  const double rad2deg = 180.0 / std::acos(-1.0);
  std::string out;
  out += "# polyhedron: " + mesh.kind.name() + "\n";
  out += "# edge_length: " + format_double(mesh.a) + "\n";
  out += "# fold_angle_deg: " + format_double(mesh.phi * rad2deg) + "\n";
  out += "# face_displacement: " + format_double(mesh.delta) + "\n";
  for (const std::string& note : mesh.notes) {
    out += "# note: " + note + "\n";
  }
  for (const Vec3& p : mesh.vertices) {
    out += "v " + format_double(p.x()) + ' ' + format_double(p.y()) + ' ' +
           format_double(p.z()) + '\n';
  }
  for (FaceLabel label : {FaceLabel::Platform, FaceLabel::Limb, FaceLabel::NewFace}) {
    bool any = false;
    for (const MeshFace& mf : mesh.faces) {
      if (mf.label != label) continue;
      if (!any) {
        out += "g " + face_label_name(label) + "\n";
        any = true;
      }
      out += 'f';
      for (int i : mf.verts) {
        out += ' ' + std::to_string(i + 1);
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace dpm
