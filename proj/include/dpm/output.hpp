#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dpm/kinematics.hpp"
#include "dpm/mechanism.hpp"

namespace dpm {

// Fixed 12-significant-digit formatting shared by every emitter, with "-0"
// normalized to "0" so identical inputs always produce identical bytes.
// Throws std::invalid_argument on non-finite input.
std::string format_double(double x);

// Minimal JSON document tree.  Object keys keep insertion order so reports
// are byte-reproducible.
class JsonValue {
 public:
  JsonValue() : kind_(Kind::Null) {}

  static JsonValue object();
  static JsonValue array();
  static JsonValue str(std::string s);
  static JsonValue number(double x);
  static JsonValue integer(long long n);
  static JsonValue boolean(bool b);

  JsonValue& set(const std::string& key, JsonValue v);  // object member
  JsonValue& push(JsonValue v);                         // array element

  std::string dump(int indent = 2) const;

 private:
  enum class Kind { Null, Object, Array, String, Number, Integer, Bool };
  void write(std::string& out, int indent, int depth) const;

  Kind kind_;
  std::vector<std::pair<std::string, JsonValue>> members_;
  std::vector<JsonValue> elements_;
  std::string string_;
  double number_ = 0.0;
  long long integer_ = 0;
  bool bool_ = false;
};

std::string json_escape(const std::string& s);

// CSV field quoting: wraps fields containing commas, quotes, or newlines.
std::string csv_field(const std::string& s);

// Deployment-curve table with header "phi_deg,r,R,V".
std::string curves_csv(const std::vector<CurveSample>& samples);

// Mechanism catalog as CSV with a trailing notes column.
std::string table_csv(const std::vector<Table1Row>& rows);

// Half-dihedral entries like "35.26_(3,3)" joined with "; ".
std::string format_beta_entries(const std::vector<BetaEntry>& entries);

// ASCII OBJ with faces grouped as `g platform|limb|newface` and metadata in
// leading comment lines.
std::string mesh_obj(const ConfigurationMesh& mesh);

}  // namespace dpm
