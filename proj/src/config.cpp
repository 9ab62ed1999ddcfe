#include "cookie/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cookie/error.hpp"

namespace cookie {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where + " must be a number");
  return v.get<double>();
}

BranchSpec parse_branch(const json& j, std::size_t index) {
  const std::string where = "branches[" + std::to_string(index) + "]";
  if (!j.is_object()) fail(where + " must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "kind" && key != "interval" && key != "epsilon") fail(where + ": unknown key \"" + key + "\"");
  if (!j.contains("kind") || !j["kind"].is_string()) fail(where + ".kind must be a string");
  if (!j.contains("interval") || !j["interval"].is_array() || j["interval"].size() != 2)
    fail(where + ".interval must be a 2-element array");

  BranchSpec spec;
  spec.interval = {number(j["interval"][0], where + ".interval[0]"), number(j["interval"][1], where + ".interval[1]")};
  const auto kind = j["kind"].get<std::string>();
  if (kind == "affine") {
    if (j.contains("epsilon")) fail(where + ": affine branches take no epsilon");
    spec.kind = BranchKind::Affine;
  } else if (kind == "quadratic") {
    if (!j.contains("epsilon")) fail(where + ": quadratic branches need epsilon");
    spec.kind = BranchKind::QuadraticPerturbed;
    spec.epsilon = number(j["epsilon"], where + ".epsilon");
  } else {
    fail(where + ".kind must be \"affine\" or \"quadratic\", got \"" + kind + "\"");
  }
  return spec;
}

}  // namespace

std::vector<BranchSpec> parse_branch_specs(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "branches") fail("unknown key \"" + key + "\"");
  if (!doc.contains("branches") || !doc["branches"].is_array()) fail("\"branches\" must be an array");
  std::vector<BranchSpec> specs;
  for (std::size_t i = 0; i < doc["branches"].size(); ++i) specs.push_back(parse_branch(doc["branches"][i], i));
  return specs;
}

CookieCutterSystem parse_system(std::string_view json_text) { return validate_system(parse_branch_specs(json_text)); }

CookieCutterSystem load_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

}  // namespace cookie
