#include "leastgrad/report.hpp"

#include <cmath>
#include <json.hpp>

namespace lg {

namespace {

using Json = nlohmann::ordered_json;

Json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double parse_number(const Json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  return NAN;
}

Json values(const NamedValues& v) {
  Json out = Json::object();
  for (const auto& [k, x] : v) out[k] = number(x);
  return out;
}

NamedValues read_values(const Json& j) {
  NamedValues out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), parse_number(it.value()));
  return out;
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool VerificationReport::self_validate(std::string* problem) const {
  for (const auto& c : checks) {
    if (c.name.empty() || c.anchor.empty()) {
      if (problem) *problem = "check '" + c.name + "' has no anchor";
      return false;
    }
  }
  return true;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string VerificationReport::to_json() const {
  Json root = Json::object();
  root["passed"] = all_pass();
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json j = Json::object();
    j["name"] = c.name;
    j["anchor"] = c.anchor;
    j["pass"] = c.pass;
    j["margin"] = number(c.margin);
    j["measured"] = values(c.measured);
    j["bounds"] = values(c.bounds);
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(std::move(j));
  }
  root["checks"] = std::move(arr);
  return root.dump(2) + "\n";
}

VerificationReport VerificationReport::from_json(const std::string& text) {
  const Json root = Json::parse(text);
  VerificationReport rep;
  for (const auto& j : root.at("checks")) {
    CheckResult c;
    c.name = j.value("name", "");
    c.anchor = j.value("anchor", "");
    c.pass = j.value("pass", false);
    c.margin = j.contains("margin") ? parse_number(j["margin"]) : 0.0;
    if (j.contains("measured")) c.measured = read_values(j["measured"]);
    if (j.contains("bounds")) c.bounds = read_values(j["bounds"]);
    c.note = j.value("note", "");
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace lg
