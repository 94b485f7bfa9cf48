#pragma once

// Shared JSON / markdown helpers for the report writers. Not installed.

#include <string>

#include "json.hpp"
#include "ringlab/predicates.hpp"

namespace ringlab::detail {

using ojson = nlohmann::ordered_json;

inline ojson verdict_json(const Verdict& v) {
  ojson j;
  j["verdict"] = v.value;
  if (!v.witness.empty()) {
    j["witness"] = v.witness;
    j["roles"] = v.roles;
  }
  j["method"] = v.method;
  return j;
}

inline std::string witness_text(const Verdict& v) {
  std::string out;
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i) out += ", ";
    out += (i < v.roles.size() ? v.roles[i] : "?") + "=" + std::to_string(v.witness[i]);
  }
  return out;
}

/// Pipes would break a markdown table cell.
inline std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

}  // namespace ringlab::detail
