#pragma once

#include <map>
#include <string>

#include "cdyn/dyn_system.hpp"

namespace cdyn {

// A validated system plus the named elements declared next to it.
struct SystemConfig {
  DynSystem system;
  std::map<std::string, Mat> elements;
};

// Strict JSON schema; unknown keys are errors.
//   {
//     "group":   {"factors": [n1, n2, ...]},
//     "dim":     d,
//     "action":  {"kind": "trivial" | "cyclic-shift" | "diagonal-characters" | "explicit",
//                 "data": ...},
//     "algebra": {"kind": "full" | "diagonal" | "explicit", "basis": [matrix, ...]},
//     "tol":     1e-9,
//     "elements": {"name": matrix, ...}
//   }
// A matrix is an array of rows, each row an array of [re, im] pairs.
// diagonal-characters data: one dual element (array of residues) per basis vector.
// explicit data: one unitary per cyclic factor generator; u_t is their product.
// Throws ConfigError on any violation, including the DynSystem validation.
SystemConfig parse_config(const std::string& text);
SystemConfig load_config(const std::string& path);

}  // namespace cdyn
