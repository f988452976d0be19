#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace triplex {

// One verdict.  `anchor` names the identity being tested, `witness` carries a
// counterexample (or a short summary when the check passes).
struct CheckRecord {
  std::string id;
  std::string anchor;
  std::string params;
  bool pass = true;
  std::string witness;
};

using CheckList = std::vector<CheckRecord>;

inline bool all_pass(const CheckList& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.pass; });
}

}  // namespace triplex
