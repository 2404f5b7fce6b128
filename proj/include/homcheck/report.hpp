#pragma once

#include <string>
#include <vector>

#include "homcheck/linalg.hpp"

namespace homcheck {

/// One failed identity instance. `where` holds basis indices (0-based
/// internally; rendered 1-based as e1, e2, ...), `discrepancy` the exact
/// LHS - RHS with the sides exactly as displayed in the defining identity.
struct Violation {
  std::string identity;
  std::vector<int> where;
  Vector discrepancy;

  std::string str() const;  // "Eq. (16) violated at (e2,e1,e1): ..."
};

class CheckReport {
 public:
  bool passed() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  const Violation& first() const { return violations_.front(); }

  void append(std::vector<Violation>&& vs);
  void append(CheckReport&& other);
  void truncate_to_first();

  std::string str() const;

 private:
  std::vector<Violation> violations_;
};

/// How a checker reports: `all` keeps every violation, otherwise just the
/// first one (identity order, then lexicographic basis tuple). `force`
/// skips the kind-tag guard.
struct CheckOptions {
  bool force = false;
  bool all = false;
};

}  // namespace homcheck
