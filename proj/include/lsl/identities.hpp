#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsl/instance.hpp"

namespace lsl {

enum class Outcome { Pass, Fail, HypothesisNotMet };
std::string to_string(Outcome o);

struct IdentityResult {
  std::string name;
  Multidegree at;
  std::optional<Multidegree> partner;
  Outcome outcome = Outcome::Pass;
  long lhs = 0;
  long rhs = 0;
  std::string detail;
};

// Every conditional dimension identity at every applicable multidegree, in
// grid order. Identities whose exactness hypothesis fails on the relevant
// edge are reported as HypothesisNotMet.
std::vector<IdentityResult> identity_suite(const Instance& inst);

bool all_pass(const std::vector<IdentityResult>& results);  // no Fail entries

}  // namespace lsl
