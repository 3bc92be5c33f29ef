#pragma once

#include <string>
#include <vector>

#include "lsl/instance.hpp"

namespace lsl {

struct LawViolation {
  std::string law;
  std::string where;
  std::vector<Vector> witness;
};

struct LawReport {
  std::vector<LawViolation> violations;
  std::size_t edges_checked = 0;
  std::size_t squares_checked = 0;

  bool ok() const { return violations.empty(); }
};

// Checks on ambient data: shapes, zero round trips, commuting squares,
// kernels and images of the twist maps, and preservation of vanishing on the
// other components under toward maps.
LawReport check_sheaf_laws(const Skeleton& s);

}  // namespace lsl
