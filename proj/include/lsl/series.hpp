#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lsl/instance.hpp"
#include "lsl/sheaf_laws.hpp"

namespace lsl {

struct Violation {
  std::string kind;  // "dimension", "linking" or "laws"
  std::string where;
  std::optional<Multidegree> at;
  std::optional<Edge> edge;
  Vector witness;
};

struct ValidationReport {
  bool dims_ok = true;
  bool linking_ok = true;
  bool laws_ok = true;
  std::vector<Violation> violations;

  bool ok() const { return dims_ok && linking_ok && laws_ok; }
};

ValidationReport validate(const Instance& inst);

// V_d intersected with the sections vanishing on every component in mask.
Subspace vanishing_in_V(const Instance& inst, const Multidegree& m, unsigned mask);

struct EdgeExactness {
  Edge edge;
  Subspace image;
  Subspace constraint;
  bool exact = false;
  Vector witness;  // empty when exact
};

struct ExactnessReport {
  std::vector<EdgeExactness> edges;
  bool exact = true;

  std::optional<Edge> first_failure() const;
  std::vector<Edge> failures() const;
};

// Toward edges must hit V^{X_q,0} of the target, from edges V^{X_q^c,0}.
ExactnessReport exactness(const Instance& inst);

// The vanishing subspaces of V at one multidegree and their sums.
struct LocalSums {
  std::array<Subspace, 3> van;  // V^{X1,0}, V^{X2,0}, V^{X3,0}
  Subspace s12, s13, s23, s123;
  // Pairwise intersections: vanishing on X3^c, X2^c and X1^c respectively.
  Subspace i12, i13, i23;
};

LocalSums local_sums(const Instance& inst, const Multidegree& m);

struct DistributivityCheck {
  bool holds = false;
  // Each component's vanishing subspace distributing over the other two.
  std::array<bool, 3> variants{};
  bool symmetric() const { return variants[0] == variants[1] && variants[1] == variants[2]; }
};

DistributivityCheck distributive_at(const Instance& inst, const Multidegree& m);
DistributivityCheck distributivity_of(const LocalSums& s);

struct GridCell {
  Multidegree md;
  std::size_t dim_x1 = 0, dim_x2 = 0, dim_x3 = 0;
  std::size_t dim_x12 = 0, dim_x13 = 0, dim_x23 = 0, dim_x123 = 0;
  long codim = 0;
  bool distributive = false;
  bool symmetric = true;
};

struct GridReport {
  int d = 0;
  int r = 0;
  std::vector<GridCell> cells;
  long codim_sum = 0;
  bool exact = false;
  bool all_distributive = false;
  bool distributivity_symmetric = true;
  std::optional<bool> simple;
  // Set only for exact instances.
  std::optional<bool> inequality_holds;   // codim_sum >= r+1
  std::optional<bool> equivalence_holds;  // codim_sum == r+1 iff all_distributive
};

GridReport codim_report(const Instance& inst);
GridReport codim_report(const Instance& inst, const ExactnessReport& ex);

}  // namespace lsl
