#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lsl/identities.hpp"
#include "lsl/instance.hpp"

namespace lsl {

// Support multidegrees with sections whose canonical-path pushes form a basis
// of V at every multidegree.
struct SimpleCertificate {
  std::vector<Multidegree> support;
  std::vector<std::vector<Vector>> sections;  // parallel to support

  std::size_t total_sections() const;
  friend bool operator==(const SimpleCertificate&, const SimpleCertificate&) = default;
};

// beta^q at every multidegree (grid order) with W^q = span(beta^q) and
// V = W^q + V^{X_q,0} direct.
struct ComplementSystem {
  int q = 1;
  std::vector<std::vector<Vector>> beta;
  std::vector<Subspace> W;
};

struct DistributivityRequired : std::runtime_error {
  DistributivityRequired(const Multidegree& m)
      : std::runtime_error("distributivity fails at " + to_string(m)), at(m) {}
  Multidegree at;
};

struct ExactnessRequired : std::runtime_error {
  ExactnessRequired(const Edge& e) : std::runtime_error("exactness fails on " + to_string(e)), edge(e) {}
  Edge edge;
};

// Order in which beta^q is built.
std::vector<Multidegree> sweep_order(int q, int d);
// Neighbours whose bases are pushed into beta^q at m before extending.
std::vector<Multidegree> seed_neighbors(int q, const Multidegree& m);

// Throws ExactnessRequired or DistributivityRequired on the first failure in
// grid order. With a certificate, its pushed sections are offered first when
// extending a seed.
ComplementSystem build_complement_system(const Instance& inst, int q,
                                         const SimpleCertificate* preferred = nullptr);

// Complement property at every multidegree and the three growth relations.
std::vector<IdentityResult> check_complement_system(const Instance& inst, const ComplementSystem& sys);

// The six triple-sum decompositions in terms of pushed complements.
std::vector<IdentityResult> structure_identities(const Instance& inst, const std::array<ComplementSystem, 3>& sys);

// M^q_m minus m equals the union of M^q over the seed neighbours of m.
std::vector<IdentityResult> region_recurrences(int d);

// Support {codim > 0}, sections complementing the triple vanishing sum, RREF
// per support multidegree. No hypotheses are checked.
SimpleCertificate candidate_certificate(const Instance& inst);

// candidate_certificate after checking exactness and distributivity.
SimpleCertificate extract_certificate(const Instance& inst);

struct CertificateVerdict {
  bool ok = false;
  std::optional<Multidegree> first_failure;
  std::string reason;
};

CertificateVerdict verify_certificate(const Instance& inst, const SimpleCertificate& cert);

struct Simple {
  SimpleCertificate certificate;
};
struct NotExact {
  Edge edge;
};
struct NotDistributive {
  Multidegree at;
};
using Simplicity = std::variant<Simple, NotExact, NotDistributive>;

Simplicity is_simple(const Instance& inst);

// beta^q_m = pushes of the certificate sections supported in M^q_m.
std::array<ComplementSystem, 3> certificate_bases(const Instance& inst, const SimpleCertificate& cert);

}  // namespace lsl
