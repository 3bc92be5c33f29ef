#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsl/instance.hpp"
#include "lsl/simple_basis.hpp"

namespace lsl {

enum class Strategy { FromSections, ExactSearch, Degrade };
std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

struct GenSpec {
  int d = 1;
  int r = 0;
  Strategy strategy = Strategy::FromSections;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10000;
  int entry_bound = 9;  // random entries are integers in [-entry_bound, entry_bound]
};

// Throws std::invalid_argument unless 0 <= r <= d, budget > 0, entry_bound > 0.
void check_spec(const GenSpec& spec);

// mt19937_64 with a portable bounded-integer draw, so seeds reproduce across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Vector vector(std::size_t n, int bound);

 private:
  std::mt19937_64 engine_;
};

struct BudgetExhausted : std::runtime_error {
  BudgetExhausted(const std::string& what, std::uint64_t n) : std::runtime_error(what), attempts(n) {}
  std::uint64_t attempts;
};

struct GeneratedSimple {
  Instance instance;
  SimpleCertificate certificate;
  std::uint64_t draws = 0;
};

// Random support and sections; V is the span of their pushes. Retries until
// every V has dimension r + 1; throws BudgetExhausted after spec.budget draws.
GeneratedSimple gen_simple(const GenSpec& spec);

// V spanned by pushes of the given sections; nothing is retried.
Instance instance_from_sections(const Skeleton& s, int r, const SimpleCertificate& sections);

struct SearchResult {
  std::optional<Instance> instance;
  bool distributive_everywhere = false;
  std::uint64_t expansions = 0;
  std::uint64_t backtracks = 0;
};

inline constexpr int kSearchCandidates = 8;

// Depth-first search in grid order for an exact series on the chain backend.
SearchResult gen_exact_search(const GenSpec& spec);

enum class DegradeMode { BreakLinking, BreakExactness, ShrinkV };
std::string to_string(DegradeMode m);
DegradeMode parse_degrade_mode(const std::string& s);

struct DegradeUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Degraded {
  Instance instance;
  std::string note;
  std::optional<Multidegree> at;
  std::vector<Edge> edges;  // edges the defect is expected to show up on
};

// One V replaced so that the instance fails the named check. Throws
// DegradeUnavailable when no replacement exists (e.g. V is the whole space).
Degraded degrade(const Instance& inst, DegradeMode mode, std::uint64_t seed = 0);

}  // namespace lsl
