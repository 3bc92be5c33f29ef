#include "lsl/generator.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "lsl/chain_model.hpp"
#include "lsl/series.hpp"

namespace lsl {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::FromSections:
      return "from-sections";
    case Strategy::ExactSearch:
      return "exact-search";
    case Strategy::Degrade:
      return "degrade";
  }
  return "?";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "from-sections") return Strategy::FromSections;
  if (s == "exact-search") return Strategy::ExactSearch;
  if (s == "degrade") return Strategy::Degrade;
  throw std::invalid_argument("unknown strategy \"" + s + "\"");
}

std::string to_string(DegradeMode m) {
  switch (m) {
    case DegradeMode::BreakLinking:
      return "break-linking";
    case DegradeMode::BreakExactness:
      return "break-exactness";
    case DegradeMode::ShrinkV:
      return "shrink-V";
  }
  return "?";
}

DegradeMode parse_degrade_mode(const std::string& s) {
  if (s == "break-linking") return DegradeMode::BreakLinking;
  if (s == "break-exactness") return DegradeMode::BreakExactness;
  if (s == "shrink-V") return DegradeMode::ShrinkV;
  throw std::invalid_argument("unknown degrade mode \"" + s + "\"");
}

void check_spec(const GenSpec& spec) {
  if (spec.d < 0) throw std::invalid_argument("d must be nonnegative");
  if (spec.r < 0) throw std::invalid_argument("r must be nonnegative");
  if (spec.r > spec.d)
    throw std::invalid_argument("r + 1 = " + std::to_string(spec.r + 1) + " exceeds the section space dimension d + 1 = " +
                                std::to_string(spec.d + 1));
  if (spec.budget == 0) throw std::invalid_argument("budget must be positive");
  if (spec.entry_bound <= 0) throw std::invalid_argument("entry bound must be positive");
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<std::int64_t>(x % range);
}

Vector Rng::vector(std::size_t n, int bound) {
  Vector v(n);
  for (auto& x : v) x = static_cast<long>(uniform(-bound, bound));
  return v;
}

namespace {

std::vector<std::pair<std::string, std::string>> provenance(const GenSpec& spec) {
  return {{"generator", "lsl"},
          {"strategy", to_string(spec.strategy)},
          {"seed", std::to_string(spec.seed)},
          {"d", std::to_string(spec.d)},
          {"r", std::to_string(spec.r)},
          {"entry_bound", std::to_string(spec.entry_bound)}};
}

// Random member of s: a generic combination, or (sparse) one or two basis rows.
Vector random_member(Rng& rng, const Subspace& s, int bound, bool sparse) {
  Vector coeff(s.dim());
  if (sparse) {
    coeff[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(s.dim()) - 1))] = 1;
    if (s.dim() > 1 && rng.uniform(0, 1) == 1)
      coeff[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(s.dim()) - 1))] +=
          static_cast<long>(rng.uniform(-bound, bound));
  } else {
    for (auto& c : coeff) c = static_cast<long>(rng.uniform(-bound, bound));
  }
  return coeff * s.basis();
}

// lower plus random members of upper until the dimension reaches target.
std::optional<Subspace> fill(Rng& rng, const Subspace& lower, const Subspace& upper, std::size_t target, int bound,
                             bool sparse) {
  if (upper.dim() < target || lower.dim() > target || !upper.contains(lower)) return std::nullopt;
  Subspace out = lower;
  for (int tries = 0; out.dim() < target && tries < 64; ++tries) {
    const Vector v = random_member(rng, upper, bound, sparse);
    if (!out.contains(v)) out = sum(out, Subspace::span(out.ambient_dim(), {v}));
  }
  if (out.dim() != target) return std::nullopt;
  return out;
}

// lower plus one section vanishing on each component in turn (random order),
// completed generically; favours special position of the vanishing subspaces.
std::optional<Subspace> fill_vanishing(Rng& rng, const Skeleton& s, const Multidegree& m, const Subspace& lower,
                                       const Subspace& upper, std::size_t target, int bound) {
  if (upper.dim() < target || lower.dim() > target || !upper.contains(lower)) return std::nullopt;
  std::array<int, 3> order{1, 2, 3};
  std::swap(order[0], order[static_cast<std::size_t>(rng.uniform(0, 2))]);
  std::swap(order[1], order[static_cast<std::size_t>(rng.uniform(1, 2))]);
  Subspace out = lower;
  for (int q : order) {
    if (out.dim() >= target) break;
    const Subspace part = intersect(upper, s.ambient_vanishing(m, component_bit(q)));
    if (part.dim() == 0) continue;
    const Vector v = random_member(rng, part, bound, false);
    if (!out.contains(v)) out = sum(out, Subspace::span(out.ambient_dim(), {v}));
  }
  return fill(rng, out, upper, target, bound, false);
}

// V at m spanned by a, b and generic fill, where a, b and a+b vanish on X1,
// X2 and X3 respectively: three lines in one plane, so V is not distributive
// at m.
std::optional<Subspace> three_lines(Rng& rng, const Skeleton& s, const Multidegree& m, std::size_t target, int bound) {
  if (target < 2) return std::nullopt;
  const std::size_t n = s.dim(m);
  const Subspace x1 = s.ambient_vanishing(m, component_bit(1));
  const Subspace x2 = s.ambient_vanishing(m, component_bit(2));
  const Subspace x3 = s.ambient_vanishing(m, component_bit(3));
  const Subspace pool = intersect(x1, sum(x2, x3));
  if (pool.dim() == 0) return std::nullopt;
  for (int tries = 0; tries < 16; ++tries) {
    const Vector a = random_member(rng, pool, bound, false);
    if (is_zero(a)) continue;
    // Relations x.B2 + y.B3 + z.a = 0 with z != 0 split a as -(x.B2 + y.B3)/z.
    std::vector<Vector> rows = x2.vectors();
    const std::size_t k2 = rows.size();
    for (const auto& v : x3.vectors()) rows.push_back(v);
    rows.push_back(a);
    const Subspace rel = kernel(Matrix::from_rows(rows, n));
    const auto relations = rel.vectors();
    const auto it = std::find_if(relations.begin(), relations.end(), [&](const Vector& v) { return v.back() != 0; });
    if (it == relations.end()) continue;
    Vector b(n);
    for (std::size_t k = 0; k < k2; ++k)
      for (std::size_t c = 0; c < n; ++c) b[c] += (*it)[k] * rows[k][c] / it->back();
    const Subspace shift = intersect(x2, x3);
    if (shift.dim() > 0) {
      const Vector z = random_member(rng, shift, bound, false);
      for (std::size_t c = 0; c < n; ++c) b[c] += z[c];
    }
    Subspace out = Subspace::span(n, {a, b});
    if (out.dim() != 2) continue;
    auto filled = fill(rng, out, Subspace::full(n), target, bound, false);
    if (filled && !distributes(intersect(*filled, x1), intersect(*filled, x2), intersect(*filled, x3))) return filled;
  }
  return std::nullopt;
}

Subspace edge_constraint(const Skeleton& s, const Subspace& v_to, Direction dir, const Multidegree& to) {
  const int q = component(dir);
  return intersect(v_to, s.ambient_vanishing(to, is_toward(dir) ? component_bit(q) : complement_of(q)));
}

// Sum of the images flowing into m from assigned neighbours.
Subspace incoming(const Skeleton& s, const std::vector<Subspace>& V, const std::vector<bool>& set,
                  const Multidegree& m) {
  Subspace out = Subspace::zero(s.dim(m));
  for (Direction dir : kDirections) {
    const auto n = neighbor(m, dir);
    if (!n || !set[s.index(*n)]) continue;
    out = sum(out, apply(V[s.index(*n)], s.map(*n, reverse(dir))));
  }
  return out;
}

}  // namespace

Instance instance_from_sections(const Skeleton& s, int r, const SimpleCertificate& cert) {
  Instance inst;
  inst.skeleton = s;
  inst.r = r;
  for (const auto& m : s.grid) {
    std::vector<Vector> pushes;
    for (std::size_t a = 0; a < cert.support.size(); ++a)
      for (const auto& sec : cert.sections[a]) pushes.push_back(s.push(cert.support[a], m, sec));
    inst.V.push_back(Subspace::span(s.dim(m), pushes));
  }
  return inst;
}

GeneratedSimple gen_simple(const GenSpec& spec) {
  check_spec(spec);
  if (spec.strategy != Strategy::FromSections) throw std::invalid_argument("gen_simple needs strategy from-sections");
  const Skeleton s = chain_skeleton(ChainCurve{spec.d});
  const auto n = static_cast<std::int64_t>(s.grid.size());
  Rng rng(spec.seed);
  for (std::uint64_t draw = 1; draw <= spec.budget; ++draw) {
    std::vector<int> counts(s.grid.size(), 0);
    for (int k = 0; k <= spec.r; ++k) ++counts[static_cast<std::size_t>(rng.uniform(0, n - 1))];
    SimpleCertificate cert;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] == 0) continue;
      cert.support.push_back(s.grid[k]);
      std::vector<Vector> secs;
      for (int z = 0; z < counts[k]; ++z) secs.push_back(rng.vector(s.ambient_dim[k], spec.entry_bound));
      cert.sections.push_back(std::move(secs));
    }
    Instance inst = instance_from_sections(s, spec.r, cert);
    const bool full = std::all_of(inst.V.begin(), inst.V.end(),
                                  [&](const Subspace& v) { return v.dim() == static_cast<std::size_t>(spec.r + 1); });
    if (!full) continue;
    for (std::size_t a = 0; a < cert.support.size(); ++a)
      cert.sections[a] = Subspace::span(s.dim(cert.support[a]), cert.sections[a]).vectors();
    inst.provenance = provenance(spec);
    inst.provenance.emplace_back("draws", std::to_string(draw));
    return {std::move(inst), std::move(cert), draw};
  }
  throw BudgetExhausted("no admissible draw within " + std::to_string(spec.budget) + " attempts", spec.budget);
}

namespace {

class Search {
 public:
  Search(const GenSpec& spec, Skeleton s)
      : spec_(spec), s_(std::move(s)), rng_(spec.seed), V_(s_.grid.size()), set_(s_.grid.size(), false) {
    for (std::size_t k = 0; k < s_.grid.size(); ++k) order_.push_back(k);
  }

  SearchResult run() {
    SearchResult out;
    if (rng_.uniform(0, 1) == 1) plant();
    const bool found = dfs(0);
    out.expansions = expansions_;
    out.backtracks = backtracks_;
    if (!found) return out;
    Instance inst;
    inst.skeleton = s_;
    inst.r = spec_.r;
    inst.V = V_;
    inst.provenance = provenance(spec_);
    inst.provenance.emplace_back("expansions", std::to_string(expansions_));
    if (planted_) inst.provenance.emplace_back("planted", to_string(s_.grid[order_.front()]));
    out.distributive_everywhere = std::all_of(inst.grid().begin(), inst.grid().end(),
                                              [&](const Multidegree& m) { return distributive_at(inst, m).holds; });
    inst.provenance.emplace_back("distributive_everywhere", out.distributive_everywhere ? "true" : "false");
    out.instance = std::move(inst);
    return out;
  }

 private:
  // Seeds the search with a non-distributive V at a random interior node and
  // visits the remaining nodes outward from it.
  void plant() {
    std::vector<std::size_t> interior;
    for (std::size_t k = 0; k < s_.grid.size(); ++k) {
      const auto& m = s_.grid[k];
      if (m.i >= 1 && m.l >= 1 && m.j >= 2) interior.push_back(k);
    }
    if (interior.empty()) return;
    const std::size_t start = interior[static_cast<std::size_t>(rng_.uniform(0, static_cast<std::int64_t>(interior.size()) - 1))];
    planted_ = three_lines(rng_, s_, s_.grid[start], static_cast<std::size_t>(spec_.r + 1), spec_.entry_bound);
    if (!planted_) return;
    std::vector<bool> seen(s_.grid.size(), false);
    order_ = {start};
    seen[start] = true;
    for (std::size_t head = 0; head < order_.size(); ++head)
      for (Direction dir : kDirections) {
        const auto n = neighbor(s_.grid[order_[head]], dir);
        if (!n || seen[s_.index(*n)]) continue;
        seen[s_.index(*n)] = true;
        order_.push_back(s_.index(*n));
      }
  }

  bool dfs(std::size_t pos) {
    if (pos == order_.size()) return true;
    const std::size_t k = order_[pos];
    const Multidegree& m = s_.grid[k];
    const auto target = static_cast<std::size_t>(spec_.r + 1);
    const Subspace lower = incoming(s_, V_, set_, m);
    Subspace upper = Subspace::full(s_.dim(m));
    for (Direction dir : kDirections) {
      const auto n = neighbor(m, dir);
      if (!n || !set_[s_.index(*n)]) continue;
      upper = intersect(upper, preimage(s_.map(m, dir), edge_constraint(s_, V_[s_.index(*n)], dir, *n)));
    }
    std::vector<Subspace> candidates;
    if (pos == 0 && planted_) candidates.push_back(*planted_);
    for (int attempt = 0; !(pos == 0 && planted_) && attempt < 3 * kSearchCandidates && candidates.size() < kSearchCandidates;
         ++attempt) {
      const auto flavour = rng_.uniform(0, 2);
      auto c = flavour == 2 ? fill_vanishing(rng_, s_, m, lower, upper, target, spec_.entry_bound)
                            : fill(rng_, lower, upper, target, spec_.entry_bound, flavour == 1);
      if (!c) break;
      if (std::find(candidates.begin(), candidates.end(), *c) == candidates.end()) candidates.push_back(*c);
      if (lower.dim() == target) break;
    }
    for (const auto& c : candidates) {
      if (++expansions_ > spec_.budget) return false;
      if (!locally_exact(m, c)) continue;
      V_[k] = c;
      set_[k] = true;
      if (dfs(pos + 1)) return true;
      set_[k] = false;
      if (expansions_ > spec_.budget) return false;
    }
    ++backtracks_;
    return false;
  }

  bool locally_exact(const Multidegree& m, const Subspace& c) const {
    for (Direction dir : kDirections) {
      const auto n = neighbor(m, dir);
      if (!n || !set_[s_.index(*n)]) continue;
      const Subspace& vn = V_[s_.index(*n)];
      if (apply(c, s_.map(m, dir)) != edge_constraint(s_, vn, dir, *n)) return false;
      if (apply(vn, s_.map(*n, reverse(dir))) != edge_constraint(s_, c, reverse(dir), m)) return false;
    }
    return true;
  }

  const GenSpec& spec_;
  Skeleton s_;
  Rng rng_;
  std::vector<Subspace> V_;
  std::vector<bool> set_;
  std::vector<std::size_t> order_;
  std::optional<Subspace> planted_;
  std::uint64_t expansions_ = 0;
  std::uint64_t backtracks_ = 0;
};

Degraded break_linking(const Instance& inst) {
  const Skeleton& s = inst.skeleton;
  for (const Edge& e : s.edges()) {
    const Subspace& target = inst.v(e.to);
    if (s.dim(e.to) <= target.dim()) continue;
    const Subspace img = apply(inst.v(e.from), s.map(e));
    if (img.dim() == 0) continue;
    const Vector w = img.basis().row(0);
    std::vector<Vector> keep = complement_in(Subspace::span(s.dim(e.to), {w}), target);
    for (std::size_t k = 0; k < s.dim(e.to); ++k) {
      Vector z(s.dim(e.to));
      z[k] = 1;
      if (target.contains(z)) continue;
      keep.push_back(z);
      break;
    }
    Degraded out{inst, "V at " + to_string(e.to) + " no longer contains the image along " + to_string(e), e.to, {e}};
    out.instance.V[s.index(e.to)] = Subspace::span(s.dim(e.to), keep);
    return out;
  }
  throw DegradeUnavailable("every V is the whole section space; linking cannot be broken");
}

Degraded shrink(const Instance& inst) {
  const Skeleton& s = inst.skeleton;
  const std::vector<bool> all(s.grid.size(), true);
  std::optional<Multidegree> chosen;
  Subspace replacement;
  for (const auto& m : s.grid) {
    const Subspace& v = inst.v(m);
    if (v.dim() == 0) continue;
    const Subspace low = incoming(s, inst.V, all, m);
    if (low.dim() < v.dim()) {
      std::vector<Vector> rows = low.vectors();
      const auto extra = complement_in(low, v);
      rows.insert(rows.end(), extra.begin(), extra.end() - 1);
      chosen = m;
      replacement = Subspace::span(s.dim(m), rows);
      break;
    }
  }
  if (!chosen) {
    // Every V is forced by its neighbours; drop a row at the first one.
    for (const auto& m : s.grid)
      if (inst.v(m).dim() > 0) {
        auto rows = inst.v(m).vectors();
        rows.pop_back();
        chosen = m;
        replacement = Subspace::span(s.dim(m), rows);
        break;
      }
  }
  if (!chosen) throw DegradeUnavailable("every V is already zero");
  Degraded out{inst, "V at " + to_string(*chosen) + " shrunk to dimension " + std::to_string(replacement.dim()), chosen, {}};
  out.instance.V[s.index(*chosen)] = replacement;
  return out;
}

// Resamples V on nodes (in order) within the linking bounds set by the other
// nodes and the ones already resampled.
std::optional<Instance> resample(const Instance& inst, const std::vector<Multidegree>& nodes, Rng& rng, bool sparse) {
  const Skeleton& s = inst.skeleton;
  Instance trial = inst;
  std::vector<bool> set(s.grid.size(), true);
  for (const auto& m : nodes) set[s.index(m)] = false;
  for (const auto& m : nodes) {
    const Subspace low = incoming(s, trial.V, set, m);
    Subspace high = Subspace::full(s.dim(m));
    for (Direction dir : kDirections) {
      const auto n = neighbor(m, dir);
      if (n && set[s.index(*n)]) high = intersect(high, preimage(s.map(m, dir), trial.v(*n)));
    }
    auto c = fill(rng, low, high, inst.v(m).dim(), 9, sparse);
    if (!c) return std::nullopt;
    trial.V[s.index(m)] = *c;
    set[s.index(m)] = true;
  }
  return trial;
}

Degraded break_exactness(const Instance& inst, std::uint64_t seed) {
  const Skeleton& s = inst.skeleton;
  Rng rng(seed);
  const std::size_t before = exactness(inst).failures().size();
  std::vector<std::vector<Multidegree>> groups;
  for (const auto& m : s.grid) groups.push_back({m});
  for (const auto& e : s.edges())
    if (e.from < e.to) groups.push_back({e.from, e.to});
  for (const auto& m : s.grid) {
    std::vector<Multidegree> star{m};
    for (Direction dir : kDirections)
      if (auto n = neighbor(m, dir)) star.push_back(*n);
    groups.push_back(std::move(star));
  }
  for (const auto& nodes : groups) {
    std::optional<Degraded> best;
    for (int attempt = 0; attempt < 16; ++attempt) {
      auto trial = resample(inst, nodes, rng, attempt % 2 == 1);
      if (!trial || trial->V == inst.V || !validate(*trial).linking_ok) continue;
      auto fails = exactness(*trial).failures();
      if (fails.size() <= before) continue;
      if (!best || fails.size() < best->edges.size()) {
        std::string note = "V at";
        for (const auto& m : nodes) note += " " + to_string(m);
        note += " replaced within its linking bounds; inexact on";
        for (const auto& e : fails) note += " " + to_string(e);
        best = Degraded{std::move(*trial), std::move(note), nodes.front(), std::move(fails)};
      }
    }
    if (best) return *best;
  }
  throw DegradeUnavailable("no linked replacement of one or two adjacent V changes exactness");
}

}  // namespace

SearchResult gen_exact_search(const GenSpec& spec) {
  check_spec(spec);
  if (spec.strategy != Strategy::ExactSearch) throw std::invalid_argument("gen_exact_search needs strategy exact-search");
  return Search(spec, chain_skeleton(ChainCurve{spec.d})).run();
}

Degraded degrade(const Instance& inst, DegradeMode mode, std::uint64_t seed) {
  Degraded out = [&] {
    switch (mode) {
      case DegradeMode::BreakLinking:
        return break_linking(inst);
      case DegradeMode::BreakExactness:
        return break_exactness(inst, seed);
      case DegradeMode::ShrinkV:
        return shrink(inst);
    }
    throw std::invalid_argument("unknown degrade mode");
  }();
  out.instance.provenance.emplace_back("defect", to_string(mode) + ": " + out.note);
  return out;
}

}  // namespace lsl
