#include "lsl/series.hpp"

#include "lsl/parallel.hpp"

namespace lsl {

namespace {

Vector first_outside(const Subspace& a, const Subspace& b) {
  for (const auto& v : a.vectors())
    if (!b.contains(v)) return v;
  return {};
}

bool shape_ok(const Instance& inst, std::size_t k) {
  return k < inst.V.size() && inst.V[k].ambient_dim() == inst.skeleton.ambient_dim[k];
}

}  // namespace

ValidationReport validate(const Instance& inst) {
  ValidationReport rep;
  const Skeleton& s = inst.skeleton;
  const auto want = static_cast<std::size_t>(inst.r + 1);
  if (inst.r < 0) {
    rep.dims_ok = false;
    rep.violations.push_back({"dimension", "r = " + std::to_string(inst.r) + " is negative", std::nullopt, std::nullopt, {}});
  }
  for (std::size_t k = 0; k < s.grid.size(); ++k) {
    const Multidegree& m = s.grid[k];
    if (!shape_ok(inst, k)) {
      rep.dims_ok = false;
      rep.violations.push_back({"dimension", "V at " + to_string(m) + " has the wrong ambient dimension", m, std::nullopt, {}});
    } else if (inst.V[k].dim() != want) {
      rep.dims_ok = false;
      rep.violations.push_back({"dimension",
                                "V at " + to_string(m) + " has dimension " + std::to_string(inst.V[k].dim()) +
                                    ", expected " + std::to_string(want),
                                m, std::nullopt, {}});
    }
  }

  const LawReport laws = check_sheaf_laws(s);
  for (const auto& v : laws.violations) {
    rep.laws_ok = false;
    rep.violations.push_back({"laws", v.law + " at " + v.where, std::nullopt, std::nullopt,
                              v.witness.empty() ? Vector{} : v.witness.front()});
  }
  if (!rep.laws_ok) return rep;

  for (const Edge& e : s.edges()) {
    const std::size_t a = s.index(e.from);
    const std::size_t b = s.index(e.to);
    if (!shape_ok(inst, a) || !shape_ok(inst, b)) continue;
    const Matrix& m = s.map(e);
    for (const auto& v : inst.V[a].vectors()) {
      if (inst.V[b].contains(v * m)) continue;
      rep.linking_ok = false;
      rep.violations.push_back({"linking", "image of V under " + to_string(e) + " leaves V", e.from, e, v});
      break;
    }
  }
  return rep;
}

Subspace vanishing_in_V(const Instance& inst, const Multidegree& m, unsigned mask) {
  return intersect(inst.v(m), inst.skeleton.ambient_vanishing(m, mask));
}

std::optional<Edge> ExactnessReport::first_failure() const {
  for (const auto& e : edges)
    if (!e.exact) return e.edge;
  return std::nullopt;
}

std::vector<Edge> ExactnessReport::failures() const {
  std::vector<Edge> out;
  for (const auto& e : edges)
    if (!e.exact) out.push_back(e.edge);
  return out;
}

ExactnessReport exactness(const Instance& inst) {
  const Skeleton& s = inst.skeleton;
  const std::vector<Edge> edges = s.edges();
  ExactnessReport rep;
  rep.edges = parallel_map(edges.size(), [&](std::size_t k) {
    const Edge& e = edges[k];
    const int q = component(e.dir);
    EdgeExactness out;
    out.edge = e;
    out.image = apply(inst.v(e.from), s.map(e));
    out.constraint = vanishing_in_V(inst, e.to, is_toward(e.dir) ? component_bit(q) : complement_of(q));
    out.exact = out.image == out.constraint;
    if (!out.exact) {
      out.witness = first_outside(out.constraint, out.image);
      if (out.witness.empty()) out.witness = first_outside(out.image, out.constraint);
    }
    return out;
  });
  for (const auto& e : rep.edges) rep.exact = rep.exact && e.exact;
  return rep;
}

LocalSums local_sums(const Instance& inst, const Multidegree& m) {
  LocalSums s;
  for (int q = 1; q <= 3; ++q) s.van[static_cast<std::size_t>(q - 1)] = vanishing_in_V(inst, m, component_bit(q));
  s.s12 = sum(s.van[0], s.van[1]);
  s.s13 = sum(s.van[0], s.van[2]);
  s.s23 = sum(s.van[1], s.van[2]);
  s.s123 = sum(s.s12, s.van[2]);
  s.i12 = intersect(s.van[0], s.van[1]);
  s.i13 = intersect(s.van[0], s.van[2]);
  s.i23 = intersect(s.van[1], s.van[2]);
  return s;
}

DistributivityCheck distributivity_of(const LocalSums& s) {
  DistributivityCheck c;
  c.variants[0] = intersect(s.van[0], s.s23) == sum(s.i12, s.i13);
  c.variants[1] = intersect(s.van[1], s.s13) == sum(s.i12, s.i23);
  c.variants[2] = intersect(s.van[2], s.s12) == sum(s.i13, s.i23);
  c.holds = c.variants[0];
  return c;
}

DistributivityCheck distributive_at(const Instance& inst, const Multidegree& m) {
  return distributivity_of(local_sums(inst, m));
}

GridReport codim_report(const Instance& inst) { return codim_report(inst, exactness(inst)); }

GridReport codim_report(const Instance& inst, const ExactnessReport& ex) {
  GridReport rep;
  rep.d = inst.d();
  rep.r = inst.r;
  rep.cells = parallel_map(inst.grid().size(), [&](std::size_t k) {
    const Multidegree& m = inst.grid()[k];
    const LocalSums s = local_sums(inst, m);
    const DistributivityCheck dc = distributivity_of(s);
    GridCell c;
    c.md = m;
    c.dim_x1 = s.van[0].dim();
    c.dim_x2 = s.van[1].dim();
    c.dim_x3 = s.van[2].dim();
    c.dim_x12 = s.s12.dim();
    c.dim_x13 = s.s13.dim();
    c.dim_x23 = s.s23.dim();
    c.dim_x123 = s.s123.dim();
    c.codim = static_cast<long>(inst.r + 1) - static_cast<long>(c.dim_x123);
    c.distributive = dc.holds;
    c.symmetric = dc.symmetric();
    return c;
  });
  rep.all_distributive = true;
  for (const auto& c : rep.cells) {
    rep.codim_sum += c.codim;
    rep.all_distributive = rep.all_distributive && c.distributive;
    rep.distributivity_symmetric = rep.distributivity_symmetric && c.symmetric;
  }
  rep.exact = ex.exact;
  if (rep.exact) {
    rep.inequality_holds = rep.codim_sum >= inst.r + 1;
    rep.equivalence_holds = (rep.codim_sum == inst.r + 1) == rep.all_distributive;
  }
  return rep;
}

}  // namespace lsl
