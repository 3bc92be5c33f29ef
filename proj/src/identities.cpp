#include "lsl/identities.hpp"

#include "lsl/parallel.hpp"
#include "lsl/series.hpp"

namespace lsl {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "fail";
    case Outcome::HypothesisNotMet:
      return "hypothesis-not-met";
  }
  return "?";
}

bool all_pass(const std::vector<IdentityResult>& results) {
  for (const auto& r : results)
    if (r.outcome == Outcome::Fail) return false;
  return true;
}

namespace {

long dim(const Subspace& s) { return static_cast<long>(s.dim()); }

class Suite {
 public:
  explicit Suite(const Instance& inst)
      : inst_(inst),
        s_(inst.skeleton),
        rank_(inst.r + 1),
        sums_(parallel_map(inst.grid().size(), [&](std::size_t k) { return local_sums(inst, inst.grid()[k]); })) {}

  std::vector<IdentityResult> run() {
    for (const auto& m : inst_.grid()) {
      if (auto p = diag_down(m); p && m.i > 0 && m.l > 0) edge_codim_x2(m, *p);
      if (auto p = i_down(m)) {
        const bool hyp = hits(m, Direction::TowardX1, *p, local(*p).van[0]);
        edge_codim_x1(m, *p, hyp);
        quotient_dims_x2x3(m, *p, hyp);
        distributivity_gap_x2x3(m, *p, hyp);
      }
      if (auto p = l_up(m)) {
        const bool hyp = hits(*p, Direction::TowardX3, m, local(m).van[2]);
        edge_codim_x3(m, *p, hyp);
        vertical_split(m, *p, hyp);
        vertical_growth(m, *p, hyp);
        quotient_dims_x1x2(m, *p, hyp);
        distributivity_gap_x1x2(m, *p, hyp);
      }
      boundary(m);
      anulamiento(m);
    }
    telescoping();
    return std::move(out_);
  }

 private:
  const LocalSums& local(const Multidegree& m) const { return sums_[s_.index(m)]; }

  // phi(V_from) along dir equals want.
  bool hits(const Multidegree& from, Direction dir, const Multidegree&, const Subspace& want) const {
    return apply(inst_.v(from), s_.map(from, dir)) == want;
  }

  void record(std::string name, const Multidegree& at, std::optional<Multidegree> partner, bool hyp, long lhs,
              long rhs, std::string detail = {}) {
    IdentityResult r{std::move(name), at, partner, Outcome::Pass, lhs, rhs, std::move(detail)};
    if (!hyp) r.outcome = Outcome::HypothesisNotMet;
    else if (lhs != rhs) r.outcome = Outcome::Fail;
    out_.push_back(std::move(r));
  }

  void record_flag(std::string name, const Multidegree& at, std::optional<Multidegree> partner, bool hyp, bool ok,
                   std::string detail) {
    record(std::move(name), at, partner, hyp, ok ? 1 : 0, 1, std::move(detail));
  }

  void edge_codim_x2(const Multidegree& m, const Multidegree& p) {
    const LocalSums& a = local(m);
    const LocalSums& b = local(p);
    const bool hyp = hits(p, Direction::TowardX2, m, a.van[1]);
    record("edge_codim.x2", m, p, hyp, rank_ - dim(b.s13), dim(a.van[1]) - dim(sum(a.i12, a.i23)));
  }

  void edge_codim_x1(const Multidegree& m, const Multidegree& p, bool hyp) {
    const LocalSums& a = local(m);
    const LocalSums& b = local(p);
    record("edge_codim.x1", m, p, hyp, rank_ - dim(a.s23), dim(b.van[0]) - dim(sum(b.i12, b.i13)));
  }

  void edge_codim_x3(const Multidegree& m, const Multidegree& p, bool hyp) {
    const LocalSums& a = local(m);
    const LocalSums& b = local(p);
    record("edge_codim.x3", m, p, hyp, rank_ - dim(b.s12), dim(a.van[2]) - dim(sum(a.i13, a.i23)));
  }

  // V_p = V_p^{X2,0} + <v>, pushed along the vertical edge p -> m.
  void vertical_split(const Multidegree& m, const Multidegree& p, bool hyp) {
    const LocalSums& a = local(m);
    const LocalSums& b = local(p);
    const Matrix& phi = s_.map(p, Direction::TowardX3);
    std::vector<Vector> pushed;
    for (const auto& v : complement_in(b.van[1], inst_.v(p))) pushed.push_back(v * phi);
    const Subspace span = Subspace::span(s_.dim(m), pushed);
    const bool indep = span.dim() == pushed.size();
    record_flag("vertical_split.independent", m, p, hyp, indep, "pushed complement vectors independent");
    const bool direct = intersect(a.van[1], span).dim() == 0 && sum(a.van[1], span) == a.s23;
    record("vertical_split.direct_sum", m, p, hyp, dim(a.van[1]) + static_cast<long>(pushed.size()), dim(a.s23),
           direct ? "direct sum equals V^{X2,0}+V^{X3,0}" : "direct sum does not match");
    if (hyp && !direct) out_.back().outcome = Outcome::Fail;
  }

  void vertical_growth(const Multidegree& m, const Multidegree& p, bool hyp) {
    const LocalSums& a = local(m);
    const LocalSums& b = local(p);
    record("vertical_growth", m, p, hyp, dim(b.van[1]) - dim(a.van[1]), rank_ - dim(a.s23));
  }

  void quotient_dims_x2x3(const Multidegree& m, const Multidegree& p, bool hyp) {
    const LocalSums& a = local(m);
    const LocalSums& b = local(p);
    const long rhs = (dim(b.s123) - dim(b.s23)) + (dim(intersect(b.van[0], b.s23)) - dim(sum(b.i12, b.i13)));
    record("quotient_dims.x2x3", m, p, hyp, rank_ - dim(a.s23), rhs);
  }

  void quotient_dims_x1x2(const Multidegree& m, const Multidegree& p, bool hyp) {
    const LocalSums& a = local(m);
    const LocalSums& b = local(p);
    const long rhs = (dim(a.s123) - dim(a.s12)) + (dim(intersect(a.van[2], a.s12)) - dim(sum(a.i13, a.i23)));
    record("quotient_dims.x1x2", m, p, hyp, rank_ - dim(b.s12), rhs);
  }

  void biconditional(const std::string& name, const Multidegree& m, const Multidegree& p, bool hyp,
                     bool distributive, bool gap) {
    const std::string state =
        std::string("distributive=") + (distributive ? "yes" : "no") + " gap-equality=" + (gap ? "yes" : "no");
    record_flag(name + ".forward", m, p, hyp, !distributive || gap, state);
    record_flag(name + ".backward", m, p, hyp, !gap || distributive, state);
  }

  void distributivity_gap_x2x3(const Multidegree& m, const Multidegree& p, bool hyp) {
    const LocalSums& a = local(m);
    const LocalSums& b = local(p);
    const bool gap = dim(a.s23) - dim(b.s23) == rank_ - dim(b.s123);
    biconditional("distributivity_gap.x2x3", m, p, hyp, distributivity_of(b).holds, gap);
  }

  void distributivity_gap_x1x2(const Multidegree& m, const Multidegree& p, bool hyp) {
    const LocalSums& a = local(m);
    const LocalSums& b = local(p);
    const bool gap = dim(b.s12) - dim(a.s12) == rank_ - dim(a.s123);
    biconditional("distributivity_gap.x1x2", m, p, hyp, distributivity_of(a).holds, gap);
  }

  void boundary(const Multidegree& m) {
    const LocalSums& a = local(m);
    if (m.j == 0) {
      record_flag("boundary.diagonal-inclusion", m, std::nullopt, true,
                  a.van[1].contains(a.van[0]) && a.van[1].contains(a.van[2]),
                  "V^{X1,0} and V^{X3,0} inside V^{X2,0}");
      record_flag("boundary.nested-distributive", m, std::nullopt, true, distributivity_of(a).holds,
                  "nested vanishing forces distributivity");
    }
    if (m.i == 0 && m.l == 0)
      record("boundary.top-vertex", m, std::nullopt, true, dim(a.van[1]), 0, "dim V^{X2,0} at (0,d,0)");
  }

  void anulamiento(const Multidegree& m) {
    for (int q = 1; q <= 3; ++q) {
      const auto n = neighbor(m, toward(q));
      if (!n) continue;
      const Matrix& phi = s_.map(m, toward(q));
      for (int other = 1; other <= 3; ++other) {
        if (other == q) continue;
        const Subspace pulled = intersect(inst_.v(m), preimage(phi, s_.ambient_vanishing(*n, component_bit(other))));
        record_flag("anulamiento.V", m, n, true, pulled == local(m).van[static_cast<std::size_t>(other - 1)],
                    to_string(toward(q)) + " preserves vanishing on X" + std::to_string(other));
      }
    }
  }

  // Summing the corollary down column i = 0.
  void telescoping() {
    const int d = inst_.d();
    bool hyp = true;
    long total = 0;
    for (int l = 0; l <= d; ++l) {
      const Multidegree m{0, d - l, l};
      total += rank_ - dim(local(m).s23);
      if (auto p = l_up(m)) hyp = hyp && hits(*p, Direction::TowardX3, m, local(m).van[2]);
    }
    record("vertical_growth.column-sum", {0, d, 0}, Multidegree{0, 0, d}, hyp, total, rank_);
  }

  const Instance& inst_;
  const Skeleton& s_;
  long rank_;
  std::vector<LocalSums> sums_;
  std::vector<IdentityResult> out_;
};

}  // namespace

std::vector<IdentityResult> identity_suite(const Instance& inst) { return Suite(inst).run(); }

}  // namespace lsl
