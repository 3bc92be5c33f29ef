#include "lsl/simple_basis.hpp"

#include <algorithm>
#include <functional>

#include "lsl/parallel.hpp"
#include "lsl/series.hpp"

namespace lsl {

std::size_t SimpleCertificate::total_sections() const {
  std::size_t n = 0;
  for (const auto& s : sections) n += s.size();
  return n;
}

std::vector<Multidegree> sweep_order(int q, int d) {
  std::vector<Multidegree> out;
  switch (q) {
    case 1:  // columns left to right, each from the diagonal down to l = 0
      for (int i = 0; i <= d; ++i)
        for (int l = d - i; l >= 0; --l) out.push_back({i, d - i - l, l});
      break;
    case 2:  // anti-diagonals i + l = d, d-1, ..., 0
      for (int s = d; s >= 0; --s)
        for (int l = 0; l <= s; ++l) out.push_back({s - l, d - s, l});
      break;
    case 3:  // mirror of q = 1 with i and l exchanged
      for (int l = 0; l <= d; ++l)
        for (int i = d - l; i >= 0; --i) out.push_back({i, d - i - l, l});
      break;
    default:
      throw std::invalid_argument("component index must be 1, 2 or 3");
  }
  return out;
}

std::vector<Multidegree> seed_neighbors(int q, const Multidegree& m) {
  std::vector<Multidegree> out;
  auto add = [&](std::optional<Multidegree> n) {
    if (n) out.push_back(*n);
  };
  switch (q) {
    case 1:
      add(diag_down(m));
      add(l_up(m));
      // Corner (d,0,0): grows horizontally from (d-1,1,0).
      if (out.empty()) add(i_down(m));
      break;
    case 2:
      if (m.j > 0) {
        add(i_up(m));
        add(l_up(m));
      }
      break;
    case 3:
      // Mirror of q = 1: l_up becomes i_up, i_down becomes the neighbour toward X3.
      add(diag_down(m));
      add(i_up(m));
      if (out.empty()) add(toward_neighbor(m, 3));
      break;
    default:
      throw std::invalid_argument("component index must be 1, 2 or 3");
  }
  return out;
}

namespace {

Vector push_edge(const Skeleton& s, const Multidegree& from, const Multidegree& to, const Vector& v) {
  const auto dir = direction_between(from, to);
  if (!dir) throw std::logic_error(to_string(from) + " and " + to_string(to) + " are not adjacent");
  return v * s.map(from, *dir);
}

void require_exact_distributive(const Instance& inst) {
  if (auto e = exactness(inst).first_failure()) throw ExactnessRequired(*e);
  for (const auto& m : inst.grid())
    if (!distributive_at(inst, m).holds) throw DistributivityRequired(m);
}

std::vector<Vector> pushed_sections(const Instance& inst, const SimpleCertificate& cert, const Multidegree& to,
                                    const std::function<bool(const Multidegree&)>& keep) {
  std::vector<Vector> out;
  for (std::size_t a = 0; a < cert.support.size(); ++a) {
    if (!keep(cert.support[a])) continue;
    for (const auto& sec : cert.sections[a]) out.push_back(inst.skeleton.push(cert.support[a], to, sec));
  }
  return out;
}

bool contains_vector(const std::vector<Vector>& list, const Vector& v) {
  return std::find(list.begin(), list.end(), v) != list.end();
}

struct Growth {
  std::string name;
  // Source and target of the relation at m, or nothing where it does not apply.
  std::function<std::optional<std::pair<Multidegree, Multidegree>>(const Multidegree&)> at;
};

std::optional<std::pair<Multidegree, Multidegree>> into(std::optional<Multidegree> n, const Multidegree& m) {
  if (!n) return std::nullopt;
  return std::make_pair(*n, m);
}

std::optional<std::pair<Multidegree, Multidegree>> out_of(const Multidegree& m, std::optional<Multidegree> n) {
  if (!n) return std::nullopt;
  return std::make_pair(m, *n);
}

std::vector<Growth> growth_relations(int q) {
  auto vertical_in = [](const Multidegree& m) { return into(l_up(m), m); };
  auto diagonal_in = [](const Multidegree& m) { return into(diag_down(m), m); };
  auto horizontal_in = [](const Multidegree& m) { return into(i_down(m), m); };
  auto horizontal_out = [](const Multidegree& m) { return out_of(m, i_down(m)); };
  auto diagonal_out = [](const Multidegree& m) { return out_of(m, diag_down(m)); };
  auto vertical_out = [](const Multidegree& m) { return out_of(m, l_up(m)); };
  switch (q) {
    case 1:
      return {{"growth.q1.vertical", vertical_in}, {"growth.q1.diagonal", diagonal_in},
              {"growth.q1.horizontal", horizontal_in}};
    case 2:
      return {{"growth.q2.vertical", vertical_in}, {"growth.q2.horizontal", horizontal_out},
              {"growth.q2.diagonal", diagonal_out}};
    case 3:
      return {{"growth.q3.horizontal", horizontal_out}, {"growth.q3.diagonal", diagonal_in},
              {"growth.q3.vertical", vertical_out}};
    default:
      throw std::invalid_argument("component index must be 1, 2 or 3");
  }
}

IdentityResult flag(std::string name, const Multidegree& at, std::optional<Multidegree> partner, bool ok,
                    std::string detail) {
  return {std::move(name), at, partner, ok ? Outcome::Pass : Outcome::Fail, ok ? 1 : 0, 1, std::move(detail)};
}

}  // namespace

ComplementSystem build_complement_system(const Instance& inst, int q, const SimpleCertificate* preferred) {
  require_exact_distributive(inst);
  const Skeleton& s = inst.skeleton;
  ComplementSystem sys;
  sys.q = q;
  sys.beta.resize(inst.grid().size());
  sys.W.resize(inst.grid().size());
  for (const auto& m : sweep_order(q, inst.d())) {
    const std::size_t k = s.index(m);
    std::vector<Vector> seed;
    for (const auto& n : seed_neighbors(q, m))
      for (const auto& b : sys.beta[s.index(n)]) {
        Vector v = push_edge(s, n, m, b);
        if (!contains_vector(seed, v)) seed.push_back(std::move(v));
      }
    const Subspace vq = vanishing_in_V(inst, m, component_bit(q));
    const Subspace seed_span = Subspace::span(s.dim(m), seed);
    if (seed_span.dim() != seed.size() || intersect(seed_span, vq).dim() != 0)
      throw std::logic_error("pushed complement bases degenerate at " + to_string(m));
    std::vector<Vector> offer;
    if (preferred != nullptr) offer = pushed_sections(inst, *preferred, m, [](const Multidegree&) { return true; });
    std::vector<Vector> ext = complement_in(sum(seed_span, vq), inst.V[k], offer);
    seed.insert(seed.end(), ext.begin(), ext.end());
    sys.W[k] = Subspace::span(s.dim(m), seed);
    sys.beta[k] = std::move(seed);
  }
  return sys;
}

std::vector<IdentityResult> check_complement_system(const Instance& inst, const ComplementSystem& sys) {
  const Skeleton& s = inst.skeleton;
  const std::string tag = "q" + std::to_string(sys.q);
  std::vector<IdentityResult> out;
  for (const auto& m : inst.grid()) {
    const std::size_t k = s.index(m);
    const Subspace vq = vanishing_in_V(inst, m, component_bit(sys.q));
    const bool indep = sys.W[k].dim() == sys.beta[k].size() && Subspace::span(s.dim(m), sys.beta[k]) == sys.W[k];
    const bool direct = intersect(sys.W[k], vq).dim() == 0 && sum(sys.W[k], vq) == inst.V[k] &&
                        inst.V[k].contains(sys.W[k]);
    out.push_back(flag("complement." + tag, m, std::nullopt, indep && direct, "V = W + V^{Xq,0} direct"));
  }
  for (const auto& g : growth_relations(sys.q))
    for (const auto& m : inst.grid()) {
      const auto pair = g.at(m);
      if (!pair) continue;
      const auto& [src, dst] = *pair;
      bool ok = true;
      for (const auto& b : sys.beta[s.index(src)])
        ok = ok && contains_vector(sys.beta[s.index(dst)], push_edge(s, src, dst, b));
      out.push_back(flag(g.name, m, pair->first == m ? pair->second : pair->first, ok, to_string(src) + "->" + to_string(dst)));
    }
  return out;
}

std::vector<IdentityResult> structure_identities(const Instance& inst, const std::array<ComplementSystem, 3>& sys) {
  const Skeleton& s = inst.skeleton;
  const int d = inst.d();
  std::vector<IdentityResult> out;
  if (d == 0) return out;
  for (const auto& m : inst.grid()) {
    std::vector<std::pair<int, std::optional<Multidegree>>> terms;
    std::string item;
    const auto vertical_pair = [&] {
      terms.push_back({1, l_up(m)});
      terms.push_back({2, l_up(m)});
      terms.push_back({2, i_up(m)});
      terms.push_back({3, i_up(m)});
    };
    const auto diagonal_pair = [&] {
      terms.push_back({1, diag_down(m)});
      terms.push_back({3, diag_down(m)});
    };
    if (m.i == 0 && m.l == d) {
      item = "structure.corner-l";
      terms.push_back({3, toward_neighbor(m, 3)});
    } else if (m.i == 0) {
      item = "structure.edge-i0";
      vertical_pair();
    } else if (m.i == d) {
      item = "structure.corner-i";
      terms.push_back({1, i_down(m)});
    } else if (m.j == 0) {
      item = "structure.edge-j0";
      diagonal_pair();
    } else if (m.l == 0) {
      item = "structure.edge-l0";
      vertical_pair();
    } else {
      item = "structure.interior";
      diagonal_pair();
      vertical_pair();
    }
    Subspace rhs = Subspace::zero(s.dim(m));
    bool defined = true;
    for (const auto& [q, n] : terms) {
      if (!n) {
        defined = false;
        continue;
      }
      const auto dir = direction_between(*n, m);
      rhs = sum(rhs, apply(sys[static_cast<std::size_t>(q - 1)].W[s.index(*n)], s.map(*n, *dir)));
    }
    const Subspace lhs = local_sums(inst, m).s123;
    out.push_back(flag(item, m, std::nullopt, defined && lhs == rhs, "triple vanishing sum vs pushed complements"));
  }
  return out;
}

std::vector<IdentityResult> region_recurrences(int d) {
  std::vector<IdentityResult> out;
  for (int q = 1; q <= 3; ++q)
    for (const auto& m : enumerate(d)) {
      std::vector<Multidegree> lhs;
      for (const auto& x : enumerate(d))
        if (x != m && in_region_m(q, m, x)) lhs.push_back(x);
      std::vector<Multidegree> rhs;
      for (const auto& n : seed_neighbors(q, m))
        for (const auto& x : enumerate(d))
          if (in_region_m(q, n, x) && std::find(rhs.begin(), rhs.end(), x) == rhs.end()) rhs.push_back(x);
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      out.push_back(flag("region-recurrence.q" + std::to_string(q), m, std::nullopt, lhs == rhs,
                         "M^q minus the point equals the union over seed neighbours"));
    }
  return out;
}

SimpleCertificate candidate_certificate(const Instance& inst) {
  SimpleCertificate cert;
  for (const auto& m : inst.grid()) {
    const Subspace triple = local_sums(inst, m).s123;
    if (triple.dim() >= inst.v(m).dim()) continue;
    const auto comp = complement_in(triple, inst.v(m));
    cert.support.push_back(m);
    cert.sections.push_back(Subspace::span(inst.skeleton.dim(m), comp).vectors());
  }
  return cert;
}

SimpleCertificate extract_certificate(const Instance& inst) {
  require_exact_distributive(inst);
  SimpleCertificate cert = candidate_certificate(inst);
  const CertificateVerdict v = verify_certificate(inst, cert);
  if (!v.ok) throw std::logic_error("extracted certificate does not verify: " + v.reason);
  return cert;
}

CertificateVerdict verify_certificate(const Instance& inst, const SimpleCertificate& cert) {
  const Skeleton& s = inst.skeleton;
  CertificateVerdict v;
  if (cert.support.size() != cert.sections.size()) {
    v.reason = "support and section lists differ in length";
    return v;
  }
  for (std::size_t a = 0; a < cert.support.size(); ++a) {
    const Multidegree& m = cert.support[a];
    if (!m.nonnegative() || m.total() != inst.d()) {
      v.reason = "support multidegree " + to_string(m) + " outside the lattice";
      return v;
    }
    for (std::size_t b = 0; b < a; ++b)
      if (cert.support[b] == m) {
        v.reason = "support multidegree " + to_string(m) + " repeated";
        return v;
      }
    for (const auto& sec : cert.sections[a])
      if (sec.size() != s.dim(m) || !inst.v(m).contains(sec)) {
        v.first_failure = m;
        v.reason = "section at " + to_string(m) + " does not lie in V";
        return v;
      }
    if (!independent(cert.sections[a], s.dim(m))) {
      v.first_failure = m;
      v.reason = "sections at " + to_string(m) + " are dependent";
      return v;
    }
  }
  if (cert.total_sections() != static_cast<std::size_t>(inst.r + 1)) {
    v.reason = "certificate has " + std::to_string(cert.total_sections()) + " sections, expected " +
               std::to_string(inst.r + 1);
    return v;
  }
  const auto ok = parallel_map(inst.grid().size(), [&](std::size_t k) {
    const Multidegree& m = inst.grid()[k];
    const auto pushes = pushed_sections(inst, cert, m, [](const Multidegree&) { return true; });
    for (const auto& p : pushes)
      if (!inst.V[k].contains(p)) return false;
    return pushes.size() == inst.V[k].dim() && independent(pushes, s.dim(m));
  });
  for (std::size_t k = 0; k < ok.size(); ++k)
    if (!ok[k]) {
      v.first_failure = inst.grid()[k];
      v.reason = "pushed sections do not form a basis of V at " + to_string(inst.grid()[k]);
      return v;
    }
  v.ok = true;
  return v;
}

Simplicity is_simple(const Instance& inst) {
  if (auto e = exactness(inst).first_failure()) return NotExact{*e};
  for (const auto& m : inst.grid())
    if (!distributive_at(inst, m).holds) return NotDistributive{m};
  return Simple{extract_certificate(inst)};
}

std::array<ComplementSystem, 3> certificate_bases(const Instance& inst, const SimpleCertificate& cert) {
  std::array<ComplementSystem, 3> out;
  for (int q = 1; q <= 3; ++q) {
    ComplementSystem& sys = out[static_cast<std::size_t>(q - 1)];
    sys.q = q;
    for (const auto& m : inst.grid()) {
      auto beta = pushed_sections(inst, cert, m, [&](const Multidegree& a) { return in_region_m(q, m, a); });
      sys.W.push_back(Subspace::span(inst.skeleton.dim(m), beta));
      sys.beta.push_back(std::move(beta));
    }
  }
  return out;
}

}  // namespace lsl
