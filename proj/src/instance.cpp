#include "lsl/instance.hpp"

#include <stdexcept>

namespace lsl {

std::string subcurve_name(unsigned mask) {
  std::string out;
  for (int q = 1; q <= 3; ++q) {
    if ((mask & component_bit(q)) == 0) continue;
    if (!out.empty()) out += "+";
    out += "X" + std::to_string(q);
  }
  return out.empty() ? "none" : out;
}

const Matrix* Skeleton::find_map(const Multidegree& from, Direction dir) const {
  if (!from.nonnegative() || from.total() != d) return nullptr;
  const auto& slot = maps[index(from)][static_cast<std::size_t>(dir)];
  return slot ? &*slot : nullptr;
}

const Matrix& Skeleton::map(const Multidegree& from, Direction dir) const {
  const Matrix* m = find_map(from, dir);
  if (m == nullptr) throw std::out_of_range("no " + to_string(dir) + " map at " + to_string(from));
  return *m;
}

Subspace Skeleton::ambient_vanishing(const Multidegree& m, unsigned mask) const {
  const std::size_t k = index(m);
  Subspace out = Subspace::full(ambient_dim[k]);
  for (int q = 1; q <= 3; ++q)
    if ((mask & component_bit(q)) != 0) out = intersect(out, vanishing[k][static_cast<std::size_t>(q - 1)]);
  return out;
}

std::vector<Edge> Skeleton::edges() const {
  std::vector<Edge> out;
  for (const auto& m : grid)
    for (Direction dir : kDirections)
      if (auto n = neighbor(m, dir)) out.push_back({m, *n, dir});
  return out;
}

Matrix Skeleton::composite(const Path& p) const {
  if (p.nodes.empty()) throw std::invalid_argument("composite: empty path");
  Matrix m = Matrix::identity(dim(p.nodes.front()));
  const auto steps = path_steps(p);
  for (std::size_t k = 0; k < steps.size(); ++k) m = m * map(p.nodes[k], steps[k]);
  return m;
}

Vector Skeleton::push(const Multidegree& from, const Multidegree& to, const Vector& v) const {
  const Path p = canonical_path(from, to);
  Vector out = v;
  const auto steps = path_steps(p);
  for (std::size_t k = 0; k < steps.size(); ++k) out = out * map(p.nodes[k], steps[k]);
  return out;
}

Skeleton make_skeleton_shell(int d) {
  if (d < 0) throw std::invalid_argument("total degree must be nonnegative");
  Skeleton s;
  s.d = d;
  s.grid = enumerate(d);
  s.ambient_dim.assign(s.grid.size(), 0);
  s.maps.resize(s.grid.size());
  s.vanishing.resize(s.grid.size());
  return s;
}

}  // namespace lsl
