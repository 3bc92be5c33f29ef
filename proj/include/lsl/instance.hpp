#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsl/lattice.hpp"
#include "lsl/linalg.hpp"

namespace lsl {

// Subcurves as bit masks over the components.
inline constexpr unsigned kX1 = 1U;
inline constexpr unsigned kX2 = 2U;
inline constexpr unsigned kX3 = 4U;
inline constexpr unsigned kAllComponents = kX1 | kX2 | kX3;

inline unsigned component_bit(int q) { return 1U << (q - 1); }
// X_q^c, the union of the other two components.
inline unsigned complement_of(int q) { return kAllComponents & ~component_bit(q); }
std::string subcurve_name(unsigned mask);

// Ambient data of the degeneration: section spaces, twist maps and the
// single-component vanishing subspaces at every multidegree of degree d.
struct Skeleton {
  int d = 0;
  std::vector<Multidegree> grid;
  std::vector<std::size_t> ambient_dim;
  std::vector<std::array<std::optional<Matrix>, 6>> maps;
  std::vector<std::array<Subspace, 3>> vanishing;

  std::size_t index(const Multidegree& m) const { return grid_index(d, m); }
  std::size_t dim(const Multidegree& m) const { return ambient_dim[index(m)]; }

  const Matrix* find_map(const Multidegree& from, Direction dir) const;
  const Matrix& map(const Multidegree& from, Direction dir) const;
  const Matrix& map(const Edge& e) const { return map(e.from, e.dir); }

  // Sections vanishing on every component in mask; mask 0 gives everything.
  Subspace ambient_vanishing(const Multidegree& m, unsigned mask) const;

  // Directed edges, sources in grid order, directions in declaration order.
  std::vector<Edge> edges() const;

  Matrix composite(const Path& p) const;
  Vector push(const Multidegree& from, const Multidegree& to, const Vector& v) const;
};

// Empty skeleton shell with the grid filled in.
Skeleton make_skeleton_shell(int d);

struct Instance {
  Skeleton skeleton;
  int r = 0;
  std::vector<Subspace> V;
  std::vector<std::pair<std::string, std::string>> provenance;

  int d() const { return skeleton.d; }
  const std::vector<Multidegree>& grid() const { return skeleton.grid; }
  const Subspace& v(const Multidegree& m) const { return V[skeleton.index(m)]; }
};

}  // namespace lsl
