#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lsl {

// Degrees (i, j, l) on X1, X2, X3; j is determined by the total degree.
struct Multidegree {
  int i = 0;
  int j = 0;
  int l = 0;

  int total() const { return i + j + l; }
  bool nonnegative() const { return i >= 0 && j >= 0 && l >= 0; }
  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;
};

std::string to_string(const Multidegree& m);
// The "i,l" key used by instance files.
std::string key(const Multidegree& m);

// Toward-Xq adds the twist by O(Xq); from-Xq subtracts it.
enum class Direction { TowardX1, TowardX2, TowardX3, FromX1, FromX2, FromX3 };

inline constexpr std::array<Direction, 6> kDirections = {Direction::TowardX1, Direction::TowardX2,
                                                         Direction::TowardX3, Direction::FromX1,
                                                         Direction::FromX2,   Direction::FromX3};

int component(Direction dir);  // 1, 2 or 3
bool is_toward(Direction dir);
Direction toward(int q);
Direction from(int q);
Direction reverse(Direction dir);
std::string to_string(Direction dir);

// Raw shift, no bounds check.
Multidegree step(const Multidegree& m, Direction dir);
// The adjacent multidegree, or nothing when it leaves the nonnegative lattice.
std::optional<Multidegree> neighbor(const Multidegree& m, Direction dir);
std::optional<Direction> direction_between(const Multidegree& from, const Multidegree& to);

struct Edge {
  Multidegree from;
  Multidegree to;
  Direction dir = Direction::TowardX1;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// Named neighbours of (i, j, l).
std::optional<Multidegree> diag_down(const Multidegree& m);  // (i-1, j+2, l-1)
std::optional<Multidegree> i_down(const Multidegree& m);     // (i-1, j+1, l)
std::optional<Multidegree> l_up(const Multidegree& m);       // (i, j-1, l+1)
std::optional<Multidegree> i_up(const Multidegree& m);       // (i+1, j-1, l)
std::optional<Multidegree> toward_neighbor(const Multidegree& m, int q);

// Grid order: rows by l ascending, within a row i descending.
std::vector<Multidegree> enumerate(int d);
std::size_t grid_size(int d);
std::size_t grid_index(int d, const Multidegree& m);

struct Path {
  std::vector<Multidegree> nodes;
  std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

enum class PathClass { ValidCanonical, ViolatesI, ViolatesII, ViolatesIII };
std::string to_string(PathClass c);

std::vector<Direction> path_steps(const Path& p);
// Patterns are tested in the order I, II, III; throws on non-adjacent nodes.
PathClass classify_path(const Path& p);

// Horizontal, diagonal and vertical runs arranged to stay in the lattice and
// avoid all three zero patterns.
Path canonical_path(const Multidegree& from, const Multidegree& to);

struct RegionTriple {
  std::vector<Multidegree> first;
  std::vector<Multidegree> second;
  std::vector<Multidegree> third;
};

bool in_region_m(int q, const Multidegree& center, const Multidegree& x);
// (M1, M2, M3) around center, each in grid order.
RegionTriple regions(const Multidegree& center);
// (D, E, F) around center, each in grid order.
RegionTriple def_regions(const Multidegree& center);

}  // namespace lsl
