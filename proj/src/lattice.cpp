#include "lsl/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsl {

namespace {

constexpr std::array<std::array<int, 3>, 3> kTwist = {{{-1, 1, 0}, {1, -2, 1}, {0, 1, -1}}};

std::optional<Multidegree> if_valid(const Multidegree& m) {
  if (m.nonnegative()) return m;
  return std::nullopt;
}

void append_run(Path& p, Direction dir, int count) {
  for (int k = 0; k < count; ++k) p.nodes.push_back(step(p.nodes.back(), dir));
}

}  // namespace

std::string to_string(const Multidegree& m) {
  return "(" + std::to_string(m.i) + "," + std::to_string(m.j) + "," + std::to_string(m.l) + ")";
}

std::string key(const Multidegree& m) { return std::to_string(m.i) + "," + std::to_string(m.l); }

int component(Direction dir) {
  switch (dir) {
    case Direction::TowardX1:
    case Direction::FromX1:
      return 1;
    case Direction::TowardX2:
    case Direction::FromX2:
      return 2;
    case Direction::TowardX3:
    case Direction::FromX3:
      return 3;
  }
  return 0;
}

bool is_toward(Direction dir) {
  return dir == Direction::TowardX1 || dir == Direction::TowardX2 || dir == Direction::TowardX3;
}

Direction toward(int q) {
  switch (q) {
    case 1:
      return Direction::TowardX1;
    case 2:
      return Direction::TowardX2;
    case 3:
      return Direction::TowardX3;
  }
  throw std::invalid_argument("component index must be 1, 2 or 3");
}

Direction from(int q) {
  switch (q) {
    case 1:
      return Direction::FromX1;
    case 2:
      return Direction::FromX2;
    case 3:
      return Direction::FromX3;
  }
  throw std::invalid_argument("component index must be 1, 2 or 3");
}

Direction reverse(Direction dir) { return is_toward(dir) ? from(component(dir)) : toward(component(dir)); }

std::string to_string(Direction dir) {
  return std::string(is_toward(dir) ? "toward-X" : "from-X") + std::to_string(component(dir));
}

Multidegree step(const Multidegree& m, Direction dir) {
  const auto& t = kTwist[static_cast<std::size_t>(component(dir) - 1)];
  const int s = is_toward(dir) ? 1 : -1;
  return {m.i + s * t[0], m.j + s * t[1], m.l + s * t[2]};
}

std::optional<Multidegree> neighbor(const Multidegree& m, Direction dir) { return if_valid(step(m, dir)); }

std::optional<Direction> direction_between(const Multidegree& from, const Multidegree& to) {
  for (Direction dir : kDirections)
    if (step(from, dir) == to) return dir;
  return std::nullopt;
}

std::string to_string(const Edge& e) {
  return to_string(e.from) + "->" + to_string(e.to) + " [" + to_string(e.dir) + "]";
}

std::optional<Multidegree> diag_down(const Multidegree& m) { return if_valid({m.i - 1, m.j + 2, m.l - 1}); }
std::optional<Multidegree> i_down(const Multidegree& m) { return if_valid({m.i - 1, m.j + 1, m.l}); }
std::optional<Multidegree> l_up(const Multidegree& m) { return if_valid({m.i, m.j - 1, m.l + 1}); }
std::optional<Multidegree> i_up(const Multidegree& m) { return if_valid({m.i + 1, m.j - 1, m.l}); }
std::optional<Multidegree> toward_neighbor(const Multidegree& m, int q) { return neighbor(m, toward(q)); }

std::vector<Multidegree> enumerate(int d) {
  std::vector<Multidegree> out;
  if (d < 0) return out;
  out.reserve(grid_size(d));
  for (int l = 0; l <= d; ++l)
    for (int i = d - l; i >= 0; --i) out.push_back({i, d - i - l, l});
  return out;
}

std::size_t grid_size(int d) { return d < 0 ? 0 : static_cast<std::size_t>((d + 1) * (d + 2) / 2); }

std::size_t grid_index(int d, const Multidegree& m) {
  if (!m.nonnegative() || m.total() != d) throw std::out_of_range("multidegree " + to_string(m) + " not in grid");
  // Row l' holds d - l' + 1 entries.
  const int before = m.l * (d + 1) - m.l * (m.l - 1) / 2;
  return static_cast<std::size_t>(before + (d - m.l - m.i));
}

std::string to_string(PathClass c) {
  switch (c) {
    case PathClass::ValidCanonical:
      return "valid-canonical";
    case PathClass::ViolatesI:
      return "violates (I)";
    case PathClass::ViolatesII:
      return "violates (II)";
    case PathClass::ViolatesIII:
      return "violates (III)";
  }
  return "?";
}

std::vector<Direction> path_steps(const Path& p) {
  std::vector<Direction> steps;
  for (std::size_t k = 1; k < p.nodes.size(); ++k) {
    auto dir = direction_between(p.nodes[k - 1], p.nodes[k]);
    if (!dir) {
      throw std::invalid_argument("path nodes " + to_string(p.nodes[k - 1]) + " and " + to_string(p.nodes[k]) +
                                  " are not adjacent");
    }
    steps.push_back(*dir);
  }
  return steps;
}

PathClass classify_path(const Path& p) {
  std::array<bool, 4> towards{};
  std::array<bool, 4> froms{};
  for (Direction dir : path_steps(p)) (is_toward(dir) ? towards : froms)[static_cast<std::size_t>(component(dir))] = true;
  if (towards[1] && towards[2] && towards[3]) return PathClass::ViolatesI;
  for (int q = 1; q <= 3; ++q)
    if (towards[static_cast<std::size_t>(q)] && froms[static_cast<std::size_t>(q)]) return PathClass::ViolatesII;
  if (static_cast<int>(froms[1]) + static_cast<int>(froms[2]) + static_cast<int>(froms[3]) >= 2)
    return PathClass::ViolatesIII;
  return PathClass::ValidCanonical;
}

Path canonical_path(const Multidegree& from, const Multidegree& to) {
  if (!from.nonnegative() || !to.nonnegative() || from.total() != to.total())
    throw std::invalid_argument("canonical_path: endpoints " + to_string(from) + ", " + to_string(to));
  const int di = to.i - from.i;
  const int dl = to.l - from.l;
  Path p{{from}};
  if (di <= 0 && dl >= 0) {
    append_run(p, Direction::TowardX1, -di);
    append_run(p, Direction::FromX3, dl);
  } else if (di >= 0 && dl <= 0) {
    append_run(p, Direction::TowardX3, -dl);
    append_run(p, Direction::FromX1, di);
  } else if (di > 0) {
    const int diag = std::min(di, dl);
    append_run(p, Direction::TowardX2, diag);
    append_run(p, Direction::FromX3, dl - diag);
    append_run(p, Direction::FromX1, di - diag);
  } else {
    append_run(p, Direction::TowardX1, -di);
    append_run(p, Direction::TowardX3, -dl);
  }
  if (p.nodes.back() != to) throw std::logic_error("canonical_path did not reach its target");
  for (const auto& n : p.nodes)
    if (!n.nonnegative()) throw std::logic_error("canonical_path left the lattice");
  if (classify_path(p) != PathClass::ValidCanonical) throw std::logic_error("canonical_path produced a zero pattern");
  return p;
}

bool in_region_m(int q, const Multidegree& c, const Multidegree& x) {
  switch (q) {
    case 1:
      return x.i <= c.i && x.i - c.i <= x.l - c.l;
    case 2:
      return x.i >= c.i && x.l >= c.l;
    case 3:
      return x.l <= c.l && x.l - c.l <= x.i - c.i;
  }
  throw std::invalid_argument("component index must be 1, 2 or 3");
}

RegionTriple regions(const Multidegree& c) {
  RegionTriple out;
  for (const auto& x : enumerate(c.total())) {
    if (in_region_m(1, c, x)) out.first.push_back(x);
    if (in_region_m(2, c, x)) out.second.push_back(x);
    if (in_region_m(3, c, x)) out.third.push_back(x);
  }
  return out;
}

RegionTriple def_regions(const Multidegree& c) {
  RegionTriple out;
  for (const auto& x : enumerate(c.total())) {
    if (x.l <= c.l && x.i - c.i >= x.l - c.l) out.first.push_back(x);
    if (x.l >= c.l && x.i >= c.i) out.second.push_back(x);
    if (x.i <= c.i - 1 && x.i - (c.i - 1) <= x.l - c.l) out.third.push_back(x);
  }
  return out;
}

}  // namespace lsl
