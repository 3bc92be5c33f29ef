#include "lsl/sheaf_laws.hpp"

namespace lsl {

namespace {

// First basis vector of a outside b, else of b outside a.
std::vector<Vector> difference_witness(const Subspace& a, const Subspace& b) {
  for (const auto& v : a.vectors())
    if (!b.contains(v)) return {v};
  for (const auto& v : b.vectors())
    if (!a.contains(v)) return {v};
  return {};
}

std::vector<Vector> nonzero_row(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector e(m.rows());
    e[r] = 1;
    if (!is_zero(m.row(r))) return {e, m.row(r)};
  }
  return {};
}

class Checker {
 public:
  explicit Checker(const Skeleton& s) : s_(s) {}

  LawReport run() {
    if (!shapes()) return report_;
    for (const Edge& e : s_.edges()) {
      ++report_.edges_checked;
      if (is_toward(e.dir)) toward_edge(e);
      else from_edge(e);
    }
    squares();
    return report_;
  }

 private:
  void fail(std::string law, std::string where, std::vector<Vector> witness) {
    report_.violations.push_back({std::move(law), std::move(where), std::move(witness)});
  }

  bool shapes() {
    bool ok = true;
    for (const auto& m : s_.grid) {
      const std::size_t n = s_.dim(m);
      for (int q = 1; q <= 3; ++q)
        if (s_.vanishing[s_.index(m)][static_cast<std::size_t>(q - 1)].ambient_dim() != n) {
          fail("shape", "vanishing X" + std::to_string(q) + " at " + to_string(m), {});
          ok = false;
        }
    }
    for (const Edge& e : s_.edges()) {
      const Matrix* m = s_.find_map(e.from, e.dir);
      if (m == nullptr || m->rows() != s_.dim(e.from) || m->cols() != s_.dim(e.to)) {
        fail("shape", "map " + to_string(e), {});
        ok = false;
      }
    }
    return ok;
  }

  void toward_edge(const Edge& e) {
    const int q = component(e.dir);
    const Matrix& m = s_.map(e);
    const Matrix& back = s_.map(e.to, reverse(e.dir));
    if (auto w = nonzero_row(m * back); !w.empty()) fail("zero-composition", to_string(e) + " then back", w);

    const Subspace ker = kernel(m);
    const Subspace want_ker = s_.ambient_vanishing(e.from, complement_of(q));
    if (ker != want_ker) fail("kernel", to_string(e), difference_witness(ker, want_ker));

    const Subspace img = image(m);
    const Subspace target = s_.ambient_vanishing(e.to, component_bit(q));
    if (!target.contains(img)) fail("image", to_string(e), difference_witness(img, sum(img, target)));

    for (int other = 1; other <= 3; ++other) {
      if (other == q) continue;
      const Subspace pulled = preimage(m, s_.ambient_vanishing(e.to, component_bit(other)));
      const Subspace here = s_.ambient_vanishing(e.from, component_bit(other));
      if (pulled != here)
        fail("anulamiento", to_string(e) + " on X" + std::to_string(other), difference_witness(pulled, here));
    }
  }

  void from_edge(const Edge& e) {
    const int q = component(e.dir);
    const Matrix& m = s_.map(e);
    const Matrix& back = s_.map(e.to, reverse(e.dir));
    if (auto w = nonzero_row(m * back); !w.empty()) fail("zero-composition", to_string(e) + " then back", w);

    const Subspace ker = kernel(m);
    const Subspace want_ker = s_.ambient_vanishing(e.from, component_bit(q));
    if (ker != want_ker) fail("kernel", to_string(e), difference_witness(ker, want_ker));

    const Subspace img = image(m);
    const Subspace target = s_.ambient_vanishing(e.to, complement_of(q));
    if (!target.contains(img)) fail("image", to_string(e), difference_witness(img, sum(img, target)));
  }

  // Two toward steps in different directions compose to the remaining from step.
  void squares() {
    for (const auto& d1 : s_.grid)
      for (int q1 = 1; q1 <= 3; ++q1)
        for (int q2 = 1; q2 <= 3; ++q2) {
          if (q1 == q2) continue;
          const auto d2 = neighbor(d1, toward(q1));
          if (!d2) continue;
          const auto d3 = neighbor(*d2, toward(q2));
          if (!d3) continue;
          ++report_.squares_checked;
          const int q3 = 6 - q1 - q2;
          const Matrix lhs = s_.map(d1, toward(q1)) * s_.map(*d2, toward(q2));
          const Matrix& rhs = s_.map(d1, from(q3));
          if (lhs != rhs) {
            std::vector<Vector> w;
            for (std::size_t r = 0; r < lhs.rows() && w.empty(); ++r)
              if (lhs.row(r) != rhs.row(r)) w = {lhs.row(r), rhs.row(r)};
            fail("square", to_string(d1) + " X" + std::to_string(q1) + " then X" + std::to_string(q2), w);
          }
        }
  }

  const Skeleton& s_;
  LawReport report_;
};

}  // namespace

LawReport check_sheaf_laws(const Skeleton& s) { return Checker(s).run(); }

}  // namespace lsl
