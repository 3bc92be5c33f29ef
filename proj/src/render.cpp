#include "lsl/render.hpp"

#include <algorithm>
#include <sstream>

namespace lsl {

std::string render_grid(const GridReport& rep) {
  const auto d = static_cast<std::size_t>(rep.d);
  std::vector<std::vector<std::string>> rows(d + 1, std::vector<std::string>(d + 1));
  std::size_t width = 0;
  for (const auto& c : rep.cells) {
    std::string cell = std::to_string(c.codim) + "/" + (c.distributive ? "D" : "N");
    width = std::max(width, cell.size());
    rows[static_cast<std::size_t>(c.md.l)][d - static_cast<std::size_t>(c.md.i)] = std::move(cell);
  }
  std::ostringstream out;
  out << "d=" << rep.d << " r=" << rep.r << " codim_sum=" << rep.codim_sum << " exact=" << (rep.exact ? "yes" : "no")
      << " distributive=" << (rep.all_distributive ? "yes" : "no");
  if (rep.simple) out << " simple=" << (*rep.simple ? "yes" : "no");
  out << "\n";
  for (std::size_t l = 0; l <= d; ++l) {
    std::string line;
    for (std::size_t col = 0; col <= d; ++col) {
      const std::string& cell = rows[l][col];
      if (col > 0) line += ' ';
      line += std::string(width - cell.size(), ' ') + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

}  // namespace lsl
