#include "lsl/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lsl {

FormatError::FormatError(std::string src, std::string fld, std::size_t ln, std::size_t col, const std::string& msg)
    : std::runtime_error([&] {
        std::string where = src;
        if (ln > 0) where += ":" + std::to_string(ln) + ":" + std::to_string(col);
        if (!fld.empty()) where += ": " + fld;
        return where + ": " + msg;
      }()),
      source(std::move(src)),
      field(std::move(fld)),
      line(ln),
      column(col) {}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const std::vector<Vector>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

Json to_json(const Matrix& m) { return to_json(m.row_vectors()); }

Json to_json(const Multidegree& m) { return Json::array({m.i, m.j, m.l}); }

Json to_json(const Edge& e) {
  return Json{{"from", to_json(e.from)}, {"to", to_json(e.to)}, {"direction", to_string(e.dir)}};
}

namespace {

Json instance_body(const Skeleton& s, int r, const std::vector<Subspace>* V,
                   const std::vector<std::pair<std::string, std::string>>& prov) {
  Json out;
  if (!prov.empty()) {
    Json p;
    for (const auto& [k, v] : prov) p[k] = v;
    out["provenance"] = p;
  }
  out["d"] = s.d;
  out["r"] = r;
  Json mds = Json::array();
  for (const auto& m : s.grid) mds.push_back(to_json(m));
  out["multidegrees"] = mds;
  Json dims = Json::object();
  for (const auto& m : s.grid) dims[key(m)] = s.dim(m);
  out["ambient_dim"] = dims;
  Json maps = Json::array();
  for (const auto& e : s.edges())
    maps.push_back(Json{{"from", to_json(e.from)}, {"to", to_json(e.to)}, {"matrix", to_json(s.map(e))}});
  out["maps"] = maps;
  Json van = Json::object();
  for (const auto& m : s.grid) {
    Json c;
    for (int q = 1; q <= 3; ++q) c["X" + std::to_string(q)] = to_json(s.vanishing[s.index(m)][q - 1].vectors());
    van[key(m)] = c;
  }
  out["vanishing"] = van;
  Json vs = Json::object();
  for (const auto& m : s.grid) vs[key(m)] = V ? to_json((*V)[s.index(m)].vectors()) : Json::array();
  out["V"] = vs;
  return out;
}

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& msg) const {
    throw FormatError(source_, field, 0, 0, msg);
  }

  const Json& member(const Json& j, const std::string& name, const std::string& field) const {
    if (!j.is_object()) fail(field, "expected an object");
    auto it = j.find(name);
    if (it == j.end()) fail(field, "missing key \"" + name + "\"");
    return *it;
  }

  long integer(const Json& j, const std::string& field) const {
    if (!j.is_number_integer()) fail(field, "expected an integer");
    return j.get<long>();
  }

  Rational rational(const Json& j, const std::string& field) const {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail(field, "expected a rational string \"p/q\" or an integer");
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(field, e.what());
    }
  }

  Vector row(const Json& j, std::size_t n, const std::string& field) const {
    if (!j.is_array()) fail(field, "expected an array");
    if (j.size() != n) fail(field, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
    Vector v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) v.push_back(rational(j[k], field + "[" + std::to_string(k) + "]"));
    return v;
  }

  std::vector<Vector> rows(const Json& j, std::size_t n, const std::string& field) const {
    if (!j.is_array()) fail(field, "expected an array of rows");
    std::vector<Vector> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(row(j[k], n, field + "[" + std::to_string(k) + "]"));
    return out;
  }

  Multidegree multidegree(const Json& j, int d, const std::string& field) const {
    if (!j.is_array() || j.size() != 3) fail(field, "expected [i, j, l]");
    Multidegree m{static_cast<int>(integer(j[0], field + "[0]")), static_cast<int>(integer(j[1], field + "[1]")),
                  static_cast<int>(integer(j[2], field + "[2]"))};
    if (!m.nonnegative() || m.total() != d) fail(field, to_string(m) + " is not a multidegree of degree " + std::to_string(d));
    return m;
  }

 private:
  std::string source_;
};

}  // namespace

Json to_json(const Instance& inst) { return instance_body(inst.skeleton, inst.r, &inst.V, inst.provenance); }

Json skeleton_json(const Skeleton& s, int r) { return instance_body(s, r, nullptr, {}); }

Instance instance_from_json(const Json& j, const std::string& source) {
  const Reader rd(source);
  if (!j.is_object()) rd.fail("", "expected a JSON object");
  const long d = rd.integer(rd.member(j, "d", ""), "d");
  const long r = rd.integer(rd.member(j, "r", ""), "r");
  if (d < 0 || d > 64) rd.fail("d", "degree out of range");
  if (r < 0) rd.fail("r", "must be nonnegative");

  Instance inst;
  inst.r = static_cast<int>(r);
  inst.skeleton = make_skeleton_shell(static_cast<int>(d));
  Skeleton& s = inst.skeleton;
  const std::size_t n = s.grid.size();

  if (auto it = j.find("provenance"); it != j.end()) {
    if (!it->is_object()) rd.fail("provenance", "expected an object");
    for (const auto& [k, v] : it->items()) inst.provenance.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
  }

  const Json& mds = rd.member(j, "multidegrees", "");
  if (!mds.is_array() || mds.size() != n)
    rd.fail("multidegrees", "expected " + std::to_string(n) + " multidegrees in grid order");
  for (std::size_t k = 0; k < n; ++k) {
    const std::string f = "multidegrees[" + std::to_string(k) + "]";
    if (rd.multidegree(mds[k], s.d, f) != s.grid[k]) rd.fail(f, "expected " + to_string(s.grid[k]) + " (grid order)");
  }

  const Json& dims = rd.member(j, "ambient_dim", "");
  for (std::size_t k = 0; k < n; ++k) {
    const std::string kk = key(s.grid[k]);
    const long v = rd.integer(rd.member(dims, kk, "ambient_dim"), "ambient_dim." + kk);
    if (v < 0) rd.fail("ambient_dim." + kk, "must be nonnegative");
    s.ambient_dim[k] = static_cast<std::size_t>(v);
  }

  const Json& maps = rd.member(j, "maps", "");
  if (!maps.is_array()) rd.fail("maps", "expected an array");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const std::string f = "maps[" + std::to_string(k) + "]";
    const Multidegree from = rd.multidegree(rd.member(maps[k], "from", f), s.d, f + ".from");
    const Multidegree to = rd.multidegree(rd.member(maps[k], "to", f), s.d, f + ".to");
    const auto dir = direction_between(from, to);
    if (!dir) rd.fail(f, to_string(from) + " and " + to_string(to) + " are not adjacent");
    auto& slot = s.maps[s.index(from)][static_cast<std::size_t>(*dir)];
    if (slot) rd.fail(f, "duplicate map " + to_string(from) + " -> " + to_string(to));
    const auto rows = rd.rows(rd.member(maps[k], "matrix", f), s.dim(to), f + ".matrix");
    if (rows.size() != s.dim(from))
      rd.fail(f + ".matrix", "expected " + std::to_string(s.dim(from)) + " rows, found " + std::to_string(rows.size()));
    slot = Matrix::from_rows(rows, s.dim(to));
  }
  for (const auto& e : s.edges())
    if (!s.find_map(e.from, e.dir)) rd.fail("maps", "missing map " + to_string(e.from) + " -> " + to_string(e.to));

  const Json& van = rd.member(j, "vanishing", "");
  for (std::size_t k = 0; k < n; ++k) {
    const std::string kk = key(s.grid[k]);
    const Json& c = rd.member(van, kk, "vanishing");
    for (int q = 1; q <= 3; ++q) {
      const std::string name = "X" + std::to_string(q);
      const std::string f = "vanishing." + kk + "." + name;
      s.vanishing[k][q - 1] = Subspace::span(s.ambient_dim[k], rd.rows(rd.member(c, name, "vanishing." + kk), s.ambient_dim[k], f));
    }
  }

  const Json& vs = rd.member(j, "V", "");
  inst.V.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::string kk = key(s.grid[k]);
    inst.V[k] = Subspace::span(s.ambient_dim[k], rd.rows(rd.member(vs, kk, "V"), s.ambient_dim[k], "V." + kk));
  }
  return inst;
}

Json to_json(const SimpleCertificate& cert) {
  Json support = Json::array();
  Json sections = Json::object();
  for (std::size_t a = 0; a < cert.support.size(); ++a) {
    support.push_back(to_json(cert.support[a]));
    sections[key(cert.support[a])] = to_json(cert.sections[a]);
  }
  return Json{{"support", support}, {"sections", sections}};
}

SimpleCertificate certificate_from_json(const Json& j, int d, const std::string& source) {
  const Reader rd(source);
  const Json& support = rd.member(j, "support", "");
  const Json& sections = rd.member(j, "sections", "");
  if (!support.is_array()) rd.fail("support", "expected an array");
  SimpleCertificate cert;
  std::set<Multidegree> seen;
  for (std::size_t k = 0; k < support.size(); ++k) {
    const std::string f = "support[" + std::to_string(k) + "]";
    const Multidegree m = rd.multidegree(support[k], d, f);
    if (!seen.insert(m).second) rd.fail(f, "duplicate support multidegree");
    cert.support.push_back(m);
    const Json& rows = rd.member(sections, key(m), "sections");
    if (!rows.is_array()) rd.fail("sections." + key(m), "expected an array of rows");
    std::vector<Vector> secs;
    for (std::size_t a = 0; a < rows.size(); ++a) {
      const std::string g = "sections." + key(m) + "[" + std::to_string(a) + "]";
      if (!rows[a].is_array()) rd.fail(g, "expected an array");
      secs.push_back(rd.row(rows[a], rows[a].size(), g));
    }
    cert.sections.push_back(std::move(secs));
  }
  return cert;
}

Json to_json(const ValidationReport& rep) {
  Json vs = Json::array();
  for (const auto& v : rep.violations) {
    Json e{{"kind", v.kind}, {"where", v.where}};
    if (v.at) e["at"] = to_json(*v.at);
    if (v.edge) e["edge"] = to_json(*v.edge);
    if (!v.witness.empty()) e["witness"] = to_json(v.witness);
    vs.push_back(e);
  }
  return Json{{"ok", rep.ok()},
              {"dims_ok", rep.dims_ok},
              {"linking_ok", rep.linking_ok},
              {"laws_ok", rep.laws_ok},
              {"violations", vs}};
}

Json to_json(const ExactnessReport& rep) {
  Json failing = Json::array();
  for (const auto& e : rep.edges) {
    if (e.exact) continue;
    Json f = to_json(e.edge);
    f["image_dim"] = e.image.dim();
    f["constraint_dim"] = e.constraint.dim();
    f["witness"] = to_json(e.witness);
    failing.push_back(f);
  }
  return Json{{"exact", rep.exact}, {"edges_checked", rep.edges.size()}, {"failures", failing}};
}

Json to_json(const GridReport& rep) {
  Json cells = Json::array();
  for (const auto& c : rep.cells)
    cells.push_back(Json{{"multidegree", to_json(c.md)},
                         {"dim_X1", c.dim_x1},
                         {"dim_X2", c.dim_x2},
                         {"dim_X3", c.dim_x3},
                         {"dim_X1+X2", c.dim_x12},
                         {"dim_X1+X3", c.dim_x13},
                         {"dim_X2+X3", c.dim_x23},
                         {"dim_X1+X2+X3", c.dim_x123},
                         {"codim", c.codim},
                         {"distributive", c.distributive},
                         {"distributivity_symmetric", c.symmetric}});
  Json out{{"d", rep.d},
           {"r", rep.r},
           {"cells", cells},
           {"codim_sum", rep.codim_sum},
           {"exact", rep.exact},
           {"all_distributive", rep.all_distributive},
           {"distributivity_symmetric", rep.distributivity_symmetric}};
  out["simple"] = rep.simple ? Json(*rep.simple) : Json(nullptr);
  out["inequality_holds"] = rep.inequality_holds ? Json(*rep.inequality_holds) : Json(nullptr);
  out["equivalence_holds"] = rep.equivalence_holds ? Json(*rep.equivalence_holds) : Json(nullptr);
  return out;
}

Json to_json(const IdentityResult& res) {
  Json out{{"name", res.name}, {"at", to_json(res.at)}};
  if (res.partner) out["partner"] = to_json(*res.partner);
  out["outcome"] = to_string(res.outcome);
  out["lhs"] = res.lhs;
  out["rhs"] = res.rhs;
  if (!res.detail.empty()) out["detail"] = res.detail;
  return out;
}

Json to_json(const std::vector<IdentityResult>& results) {
  std::size_t pass = 0, fail = 0, skipped = 0;
  Json items = Json::array();
  for (const auto& r : results) {
    if (r.outcome == Outcome::Pass) ++pass;
    if (r.outcome == Outcome::Fail) ++fail;
    if (r.outcome == Outcome::HypothesisNotMet) ++skipped;
    items.push_back(to_json(r));
  }
  return Json{{"pass", pass}, {"fail", fail}, {"hypothesis_not_met", skipped}, {"results", items}};
}

Json to_json(const LawReport& rep) {
  Json vs = Json::array();
  for (const auto& v : rep.violations) vs.push_back(Json{{"law", v.law}, {"where", v.where}, {"witness", to_json(v.witness)}});
  return Json{{"ok", rep.ok()},
              {"edges_checked", rep.edges_checked},
              {"squares_checked", rep.squares_checked},
              {"violations", vs}};
}

Json to_json(const CertificateVerdict& v) {
  Json out{{"ok", v.ok}};
  if (v.first_failure) out["first_failure"] = to_json(*v.first_failure);
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw FormatError(source, "", line, col, msg);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path, "", 0, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path, "", 0, 0, "cannot open file for writing");
  out << text;
  if (!out) throw FormatError(path, "", 0, 0, "write failed");
}

Instance read_instance(const std::string& path) { return instance_from_json(read_json_file(path), path); }

SimpleCertificate read_certificate(const std::string& path, int d) {
  return certificate_from_json(read_json_file(path), d, path);
}

}  // namespace lsl
