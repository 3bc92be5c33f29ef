#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lsl/identities.hpp"
#include "lsl/instance.hpp"
#include "lsl/series.hpp"
#include "lsl/simple_basis.hpp"

namespace lsl {

using Json = nlohmann::ordered_json;

// Malformed input. field is a JSON path such as "maps[3].matrix"; line and
// column are set for syntax errors (1-based, 0 when unknown).
struct FormatError : std::runtime_error {
  FormatError(std::string source, std::string field, std::size_t line, std::size_t column, const std::string& msg);
  std::string source;
  std::string field;
  std::size_t line = 0;
  std::size_t column = 0;
};

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const std::vector<Vector>& rows);
Json to_json(const Matrix& m);
Json to_json(const Multidegree& m);
Json to_json(const Edge& e);

// Instance file; V is written empty for a bare skeleton.
Json to_json(const Instance& inst);
Json skeleton_json(const Skeleton& s, int r);
Instance instance_from_json(const Json& j, const std::string& source = "<input>");

Json to_json(const SimpleCertificate& cert);
SimpleCertificate certificate_from_json(const Json& j, int d, const std::string& source = "<input>");

Json to_json(const ValidationReport& rep);
Json to_json(const ExactnessReport& rep);
Json to_json(const GridReport& rep);
Json to_json(const IdentityResult& res);
Json to_json(const std::vector<IdentityResult>& results);
Json to_json(const LawReport& rep);
Json to_json(const CertificateVerdict& v);

// Two-space indentation plus a trailing newline.
std::string dump(const Json& j);

// Parse text; syntax errors become FormatError with line and column.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Instance read_instance(const std::string& path);
SimpleCertificate read_certificate(const std::string& path, int d);

}  // namespace lsl
