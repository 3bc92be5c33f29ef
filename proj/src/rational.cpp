#include "lsl/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsl {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("invalid rational \"" + std::string(text) + "\"");
  }
  if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
    throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  }
  Rational q(std::string(text), 10);
  q.canonicalize();
  return q;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

}  // namespace lsl
