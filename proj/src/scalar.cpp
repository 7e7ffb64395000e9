#include "cliffhopf/scalar.hpp"

#include <cctype>

namespace cliffhopf {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Scalar parse_scalar(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);

  const auto slash = trimmed.find('/');
  const auto num = trimmed.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : trimmed.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("not an exact rational: \"" + std::string(text) + "\"");

  mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  Scalar s(p, q);
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

} // namespace cliffhopf
