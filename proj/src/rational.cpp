#include "ea/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ea {

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/" + denominator(r).str();
  }
  return s;
}

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& token) {
  size_t start = 0;
  if (!token.empty() && (token[0] == '-' || token[0] == '+')) start = 1;
  size_t slash = token.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(token, start, token.size());
  } else {
    ok = all_digits(token, start, slash) && all_digits(token, slash + 1, token.size());
  }
  if (!ok) throw std::invalid_argument("not a rational: '" + token + "'");
  BigInt num(token.substr(0, slash == std::string::npos ? token.size() : slash));
  BigInt den = 1;
  if (slash != std::string::npos) {
    den = BigInt(token.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + token + "'");
  }
  return Rational(num, den);
}

}  // namespace ea
