#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ea {

// All arithmetic in the pipeline is exact. BigInt backs the fraction-free
// elimination; Rational everything else.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders r as "p/q", or plain "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else
/// (including a zero denominator).
Rational parse_rational(const std::string& token);

}  // namespace ea
