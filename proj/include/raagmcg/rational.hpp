#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace raagmcg {

using Rational = boost::multiprecision::cpp_rational;

/// "126", "-7/2"
std::string to_string(const Rational& q);

/// Accepts integers, decimals ("6.25") and fractions ("13/4"). Throws
/// ParseError.
Rational parse_rational(std::string_view text);

/// JSON number: an integer when q is integral and fits in 64 bits, otherwise
/// the nearest double.
nlohmann::ordered_json to_json_number(const Rational& q);

}  // namespace raagmcg
