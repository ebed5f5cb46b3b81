#include "raagmcg/rational.hpp"

#include <limits>
#include <regex>

#include "raagmcg/error.hpp"

namespace raagmcg {

using boost::multiprecision::cpp_int;

std::string to_string(const Rational& q) {
  const cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  static const std::regex decimal_re(R"(([+-]?)([0-9]+)(?:\.([0-9]+))?)");
  static const std::regex fraction_re(R"(([+-]?[0-9]+)/([0-9]+))");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction_re)) {
    const cpp_int den(m[2].str());
    if (den == 0) {
      throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
    }
    auto num_text = m[1].str();
    if (num_text.front() == '+') {
      num_text.erase(0, 1);
    }
    return Rational(cpp_int(num_text), den);
  }
  if (std::regex_match(s, m, decimal_re)) {
    const std::string frac = m[3].matched ? m[3].str() : "";
    cpp_int num(m[2].str() + frac);
    cpp_int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
      den *= 10;
    }
    if (m[1].str() == "-") {
      num = -num;
    }
    return Rational(num, den);
  }
  throw Error(ErrorCode::Parse, "not a number: '" + s + "'");
}

nlohmann::ordered_json to_json_number(const Rational& q) {
  const cpp_int num = boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) == 1 &&
      num <= std::numeric_limits<std::int64_t>::max() &&
      num >= std::numeric_limits<std::int64_t>::min()) {
    return static_cast<std::int64_t>(num);
  }
  return q.convert_to<double>();
}

}  // namespace raagmcg
