#include "poskit/rational.hpp"

#include "poskit/errors.hpp"

#include <limits>
#include <regex>

namespace poskit {

std::string rat_to_string(const Rat& x) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw InputError("cannot parse rational number from '" + text + "' (expected 'p' or 'p/q')");
  Int num(m[1].str());
  Int den = m[2].matched ? Int(m[2].str()) : Int(1);
  if (den == 0) throw InputError("zero denominator in '" + text + "'");
  return Rat(num, den);
}

std::int64_t to_int64(const Int& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min())
    throw InternalError("integer " + value.str() + " does not fit in 64 bits");
  return value.convert_to<std::int64_t>();
}

QVec to_rational(const IVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

} // namespace poskit
