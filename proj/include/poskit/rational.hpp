#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace poskit {

// All arithmetic in poskit is exact. Integers and rationals are
// arbitrary-precision; rationals are kept in lowest terms with a positive
// denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

/// "3", "-5", "3/2" — denominator omitted when 1.
std::string rat_to_string(const Rat& x);

/// Parses "p" or "p/q" with optional sign; throws InputError otherwise.
Rat parse_rational(const std::string& text);

/// Narrows to int64, throwing InternalError on overflow.
std::int64_t to_int64(const Int& value);

QVec to_rational(const IVec& v);

} // namespace poskit
