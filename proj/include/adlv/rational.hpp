#pragma once

// Exact rational scalars used for coweight coordinates and Newton points.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever under the
// C++20 rewritten-candidate rules; exact overloads take precedence.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
}  // namespace boost

namespace adlv {

using Rational = boost::rational<std::int64_t>;
using RationalVec = std::vector<Rational>;

/// Always "p/q" with q > 0, e.g. "2/1", "-1/3".
std::string to_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

inline bool is_integral(const Rational& q) { return q.denominator() == 1; }

}  // namespace adlv
