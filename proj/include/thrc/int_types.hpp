#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thrc {

// All weights, thresholds and linear-form values are exact integers of
// unbounded magnitude. Multiplicities use the same type; they are wire
// counts, never materialized as physical duplicates.
using Int = boost::multiprecision::cpp_int;

// Exact rational tradeoff parameter (epsilon). No floating point is used
// anywhere in pass logic.
using Rat = boost::rational<long long>;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Number of bits needed to write |v| in binary; bit_length(0) == 0.
inline long bit_length(const Int& v) {
  if (v == 0) return 0;
  return static_cast<long>(boost::multiprecision::msb(abs_int(v))) + 1;
}

// Ceil-log2 convention used by the block decomposition: lg2ceil(d) is the
// smallest L with 2^L >= d, and lg2ceil(1) = 1 so it is always a valid
// divisor.
inline long lg2ceil(const Int& d) {
  if (d <= 2) return 1;
  return bit_length(d - 1);
}

inline long long ceil_div_ll(long long a, long long b) {
  return (a + b - 1) / b;
}

inline bool fits_int64(const Int& v) {
  static const Int lo = Int(std::numeric_limits<long long>::min());
  static const Int hi = Int(std::numeric_limits<long long>::max());
  return v >= lo && v <= hi;
}

inline long long to_int64(const Int& v) {
  if (!fits_int64(v)) throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return static_cast<long long>(v);
}

// Parses "p/q" or a plain integer "p" as an exact rational.
inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s), 1);
  long long p = std::stoll(s.substr(0, slash));
  long long q = std::stoll(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(p, q);
}

inline std::string to_string(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace thrc
