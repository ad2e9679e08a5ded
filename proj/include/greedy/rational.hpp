#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace greedy {

// Exact rational angle arithmetic. All angle bounds and thresholds in this
// library are rational numbers of degrees; everything the combine tables and
// the Table-2 style ladders produce stays dyadic, but the 1x180 sufficient
// condition divides by 7, so we keep full rationals.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// True iff r = p / 2^q for integers p, q.
inline bool is_dyadic(const Rat& r) {
    BigInt den = denominator(r);
    while (den % 2 == 0) den /= 2;
    return den == 1;
}

// Parses a decimal string such as "93.75", "-60", "120." into an exact value.
std::optional<Rat> rat_from_decimal(const std::string& text);

// Exact decimal rendering when the denominator is of the form 2^a * 5^b,
// otherwise "p/q".
std::string rat_to_string(const Rat& r);

}  // namespace greedy
