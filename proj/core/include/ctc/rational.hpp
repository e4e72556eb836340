#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>

namespace ctc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational value. All asynchronous-engine arithmetic is exact so that
/// epsilon-agreement checks cannot be blurred by rounding.
using Rat = boost::rational<BigInt>;

/// Accepts "p/q", an integer like "-12", or a plain decimal like "0.25".
/// Throws parse-error on anything else (including q == 0).
Rat parse_rational(const std::string& text);

/// "p/q" with q > 1, otherwise just "p". Stable across runs.
std::string format_rational(const Rat& r);

double rational_to_double(const Rat& r);

}  // namespace ctc
