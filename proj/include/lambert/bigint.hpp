#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace lambert {

// Exact integer type for every quantity that can outgrow 64 bits
// (partition numbers, divisor power sums, inverse-matrix entries, ...).
using BigInt = boost::multiprecision::cpp_int;

// Largest s >= 0 with s*s <= x.  Pure integer Newton iteration; no floating
// point is used anywhere near the square-root formulas.
std::uint64_t isqrt_u64(std::uint64_t x);

// True iff n >= 1 and n == s*s for some integer s.
bool is_positive_square(std::int64_t n);

}  // namespace lambert
