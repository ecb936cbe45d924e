#include "lambert/bigint.hpp"

namespace lambert {

std::uint64_t isqrt_u64(std::uint64_t x) {
  if (x < 2) return x;
  std::uint64_t s = x;
  std::uint64_t t = (s + 1) / 2;
  while (t < s) {
    s = t;
    t = (s + x / s) / 2;
  }
  return s;
}

bool is_positive_square(std::int64_t n) {
  if (n < 1) return false;
  const std::uint64_t u = static_cast<std::uint64_t>(n);
  const std::uint64_t s = isqrt_u64(u);
  return s * s == u;
}

}  // namespace lambert
