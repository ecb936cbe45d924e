#pragma once

#include "lambert/bigint.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambert {

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Canonical factorization with primes ascending; factorize(1) == {}.
std::vector<PrimePower> factorize(std::int64_t n);

// All divisors of n, ascending; starts at 1, ends at n.
std::vector<std::int64_t> divisors(std::int64_t n);

// Moebius function: 0 on a squareful n, otherwise (-1)^{#prime factors}.
int moebius(std::int64_t n);

// Euler totient.
std::int64_t euler_phi(std::int64_t n);

// Liouville function (-1)^{Omega(n)} with Omega counting multiplicity.
int liouville_lambda(std::int64_t n);

// sum of d^alpha over divisors d of n, alpha >= 0, computed multiplicatively
// from the factorization.
BigInt sigma_alpha(std::int64_t n, std::int64_t alpha);

using ArithmeticFn = std::function<BigInt(std::int64_t)>;

// sum_{d | n} f(d) by direct divisor enumeration; the ground truth against
// which every derived g is checked.
BigInt divisor_sum_transform(const ArithmeticFn& f, std::int64_t n);

class UnknownPairError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A named arithmetic function f bundled with its divisor-sum partner
// g(n) = sum_{d|n} f(d).  Both sides evaluate to 0 for arguments below 1 so
// shifted recurrences can probe out-of-domain points safely.
class FunctionPair {
 public:
  enum class Origin { builtin, tabulated };

  FunctionPair(std::string name, ArithmeticFn f, ArithmeticFn g, Origin origin);

  // Tabulated pairs carry explicit values for n = 1..N; the missing side is
  // derived (g by divisor sums, f by Moebius inversion).  Queries beyond N
  // throw std::out_of_range.
  static FunctionPair from_f_values(std::string name, std::vector<BigInt> values);
  static FunctionPair from_g_values(std::string name, std::vector<BigInt> values);

  const std::string& name() const { return name_; }
  Origin origin() const { return origin_; }

  BigInt f(std::int64_t n) const;
  BigInt g(std::int64_t n) const;

 private:
  std::string name_;
  ArithmeticFn f_;
  ArithmeticFn g_;
  Origin origin_;
};

// The four classical pairs: (mu, [n == 1]), (phi, n), (n^alpha, sigma_alpha),
// (lambda, [n is a positive square]).
FunctionPair mu_pair();
FunctionPair phi_pair();
FunctionPair sigma_pair(std::int64_t alpha);
FunctionPair lambda_pair();

// All four, sigma taken at the supplied alpha.
std::vector<FunctionPair> builtin_pairs(std::int64_t alpha = 1);

// Lookup by CLI name ("mu", "phi", "sigma", "lambda"); throws
// UnknownPairError for anything else.
FunctionPair find_builtin(const std::string& name, std::int64_t alpha = 1);

}  // namespace lambert
