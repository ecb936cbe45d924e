#include "lambert/arithmetic.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <utility>

namespace lambert {

namespace {

// Process-wide sieve of primes, extended with doubling as callers ask for
// larger limits.  Synchronized so factorize is safe from multiple threads.
class PrimeCache {
 public:
  std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
    std::lock_guard<std::mutex> lock(mu_);
    if (limit > sieved_to_) extend(limit);
    std::vector<std::int64_t> out;
    for (std::int64_t p : primes_) {
      if (p > limit) break;
      out.push_back(p);
    }
    return out;
  }

 private:
  void extend(std::int64_t limit) {
    std::int64_t target = std::max<std::int64_t>({limit, sieved_to_ * 2, 1024});
    std::vector<bool> composite(static_cast<std::size_t>(target) + 1, false);
    primes_.clear();
    for (std::int64_t i = 2; i <= target; ++i) {
      if (composite[static_cast<std::size_t>(i)]) continue;
      primes_.push_back(i);
      for (std::int64_t j = i * i; j <= target; j += i) {
        composite[static_cast<std::size_t>(j)] = true;
      }
    }
    sieved_to_ = target;
  }

  std::mutex mu_;
  std::vector<std::int64_t> primes_;
  std::int64_t sieved_to_ = 0;
};

PrimeCache& prime_cache() {
  static PrimeCache cache;
  return cache;
}

}  // namespace

std::vector<PrimePower> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  if (n == 1) return out;
  std::int64_t rest = n;
  const std::int64_t root =
      static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(n)));
  for (std::int64_t p : prime_cache().primes_up_to(root)) {
    if (p * p > rest) break;
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (const auto& pp : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int j = 1; j <= pp.exponent; ++j) {
      pk *= pp.prime;
      for (std::size_t t = 0; t < base; ++t) out.push_back(out[t] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int moebius(std::int64_t n) {
  int sign = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (const auto& pp : factorize(n)) result -= result / pp.prime;
  return result;
}

int liouville_lambda(std::int64_t n) {
  int total = 0;
  for (const auto& pp : factorize(n)) total += pp.exponent;
  return (total & 1) ? -1 : 1;
}

BigInt sigma_alpha(std::int64_t n, std::int64_t alpha) {
  if (alpha < 0) throw std::invalid_argument("sigma_alpha: alpha must be nonnegative");
  BigInt result = 1;
  for (const auto& pp : factorize(n)) {
    // 1 + p^alpha + p^{2 alpha} + ... + p^{e alpha}
    const BigInt pa = boost::multiprecision::pow(BigInt(pp.prime),
                                                 static_cast<unsigned>(alpha));
    BigInt term = 1;
    BigInt power = 1;
    for (int j = 1; j <= pp.exponent; ++j) {
      power *= pa;
      term += power;
    }
    result *= term;
  }
  return result;
}

BigInt divisor_sum_transform(const ArithmeticFn& f, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisor_sum_transform: n must be positive");
  BigInt acc = 0;
  for (std::int64_t d : divisors(n)) acc += f(d);
  return acc;
}

FunctionPair::FunctionPair(std::string name, ArithmeticFn f, ArithmeticFn g, Origin origin)
    : name_(std::move(name)), f_(std::move(f)), g_(std::move(g)), origin_(origin) {}

BigInt FunctionPair::f(std::int64_t n) const { return n < 1 ? BigInt(0) : f_(n); }

BigInt FunctionPair::g(std::int64_t n) const { return n < 1 ? BigInt(0) : g_(n); }

FunctionPair FunctionPair::from_f_values(std::string name, std::vector<BigInt> values) {
  auto table = std::make_shared<const std::vector<BigInt>>(std::move(values));
  ArithmeticFn f = [table](std::int64_t n) -> BigInt {
    if (n < 1 || static_cast<std::size_t>(n) > table->size()) {
      throw std::out_of_range("tabulated f queried beyond provided range");
    }
    return (*table)[static_cast<std::size_t>(n) - 1];
  };
  ArithmeticFn g = [f](std::int64_t n) { return divisor_sum_transform(f, n); };
  return FunctionPair(std::move(name), std::move(f), std::move(g), Origin::tabulated);
}

FunctionPair FunctionPair::from_g_values(std::string name, std::vector<BigInt> values) {
  auto table = std::make_shared<const std::vector<BigInt>>(std::move(values));
  ArithmeticFn g = [table](std::int64_t n) -> BigInt {
    if (n < 1 || static_cast<std::size_t>(n) > table->size()) {
      throw std::out_of_range("tabulated g queried beyond provided range");
    }
    return (*table)[static_cast<std::size_t>(n) - 1];
  };
  // Moebius inversion: f(n) = sum_{d|n} mu(n/d) g(d).
  ArithmeticFn f = [g](std::int64_t n) {
    BigInt acc = 0;
    for (std::int64_t d : divisors(n)) acc += moebius(n / d) * g(d);
    return acc;
  };
  return FunctionPair(std::move(name), std::move(f), std::move(g), Origin::tabulated);
}

FunctionPair mu_pair() {
  return FunctionPair(
      "mu", [](std::int64_t n) { return BigInt(moebius(n)); },
      [](std::int64_t n) { return BigInt(n == 1 ? 1 : 0); }, FunctionPair::Origin::builtin);
}

FunctionPair phi_pair() {
  return FunctionPair(
      "phi", [](std::int64_t n) { return BigInt(euler_phi(n)); },
      [](std::int64_t n) { return BigInt(n); }, FunctionPair::Origin::builtin);
}

FunctionPair sigma_pair(std::int64_t alpha) {
  if (alpha < 0) throw std::invalid_argument("sigma_pair: alpha must be nonnegative");
  return FunctionPair(
      "sigma",
      [alpha](std::int64_t n) -> BigInt {
        return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(alpha));
      },
      [alpha](std::int64_t n) { return sigma_alpha(n, alpha); },
      FunctionPair::Origin::builtin);
}

FunctionPair lambda_pair() {
  return FunctionPair(
      "lambda", [](std::int64_t n) { return BigInt(liouville_lambda(n)); },
      [](std::int64_t n) { return BigInt(is_positive_square(n) ? 1 : 0); },
      FunctionPair::Origin::builtin);
}

std::vector<FunctionPair> builtin_pairs(std::int64_t alpha) {
  std::vector<FunctionPair> out;
  out.push_back(mu_pair());
  out.push_back(phi_pair());
  out.push_back(sigma_pair(alpha));
  out.push_back(lambda_pair());
  return out;
}

FunctionPair find_builtin(const std::string& name, std::int64_t alpha) {
  if (name == "mu") return mu_pair();
  if (name == "phi") return phi_pair();
  if (name == "sigma") return sigma_pair(alpha);
  if (name == "lambda") return lambda_pair();
  throw UnknownPairError("unknown pair name: " + name +
                         " (expected mu, phi, sigma, or lambda)");
}

}  // namespace lambert
