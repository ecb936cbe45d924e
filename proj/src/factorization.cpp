#include "lambert/factorization.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace lambert {

UnitLowerTriangular::UnitLowerTriangular(std::int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
  packed_.resize(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2);
  for (std::int64_t i = 1; i <= n; ++i) entry(i, i) = 1;
}

std::size_t UnitLowerTriangular::index(std::int64_t row, std::int64_t col) const {
  if (row < 1 || row > n_ || col < 1 || col > row) {
    throw std::out_of_range("triangular entry (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") outside matrix of size " +
                            std::to_string(n_));
  }
  return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(row) / 2 +
         static_cast<std::size_t>(col) - 1;
}

BigInt& UnitLowerTriangular::entry(std::int64_t row, std::int64_t col) {
  return packed_[index(row, col)];
}

const BigInt& UnitLowerTriangular::entry(std::int64_t row, std::int64_t col) const {
  return packed_[index(row, col)];
}

BigInt UnitLowerTriangular::at(std::int64_t row, std::int64_t col) const {
  if (row < 1 || row > n_ || col < 1 || col > n_) {
    throw std::out_of_range("matrix position (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") outside matrix of size " +
                            std::to_string(n_));
  }
  if (col > row) return BigInt(0);
  return entry(row, col);
}

bool UnitLowerTriangular::is_identity() const {
  for (std::int64_t r = 1; r <= n_; ++r) {
    if (entry(r, r) != 1) return false;
    for (std::int64_t c = 1; c < r; ++c) {
      if (!entry(r, c).is_zero()) return false;
    }
  }
  return true;
}

UnitLowerTriangular multiply(const UnitLowerTriangular& a, const UnitLowerTriangular& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("matrix product requires equal sizes");
  }
  const std::int64_t n = a.size();
  UnitLowerTriangular out(n);
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = 1; j <= i; ++j) {
      BigInt acc = 0;
      for (std::int64_t k = j; k <= i; ++k) acc += a.entry(i, k) * b.entry(k, j);
      out.entry(i, j) = std::move(acc);
    }
  }
  return out;
}

std::int64_t entry_a(std::int64_t n, std::int64_t i) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("entry_a: need 1 <= i <= n");
  std::int64_t acc = 0;
  for (std::int64_t t = i; t <= n; t += i) acc += euler_coefficient(n - t);
  return acc;
}

UnitLowerTriangular build_A(std::int64_t n) {
  UnitLowerTriangular m(n);
  for (std::int64_t r = 1; r <= n; ++r) {
    for (std::int64_t c = 1; c < r; ++c) m.entry(r, c) = entry_a(r, c);
  }
  return m;
}

UnitLowerTriangular build_A_inverse(std::int64_t n) {
  UnitLowerTriangular m(n);
  for (std::int64_t r = 1; r <= n; ++r) {
    // mu(r/d) is shared across the row; compute it once per divisor.
    std::vector<std::pair<std::int64_t, int>> divisor_mu;
    for (std::int64_t d : divisors(r)) divisor_mu.emplace_back(d, moebius(r / d));
    for (std::int64_t c = 1; c < r; ++c) {
      BigInt acc = 0;
      for (const auto& [d, mu] : divisor_mu) {
        if (d >= c && mu != 0) acc += mu * partition_number(d - c);
      }
      m.entry(r, c) = std::move(acc);
    }
  }
  return m;
}

BVector compute_B(const ArithmeticFn& g, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("compute_B: n must be positive");
  BVector out;
  out.values.reserve(static_cast<std::size_t>(n));
  for (std::int64_t m = 0; m < n; ++m) {
    // Every argument m+1-omega stays >= 1 because omega <= m.
    BigInt v = g(m + 1);
    for (const PentagonalTerm& t : enumerate_pentagonal(m)) {
      v += t.sign() * g(m + 1 - t.omega);
    }
    out.values.push_back(std::move(v));
  }
  return out;
}

BVector compute_B(const FunctionPair& pair, std::int64_t n) {
  return compute_B([&pair](std::int64_t m) { return pair.g(m); }, n);
}

std::vector<BigInt> recover_f(const ArithmeticFn& g, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("recover_f: n must be positive");
  const BVector b = compute_B(g, n);

  // Route 1: multiply by the explicit inverse.
  const UnitLowerTriangular inverse = build_A_inverse(n);
  std::vector<BigInt> by_inverse(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) {
    BigInt acc = 0;
    for (std::int64_t j = 1; j <= i; ++j) {
      acc += inverse.entry(i, j) * b.values[static_cast<std::size_t>(j) - 1];
    }
    by_inverse[static_cast<std::size_t>(i) - 1] = std::move(acc);
  }

  // Route 2: forward substitution against the factor matrix itself.
  const UnitLowerTriangular a = build_A(n);
  std::vector<BigInt> by_substitution(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) {
    BigInt acc = b.values[static_cast<std::size_t>(i) - 1];
    for (std::int64_t j = 1; j < i; ++j) {
      acc -= a.entry(i, j) * by_substitution[static_cast<std::size_t>(j) - 1];
    }
    by_substitution[static_cast<std::size_t>(i) - 1] = std::move(acc);
  }

  for (std::size_t i = 0; i < by_inverse.size(); ++i) {
    if (by_inverse[i] != by_substitution[i]) {
      throw InconsistencyError(
          "recover_f: inverse-multiply and forward-substitution solves disagree at n = " +
          std::to_string(i + 1) + " (" + by_inverse[i].str() + " vs " +
          by_substitution[i].str() + ")");
    }
  }
  return by_substitution;
}

std::vector<BigInt> recover_f(const FunctionPair& pair, std::int64_t n) {
  return recover_f([&pair](std::int64_t m) { return pair.g(m); }, n);
}

AfSequence a_f_sequence(const FunctionPair& pair, std::int64_t max_n) {
  if (max_n < 0) throw std::invalid_argument("a_f_sequence: max_n must be nonnegative");
  AfSequence seq;
  seq.values.resize(static_cast<std::size_t>(max_n) + 1);
  seq.values[0] = 1;
  std::vector<BigInt> f(static_cast<std::size_t>(max_n) + 1);
  for (std::int64_t i = 1; i <= max_n; ++i) f[static_cast<std::size_t>(i)] = pair.f(i);
  for (std::int64_t n = 1; n <= max_n; ++n) {
    BigInt acc = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
      if (f[static_cast<std::size_t>(i)].is_zero()) continue;
      const std::int64_t a = entry_a(n, i);
      if (a != 0) acc += a * f[static_cast<std::size_t>(i)];
    }
    seq.values[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return seq;
}

std::vector<BigInt> g_recurrence(const FunctionPair& pair, std::int64_t max_n) {
  if (max_n < 1) throw std::invalid_argument("g_recurrence: max_n must be positive");
  const AfSequence a = a_f_sequence(pair, max_n);
  // g[t] for t = 0..max_n with g[0] unused (kept zero).
  std::vector<BigInt> g(static_cast<std::size_t>(max_n) + 1);
  for (std::int64_t t = 1; t <= max_n; ++t) {
    BigInt acc = a.values[static_cast<std::size_t>(t)];
    for (const PentagonalTerm& term : enumerate_pentagonal(t - 1)) {
      // (-1)^{k+1} = -sign()
      acc -= term.sign() * g[static_cast<std::size_t>(t - term.omega)];
    }
    g[static_cast<std::size_t>(t)] = std::move(acc);
  }
  return {g.begin() + 1, g.end()};
}

AverageOrderTable sigma_recurrence(const FunctionPair& pair, std::int64_t max_x,
                                   AfSumPlacement placement) {
  if (max_x < 1) throw std::invalid_argument("sigma_recurrence: max_x must be positive");
  const AfSequence a = a_f_sequence(pair, max_x);
  std::vector<BigInt> prefix(static_cast<std::size_t>(max_x) + 1);
  for (std::int64_t t = 1; t <= max_x; ++t) {
    prefix[static_cast<std::size_t>(t)] =
        prefix[static_cast<std::size_t>(t) - 1] + a.values[static_cast<std::size_t>(t)];
  }
  AverageOrderTable table;
  table.values.resize(static_cast<std::size_t>(max_x) + 1);
  for (std::int64_t x = 1; x <= max_x; ++x) {
    BigInt acc = 0;
    for (const PentagonalTerm& term : enumerate_pentagonal(x - 1)) {
      acc -= term.sign() * table.values[static_cast<std::size_t>(x - term.omega)];
    }
    if (placement == AfSumPlacement::outside) {
      acc += prefix[static_cast<std::size_t>(x)];
    } else {
      acc += 2 * (prefix[static_cast<std::size_t>(x)] - a.values[1]);
    }
    table.values[static_cast<std::size_t>(x)] = std::move(acc);
  }
  return table;
}

std::int64_t closed_B_mu(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("closed_B_mu: m must be nonnegative");
  std::int64_t v = (m == 0) ? 1 : 0;
  for (int b : {-1, +1}) {
    const std::int64_t kmax = pentagonal_bound(m, b);
    for (std::int64_t k = 1; k <= kmax; ++k) {
      if (m + 1 - pentagonal_number(k, b) == 1) v += (k & 1) ? -1 : 1;
    }
  }
  return v;
}

std::int64_t closed_B_phi(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("closed_B_phi: m must be nonnegative");
  const std::int64_t s =
      static_cast<std::int64_t>(isqrt_u64(24 * static_cast<std::uint64_t>(m) + 1));
  const std::int64_t u1 = (s + 1) / 6;  // pentagonal_bound(m, -1)
  const std::int64_t u2 = (s - 1) / 6;  // pentagonal_bound(m, +1)
  const std::int64_t e1 = (u1 & 1) ? -1 : 1;
  const std::int64_t e2 = (u2 & 1) ? -1 : 1;
  const std::int64_t bracket = 8 - 5 * e1 - 4 * (-2 + e1 + e2) * m +
                               2 * e1 * u1 * (3 * u1 + 2) +
                               e2 * (6 * u2 * u2 + 8 * u2 - 3);
  if (bracket % 8 != 0) {
    throw InconsistencyError("closed_B_phi: bracket not divisible by 8 at m = " +
                             std::to_string(m));
  }
  return m + 1 - bracket / 8;
}

std::int64_t closed_B_lambda(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("closed_B_lambda: m must be nonnegative");
  std::int64_t v = is_positive_square(m + 1) ? 1 : 0;
  for (int b : {-1, +1}) {
    const std::int64_t kmax = pentagonal_bound(m, b);
    for (std::int64_t k = 1; k <= kmax; ++k) {
      if (is_positive_square(m + 1 - pentagonal_number(k, b))) {
        v += (k & 1) ? -1 : 1;
      }
    }
  }
  return v;
}

std::vector<std::int64_t> q_polynomial(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("q_polynomial: n must be positive");
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n) + 1, 0);
  coeffs[0] = 1;
  for (const PentagonalTerm& term : enumerate_pentagonal(n)) {
    // -(-1)^k, the negated product-expansion coefficient
    coeffs[static_cast<std::size_t>(term.omega)] = -term.sign();
  }
  return coeffs;
}

std::int64_t distinct_partition_stat(std::int64_t n, std::int64_t i) {
  if (n < 1 || i < 1 || i > n) {
    throw std::invalid_argument("distinct_partition_stat: need 1 <= i <= n");
  }
  std::int64_t total = 0;
  // Depth-first over partitions into strictly decreasing parts; a partition
  // counts only if it contains i, with weight (-1)^{#parts + 1}.
  auto recurse = [&](auto&& self, std::int64_t remaining, std::int64_t max_part,
                     bool odd_count, bool contains_i) -> void {
    if (remaining == 0) {
      if (contains_i) total += odd_count ? 1 : -1;
      return;
    }
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
      self(self, remaining - part, part - 1, !odd_count, contains_i || part == i);
    }
  };
  recurse(recurse, n, n, false, false);
  return total;
}

}  // namespace lambert
