#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace turan {

using Residue = std::uint64_t;

/// Trial-division primality test. Adequate for n < 2^32.
bool is_prime(std::uint64_t n);

/// An odd prime 3 <= p < 2^31 together with the factorization of p - 1.
/// Products of two residues fit in 64 bits.
class PrimeModulus {
 public:
  static constexpr std::uint64_t kLimit = std::uint64_t{1} << 31;

  /// Throws Error(invalid_params) unless p is an odd prime below 2^31.
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  std::uint64_t order() const noexcept { return p_ - 1; }
  const std::vector<std::pair<std::uint64_t, int>>& order_factors() const noexcept {
    return factors_;
  }

  Residue mul(Residue a, Residue b) const noexcept { return (a * b) % p_; }
  Residue add(Residue a, Residue b) const noexcept { return (a + b) % p_; }
  Residue sub(Residue a, Residue b) const noexcept { return (a + p_ - b) % p_; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue reduce(std::uint64_t a) const noexcept { return a % p_; }

  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  std::uint64_t p_;
  std::vector<std::pair<std::uint64_t, int>> factors_;
};

/// base^exp mod p by square-and-multiply; exp = 0 gives 1.
Residue mod_pow(Residue base, std::uint64_t exp, const PrimeModulus& p);

/// Multiplicative inverse of a nonzero residue.
Residue mod_inverse(Residue a, const PrimeModulus& p);

/// Smallest prime p >= m with (t - 1) | (p - 1).
///
/// Requires m >= 3 and t even, t >= 2. Throws Error(cap_exceeded) if no such
/// prime exists below `ceiling` (exclusive, at most 2^31).
PrimeModulus find_congruent_prime(std::uint64_t m, std::uint64_t t,
                                  std::uint64_t ceiling = PrimeModulus::kLimit);

class PrimitiveRoot {
 public:
  /// Throws Error(invalid_params) if g does not generate F_p^*.
  PrimitiveRoot(Residue g, const PrimeModulus& p);

  Residue value() const noexcept { return g_; }

 private:
  Residue g_;
};

bool is_primitive_root(Residue g, const PrimeModulus& p);

/// Smallest g in {2, ..., p-1} of multiplicative order p - 1.
PrimitiveRoot smallest_primitive_root(const PrimeModulus& p);

/// Discrete logarithm base g over F_p^*.
///
/// Results lie in {1, ..., p-1}; log(1) is p - 1, never 0. Baby-step
/// giant-step for p >= 1000, a linear scan below that. The baby-step table is
/// built once per solver, so reuse one instance for repeated queries.
class DiscreteLog {
 public:
  static constexpr std::uint64_t kLinearScanBelow = 1000;

  DiscreteLog(const PrimitiveRoot& g, const PrimeModulus& p);

  /// Throws Error(invalid_params) for f = 0 (mod p).
  std::uint64_t operator()(Residue f) const;

 private:
  std::uint64_t solve_linear(Residue f) const;
  std::uint64_t solve_bsgs(Residue f) const;

  PrimeModulus p_;
  Residue g_;
  std::uint64_t step_ = 0;
  Residue giant_ = 1;  // g^{-step}
  std::unordered_map<Residue, std::uint64_t> baby_;
};

/// One-shot convenience over DiscreteLog.
std::uint64_t discrete_log(Residue f, const PrimitiveRoot& g, const PrimeModulus& p);

}  // namespace turan
