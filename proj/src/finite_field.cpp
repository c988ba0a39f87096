#include "turan/finite_field.hpp"

#include <cmath>
#include <string>

#include "turan/error.hpp"

namespace turan {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

namespace {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k > 0) out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= kLimit || !is_prime(p))
    fail(ErrorKind::invalid_params,
         "p = " + std::to_string(p) + " is not an odd prime below 2^31");
  factors_ = factorize(p - 1);
}

Residue mod_pow(Residue base, std::uint64_t exp, const PrimeModulus& p) {
  Residue result = 1;
  base = p.reduce(base);
  while (exp > 0) {
    if (exp & 1U) result = p.mul(result, base);
    base = p.mul(base, base);
    exp >>= 1U;
  }
  return result;
}

Residue mod_inverse(Residue a, const PrimeModulus& p) {
  if (p.reduce(a) == 0) fail(ErrorKind::invalid_params, "zero has no inverse");
  return mod_pow(a, p.value() - 2, p);
}

PrimeModulus find_congruent_prime(std::uint64_t m, std::uint64_t t, std::uint64_t ceiling) {
  if (m < 3) fail(ErrorKind::invalid_params, "prime search start m must be >= 3");
  if (t < 2 || t % 2 != 0) fail(ErrorKind::invalid_params, "t must be even and >= 2");
  ceiling = std::min(ceiling, PrimeModulus::kLimit);
  const std::uint64_t step = t - 1;
  // first candidate q >= m with q ≡ 1 (mod t-1)
  std::uint64_t q = m + (step - (m - 1) % step) % step;
  for (; q < ceiling; q += step)
    if (q % 2 == 1 && is_prime(q)) return PrimeModulus(q);
  fail(ErrorKind::cap_exceeded, "no prime p >= " + std::to_string(m) + " with (t-1) | (p-1) below " +
                                    std::to_string(ceiling));
}

bool is_primitive_root(Residue g, const PrimeModulus& p) {
  g = p.reduce(g);
  if (g == 0) return false;
  for (const auto& [q, k] : p.order_factors())
    if (mod_pow(g, p.order() / q, p) == 1) return false;
  return true;
}

PrimitiveRoot::PrimitiveRoot(Residue g, const PrimeModulus& p) : g_(g) {
  if (g < 1 || g >= p.value() || !is_primitive_root(g, p))
    fail(ErrorKind::invalid_params,
         std::to_string(g) + " is not a primitive root mod " + std::to_string(p.value()));
}

PrimitiveRoot smallest_primitive_root(const PrimeModulus& p) {
  for (Residue g = 2; g < p.value(); ++g)
    if (is_primitive_root(g, p)) return PrimitiveRoot(g, p);
  // unreachable: F_p^* is cyclic
  fail(ErrorKind::invalid_params, "no primitive root found");
}

DiscreteLog::DiscreteLog(const PrimitiveRoot& g, const PrimeModulus& p) : p_(p), g_(g.value()) {
  if (p.value() < kLinearScanBelow) return;
  step_ = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(p.order()))));
  baby_.reserve(step_);
  Residue cur = 1;
  for (std::uint64_t j = 0; j < step_; ++j) {
    baby_.try_emplace(cur, j);
    cur = p_.mul(cur, g_);
  }
  giant_ = mod_inverse(mod_pow(g_, step_, p_), p_);
}

std::uint64_t DiscreteLog::operator()(Residue f) const {
  f = p_.reduce(f);
  if (f == 0) fail(ErrorKind::invalid_params, "discrete log of zero is undefined");
  const std::uint64_t k = step_ == 0 ? solve_linear(f) : solve_bsgs(f);
  return k == 0 ? p_.order() : k;
}

std::uint64_t DiscreteLog::solve_linear(Residue f) const {
  Residue cur = g_;
  for (std::uint64_t k = 1; k <= p_.order(); ++k) {
    if (cur == f) return k;
    cur = p_.mul(cur, g_);
  }
  fail(ErrorKind::invalid_params, "element outside the generated group");
}

std::uint64_t DiscreteLog::solve_bsgs(Residue f) const {
  Residue gamma = f;
  for (std::uint64_t i = 0; i <= step_; ++i) {
    if (auto it = baby_.find(gamma); it != baby_.end())
      return (i * step_ + it->second) % p_.order();
    gamma = p_.mul(gamma, giant_);
  }
  fail(ErrorKind::invalid_params, "element outside the generated group");
}

std::uint64_t discrete_log(Residue f, const PrimitiveRoot& g, const PrimeModulus& p) {
  return DiscreteLog(g, p)(f);
}

}  // namespace turan
