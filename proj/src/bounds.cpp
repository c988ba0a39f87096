#include "turan/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "turan/error.hpp"
#include "turan/finite_field.hpp"

namespace turan {

namespace {

std::uint64_t radicand(std::uint64_t n, std::uint64_t t) { return 2 * (t - 1) * (n - 1) + 1; }

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

void check_nt(std::uint64_t n, std::uint64_t t) {
  if (n < 1) fail(ErrorKind::invalid_params, "n must be >= 1");
  if (t < 2) fail(ErrorKind::invalid_params, "t must be >= 2");
}

}  // namespace

double upper_bound(std::uint64_t n, std::uint64_t t) {
  check_nt(n, t);
  const double nd = static_cast<double>(n);
  return 1.5 * nd * (1.0 + std::sqrt(static_cast<double>(radicand(n, t))));
}

std::uint64_t upper_bound_floor(std::uint64_t n, std::uint64_t t) {
  check_nt(n, t);
  // floor((3n + 3n sqrt(r)) / 2) = floor((3n + isqrt(9 n^2 r)) / 2)
  return (3 * n + isqrt(9 * n * n * radicand(n, t))) / 2;
}

std::uint64_t lower_bound_formula(std::uint64_t p, std::uint64_t t) {
  if (t < 2 || t % 2 != 0) fail(ErrorKind::invalid_params, "t must be even and >= 2");
  if (!is_prime(p) || p < 3) fail(ErrorKind::invalid_params, "p must be an odd prime");
  if ((p - 1) % (t - 1) != 0) fail(ErrorKind::invalid_params, "(t - 1) does not divide (p - 1)");
  const std::uint64_t num = 3 * p * (p - 1) * (p - 1);
  const std::uint64_t den = 4 * (t - 1);
  if (num % den != 0) fail(ErrorKind::invalid_params, "lower bound is not integral");
  return num / den;
}

AsymptoticConstants asymptotic_constants(std::uint64_t t) {
  if (t < 2) fail(ErrorKind::invalid_params, "t must be >= 2");
  const double tm1 = static_cast<double>(t - 1);
  return {3.0 * std::sqrt(tm1 / 2.0), std::sqrt(tm1 / 6.0)};
}

BoundsReport sandwich_report(std::uint64_t t, std::uint64_t p) {
  BoundsReport r{};
  r.t = t;
  r.p = p;
  r.lower = lower_bound_formula(p, t);
  r.n = p * (p - 1) / (2 * (t - 1));
  r.upper = upper_bound(r.n, t);
  r.upper_floor = upper_bound_floor(r.n, t);
  const double n15 = std::pow(static_cast<double>(r.n), 1.5);
  r.normalized_lower = static_cast<double>(r.lower) / n15;
  r.normalized_upper = r.upper / n15;
  const auto k = asymptotic_constants(t);
  r.asymptotic_constant = k.tripartite;
  r.chi3_constant = k.chi3;
  r.sandwich_ratio = r.upper / static_cast<double>(r.lower);
  r.normalized_lower_closed_form = k.tripartite * std::sqrt(1.0 - 1.0 / static_cast<double>(p));
  r.identity_relative_error =
      std::abs(r.normalized_lower - r.normalized_lower_closed_form) / r.normalized_lower_closed_form;
  return r;
}

std::string bounds_csv_header() { return "t,p,n,lower,upper,normalized_lower,sandwich_ratio"; }

std::string bounds_csv_row(const BoundsReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%llu,%llu,%llu,%llu,%.6f,%.12f,%.12f",
                static_cast<unsigned long long>(r.t), static_cast<unsigned long long>(r.p),
                static_cast<unsigned long long>(r.n), static_cast<unsigned long long>(r.lower),
                r.upper, r.normalized_lower, r.sandwich_ratio);
  return buf;
}

}  // namespace turan
