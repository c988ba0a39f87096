#pragma once

#include <cstdint>
#include <string>

namespace turan {

/// (3/2) n (1 + sqrt(2(t-1)(n-1) + 1)).
double upper_bound(std::uint64_t n, std::uint64_t t);
/// Exact floor of upper_bound; exact when the radicand is a perfect square.
std::uint64_t upper_bound_floor(std::uint64_t n, std::uint64_t t);

/// 3p(p-1)^2 / (4(t-1)). Throws Error(invalid_params) unless t is even and
/// (t - 1) | (p - 1).
std::uint64_t lower_bound_formula(std::uint64_t p, std::uint64_t t);

struct AsymptoticConstants {
  double tripartite;  // 3 sqrt((t-1)/2), coefficient of n^{3/2}
  double chi3;        // sqrt((t-1)/6), coefficient of N^{3/2}, N = 3n
};

AsymptoticConstants asymptotic_constants(std::uint64_t t);

struct BoundsReport {
  std::uint64_t t;
  std::uint64_t p;
  std::uint64_t n;
  double upper;
  std::uint64_t upper_floor;
  std::uint64_t lower;
  double normalized_lower;
  double normalized_upper;
  double asymptotic_constant;
  double chi3_constant;
  double sandwich_ratio;
  /// 3 sqrt((t-1)/2) sqrt(1 - 1/p); normalized_lower must match it.
  double normalized_lower_closed_form;
  double identity_relative_error;
};

/// Throws Error(invalid_params) for an invalid (t, p) pair.
BoundsReport sandwich_report(std::uint64_t t, std::uint64_t p);

std::string bounds_csv_header();
std::string bounds_csv_row(const BoundsReport& r);

}  // namespace turan
