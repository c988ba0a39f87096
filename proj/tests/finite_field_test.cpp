#include <doctest.h>

#include <set>

#include "turan/error.hpp"
#include "turan/finite_field.hpp"

using namespace turan;

namespace {

// Independent sieve for the congruent-prime property test.
std::uint64_t next_congruent_by_sieve(std::uint64_t m, std::uint64_t t, std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  for (std::uint64_t q = std::max<std::uint64_t>(m, 3); q <= limit; ++q)
    if (!composite[q] && (q - 1) % (t - 1) == 0) return q;
  return 0;
}

std::uint64_t order_by_scan(std::uint64_t g, std::uint64_t p) {
  std::uint64_t k = 1, x = g % p;
  while (x != 1) {
    x = x * g % p;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("prime modulus validation") {
  CHECK(PrimeModulus(7).value() == 7);
  CHECK_THROWS_AS(PrimeModulus(9), Error);
  CHECK_THROWS_AS(PrimeModulus(2), Error);
  CHECK_THROWS_AS(PrimeModulus(1), Error);
  CHECK_THROWS_AS(PrimeModulus(2147483659ULL), Error);  // prime, but >= 2^31

  const PrimeModulus p(2147483647ULL);
  std::uint64_t product = 1;
  for (const auto& [q, k] : p.order_factors())
    for (int i = 0; i < k; ++i) product *= q;
  CHECK(product == p.order());
}

TEST_CASE("mod_pow") {
  CHECK(mod_pow(3, 6, PrimeModulus(7)) == 1);
  CHECK(mod_pow(2, 14, PrimeModulus(29)) == 28);
  for (std::uint64_t x = 1; x < 11; ++x) CHECK(mod_pow(x, 0, PrimeModulus(11)) == 1);

  // against repeated multiplication, 64-bit safe near the 2^31 cap
  const PrimeModulus big(2147483629ULL);
  std::uint64_t acc = 1;
  for (std::uint64_t e = 0; e < 200; ++e) {
    CHECK(mod_pow(123456789, e, big) == acc);
    acc = acc * 123456789 % big.value();
  }
}

TEST_CASE("find_congruent_prime") {
  CHECK(find_congruent_prime(3, 2).value() == 3);
  CHECK(find_congruent_prime(10, 4).value() == 13);
  CHECK(find_congruent_prime(24, 6).value() == 31);
  CHECK_THROWS_AS(find_congruent_prime(10, 3), Error);
  CHECK_THROWS_AS(find_congruent_prime(2, 2), Error);

  SUBCASE("search cap") {
    try {
      find_congruent_prime(14, 4, 19);
      FAIL("expected cap error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::cap_exceeded);
    }
  }

  SUBCASE("matches an independent sieve") {
    for (std::uint64_t t : {2, 4, 6, 8, 10, 12}) {
      for (std::uint64_t m = 3; m < 400; m += 7) {
        const auto expected = next_congruent_by_sieve(m, t, 5000);
        REQUIRE(expected != 0);
        CHECK(find_congruent_prime(m, t).value() == expected);
      }
    }
  }
}

TEST_CASE("smallest_primitive_root") {
  CHECK(smallest_primitive_root(PrimeModulus(7)).value() == 3);
  CHECK(smallest_primitive_root(PrimeModulus(3)).value() == 2);
  CHECK(smallest_primitive_root(PrimeModulus(29)).value() == 2);
  CHECK_THROWS_AS(PrimitiveRoot(2, PrimeModulus(7)), Error);

  for (std::uint64_t p = 3; p < 600; ++p) {
    if (!is_prime(p)) continue;
    const PrimeModulus fp(p);
    const auto g = smallest_primitive_root(fp).value();
    CHECK(order_by_scan(g, p) == p - 1);
    for (std::uint64_t h = 2; h < g; ++h) CHECK(order_by_scan(h, p) < p - 1);
  }
}

TEST_CASE("discrete_log examples") {
  const PrimeModulus p(7);
  const PrimitiveRoot g(3, p);
  CHECK(discrete_log(3, g, p) == 1);
  CHECK(discrete_log(6, g, p) == 3);
  CHECK(discrete_log(1, g, p) == 6);
  CHECK_THROWS_AS(discrete_log(0, g, p), Error);
  CHECK_THROWS_AS(discrete_log(7, g, p), Error);
}

TEST_CASE("discrete_log is a bijection onto 1..p-1 with mod_pow as inverse") {
  // covers both the linear-scan range and baby-step giant-step
  for (std::uint64_t p : {3, 5, 61, 997, 1009, 7919, 9973}) {
    const PrimeModulus fp(p);
    const auto g = smallest_primitive_root(fp);
    const DiscreteLog log(g, fp);
    std::set<std::uint64_t> seen;
    for (Residue f = 1; f < p; ++f) {
      const auto k = log(f);
      REQUIRE(k >= 1);
      REQUIRE(k <= p - 1);
      REQUIRE(mod_pow(g.value(), k, fp) == f);
      seen.insert(k);
    }
    CHECK(seen.size() == p - 1);
  }
}

TEST_CASE("baby-step giant-step near the modulus cap") {
  const PrimeModulus fp(2147483647ULL);
  const auto g = smallest_primitive_root(fp);
  const DiscreteLog log(g, fp);
  for (std::uint64_t k : {1ULL, 2ULL, 46341ULL, 1000000007ULL, 2147483645ULL, 2147483646ULL})
    CHECK(log(mod_pow(g.value(), k, fp)) == k);
}
