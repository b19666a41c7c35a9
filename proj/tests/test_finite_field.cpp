#include <doctest.h>

#include <algorithm>
#include <vector>

#include "streamrec/finite_field.hpp"

using namespace streamrec;

TEST_CASE("find_prime returns the smallest prime in range") {
  CHECK(find_prime(100, 200) == 101);
  CHECK(find_prime(4, 8) == 5);
  CHECK(find_prime(2, 2) == 2);
  CHECK_THROWS_AS(find_prime(24, 28), NoPrimeInRange);
}

TEST_CASE("find_prime output has no small divisor") {
  for (std::uint64_t n = 2; n <= 300; ++n) {
    const std::uint64_t p = find_prime(n * n, 2 * n * n);
    for (std::uint64_t d = 2; d * d <= p; ++d) REQUIRE(p % d != 0);
  }
}

TEST_CASE("is_prime on small values") {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 101, 1009, 7919};
  const std::vector<std::uint64_t> composites{0, 1, 4, 9, 25, 49, 121, 1001, 7917};
  for (auto p : primes) CHECK(is_prime(p));
  for (auto c : composites) CHECK_FALSE(is_prime(c));
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
}

TEST_CASE("mod_pow") {
  CHECK(mod_pow(3, 0, 7) == 1);
  CHECK(mod_pow(3, 2, 7) == 2);
  CHECK(mod_pow(2, 10, 101) == 14);
}

TEST_CASE("mod_pow is a homomorphism in the exponent") {
  SplitMix64 rng(42);
  for (int t = 0; t < 500; ++t) {
    const std::uint64_t p = 1000003;
    const FieldElem a = rng.uniform(0, p - 1);
    const std::uint64_t i = rng.uniform(0, 1u << 20);
    const std::uint64_t j = rng.uniform(0, 1u << 20);
    REQUIRE(mod_pow(a, i + j, p) == mod_mul(mod_pow(a, i, p), mod_pow(a, j, p), p));
  }
}

TEST_CASE("mod_inv") {
  CHECK(mod_inv(1, 7) == 1);
  CHECK(mod_inv(3, 7) == 5);
  CHECK(mod_inv(2, 101) == 51);
  CHECK_THROWS_AS(mod_inv(0, 7), NotInvertible);
}

TEST_CASE("mod_inv is exact for every unit below 1009") {
  for (std::uint64_t p = 3; p <= 1009; ++p) {
    if (!is_prime(p)) continue;
    for (FieldElem a = 1; a < p; ++a) REQUIRE(mod_mul(a, mod_inv(a, p), p) == 1);
  }
}

TEST_CASE("sample_point is deterministic and nonzero") {
  CHECK(sample_point(101, 7) == sample_point(101, 7));
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const FieldElem a = sample_point(101, seed);
    REQUIRE(a >= 1);
    REQUIRE(a <= 100);
    const FieldElem b = sample_point(3, seed);
    REQUIRE((b == 1 || b == 2));
  }
}

TEST_CASE("FieldContext validates its parameters") {
  const FieldContext ctx(101, 3);
  CHECK(ctx.modulus() == 101);
  CHECK(ctx.mul(ctx.alpha(), ctx.alpha_inv()) == 1);
  CHECK_THROWS_AS(FieldContext(100, 3), FieldConfigError);
  CHECK_THROWS_AS(FieldContext(101, 0), FieldConfigError);
  CHECK_THROWS_AS(FieldContext(101, 101), FieldConfigError);
  CHECK_THROWS_AS(FieldContext(2, 1), FieldConfigError);
}

TEST_CASE("default field for a length lies in [m^2, 2m^2]") {
  for (std::uint64_t n : {0u, 1u, 2u, 10u, 1000u, 1000000u}) {
    const std::uint64_t m = std::max<std::uint64_t>(n, 2);
    const std::uint64_t p = default_prime(n);
    CHECK(p >= m * m);
    CHECK(p <= 2 * m * m);
    const FieldContext ctx = FieldContext::for_length(n, 9);
    CHECK(ctx.modulus() == p);
  }
  CHECK_THROWS_AS(default_prime(std::uint64_t{1} << 31), FieldConfigError);
}

TEST_CASE("mod_mul near the modulus ceiling") {
  const std::uint64_t p = 2305843009213693951ULL;
  CHECK(mod_mul(p - 1, p - 1, p) == 1);
  CHECK(mod_add(p - 1, p - 1, p) == p - 2);
  CHECK(mod_sub(0, 1, p) == p - 1);
}
