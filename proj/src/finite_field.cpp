#include "streamrec/finite_field.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace streamrec {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v < 4) return true;
  if (v % 2 == 0 || v % 3 == 0) return false;
  // 6k +- 1 wheel; d * d cannot overflow since v < 2^64 implies d < 2^32.
  for (std::uint64_t d = 5; d <= v / d; d += 6) {
    if (v % d == 0 || v % (d + 2) == 0) return false;
  }
  return true;
}

std::uint64_t find_prime(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2 || lo > hi) {
    throw NoPrimeInRange("invalid prime search interval [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "]");
  }
  for (std::uint64_t v = lo;; ++v) {
    if (is_prime(v)) return v;
    if (v == hi) break;
  }
  throw NoPrimeInRange("no prime in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "]");
}

std::uint64_t default_prime(std::uint64_t n) {
  const std::uint64_t m = std::max<std::uint64_t>(n, 2);
  // 2 m^2 < 2^62  <=>  m < 2^30.5; check without overflowing.
  if (m > (std::uint64_t{1} << 30)) {
    throw FieldConfigError("input length " + std::to_string(n) +
                           " too large for a single-word field");
  }
  return find_prime(m * m, 2 * m * m);
}

FieldElem mod_pow(FieldElem base, std::uint64_t exp, std::uint64_t p) {
  FieldElem result = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1) result = mod_mul(result, base, p);
    base = mod_mul(base, base, p);
    exp >>= 1;
  }
  return result;
}

FieldElem mod_inv(FieldElem a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw NotInvertible("0 has no inverse modulo " + std::to_string(p));
  // Extended Euclid on signed 128-bit to stay clear of overflow.
  __int128 old_r = a, r = p;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw NotInvertible(std::to_string(a) + " is not invertible modulo " + std::to_string(p));
  }
  __int128 inv = old_s % static_cast<__int128>(p);
  if (inv < 0) inv += p;
  return static_cast<FieldElem>(inv);
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + draw % range;
}

FieldElem sample_point(std::uint64_t p, std::uint64_t seed) {
  if (p < 3) throw FieldConfigError("sample_point needs p >= 3");
  SplitMix64 rng(seed);
  return rng.uniform(1, p - 1);
}

FieldContext::FieldContext(std::uint64_t p, FieldElem alpha) : p_(p), alpha_(alpha) {
  if (p < 3 || p >= kMaxModulus || !is_prime(p)) {
    throw FieldConfigError("modulus " + std::to_string(p) +
                           " must be a prime in [3, 2^62)");
  }
  if (alpha == 0 || alpha >= p) {
    throw FieldConfigError("evaluation point " + std::to_string(alpha) +
                           " must lie in [1, p-1]");
  }
  alpha_inv_ = mod_inv(alpha, p);
}

FieldContext FieldContext::for_length(std::uint64_t n, std::uint64_t seed) {
  const std::uint64_t p = default_prime(n);
  return FieldContext(p, sample_point(p, seed));
}

}  // namespace streamrec
