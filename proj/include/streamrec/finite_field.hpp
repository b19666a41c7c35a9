// Prime search and arithmetic in F_p for the fingerprinting recognizers.
#pragma once

#include <cstdint>
#include <stdexcept>

namespace streamrec {

using FieldElem = std::uint64_t;

class NoPrimeInRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInvertible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Moduli are kept below 2^62 so that sums of two reduced elements never wrap.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

bool is_prime(std::uint64_t v);

/// Smallest prime in [lo, hi]. Throws NoPrimeInRange when there is none.
std::uint64_t find_prime(std::uint64_t lo, std::uint64_t hi);

/// Prime in [m^2, 2m^2] with m = max(n, 2). Throws FieldConfigError when
/// 2m^2 would not fit below kMaxModulus.
std::uint64_t default_prime(std::uint64_t n);

inline FieldElem mod_add(FieldElem a, FieldElem b, std::uint64_t p) {
  const FieldElem s = a + b;
  return s >= p ? s - p : s;
}

inline FieldElem mod_sub(FieldElem a, FieldElem b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline FieldElem mod_mul(FieldElem a, FieldElem b, std::uint64_t p) {
  return static_cast<FieldElem>(static_cast<unsigned __int128>(a) * b % p);
}

FieldElem mod_pow(FieldElem base, std::uint64_t exp, std::uint64_t p);

/// Inverse of a modulo prime p. Throws NotInvertible for a == 0 (mod p).
FieldElem mod_inv(FieldElem a, std::uint64_t p);

/// SplitMix64. Every random choice in the toolkit derives from one seed
/// through this generator; split() hands out independent child streams.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  SplitMix64 split() { return SplitMix64(next()); }

  /// Uniform in [lo, hi] by rejection sampling.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  std::uint64_t state_;
};

/// Evaluation point drawn uniformly from [1, p-1]; deterministic in the seed.
FieldElem sample_point(std::uint64_t p, std::uint64_t seed);

/// Immutable (p, alpha, alpha^-1) triple. Safe to share between runs.
class FieldContext {
 public:
  /// Throws FieldConfigError if p is not a prime in [3, kMaxModulus) or
  /// alpha is outside [1, p-1].
  FieldContext(std::uint64_t p, FieldElem alpha);

  /// Context for inputs of length n: p = default_prime(n), alpha from seed.
  static FieldContext for_length(std::uint64_t n, std::uint64_t seed);

  std::uint64_t modulus() const { return p_; }
  FieldElem alpha() const { return alpha_; }
  FieldElem alpha_inv() const { return alpha_inv_; }

  FieldElem add(FieldElem a, FieldElem b) const { return mod_add(a, b, p_); }
  FieldElem sub(FieldElem a, FieldElem b) const { return mod_sub(a, b, p_); }
  FieldElem mul(FieldElem a, FieldElem b) const { return mod_mul(a, b, p_); }
  FieldElem pow_alpha(std::uint64_t exp) const { return mod_pow(alpha_, exp, p_); }
  FieldElem reduce(std::uint64_t v) const { return v % p_; }

  /// Number of machine words the context occupies in a metered recognizer.
  static constexpr std::uint64_t kWords = 3;

 private:
  std::uint64_t p_;
  FieldElem alpha_;
  FieldElem alpha_inv_;
};

}  // namespace streamrec
