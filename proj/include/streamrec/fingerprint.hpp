// Polynomial fingerprints of pushdown stack segments.
//
// A segment s[1..h], listed bottom to top, is encoded as
//   value = sum_j code(s[j]) * alpha^(j-1)  (mod p)
// so the topmost symbol carries alpha^(h-1). Pushing v onto the stack adds v
// reversed at exponents h, h+1, ...; popping subtracts code * alpha^(h-1).
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "streamrec/finite_field.hpp"
#include "streamrec/grammar.hpp"

namespace streamrec {

class EmptySegment : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sum_{j=1..|v|} code(v[j]) * alpha^(offset+j-1) mod p.
FieldElem fp_eval(std::span<const TerminalCode> v, std::uint64_t offset, const FieldContext& ctx);

class SegmentFingerprint {
 public:
  SegmentFingerprint() = default;

  FieldElem value() const { return value_; }
  std::uint64_t height() const { return height_; }
  /// alpha^height, kept in step with every push and pop.
  FieldElem power() const { return power_; }

  /// Pushes symbols given bottom-to-top (i.e. a production tail reversed).
  void push(std::span<const TerminalCode> bottom_to_top, const FieldContext& ctx);
  void push(TerminalCode code, const FieldContext& ctx);

  /// Removes the top position, subtracting code(symbol) * alpha^(h-1).
  /// The monomial cancels exactly iff `symbol` is the real top.
  void pop_match(TerminalCode symbol, const FieldContext& ctx);

  /// Zero value and empty segment. A zero value over a nonempty segment is
  /// a root of a nonzero polynomial and does not count.
  bool is_zero() const { return value_ == 0 && height_ == 0; }

  bool operator==(const SegmentFingerprint&) const = default;

  static constexpr std::uint64_t kWords = 3;

 private:
  FieldElem value_ = 0;
  std::uint64_t height_ = 0;
  FieldElem power_ = 1;
};

}  // namespace streamrec
