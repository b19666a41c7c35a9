// Streaming discipline: length-prefixed, sequential, pass-counted input and
// a word-level meter for recognizer state.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "streamrec/grammar.hpp"

namespace streamrec {

class LengthMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PassBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Read-only view of a source of known length. Each pass reads the items in
/// order exactly once; rewind() starts the next pass and is charged against
/// the pass budget. The stream does not own the source.
template <typename T>
class PassStream {
 public:
  PassStream(std::span<const T> source, std::size_t declared_length,
             std::size_t passes_allowed = 1)
      : source_(source), passes_allowed_(passes_allowed) {
    if (declared_length != source.size()) {
      throw LengthMismatch("declared length " + std::to_string(declared_length) +
                           " but source has " + std::to_string(source.size()) + " symbols");
    }
    if (passes_allowed == 0) throw PassBudgetExceeded("a stream needs at least one pass");
  }

  std::size_t length() const { return source_.size(); }
  /// 1-based index of the next symbol; length() + 1 at end of pass.
  std::size_t position() const { return next_ + 1; }
  std::size_t passes_used() const { return passes_used_; }
  std::size_t passes_allowed() const { return passes_allowed_; }
  bool at_end() const { return next_ == source_.size(); }

  /// Next symbol of the current pass, or nullopt once the pass is exhausted.
  std::optional<T> next() {
    if (next_ == source_.size()) return std::nullopt;
    return source_[next_++];
  }

  void rewind() {
    if (passes_used_ == passes_allowed_) {
      throw PassBudgetExceeded("pass budget of " + std::to_string(passes_allowed_) +
                               " exhausted");
    }
    ++passes_used_;
    next_ = 0;
  }

 private:
  std::span<const T> source_;
  std::size_t next_ = 0;
  std::size_t passes_used_ = 1;
  std::size_t passes_allowed_;
};

using TokenStream = PassStream<TerminalCode>;

/// Builds a TokenStream over `codes`, checking the declared length.
inline TokenStream open_stream(std::span<const TerminalCode> codes, std::size_t declared_length,
                               std::size_t passes_allowed = 1) {
  return TokenStream(codes, declared_length, passes_allowed);
}

struct MeterReport {
  std::uint64_t peak_words = 0;
  std::uint64_t word_bits = 64;
};

/// Counts persistent recognizer state in words (one field element or one
/// counter per word). Transient per-symbol scratch is not charged.
class SpaceMeter {
 public:
  void charge(std::uint64_t words) {
    current_ += words;
    if (current_ > peak_) peak_ = current_;
  }
  void release(std::uint64_t words);

  std::uint64_t current() const { return current_; }
  std::uint64_t peak() const { return peak_; }
  MeterReport report() const { return {peak_, 64}; }

 private:
  std::uint64_t current_ = 0;
  std::uint64_t peak_ = 0;
};

/// Charges on construction and releases on destruction.
class MeterCharge {
 public:
  MeterCharge(SpaceMeter& meter, std::uint64_t words) : meter_(&meter), words_(words) {
    meter_->charge(words_);
  }
  MeterCharge(const MeterCharge&) = delete;
  MeterCharge& operator=(const MeterCharge&) = delete;
  ~MeterCharge() { meter_->release(words_); }

 private:
  SpaceMeter* meter_;
  std::uint64_t words_;
};

/// Contents of an input-string file: line 1 `n: <int>`, then exactly n
/// whitespace-separated tokens.
struct InputString {
  std::size_t declared_length = 0;
  std::vector<std::string> tokens;
};

/// Throws LengthMismatch when the token count differs from n, and
/// std::invalid_argument on a malformed header.
InputString parse_input_string(std::string_view text);

}  // namespace streamrec
