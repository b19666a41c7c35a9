#pragma once

#include <cstdint>
#include <string_view>

namespace streamrec {

enum class RejectReason : std::uint8_t {
  none,
  no_rule,              // no production matches (nonterminal, lookahead)
  epsilon_missing,      // length test demanded A -> eps but none exists
  leftover,             // final fingerprint test failed
  pending_nonterminal,  // input ended with an unexpanded nonterminal
  stack_underflow,      // a terminal arrived with nothing left to match
  bound_exceeded,       // compressed stack grew beyond the caller's bound
  residue,              // an exhausted stack item had a nonzero fingerprint
  input_underflow,      // input ended while terminals remained on the stack
  leftover_input,       // stack emptied before the input did
  expansion_budget,     // too many steps without progress
  odd_length,
  half_violation,       // opener in the right half or closer in the left half
  mismatch,             // bracket pairing failed
  empty_input,          // 1-turn languages need at least one pair
  vertex_out_of_range,
  degree_mismatch,
};

std::string_view to_string(RejectReason reason);

struct Decision {
  bool accepted = false;
  RejectReason reason = RejectReason::none;
  /// 1-based stream position where the rejection was decided (0 if n/a).
  std::uint64_t position = 0;

  static Decision accept() { return {true, RejectReason::none, 0}; }
  static Decision reject(RejectReason reason, std::uint64_t position = 0) {
    return {false, reason, position};
  }

  explicit operator bool() const { return accepted; }
};

}  // namespace streamrec
