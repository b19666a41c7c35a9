// Deterministic p-pass checking of 1-turn Dyck_2 in O(n/p) words, and its
// composition with the DLIN streaming reduction.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "streamrec/brackets.hpp"
#include "streamrec/decision.hpp"
#include "streamrec/dlin.hpp"
#include "streamrec/stream.hpp"

namespace streamrec {

/// A rewindable bracket stream of known length.
class BracketSource {
 public:
  virtual ~BracketSource() = default;

  virtual std::uint64_t length() const = 0;
  virtual std::optional<Bracket> next() = 0;
  /// Starts the next pass; throws PassBudgetExceeded when none is left.
  virtual void rewind() = 0;
  virtual std::size_t passes_used() const = 0;
};

class StreamBracketSource final : public BracketSource {
 public:
  explicit StreamBracketSource(PassStream<Bracket>& stream) : stream_(&stream) {}

  std::uint64_t length() const override { return stream_->length(); }
  std::optional<Bracket> next() override { return stream_->next(); }
  void rewind() override { stream_->rewind(); }
  std::size_t passes_used() const override { return stream_->passes_used(); }

 private:
  PassStream<Bracket>* stream_;
};

/// Virtual stream: runs the DLIN reduction and the Dyck_2 encoding on the
/// fly over the underlying token stream. Rewinding it rewinds the input.
class ReducedBracketSource final : public BracketSource {
 public:
  /// `encoded_length` is the reduced, encoded length learned by a prior
  /// calibration pass; `w` must be positioned at the start of a pass.
  ReducedBracketSource(const DlinAutomaton& automaton, TokenStream& w,
                       std::uint64_t encoded_length, SpaceMeter& meter);

  std::uint64_t length() const override { return length_; }
  std::optional<Bracket> next() override;
  void rewind() override;
  std::size_t passes_used() const override { return input_->passes_used(); }

 private:
  const DlinAutomaton* automaton_;
  TokenStream* input_;
  Dyck2Encoder encoder_;
  std::uint64_t length_;
  MeterCharge charge_;
  DlinReducer reducer_;
  bool finished_ = false;
  std::vector<DyckToken> tokens_;
  std::vector<Bracket> pending_;
  std::size_t pending_head_ = 0;
};

/// Block layout for p passes over an even-length 1-turn candidate. The left
/// half is cut into p blocks of ceil(n/2p) symbols (the last may be short or
/// empty); the partner of left block j is its mirror image in the right
/// half, so the pairing stays aligned when 2p does not divide n.
struct BlockPlan {
  std::uint64_t length;
  std::size_t passes;
  std::uint64_t block_len;

  BlockPlan(std::uint64_t n, std::size_t p);

  /// 1-based inclusive ranges; first > last means empty.
  std::pair<std::uint64_t, std::uint64_t> left_block(std::size_t j) const;
  std::pair<std::uint64_t, std::uint64_t> right_block(std::size_t j) const;
};

struct MultipassResult {
  Decision decision;
  std::size_t passes_used = 0;
  std::uint64_t peak_words = 0;
  std::uint64_t block_len = 0;
};

/// Pass j buffers left block j and matches it against its mirror block with
/// the buffer acting as the stack. Pass 0 also checks that openers lie only
/// in the left half and closers only in the right half, which makes the
/// decision exactly 1-turn Dyck_2 membership (nonempty, w ~w^R).
MultipassResult check_1turn_dyck2_multipass(BracketSource& w, std::size_t passes,
                                            SpaceMeter& meter);

/// Deterministic DLIN membership in p + 1 passes: a calibration pass learns
/// the reduced length (and rejects structural failures), then p passes run
/// the Dyck_2 checker over the reduction computed on the fly.
MultipassResult recognize_dlin_multipass(const DlinAutomaton& automaton, TokenStream& w,
                                         std::size_t passes, SpaceMeter& meter);

}  // namespace streamrec
