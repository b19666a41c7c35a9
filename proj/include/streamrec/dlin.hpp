// One-pass randomized membership for deterministic linear languages, and the
// streaming reduction from such a language to 1-turn Dyck.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "streamrec/brackets.hpp"
#include "streamrec/decision.hpp"
#include "streamrec/fingerprint.hpp"
#include "streamrec/grammar.hpp"
#include "streamrec/stream.hpp"

namespace streamrec {

class InvalidGrammar : public GrammarError {
 public:
  InvalidGrammar(const std::string& what, Verdict verdict)
      : GrammarError(what), verdict_(std::move(verdict)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

/// A validated DL-CFG with its (nonterminal, leading terminal) rule table.
class DlinAutomaton {
 public:
  /// Rule A -> a B v, stored as what the recognizer needs after reading a.
  struct Rule {
    std::optional<NonterminalId> next;       // B, or eps
    std::vector<TerminalCode> tail_reversed;  // v reversed (bottom-to-top push order)
    std::size_t production;
  };

  /// Throws InvalidGrammar if g is not a DL-CFG.
  explicit DlinAutomaton(Grammar g);

  const Grammar& grammar() const { return grammar_; }
  NonterminalId start() const { return grammar_.start(); }
  std::size_t alphabet_size() const { return grammar_.terminal_count(); }

  const Rule* lookup(NonterminalId nt, TerminalCode a) const;
  bool has_epsilon_rule(NonterminalId nt) const { return epsilon_[nt]; }

 private:
  Grammar grammar_;
  std::vector<std::optional<Rule>> table_;  // nt * (m + 1) + a
  std::vector<bool> epsilon_;
};

/// Incremental form of the recognizer: feed w[1..n] through consume(), then
/// call finish(). Between calls the state equals the compressed stack of
/// the canonical pushdown automaton just before it reads w[position()].
///
/// State charged to the meter: the field context (3), the fingerprint (3),
/// pending nonterminal, position and n.
class DlinRecognizer {
 public:
  static constexpr std::uint64_t kStateWords =
      FieldContext::kWords + SegmentFingerprint::kWords + 3;

  DlinRecognizer(const DlinAutomaton& automaton, std::uint64_t n, const FieldContext& ctx,
                 SpaceMeter& meter);

  /// Processes w[position()]. Returns false once the run has rejected.
  bool consume(TerminalCode symbol);
  Decision finish();

  const SegmentFingerprint& fingerprint() const { return fp_; }
  std::optional<NonterminalId> pending() const { return pending_; }
  std::uint64_t position() const { return position_; }
  bool rejected() const { return !decision_.accepted && decision_.reason != RejectReason::none; }

 private:
  void apply_epsilon_if_due();

  const DlinAutomaton* automaton_;
  const FieldContext* ctx_;
  MeterCharge charge_;
  std::uint64_t n_;
  std::uint64_t position_ = 1;
  SegmentFingerprint fp_;
  std::optional<NonterminalId> pending_;
  Decision decision_;
};

/// Single pass over w. Members accept for every alpha; a non-member of
/// length n is accepted for at most n of the p-1 nonzero alphas.
Decision recognize_dlin(const DlinAutomaton& automaton, TokenStream& w, const FieldContext& ctx,
                        SpaceMeter& meter);
Decision recognize_dlin(const DlinAutomaton& automaton, TokenStream& w, const FieldContext& ctx);

/// Streaming reduction to 1-turn Dyck_k over the grammar alphabet. Each
/// consumed symbol yields a block of at most max-body-length tokens:
/// expansions emit the rule tail reversed as openers, matches emit the
/// closer of the input symbol. A structural failure emits the non-member
/// pair (~a_1 a_1) once and ignores the rest of the input. A nonempty
/// member whose run emits nothing is padded with (a_1 ~a_1) so that the
/// output is a 1-turn word with at least one pair.
class DlinReducer {
 public:
  static constexpr std::uint64_t kStateWords = 5;

  DlinReducer(const DlinAutomaton& automaton, std::uint64_t n);

  void consume(TerminalCode symbol, std::vector<DyckToken>& out);
  void finish(std::vector<DyckToken>& out);

  bool failed() const { return failed_; }
  RejectReason failure_reason() const { return failure_; }
  std::uint64_t emitted() const { return emitted_; }

 private:
  void fail(RejectReason reason, std::vector<DyckToken>& out);
  void emit(DyckToken t, std::vector<DyckToken>& out) {
    out.push_back(t);
    ++emitted_;
  }

  const DlinAutomaton* automaton_;
  std::uint64_t n_;
  std::uint64_t position_ = 1;
  std::uint64_t emitted_ = 0;
  std::optional<NonterminalId> pending_;
  bool failed_ = false;
  RejectReason failure_ = RejectReason::none;
};

std::vector<DyckToken> reduce_to_1turn_dyck(const DlinAutomaton& automaton, TokenStream& w);

class UnknownToken : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary encoding of Dyck_k into Dyck_2 with m = max(1, ceil(log2 k))
/// brackets per token: opener a_i spells the bits of i-1 (most significant
/// first, 0 -> '(', 1 -> '['); closer ~a_i is the mirror image reversed.
class Dyck2Encoder {
 public:
  explicit Dyck2Encoder(std::size_t k);

  std::size_t width() const { return width_; }
  std::size_t alphabet_size() const { return k_; }

  /// Throws UnknownToken for codes outside [1, k].
  void encode(DyckToken token, std::vector<Bracket>& out) const;

 private:
  std::size_t k_;
  std::size_t width_;
};

std::vector<Bracket> encode_dyckk_to_dyck2(std::span<const DyckToken> tokens, std::size_t k);

}  // namespace streamrec
