// Brute-force ground truth with explicit stacks and charts. Desk scale only;
// these share no code path with the streaming recognizers.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "streamrec/brackets.hpp"
#include "streamrec/degseq.hpp"
#include "streamrec/grammar.hpp"

namespace streamrec::oracle {

/// State of the canonical pushdown automaton as it reaches w[i].
struct CpdaStep {
  std::vector<TerminalCode> stack;        // Stack(w, i): terminals, bottom to top
  std::optional<NonterminalId> non_term;  // NonTerm(w, i)
};

struct ExplicitCpdaTrace {
  /// steps[i-1] is the state before reading w[i], for i = 1..n+1, up to the
  /// step where the automaton rejected.
  std::vector<CpdaStep> steps;
  bool accepted = false;
  std::optional<std::size_t> rejected_at;
  std::size_t max_nonterminals = 0;
};

/// Runs the single-state automaton of a DL-CFG with a full stack. A
/// nonterminal on top is replaced by eps exactly when the consumed prefix
/// plus the stacked terminals account for all of w.
ExplicitCpdaTrace cpda_run(const Grammar& g, std::span<const TerminalCode> w);

enum class ParseStep : std::uint8_t { expand, match };

struct ParseRankReport {
  bool accepted = false;
  /// Maximum number of nonterminals in a sentential form of the parse.
  std::size_t rank = 0;
  /// Maximum number of (gamma, Gamma) groups the stack splits into.
  std::size_t peak_items = 0;
  /// Full stack (bottom to top) after each step, until accept or reject.
  std::vector<std::vector<Symbol>> stacks;
  std::vector<ParseStep> steps;
};

/// Predictive LL(1) parse with an uncompressed stack and an end marker.
ParseRankReport ll1_parse_rank(const Grammar& g, std::span<const TerminalCode> w);

/// Number of (gamma_i, Gamma_i) groups in an explicit stack (bottom to top):
/// one per nonterminal, plus one for terminals above the topmost nonterminal.
std::size_t stack_item_count(std::span<const Symbol> stack);

/// Grammar in Chomsky normal form: A -> a and A -> B C, plus whether the
/// start symbol derives the empty string.
struct CnfGrammar {
  std::size_t nonterminals = 0;
  std::uint32_t start = 0;
  bool derives_empty = false;
  std::vector<std::pair<std::uint32_t, TerminalCode>> unary;
  std::vector<std::array<std::uint32_t, 3>> binary;
};

/// Textbook START, TERM, BIN, DEL, UNIT pipeline.
CnfGrammar to_cnf(const Grammar& g);

/// CYK chart parser over a converted grammar; reusable across strings.
class CykOracle {
 public:
  explicit CykOracle(const Grammar& g);
  bool member(std::span<const TerminalCode> w) const;
  const CnfGrammar& cnf() const { return cnf_; }

 private:
  CnfGrammar cnf_;
};

/// Membership by CYK after conversion to Chomsky normal form.
bool cyk_member(const Grammar& g, std::span<const TerminalCode> w);

/// Balanced check with an explicit stack. With one_turn, also requires every
/// opener to precede every closer and at least one pair.
bool dyck_explicit(std::span<const Bracket> tokens, bool one_turn);
bool dyck_explicit(std::span<const DyckToken> tokens, bool one_turn);

/// Exact out-degree count. Throws std::out_of_range for an edge endpoint
/// outside [1, n].
bool degseq_naive(const DegSeqInstance& inst);

}  // namespace streamrec::oracle
