// One-pass randomized membership for LL(1) languages over a compressed
// stack of (fingerprint, nonterminal, height) items.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "streamrec/decision.hpp"
#include "streamrec/dlin.hpp"
#include "streamrec/finite_field.hpp"
#include "streamrec/grammar.hpp"
#include "streamrec/stream.hpp"

namespace streamrec {

/// A validated LL(1) grammar with its predictive table and the body
/// decompositions the compressed stack pushes.
class Ll1Parser {
 public:
  /// Throws InvalidGrammar when SELECT sets of some nonterminal overlap.
  explicit Ll1Parser(Grammar g);

  const Grammar& grammar() const { return grammar_; }
  const SelectTable& select_table() const { return select_; }

  /// Production chosen for `nt` under `lookahead` (kEndMarker after the input).
  std::optional<std::size_t> predict(NonterminalId nt, TerminalCode lookahead) const;
  const RhsDecomposition& decomposition(std::size_t production) const {
    return decompositions_.at(production);
  }

  /// Loop-iteration cap for an input of length n.
  std::uint64_t expansion_budget(std::uint64_t n) const;

 private:
  Grammar grammar_;
  SelectTable select_;
  std::vector<std::optional<std::size_t>> table_;  // nt * (m + 1) + lookahead
  std::vector<RhsDecomposition> decompositions_;
};

/// Item i stands for the stack segment Gamma_i gamma_i: the fingerprint of
/// gamma_i (bottom-to-top, offset 0), the nonterminal Gamma_i above it (or
/// none), and |gamma_i|.
struct CompressedItem {
  FieldElem comp_part = 0;
  std::optional<NonterminalId> non_term;
  std::uint64_t height = 0;

  bool operator==(const CompressedItem&) const = default;

  static constexpr std::uint64_t kWords = 3;
};

enum class Ll1Step : std::uint8_t { expand, match, discard };

/// Called after every loop iteration with the item stack, bottom first.
using Ll1Observer = std::function<void(Ll1Step, std::span<const CompressedItem>)>;

struct Ll1Result {
  Decision decision;
  std::uint64_t peak_items = 0;
  std::uint64_t peak_words = 0;
};

/// Single pass plus an end-marker drain. Rejects with bound_exceeded as soon
/// as the stack would hold more than `bound` items. Members whose peak item
/// count is at most `bound` accept for every alpha; non-members of length n
/// are accepted for at most n of the p-1 nonzero alphas.
///
/// Metered state: field context, position, n, bound and the iteration
/// counter, plus 3 words per stack item.
Ll1Result recognize_ll1(const Ll1Parser& parser, TokenStream& w, std::uint64_t bound,
                        const FieldContext& ctx, SpaceMeter& meter,
                        const Ll1Observer& observer = {});

}  // namespace streamrec
