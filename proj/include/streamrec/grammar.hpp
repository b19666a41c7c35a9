// Grammar model, text format, DL-CFG / LL(1) validation and SELECT sets.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace streamrec {

/// Terminal a_i is coded as i (1-based declaration order). Code 0 is
/// reserved for the end marker $ in SELECT sets.
using TerminalCode = std::uint32_t;
using NonterminalId = std::uint32_t;

inline constexpr TerminalCode kEndMarker = 0;

struct Symbol {
  enum class Kind : std::uint8_t { terminal, nonterminal };

  Kind kind;
  std::uint32_t id;  // terminal code, or nonterminal index

  static constexpr Symbol terminal(TerminalCode code) { return {Kind::terminal, code}; }
  static constexpr Symbol nonterminal(NonterminalId nt) { return {Kind::nonterminal, nt}; }

  bool is_terminal() const { return kind == Kind::terminal; }
  bool is_nonterminal() const { return kind == Kind::nonterminal; }

  auto operator<=>(const Symbol&) const = default;
};

struct Production {
  NonterminalId lhs;
  std::vector<Symbol> rhs;  // empty means A -> eps

  bool operator==(const Production&) const = default;
};

class GrammarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GrammarSyntaxError : public GrammarError {
 public:
  GrammarSyntaxError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UndeclaredSymbol : public GrammarError {
 public:
  UndeclaredSymbol(std::size_t line, const std::string& name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DuplicateProduction : public GrammarError {
 public:
  using GrammarError::GrammarError;
};

class Grammar {
 public:
  /// Throws GrammarError if names clash, a production references an unknown
  /// symbol, or a production is listed twice.
  Grammar(std::vector<std::string> terminals, std::vector<std::string> nonterminals,
          NonterminalId start, std::vector<Production> productions);

  std::size_t terminal_count() const { return terminals_.size(); }
  std::size_t nonterminal_count() const { return nonterminals_.size(); }
  NonterminalId start() const { return start_; }

  const std::string& terminal_name(TerminalCode code) const;
  const std::string& nonterminal_name(NonterminalId nt) const;
  std::string symbol_name(Symbol s) const;

  std::optional<TerminalCode> find_terminal(std::string_view name) const;
  std::optional<NonterminalId> find_nonterminal(std::string_view name) const;

  const std::vector<Production>& productions() const { return productions_; }
  const Production& production(std::size_t index) const { return productions_.at(index); }
  /// Production indices with the given left-hand side, in declaration order.
  const std::vector<std::size_t>& productions_for(NonterminalId nt) const;

  bool has_epsilon_rule(NonterminalId nt) const;
  std::size_t max_body_length() const;

  /// Maps a token sequence to terminal codes. Throws UndeclaredSymbol.
  std::vector<TerminalCode> encode(std::span<const std::string> tokens) const;

  /// Canonical text form; parse_grammar(to_text()) == *this.
  std::string to_text() const;
  std::string production_text(std::size_t index) const;

  bool operator==(const Grammar& other) const;

 private:
  std::vector<std::string> terminals_;
  std::vector<std::string> nonterminals_;
  NonterminalId start_;
  std::vector<Production> productions_;
  std::vector<std::vector<std::size_t>> by_lhs_;
};

/// Parses the line-based grammar format:
///   start: S
///   terminals: a b
///   nonterminals: S
///   S -> a S b
///   S -> eps
Grammar parse_grammar(std::string_view text);

struct Violation {
  std::string message;
  std::optional<std::size_t> production;  // offending production index
};

struct Verdict {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
};

/// Every production must be A -> eps or A -> a B v (B optional, v terminal),
/// and (A, a) must determine the production.
Verdict validate_dlcfg(const Grammar& g);

class SelectTable {
 public:
  using TerminalSet = std::set<TerminalCode>;  // may contain kEndMarker

  const TerminalSet& select(std::size_t production) const { return select_.at(production); }
  const TerminalSet& first(NonterminalId nt) const { return first_.at(nt); }
  const TerminalSet& follow(NonterminalId nt) const { return follow_.at(nt); }
  bool nullable(NonterminalId nt) const { return nullable_.at(nt); }

  /// FIRST of a symbol string, and whether the whole string is nullable.
  std::pair<TerminalSet, bool> first_of(std::span<const Symbol> body) const;

  std::vector<NonterminalId> unreachable;
  std::vector<NonterminalId> unproductive;

 private:
  friend SelectTable compute_select(const Grammar& g);

  std::vector<bool> nullable_;
  std::vector<TerminalSet> first_;
  std::vector<TerminalSet> follow_;
  std::vector<TerminalSet> select_;
};

/// Fixpoint nullable/FIRST/FOLLOW over the end-marked grammar S' -> S $,
/// then SELECT(A -> x) = FIRST(x) plus FOLLOW(A) when x is nullable.
SelectTable compute_select(const Grammar& g);

/// SELECT sets of productions sharing a left-hand side must be disjoint.
/// Unreachable and unproductive nonterminals are reported as warnings.
Verdict validate_ll1(const Grammar& g, const SelectTable& table);

/// One (B_i, beta_i) group of a production body B_t beta_t ... B_0 beta_0.
struct RhsGroup {
  std::optional<NonterminalId> nonterminal;
  std::vector<TerminalCode> terminals;

  bool operator==(const RhsGroup&) const = default;
};

/// Groups in body order, i.e. index 0 is (B_t, beta_t) and the last entry
/// is (B_0, beta_0). t = groups.size() - 1.
struct RhsDecomposition {
  std::vector<RhsGroup> groups;

  std::size_t t() const { return groups.size() - 1; }
};

RhsDecomposition decompose_rhs(std::span<const Symbol> rhs);

}  // namespace streamrec
