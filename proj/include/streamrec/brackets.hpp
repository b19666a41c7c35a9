// Token types for Dyck-style outputs: paired tokens over a grammar alphabet
// (a_i and its closer ~a_i) and the four literal Dyck_2 brackets.
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "streamrec/grammar.hpp"

namespace streamrec {

struct DyckToken {
  TerminalCode code;
  bool closer;

  static constexpr DyckToken open(TerminalCode c) { return {c, false}; }
  static constexpr DyckToken close(TerminalCode c) { return {c, true}; }

  bool operator==(const DyckToken&) const = default;
};

enum class Bracket : std::uint8_t { open_round, open_square, close_round, close_square };

inline constexpr bool is_opener(Bracket b) {
  return b == Bracket::open_round || b == Bracket::open_square;
}

inline constexpr Bracket mirror(Bracket b) {
  switch (b) {
    case Bracket::open_round: return Bracket::close_round;
    case Bracket::open_square: return Bracket::close_square;
    case Bracket::close_round: return Bracket::open_round;
    case Bracket::close_square: return Bracket::open_square;
  }
  return b;
}

inline constexpr char to_char(Bracket b) {
  switch (b) {
    case Bracket::open_round: return '(';
    case Bracket::open_square: return '[';
    case Bracket::close_round: return ')';
    case Bracket::close_square: return ']';
  }
  return '?';
}

inline constexpr std::optional<Bracket> bracket_from(std::string_view tok) {
  if (tok == "(") return Bracket::open_round;
  if (tok == "[") return Bracket::open_square;
  if (tok == ")") return Bracket::close_round;
  if (tok == "]") return Bracket::close_square;
  return std::nullopt;
}

}  // namespace streamrec
