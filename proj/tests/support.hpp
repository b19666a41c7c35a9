// Fixture grammars and enumeration helpers shared by the test binaries.
#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "streamrec/grammar.hpp"

namespace fixtures {

inline constexpr std::string_view kAnbn =
    "start: S\nterminals: a b\nnonterminals: S\nS -> a S b\nS -> eps\n";

// a b^k b, k >= 0
inline constexpr std::string_view kAbkb =
    "start: S\nterminals: a b\nnonterminals: S T\nS -> a T b\nT -> b T\nT -> eps\n";

// odd palindromes over {a, b} with centre marker c
inline constexpr std::string_view kPalindrome =
    "start: S\nterminals: a b c\nnonterminals: S\nS -> a S a\nS -> b S b\nS -> c\n";

inline constexpr std::string_view kG2 =
    "start: S\nterminals: a b\nnonterminals: S\nS -> a S S\nS -> b\n";

inline const std::vector<std::string_view>& dlin_grammars() {
  static const std::vector<std::string_view> all{kAnbn, kAbkb, kPalindrome};
  return all;
}

inline std::vector<streamrec::TerminalCode> encode(const streamrec::Grammar& g,
                                                   std::string_view spaced) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(spaced)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return g.encode(tokens);
}

/// Calls f(word) for every word over codes 1..k of length 0..max_len, in
/// length-lexicographic order. The vector passed to f is reused.
template <typename F>
void for_each_word(std::uint32_t k, std::size_t max_len, F&& f) {
  std::vector<streamrec::TerminalCode> w;
  for (std::size_t len = 0; len <= max_len; ++len) {
    w.assign(len, 1);
    while (true) {
      f(static_cast<const std::vector<streamrec::TerminalCode>&>(w));
      std::size_t i = len;
      while (i > 0 && w[i - 1] == k) w[--i] = 1;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

}  // namespace fixtures
