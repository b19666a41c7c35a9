// JSON run report emitted by the command-line tool.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "streamrec/decision.hpp"

namespace streamrec {

struct ErrorBound {
  std::uint64_t numerator;    // n
  std::uint64_t denominator;  // p - 1
};

struct AlphaSweep {
  std::uint64_t accepting = 0;
  std::uint64_t total = 0;
};

struct RunReport {
  Decision decision;
  std::string algorithm;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> modulus;
  std::optional<std::uint64_t> alpha;
  std::size_t passes_used = 1;
  std::uint64_t peak_words = 0;
  std::optional<ErrorBound> error_bound;  // randomized algorithms only
  std::optional<std::uint64_t> block_len;
  std::optional<std::uint64_t> peak_items;
  std::optional<std::uint64_t> bound;
  std::optional<AlphaSweep> alpha_sweep;
};

nlohmann::ordered_json to_json(const RunReport& report);

}  // namespace streamrec
