// Streaming verification that an edge list realizes a declared out-degree
// sequence: one randomized pass, or p deterministic passes.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "streamrec/decision.hpp"
#include "streamrec/finite_field.hpp"
#include "streamrec/stream.hpp"

namespace streamrec {

struct Edge {
  std::uint64_t from;
  std::uint64_t to;

  bool operator==(const Edge&) const = default;
};

struct DegreeEntry {
  std::uint64_t degree;

  bool operator==(const DegreeEntry&) const = default;
};

/// Stream items: n degree entries, then the edges in any order.
using DegSeqItem = std::variant<DegreeEntry, Edge>;
using DegSeqStream = PassStream<DegSeqItem>;

struct DegSeqInstance {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> degrees;
  std::vector<Edge> edges;

  std::vector<DegSeqItem> stream_items() const;
};

class MalformedStream : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File format: `n: <int>`, `degrees: d_1 ... d_n`, `m: <int>`, then m lines
/// `u v`. Throws MalformedStream on any deviation.
DegSeqInstance parse_degseq(std::string_view text);
std::string to_text(const DegSeqInstance& inst);

/// Evaluates q(x) = sum_i d_i x^i - sum_edges x^u at alpha in one pass and
/// accepts iff it vanishes. Also keeps the exact totals sum(d_i) and m, and
/// rejects when they differ; with m < p this keeps every coefficient of q
/// below p in absolute value, so q vanishes mod p only if it vanishes over
/// the integers. Target vertices are read and ignored. Throws
/// MalformedStream when an edge precedes the last degree or degrees are
/// missing.
Decision degseq_randomized(std::uint64_t n, DegSeqStream& stream, const FieldContext& ctx,
                           SpaceMeter& meter);

/// Pass j holds the declared degrees of vertices (jL, (j+1)L], L = ceil(n/p),
/// and counts edge sources into that window. Deterministic.
Decision degseq_multipass(std::uint64_t n, DegSeqStream& stream, std::size_t passes,
                          SpaceMeter& meter);

}  // namespace streamrec
