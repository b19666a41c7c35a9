#include "streamrec/dyck_multipass.hpp"

#include <algorithm>

namespace streamrec {

namespace {

// Bound on the openers one consumed symbol can make the reducer emit, in
// encoded brackets; the sentinel/padding pair adds two tokens.
std::uint64_t reducer_block_words(const DlinAutomaton& automaton, std::size_t width) {
  return (automaton.grammar().max_body_length() + 2) * width;
}

}  // namespace

ReducedBracketSource::ReducedBracketSource(const DlinAutomaton& automaton, TokenStream& w,
                                           std::uint64_t encoded_length, SpaceMeter& meter)
    : automaton_(&automaton),
      input_(&w),
      encoder_(automaton.alphabet_size()),
      length_(encoded_length),
      charge_(meter, DlinReducer::kStateWords + 2 + reducer_block_words(automaton, encoder_.width())),
      reducer_(automaton, w.length()) {}

std::optional<Bracket> ReducedBracketSource::next() {
  while (pending_head_ == pending_.size()) {
    pending_.clear();
    pending_head_ = 0;
    tokens_.clear();
    if (auto symbol = input_->next()) {
      reducer_.consume(*symbol, tokens_);
    } else if (!finished_) {
      reducer_.finish(tokens_);
      finished_ = true;
    } else {
      return std::nullopt;
    }
    for (const DyckToken& t : tokens_) encoder_.encode(t, pending_);
  }
  return pending_[pending_head_++];
}

void ReducedBracketSource::rewind() {
  input_->rewind();
  reducer_ = DlinReducer(*automaton_, input_->length());
  finished_ = false;
  pending_.clear();
  pending_head_ = 0;
}

BlockPlan::BlockPlan(std::uint64_t n, std::size_t p) : length(n), passes(p) {
  if (p == 0) throw std::invalid_argument("pass count must be positive");
  const std::uint64_t half = n / 2;
  block_len = (half + p - 1) / p;
}

std::pair<std::uint64_t, std::uint64_t> BlockPlan::left_block(std::size_t j) const {
  const std::uint64_t half = length / 2;
  const std::uint64_t first = j * block_len + 1;
  const std::uint64_t last = std::min<std::uint64_t>((j + 1) * block_len, half);
  return {first, last};
}

std::pair<std::uint64_t, std::uint64_t> BlockPlan::right_block(std::size_t j) const {
  const auto [first, last] = left_block(j);
  if (first > last) return {1, 0};
  return {length + 1 - last, length + 1 - first};
}

MultipassResult check_1turn_dyck2_multipass(BracketSource& w, std::size_t passes,
                                            SpaceMeter& meter) {
  const std::uint64_t n = w.length();
  const BlockPlan plan(n, passes);
  MultipassResult result;
  result.block_len = plan.block_len;

  auto finish = [&](Decision d) {
    result.decision = d;
    result.passes_used = w.passes_used();
    result.peak_words = meter.peak();
    return result;
  };

  // n, p, block length, pass index, position, buffer fill.
  const MeterCharge counters(meter, 6);
  if (n == 0) return finish(Decision::reject(RejectReason::empty_input));
  if (n % 2 != 0) return finish(Decision::reject(RejectReason::odd_length));

  const MeterCharge buffer_charge(meter, plan.block_len);
  std::vector<Bracket> buffer;
  buffer.reserve(plan.block_len);
  const std::uint64_t half = n / 2;

  for (std::size_t j = 0; j < passes; ++j) {
    if (j > 0) w.rewind();
    const auto [lf, ll] = plan.left_block(j);
    const auto [rf, rl] = plan.right_block(j);
    buffer.clear();
    std::uint64_t pos = 0;
    while (auto b = w.next()) {
      ++pos;
      if (j == 0 && is_opener(*b) != (pos <= half)) {
        return finish(Decision::reject(RejectReason::half_violation, pos));
      }
      if (pos >= lf && pos <= ll) {
        buffer.push_back(*b);
      } else if (pos >= rf && pos <= rl) {
        if (buffer.empty() || mirror(buffer.back()) != *b) {
          return finish(Decision::reject(RejectReason::mismatch, pos));
        }
        buffer.pop_back();
      }
    }
    if (pos != n) throw LengthMismatch("bracket stream shorter than its declared length");
    if (!buffer.empty()) return finish(Decision::reject(RejectReason::mismatch, pos));
  }
  return finish(Decision::accept());
}

MultipassResult recognize_dlin_multipass(const DlinAutomaton& automaton, TokenStream& w,
                                         std::size_t passes, SpaceMeter& meter) {
  if (passes == 0) throw std::invalid_argument("pass count must be positive");
  MultipassResult result;
  if (w.length() == 0) {
    result.decision = automaton.has_epsilon_rule(automaton.start())
                          ? Decision::accept()
                          : Decision::reject(RejectReason::epsilon_missing, 1);
    result.passes_used = w.passes_used();
    result.peak_words = meter.peak();
    return result;
  }

  // Calibration pass: reduced length and structural failures.
  std::uint64_t reduced = 0;
  {
    const MeterCharge charge(meter, DlinReducer::kStateWords + 1);
    DlinReducer reducer(automaton, w.length());
    std::vector<DyckToken> block;
    while (auto symbol = w.next()) {
      block.clear();
      reducer.consume(*symbol, block);
      if (reducer.failed()) break;
    }
    block.clear();
    reducer.finish(block);
    if (reducer.failed()) {
      result.decision = Decision::reject(reducer.failure_reason(), w.position());
      result.passes_used = w.passes_used();
      result.peak_words = meter.peak();
      return result;
    }
    reduced = reducer.emitted();
  }

  w.rewind();
  const Dyck2Encoder encoder(automaton.alphabet_size());
  ReducedBracketSource source(automaton, w, reduced * encoder.width(), meter);
  return check_1turn_dyck2_multipass(source, passes, meter);
}

}  // namespace streamrec
