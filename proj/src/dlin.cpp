#include "streamrec/dlin.hpp"

#include <algorithm>
#include <cassert>

namespace streamrec {

DlinAutomaton::DlinAutomaton(Grammar g) : grammar_(std::move(g)) {
  Verdict verdict = validate_dlcfg(grammar_);
  if (!verdict.ok()) {
    std::string what = "not a DL-CFG: " + verdict.violations.front().message;
    throw InvalidGrammar(what, std::move(verdict));
  }
  const std::size_t stride = grammar_.terminal_count() + 1;
  table_.resize(grammar_.nonterminal_count() * stride);
  epsilon_.assign(grammar_.nonterminal_count(), false);

  for (std::size_t i = 0; i < grammar_.productions().size(); ++i) {
    const Production& prod = grammar_.production(i);
    if (prod.rhs.empty()) {
      epsilon_[prod.lhs] = true;
      continue;
    }
    Rule rule{std::nullopt, {}, i};
    std::size_t k = 1;
    if (k < prod.rhs.size() && prod.rhs[k].is_nonterminal()) rule.next = prod.rhs[k++].id;
    for (std::size_t j = prod.rhs.size(); j > k; --j) rule.tail_reversed.push_back(prod.rhs[j - 1].id);
    table_[prod.lhs * stride + prod.rhs.front().id] = std::move(rule);
  }
}

const DlinAutomaton::Rule* DlinAutomaton::lookup(NonterminalId nt, TerminalCode a) const {
  if (a == 0 || a > grammar_.terminal_count()) return nullptr;
  const auto& slot = table_[nt * (grammar_.terminal_count() + 1) + a];
  return slot ? &*slot : nullptr;
}

DlinRecognizer::DlinRecognizer(const DlinAutomaton& automaton, std::uint64_t n,
                               const FieldContext& ctx, SpaceMeter& meter)
    : automaton_(&automaton),
      ctx_(&ctx),
      charge_(meter, kStateWords),
      n_(n),
      pending_(automaton.start()) {}

void DlinRecognizer::apply_epsilon_if_due() {
  // Terminals on the stack plus symbols consumed must account for all of w.
  if (!pending_ || fp_.height() + (position_ - 1) != n_) return;
  if (!automaton_->has_epsilon_rule(*pending_)) {
    decision_ = Decision::reject(RejectReason::epsilon_missing, position_);
    return;
  }
  pending_.reset();
}

bool DlinRecognizer::consume(TerminalCode symbol) {
  if (rejected()) return false;
  if (position_ > n_) throw LengthMismatch("more symbols than the declared length");
  apply_epsilon_if_due();
  if (rejected()) return false;

  if (pending_) {
    const DlinAutomaton::Rule* rule = automaton_->lookup(*pending_, symbol);
    if (rule == nullptr) {
      decision_ = Decision::reject(RejectReason::no_rule, position_);
      return false;
    }
    fp_.push(rule->tail_reversed, *ctx_);
    pending_ = rule->next;
  } else {
    if (fp_.height() == 0) {
      decision_ = Decision::reject(RejectReason::stack_underflow, position_);
      return false;
    }
    fp_.pop_match(symbol, *ctx_);
  }
  ++position_;
  return true;
}

Decision DlinRecognizer::finish() {
  if (rejected()) return decision_;
  if (position_ != n_ + 1) throw LengthMismatch("stream ended before the declared length");
  apply_epsilon_if_due();
  if (rejected()) return decision_;
  if (pending_) {
    decision_ = Decision::reject(RejectReason::pending_nonterminal, position_);
  } else if (!fp_.is_zero()) {
    decision_ = Decision::reject(RejectReason::leftover, position_);
  } else {
    decision_ = Decision::accept();
  }
  return decision_;
}

Decision recognize_dlin(const DlinAutomaton& automaton, TokenStream& w, const FieldContext& ctx,
                        SpaceMeter& meter) {
  DlinRecognizer rec(automaton, w.length(), ctx, meter);
  while (auto symbol = w.next()) {
    if (!rec.consume(*symbol)) break;
  }
  return rec.finish();
}

Decision recognize_dlin(const DlinAutomaton& automaton, TokenStream& w, const FieldContext& ctx) {
  SpaceMeter meter;
  return recognize_dlin(automaton, w, ctx, meter);
}

DlinReducer::DlinReducer(const DlinAutomaton& automaton, std::uint64_t n)
    : automaton_(&automaton), n_(n), pending_(automaton.start()) {}

void DlinReducer::fail(RejectReason reason, std::vector<DyckToken>& out) {
  failed_ = true;
  failure_ = reason;
  emit(DyckToken::close(1), out);
  emit(DyckToken::open(1), out);
}

void DlinReducer::consume(TerminalCode symbol, std::vector<DyckToken>& out) {
  if (failed_) return;
  // While a nonterminal is pending only openers have been emitted, so the
  // output length doubles as the stack height.
  if (pending_ && emitted_ + (position_ - 1) == n_) {
    if (!automaton_->has_epsilon_rule(*pending_)) return fail(RejectReason::epsilon_missing, out);
    pending_.reset();
  }
  if (pending_) {
    const DlinAutomaton::Rule* rule = automaton_->lookup(*pending_, symbol);
    if (rule == nullptr) return fail(RejectReason::no_rule, out);
    for (TerminalCode c : rule->tail_reversed) emit(DyckToken::open(c), out);
    pending_ = rule->next;
  } else {
    emit(DyckToken::close(symbol), out);
  }
  ++position_;
}

void DlinReducer::finish(std::vector<DyckToken>& out) {
  if (failed_) return;
  if (pending_ && emitted_ + (position_ - 1) == n_ && automaton_->has_epsilon_rule(*pending_)) {
    pending_.reset();
  }
  if (pending_) return fail(RejectReason::pending_nonterminal, out);
  if (emitted_ == 0 && n_ > 0) {
    emit(DyckToken::open(1), out);
    emit(DyckToken::close(1), out);
  }
}

std::vector<DyckToken> reduce_to_1turn_dyck(const DlinAutomaton& automaton, TokenStream& w) {
  DlinReducer reducer(automaton, w.length());
  std::vector<DyckToken> out;
  while (auto symbol = w.next()) reducer.consume(*symbol, out);
  reducer.finish(out);
  return out;
}

Dyck2Encoder::Dyck2Encoder(std::size_t k) : k_(k), width_(1) {
  if (k == 0) throw UnknownToken("Dyck_k encoding needs k >= 1");
  while ((std::size_t{1} << width_) < k) ++width_;
}

void Dyck2Encoder::encode(DyckToken token, std::vector<Bracket>& out) const {
  if (token.code == 0 || token.code > k_) {
    throw UnknownToken("token code " + std::to_string(token.code) + " outside [1, " +
                       std::to_string(k_) + "]");
  }
  const std::size_t value = token.code - 1;
  if (!token.closer) {
    for (std::size_t j = width_; j-- > 0;) {
      out.push_back(((value >> j) & 1) ? Bracket::open_square : Bracket::open_round);
    }
  } else {
    for (std::size_t j = 0; j < width_; ++j) {
      out.push_back(((value >> j) & 1) ? Bracket::close_square : Bracket::close_round);
    }
  }
}

std::vector<Bracket> encode_dyckk_to_dyck2(std::span<const DyckToken> tokens, std::size_t k) {
  const Dyck2Encoder encoder(k);
  std::vector<Bracket> out;
  out.reserve(tokens.size() * encoder.width());
  for (const DyckToken& t : tokens) encoder.encode(t, out);
  return out;
}

}  // namespace streamrec
