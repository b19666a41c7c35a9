#include "streamrec/ll1.hpp"

#include <algorithm>

#include "streamrec/fingerprint.hpp"

namespace streamrec {

Ll1Parser::Ll1Parser(Grammar g) : grammar_(std::move(g)), select_(compute_select(grammar_)) {
  Verdict verdict = validate_ll1(grammar_, select_);
  if (!verdict.ok()) {
    std::string what = "not LL(1): " + verdict.violations.front().message;
    throw InvalidGrammar(what, std::move(verdict));
  }
  const std::size_t stride = grammar_.terminal_count() + 1;
  table_.resize(grammar_.nonterminal_count() * stride);
  for (std::size_t i = 0; i < grammar_.productions().size(); ++i) {
    const Production& prod = grammar_.production(i);
    for (TerminalCode t : select_.select(i)) table_[prod.lhs * stride + t] = i;
    decompositions_.push_back(decompose_rhs(prod.rhs));
  }
}

std::optional<std::size_t> Ll1Parser::predict(NonterminalId nt, TerminalCode lookahead) const {
  if (lookahead > grammar_.terminal_count()) return std::nullopt;
  return table_[nt * (grammar_.terminal_count() + 1) + lookahead];
}

std::uint64_t Ll1Parser::expansion_budget(std::uint64_t n) const {
  return (n + 2) * (grammar_.nonterminal_count() + 1) * (1 + grammar_.max_body_length());
}

Ll1Result recognize_ll1(const Ll1Parser& parser, TokenStream& w, std::uint64_t bound,
                        const FieldContext& ctx, SpaceMeter& meter, const Ll1Observer& observer) {
  // Field context, position, n, bound, iteration counter.
  const MeterCharge fixed(meter, FieldContext::kWords + 4);

  Ll1Result result;
  std::vector<CompressedItem> stack;
  std::uint64_t charged_items = 0;
  std::vector<TerminalCode> scratch;

  auto push = [&](CompressedItem item) {
    stack.push_back(std::move(item));
    meter.charge(CompressedItem::kWords);
    ++charged_items;
    result.peak_items = std::max<std::uint64_t>(result.peak_items, stack.size());
  };
  auto pop = [&] {
    CompressedItem item = stack.back();
    stack.pop_back();
    meter.release(CompressedItem::kWords);
    --charged_items;
    return item;
  };
  auto done = [&](Decision d) {
    meter.release(charged_items * CompressedItem::kWords);
    result.decision = d;
    result.peak_words = meter.peak();
    return result;
  };
  auto notify = [&](Ll1Step step) {
    if (observer) observer(step, stack);
  };

  std::uint64_t position = 1;
  TerminalCode lookahead = w.next().value_or(kEndMarker);
  const std::uint64_t budget = parser.expansion_budget(w.length());
  std::uint64_t iterations = 0;

  push({0, parser.grammar().start(), 0});
  if (stack.size() > bound) return done(Decision::reject(RejectReason::bound_exceeded, position));

  while (!stack.empty()) {
    if (++iterations > budget) {
      return done(Decision::reject(RejectReason::expansion_budget, position));
    }
    CompressedItem top = pop();

    if (top.non_term) {
      const auto production = parser.predict(*top.non_term, lookahead);
      if (!production) return done(Decision::reject(RejectReason::no_rule, position));
      const auto& groups = parser.decomposition(*production).groups;

      // (B_0, beta_0) extends the segment the nonterminal sat on.
      const RhsGroup& bottom = groups.back();
      scratch.assign(bottom.terminals.rbegin(), bottom.terminals.rend());
      push({ctx.add(top.comp_part, fp_eval(scratch, top.height, ctx)), bottom.nonterminal,
            top.height + bottom.terminals.size()});
      // Then (B_k, beta_k) for k = 1..t, so (B_t, beta_t) ends on top.
      for (std::size_t g = groups.size() - 1; g-- > 0;) {
        const RhsGroup& group = groups[g];
        scratch.assign(group.terminals.rbegin(), group.terminals.rend());
        push({fp_eval(scratch, 0, ctx), group.nonterminal, group.terminals.size()});
        if (stack.size() > bound) {
          return done(Decision::reject(RejectReason::bound_exceeded, position));
        }
      }
      notify(Ll1Step::expand);
    } else if (top.height != 0) {
      if (lookahead == kEndMarker) {
        return done(Decision::reject(RejectReason::input_underflow, position));
      }
      const FieldElem monomial =
          ctx.mul(ctx.reduce(lookahead), ctx.pow_alpha(top.height - 1));
      top.comp_part = ctx.sub(top.comp_part, monomial);
      --top.height;
      push(top);
      lookahead = w.next().value_or(kEndMarker);
      ++position;
      notify(Ll1Step::match);
    } else {
      if (top.comp_part != 0) return done(Decision::reject(RejectReason::residue, position));
      notify(Ll1Step::discard);
    }
  }

  if (lookahead != kEndMarker) return done(Decision::reject(RejectReason::leftover_input, position));
  return done(Decision::accept());
}

}  // namespace streamrec
