#include "streamrec/fingerprint.hpp"

namespace streamrec {

FieldElem fp_eval(std::span<const TerminalCode> v, std::uint64_t offset, const FieldContext& ctx) {
  if (v.empty()) return 0;
  FieldElem power = ctx.pow_alpha(offset);
  FieldElem sum = 0;
  for (TerminalCode code : v) {
    sum = ctx.add(sum, ctx.mul(ctx.reduce(code), power));
    power = ctx.mul(power, ctx.alpha());
  }
  return sum;
}

void SegmentFingerprint::push(TerminalCode code, const FieldContext& ctx) {
  value_ = ctx.add(value_, ctx.mul(ctx.reduce(code), power_));
  power_ = ctx.mul(power_, ctx.alpha());
  ++height_;
}

void SegmentFingerprint::push(std::span<const TerminalCode> bottom_to_top,
                              const FieldContext& ctx) {
  for (TerminalCode code : bottom_to_top) push(code, ctx);
}

void SegmentFingerprint::pop_match(TerminalCode symbol, const FieldContext& ctx) {
  if (height_ == 0) throw EmptySegment("pop from an empty stack segment");
  power_ = ctx.mul(power_, ctx.alpha_inv());
  value_ = ctx.sub(value_, ctx.mul(ctx.reduce(symbol), power_));
  --height_;
}

}  // namespace streamrec
