#include "streamrec/decision.hpp"

namespace streamrec {

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::none: return "none";
    case RejectReason::no_rule: return "no-rule";
    case RejectReason::epsilon_missing: return "epsilon-missing";
    case RejectReason::leftover: return "leftover";
    case RejectReason::pending_nonterminal: return "pending-nonterminal";
    case RejectReason::stack_underflow: return "stack-underflow";
    case RejectReason::bound_exceeded: return "bound-exceeded";
    case RejectReason::residue: return "residue";
    case RejectReason::input_underflow: return "input-underflow";
    case RejectReason::leftover_input: return "leftover-input";
    case RejectReason::expansion_budget: return "expansion-budget";
    case RejectReason::odd_length: return "odd-length";
    case RejectReason::half_violation: return "half-violation";
    case RejectReason::mismatch: return "mismatch";
    case RejectReason::empty_input: return "empty-input";
    case RejectReason::vertex_out_of_range: return "vertex-out-of-range";
    case RejectReason::degree_mismatch: return "degree-mismatch";
  }
  return "unknown";
}

}  // namespace streamrec
