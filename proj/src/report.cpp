#include "streamrec/report.hpp"

namespace streamrec {

nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["decision"] = r.decision.accepted ? "accept" : "reject";
  if (!r.decision.accepted) {
    j["reason"] = std::string(to_string(r.decision.reason));
    if (r.decision.position != 0) j["position"] = r.decision.position;
  }
  j["algorithm"] = r.algorithm;
  j["n"] = r.n;
  if (r.modulus) j["p"] = *r.modulus;
  if (r.alpha) j["alpha"] = *r.alpha;
  j["passes_used"] = r.passes_used;
  j["peak_words"] = r.peak_words;
  if (r.block_len) j["block_len"] = *r.block_len;
  if (r.bound) j["bound"] = *r.bound;
  if (r.peak_items) j["peak_items"] = *r.peak_items;
  if (r.error_bound) {
    j["error_bound"] = {{"numerator", r.error_bound->numerator},
                        {"denominator", r.error_bound->denominator}};
  }
  if (r.alpha_sweep) {
    j["alpha_exhaustive"] = {
        {"accepting", r.alpha_sweep->accepting},
        {"total", r.alpha_sweep->total},
        {"fraction", r.alpha_sweep->total == 0
                         ? 0.0
                         : static_cast<double>(r.alpha_sweep->accepting) /
                               static_cast<double>(r.alpha_sweep->total)}};
  }
  return j;
}

}  // namespace streamrec
