#include "streamrec/oracles.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace streamrec::oracle {

ExplicitCpdaTrace cpda_run(const Grammar& g, std::span<const TerminalCode> w) {
  ExplicitCpdaTrace trace;
  std::vector<Symbol> stack{Symbol::nonterminal(g.start())};
  const std::size_t n = w.size();

  auto record = [&] {
    CpdaStep step;
    std::size_t nts = 0;
    for (const Symbol& s : stack) {
      if (s.is_nonterminal()) {
        ++nts;
        if (!step.non_term) step.non_term = s.id;
      } else if (!step.non_term) {
        step.stack.push_back(s.id);
      }
    }
    trace.max_nonterminals = std::max(trace.max_nonterminals, nts);
    trace.steps.push_back(std::move(step));
  };
  auto terminals_on_stack = [&] {
    return static_cast<std::size_t>(
        std::count_if(stack.begin(), stack.end(), [](const Symbol& s) { return s.is_terminal(); }));
  };
  auto reject = [&](std::size_t i) {
    trace.accepted = false;
    trace.rejected_at = i;
    return trace;
  };

  for (std::size_t i = 1; i <= n + 1; ++i) {
    record();
    if (!stack.empty() && stack.back().is_nonterminal() && (i - 1) + terminals_on_stack() == n) {
      if (!g.has_epsilon_rule(stack.back().id)) return reject(i);
      stack.pop_back();
    }
    if (i == n + 1) break;

    const TerminalCode a = w[i - 1];
    if (stack.empty()) return reject(i);
    const Symbol top = stack.back();
    if (top.is_nonterminal()) {
      const Production* rule = nullptr;
      for (std::size_t k : g.productions_for(top.id)) {
        const Production& prod = g.production(k);
        if (!prod.rhs.empty() && prod.rhs.front() == Symbol::terminal(a)) rule = &prod;
      }
      if (rule == nullptr) return reject(i);
      stack.pop_back();
      for (std::size_t k = rule->rhs.size(); k > 1; --k) stack.push_back(rule->rhs[k - 1]);
    } else {
      if (top.id != a) return reject(i);
      stack.pop_back();
    }
  }
  if (!stack.empty()) return reject(n + 1);
  trace.accepted = true;
  return trace;
}

std::size_t stack_item_count(std::span<const Symbol> stack) {
  std::size_t items = 0;
  bool terminal_above = false;
  for (const Symbol& s : stack) {
    if (s.is_nonterminal()) {
      ++items;
      terminal_above = false;
    } else {
      terminal_above = true;
    }
  }
  return items + (terminal_above ? 1 : 0);
}

ParseRankReport ll1_parse_rank(const Grammar& g, std::span<const TerminalCode> w) {
  const SelectTable table = compute_select(g);
  ParseRankReport report;
  std::vector<Symbol> stack{Symbol::nonterminal(g.start())};
  std::size_t next = 0;
  auto lookahead = [&] { return next < w.size() ? w[next] : kEndMarker; };
  auto measure = [&] {
    const auto nts = static_cast<std::size_t>(std::count_if(
        stack.begin(), stack.end(), [](const Symbol& s) { return s.is_nonterminal(); }));
    report.rank = std::max(report.rank, nts);
    report.peak_items = std::max(report.peak_items, stack_item_count(stack));
  };
  measure();

  // Guards against eps-cycles in degenerate grammars.
  const std::size_t cap = 1000 + 100 * (w.size() + 1) * (g.max_body_length() + 1) *
                                     (g.nonterminal_count() + 1);
  std::size_t iterations = 0;
  while (!stack.empty()) {
    if (++iterations > cap) return report;
    const Symbol top = stack.back();
    if (top.is_nonterminal()) {
      std::optional<std::size_t> chosen;
      for (std::size_t k : g.productions_for(top.id)) {
        if (table.select(k).contains(lookahead())) {
          chosen = k;
          break;
        }
      }
      if (!chosen) return report;
      stack.pop_back();
      const auto& rhs = g.production(*chosen).rhs;
      for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) stack.push_back(*it);
      report.steps.push_back(ParseStep::expand);
    } else {
      if (lookahead() == kEndMarker || lookahead() != top.id) return report;
      stack.pop_back();
      ++next;
      report.steps.push_back(ParseStep::match);
    }
    report.stacks.push_back(stack);
    measure();
  }
  report.accepted = next == w.size();
  return report;
}

namespace {

struct RawRule {
  std::uint32_t lhs;
  std::vector<Symbol> body;

  auto operator<=>(const RawRule&) const = default;
};

}  // namespace

CnfGrammar to_cnf(const Grammar& g) {
  std::uint32_t count = static_cast<std::uint32_t>(g.nonterminal_count());
  std::vector<RawRule> rules;
  for (const Production& p : g.productions()) rules.push_back({p.lhs, p.rhs});

  // START
  const std::uint32_t start = count++;
  rules.push_back({start, {Symbol::nonterminal(g.start())}});

  // TERM
  std::map<TerminalCode, std::uint32_t> proxy;
  for (auto& r : rules) {
    if (r.body.size() < 2) continue;
    for (Symbol& s : r.body) {
      if (!s.is_terminal()) continue;
      auto [it, inserted] = proxy.emplace(s.id, count);
      if (inserted) ++count;
      s = Symbol::nonterminal(it->second);
    }
  }
  for (const auto& [code, nt] : proxy) rules.push_back({nt, {Symbol::terminal(code)}});

  // BIN
  std::vector<RawRule> binarized;
  for (auto& r : rules) {
    if (r.body.size() <= 2) {
      binarized.push_back(std::move(r));
      continue;
    }
    std::uint32_t lhs = r.lhs;
    for (std::size_t k = 0; k + 2 < r.body.size(); ++k) {
      const std::uint32_t fresh = count++;
      binarized.push_back({lhs, {r.body[k], Symbol::nonterminal(fresh)}});
      lhs = fresh;
    }
    binarized.push_back({lhs, {r.body[r.body.size() - 2], r.body.back()}});
  }
  rules = std::move(binarized);

  // DEL
  std::vector<bool> nullable(count, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rules) {
      if (nullable[r.lhs]) continue;
      if (std::all_of(r.body.begin(), r.body.end(),
                      [&](const Symbol& s) { return s.is_nonterminal() && nullable[s.id]; })) {
        nullable[r.lhs] = true;
        changed = true;
      }
    }
  }
  std::set<RawRule> without_eps;
  for (const auto& r : rules) {
    const std::size_t len = r.body.size();
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      RawRule variant{r.lhs, {}};
      bool ok = true;
      for (std::size_t k = 0; k < len; ++k) {
        if (mask & (1u << k)) {
          const Symbol& s = r.body[k];
          if (!(s.is_nonterminal() && nullable[s.id])) ok = false;
        } else {
          variant.body.push_back(r.body[k]);
        }
      }
      if (ok && !variant.body.empty()) without_eps.insert(std::move(variant));
    }
  }

  // UNIT
  std::vector<std::vector<bool>> unit(count, std::vector<bool>(count, false));
  for (std::uint32_t a = 0; a < count; ++a) unit[a][a] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : without_eps) {
      if (r.body.size() != 1 || !r.body[0].is_nonterminal()) continue;
      for (std::uint32_t a = 0; a < count; ++a) {
        if (!unit[a][r.lhs] || unit[a][r.body[0].id]) continue;
        unit[a][r.body[0].id] = true;
        changed = true;
      }
    }
  }

  CnfGrammar cnf;
  cnf.nonterminals = count;
  cnf.start = start;
  cnf.derives_empty = nullable[start];
  std::set<std::pair<std::uint32_t, TerminalCode>> unary;
  std::set<std::array<std::uint32_t, 3>> binary;
  for (std::uint32_t a = 0; a < count; ++a) {
    for (const auto& r : without_eps) {
      if (!unit[a][r.lhs]) continue;
      if (r.body.size() == 1 && r.body[0].is_terminal()) unary.insert({a, r.body[0].id});
      if (r.body.size() == 2) binary.insert({a, r.body[0].id, r.body[1].id});
    }
  }
  cnf.unary.assign(unary.begin(), unary.end());
  cnf.binary.assign(binary.begin(), binary.end());
  return cnf;
}

CykOracle::CykOracle(const Grammar& g) : cnf_(to_cnf(g)) {}

bool CykOracle::member(std::span<const TerminalCode> w) const {
  const std::size_t n = w.size();
  if (n == 0) return cnf_.derives_empty;
  const std::size_t k = cnf_.nonterminals;

  // chart[((len - 1) * n + i) * k + A]: A derives w[i .. i+len-1]
  std::vector<char> chart(n * n * k, 0);
  auto cell = [&](std::size_t i, std::size_t len) { return &chart[((len - 1) * n + i) * k]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [a, t] : cnf_.unary) {
      if (t == w[i]) cell(i, 1)[a] = 1;
    }
  }
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      char* target = cell(i, len);
      for (std::size_t split = 1; split < len; ++split) {
        const char* left = cell(i, split);
        const char* right = cell(i + split, len - split);
        for (const auto& [a, b, c] : cnf_.binary) {
          if (left[b] && right[c]) target[a] = 1;
        }
      }
    }
  }
  return cell(0, n)[cnf_.start] != 0;
}

bool cyk_member(const Grammar& g, std::span<const TerminalCode> w) {
  return CykOracle(g).member(w);
}

bool dyck_explicit(std::span<const Bracket> tokens, bool one_turn) {
  if (one_turn && tokens.empty()) return false;
  std::vector<Bracket> stack;
  bool closing = false;
  for (Bracket b : tokens) {
    if (is_opener(b)) {
      if (one_turn && closing) return false;
      stack.push_back(b);
    } else {
      closing = true;
      if (stack.empty() || mirror(stack.back()) != b) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

bool dyck_explicit(std::span<const DyckToken> tokens, bool one_turn) {
  if (one_turn && tokens.empty()) return false;
  std::vector<TerminalCode> stack;
  bool closing = false;
  for (const DyckToken& t : tokens) {
    if (!t.closer) {
      if (one_turn && closing) return false;
      stack.push_back(t.code);
    } else {
      closing = true;
      if (stack.empty() || stack.back() != t.code) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

bool degseq_naive(const DegSeqInstance& inst) {
  std::vector<std::uint64_t> counted(inst.n + 1, 0);
  for (const Edge& e : inst.edges) {
    if (e.from < 1 || e.from > inst.n || e.to < 1 || e.to > inst.n) {
      throw std::out_of_range("edge endpoint outside [1, n]");
    }
    ++counted[e.from];
  }
  if (inst.degrees.size() != inst.n) return false;
  for (std::uint64_t v = 1; v <= inst.n; ++v) {
    if (counted[v] != inst.degrees[v - 1]) return false;
  }
  return true;
}

}  // namespace streamrec::oracle
