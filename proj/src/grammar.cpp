#include "streamrec/grammar.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace streamrec {

namespace {

bool is_reserved(std::string_view name) { return name == "eps" || name == "->" || name == "$"; }

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

GrammarSyntaxError::GrammarSyntaxError(std::size_t line, const std::string& what)
    : GrammarError("line " + std::to_string(line) + ": " + what), line_(line) {}

UndeclaredSymbol::UndeclaredSymbol(std::size_t line, const std::string& name)
    : GrammarError((line ? "line " + std::to_string(line) + ": " : std::string()) +
                   "undeclared symbol '" + name + "'"),
      name_(name) {}

Grammar::Grammar(std::vector<std::string> terminals, std::vector<std::string> nonterminals,
                 NonterminalId start, std::vector<Production> productions)
    : terminals_(std::move(terminals)),
      nonterminals_(std::move(nonterminals)),
      start_(start),
      productions_(std::move(productions)),
      by_lhs_(nonterminals_.size()) {
  std::unordered_set<std::string> seen;
  for (const auto& name : terminals_) {
    if (name.empty() || is_reserved(name)) throw GrammarError("invalid terminal name '" + name + "'");
    if (!seen.insert(name).second) throw GrammarError("symbol '" + name + "' declared twice");
  }
  for (const auto& name : nonterminals_) {
    if (name.empty() || is_reserved(name)) {
      throw GrammarError("invalid nonterminal name '" + name + "'");
    }
    if (!seen.insert(name).second) throw GrammarError("symbol '" + name + "' declared twice");
  }
  if (start_ >= nonterminals_.size()) throw GrammarError("start symbol is not a nonterminal");

  for (std::size_t i = 0; i < productions_.size(); ++i) {
    const Production& prod = productions_[i];
    if (prod.lhs >= nonterminals_.size()) throw GrammarError("production lhs out of range");
    for (const Symbol& s : prod.rhs) {
      const bool ok = s.is_terminal() ? (s.id >= 1 && s.id <= terminals_.size())
                                      : s.id < nonterminals_.size();
      if (!ok) throw GrammarError("production body references an undeclared symbol");
    }
    for (std::size_t j : by_lhs_[prod.lhs]) {
      if (productions_[j] == prod) {
        throw DuplicateProduction("duplicate production " + production_text(i));
      }
    }
    by_lhs_[prod.lhs].push_back(i);
  }
}

const std::string& Grammar::terminal_name(TerminalCode code) const {
  return terminals_.at(code - 1);
}

const std::string& Grammar::nonterminal_name(NonterminalId nt) const {
  return nonterminals_.at(nt);
}

std::string Grammar::symbol_name(Symbol s) const {
  return s.is_terminal() ? terminal_name(s.id) : nonterminal_name(s.id);
}

std::optional<TerminalCode> Grammar::find_terminal(std::string_view name) const {
  for (std::size_t i = 0; i < terminals_.size(); ++i) {
    if (terminals_[i] == name) return static_cast<TerminalCode>(i + 1);
  }
  return std::nullopt;
}

std::optional<NonterminalId> Grammar::find_nonterminal(std::string_view name) const {
  for (std::size_t i = 0; i < nonterminals_.size(); ++i) {
    if (nonterminals_[i] == name) return static_cast<NonterminalId>(i);
  }
  return std::nullopt;
}

const std::vector<std::size_t>& Grammar::productions_for(NonterminalId nt) const {
  return by_lhs_.at(nt);
}

bool Grammar::has_epsilon_rule(NonterminalId nt) const {
  for (std::size_t i : by_lhs_.at(nt)) {
    if (productions_[i].rhs.empty()) return true;
  }
  return false;
}

std::size_t Grammar::max_body_length() const {
  std::size_t longest = 0;
  for (const auto& p : productions_) longest = std::max(longest, p.rhs.size());
  return longest;
}

std::vector<TerminalCode> Grammar::encode(std::span<const std::string> tokens) const {
  std::vector<TerminalCode> codes;
  codes.reserve(tokens.size());
  for (const auto& tok : tokens) {
    const auto code = find_terminal(tok);
    if (!code) throw UndeclaredSymbol(0, tok);
    codes.push_back(*code);
  }
  return codes;
}

std::string Grammar::production_text(std::size_t index) const {
  const Production& prod = productions_.at(index);
  std::string out = nonterminal_name(prod.lhs) + " ->";
  if (prod.rhs.empty()) return out + " eps";
  for (const Symbol& s : prod.rhs) out += " " + symbol_name(s);
  return out;
}

std::string Grammar::to_text() const {
  std::string out = "start: " + nonterminal_name(start_) + "\nterminals:";
  for (const auto& t : terminals_) out += " " + t;
  out += "\nnonterminals:";
  for (const auto& n : nonterminals_) out += " " + n;
  out += "\n";
  for (std::size_t i = 0; i < productions_.size(); ++i) out += production_text(i) + "\n";
  return out;
}

bool Grammar::operator==(const Grammar& other) const {
  return terminals_ == other.terminals_ && nonterminals_ == other.nonterminals_ &&
         start_ == other.start_ && productions_ == other.productions_;
}

Grammar parse_grammar(std::string_view text) {
  std::optional<std::string> start_name;
  std::optional<std::vector<std::string>> terminals;
  std::optional<std::vector<std::string>> nonterminals;
  struct RawProduction {
    std::size_t line;
    std::string lhs;
    std::vector<std::string> rhs;
  };
  std::vector<RawProduction> raw;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    auto header = [&](std::string_view key) -> std::optional<std::string_view> {
      if (line.substr(0, key.size()) == key) return trim(line.substr(key.size()));
      return std::nullopt;
    };

    if (!start_name) {
      const auto rest = header("start:");
      if (!rest) throw GrammarSyntaxError(line_no, "expected 'start: <nonterminal>'");
      const auto toks = split_ws(*rest);
      if (toks.size() != 1) throw GrammarSyntaxError(line_no, "start declares exactly one symbol");
      start_name = toks[0];
      continue;
    }
    if (!terminals) {
      const auto rest = header("terminals:");
      if (!rest) throw GrammarSyntaxError(line_no, "expected 'terminals: ...'");
      terminals = split_ws(*rest);
      continue;
    }
    if (!nonterminals) {
      const auto rest = header("nonterminals:");
      if (!rest) throw GrammarSyntaxError(line_no, "expected 'nonterminals: ...'");
      nonterminals = split_ws(*rest);
      if (nonterminals->empty()) throw GrammarSyntaxError(line_no, "no nonterminals declared");
      continue;
    }

    auto toks = split_ws(line);
    if (toks.size() < 3 || toks[1] != "->") {
      throw GrammarSyntaxError(line_no, "expected '<NT> -> <sym> ...' or '<NT> -> eps'");
    }
    RawProduction rp{line_no, toks[0], {toks.begin() + 2, toks.end()}};
    if (rp.rhs.size() == 1 && rp.rhs[0] == "eps") {
      rp.rhs.clear();
    } else {
      for (const auto& s : rp.rhs) {
        if (is_reserved(s)) throw GrammarSyntaxError(line_no, "reserved token '" + s + "' in body");
      }
    }
    raw.push_back(std::move(rp));
  }

  if (!nonterminals) throw GrammarSyntaxError(line_no, "missing declarations");

  auto index_of = [](const std::vector<std::string>& names,
                     const std::string& name) -> std::optional<std::uint32_t> {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - names.begin());
  };

  const auto start = index_of(*nonterminals, *start_name);
  if (!start) throw UndeclaredSymbol(1, *start_name);

  std::vector<Production> productions;
  std::vector<std::size_t> lines;
  for (const auto& rp : raw) {
    const auto lhs = index_of(*nonterminals, rp.lhs);
    if (!lhs) throw UndeclaredSymbol(rp.line, rp.lhs);
    Production prod{*lhs, {}};
    for (const auto& name : rp.rhs) {
      if (const auto t = index_of(*terminals, name)) {
        prod.rhs.push_back(Symbol::terminal(*t + 1));
      } else if (const auto n = index_of(*nonterminals, name)) {
        prod.rhs.push_back(Symbol::nonterminal(*n));
      } else {
        throw UndeclaredSymbol(rp.line, name);
      }
    }
    for (std::size_t j = 0; j < productions.size(); ++j) {
      if (productions[j] == prod) {
        throw DuplicateProduction("line " + std::to_string(rp.line) +
                                  ": duplicate of production on line " +
                                  std::to_string(lines[j]));
      }
    }
    productions.push_back(std::move(prod));
    lines.push_back(rp.line);
  }

  return Grammar(std::move(*terminals), std::move(*nonterminals), *start, std::move(productions));
}

Verdict validate_dlcfg(const Grammar& g) {
  Verdict verdict;
  std::map<std::pair<NonterminalId, TerminalCode>, std::size_t> leading;
  for (std::size_t i = 0; i < g.productions().size(); ++i) {
    const Production& prod = g.production(i);
    if (prod.rhs.empty()) continue;
    if (!prod.rhs.front().is_terminal()) {
      verdict.violations.push_back(
          {"production '" + g.production_text(i) + "' does not start with a terminal", i});
      continue;
    }
    for (std::size_t k = 1; k < prod.rhs.size(); ++k) {
      if (prod.rhs[k].is_nonterminal() && k != 1) {
        verdict.violations.push_back({"production '" + g.production_text(i) +
                                          "' has a nonterminal in a non-leading position",
                                      i});
        break;
      }
    }
    const auto key = std::make_pair(prod.lhs, prod.rhs.front().id);
    const auto [it, inserted] = leading.emplace(key, i);
    if (!inserted) {
      verdict.violations.push_back({"determinism clash on (" + g.nonterminal_name(prod.lhs) +
                                        ", " + g.terminal_name(key.second) + "): '" +
                                        g.production_text(it->second) + "' and '" +
                                        g.production_text(i) + "'",
                                    i});
    }
  }
  return verdict;
}

std::pair<SelectTable::TerminalSet, bool> SelectTable::first_of(
    std::span<const Symbol> body) const {
  TerminalSet out;
  for (const Symbol& s : body) {
    if (s.is_terminal()) {
      out.insert(s.id);
      return {out, false};
    }
    out.insert(first_[s.id].begin(), first_[s.id].end());
    if (!nullable_[s.id]) return {out, false};
  }
  return {out, true};
}

SelectTable compute_select(const Grammar& g) {
  const std::size_t nts = g.nonterminal_count();
  SelectTable table;
  table.nullable_.assign(nts, false);
  table.first_.assign(nts, {});
  table.follow_.assign(nts, {});

  for (bool changed = true; changed;) {
    changed = false;
    for (const Production& prod : g.productions()) {
      const auto [first, nullable] = table.first_of(prod.rhs);
      auto& f = table.first_[prod.lhs];
      const std::size_t before = f.size();
      f.insert(first.begin(), first.end());
      if (f.size() != before) changed = true;
      if (nullable && !table.nullable_[prod.lhs]) {
        table.nullable_[prod.lhs] = true;
        changed = true;
      }
    }
  }

  // Augmented rule S' -> S $.
  table.follow_[g.start()].insert(kEndMarker);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Production& prod : g.productions()) {
      for (std::size_t k = 0; k < prod.rhs.size(); ++k) {
        if (!prod.rhs[k].is_nonterminal()) continue;
        auto& follow = table.follow_[prod.rhs[k].id];
        const std::size_t before = follow.size();
        const auto rest = std::span<const Symbol>(prod.rhs).subspan(k + 1);
        const auto [first, nullable] = table.first_of(rest);
        follow.insert(first.begin(), first.end());
        if (nullable) {
          const auto& lhs_follow = table.follow_[prod.lhs];
          follow.insert(lhs_follow.begin(), lhs_follow.end());
        }
        if (follow.size() != before) changed = true;
      }
    }
  }

  for (const Production& prod : g.productions()) {
    auto [select, nullable] = table.first_of(prod.rhs);
    if (nullable) {
      const auto& follow = table.follow_[prod.lhs];
      select.insert(follow.begin(), follow.end());
    }
    table.select_.push_back(std::move(select));
  }

  std::vector<bool> reachable(nts, false);
  std::vector<NonterminalId> work{g.start()};
  reachable[g.start()] = true;
  while (!work.empty()) {
    const NonterminalId nt = work.back();
    work.pop_back();
    for (std::size_t i : g.productions_for(nt)) {
      for (const Symbol& s : g.production(i).rhs) {
        if (s.is_nonterminal() && !reachable[s.id]) {
          reachable[s.id] = true;
          work.push_back(s.id);
        }
      }
    }
  }

  std::vector<bool> productive(nts, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Production& prod : g.productions()) {
      if (productive[prod.lhs]) continue;
      const bool all = std::all_of(prod.rhs.begin(), prod.rhs.end(), [&](const Symbol& s) {
        return s.is_terminal() || productive[s.id];
      });
      if (all) {
        productive[prod.lhs] = true;
        changed = true;
      }
    }
  }

  for (NonterminalId nt = 0; nt < nts; ++nt) {
    if (!reachable[nt]) table.unreachable.push_back(nt);
    if (!productive[nt]) table.unproductive.push_back(nt);
  }
  return table;
}

Verdict validate_ll1(const Grammar& g, const SelectTable& table) {
  Verdict verdict;
  for (NonterminalId nt = 0; nt < g.nonterminal_count(); ++nt) {
    const auto& rules = g.productions_for(nt);
    for (std::size_t x = 0; x < rules.size(); ++x) {
      for (std::size_t y = x + 1; y < rules.size(); ++y) {
        const auto& a = table.select(rules[x]);
        const auto& b = table.select(rules[y]);
        for (TerminalCode t : a) {
          if (!b.contains(t)) continue;
          const std::string token = t == kEndMarker ? "$" : g.terminal_name(t);
          verdict.violations.push_back({"SELECT clash on token '" + token + "' between '" +
                                            g.production_text(rules[x]) + "' and '" +
                                            g.production_text(rules[y]) + "'",
                                        rules[y]});
          break;
        }
      }
    }
  }
  for (NonterminalId nt : table.unreachable) {
    verdict.warnings.push_back("nonterminal '" + g.nonterminal_name(nt) + "' is unreachable");
  }
  for (NonterminalId nt : table.unproductive) {
    verdict.warnings.push_back("nonterminal '" + g.nonterminal_name(nt) +
                               "' derives no terminal string");
  }
  return verdict;
}

RhsDecomposition decompose_rhs(std::span<const Symbol> rhs) {
  RhsDecomposition d;
  for (const Symbol& s : rhs) {
    if (s.is_nonterminal()) {
      d.groups.push_back({s.id, {}});
    } else {
      if (d.groups.empty()) d.groups.push_back({std::nullopt, {}});
      d.groups.back().terminals.push_back(s.id);
    }
  }
  if (d.groups.empty()) d.groups.push_back({std::nullopt, {}});
  return d;
}

}  // namespace streamrec
