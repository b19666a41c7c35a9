#include "streamrec/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "streamrec/degseq.hpp"
#include "streamrec/dlin.hpp"
#include "streamrec/dyck_multipass.hpp"
#include "streamrec/finite_field.hpp"
#include "streamrec/ll1.hpp"
#include "streamrec/oracles.hpp"
#include "streamrec/report.hpp"

namespace streamrec {

namespace {

struct Options {
  std::string grammar_path;
  std::string input_path;
  std::uint64_t seed = 0x5eed;
  std::optional<std::uint64_t> prime;
  std::size_t passes = 1;
  std::optional<std::uint64_t> bound;
  bool alpha_exhaustive = false;
  bool one_turn = false;
  std::string report = "json";
  std::string algo;
  std::string target;
  std::string mode;
  std::string kind;
  std::string grammar_class;
  std::uint64_t prime_n = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path, std::istream& in) {
  if (path.empty()) throw UsageError("missing file path");
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

struct LoadedInput {
  Grammar grammar;
  std::vector<TerminalCode> codes;
};

LoadedInput load_grammar_input(const Options& opt, std::istream& in) {
  Grammar g = parse_grammar(read_text(opt.grammar_path, in));
  const InputString s = parse_input_string(read_text(opt.input_path, in));
  auto codes = g.encode(s.tokens);
  return {std::move(g), std::move(codes)};
}

std::vector<Bracket> load_brackets(const Options& opt, std::istream& in) {
  const InputString s = parse_input_string(read_text(opt.input_path, in));
  std::vector<Bracket> out;
  for (const auto& tok : s.tokens) {
    const auto b = bracket_from(tok);
    if (!b) throw UsageError("'" + tok + "' is not one of ( [ ) ]");
    out.push_back(*b);
  }
  return out;
}

std::uint64_t choose_modulus(const Options& opt, std::uint64_t n) {
  return opt.prime ? *opt.prime : default_prime(n);
}

int emit(const RunReport& report, const Options& opt, std::ostream& out) {
  if (opt.report == "json") out << to_json(report).dump() << '\n';
  return report.decision.accepted ? kExitAccept : kExitReject;
}

/// Runs `once` at the seeded alpha, and at every alpha in [1, p-1] when asked.
template <typename Run>
void randomized(RunReport& report, const Options& opt, std::uint64_t n, Run&& once) {
  const std::uint64_t p = choose_modulus(opt, n);
  const FieldContext ctx(p, sample_point(p, opt.seed));
  report.modulus = p;
  report.alpha = ctx.alpha();
  report.error_bound = ErrorBound{n, p - 1};
  once(ctx, report);
  if (opt.alpha_exhaustive) {
    AlphaSweep sweep;
    for (FieldElem a = 1; a < p; ++a) {
      RunReport scratch;
      once(FieldContext(p, a), scratch);
      sweep.accepting += scratch.decision.accepted ? 1 : 0;
      ++sweep.total;
    }
    report.alpha_sweep = sweep;
  }
}

int cmd_validate(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Grammar g = parse_grammar(read_text(opt.grammar_path, in));
  Verdict verdict;
  if (opt.grammar_class == "dlin") {
    verdict = validate_dlcfg(g);
  } else {
    verdict = validate_ll1(g, compute_select(g));
  }
  nlohmann::ordered_json j;
  j["class"] = opt.grammar_class;
  j["valid"] = verdict.ok();
  j["violations"] = nlohmann::json::array();
  for (const auto& v : verdict.violations) j["violations"].push_back(v.message);
  j["warnings"] = verdict.warnings;
  if (opt.report == "json") out << j.dump() << '\n';
  if (!verdict.ok()) {
    for (const auto& v : verdict.violations) err << "invalid: " << v.message << '\n';
    return kExitUsage;
  }
  return kExitAccept;
}

int cmd_recognize(const Options& opt, std::istream& in, std::ostream& out) {
  RunReport report;
  report.algorithm = opt.algo;

  if (opt.algo == "dyck2-1turn") {
    const auto brackets = load_brackets(opt, in);
    PassStream<Bracket> stream(brackets, brackets.size(), opt.passes);
    StreamBracketSource source(stream);
    SpaceMeter meter;
    const auto r = check_1turn_dyck2_multipass(source, opt.passes, meter);
    report.n = brackets.size();
    report.decision = r.decision;
    report.passes_used = r.passes_used;
    report.peak_words = r.peak_words;
    report.block_len = r.block_len;
    return emit(report, opt, out);
  }

  const LoadedInput input = load_grammar_input(opt, in);
  const std::uint64_t n = input.codes.size();
  report.n = n;

  if (opt.algo == "dlin") {
    const DlinAutomaton automaton(input.grammar);
    randomized(report, opt, n, [&](const FieldContext& ctx, RunReport& r) {
      TokenStream w(input.codes, n);
      SpaceMeter meter;
      r.decision = recognize_dlin(automaton, w, ctx, meter);
      r.passes_used = w.passes_used();
      r.peak_words = meter.peak();
    });
  } else if (opt.algo == "ll1") {
    const Ll1Parser parser(input.grammar);
    const std::uint64_t bound =
        opt.bound ? *opt.bound
                  : (n + 1) * std::max<std::uint64_t>(1, input.grammar.max_body_length());
    report.bound = bound;
    randomized(report, opt, n, [&](const FieldContext& ctx, RunReport& r) {
      TokenStream w(input.codes, n);
      SpaceMeter meter;
      const Ll1Result res = recognize_ll1(parser, w, bound, ctx, meter);
      r.decision = res.decision;
      r.passes_used = w.passes_used();
      r.peak_words = res.peak_words;
      r.peak_items = res.peak_items;
    });
  } else if (opt.algo == "dlin-multipass") {
    const DlinAutomaton automaton(input.grammar);
    TokenStream w(input.codes, n, opt.passes + 1);
    SpaceMeter meter;
    const auto r = recognize_dlin_multipass(automaton, w, opt.passes, meter);
    report.decision = r.decision;
    report.passes_used = r.passes_used;
    report.peak_words = r.peak_words;
    report.block_len = r.block_len;
  } else {
    throw UsageError("unknown algorithm '" + opt.algo + "'");
  }
  return emit(report, opt, out);
}

int cmd_reduce(const Options& opt, std::istream& in, std::ostream& out) {
  const LoadedInput input = load_grammar_input(opt, in);
  const DlinAutomaton automaton(input.grammar);
  TokenStream w(input.codes, input.codes.size());
  const auto tokens = reduce_to_1turn_dyck(automaton, w);

  std::string line;
  auto append = [&line](const std::string& tok) {
    if (!line.empty()) line += ' ';
    line += tok;
  };
  if (opt.target == "dyck-2") {
    for (Bracket b : encode_dyckk_to_dyck2(tokens, automaton.alphabet_size())) {
      append(std::string(1, to_char(b)));
    }
  } else {
    for (const DyckToken& t : tokens) {
      append(input.grammar.terminal_name(t.code) + (t.closer ? "~" : ""));
    }
  }
  out << line << '\n';
  return kExitAccept;
}

int cmd_degseq(const Options& opt, std::istream& in, std::ostream& out) {
  const DegSeqInstance inst = parse_degseq(read_text(opt.input_path, in));
  const auto items = inst.stream_items();
  RunReport report;
  report.algorithm = "degseq-" + opt.mode;
  report.n = inst.n;

  if (opt.mode == "randomized") {
    randomized(report, opt, inst.n, [&](const FieldContext& ctx, RunReport& r) {
      DegSeqStream stream(items, items.size());
      SpaceMeter meter;
      r.decision = degseq_randomized(inst.n, stream, ctx, meter);
      r.passes_used = stream.passes_used();
      r.peak_words = meter.peak();
    });
  } else if (opt.mode == "multipass") {
    DegSeqStream stream(items, items.size(), opt.passes);
    SpaceMeter meter;
    report.decision = degseq_multipass(inst.n, stream, opt.passes, meter);
    report.passes_used = stream.passes_used();
    report.peak_words = meter.peak();
    report.block_len = inst.n == 0 ? 0 : (inst.n + opt.passes - 1) / opt.passes;
  } else {
    throw UsageError("unknown degseq mode '" + opt.mode + "'");
  }
  return emit(report, opt, out);
}

int cmd_oracle(const Options& opt, std::istream& in, std::ostream& out) {
  nlohmann::ordered_json j;
  j["oracle"] = opt.kind;
  bool member = false;

  if (opt.kind == "dyck") {
    const auto brackets = load_brackets(opt, in);
    member = oracle::dyck_explicit(std::span<const Bracket>(brackets), opt.one_turn);
    j["one_turn"] = opt.one_turn;
  } else if (opt.kind == "degseq") {
    member = oracle::degseq_naive(parse_degseq(read_text(opt.input_path, in)));
  } else {
    const LoadedInput input = load_grammar_input(opt, in);
    if (opt.kind == "cyk") {
      member = oracle::cyk_member(input.grammar, input.codes);
    } else if (opt.kind == "cpda") {
      const Verdict v = validate_dlcfg(input.grammar);
      if (!v.ok()) throw InvalidGrammar("not a DL-CFG: " + v.violations.front().message, v);
      const auto trace = oracle::cpda_run(input.grammar, input.codes);
      member = trace.accepted;
      if (trace.rejected_at) j["rejected_at"] = *trace.rejected_at;
    } else if (opt.kind == "ll1") {
      const Verdict v = validate_ll1(input.grammar, compute_select(input.grammar));
      if (!v.ok()) throw InvalidGrammar("not LL(1): " + v.violations.front().message, v);
      const auto report = oracle::ll1_parse_rank(input.grammar, input.codes);
      member = report.accepted;
      j["rank"] = report.rank;
      j["peak_items"] = report.peak_items;
    } else {
      throw UsageError("unknown oracle '" + opt.kind + "'");
    }
  }
  j["member"] = member;
  if (opt.report == "json") out << j.dump() << '\n';
  return member ? kExitAccept : kExitReject;
}

int cmd_prime(const Options& opt, std::ostream& out) {
  const std::uint64_t m = std::max<std::uint64_t>(opt.prime_n, 2);
  nlohmann::ordered_json j;
  j["n"] = opt.prime_n;
  j["lo"] = m * m;
  j["hi"] = 2 * m * m;
  j["p"] = default_prime(opt.prime_n);
  out << j.dump() << '\n';
  return kExitAccept;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"Streaming membership testers with fingerprinted stacks"};
  app.require_subcommand(1);

  auto add_report = [&](CLI::App* sub) {
    sub->add_option("--report", opt.report, "Report format")
        ->check(CLI::IsMember({"json", "quiet"}));
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Seed for the evaluation point");
    sub->add_option("--prime", opt.prime, "Field modulus override");
    sub->add_flag("--alpha-exhaustive", opt.alpha_exhaustive,
                  "Also run every alpha in [1, p-1] and report the accepting fraction");
  };

  auto* validate = app.add_subcommand("validate", "Check a grammar against a class");
  validate->add_option("--grammar", opt.grammar_path)->required();
  validate->add_option("--class", opt.grammar_class)
      ->required()
      ->check(CLI::IsMember({"dlin", "ll1"}));
  add_report(validate);

  auto* recognize = app.add_subcommand("recognize", "Decide membership of an input string");
  recognize->add_option("--algo", opt.algo)
      ->required()
      ->check(CLI::IsMember({"dlin", "ll1", "dyck2-1turn", "dlin-multipass"}));
  recognize->add_option("--grammar", opt.grammar_path);
  recognize->add_option("--input", opt.input_path)->required();
  recognize->add_option("--passes", opt.passes)->check(CLI::PositiveNumber);
  recognize->add_option("--bound", opt.bound, "Compressed stack bound for ll1");
  add_field(recognize);
  add_report(recognize);

  auto* reduce = app.add_subcommand("reduce", "Stream a DLIN input into 1-turn Dyck");
  reduce->add_option("--to", opt.target)->required()->check(CLI::IsMember({"dyck-k", "dyck-2"}));
  reduce->add_option("--grammar", opt.grammar_path)->required();
  reduce->add_option("--input", opt.input_path)->required();

  auto* degseq = app.add_subcommand("degseq", "Verify an out-degree sequence");
  degseq->add_option("--mode", opt.mode)
      ->required()
      ->check(CLI::IsMember({"randomized", "multipass"}));
  degseq->add_option("--input", opt.input_path)->required();
  degseq->add_option("--passes", opt.passes)->check(CLI::PositiveNumber);
  add_field(degseq);
  add_report(degseq);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle_cmd->add_option("--kind", opt.kind)
      ->required()
      ->check(CLI::IsMember({"cyk", "cpda", "ll1", "dyck", "degseq"}));
  oracle_cmd->add_option("--grammar", opt.grammar_path);
  oracle_cmd->add_option("--input", opt.input_path)->required();
  oracle_cmd->add_flag("--one-turn", opt.one_turn, "Dyck oracle: require the 1-turn form");
  add_report(oracle_cmd);

  auto* prime = app.add_subcommand("prime", "Smallest prime in [n^2, 2n^2]");
  prime->add_option("--n", opt.prime_n)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(opt, in, out, err);
    if (*recognize) {
      if (opt.algo != "dyck2-1turn" && opt.grammar_path.empty()) {
        throw UsageError("--grammar is required for --algo " + opt.algo);
      }
      return cmd_recognize(opt, in, out);
    }
    if (*reduce) return cmd_reduce(opt, in, out);
    if (*degseq) return cmd_degseq(opt, in, out);
    if (*oracle_cmd) return cmd_oracle(opt, in, out);
    if (*prime) return cmd_prime(opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace streamrec
