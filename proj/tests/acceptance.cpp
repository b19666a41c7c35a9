// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "streamrec/degseq.hpp"
#include "streamrec/dlin.hpp"
#include "streamrec/dyck_multipass.hpp"
#include "streamrec/ll1.hpp"
#include "streamrec/oracles.hpp"
#include "support.hpp"

using namespace streamrec;

namespace {

constexpr std::uint64_t kP = 101;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string show(const std::vector<TerminalCode>& w) {
  std::string s;
  for (TerminalCode c : w) s += std::to_string(c);
  return s.empty() ? "eps" : s;
}

const std::vector<FieldContext>& all_alphas() {
  static const std::vector<FieldContext> ctxs = [] {
    std::vector<FieldContext> v;
    for (FieldElem a = 1; a < kP; ++a) v.emplace_back(kP, a);
    return v;
  }();
  return ctxs;
}

// 1. Members accept at every alpha; non-members of length n at <= n alphas;
//    membership cross-checked against CYK.
Outcome dlin_completeness_soundness() {
  Outcome o;
  std::size_t words = 0;
  for (auto text : fixtures::dlin_grammars()) {
    const Grammar g = parse_grammar(text);
    const DlinAutomaton automaton(g);
    const oracle::CykOracle cyk(g);
    fixtures::for_each_word(static_cast<std::uint32_t>(g.terminal_count()), 10,
                            [&](const std::vector<TerminalCode>& w) {
      ++words;
      const bool member = cyk.member(w);
      std::size_t accepting = 0;
      for (const FieldContext& ctx : all_alphas()) {
        TokenStream s(w, w.size());
        if (recognize_dlin(automaton, s, ctx).accepted) ++accepting;
      }
      if (member && accepting != kP - 1) o.fail("member " + show(w) + " rejected at some alpha");
      if (!member && accepting > w.size()) {
        o.fail("non-member " + show(w) + " accepted at " + std::to_string(accepting) + " alphas");
      }
    });
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(words) + " words x 100 alphas";
  return o;
}

// 2. Step-by-step equality of (FP(Stack), NonTerm, height) with the
//    explicit automaton, 20 random alphas.
Outcome state_matches_automaton() {
  Outcome o;
  SplitMix64 rng(20240101);
  std::vector<FieldContext> ctxs;
  for (int k = 0; k < 20; ++k) ctxs.emplace_back(kP, sample_point(kP, rng.next()));
  std::size_t steps = 0;

  for (auto text : fixtures::dlin_grammars()) {
    const Grammar g = parse_grammar(text);
    const DlinAutomaton automaton(g);
    fixtures::for_each_word(static_cast<std::uint32_t>(g.terminal_count()), 10,
                            [&](const std::vector<TerminalCode>& w) {
      const oracle::ExplicitCpdaTrace trace = oracle::cpda_run(g, w);
      for (const FieldContext& ctx : ctxs) {
        SpaceMeter meter;
        DlinRecognizer rec(automaton, w.size(), ctx, meter);
        for (std::size_t i = 1; i <= trace.steps.size(); ++i) {
          const oracle::CpdaStep& step = trace.steps[i - 1];
          ++steps;
          if (rec.fingerprint().value() != fp_eval(step.stack, 0, ctx) ||
              rec.fingerprint().height() != step.stack.size() || rec.pending() != step.non_term) {
            o.fail("state differs on " + show(w) + " before symbol " + std::to_string(i));
            return;
          }
          if (i > w.size() || !rec.consume(w[i - 1])) break;
        }
        const bool accepted = rec.position() == w.size() + 1 ? rec.finish().accepted : false;
        if (trace.accepted && !accepted) o.fail("member " + show(w) + " rejected");
      }
    });
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(steps) + " step comparisons";
  return o;
}

// 3. Metered space independent of n.
Outcome space_constancy() {
  Outcome o;
  std::string detail;
  const Grammar anbn = parse_grammar(fixtures::kAnbn);
  const DlinAutomaton automaton(anbn);
  const Ll1Parser anbn_ll1(anbn);
  for (std::uint64_t n : {100u, 10000u, 1000000u}) {
    std::vector<TerminalCode> w(n / 2, 1);
    w.insert(w.end(), n / 2, 2);
    const FieldContext ctx = FieldContext::for_length(n, n);

    TokenStream s(w, n);
    SpaceMeter meter;
    if (!recognize_dlin(automaton, s, ctx, meter).accepted) o.fail("dlin rejected a^k b^k");
    if (meter.peak() > 10) o.fail("dlin peak " + std::to_string(meter.peak()) + " > 10");
    detail += "dlin n=" + std::to_string(n) + ": " + std::to_string(meter.peak()) + "w; ";

    const std::uint64_t b = 2;
    TokenStream s2(w, n);
    SpaceMeter meter2;
    const Ll1Result r = recognize_ll1(anbn_ll1, s2, b, ctx, meter2);
    if (!r.decision.accepted) o.fail("ll1 rejected a^k b^k");
    if (r.peak_words > 3 * b + 8) o.fail("ll1 peak above 3b+8");
  }

  // G2 members of growing rank: a^k b^(k+1).
  const Grammar g2 = parse_grammar(fixtures::kG2);
  const Ll1Parser parser(g2);
  for (std::uint64_t k : {1u, 10u, 100u, 1000u}) {
    std::vector<TerminalCode> w(k, 1);
    w.insert(w.end(), k + 1, 2);
    const std::uint64_t b = oracle::ll1_parse_rank(g2, w).peak_items;
    TokenStream s(w, w.size());
    SpaceMeter meter;
    const Ll1Result r = recognize_ll1(parser, s, b, FieldContext::for_length(w.size(), k), meter);
    if (!r.decision.accepted) o.fail("ll1 rejected a G2 member at its peak bound");
    if (r.peak_words > 3 * b + 8) {
      o.fail("ll1 peak " + std::to_string(r.peak_words) + " > 3b+8 at b=" + std::to_string(b));
    }
    if (k == 1000) detail += "ll1 b=" + std::to_string(b) + ": " + std::to_string(r.peak_words) + "w";
  }
  if (o.ok) o.detail = detail;
  return o;
}

// 4. w in L iff the encoded reduction is in 1-turn Dyck_2.
Outcome reduction_iff() {
  Outcome o;
  std::size_t words = 0;
  for (auto text : fixtures::dlin_grammars()) {
    const Grammar g = parse_grammar(text);
    const DlinAutomaton automaton(g);
    const oracle::CykOracle cyk(g);
    fixtures::for_each_word(static_cast<std::uint32_t>(g.terminal_count()), 12,
                            [&](const std::vector<TerminalCode>& w) {
      ++words;
      TokenStream s(w, w.size());
      const auto reduced = reduce_to_1turn_dyck(automaton, s);
      const auto encoded = encode_dyckk_to_dyck2(reduced, g.terminal_count());
      const bool member = cyk.member(w);
      // The empty word maps to the empty word; 1-turn Dyck_2 needs a pair.
      const bool image = w.empty()
                             ? encoded.empty()
                             : oracle::dyck_explicit(std::span<const Bracket>(encoded), true);
      if (member != image) o.fail("iff broken on " + show(w));
    });
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(words) + " words";
  return o;
}

// 5. Multipass checker agreement, space and pass counts.
Outcome multipass_dyck() {
  Outcome o;
  std::vector<Bracket> w;
  std::size_t runs = 0;
  fixtures::for_each_word(4, 12, [&](const std::vector<TerminalCode>& codes) {
    w.clear();
    for (TerminalCode c : codes) w.push_back(static_cast<Bracket>(c - 1));
    const bool expected = oracle::dyck_explicit(std::span<const Bracket>(w), true);
    for (std::size_t p = 1; p <= 3; ++p) {
      ++runs;
      PassStream<Bracket> stream(w, w.size(), p);
      StreamBracketSource src(stream);
      SpaceMeter meter;
      if (check_1turn_dyck2_multipass(src, p, meter).decision.accepted != expected) {
        o.fail("disagreement at p=" + std::to_string(p));
      }
    }
  });

  std::string detail;
  SplitMix64 rng(4096);
  std::vector<Bracket> big;
  for (int i = 0; i < 2048; ++i) big.push_back(rng.uniform(0, 1) ? Bracket::open_square : Bracket::open_round);
  for (int i = 2048; i-- > 0;) big.push_back(mirror(big[i]));
  for (std::size_t p : {1u, 2u, 4u, 8u}) {
    PassStream<Bracket> stream(big, big.size(), p);
    StreamBracketSource src(stream);
    SpaceMeter meter;
    const MultipassResult r = check_1turn_dyck2_multipass(src, p, meter);
    const std::uint64_t limit = (4096 + 2 * p - 1) / (2 * p) + 8;
    if (!r.decision.accepted) o.fail("n=4096 member rejected");
    if (r.peak_words > limit) o.fail("peak " + std::to_string(r.peak_words) + " > " + std::to_string(limit));
    if (r.passes_used != p) o.fail("passes_used != p");
    detail += "p=" + std::to_string(p) + ": " + std::to_string(r.peak_words) + "w; ";
  }

  const Grammar g = parse_grammar(fixtures::kAnbn);
  const DlinAutomaton automaton(g);
  for (std::size_t p : {1u, 2u, 4u}) {
    std::vector<TerminalCode> x(20, 1);
    x.insert(x.end(), 20, 2);
    TokenStream s(x, x.size(), p + 1);
    SpaceMeter meter;
    const MultipassResult r = recognize_dlin_multipass(automaton, s, p, meter);
    if (!r.decision.accepted || r.passes_used != p + 1) o.fail("dlin multipass pass count");
  }
  if (o.ok) o.detail = detail + std::to_string(runs) + " agreement runs";
  return o;
}

// 6. LL(1): bound semantics, completeness, soundness, CYK agreement.
Outcome ll1_recognizer() {
  Outcome o;
  std::size_t words = 0;
  for (auto text : {fixtures::kG2, fixtures::kAnbn}) {
    const Grammar g = parse_grammar(text);
    const Ll1Parser parser(g);
    const oracle::CykOracle cyk(g);
    fixtures::for_each_word(2, 12, [&](const std::vector<TerminalCode>& w) {
      ++words;
      const bool member = cyk.member(w);
      const oracle::ParseRankReport rank = oracle::ll1_parse_rank(g, w);
      if (rank.accepted != member) o.fail("explicit parse disagrees with CYK on " + show(w));

      const std::uint64_t b = member ? rank.peak_items : w.size() + 2;
      std::size_t accepting = 0;
      for (const FieldContext& ctx : all_alphas()) {
        TokenStream s(w, w.size());
        SpaceMeter meter;
        if (recognize_ll1(parser, s, b, ctx, meter).decision.accepted) ++accepting;
        if (member) {
          TokenStream t(w, w.size());
          SpaceMeter m2;
          const Decision d = recognize_ll1(parser, t, b - 1, ctx, m2).decision;
          if (d.accepted || d.reason != RejectReason::bound_exceeded) {
            o.fail("b-1 did not reject with bound-exceeded on " + show(w));
          }
        }
      }
      if (member && accepting != kP - 1) o.fail("member " + show(w) + " rejected at some alpha");
      if (!member && accepting > w.size()) o.fail("non-member " + show(w) + " accepted too often");
    });
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(words) + " words x 100 alphas";
  return o;
}

// 7. Degree sequences: exhaustive agreement, bad-alpha counts, space.
Outcome degree_sequences() {
  Outcome o;
  std::size_t instances = 0;
  std::vector<FieldContext> ctxs = all_alphas();
  for (std::uint64_t n = 1; n <= 5; ++n) {
    for (std::uint64_t m = 0; m <= 5; ++m) {
      // Edge sources as a nondecreasing sequence (order is irrelevant to
      // both verifiers); the target is fixed per source.
      std::vector<std::uint64_t> sources(m, 1);
      while (true) {
        DegSeqInstance inst;
        inst.n = n;
        for (std::uint64_t u : sources) inst.edges.push_back({u, u % n + 1});
        std::vector<std::uint64_t> d(n, 0);
        while (true) {
          inst.degrees = d;
          ++instances;
          const bool truth = oracle::degseq_naive(inst);
          const auto items = inst.stream_items();
          std::size_t accepting = 0;
          for (const FieldContext& ctx : ctxs) {
            DegSeqStream s(items, items.size());
            SpaceMeter meter;
            if (degseq_randomized(n, s, ctx, meter).accepted) ++accepting;
          }
          if (truth && accepting != kP - 1) o.fail("member rejected by the randomized check");
          if (!truth && accepting > n) o.fail("non-member accepted at more than n alphas");
          for (std::size_t p = 1; p <= n; ++p) {
            DegSeqStream s(items, items.size(), p);
            SpaceMeter meter;
            if (degseq_multipass(n, s, p, meter).accepted != truth) o.fail("multipass disagrees");
          }
          std::size_t i = 0;
          while (i < n && d[i] == m) d[i++] = 0;
          if (i == n) break;
          ++d[i];
        }
        std::size_t j = m;
        while (j > 0 && sources[j - 1] == n) --j;
        if (j == 0) break;
        const std::uint64_t v = sources[j - 1] + 1;
        for (std::size_t k = j - 1; k < m; ++k) sources[k] = v;
      }
    }
  }

  std::string detail = std::to_string(instances) + " instances; ";
  {
    const std::uint64_t n = 100000;
    DegSeqInstance big;
    big.n = n;
    big.degrees.assign(n, 1);
    for (std::uint64_t v = 1; v <= n; ++v) big.edges.push_back({v, (v * 7) % n + 1});
    const auto items = big.stream_items();
    for (std::size_t p : {1u, 10u, 100u}) {
      DegSeqStream s(items, items.size(), p);
      SpaceMeter meter;
      if (!degseq_multipass(n, s, p, meter).accepted) o.fail("multipass rejected a member");
      const std::uint64_t limit = (n + p - 1) / p + 8;
      if (meter.peak() > limit) o.fail("multipass peak above n/p + 8");
      detail += "p=" + std::to_string(p) + ": " + std::to_string(meter.peak()) + "w; ";
    }
  }
  {
    const std::uint64_t n = 1000000;
    std::vector<DegSeqItem> items;
    items.reserve(2 * n);
    for (std::uint64_t v = 1; v <= n; ++v) items.push_back(DegreeEntry{1});
    for (std::uint64_t v = n; v >= 1; --v) items.push_back(Edge{v, 1});
    DegSeqStream s(items, items.size());
    SpaceMeter meter;
    if (!degseq_randomized(n, s, FieldContext::for_length(n, 5), meter).accepted) {
      o.fail("randomized rejected an n=1e6 member");
    }
    if (meter.peak() > 8) o.fail("randomized peak above 8");
    detail += "randomized n=m=1e6: " + std::to_string(meter.peak()) + "w";
  }
  if (o.ok) o.detail = detail;
  return o;
}

// 8. Prime search over the default range.
Outcome prime_range() {
  Outcome o;
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    try {
      const std::uint64_t p = find_prime(n * n, 2 * n * n);
      if (p < n * n || p > 2 * n * n) o.fail("prime outside range at n=" + std::to_string(n));
    } catch (const NoPrimeInRange&) {
      o.fail("no prime found at n=" + std::to_string(n));
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "DLIN completeness and soundness", dlin_completeness_soundness, 60},
      {2, "DLIN state matches the explicit automaton", state_matches_automaton, 0},
      {3, "space independent of input length", space_constancy, 0},
      {4, "reduction to 1-turn Dyck_2 preserves membership", reduction_iff, 0},
      {5, "multipass 1-turn Dyck_2 checker", multipass_dyck, 0},
      {6, "LL(1) recognizer with stack bound", ll1_recognizer, 0},
      {7, "degree-sequence verifiers", degree_sequences, 0},
      {8, "prime in [n^2, 2n^2] for n up to 10^4", prime_range, 30},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      out.fail("took " + std::to_string(secs) + " s");
    }
    if (!out.ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.name,
                secs, out.detail.empty() ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
