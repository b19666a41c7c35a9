#include <doctest.h>

#include "streamrec/dyck_multipass.hpp"
#include "streamrec/oracles.hpp"
#include "support.hpp"

using namespace streamrec;

namespace {

std::vector<Bracket> parse(std::string_view s) {
  std::vector<Bracket> out;
  for (char c : s) out.push_back(*bracket_from(std::string_view(&c, 1)));
  return out;
}

MultipassResult check(const std::vector<Bracket>& w, std::size_t p) {
  PassStream<Bracket> stream(w, w.size(), p);
  StreamBracketSource src(stream);
  SpaceMeter meter;
  return check_1turn_dyck2_multipass(src, p, meter);
}

MultipassResult dlin_mp(const DlinAutomaton& a, const std::vector<TerminalCode>& w, std::size_t p) {
  TokenStream s(w, w.size(), p + 1);
  SpaceMeter meter;
  return recognize_dlin_multipass(a, s, p, meter);
}

}  // namespace

TEST_CASE("BlockPlan mirrors left blocks into the right half") {
  const BlockPlan plan(12, 2);
  CHECK(plan.block_len == 3);
  CHECK(plan.left_block(0) == std::pair<std::uint64_t, std::uint64_t>{1, 3});
  CHECK(plan.left_block(1) == std::pair<std::uint64_t, std::uint64_t>{4, 6});
  CHECK(plan.right_block(0) == std::pair<std::uint64_t, std::uint64_t>{10, 12});
  CHECK(plan.right_block(1) == std::pair<std::uint64_t, std::uint64_t>{7, 9});

  // 2p does not divide n: the last left block is short, its partner too.
  const BlockPlan odd(10, 2);
  CHECK(odd.block_len == 3);
  CHECK(odd.left_block(1) == std::pair<std::uint64_t, std::uint64_t>{4, 5});
  CHECK(odd.right_block(1) == std::pair<std::uint64_t, std::uint64_t>{6, 7});
}

TEST_CASE("multipass checker examples") {
  const auto ok = check(parse("([])"), 1);
  CHECK(ok.decision.accepted);
  CHECK(ok.passes_used == 1);
  CHECK(ok.block_len == 2);

  const auto bad = check(parse("([)]"), 1);
  CHECK_FALSE(bad.decision.accepted);
  CHECK(bad.decision.reason == RejectReason::mismatch);

  const auto two = check(parse("(([[]]))"), 2);
  CHECK(two.decision.accepted);
  CHECK(two.passes_used == 2);

  CHECK(check(parse("(()"), 1).decision.reason == RejectReason::odd_length);
  CHECK(check(parse("()()"), 1).decision.reason == RejectReason::half_violation);
  CHECK(check({}, 1).decision.reason == RejectReason::empty_input);
}

TEST_CASE("checker refuses to run past the pass budget") {
  const auto w = parse("(())");
  PassStream<Bracket> stream(w, w.size(), 1);
  StreamBracketSource src(stream);
  SpaceMeter meter;
  CHECK_THROWS_AS(check_1turn_dyck2_multipass(src, 2, meter), PassBudgetExceeded);
}

TEST_CASE("multipass checker agrees with the explicit check up to length 10") {
  for (std::size_t p = 1; p <= 3; ++p) {
    fixtures::for_each_word(4, 10, [&](const std::vector<TerminalCode>& codes) {
      std::vector<Bracket> w;
      for (TerminalCode c : codes) w.push_back(static_cast<Bracket>(c - 1));
      const bool expected = oracle::dyck_explicit(std::span<const Bracket>(w), true);
      REQUIRE(check(w, p).decision.accepted == expected);
    });
  }
}

TEST_CASE("multipass space stays near n/2p") {
  SplitMix64 rng(11);
  std::vector<Bracket> w;
  for (int i = 0; i < 500; ++i) w.push_back(rng.uniform(0, 1) ? Bracket::open_square : Bracket::open_round);
  for (int i = 500; i-- > 0;) w.push_back(mirror(w[i]));
  for (std::size_t p : {1u, 3u, 7u, 500u}) {
    const auto r = check(w, p);
    CHECK(r.decision.accepted);
    CHECK(r.passes_used == p);
    CHECK(r.peak_words <= (1000 + 2 * p - 1) / (2 * p) + 8);
  }
}

TEST_CASE("deterministic multipass DLIN examples") {
  const Grammar g = parse_grammar(fixtures::kAnbn);
  const DlinAutomaton a(g);

  const auto aabb = dlin_mp(a, fixtures::encode(g, "a a b b"), 2);
  CHECK(aabb.decision.accepted);
  CHECK(aabb.passes_used == 3);

  CHECK_FALSE(dlin_mp(a, fixtures::encode(g, "a a b a"), 2).decision.accepted);

  const auto aab = dlin_mp(a, fixtures::encode(g, "a a b"), 1);
  CHECK_FALSE(aab.decision.accepted);
  CHECK(aab.passes_used == 1);

  CHECK(dlin_mp(a, {}, 1).decision.accepted);
}

TEST_CASE("deterministic multipass DLIN agrees with CYK") {
  for (auto text : fixtures::dlin_grammars()) {
    const Grammar g = parse_grammar(text);
    const DlinAutomaton a(g);
    const oracle::CykOracle cyk(g);
    const std::size_t max_len = g.terminal_count() == 3 ? 7 : 10;
    fixtures::for_each_word(static_cast<std::uint32_t>(g.terminal_count()), max_len,
                            [&](const std::vector<TerminalCode>& w) {
                              const bool expected = cyk.member(w);
                              for (std::size_t p : {1u, 2u}) {
                                REQUIRE(dlin_mp(a, w, p).decision.accepted == expected);
                              }
                            });
  }
}
