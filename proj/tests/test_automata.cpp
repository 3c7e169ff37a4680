#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "swaplab/automata.hpp"
#include "swaplab/grammar.hpp"

using namespace swaplab;

namespace {

const char* kParityDfa =
    "type: dfa\n"
    "states: even odd\n"
    "alphabet: 0 1\n"
    "start: even\n"
    "finals: even\n"
    "even 0 -> even\n"
    "even 1 -> odd\n"
    "odd 0 -> odd\n"
    "odd 1 -> even\n";

const char* kAnbnNpda =
    "type: npda\n"
    "states: q0 q1 qf\n"
    "alphabet: a b\n"
    "stack_alphabet: S B z\n"
    "start: q0\n"
    "stack_start: z\n"
    "finals: qf\n"
    "q0 CENT z -> q1 push:S z\n"
    "q1 a S -> q1 push:S B\n"
    "q1 a S -> q1 push:B\n"
    "q1 b B -> q1 push:-\n"
    "q1 DOLLAR z -> qf push:z\n";

Str over(const AlphabetPtr& a, const std::string& chars) {
  return Str::from_chars(a, chars);
}

}  // namespace

TEST_CASE("dfa runs record the full state trace") {
  Dfa d = parse_dfa(kParityDfa);
  auto run = dfa_run(d, over(d.input_alphabet(), "11"));
  CHECK(run.accepted);
  REQUIRE(run.trace.size() == 3);
  CHECK(d.state_name(run.trace[0]) == "even");
  CHECK(d.state_name(run.trace[1]) == "odd");
  CHECK(d.state_name(run.trace[2]) == "even");

  auto empty = dfa_run(d, over(d.input_alphabet(), ""));
  CHECK(empty.accepted);  // start state is final
  CHECK(empty.trace == std::vector<std::uint32_t>{d.start()});

  CHECK(dfa_run(d, over(d.input_alphabet(), "110")).accepted);
  CHECK(!dfa_run(d, over(d.input_alphabet(), "1")).accepted);
}

TEST_CASE("dfa traces are prefix coherent") {
  Dfa d = parse_dfa(kParityDfa);
  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    std::string chars;
    for (std::size_t i = 0; i < rng() % 10; ++i) chars += char('0' + rng() % 2);
    Str w = over(d.input_alphabet(), chars);
    auto full = dfa_run(d, w);
    REQUIRE(full.trace.size() == w.size() + 1);
    for (std::size_t i = 0; i <= w.size(); ++i) {
      auto part = dfa_run(d, prefix(w, i));
      REQUIRE(std::equal(part.trace.begin(), part.trace.end(), full.trace.begin()));
    }
  }
}

TEST_CASE("gnf npda accepts a^n b^n with the expected stack contents") {
  Npda m = parse_npda(kAnbnNpda);
  CHECK(m.gnf_normal());
  CHECK(m.bounded());

  auto path = npda_accepts(m, over(m.input_alphabet(), "aabb"));
  REQUIRE(path.has_value());
  const char* expected[] = {"z", "S z", "S B z", "B B z", "B z", "z", "z"};
  for (Boundary b = -1; b <= 5; ++b)
    CHECK(path->at_boundary(b).stack.text() == expected[b + 1]);

  CHECK(npda_accepts(m, over(m.input_alphabet(), "ab")).has_value());
  CHECK(!npda_accepts(m, over(m.input_alphabet(), "a")).has_value());
  CHECK(!npda_accepts(m, over(m.input_alphabet(), "")).has_value());
  CHECK(!npda_accepts(m, over(m.input_alphabet(), "abab")).has_value());
}

TEST_CASE("accepting paths validate against the machine") {
  Npda m = parse_npda(kAnbnNpda);
  Str x = over(m.input_alphabet(), "aabb");
  auto path = npda_accepts(m, x);
  REQUIRE(path.has_value());
  CHECK_NOTHROW(validate_path(m, x, *path));

  AcceptingPath broken = *path;
  broken.configs[2].stack = broken.configs[1].stack;
  CHECK_THROWS_AS(validate_path(m, x, broken), Error);
  CHECK_THROWS_AS(validate_path(m, over(m.input_alphabet(), "ab"), *path), Error);
}

TEST_CASE("path enumeration matches the derivation-count oracle") {
  // ambiguous: S -> a S | a T | a ; T -> a
  Cfg g = parse_cfg("start: S\nS -> a S | a T | a\nT -> a\n");
  Npda m = cfg_to_npda(g);
  for (std::size_t len = 1; len <= 6; ++len) {
    Str x(m.input_alphabet(), std::vector<SymbolId>(len, m.input_alphabet()->id("a")));
    auto paths = enumerate_accepting_paths(m, x);
    CHECK(paths.size() == testoracle::count_leftmost_derivations(g, x));
    for (const auto& p : paths) CHECK_NOTHROW(validate_path(m, x, p));
  }

  // unambiguous machine: exactly one path per accepted input
  Npda anbn = parse_npda(kAnbnNpda);
  CHECK(enumerate_accepting_paths(anbn, over(anbn.input_alphabet(), "aaabbb")).size() == 1);
  CHECK(enumerate_accepting_paths(anbn, over(anbn.input_alphabet(), "aab")).empty());
}

TEST_CASE("path enumeration honors the limit") {
  Cfg g = parse_cfg("start: S\nS -> a S | a T | a\nT -> a T | a\n");
  Npda m = cfg_to_npda(g);
  Str x(m.input_alphabet(), std::vector<SymbolId>(6, m.input_alphabet()->id("a")));
  auto all = enumerate_accepting_paths(m, x);
  REQUIRE(all.size() > 2);
  auto some = enumerate_accepting_paths(m, x, 2);
  CHECK(some.size() == 2);
  CHECK(some[0].transitions == all[0].transitions);
  CHECK(some[1].transitions == all[1].transitions);
}

TEST_CASE("language_upto enumerates bounded slices") {
  Dfa parity = parse_dfa(kParityDfa);
  auto slice = language_upto(parity, 2);
  std::set<Str> expect{over(parity.input_alphabet(), ""), over(parity.input_alphabet(), "0"),
                       over(parity.input_alphabet(), "00"),
                       over(parity.input_alphabet(), "11")};
  CHECK(slice == expect);

  Npda anbn = parse_npda(kAnbnNpda);
  auto words = language_upto(anbn, 4);
  std::set<Str> expect2{over(anbn.input_alphabet(), "ab"),
                        over(anbn.input_alphabet(), "aabb")};
  CHECK(words == expect2);

  CHECK(language_upto(anbn, 0).empty());
  auto zero = language_upto(parity, 0);
  CHECK(zero == std::set<Str>{over(parity.input_alphabet(), "")});
}

TEST_CASE("language_upto rejects lengths beyond the cap and tiny budgets") {
  Npda anbn = parse_npda(kAnbnNpda);
  CHECK_THROWS_AS(language_upto(anbn, 13), Error);
  CHECK_THROWS_AS(language_upto(anbn, 8, kDefaultMaxLen, 10), Error);
}

TEST_CASE("gnf accepting paths satisfy the structural invariants") {
  Npda m = parse_npda(kAnbnNpda);
  for (const Str& x : language_upto(m, 8)) {
    for (const auto& p : enumerate_accepting_paths(m, x)) {
      std::size_t n = x.size();
      CHECK(p.at_boundary(-1).stack.text() == "z");
      CHECK(p.at_boundary(0).stack.size() == 2);
      CHECK(p.at_boundary(static_cast<Boundary>(n)).stack.text() == "z");
      CHECK(p.at_boundary(static_cast<Boundary>(n) + 1).stack.text() == "z");
      for (Boundary b = 0; b <= static_cast<Boundary>(n); ++b)
        CHECK(p.at_boundary(b).state == m.work_state());
      for (const auto& c : p.configs) CHECK(c.stack.size() >= 1);
    }
  }
}

TEST_CASE("structural flags require the exact three-state shape") {
  // a second working state breaks the normal form
  Npda loose = parse_npda(
      "type: npda\n"
      "states: q0 q1 q2 qf\n"
      "alphabet: a\n"
      "stack_alphabet: S z\n"
      "start: q0\n"
      "stack_start: z\n"
      "finals: qf\n"
      "q0 CENT z -> q1 push:S z\n"
      "q1 a S -> q2 push:S\n"
      "q2 a S -> q1 push:-\n"
      "q1 DOLLAR z -> qf push:z\n");
  CHECK(!loose.gnf_normal());

  // a push of length three keeps the normal form but loses boundedness
  Npda tall = parse_npda(
      "type: npda\n"
      "states: q0 q1 qf\n"
      "alphabet: a b\n"
      "stack_alphabet: S B z\n"
      "start: q0\n"
      "stack_start: z\n"
      "finals: qf\n"
      "q0 CENT z -> q1 push:S z\n"
      "q1 a S -> q1 push:S B B\n"
      "q1 a S -> q1 push:B B\n"
      "q1 b B -> q1 push:-\n"
      "q1 DOLLAR z -> qf push:z\n");
  CHECK(tall.gnf_normal());
  CHECK(!tall.bounded());
}

TEST_CASE("machine files round-trip through the canonical serialization") {
  Npda m = parse_npda(kAnbnNpda);
  std::string text = serialize_npda(m);
  Npda again = parse_npda(text);
  CHECK(serialize_npda(again) == text);
  CHECK(again.gnf_normal());

  Dfa d = parse_dfa(kParityDfa);
  std::string dtext = serialize_dfa(d);
  CHECK(serialize_dfa(parse_dfa(dtext)) == dtext);
}

TEST_CASE("parser rejects malformed machines") {
  CHECK_THROWS_AS(parse_npda("type: npda\n"), Error);
  CHECK_THROWS_AS(parse_dfa("type: dfa\nstates: q\nalphabet: 0\nstart: q\nfinals: q\n"),
                  Error);  // missing transition row
  // endmarker tokens are reserved
  CHECK_THROWS_AS(parse_npda(
                      "type: npda\n"
                      "states: q0 q1 qf\n"
                      "alphabet: a CENT\n"
                      "stack_alphabet: S z\n"
                      "start: q0\n"
                      "stack_start: z\n"
                      "finals: qf\n"
                      "q0 CENT z -> q1 push:S z\n"
                      "q1 DOLLAR z -> qf push:z\n"),
                  Error);
}
