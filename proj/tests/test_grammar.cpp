#include "doctest.h"
#include "oracles.hpp"
#include "swaplab/fixtures.hpp"
#include "swaplab/grammar.hpp"

using namespace swaplab;

namespace {

std::set<Str> words(const AlphabetPtr& a, std::initializer_list<const char*> items) {
  std::set<Str> out;
  for (const char* w : items) out.insert(Str::from_chars(a, w));
  return out;
}

}  // namespace

TEST_CASE("generate_upto derives exactly the bounded slice") {
  Cfg g = parse_cfg("start: S\nS -> a S b | a b\n");
  auto upto6 = generate_upto(g, 6);
  CHECK(upto6 == words(g.terminals(), {"ab", "aabb", "aaabbb"}));
  CHECK(generate_upto(g, 1).empty());

  Cfg single = parse_cfg("start: S\nS -> a\n");
  CHECK(generate_upto(single, 0).empty());

  // L(g) empty: the only production loops forever
  Cfg dead = parse_cfg("start: S\nS -> a S\n");
  CHECK(generate_upto(dead, 8).empty());
}

TEST_CASE("generate_upto enforces its budget") {
  Cfg g = parse_cfg("start: S\nS -> a S | a\n");
  CHECK_THROWS_AS(generate_upto(g, 8, 3), Error);
}

TEST_CASE("to_greibach yields GNF with the same bounded language") {
  Cfg g = parse_cfg("start: S\nS -> a S b | a b\n");
  Cfg gnf = to_greibach(g);
  CHECK(is_gnf(gnf));
  CHECK(generate_upto(gnf, 10) == generate_upto(g, 10));

  // already in normal form: shape and language survive the pipeline
  Cfg done = parse_cfg("start: S\nS -> a S B | a B\nB -> b\n");
  Cfg done2 = to_greibach(done);
  CHECK(is_gnf(done2));
  CHECK(generate_upto(done2, 10) == generate_upto(done, 10));

  // left recursion
  Cfg rec = parse_cfg("start: S\nS -> S a | a\n");
  Cfg rec2 = to_greibach(rec);
  CHECK(is_gnf(rec2));
  CHECK(generate_upto(rec2, 8) == generate_upto(rec, 8));
}

TEST_CASE("to_greibach handles lambda and unit productions") {
  // L = {a^n b^m : n >= m >= 0, n >= 1} via a nullable helper
  Cfg g = parse_cfg("start: S\nS -> a S B | a\nB -> b | EPS\n");
  Cfg gnf = to_greibach(g);
  CHECK(is_gnf(gnf));
  CHECK(generate_upto(gnf, 7) == generate_upto(g, 7));

  Cfg units = parse_cfg("start: S\nS -> A\nA -> B\nB -> a B | a\n");
  Cfg gnf2 = to_greibach(units);
  CHECK(is_gnf(gnf2));
  CHECK(generate_upto(gnf2, 6) == generate_upto(units, 6));
}

TEST_CASE("to_greibach rejects empty-string and empty languages") {
  CHECK_THROWS_AS(to_greibach(parse_cfg("start: S\nS -> a S | EPS\n")), Error);
  CHECK_THROWS_AS(to_greibach(parse_cfg("start: S\nS -> a S\n")), Error);
}

TEST_CASE("to_greibach survives adversarial grammars") {
  const char* grammars[] = {
      // indirect left recursion through two variables
      "start: S\nS -> A a | b\nA -> S b | a\n",
      // nullable helper inside a recursion
      "start: S\nS -> A S b | a\nA -> a A | EPS\n",
      // unit chain into a left-recursive variable
      "start: S\nS -> A\nA -> B\nB -> B a | b\n",
      // two useless variables and an unreachable one
      "start: S\nS -> a S | a | D\nD -> D d\nU -> u\n",
      // mixed: lambda, units, recursion in a later variable
      "start: S\nS -> A B | b\nA -> a | EPS\nB -> B b | b\n",
  };
  for (const char* text : grammars) {
    CAPTURE(text);
    Cfg g = parse_cfg(text);
    Cfg gnf = to_greibach(g);
    REQUIRE(is_gnf(gnf));
    REQUIRE(generate_upto(gnf, 7) == generate_upto(g, 7));
    // the compiled machine agrees as well
    REQUIRE(language_upto(cfg_to_npda(gnf), 6) == generate_upto(g, 6));
  }
}

TEST_CASE("cfg_to_npda realizes the grammar as a three-state machine") {
  Cfg g = parse_cfg("start: S\nS -> a S B | a B\nB -> b\n");
  Npda m = cfg_to_npda(g);
  CHECK(m.gnf_normal());
  CHECK(m.states().size() == 3);

  auto path = npda_accepts(m, Str::from_chars(m.input_alphabet(), "aabb"));
  REQUIRE(path.has_value());
  const char* expected[] = {"z", "S z", "S B z", "B B z", "B z", "z", "z"};
  for (Boundary b = -1; b <= 5; ++b)
    CHECK(path->at_boundary(b).stack.text() == expected[b + 1]);

  // no transition fires with the stack start on top mid-input
  for (const auto& t : m.transitions()) {
    if (t.input == m.cent() || t.input == m.dollar()) continue;
    CHECK(t.top != m.stack_start());
  }

  CHECK(language_upto(m, 8) == generate_upto(g, 8));
  CHECK_THROWS_AS(cfg_to_npda(parse_cfg("start: S\nS -> a S b | a b\n")), Error);
}

TEST_CASE("bound_stack_growth leaves short-push machines alone") {
  Npda m = cfg_to_npda(to_greibach(fixture_grammar("anbn")));
  REQUIRE(m.bounded());
  Npda b = bound_stack_growth(m);
  CHECK(serialize_npda(b) == serialize_npda(m));
}

TEST_CASE("bound_stack_growth groups symbols down to two-symbol pushes") {
  Cfg g = fixture_grammar("ab2");  // pushes three symbols per a
  Npda m = cfg_to_npda(g);
  REQUIRE(m.gnf_normal());
  REQUIRE(!m.bounded());

  Npda b = bound_stack_growth(m);
  CHECK(b.gnf_normal());
  CHECK(b.bounded());
  for (const auto& t : b.transitions()) CHECK(t.push.size() <= 2);

  // initial move plants (S)(z) over the grouped stack start (z)
  for (const auto& t : b.transitions()) {
    if (t.input != b.cent()) continue;
    REQUIRE(t.push.size() == 2);
    CHECK(b.stack_alphabet()->token(t.top) == "(z)");
    CHECK(b.stack_alphabet()->token(t.push[0]) == "(S)");
    CHECK(b.stack_alphabet()->token(t.push[1]) == "(z)");
  }

  CHECK(language_upto(b, 8) == language_upto(m, 8));
  CHECK(language_upto(b, 8) == generate_upto(g, 8));
}

TEST_CASE("bound_stack_growth handles pushes of length four") {
  // {a^n b^{3n}}: compiling pushes four symbols per a
  Cfg g = parse_cfg("start: S\nS -> a S B B B | a B B B\nB -> b\n");
  Npda m = cfg_to_npda(g);
  std::size_t widest = 0;
  for (const auto& t : m.transitions()) widest = std::max(widest, t.push.size());
  REQUIRE(widest == 4);

  Npda b = bound_stack_growth(m);
  CHECK(b.gnf_normal());
  CHECK(b.bounded());
  CHECK(language_upto(b, 8) == generate_upto(g, 8));
  // groups stay below the original maximal push
  for (const auto& tok : b.stack_alphabet()->tokens())
    CHECK(std::count(tok.begin(), tok.end(), ',') <= 2);
}

TEST_CASE("bound_stack_growth requires the normal form") {
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
  CHECK_THROWS_AS(bound_stack_growth(loose), Error);
}

TEST_CASE("the full pipeline preserves every fixture language") {
  for (const auto& name : fixture_grammar_names()) {
    CAPTURE(name);
    Cfg g = fixture_grammar(name);
    Cfg gnf = to_greibach(g);
    REQUIRE(is_gnf(gnf));
    Npda m = cfg_to_npda(gnf);
    Npda b = bound_stack_growth(m);
    auto from_grammar = generate_upto(g, 8);
    CHECK(from_grammar == generate_upto(gnf, 8));
    CHECK(from_grammar == language_upto(m, 8));
    CHECK(from_grammar == language_upto(b, 8));
  }
}

TEST_CASE("grammar files round-trip") {
  Cfg g = parse_cfg("start: S\nS -> a S b | a b\n");
  std::string text = serialize_cfg(g);
  CHECK(serialize_cfg(parse_cfg(text)) == text);
  CHECK_THROWS_AS(parse_cfg("S -> a\n"), Error);           // missing start
  CHECK_THROWS_AS(parse_cfg("start: S\nS -> a |\n"), Error);  // empty alternative
}
