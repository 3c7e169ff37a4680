#include <random>

#include "doctest.h"
#include "swaplab/fixtures.hpp"
#include "swaplab/swap_regular.hpp"

using namespace swaplab;

namespace {

Str bin(const std::string& chars) { return Str::from_chars(binary_alphabet(), chars); }

Dfa parity_dfa() {
  return parse_dfa(
      "type: dfa\n"
      "states: even odd\n"
      "alphabet: 0 1\n"
      "start: even\n"
      "finals: even\n"
      "even 0 -> even\n"
      "even 1 -> odd\n"
      "odd 0 -> odd\n"
      "odd 1 -> even\n");
}

// Random total DFA over {0,1} with at least one final state.
Dfa random_dfa(std::mt19937& rng, std::size_t max_states) {
  std::size_t count = 1 + rng() % max_states;
  std::vector<std::string> states;
  for (std::size_t i = 0; i < count; ++i) states.push_back("q" + std::to_string(i));
  std::vector<std::vector<std::string>> table(count);
  for (std::size_t q = 0; q < count; ++q)
    for (int a = 0; a < 2; ++a) table[q].push_back(states[rng() % count]);
  std::vector<std::string> finals;
  for (std::size_t q = 0; q < count; ++q)
    if (rng() % 2) finals.push_back(states[q]);
  if (finals.empty()) finals.push_back(states[rng() % count]);
  return Dfa(states, binary_alphabet(), states[0], finals, table);
}

std::vector<Str> slice_of(const Dfa& d, std::size_t n) {
  std::vector<Str> out;
  for (const Str& w : language_upto(d, n))
    if (w.size() == n) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("the swapping constant is |Q|^k") {
  Dfa d2 = parity_dfa();
  CHECK(swapping_constant(d2) == 2);
  CHECK(swapping_constant(d2, 3) == 8);
  std::mt19937 rng(5);
  Dfa d3 = random_dfa(rng, 3);
  CHECK(swapping_constant(d3, 2) == d3.state_count() * d3.state_count());
  CHECK_THROWS_AS(swapping_constant(d2, 0), Error);
}

TEST_CASE("find_swap pairs two strings that share a trace state") {
  Dfa d = parity_dfa();
  SampleSet s(binary_alphabet(), 3, {bin("110"), bin("101"), bin("011")});
  auto w = find_swap(d, s, 1);
  REQUIRE(w.has_value());
  CHECK(std::set<Str>{w->x, w->y} == std::set<Str>{bin("101"), bin("110")});
  CHECK(d.state_name(w->collision_state) == "odd");
  CHECK(std::set<Str>{w->swapped_xy, w->swapped_yx} ==
        std::set<Str>{bin("101"), bin("110")});
  CHECK(w->verified);
}

TEST_CASE("degenerate cuts pair the two smallest members") {
  Dfa d = parity_dfa();
  SampleSet s(binary_alphabet(), 2, {bin("11"), bin("00")});
  for (std::size_t cut : {std::size_t{0}, std::size_t{2}}) {
    auto w = find_swap(d, s, cut);
    REQUIRE(w.has_value());
    CHECK(w->x == bin("00"));
    CHECK(w->y == bin("11"));
    CHECK(std::set<Str>{w->swapped_xy, w->swapped_yx} == std::set<Str>{bin("00"), bin("11")});
  }
}

TEST_CASE("no collision is possible only with a small sample") {
  Dfa d = parity_dfa();
  // two accepted strings reaching distinct states after one symbol
  SampleSet s(binary_alphabet(), 2, {bin("00"), bin("11")});
  auto w = find_swap(d, s, 1);
  CHECK(!w.has_value());
  CHECK(s.size() <= d.state_count());

  SampleSet tiny(binary_alphabet(), 2, {bin("00")});
  CHECK(!find_swap(d, tiny, 1).has_value());
}

TEST_CASE("find_swap validates its inputs") {
  Dfa d = parity_dfa();
  SampleSet rejected(binary_alphabet(), 2, {bin("01"), bin("10")});
  CHECK_THROWS_AS(find_swap(d, rejected, 1), Error);
  SampleSet ok(binary_alphabet(), 2, {bin("00"), bin("11")});
  CHECK_THROWS_AS(find_swap(d, ok, 3), Error);
}

TEST_CASE("the pigeonhole guarantee holds whenever |S| > |Q|") {
  std::mt19937 rng(99);
  int tested = 0;
  while (tested < 40) {
    Dfa d = random_dfa(rng, 4);
    std::size_t n = 3 + rng() % 5;
    auto slice = slice_of(d, n);
    if (slice.size() <= d.state_count()) continue;
    ++tested;
    std::shuffle(slice.begin(), slice.end(), rng);
    slice.resize(d.state_count() + 1);
    SampleSet s(binary_alphabet(), n, slice);
    for (std::size_t cut = 0; cut <= n; ++cut) {
      auto w = find_swap(d, s, cut);
      REQUIRE(w.has_value());
      REQUIRE(w->x != w->y);
      REQUIRE(dfa_run(d, w->swapped_xy).accepted);
      REQUIRE(dfa_run(d, w->swapped_yx).accepted);
    }
  }
}

TEST_CASE("find_swap is deterministic") {
  std::mt19937 rng(123);
  Dfa d = random_dfa(rng, 4);
  std::size_t n = 6;
  auto slice = slice_of(d, n);
  if (slice.size() > 1) {
    SampleSet s(binary_alphabet(), n, slice);
    for (std::size_t cut = 0; cut <= n; ++cut) {
      auto a = find_swap(d, s, cut);
      auto b = find_swap(d, s, cut);
      REQUIRE(a.has_value() == b.has_value());
      if (a) {
        CHECK(a->x == b->x);
        CHECK(a->y == b->y);
        CHECK(a->swapped_xy == b->swapped_xy);
      }
    }
  }
}

TEST_CASE("multi-cut witnesses verify all block swaps") {
  std::mt19937 rng(7);
  int tested = 0;
  while (tested < 15) {
    Dfa d = random_dfa(rng, 3);
    std::size_t n = 8;
    auto slice = slice_of(d, n);
    std::size_t need = d.state_count() * d.state_count() + 1;
    if (slice.size() < need) continue;
    ++tested;
    std::shuffle(slice.begin(), slice.end(), rng);
    slice.resize(need);
    SampleSet s(binary_alphabet(), n, slice);
    std::vector<std::size_t> blocks{2, 3};
    auto w = find_swap_multi(d, s, blocks);
    REQUIRE(w.has_value());
    REQUIRE(w->swapped.size() == 2);
    for (const auto& pair : w->swapped) {
      REQUIRE(dfa_run(d, pair.x_variant).accepted);
      REQUIRE(dfa_run(d, pair.y_variant).accepted);
    }
  }
}

TEST_CASE("a single block reduces to the single-cut finder") {
  Dfa d = parity_dfa();
  SampleSet s(binary_alphabet(), 3, {bin("110"), bin("101"), bin("011")});
  auto multi = find_swap_multi(d, s, {1});
  auto single = find_swap(d, s, 1);
  REQUIRE(multi.has_value());
  REQUIRE(single.has_value());
  CHECK(multi->x == single->x);
  CHECK(multi->y == single->y);
  // swapping the first block exchanges the prefixes: y1 x2 and x1 y2
  CHECK(multi->swapped[0].x_variant == single->swapped_yx);
  CHECK(multi->swapped[0].y_variant == single->swapped_xy);
}

TEST_CASE("find_swap_multi rejects bad blocks") {
  Dfa d = parity_dfa();
  SampleSet s(binary_alphabet(), 3, {bin("110"), bin("101")});
  CHECK_THROWS_AS(find_swap_multi(d, s, {2, 2}), Error);
  CHECK_THROWS_AS(find_swap_multi(d, s, {}), Error);
  CHECK_THROWS_AS(find_swap_multi(d, s, {0, 1}), Error);
}

TEST_CASE("cross-half swaps on equal samples reproduce the counting contradiction") {
  // A one-state machine accepts every tracked string, so the lemma's swap is
  // guaranteed; the swapped upper tracks then leave Equal whenever the
  // colliding pair differs, which is what rules out small advised acceptors.
  std::size_t n = 10;
  auto s = equal_samples(n);
  Str advice(binary_alphabet(), std::vector<SymbolId>(n, 0));
  auto tracked = tracked_samples(s, advice);

  auto product = tracked.alphabet();
  std::vector<std::vector<std::string>> table(1);
  for (std::size_t i = 0; i < product->size(); ++i) table[0].push_back("acc");
  Dfa all(std::vector<std::string>{"acc"}, product, "acc", {"acc"}, table);

  auto w = find_swap(all, tracked, n / 2);
  REQUIRE(w.has_value());
  auto upper_x = split_track(w->x, binary_alphabet(), binary_alphabet()).upper;
  auto upper_y = split_track(w->y, binary_alphabet(), binary_alphabet()).upper;
  std::size_t j = count_symbol(prefix(upper_x, n / 2), "0");
  std::size_t k = count_symbol(prefix(upper_y, n / 2), "0");
  REQUIRE(j != k);

  auto swapped_upper = split_track(w->swapped_xy, binary_alphabet(), binary_alphabet()).upper;
  CHECK(count_symbol(swapped_upper, "0") == j + n / 2 - k);
  CHECK(count_symbol(swapped_upper, "0") != n / 2);
  CHECK(!fixture_predicate("equal").member(swapped_upper));
}

TEST_CASE("block swaps on gt samples flip the majority") {
  for (std::size_t m : {std::size_t{3}, std::size_t{5}, std::size_t{7}}) {
    auto s = gt_samples(m);
    auto members = s.strings();
    auto gt = fixture_predicate("gt");
    for (std::size_t k = 0; k < members.size(); ++k)
      for (std::size_t l = 0; l < members.size(); ++l) {
        if (k == l) continue;
        // identify the block index of each member by its special block
        auto block_of = [&](const Str& w) {
          for (std::size_t b = 0; b < m; ++b)
            if (count_symbol(middle(w, b * m, (b + 1) * m), "0") == 1) return b;
          return m;
        };
        std::size_t bl = block_of(members[l]);
        REQUIRE(bl < m);
        // swap the l-th blocks of w^{(k)} and w^{(l)}
        Str swapped_k = prefix(members[k], bl * m) +
                        middle(members[l], bl * m, (bl + 1) * m) +
                        suffix(members[k], m * m - (bl + 1) * m);
        std::size_t zeros = count_symbol(swapped_k, "0");
        std::size_t ones = count_symbol(swapped_k, "1");
        REQUIRE(ones == zeros + m - 2);
        REQUIRE(!gt.member(swapped_k));
      }
  }
}
