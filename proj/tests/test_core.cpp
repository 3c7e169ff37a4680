#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "swaplab/core.hpp"

using namespace swaplab;

namespace {

Str bin(const std::string& chars) {
  static const AlphabetPtr alph = make_alphabet({"0", "1"});
  return Str::from_chars(alph, chars);
}

Str abc(const std::string& chars) {
  static const AlphabetPtr alph = make_alphabet({"a", "b", "c"});
  return Str::from_chars(alph, chars);
}

}  // namespace

TEST_CASE("prefix takes the first i symbols") {
  CHECK(prefix(bin("0110"), 0) == bin(""));
  CHECK(prefix(bin("0110"), 4) == bin("0110"));
  CHECK(prefix(abc("abc"), 2) == abc("ab"));
  CHECK_THROWS_AS(prefix(bin("01"), 3), Error);
}

TEST_CASE("suffix takes the last i symbols") {
  CHECK(suffix(bin("0110"), 0) == bin(""));
  CHECK(suffix(bin("0110"), 2) == bin("10"));
  CHECK(suffix(abc("abc"), 3) == abc("abc"));
  CHECK_THROWS_AS(suffix(abc("abc"), 4), Error);
}

TEST_CASE("middle drops the first i and last n-j symbols") {
  CHECK(middle(bin("010011"), 2, 4) == bin("00"));
  CHECK(middle(abc("abc"), 0, 3) == abc("abc"));
  CHECK(middle(bin("0110"), 2, 2) == bin(""));
  CHECK_THROWS_AS(middle(bin("0110"), 3, 2), Error);
  CHECK_THROWS_AS(middle(bin("0110"), 2, 5), Error);
}

TEST_CASE("the i-th symbol accessor is 1-based") {
  CHECK(abc("abc").alphabet()->token(symbol_at(abc("abc"), 2)) == "b");
  CHECK_THROWS_AS(symbol_at(abc("abc"), 0), Error);
  CHECK_THROWS_AS(symbol_at(abc("abc"), 4), Error);
}

TEST_CASE("decomposition identity on the worked example") {
  Str w = bin("010011");
  CHECK(prefix(w, 2) + middle(w, 2, 4) + suffix(w, w.size() - 4) == w);
  CHECK(prefix(w, 2).text() == "0 1");
  CHECK(middle(w, 2, 4).text() == "0 0");
  CHECK(suffix(w, 2).text() == "1 1");
}

TEST_CASE("decomposition identity holds for random triples") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 10'000; ++trial) {
    std::size_t alpha_size = 1 + rng() % 4;
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < alpha_size; ++i) tokens.push_back("s" + std::to_string(i));
    auto alph = make_alphabet(tokens);
    std::size_t len = rng() % 24;
    std::vector<SymbolId> ids;
    for (std::size_t i = 0; i < len; ++i)
      ids.push_back(static_cast<SymbolId>(rng() % alpha_size));
    Str w(alph, ids);
    std::size_t j = rng() % (len + 1);
    std::size_t i = rng() % (j + 1);
    Str rebuilt = prefix(w, i) + middle(w, i, j) + suffix(w, len - j);
    REQUIRE(rebuilt == w);
    REQUIRE(prefix(w, i).size() == i);
    REQUIRE(middle(w, i, j).size() == j - i);
    REQUIRE(suffix(w, len - j).size() == len - j);
  }
}

TEST_CASE("count_symbol counts occurrences") {
  CHECK(count_symbol(bin("0100"), "0") == 3);
  CHECK(count_symbol(bin(""), "0") == 0);
  CHECK(count_symbol(bin("011001001"), "0") == 5);
  CHECK_THROWS_AS(count_symbol(bin("01"), "x"), Error);
}

TEST_CASE("count_symbol is additive over concatenation") {
  std::mt19937 rng(777);
  auto alph = make_alphabet({"0", "1"});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SymbolId> a_ids, b_ids;
    for (std::size_t i = 0; i < rng() % 12; ++i)
      a_ids.push_back(static_cast<SymbolId>(rng() % 2));
    for (std::size_t i = 0; i < rng() % 12; ++i)
      b_ids.push_back(static_cast<SymbolId>(rng() % 2));
    Str a(alph, a_ids), b(alph, b_ids);
    for (SymbolId s = 0; s < 2; ++s)
      REQUIRE(count_symbol(a + b, s) == count_symbol(a, s) + count_symbol(b, s));
  }
}

TEST_CASE("alphabets reject duplicates and keep their order") {
  CHECK_THROWS_AS(make_alphabet({"x", "x"}), Error);
  auto alph = make_alphabet({"b", "a"});
  CHECK(alph->id("b") == 0);
  CHECK(alph->id("a") == 1);
  CHECK(!alph->find("c").has_value());
}

TEST_CASE("strings serialize as whitespace-separated tokens") {
  auto alph = make_alphabet({"aa", "bb"});
  Str s = Str::parse(alph, "aa bb aa");
  CHECK(s.size() == 3);
  CHECK(s.text() == "aa bb aa");
  CHECK_THROWS_AS(Str::parse(alph, "aa cc"), Error);
}

TEST_CASE("sample partition groups by the window middle") {
  auto alph = make_alphabet({"0", "1"});
  SampleSet s(alph, 2, {bin("00"), bin("01"), bin("10"), bin("11")});
  auto parts = sample_partition(s, 0, 1);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(bin("0")).strings() == std::vector<Str>{bin("00"), bin("01")});
  CHECK(parts.at(bin("1")).strings() == std::vector<Str>{bin("10"), bin("11")});

  SampleSet single(alph, 4, {bin("0101")});
  auto one = sample_partition(single, 1, 2);
  REQUIRE(one.size() == 1);
  CHECK(one.begin()->first == bin("10"));
}

TEST_CASE("sample partition is a partition") {
  std::mt19937 rng(99);
  auto alph = make_alphabet({"0", "1"});
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 6;
    std::vector<Str> members;
    for (int m = 0; m < 12; ++m) {
      std::vector<SymbolId> ids;
      for (std::size_t i = 0; i < n; ++i) ids.push_back(static_cast<SymbolId>(rng() % 2));
      members.emplace_back(alph, ids);
    }
    SampleSet s(alph, n, members);
    std::size_t j = 1 + rng() % n;
    std::size_t i = rng() % (n - j + 1);
    auto parts = sample_partition(s, i, j);
    std::size_t total = 0;
    std::set<Str> seen;
    for (const auto& [u, part] : parts) {
      REQUIRE(u.size() == j);
      total += part.size();
      for (const Str& x : part.strings()) {
        REQUIRE(middle(x, i, i + j) == u);
        REQUIRE(seen.insert(x).second);  // disjointness
      }
    }
    REQUIRE(total == s.size());  // covering
  }
}

TEST_CASE("sample sets enforce uniform length and deduplicate") {
  auto alph = make_alphabet({"0", "1"});
  CHECK_THROWS_AS(SampleSet(alph, 2, {bin("0")}), Error);
  SampleSet s(alph, 2, {bin("01"), bin("01"), bin("00")});
  CHECK(s.size() == 2);
  CHECK(s.at(0) == bin("00"));  // sorted
}

TEST_CASE("intervals validate their bounds") {
  Interval i(-1, 5);
  CHECK(i.width() == 6);
  CHECK(i.contains(-1));
  CHECK(!i.contains(6));
  CHECK_THROWS_AS(Interval(3, 2), Error);
}
