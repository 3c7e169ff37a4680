#pragma once

// Track-tape machinery, advice functions, and the example-language
// predicates, sample-set builders, and fixture grammars used by the
// swapping experiments.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "swaplab/automata.hpp"
#include "swaplab/core.hpp"
#include "swaplab/error.hpp"
#include "swaplab/grammar.hpp"

namespace swaplab {

// ---------------------------------------------------------------------------
// Shared fixture alphabets

inline const AlphabetPtr& binary_alphabet() {
  static const AlphabetPtr a = make_alphabet({"0", "1"});
  return a;
}

inline const AlphabetPtr& l3eq_alphabet() {
  static const AlphabetPtr a = make_alphabet({"a", "b", "c"});
  return a;
}

inline const AlphabetPtr& l3eq_advice_alphabet() {
  static const AlphabetPtr a = make_alphabet({"a", "b", "c", "0"});
  return a;
}

inline const AlphabetPtr& pal_hash_alphabet() {
  static const AlphabetPtr a = make_alphabet({"0", "1", "#"});
  return a;
}

inline const AlphabetPtr& equal6_alphabet() {
  static const AlphabetPtr a = make_alphabet({"a1", "a2", "a3", "a4", "a5", "a6", "#"});
  return a;
}

// ---------------------------------------------------------------------------
// Two-track tape

// Cell-by-cell pairing of an input string with an advice string of the same
// length. Pair tokens read "upper/lower".
struct TrackString {
  Str upper;
  Str lower;
  Str pairs;
};

inline AlphabetPtr product_alphabet(const AlphabetPtr& upper, const AlphabetPtr& lower) {
  std::vector<std::string> tokens;
  tokens.reserve(upper->size() * lower->size());
  for (const auto& u : upper->tokens())
    for (const auto& l : lower->tokens()) tokens.push_back(u + "/" + l);
  return make_alphabet(std::move(tokens));
}

inline TrackString compose_track(const Str& x, const Str& w, AlphabetPtr product = nullptr) {
  require(x.size() == w.size(), Errc::length_mismatch,
          "track halves differ in length: " + std::to_string(x.size()) + " vs " +
              std::to_string(w.size()));
  if (!product) product = product_alphabet(x.alphabet(), w.alphabet());
  std::size_t lower_size = w.alphabet()->size();
  std::vector<SymbolId> ids;
  ids.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    ids.push_back(static_cast<SymbolId>(x[i] * lower_size + w[i]));
  return TrackString{x, w, Str(product, std::move(ids))};
}

// Recovers both tracks from a pair string laid out by product_alphabet.
inline TrackString split_track(const Str& pairs, const AlphabetPtr& upper,
                               const AlphabetPtr& lower) {
  std::size_t lower_size = lower->size();
  std::vector<SymbolId> u, l;
  u.reserve(pairs.size());
  l.reserve(pairs.size());
  for (SymbolId p : pairs.ids()) {
    require(p < upper->size() * lower_size, Errc::unknown_symbol,
            "pair symbol outside the product alphabet");
    u.push_back(static_cast<SymbolId>(p / lower_size));
    l.push_back(static_cast<SymbolId>(p % lower_size));
  }
  return TrackString{Str(upper, std::move(u)), Str(lower, std::move(l)), pairs};
}

// ---------------------------------------------------------------------------
// Advice functions: length-indexed generators with |h(n)| = n

struct AdviceFunction {
  std::string name;
  std::function<Str(std::size_t)> generate;
};

// a^{n/3} b^{n/3} c^{n/3} when 3 divides n, otherwise 0^n.
inline Str advice_l3eq(std::size_t n) {
  const auto& alph = l3eq_advice_alphabet();
  std::vector<SymbolId> ids;
  ids.reserve(n);
  if (n % 3 == 0) {
    for (std::size_t i = 0; i < n / 3; ++i) ids.push_back(alph->id("a"));
    for (std::size_t i = 0; i < n / 3; ++i) ids.push_back(alph->id("b"));
    for (std::size_t i = 0; i < n / 3; ++i) ids.push_back(alph->id("c"));
  } else {
    ids.assign(n, alph->id("0"));
  }
  return Str(alph, std::move(ids));
}

// Marks the halfway point of an even-length input: 0^{n/2-1} 1 0 1^{n/2-1};
// odd lengths get 1^n and length 0 the empty string.
inline Str advice_pal(std::size_t n) {
  const auto& alph = binary_alphabet();
  std::vector<SymbolId> ids;
  ids.reserve(n);
  if (n == 0) return Str(alph, {});
  if (n % 2 == 0) {
    for (std::size_t i = 0; i + 1 < n / 2; ++i) ids.push_back(alph->id("0"));
    ids.push_back(alph->id("1"));
    ids.push_back(alph->id("0"));
    for (std::size_t i = 0; i + 1 < n / 2; ++i) ids.push_back(alph->id("1"));
  } else {
    ids.assign(n, alph->id("1"));
  }
  return Str(alph, std::move(ids));
}

inline AdviceFunction advice_function(const std::string& name) {
  if (name == "l3eq") return {"l3eq", [](std::size_t n) { return advice_l3eq(n); }};
  if (name == "pal") return {"pal", [](std::size_t n) { return advice_pal(n); }};
  fail(Errc::unknown_fixture, "advice function: " + name);
}

// ---------------------------------------------------------------------------
// Example-language predicates

struct LanguagePredicate {
  std::string name;
  AlphabetPtr alphabet;
  std::function<bool(const Str&)> member;
};

namespace detail {

inline bool is_even_palindrome(const Str& x) {
  if (x.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < x.size() / 2; ++i)
    if (x[i] != x[x.size() - 1 - i]) return false;
  return true;
}

}  // namespace detail

// Pal (ww^R), Equal (#_0 = #_1), GT (#_0 > #_1), Dup (ww), Equal_6 (all six
// non-# symbols equinumerous), L_3eq (a^n b^n c^n), Pal_# (w#w^R).
inline LanguagePredicate fixture_predicate(const std::string& name) {
  if (name == "pal")
    return {"pal", binary_alphabet(), [](const Str& x) { return detail::is_even_palindrome(x); }};
  if (name == "equal")
    return {"equal", binary_alphabet(),
            [](const Str& x) { return count_symbol(x, "0") == count_symbol(x, "1"); }};
  if (name == "gt")
    return {"gt", binary_alphabet(),
            [](const Str& x) { return count_symbol(x, "0") > count_symbol(x, "1"); }};
  if (name == "dup")
    return {"dup", binary_alphabet(), [](const Str& x) {
              if (x.size() % 2 != 0) return false;
              return prefix(x, x.size() / 2) == suffix(x, x.size() / 2);
            }};
  if (name == "equal6")
    return {"equal6", equal6_alphabet(), [](const Str& x) {
              std::size_t first = count_symbol(x, "a1");
              for (int i = 2; i <= 6; ++i)
                if (count_symbol(x, "a" + std::to_string(i)) != first) return false;
              return true;
            }};
  if (name == "l3eq")
    return {"l3eq", l3eq_alphabet(), [](const Str& x) {
              if (x.size() % 3 != 0) return false;
              std::size_t n = x.size() / 3;
              const auto& alph = x.alphabet();
              for (std::size_t i = 0; i < x.size(); ++i) {
                const std::string& want = i < n ? "a" : i < 2 * n ? "b" : "c";
                if (alph->token(x[i]) != want) return false;
              }
              return true;
            }};
  if (name == "pal-hash")
    return {"pal-hash", pal_hash_alphabet(), [](const Str& x) {
              if (x.size() % 2 == 0) return false;
              std::size_t mid = x.size() / 2;
              SymbolId hash = x.alphabet()->id("#");
              if (x[mid] != hash) return false;
              for (std::size_t i = 0; i < x.size(); ++i)
                if (i != mid && x[i] == hash) return false;
              for (std::size_t i = 0; i < mid; ++i)
                if (x[i] != x[x.size() - 1 - i]) return false;
              return true;
            }};
  fail(Errc::unknown_fixture, "language predicate: " + name);
}

// ---------------------------------------------------------------------------
// Sample-set builders

// w_k = 0^k 1^{n/2-k} 0^{n/2-k} 1^k for k in [0, n/2]; every member is in
// Equal and the first half of w_k carries exactly k zeros.
inline SampleSet equal_samples(std::size_t n) {
  require(n >= 2 && n % 2 == 0, Errc::invalid_length,
          "equal samples need an even length >= 2");
  const auto& alph = binary_alphabet();
  SymbolId zero = alph->id("0"), one = alph->id("1");
  std::vector<Str> strings;
  for (std::size_t k = 0; k <= n / 2; ++k) {
    std::vector<SymbolId> ids;
    ids.reserve(n);
    ids.insert(ids.end(), k, zero);
    ids.insert(ids.end(), n / 2 - k, one);
    ids.insert(ids.end(), n / 2 - k, zero);
    ids.insert(ids.end(), k, one);
    strings.emplace_back(alph, std::move(ids));
  }
  return SampleSet(alph, n, std::move(strings));
}

// m equal blocks of size m (n = m^2): block j of w^{(j)} is 0 1^{m-1}, every
// other block is 0^{m'+1} 1^{m'} with m' = floor(m/2). Each sample satisfies
// #_0 = #_1 + 1.
inline SampleSet gt_samples(std::size_t m) {
  require(m >= 3 && m % 2 == 1, Errc::invalid_parameter,
          "gt samples need an odd block count >= 3");
  const auto& alph = binary_alphabet();
  SymbolId zero = alph->id("0"), one = alph->id("1");
  std::size_t half = m / 2;
  std::vector<Str> strings;
  for (std::size_t j = 1; j <= m; ++j) {
    std::vector<SymbolId> ids;
    ids.reserve(m * m);
    for (std::size_t block = 1; block <= m; ++block) {
      if (block == j) {
        ids.push_back(zero);
        ids.insert(ids.end(), m - 1, one);
      } else {
        ids.insert(ids.end(), half + 1, zero);
        ids.insert(ids.end(), half, one);
      }
    }
    strings.emplace_back(alph, std::move(ids));
  }
  return SampleSet(alph, m * m, std::move(strings));
}

// All strings w_{(e1..e6)} w_{(n/12-e1 .. n/12-e6)} with e_i in [0, n/12],
// where block (i,e) is (a_i)^e #^{n/12-e}. Cardinality (n/12+1)^6.
inline SampleSet equal6_samples(std::size_t n, std::size_t max_count = 4'000'000) {
  require(n >= 12 && n % 12 == 0, Errc::invalid_length,
          "equal6 samples need a positive length divisible by 12");
  std::size_t q = n / 12;
  std::size_t count = 1;
  for (int i = 0; i < 6; ++i) {
    count *= q + 1;
    require(count <= max_count, Errc::budget_exceeded,
            "equal6 sample set would exceed " + std::to_string(max_count) + " strings");
  }
  const auto& alph = equal6_alphabet();
  SymbolId hash = alph->id("#");
  auto append_block = [&](std::vector<SymbolId>& ids, std::size_t sym, std::size_t e) {
    ids.insert(ids.end(), e, static_cast<SymbolId>(sym));
    ids.insert(ids.end(), q - e, hash);
  };
  std::vector<Str> strings;
  strings.reserve(count);
  std::vector<std::size_t> e(6, 0);
  while (true) {
    std::vector<SymbolId> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < 6; ++i) append_block(ids, i, e[i]);
    for (std::size_t i = 0; i < 6; ++i) append_block(ids, i, q - e[i]);
    strings.emplace_back(alph, std::move(ids));
    std::size_t pos = 6;
    while (pos > 0) {
      if (++e[pos - 1] <= q) break;
      e[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return SampleSet(alph, n, std::move(strings));
}

// {w w^R : w in {0,1}^{n/2}}, cardinality 2^{n/2}.
inline SampleSet pal_samples(std::size_t n) {
  require(n % 2 == 0, Errc::invalid_length, "pal samples need an even length");
  require(n / 2 < 24, Errc::budget_exceeded, "pal sample set too large");
  const auto& alph = binary_alphabet();
  std::vector<Str> strings;
  strings.reserve(std::size_t{1} << (n / 2));
  std::vector<SymbolId> w(n / 2, 0);
  while (true) {
    std::vector<SymbolId> ids(w);
    ids.insert(ids.end(), w.rbegin(), w.rend());
    strings.emplace_back(alph, std::move(ids));
    std::size_t pos = w.size();
    while (pos > 0) {
      if (++w[pos - 1] < 2) break;
      w[pos - 1] = 0;
      --pos;
    }
    if (pos == 0 || n == 0) break;
  }
  return SampleSet(alph, n, std::move(strings));
}

// ---------------------------------------------------------------------------
// Parameter arithmetic for the Dup non-membership argument

struct DupParams {
  std::size_t m = 0;       // swapping constant assumed for the ambient language
  std::size_t n = 0;       // chosen even sample length
  std::size_t j0 = 0;      // ceil(log2(m n^2)) + 1
  std::size_t k = 0;       // n / 2
  bool sample_bound_ok = false;  // k m n <= 2^{j0}, i.e. |S_{i,u}| <= |S|/(kmn)
  bool lemma_bound_ok = false;   // m (k-j0+1)(n-j0+1) <= 2^{j0}
  bool premise_ok = false;       // j0 >= 2 and 2 j0 <= k
};

namespace detail {

inline std::size_t ceil_log2(std::uint64_t x) {
  std::size_t t = 0;
  std::uint64_t p = 1;
  while (p < x) {
    p <<= 1;
    ++t;
  }
  return t;
}

inline DupParams dup_params_at(std::size_t m, std::size_t n) {
  DupParams out;
  out.m = m;
  out.n = n;
  std::uint64_t mn2 = static_cast<std::uint64_t>(m) * n * n;
  out.j0 = ceil_log2(mn2) + 1;
  out.k = n / 2;
  std::uint64_t pow_j0 = out.j0 < 64 ? (std::uint64_t{1} << out.j0) : UINT64_MAX;
  out.sample_bound_ok = static_cast<std::uint64_t>(out.k) * m * n <= pow_j0;
  out.lemma_bound_ok = out.j0 <= out.k && out.j0 <= n &&
                       static_cast<std::uint64_t>(m) * (out.k - out.j0 + 1) *
                               (n - out.j0 + 1) <=
                           pow_j0;
  out.premise_ok = out.j0 >= 2 && 2 * out.j0 <= out.k;
  return out;
}

inline bool dup_n_large_enough(std::size_t m, std::size_t n) {
  if (n / 2 >= 63) return true;
  return (std::uint64_t{1} << (n / 2)) > 2 * static_cast<std::uint64_t>(m) * n * n;
}

}  // namespace detail

// Smallest even n with 2^{n/2} > 2 m n^2 and the induced (j0, k). For small m
// the minimal n violates 2 j0 <= k; dup_params_strict searches on for the
// smallest n that also satisfies it.
inline DupParams dup_params(std::size_t m) {
  require(m >= 1, Errc::invalid_parameter, "swapping constant must be positive");
  std::size_t n = 2;
  while (!detail::dup_n_large_enough(m, n)) n += 2;
  return detail::dup_params_at(m, n);
}

inline DupParams dup_params_strict(std::size_t m) {
  require(m >= 1, Errc::invalid_parameter, "swapping constant must be positive");
  std::size_t n = 2;
  while (!detail::dup_n_large_enough(m, n) || !detail::dup_params_at(m, n).premise_ok)
    n += 2;
  return detail::dup_params_at(m, n);
}

// ---------------------------------------------------------------------------
// Fixture grammars

// anbn: S -> a S b | a b                      {a^n b^n : n >= 1}
// aplus: S -> S a | a (left recursive)        {a^n : n >= 1}
// pal-hash: S -> 0 S 0 | 1 S 1 | #            {w # w^R}
// ab-padded: S -> a S | a B; B -> b B | b     {a^i b^j : i, j >= 1}
// ab2: S -> a S B B | a B B; B -> b           {a^n b^{2n} : n >= 1}, pushes 3
inline Cfg fixture_grammar(const std::string& name) {
  if (name == "anbn") return parse_cfg("start: S\nS -> a S b | a b\n");
  if (name == "aplus") return parse_cfg("start: S\nS -> S a | a\n");
  if (name == "pal-hash") return parse_cfg("start: S\nS -> 0 S 0 | 1 S 1 | #\n");
  if (name == "ab-padded") return parse_cfg("start: S\nS -> a S | a B\nB -> b B | b\n");
  if (name == "ab2") return parse_cfg("start: S\nS -> a S B B | a B B\nB -> b\n");
  fail(Errc::unknown_fixture, "fixture grammar: " + name);
}

inline const std::vector<std::string>& fixture_grammar_names() {
  static const std::vector<std::string> names{"anbn", "aplus", "pal-hash", "ab-padded",
                                              "ab2"};
  return names;
}

// ---------------------------------------------------------------------------
// Advised acceptance helpers

// Two-state comparator over a product alphabet: accepts exactly the pair
// strings whose upper and lower tokens agree in every cell. Combined with
// advice_l3eq this recognizes L_3eq from tracked input.
inline Dfa advised_equality_dfa(const AlphabetPtr& upper, const AlphabetPtr& lower) {
  auto product = product_alphabet(upper, lower);
  std::vector<std::vector<std::string>> table(2);
  for (const auto& u : upper->tokens())
    for (const auto& l : lower->tokens()) {
      table[0].push_back(u == l ? "cmp" : "dead");
      table[1].push_back("dead");
    }
  return Dfa({"cmp", "dead"}, product, "cmp", {"cmp"}, table);
}

// Pairs every member of s with one fixed advice string.
inline SampleSet tracked_samples(const SampleSet& s, const Str& advice) {
  require(advice.size() == s.n(), Errc::length_mismatch,
          "advice length must match the sample length");
  auto product = product_alphabet(s.alphabet(), advice.alphabet());
  std::vector<Str> strings;
  strings.reserve(s.size());
  for (const Str& x : s.strings())
    strings.push_back(compose_track(x, advice, product).pairs);
  return SampleSet(product, s.n(), std::move(strings));
}

}  // namespace swaplab
