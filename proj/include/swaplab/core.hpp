#pragma once

// Exact string combinatorics and sample-set machinery used by every other
// module. Symbols are atomic tokens rather than characters, so compound
// symbols (track pairs, grouped stack symbols) are first-class.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "swaplab/error.hpp"

namespace swaplab {

using SymbolId = std::uint32_t;
using Boundary = std::ptrdiff_t;  // intercell boundary index, may be -1

// Ordered finite set of distinct atomic symbol tokens. The token order is
// fixed at construction and backs every lexicographic comparison.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    require(!tokens_.empty(), Errc::invalid_parameter, "alphabet must be nonempty");
    for (SymbolId i = 0; i < tokens_.size(); ++i) {
      require(!tokens_[i].empty(), Errc::invalid_parameter, "empty symbol token");
      auto [it, fresh] = index_.emplace(tokens_[i], i);
      require(fresh, Errc::invalid_parameter, "duplicate symbol token: " + tokens_[i]);
    }
  }

  std::size_t size() const { return tokens_.size(); }
  const std::string& token(SymbolId id) const { return tokens_.at(id); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  std::optional<SymbolId> find(std::string_view tok) const {
    auto it = index_.find(std::string(tok));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  SymbolId id(std::string_view tok) const {
    auto found = find(tok);
    require(found.has_value(), Errc::unknown_symbol, std::string(tok));
    return *found;
  }

  bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> tokens_;
  std::map<std::string, SymbolId> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<std::string> tokens) {
  return std::make_shared<const Alphabet>(std::move(tokens));
}

inline AlphabetPtr make_alphabet(std::initializer_list<const char*> tokens) {
  std::vector<std::string> v;
  for (auto* t : tokens) v.emplace_back(t);
  return make_alphabet(std::move(v));
}

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// Finite symbol sequence over a fixed alphabet. The empty sequence is the
// unique length-0 value. Immutable after construction.
class Str {
 public:
  Str() = default;

  Str(AlphabetPtr alphabet, std::vector<SymbolId> ids)
      : alphabet_(std::move(alphabet)), ids_(std::move(ids)) {
    require(alphabet_ != nullptr, Errc::invalid_parameter, "string needs an alphabet");
    for (SymbolId id : ids_)
      require(id < alphabet_->size(), Errc::unknown_symbol,
              "symbol id " + std::to_string(id) + " outside alphabet");
  }

  // Whitespace-separated token text, e.g. "0 1 1 0".
  static Str parse(const AlphabetPtr& alphabet, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<SymbolId> ids;
    std::string tok;
    while (in >> tok) ids.push_back(alphabet->id(tok));
    return Str(alphabet, std::move(ids));
  }

  // Convenience for single-character tokens: every char is one symbol.
  static Str from_chars(const AlphabetPtr& alphabet, std::string_view chars) {
    std::vector<SymbolId> ids;
    ids.reserve(chars.size());
    for (char c : chars) ids.push_back(alphabet->id(std::string(1, c)));
    return Str(alphabet, std::move(ids));
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<SymbolId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  SymbolId operator[](std::size_t i) const { return ids_.at(i); }

  const std::string& token_at(std::size_t i) const { return alphabet_->token(ids_.at(i)); }

  std::string text() const {
    std::string out;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (i) out += ' ';
      out += alphabet_->token(ids_[i]);
    }
    return out;
  }

  bool operator==(const Str& other) const {
    return ids_ == other.ids_ && same_alphabet(alphabet_, other.alphabet_);
  }
  bool operator!=(const Str& other) const { return !(*this == other); }

  // Shortlex: by length first, then pointwise by symbol order.
  bool operator<(const Str& other) const {
    if (ids_.size() != other.ids_.size()) return ids_.size() < other.ids_.size();
    return ids_ < other.ids_;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<SymbolId> ids_;
};

inline Str concat(const Str& a, const Str& b) {
  if (a.empty() && !a.alphabet()) return b;
  if (b.empty() && !b.alphabet()) return a;
  require(same_alphabet(a.alphabet(), b.alphabet()), Errc::alphabet_mismatch,
          "concat over different alphabets");
  std::vector<SymbolId> ids = a.ids();
  ids.insert(ids.end(), b.ids().begin(), b.ids().end());
  return Str(a.alphabet(), std::move(ids));
}

inline Str operator+(const Str& a, const Str& b) { return concat(a, b); }

// First i symbols of w.
inline Str prefix(const Str& w, std::size_t i) {
  require(i <= w.size(), Errc::index_out_of_range,
          "prefix(" + std::to_string(i) + ") of length-" + std::to_string(w.size()) + " string");
  return Str(w.alphabet(), std::vector<SymbolId>(w.ids().begin(), w.ids().begin() + i));
}

// Last i symbols of w.
inline Str suffix(const Str& w, std::size_t i) {
  require(i <= w.size(), Errc::index_out_of_range,
          "suffix(" + std::to_string(i) + ") of length-" + std::to_string(w.size()) + " string");
  return Str(w.alphabet(), std::vector<SymbolId>(w.ids().end() - i, w.ids().end()));
}

// Drops the first i and last |w|-j symbols; the result has exactly j-i
// symbols. middle(w,i,i) is the empty string; the "i-th symbol" accessor is
// symbol_at below.
inline Str middle(const Str& w, std::size_t i, std::size_t j) {
  require(i <= j, Errc::invalid_range,
          "middle indices " + std::to_string(i) + " > " + std::to_string(j));
  require(j <= w.size(), Errc::index_out_of_range,
          "middle(" + std::to_string(i) + "," + std::to_string(j) + ") of length-" +
              std::to_string(w.size()) + " string");
  return Str(w.alphabet(),
             std::vector<SymbolId>(w.ids().begin() + i, w.ids().begin() + j));
}

// The i-th symbol of w, 1-based.
inline SymbolId symbol_at(const Str& w, std::size_t i) {
  require(i >= 1 && i <= w.size(), Errc::index_out_of_range,
          "symbol_at(" + std::to_string(i) + ") of length-" + std::to_string(w.size()) +
              " string");
  return w[i - 1];
}

inline std::size_t count_symbol(const Str& w, SymbolId a) {
  require(w.alphabet() && a < w.alphabet()->size(), Errc::unknown_symbol,
          "symbol id " + std::to_string(a));
  std::size_t n = 0;
  for (SymbolId s : w.ids())
    if (s == a) ++n;
  return n;
}

inline std::size_t count_symbol(const Str& w, std::string_view token) {
  require(w.alphabet() != nullptr, Errc::unknown_symbol, std::string(token));
  return count_symbol(w, w.alphabet()->id(token));
}

// Integer interval of intercell boundaries [lo, hi], width = hi - lo.
struct Interval {
  Boundary lo = 0;
  Boundary hi = 0;

  Interval() = default;
  Interval(Boundary lo_, Boundary hi_) : lo(lo_), hi(hi_) {
    require(lo <= hi, Errc::invalid_range,
            "interval [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }

  std::size_t width() const { return static_cast<std::size_t>(hi - lo); }
  bool contains(Boundary b) const { return lo <= b && b <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

  bool operator==(const Interval& other) const { return lo == other.lo && hi == other.hi; }
};

// Finite set of same-length strings over one alphabet; kept sorted and
// duplicate-free.
class SampleSet {
 public:
  SampleSet(AlphabetPtr alphabet, std::size_t n, std::vector<Str> strings)
      : alphabet_(std::move(alphabet)), n_(n) {
    require(alphabet_ != nullptr, Errc::invalid_parameter, "sample set needs an alphabet");
    for (const Str& s : strings) {
      require(s.size() == n_, Errc::invalid_length,
              "sample \"" + s.text() + "\" has length " + std::to_string(s.size()) +
                  ", expected " + std::to_string(n_));
      require(same_alphabet(s.alphabet(), alphabet_), Errc::alphabet_mismatch,
              "sample over a different alphabet: " + s.text());
    }
    std::sort(strings.begin(), strings.end());
    strings.erase(std::unique(strings.begin(), strings.end()), strings.end());
    strings_ = std::move(strings);
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return strings_.size(); }
  const std::vector<Str>& strings() const { return strings_; }
  const Str& at(std::size_t i) const { return strings_.at(i); }

 private:
  AlphabetPtr alphabet_;
  std::size_t n_;
  std::vector<Str> strings_;  // sorted, unique
};

// Sample files: a header line "alphabet: tok1 tok2 ..." then one string per
// line as whitespace-separated tokens. Blank lines are ignored; there is no
// comment syntax since '#' is an ordinary symbol token in this domain.
inline std::string serialize_samples(const SampleSet& s) {
  std::string out = "alphabet:";
  for (const auto& t : s.alphabet()->tokens()) {
    out += ' ';
    out += t;
  }
  out += '\n';
  for (const Str& x : s.strings()) {
    out += x.text();
    out += '\n';
  }
  return out;
}

inline SampleSet parse_samples(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  AlphabetPtr alphabet;
  std::vector<Str> strings;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "alphabet:") {
      require(!alphabet, Errc::parse_error, "duplicate alphabet header");
      toks.erase(toks.begin());
      alphabet = make_alphabet(toks);
      continue;
    }
    require(alphabet != nullptr, Errc::parse_error,
            "sample file must start with an alphabet: line");
    std::vector<SymbolId> ids;
    ids.reserve(toks.size());
    for (const auto& tok : toks) ids.push_back(alphabet->id(tok));
    strings.emplace_back(alphabet, std::move(ids));
  }
  require(alphabet != nullptr, Errc::parse_error, "missing alphabet: line");
  require(!strings.empty(), Errc::parse_error, "sample file holds no strings");
  std::size_t n = strings.front().size();
  for (const Str& s : strings)
    require(s.size() == n, Errc::parse_error, "samples must share one length");
  return SampleSet(alphabet, n, std::move(strings));
}

// The family {S_{i,u}} keyed by the length-j middle u at offset i. Values
// partition S: their union is S and they are pairwise disjoint.
inline std::map<Str, SampleSet> sample_partition(const SampleSet& s, std::size_t i,
                                                 std::size_t j) {
  require(j >= 1, Errc::invalid_range, "partition window must be nonempty");
  require(i + j <= s.n(), Errc::invalid_range,
          "partition window [" + std::to_string(i) + "," + std::to_string(i + j) +
              "] exceeds sample length " + std::to_string(s.n()));
  std::map<Str, std::vector<Str>> grouped;
  for (const Str& x : s.strings()) grouped[middle(x, i, i + j)].push_back(x);
  std::map<Str, SampleSet> out;
  for (auto& [u, members] : grouped)
    out.emplace(u, SampleSet(s.alphabet(), s.n(), std::move(members)));
  return out;
}

}  // namespace swaplab
