#pragma once

// Constructive witness finders for the regular swapping lemmas: the single
// cut form and the multi-block form, both realized as the pigeonhole over
// DFA state traces. Returned witnesses are always re-verified by running the
// machine on the swapped strings before they leave the finder.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swaplab/automata.hpp"
#include "swaplab/core.hpp"
#include "swaplab/error.hpp"

namespace swaplab {

struct RegularSwapWitness {
  Str x, y;                       // distinct same-length members of the sample
  std::size_t cut = 0;            // i: both strings split after i symbols
  std::uint32_t collision_state = 0;
  Str swapped_xy;                 // prefix(x,i) ++ suffix(y,n-i)
  Str swapped_yx;                 // prefix(y,i) ++ suffix(x,n-i)
  bool verified = false;
};

struct MultiCutWitness {
  struct SwappedPair {
    std::size_t block = 0;  // 1-based block index that was exchanged
    Str x_variant;          // x with that block taken from y
    Str y_variant;          // y with that block taken from x
  };

  Str x, y;
  std::vector<std::size_t> block_lengths;
  std::vector<std::uint32_t> state_tuple;  // states at the cumulative boundaries
  std::vector<SwappedPair> swapped;        // one entry per block
  bool verified = false;
};

// The pigeonhole threshold |Q|^k.
inline std::uint64_t swapping_constant(const Dfa& d, std::size_t k = 1) {
  require(k >= 1, Errc::invalid_parameter, "block count must be positive");
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t q = d.state_count();
    require(out <= UINT64_MAX / q, Errc::invalid_parameter,
            "swapping constant overflows 64 bits");
    out *= q;
  }
  return out;
}

namespace detail {

// Every member must be accepted; returns the traces in sample order.
inline std::vector<DfaRun> accepted_runs(const Dfa& d, const SampleSet& s) {
  std::vector<DfaRun> runs;
  runs.reserve(s.size());
  for (const Str& x : s.strings()) {
    runs.push_back(dfa_run(d, x));
    require(runs.back().accepted, Errc::not_in_language,
            "sample member rejected by the dfa: " + x.text());
  }
  return runs;
}

}  // namespace detail

// Groups the sample by the trace state after the first `cut` symbols and
// returns the first colliding pair in the sample's lexicographic scan order.
// The degenerate cuts 0 and n pair the two lexicographically smallest
// members (the swapped strings are the originals). Returns nothing only when
// no two members share a state, which requires |S| <= |Q|.
inline std::optional<RegularSwapWitness> find_swap(const Dfa& d, const SampleSet& s,
                                                   std::size_t cut) {
  std::size_t n = s.n();
  require(cut <= n, Errc::invalid_range,
          "cut " + std::to_string(cut) + " exceeds the sample length " + std::to_string(n));
  auto runs = detail::accepted_runs(d, s);
  if (s.size() < 2) return std::nullopt;

  std::size_t xi = 0, yi = 0;
  bool found = false;
  if (cut == 0 || cut == n) {
    xi = 0;
    yi = 1;
    found = true;
  } else {
    std::map<std::uint32_t, std::size_t> first_with_state;
    for (std::size_t idx = 0; idx < s.size(); ++idx) {
      auto [it, fresh] = first_with_state.emplace(runs[idx].trace[cut], idx);
      if (!fresh) {
        xi = it->second;
        yi = idx;
        found = true;
        break;
      }
    }
  }
  if (!found) return std::nullopt;

  RegularSwapWitness w;
  w.x = s.at(xi);
  w.y = s.at(yi);
  w.cut = cut;
  w.collision_state = runs[xi].trace[cut];
  w.swapped_xy = prefix(w.x, cut) + suffix(w.y, n - cut);
  w.swapped_yx = prefix(w.y, cut) + suffix(w.x, n - cut);
  require(dfa_run(d, w.swapped_xy).accepted && dfa_run(d, w.swapped_yx).accepted,
          Errc::verification_failed, "swapped strings rejected despite a state collision");
  w.verified = true;
  return w;
}

// Multi-block variant: groups by the tuple of states at the cumulative block
// boundaries and verifies all 2k block-swapped strings.
inline std::optional<MultiCutWitness> find_swap_multi(
    const Dfa& d, const SampleSet& s, const std::vector<std::size_t>& block_lengths) {
  std::size_t n = s.n();
  require(!block_lengths.empty(), Errc::invalid_blocks, "need at least one block");
  std::size_t total = 0;
  for (std::size_t len : block_lengths) {
    require(len >= 1, Errc::invalid_blocks, "blocks must be nonempty");
    total += len;
  }
  require(total <= n, Errc::invalid_blocks,
          "blocks sum to " + std::to_string(total) + " > " + std::to_string(n));

  std::vector<std::size_t> cuts;  // cumulative boundaries
  std::size_t acc = 0;
  for (std::size_t len : block_lengths) {
    acc += len;
    cuts.push_back(acc);
  }

  auto runs = detail::accepted_runs(d, s);
  if (s.size() < 2) return std::nullopt;

  std::map<std::vector<std::uint32_t>, std::size_t> first_with_tuple;
  std::size_t xi = 0, yi = 0;
  bool found = false;
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    std::vector<std::uint32_t> tuple;
    tuple.reserve(cuts.size());
    for (std::size_t c : cuts) tuple.push_back(runs[idx].trace[c]);
    auto [it, fresh] = first_with_tuple.emplace(std::move(tuple), idx);
    if (!fresh) {
      xi = it->second;
      yi = idx;
      found = true;
      break;
    }
  }
  if (!found) return std::nullopt;

  MultiCutWitness w;
  w.x = s.at(xi);
  w.y = s.at(yi);
  w.block_lengths = block_lengths;
  for (std::size_t c : cuts) w.state_tuple.push_back(runs[xi].trace[c]);
  for (std::size_t j = 0; j < block_lengths.size(); ++j) {
    std::size_t lo = j == 0 ? 0 : cuts[j - 1];
    std::size_t hi = cuts[j];
    MultiCutWitness::SwappedPair pair;
    pair.block = j + 1;
    pair.x_variant = prefix(w.x, lo) + middle(w.y, lo, hi) + suffix(w.x, n - hi);
    pair.y_variant = prefix(w.y, lo) + middle(w.x, lo, hi) + suffix(w.y, n - hi);
    require(dfa_run(d, pair.x_variant).accepted && dfa_run(d, pair.y_variant).accepted,
            Errc::verification_failed,
            "block swap rejected despite a state-tuple collision");
    w.swapped.push_back(std::move(pair));
  }
  w.verified = true;
  return w;
}

}  // namespace swaplab
