#pragma once

// Stack-transition analysis over accepting NPDA computations: boundary
// heights, peak/base features, minimal and maximal level widths, the
// ideal-subinterval finder, stack-segment extraction, the Delta index
// assignment, and the closing-argument CFL swap-witness finder.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "swaplab/automata.hpp"
#include "swaplab/core.hpp"
#include "swaplab/error.hpp"

namespace swaplab {

// ---------------------------------------------------------------------------
// Stack transitions and height profiles

// Boundary-indexed view of one accepting computation: the stack content and
// its height at every intercell boundary -1..n+1.
struct StackTransition {
  Str input;
  AcceptingPath path;
  std::vector<Str> contents;          // index b+1 holds boundary b
  std::vector<std::size_t> heights;

  Boundary lo() const { return -1; }
  Boundary hi() const { return static_cast<Boundary>(input.size()) + 1; }
  Interval full() const { return Interval(lo(), hi()); }

  const Str& content_at(Boundary b) const {
    require(b >= lo() && b <= hi(), Errc::invalid_interval,
            "boundary " + std::to_string(b) + " outside the transition");
    return contents[static_cast<std::size_t>(b + 1)];
  }
  std::size_t height_at(Boundary b) const {
    require(b >= lo() && b <= hi(), Errc::invalid_interval,
            "boundary " + std::to_string(b) + " outside the transition");
    return heights[static_cast<std::size_t>(b + 1)];
  }
};

// Bare height sequence starting at some boundary; all interval analysis runs
// on this so synthetic profiles can exercise it directly.
struct HeightProfile {
  Boundary lo = 0;
  std::vector<std::size_t> h;

  Boundary hi() const { return lo + static_cast<Boundary>(h.size()) - 1; }
  Interval domain() const { return Interval(lo, hi()); }
  std::size_t at(Boundary b) const {
    require(b >= lo && b <= hi(), Errc::invalid_interval,
            "boundary " + std::to_string(b) + " outside the profile");
    return h[static_cast<std::size_t>(b - lo)];
  }
};

inline HeightProfile profile_of(const StackTransition& t) {
  return HeightProfile{-1, t.heights};
}

// Reads the boundary-indexed stack contents off an accepting path, after
// replaying it against the machine.
inline StackTransition stack_transition(const Npda& m, const Str& x,
                                        const AcceptingPath& p) {
  require(m.gnf_normal(), Errc::precondition_violated,
          "stack transitions are defined for the three-state normal form");
  validate_path(m, x, p);
  StackTransition t;
  t.input = x;
  t.path = p;
  t.contents.reserve(p.configs.size());
  t.heights.reserve(p.configs.size());
  for (const auto& c : p.configs) {
    t.contents.push_back(c.stack);
    t.heights.push_back(c.stack.size());
  }
  return t;
}

// ---------------------------------------------------------------------------
// Features: peaks, flat peaks, bases, flat bases

enum class FeatureKind { peak, flat_peak, base, flat_base };

inline const char* feature_kind_name(FeatureKind k) {
  switch (k) {
    case FeatureKind::peak: return "peak";
    case FeatureKind::flat_peak: return "flat-peak";
    case FeatureKind::base: return "base";
    case FeatureKind::flat_base: return "flat-base";
  }
  return "?";
}

struct Feature {
  FeatureKind kind = FeatureKind::peak;
  Interval location;  // [b,b] for point features, the run for flat ones
  std::size_t height = 0;
};

// All features inside I in left-to-right order. A maximal constant run
// strictly inside I is a (flat) peak when both neighbours are lower and a
// (flat) base when both are higher; runs touching the ends of I have a
// missing neighbour and are not features.
inline std::vector<Feature> features(const HeightProfile& p, const Interval& I) {
  require(p.domain().contains(I), Errc::invalid_interval,
          "interval outside the profile");
  std::vector<Feature> out;
  Boundary b = I.lo;
  while (b <= I.hi) {
    Boundary run_end = b;
    while (run_end + 1 <= I.hi && p.at(run_end + 1) == p.at(b)) ++run_end;
    if (b > I.lo && run_end < I.hi) {
      std::size_t height = p.at(b);
      std::size_t left = p.at(b - 1), right = p.at(run_end + 1);
      if (left < height && right < height)
        out.push_back({b == run_end ? FeatureKind::peak : FeatureKind::flat_peak,
                       Interval(b, run_end), height});
      else if (left > height && right > height)
        out.push_back({b == run_end ? FeatureKind::base : FeatureKind::flat_base,
                       Interval(b, run_end), height});
    }
    b = run_end + 1;
  }
  return out;
}

inline std::vector<Feature> features(const StackTransition& t, const Interval& I) {
  return features(profile_of(t), I);
}

// ---------------------------------------------------------------------------
// Level widths

namespace detail {

// Leftmost qualifying pair [a,b] inside I with a < b, height `level` at both
// ends, no boundary in between below `level`, and width within
// [min_width, max_width]; `smallest` picks the narrowest such width first.
inline std::optional<Interval> level_pair(const HeightProfile& p, const Interval& I,
                                          std::size_t level, std::size_t min_width,
                                          std::size_t max_width, bool smallest) {
  std::optional<Interval> best;
  for (Boundary a = I.lo; a < I.hi; ++a) {
    if (p.at(a) != level) continue;
    for (Boundary b = a + 1; b <= I.hi; ++b) {
      if (p.at(b) < level) break;  // interior dipped below the level
      if (p.at(b) != level) continue;
      std::size_t width = static_cast<std::size_t>(b - a);
      if (width < min_width || width > max_width) continue;
      if (!best || (smallest ? width < best->width() : width > best->width()))
        best = Interval(a, b);
    }
  }
  return best;
}

}  // namespace detail

// Minimal width over subintervals [a,b] of I (a < b) with height `level` at
// both endpoints and no interior boundary below it; nothing when no such
// subinterval exists.
inline std::optional<std::size_t> minwid(const HeightProfile& p, const Interval& I,
                                         std::size_t level) {
  auto pair = detail::level_pair(p, I, level, 1, static_cast<std::size_t>(-1), true);
  if (!pair) return std::nullopt;
  return pair->width();
}

inline std::optional<std::size_t> maxwid(const HeightProfile& p, const Interval& I,
                                         std::size_t level) {
  auto pair = detail::level_pair(p, I, level, 1, static_cast<std::size_t>(-1), false);
  if (!pair) return std::nullopt;
  return pair->width();
}

inline std::optional<std::size_t> minwid(const StackTransition& t, const Interval& I,
                                         std::size_t level) {
  return minwid(profile_of(t), I, level);
}

inline std::optional<std::size_t> maxwid(const StackTransition& t, const Interval& I,
                                         std::size_t level) {
  return maxwid(profile_of(t), I, level);
}

// ---------------------------------------------------------------------------
// Ideal subinterval finder

struct IdealInterval {
  Interval interval;
  std::size_t height = 0;
};

namespace detail {

inline bool is_ideal(const HeightProfile& p, const Interval& I) {
  std::size_t l0 = p.at(I.lo);
  if (p.at(I.hi) != l0) return false;
  for (Boundary b = I.lo; b <= I.hi; ++b)
    if (p.at(b) < l0) return false;
  return true;
}

inline std::optional<IdealInterval> basis_search(const HeightProfile& p,
                                                 const Interval& I, std::size_t j0,
                                                 std::size_t k) {
  std::size_t l0 = p.at(I.lo);
  std::size_t top = l0;
  for (Boundary b = I.lo; b <= I.hi; ++b) top = std::max(top, p.at(b));

  // A flat peak at least j0 wide carries the interval directly.
  auto feats = features(p, I);
  for (const auto& f : feats)
    if (f.kind == FeatureKind::flat_peak && f.location.width() >= j0)
      return IdealInterval{Interval(f.location.lo, f.location.lo + static_cast<Boundary>(j0)),
                           f.height};

  // Level search: the greatest level whose minimal width is still above j0,
  // one level below a level reachable within j0.
  constexpr std::size_t inf = static_cast<std::size_t>(-1);
  auto mw = [&](std::size_t level) {
    if (level > top) return inf;
    auto v = minwid(p, I, level);
    return v ? *v : inf;
  };
  for (std::size_t level = top; level > l0; --level) {
    // level plays the role of l'+1: the highest level reachable within j0
    if (mw(level) <= j0 && j0 < mw(level - 1)) {
      auto exact = level_pair(p, I, level, j0, j0, true);
      if (exact) return IdealInterval{*exact, level};
      std::size_t below = mw(level - 1);
      if (below != inf && below <= k)
        return IdealInterval{*level_pair(p, I, level - 1, below, below, true), level - 1};
      break;
    }
  }
  return std::nullopt;
}

// Deterministic safety net for profiles the textual case analysis does not
// cover: smallest qualifying width in [j0, k], highest level first.
inline std::optional<IdealInterval> fallback_search(const HeightProfile& p,
                                                    const Interval& I, std::size_t j0,
                                                    std::size_t k) {
  std::size_t top = 0;
  for (Boundary b = I.lo; b <= I.hi; ++b) top = std::max(top, p.at(b));
  for (std::size_t level = top; level >= 1; --level) {
    auto pair = level_pair(p, I, level, j0, k, true);
    if (pair) return IdealInterval{*pair, level};
  }
  return std::nullopt;
}

}  // namespace detail

// Finds a subinterval I' of I and a level l such that the profile has height
// l at both ends of I', never dips below l inside, and j0 <= |I'| <= k. The
// search follows the recursive proof structure: a single (flat) peak is
// handled by the level search, otherwise the interval splits at the lowest
// (leftmost) base or flat base and recurses into the wider side.
inline IdealInterval find_ideal_subinterval(const HeightProfile& p, Interval I,
                                            std::size_t j0, std::size_t k) {
  require(j0 >= 2 && 2 * j0 <= k, Errc::precondition_violated,
          "need j0 >= 2 and 2*j0 <= k");
  require(p.domain().contains(I), Errc::precondition_violated,
          "interval outside the profile");
  require(I.width() > k, Errc::precondition_violated,
          "interval width must exceed k");
  require(detail::is_ideal(p, I), Errc::precondition_violated,
          "profile is not ideal on the interval");

  while (true) {
    auto feats = features(p, I);
    std::size_t peak_count = 0;
    for (const auto& f : feats)
      if (f.kind == FeatureKind::peak || f.kind == FeatureKind::flat_peak) ++peak_count;

    if (peak_count > 1) {
      // lowest base or flat base, leftmost on ties
      const Feature* lowest = nullptr;
      for (const auto& f : feats) {
        if (f.kind != FeatureKind::base && f.kind != FeatureKind::flat_base) continue;
        if (!lowest || f.height < lowest->height) lowest = &f;
      }
      if (lowest) {
        std::size_t l2 = lowest->height;
        // Maximal pair at level l2 around the base: expand while heights stay
        // at or above l2, then trim to the outermost boundaries exactly at l2.
        Boundary lo = lowest->location.lo, hi = lowest->location.hi;
        while (lo - 1 >= I.lo && p.at(lo - 1) >= l2) --lo;
        while (hi + 1 <= I.hi && p.at(hi + 1) >= l2) ++hi;
        while (p.at(lo) != l2) ++lo;
        while (p.at(hi) != l2) --hi;
        Interval star(lo, hi);
        if (j0 <= star.width() && star.width() <= k) return {star, l2};
        if (star.width() > k) {
          // split at the base and keep the wider side (left on ties)
          Boundary split_left = lowest->location.lo;
          Boundary split_right = lowest->location.hi;
          Interval left(lo, split_right);   // through the base run
          Interval right(split_right, hi);
          if (lowest->kind == FeatureKind::base) left = Interval(lo, split_left);
          Interval chosen = left.width() >= right.width() ? left : right;
          if (chosen.width() > j0) {
            if (chosen.width() <= k) return {chosen, l2};
            I = chosen;  // ideal at level l2 with fewer peaks
            continue;
          }
        }
        // star narrower than j0: fall through to the level search on I
      }
    }

    auto found = detail::basis_search(p, I, j0, k);
    if (!found) found = detail::fallback_search(p, I, j0, k);
    require(found.has_value(), Errc::precondition_violated,
            "no qualifying subinterval exists in the interval");
    return *found;
  }
}

inline IdealInterval find_ideal_subinterval(const StackTransition& t, const Interval& I,
                                            std::size_t j0, std::size_t k) {
  require(k <= t.input.size(), Errc::precondition_violated,
          "k must not exceed the input length");
  return find_ideal_subinterval(profile_of(t), I, j0, k);
}

// ---------------------------------------------------------------------------
// Stack-segment extraction

// The stack segment that replaces top symbol v across boundaries i..i+j along
// path p, defined only when the tail below v is never read: the stack at
// boundary i is v s, the heights at boundaries i..i+j-1 all exceed |s|, and
// the stack at boundary i+j is t s. Returns t, or nothing when the
// conditions fail along this path.
inline std::optional<Str> extract_G(const Npda& m, const Str& x, const AcceptingPath& p,
                                    std::size_t i, std::size_t j, SymbolId v) {
  std::size_t n = x.size();
  require(j >= 1 && i + j <= n, Errc::invalid_range,
          "window [" + std::to_string(i) + "," + std::to_string(i + j) +
              "] outside the input of length " + std::to_string(n));
  require(v < m.stack_alphabet()->size(), Errc::invalid_range,
          "stack symbol outside the machine alphabet");
  const Str& at_i = p.at_boundary(static_cast<Boundary>(i)).stack;
  if (at_i.empty() || at_i[0] != v) return std::nullopt;
  std::size_t tail_len = at_i.size() - 1;
  for (std::size_t b = i; b < i + j; ++b)
    if (p.at_boundary(static_cast<Boundary>(b)).stack.size() < tail_len + 1)
      return std::nullopt;
  const Str& at_ij = p.at_boundary(static_cast<Boundary>(i + j)).stack;
  require(at_ij.size() >= tail_len &&
              suffix(at_ij, tail_len) == suffix(at_i, tail_len),
          Errc::verification_failed, "unread stack tail changed across the window");
  return prefix(at_ij, at_ij.size() - tail_len);
}

// ---------------------------------------------------------------------------
// Delta indices and the assignment map

// One entry of the index set: window offset i in [1, n-j], window width j in
// [j0, k], and the stack tops v (at boundary i) and w (at boundary i+j).
struct DeltaIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  SymbolId v = 0;
  SymbolId w = 0;

  bool operator==(const DeltaIndex& o) const {
    return i == o.i && j == o.j && v == o.v && w == o.w;
  }
  bool operator<(const DeltaIndex& o) const {
    return std::tie(i, j, v, w) < std::tie(o.i, o.j, o.v, o.w);
  }
};

struct DeltaSize {
  std::uint64_t exact = 0;        // sum over j of (n-j) * |Gamma|^2
  std::uint64_t coarse_bound = 0;  // |Gamma|^2 (k-j0+1)(n-j0+1)
};

inline DeltaSize delta_size(const Npda& m, std::size_t n, std::size_t j0,
                            std::size_t k) {
  require(j0 >= 1 && j0 <= k && k <= n, Errc::invalid_parameter,
          "need 1 <= j0 <= k <= n");
  std::uint64_t gamma2 =
      static_cast<std::uint64_t>(m.stack_alphabet()->size()) * m.stack_alphabet()->size();
  DeltaSize out;
  for (std::size_t j = j0; j <= k; ++j)
    if (j < n) out.exact += static_cast<std::uint64_t>(n - j) * gamma2;
  out.coarse_bound = gamma2 * (k - j0 + 1) * (n - j0 + 1);
  return out;
}

namespace detail {

struct PathBundle {
  std::vector<AcceptingPath> paths;
  bool truncated = false;
};

inline PathBundle accepting_paths_with_budget(const Npda& m, const Str& x,
                                              std::size_t path_budget) {
  PathBundle out;
  out.paths = enumerate_accepting_paths(m, x, path_budget + 1);
  if (out.paths.size() > path_budget) {
    out.paths.pop_back();
    out.truncated = true;
  }
  return out;
}

}  // namespace detail

// The deterministic assignment e(x): the lexicographically least
// (i, j, v, w) -- ordered by i, then j, then the machine's stack-symbol
// order -- such that some accepting path within the budget turns top v at
// boundary i into the single symbol w at boundary i+j without reading below
// v. Minimality is relative to the path budget.
inline std::pair<DeltaIndex, AcceptingPath> assign_delta(
    const Npda& m, const Str& x, std::size_t j0, std::size_t k,
    std::size_t path_budget = kDefaultPathLimit) {
  std::size_t n = x.size();
  require(m.gnf_normal(), Errc::precondition_violated,
          "delta assignment needs the three-state normal form");
  require(n >= 2 && j0 >= 2 && 2 * j0 <= k && k <= n, Errc::precondition_violated,
          "need n >= 2, j0 >= 2 and 2*j0 <= k <= n");
  auto bundle = detail::accepting_paths_with_budget(m, x, path_budget);
  require(!bundle.paths.empty(),
          bundle.truncated ? Errc::path_budget_exceeded : Errc::not_in_language,
          "string has no accepting path: " + x.text());

  for (std::size_t i = 1; i + j0 <= n; ++i) {
    std::size_t j_hi = std::min(k, n - i);
    for (std::size_t j = j0; j <= j_hi; ++j) {
      std::optional<std::pair<SymbolId, SymbolId>> best;
      const AcceptingPath* best_path = nullptr;
      for (const auto& p : bundle.paths) {
        const Str& at_i = p.at_boundary(static_cast<Boundary>(i)).stack;
        if (at_i.empty()) continue;
        SymbolId v = at_i[0];
        auto t = extract_G(m, x, p, i, j, v);
        if (!t || t->size() != 1) continue;
        std::pair<SymbolId, SymbolId> vw{v, (*t)[0]};
        if (!best || vw < *best) {
          best = vw;
          best_path = &p;
        }
      }
      if (best) {
        DeltaIndex idx{i, j, best->first, best->second};
        auto check = extract_G(m, x, *best_path, i, j, idx.v);
        require(check && check->size() == 1 && (*check)[0] == idx.w,
                Errc::verification_failed, "delta assignment failed to re-verify");
        return {idx, *best_path};
      }
    }
  }
  fail(bundle.truncated ? Errc::path_budget_exceeded : Errc::no_assignment,
       "no delta index covers the string " + x.text() +
           " (j0=" + std::to_string(j0) + ", k=" + std::to_string(k) + ")");
}

// ---------------------------------------------------------------------------
// The closing-argument witness finder

struct CflSwapWitness {
  Str x, y;
  DeltaIndex index;
  Str x_mid, y_mid;          // distinct middles at the window (i, i+j)
  Str swapped_x, swapped_y;  // x with y's middle, y with x's middle
  AcceptingPath swapped_x_path, swapped_y_path;
  bool middles_differ_in_counts = false;  // some symbol count differs between middles
};

namespace detail {

inline bool counts_differ(const Str& a, const Str& b) {
  const auto& alph = a.alphabet();
  for (SymbolId s = 0; s < alph->size(); ++s)
    if (count_symbol(a, s) != count_symbol(b, s)) return true;
  return false;
}

}  // namespace detail

// Assigns every sample member to its Delta bucket, then scans buckets
// (largest first, then index order) for two members whose middles at the
// bucket window differ. The swapped strings are rebuilt and re-simulated;
// a verification failure would falsify the splice argument and is raised as
// an internal error. Returns nothing when no bucket yields a distinct-middle
// pair.
inline std::optional<CflSwapWitness> find_cfl_swap(
    const Npda& m, const SampleSet& s, std::size_t j0, std::size_t k,
    std::size_t path_budget = kDefaultPathLimit, std::size_t workers = 1) {
  std::size_t n = s.n();
  require(n >= 2 && j0 >= 2 && 2 * j0 <= k && k <= n, Errc::precondition_violated,
          "need n >= 2, j0 >= 2 and 2*j0 <= k <= n");

  std::vector<std::optional<DeltaIndex>> assigned(s.size());
  std::vector<std::exception_ptr> errors(s.size());
  auto work = [&](std::size_t idx) {
    try {
      assigned[idx] = assign_delta(m, s.at(idx), j0, k, path_budget).first;
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  };
  if (workers <= 1 || s.size() <= 1) {
    for (std::size_t idx = 0; idx < s.size(); ++idx) work(idx);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::size_t count = std::min(workers, s.size());
    pool.reserve(count);
    for (std::size_t t = 0; t < count; ++t)
      pool.emplace_back([&] {
        for (std::size_t idx = next.fetch_add(1); idx < s.size();
             idx = next.fetch_add(1))
          work(idx);
      });
    for (auto& t : pool) t.join();
  }
  for (std::size_t idx = 0; idx < s.size(); ++idx)
    if (errors[idx]) std::rethrow_exception(errors[idx]);

  std::map<DeltaIndex, std::vector<std::size_t>> buckets;
  for (std::size_t idx = 0; idx < s.size(); ++idx) buckets[*assigned[idx]].push_back(idx);

  std::vector<const std::pair<const DeltaIndex, std::vector<std::size_t>>*> order;
  order.reserve(buckets.size());
  for (const auto& b : buckets) order.push_back(&b);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return a->second.size() > b->second.size();
  });

  for (const auto* bucket : order) {
    const DeltaIndex& idx = bucket->first;
    const auto& members = bucket->second;
    const Str& x = s.at(members.front());
    Str x_mid = middle(x, idx.i, idx.i + idx.j);
    for (std::size_t mi = 1; mi < members.size(); ++mi) {
      const Str& y = s.at(members[mi]);
      Str y_mid = middle(y, idx.i, idx.i + idx.j);
      if (y_mid == x_mid) continue;

      CflSwapWitness w;
      w.x = x;
      w.y = y;
      w.index = idx;
      w.x_mid = x_mid;
      w.y_mid = y_mid;
      w.swapped_x = prefix(x, idx.i) + y_mid + suffix(x, n - idx.i - idx.j);
      w.swapped_y = prefix(y, idx.i) + x_mid + suffix(y, n - idx.i - idx.j);
      auto px = npda_accepts(m, w.swapped_x);
      auto py = npda_accepts(m, w.swapped_y);
      require(px && py, Errc::verification_failed,
              "swapped strings rejected despite a shared delta index");
      w.swapped_x_path = std::move(*px);
      w.swapped_y_path = std::move(*py);
      w.middles_differ_in_counts = detail::counts_differ(x_mid, y_mid);
      return w;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Path splicing (diagnostic)

// Rebuilds an accepting path for prefix(x,i) ++ middle(y,i,i+j) ++
// suffix(x,n-i-j) from the two original paths: x's steps outside the window,
// y's steps inside it. Replays the spliced transition sequence and throws
// PathMismatch when it is not a valid accepting computation.
inline AcceptingPath splice_paths(const Npda& m, const AcceptingPath& px,
                                  const AcceptingPath& py, std::size_t i,
                                  std::size_t j) {
  std::size_t n = px.input.size();
  require(py.input.size() == n, Errc::length_mismatch,
          "spliced paths need same-length inputs");
  require(j >= 1 && i + j <= n, Errc::invalid_range, "window outside the input");

  Str input = prefix(px.input, i) + middle(py.input, i, i + j) +
              suffix(px.input, n - i - j);
  // transition t consumes tape cell t: cells 0..i from x, i+1..i+j from y,
  // the rest from x again.
  std::vector<std::size_t> seq;
  seq.reserve(n + 2);
  for (std::size_t c = 0; c <= i; ++c) seq.push_back(px.transitions[c]);
  for (std::size_t c = i + 1; c <= i + j; ++c) seq.push_back(py.transitions[c]);
  for (std::size_t c = i + j + 1; c <= n + 1; ++c) seq.push_back(px.transitions[c]);

  AcceptingPath out;
  out.input = input;
  out.transitions = seq;
  std::vector<SymbolId> tape;
  tape.push_back(m.cent());
  for (SymbolId a : input.ids()) tape.push_back(a);
  tape.push_back(m.dollar());
  std::vector<SymbolId> st{m.stack_start()};
  std::uint32_t q = m.start();
  out.configs.push_back({-1, q, detail::stack_to_str(m, st)});
  for (std::size_t c = 0; c < seq.size(); ++c) {
    const NpdaTransition& t = m.transitions()[seq[c]];
    require(t.from == q && !st.empty() && st.back() == t.top && t.input == tape[c],
            Errc::path_mismatch, "spliced step " + std::to_string(c) + " not applicable");
    st.pop_back();
    for (auto it = t.push.rbegin(); it != t.push.rend(); ++it) st.push_back(*it);
    q = t.to;
    out.configs.push_back({static_cast<Boundary>(c), q, detail::stack_to_str(m, st)});
  }
  require(m.is_final(q), Errc::path_mismatch, "spliced path does not accept");
  return out;
}

}  // namespace swaplab
