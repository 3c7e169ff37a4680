#pragma once

// DFA and NPDA data models, deterministic runs with state traces, and
// exhaustive nondeterministic acceptance search with accepting-path
// enumeration. NPDAs read endmarked tapes CENT x DOLLAR and consume exactly
// one tape symbol per transition; machines with lambda-moves are outside the
// accepted input class (the file format cannot even express them).

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "swaplab/core.hpp"
#include "swaplab/error.hpp"

namespace swaplab {

inline constexpr const char* kCentToken = "CENT";
inline constexpr const char* kDollarToken = "DOLLAR";

inline constexpr std::size_t kDefaultMaxLen = 12;
inline constexpr std::size_t kDefaultNodeBudget = 50'000'000;
inline constexpr std::size_t kDefaultPathLimit = 10'000;

// ---------------------------------------------------------------------------
// DFA

class Dfa {
 public:
  Dfa(std::vector<std::string> states, AlphabetPtr input, std::string start,
      std::vector<std::string> finals,
      const std::vector<std::vector<std::string>>& table)
      : states_(std::move(states)), input_(std::move(input)) {
    require(!states_.empty(), Errc::invalid_parameter, "dfa needs at least one state");
    require(input_ != nullptr, Errc::invalid_parameter, "dfa needs an input alphabet");
    for (std::size_t i = 0; i < states_.size(); ++i)
      require(state_index_.emplace(states_[i], static_cast<std::uint32_t>(i)).second,
              Errc::invalid_parameter, "duplicate state: " + states_[i]);
    start_ = state_id(start);
    final_.assign(states_.size(), false);
    for (const auto& f : finals) final_[state_id(f)] = true;
    require(table.size() == states_.size(), Errc::invalid_parameter,
            "transition table must cover every state");
    next_.resize(states_.size());
    for (std::size_t q = 0; q < states_.size(); ++q) {
      require(table[q].size() == input_->size(), Errc::invalid_parameter,
              "transition row for " + states_[q] + " must cover every symbol");
      next_[q].reserve(table[q].size());
      for (const auto& target : table[q]) next_[q].push_back(state_id(target));
    }
  }

  const std::vector<std::string>& states() const { return states_; }
  const AlphabetPtr& input_alphabet() const { return input_; }
  std::uint32_t start() const { return start_; }
  bool is_final(std::uint32_t q) const { return final_.at(q); }
  std::uint32_t next(std::uint32_t q, SymbolId a) const { return next_.at(q).at(a); }
  std::size_t state_count() const { return states_.size(); }
  const std::string& state_name(std::uint32_t q) const { return states_.at(q); }

  std::uint32_t state_id(const std::string& name) const {
    auto it = state_index_.find(name);
    require(it != state_index_.end(), Errc::invalid_parameter, "unknown state: " + name);
    return it->second;
  }

 private:
  std::vector<std::string> states_;
  std::unordered_map<std::string, std::uint32_t> state_index_;
  AlphabetPtr input_;
  std::uint32_t start_ = 0;
  std::vector<bool> final_;
  std::vector<std::vector<std::uint32_t>> next_;
};

struct DfaRun {
  bool accepted = false;
  std::vector<std::uint32_t> trace;  // length |w|+1, trace[i] = state after prefix(w,i)
};

inline DfaRun dfa_run(const Dfa& d, const Str& w) {
  require(same_alphabet(w.alphabet(), d.input_alphabet()), Errc::unknown_symbol,
          "input not over the dfa alphabet: " + w.text());
  DfaRun run;
  run.trace.reserve(w.size() + 1);
  std::uint32_t q = d.start();
  run.trace.push_back(q);
  for (SymbolId a : w.ids()) {
    q = d.next(q, a);
    run.trace.push_back(q);
  }
  run.accepted = d.is_final(q);
  return run;
}

// ---------------------------------------------------------------------------
// NPDA

struct NpdaTransition {
  std::uint32_t from = 0;
  SymbolId input = 0;  // tape symbol: Sigma, CENT, or DOLLAR
  SymbolId top = 0;    // stack symbol popped
  std::uint32_t to = 0;
  std::vector<SymbolId> push;  // pushed string, leftmost symbol on top
};

class Npda {
 public:
  Npda(std::vector<std::string> states, AlphabetPtr input, AlphabetPtr stack,
       std::string start, std::string stack_start, std::vector<std::string> finals,
       std::vector<NpdaTransition> transitions)
      : states_(std::move(states)), input_(std::move(input)), stack_(std::move(stack)) {
    require(!states_.empty(), Errc::invalid_parameter, "npda needs at least one state");
    require(input_ != nullptr && stack_ != nullptr, Errc::invalid_parameter,
            "npda needs input and stack alphabets");
    require(!input_->find(kCentToken) && !input_->find(kDollarToken),
            Errc::invalid_parameter, "CENT/DOLLAR are reserved endmarker tokens");
    std::vector<std::string> tape_tokens = input_->tokens();
    tape_tokens.push_back(kCentToken);
    tape_tokens.push_back(kDollarToken);
    tape_ = make_alphabet(std::move(tape_tokens));
    cent_ = tape_->id(kCentToken);
    dollar_ = tape_->id(kDollarToken);

    for (std::size_t i = 0; i < states_.size(); ++i)
      require(state_index_.emplace(states_[i], static_cast<std::uint32_t>(i)).second,
              Errc::invalid_parameter, "duplicate state: " + states_[i]);
    start_ = state_id(start);
    stack_start_ = stack_->id(stack_start);
    final_.assign(states_.size(), false);
    for (const auto& f : finals) final_[state_id(f)] = true;

    for (const auto& t : transitions) {
      require(t.from < states_.size() && t.to < states_.size(), Errc::invalid_parameter,
              "transition references unknown state");
      require(t.input < tape_->size(), Errc::invalid_parameter,
              "transition references unknown tape symbol");
      require(t.top < stack_->size(), Errc::invalid_parameter,
              "transition references unknown stack symbol");
      for (SymbolId s : t.push)
        require(s < stack_->size(), Errc::invalid_parameter,
                "transition pushes unknown stack symbol");
    }

    // Canonical transition order: sorted by serialized form. This fixes the
    // nondeterministic search order and makes "first accepting path"
    // reproducible.
    std::sort(transitions.begin(), transitions.end(),
              [this](const NpdaTransition& a, const NpdaTransition& b) {
                return serialize_transition(a) < serialize_transition(b);
              });
    transitions.erase(std::unique(transitions.begin(), transitions.end(),
                                  [this](const NpdaTransition& a, const NpdaTransition& b) {
                                    return serialize_transition(a) == serialize_transition(b);
                                  }),
                      transitions.end());
    transitions_ = std::move(transitions);
    for (std::size_t i = 0; i < transitions_.size(); ++i) {
      const auto& t = transitions_[i];
      index_[pack(t.from, t.input, t.top)].push_back(i);
    }
    derive_flags();
  }

  const std::vector<std::string>& states() const { return states_; }
  const AlphabetPtr& input_alphabet() const { return input_; }
  const AlphabetPtr& tape_alphabet() const { return tape_; }
  const AlphabetPtr& stack_alphabet() const { return stack_; }
  SymbolId cent() const { return cent_; }
  SymbolId dollar() const { return dollar_; }
  std::uint32_t start() const { return start_; }
  SymbolId stack_start() const { return stack_start_; }
  bool is_final(std::uint32_t q) const { return final_.at(q); }
  const std::vector<NpdaTransition>& transitions() const { return transitions_; }
  const std::string& state_name(std::uint32_t q) const { return states_.at(q); }

  std::uint32_t state_id(const std::string& name) const {
    auto it = state_index_.find(name);
    require(it != state_index_.end(), Errc::invalid_parameter, "unknown state: " + name);
    return it->second;
  }

  const std::vector<std::size_t>& candidates(std::uint32_t q, SymbolId in,
                                             SymbolId top) const {
    static const std::vector<std::size_t> kNone;
    auto it = index_.find(pack(q, in, top));
    return it == index_.end() ? kNone : it->second;
  }

  // Structural flags. gnf_normal: one initial CENT move pushing <start
  // variable, stack start>, one DOLLAR move into the unique final state, all
  // other moves loop on a single working state and never fire with the stack
  // start on top. bounded: every push string has length <= 2.
  bool gnf_normal() const { return gnf_normal_; }
  bool bounded() const { return bounded_; }
  std::uint32_t work_state() const { return work_state_; }

  std::string serialize_transition(const NpdaTransition& t) const {
    std::string out = states_.at(t.from) + ' ' + tape_->token(t.input) + ' ' +
                      stack_->token(t.top) + " -> " + states_.at(t.to) + " push:";
    if (t.push.empty()) {
      out += '-';
    } else {
      for (std::size_t i = 0; i < t.push.size(); ++i) {
        if (i) out += ' ';
        out += stack_->token(t.push[i]);
      }
    }
    return out;
  }

 private:
  static std::uint64_t pack(std::uint32_t q, SymbolId in, SymbolId top) {
    return (static_cast<std::uint64_t>(q) << 40) |
           (static_cast<std::uint64_t>(in) << 20) | top;
  }

  void derive_flags() {
    bounded_ = true;
    for (const auto& t : transitions_)
      if (t.push.size() > 2) bounded_ = false;

    gnf_normal_ = false;
    std::uint32_t final_state = 0;
    std::size_t final_count = 0;
    for (std::uint32_t q = 0; q < final_.size(); ++q)
      if (final_[q]) {
        final_state = q;
        ++final_count;
      }
    if (final_count != 1 || final_state == start_) return;

    const NpdaTransition* init = nullptr;
    const NpdaTransition* fin = nullptr;
    std::uint32_t work = UINT32_MAX;
    for (const auto& t : transitions_) {
      if (t.input == cent_) {
        if (init) return;  // more than one initial move
        init = &t;
      } else if (t.input == dollar_) {
        if (fin) return;
        fin = &t;
      }
    }
    if (!init || !fin) return;
    if (init->from != start_ || init->top != stack_start_) return;
    if (init->push.size() != 2 || init->push[1] != stack_start_ ||
        init->push[0] == stack_start_) return;
    work = init->to;
    if (work == start_ || work == final_state) return;
    if (fin->from != work || fin->top != stack_start_ || fin->to != final_state) return;
    if (fin->push != std::vector<SymbolId>{stack_start_}) return;
    for (const auto& t : transitions_) {
      if (&t == init || &t == fin) continue;
      if (t.input == cent_ || t.input == dollar_) return;
      if (t.from != work || t.to != work) return;
      if (t.top == stack_start_) return;  // delta(q1, a, z) must be empty
      for (SymbolId s : t.push)
        if (s == stack_start_) return;  // pushes stay over the variables
    }
    gnf_normal_ = true;
    work_state_ = work;
  }

  std::vector<std::string> states_;
  std::unordered_map<std::string, std::uint32_t> state_index_;
  AlphabetPtr input_;
  AlphabetPtr tape_;
  AlphabetPtr stack_;
  SymbolId cent_ = 0, dollar_ = 0;
  std::uint32_t start_ = 0;
  SymbolId stack_start_ = 0;
  std::vector<bool> final_;
  std::vector<NpdaTransition> transitions_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index_;
  bool gnf_normal_ = false;
  bool bounded_ = false;
  std::uint32_t work_state_ = 0;
};

// One machine configuration: the state and stack seen at an intercell
// boundary. Stack strings keep the leftmost symbol on top.
struct Configuration {
  Boundary boundary = -1;
  std::uint32_t state = 0;
  Str stack;
};

// An accepting computation on CENT x DOLLAR: configurations at boundaries
// -1..n+1 and the transition applied at each step (index into the machine's
// canonical transition list).
struct AcceptingPath {
  Str input;
  std::vector<Configuration> configs;      // size |x|+3
  std::vector<std::size_t> transitions;    // size |x|+2

  const Configuration& at_boundary(Boundary b) const {
    return configs.at(static_cast<std::size_t>(b + 1));
  }
};

namespace detail {

inline Str stack_to_str(const Npda& m, const std::vector<SymbolId>& bottom_up) {
  std::vector<SymbolId> top_first(bottom_up.rbegin(), bottom_up.rend());
  return Str(m.stack_alphabet(), std::move(top_first));
}

struct NpdaSearch {
  const Npda& m;
  const Str& x;
  std::vector<SymbolId> tape;  // CENT x DOLLAR over the tape alphabet
  std::size_t limit;
  std::size_t* budget = nullptr;  // optional global node budget
  std::vector<std::vector<std::size_t>> found;  // transition index sequences
  std::unordered_set<std::string> failed;       // (step, state, stack) with no accepting suffix
  std::vector<SymbolId> stack;                  // top at back
  std::vector<std::size_t> chosen;

  NpdaSearch(const Npda& machine, const Str& input, std::size_t path_limit,
             std::size_t* node_budget)
      : m(machine), x(input), limit(path_limit), budget(node_budget) {
    require(same_alphabet(input.alphabet(), m.input_alphabet()), Errc::unknown_symbol,
            "input not over the npda alphabet: " + input.text());
    tape.reserve(input.size() + 2);
    tape.push_back(m.cent());
    for (SymbolId a : input.ids()) tape.push_back(a);  // Sigma ids coincide in the tape alphabet
    tape.push_back(m.dollar());
    stack.push_back(m.stack_start());
  }

  std::string key(std::size_t step, std::uint32_t state) const {
    std::string k;
    k.reserve(8 + stack.size() * 4);
    auto put32 = [&k](std::uint32_t v) {
      for (int i = 0; i < 4; ++i) k.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    put32(static_cast<std::uint32_t>(step));
    put32(state);
    for (SymbolId s : stack) put32(s);
    return k;
  }

  void run() { dfs(0, m.start()); }

  bool dfs(std::size_t step, std::uint32_t state) {
    if (budget) {
      require(*budget > 0, Errc::budget_exceeded, "npda search budget exhausted");
      --*budget;
    }
    if (step == tape.size()) {
      if (!m.is_final(state)) return false;
      found.push_back(chosen);
      return true;
    }
    if (stack.empty()) return false;
    std::string k = key(step, state);
    if (failed.count(k)) return false;
    bool any = false;
    const auto& cands = m.candidates(state, tape[step], stack.back());
    for (std::size_t idx : cands) {
      const NpdaTransition& t = m.transitions()[idx];
      stack.pop_back();
      for (auto it = t.push.rbegin(); it != t.push.rend(); ++it) stack.push_back(*it);
      chosen.push_back(idx);
      if (dfs(step + 1, t.to)) any = true;
      chosen.pop_back();
      stack.resize(stack.size() - t.push.size());
      stack.push_back(t.top);
      if (found.size() >= limit) break;
    }
    if (!any && found.size() < limit) failed.insert(k);
    return any;
  }

  AcceptingPath materialize(const std::vector<std::size_t>& seq) const {
    AcceptingPath p;
    p.input = x;
    p.transitions = seq;
    std::vector<SymbolId> st{m.stack_start()};
    std::uint32_t q = m.start();
    p.configs.push_back({-1, q, stack_to_str(m, st)});
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const NpdaTransition& t = m.transitions()[seq[i]];
      st.pop_back();
      for (auto it = t.push.rbegin(); it != t.push.rend(); ++it) st.push_back(*it);
      q = t.to;
      p.configs.push_back({static_cast<Boundary>(i), q, stack_to_str(m, st)});
    }
    return p;
  }
};

}  // namespace detail

// All accepting paths in deterministic (transition-order depth-first) order,
// truncated at limit.
inline std::vector<AcceptingPath> enumerate_accepting_paths(
    const Npda& m, const Str& x, std::size_t limit = kDefaultPathLimit,
    std::size_t* node_budget = nullptr) {
  require(limit >= 1, Errc::invalid_parameter, "path limit must be positive");
  detail::NpdaSearch search(m, x, limit, node_budget);
  search.run();
  std::vector<AcceptingPath> out;
  out.reserve(search.found.size());
  for (const auto& seq : search.found) out.push_back(search.materialize(seq));
  return out;
}

// First accepting path in the deterministic search order, if any.
inline std::optional<AcceptingPath> npda_accepts(const Npda& m, const Str& x,
                                                 std::size_t* node_budget = nullptr) {
  auto paths = enumerate_accepting_paths(m, x, 1, node_budget);
  if (paths.empty()) return std::nullopt;
  return std::move(paths.front());
}

// Replays a path against the machine; throws PathMismatch when the steps do
// not belong to an accepting computation of m on x.
inline void validate_path(const Npda& m, const Str& x, const AcceptingPath& p) {
  require(p.input == x, Errc::path_mismatch, "path carries a different input");
  require(p.transitions.size() == x.size() + 2 && p.configs.size() == x.size() + 3,
          Errc::path_mismatch, "path length does not match the endmarked input");
  std::vector<SymbolId> tape;
  tape.push_back(m.cent());
  for (SymbolId a : x.ids()) tape.push_back(a);
  tape.push_back(m.dollar());
  std::vector<SymbolId> st{m.stack_start()};
  std::uint32_t q = m.start();
  require(p.configs[0].state == q && p.configs[0].stack == detail::stack_to_str(m, st) &&
              p.configs[0].boundary == -1,
          Errc::path_mismatch, "path does not start from the initial configuration");
  for (std::size_t i = 0; i < p.transitions.size(); ++i) {
    require(p.transitions[i] < m.transitions().size(), Errc::path_mismatch,
            "transition index out of range");
    const NpdaTransition& t = m.transitions()[p.transitions[i]];
    require(t.from == q && !st.empty() && t.top == st.back() && t.input == tape[i],
            Errc::path_mismatch, "transition not applicable at step " + std::to_string(i));
    st.pop_back();
    for (auto it = t.push.rbegin(); it != t.push.rend(); ++it) st.push_back(*it);
    q = t.to;
    const Configuration& c = p.configs[i + 1];
    require(c.boundary == static_cast<Boundary>(i) && c.state == q &&
                c.stack == detail::stack_to_str(m, st),
            Errc::path_mismatch, "configuration mismatch at step " + std::to_string(i));
  }
  require(m.is_final(q), Errc::path_mismatch, "path does not end in a final state");
}

// ---------------------------------------------------------------------------
// Brute-force language slices (oracle plumbing)

namespace detail {

template <typename AcceptFn>
std::set<Str> enumerate_language(const AlphabetPtr& alphabet, std::size_t max_len,
                                 std::size_t cap, AcceptFn&& accepts) {
  require(max_len <= cap, Errc::invalid_parameter,
          "max_len " + std::to_string(max_len) + " exceeds the configured cap " +
              std::to_string(cap));
  std::set<Str> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<SymbolId> word(len, 0);
    while (true) {
      Str s(alphabet, word);
      if (accepts(s)) out.insert(s);
      // odometer over the alphabet, most significant position first
      std::size_t pos = len;
      while (pos > 0) {
        if (++word[pos - 1] < alphabet->size()) break;
        word[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return out;
}

}  // namespace detail

// Exactly the accepted strings of length <= max_len, by exhaustive
// enumeration. node_budget guards the total nondeterministic search work.
inline std::set<Str> language_upto(const Npda& m, std::size_t max_len,
                                   std::size_t cap = kDefaultMaxLen,
                                   std::size_t node_budget = kDefaultNodeBudget) {
  std::size_t budget = node_budget;
  return detail::enumerate_language(m.input_alphabet(), max_len, cap, [&](const Str& s) {
    return npda_accepts(m, s, &budget).has_value();
  });
}

inline std::set<Str> language_upto(const Dfa& d, std::size_t max_len,
                                   std::size_t cap = kDefaultMaxLen,
                                   std::size_t node_budget = kDefaultNodeBudget) {
  std::size_t budget = node_budget;
  return detail::enumerate_language(d.input_alphabet(), max_len, cap, [&](const Str& s) {
    require(budget > s.size(), Errc::budget_exceeded, "dfa enumeration budget exhausted");
    budget -= s.size() + 1;
    return dfa_run(d, s).accepted;
  });
}

// ---------------------------------------------------------------------------
// Machine file format (UTF-8 text). Header lines, then one transition per
// line. DFA: "q a -> q'". NPDA: "q a v -> q' push:w1 w2" with "push:-" for
// the empty push. Endmarker tokens are literally CENT and DOLLAR.

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

struct MachineText {
  std::unordered_map<std::string, std::vector<std::string>> headers;
  std::vector<std::vector<std::string>> rules;
};

inline MachineText scan_machine_text(const std::string& text) {
  MachineText mt;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    // no comment syntax: '#' is an ordinary symbol token in this domain
    auto toks = split_tokens(line);
    if (toks.empty()) continue;
    if (toks[0].size() > 1 && toks[0].back() == ':') {
      std::string key = toks[0].substr(0, toks[0].size() - 1);
      mt.headers[key] = std::vector<std::string>(toks.begin() + 1, toks.end());
    } else {
      mt.rules.push_back(std::move(toks));
    }
  }
  return mt;
}

inline std::vector<std::string> header_of(const MachineText& mt, const std::string& key) {
  auto it = mt.headers.find(key);
  require(it != mt.headers.end(), Errc::parse_error, "missing header line: " + key + ":");
  return it->second;
}

inline std::string single_header(const MachineText& mt, const std::string& key) {
  auto v = header_of(mt, key);
  require(v.size() == 1, Errc::parse_error, "header " + key + ": expects one token");
  return v[0];
}

}  // namespace detail

inline Dfa parse_dfa(const std::string& text) {
  auto mt = detail::scan_machine_text(text);
  require(detail::single_header(mt, "type") == "dfa", Errc::parse_error,
          "expected type: dfa");
  auto states = detail::header_of(mt, "states");
  auto alphabet = make_alphabet(detail::header_of(mt, "alphabet"));
  auto start = detail::single_header(mt, "start");
  auto finals = detail::header_of(mt, "finals");
  std::map<std::pair<std::string, std::string>, std::string> moves;
  for (const auto& r : mt.rules) {
    require(r.size() == 4 && r[2] == "->", Errc::parse_error,
            "dfa transition must look like: q a -> q'");
    auto key = std::make_pair(r[0], r[1]);
    require(moves.emplace(key, r[3]).second, Errc::parse_error,
            "duplicate dfa transition for " + r[0] + " " + r[1]);
  }
  std::vector<std::vector<std::string>> table(states.size());
  for (std::size_t q = 0; q < states.size(); ++q) {
    for (const auto& tok : alphabet->tokens()) {
      auto it = moves.find({states[q], tok});
      require(it != moves.end(), Errc::parse_error,
              "dfa transition missing for " + states[q] + " " + tok);
      table[q].push_back(it->second);
    }
  }
  return Dfa(states, alphabet, start, finals, table);
}

inline std::string serialize_dfa(const Dfa& d) {
  std::ostringstream out;
  out << "type: dfa\n";
  out << "states:";
  for (const auto& s : d.states()) out << ' ' << s;
  out << "\nalphabet:";
  for (const auto& t : d.input_alphabet()->tokens()) out << ' ' << t;
  out << "\nstart: " << d.state_name(d.start()) << "\nfinals:";
  for (std::uint32_t q = 0; q < d.state_count(); ++q)
    if (d.is_final(q)) out << ' ' << d.state_name(q);
  out << '\n';
  std::vector<std::string> lines;
  for (std::uint32_t q = 0; q < d.state_count(); ++q)
    for (SymbolId a = 0; a < d.input_alphabet()->size(); ++a)
      lines.push_back(d.state_name(q) + ' ' + d.input_alphabet()->token(a) + " -> " +
                      d.state_name(d.next(q, a)));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out << l << '\n';
  return out.str();
}

inline Npda parse_npda(const std::string& text) {
  auto mt = detail::scan_machine_text(text);
  require(detail::single_header(mt, "type") == "npda", Errc::parse_error,
          "expected type: npda");
  auto states = detail::header_of(mt, "states");
  auto input = make_alphabet(detail::header_of(mt, "alphabet"));
  auto stack = make_alphabet(detail::header_of(mt, "stack_alphabet"));
  auto start = detail::single_header(mt, "start");
  auto stack_start = detail::single_header(mt, "stack_start");
  auto finals = detail::header_of(mt, "finals");

  std::unordered_map<std::string, std::uint32_t> state_ids;
  for (std::size_t i = 0; i < states.size(); ++i)
    state_ids.emplace(states[i], static_cast<std::uint32_t>(i));
  std::vector<std::string> tape_tokens = input->tokens();
  tape_tokens.push_back(kCentToken);
  tape_tokens.push_back(kDollarToken);
  auto tape = make_alphabet(tape_tokens);

  std::vector<NpdaTransition> transitions;
  for (const auto& r : mt.rules) {
    require(r.size() >= 6 && r[3] == "->", Errc::parse_error,
            "npda transition must look like: q a v -> q' push:w1 w2");
    NpdaTransition t;
    auto from = state_ids.find(r[0]);
    auto to = state_ids.find(r[4]);
    require(from != state_ids.end() && to != state_ids.end(), Errc::parse_error,
            "npda transition references unknown state");
    t.from = from->second;
    t.to = to->second;
    t.input = tape->id(r[1]);
    t.top = stack->id(r[2]);
    require(r[5].rfind("push:", 0) == 0, Errc::parse_error,
            "npda transition needs a push: field");
    std::string first = r[5].substr(5);
    if (first == "-") {
      require(r.size() == 6, Errc::parse_error, "push:- cannot carry extra tokens");
    } else {
      require(!first.empty(), Errc::parse_error, "push: needs symbols or -");
      t.push.push_back(stack->id(first));
      for (std::size_t i = 6; i < r.size(); ++i) t.push.push_back(stack->id(r[i]));
    }
    transitions.push_back(std::move(t));
  }
  return Npda(states, input, stack, start, stack_start, finals, transitions);
}

inline std::string serialize_npda(const Npda& m) {
  std::ostringstream out;
  out << "type: npda\n";
  out << "states:";
  for (const auto& s : m.states()) out << ' ' << s;
  out << "\nalphabet:";
  for (const auto& t : m.input_alphabet()->tokens()) out << ' ' << t;
  out << "\nstack_alphabet:";
  for (const auto& t : m.stack_alphabet()->tokens()) out << ' ' << t;
  out << "\nstart: " << m.state_name(m.start());
  out << "\nstack_start: " << m.stack_alphabet()->token(m.stack_start()) << "\nfinals:";
  for (std::uint32_t q = 0; q < m.states().size(); ++q)
    if (m.is_final(q)) out << ' ' << m.state_name(q);
  out << '\n';
  for (const auto& t : m.transitions()) out << m.serialize_transition(t) << '\n';
  return out.str();
}

}  // namespace swaplab
