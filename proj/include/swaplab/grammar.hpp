#pragma once

// Context-free grammar representation, the Greibach normal form pipeline,
// the grammar-to-NPDA compiler, and the stack-growth-bounding rewrite.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "swaplab/automata.hpp"
#include "swaplab/core.hpp"
#include "swaplab/error.hpp"

namespace swaplab {

inline constexpr const char* kEpsilonToken = "EPS";
inline constexpr std::size_t kDefaultDerivationBudget = 2'000'000;

// One body symbol: a variable (index into the variable list) or a terminal
// (symbol id in the terminal alphabet).
struct GSym {
  bool is_var = false;
  std::uint32_t idx = 0;

  bool operator==(const GSym& o) const { return is_var == o.is_var && idx == o.idx; }
  bool operator<(const GSym& o) const {
    if (is_var != o.is_var) return is_var < o.is_var;
    return idx < o.idx;
  }
};

struct Production {
  std::uint32_t head = 0;
  std::vector<GSym> body;

  bool operator==(const Production& o) const { return head == o.head && body == o.body; }
  bool operator<(const Production& o) const {
    if (head != o.head) return head < o.head;
    return body < o.body;
  }
};

class Cfg {
 public:
  Cfg(std::vector<std::string> variables, AlphabetPtr terminals, std::string start,
      std::vector<Production> productions)
      : variables_(std::move(variables)), terminals_(std::move(terminals)) {
    require(!variables_.empty(), Errc::invalid_parameter, "grammar needs variables");
    require(terminals_ != nullptr, Errc::invalid_parameter, "grammar needs terminals");
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      require(!terminals_->find(variables_[i]), Errc::invalid_parameter,
              "token is both variable and terminal: " + variables_[i]);
      require(var_index_.emplace(variables_[i], static_cast<std::uint32_t>(i)).second,
              Errc::invalid_parameter, "duplicate variable: " + variables_[i]);
    }
    start_ = var_id(start);
    for (const auto& p : productions) {
      require(p.head < variables_.size(), Errc::invalid_parameter,
              "production head out of range");
      for (const auto& s : p.body)
        require(s.idx < (s.is_var ? variables_.size() : terminals_->size()),
                Errc::invalid_parameter, "production body symbol out of range");
    }
    std::sort(productions.begin(), productions.end());
    productions.erase(std::unique(productions.begin(), productions.end()),
                      productions.end());
    productions_ = std::move(productions);
  }

  const std::vector<std::string>& variables() const { return variables_; }
  const AlphabetPtr& terminals() const { return terminals_; }
  std::uint32_t start() const { return start_; }
  const std::vector<Production>& productions() const { return productions_; }
  const std::string& var_name(std::uint32_t v) const { return variables_.at(v); }

  std::uint32_t var_id(const std::string& name) const {
    auto it = var_index_.find(name);
    require(it != var_index_.end(), Errc::invalid_parameter, "unknown variable: " + name);
    return it->second;
  }

 private:
  std::vector<std::string> variables_;
  std::map<std::string, std::uint32_t> var_index_;
  AlphabetPtr terminals_;
  std::uint32_t start_ = 0;
  std::vector<Production> productions_;
};

// Every production is a terminal followed by zero or more variables, and
// there is no lambda-production.
inline bool is_gnf(const Cfg& g) {
  for (const auto& p : g.productions()) {
    if (p.body.empty()) return false;
    if (p.body.front().is_var) return false;
    for (std::size_t i = 1; i < p.body.size(); ++i)
      if (!p.body[i].is_var) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bounded-length derivation (oracle plumbing)

namespace detail {

inline constexpr std::size_t kInfYield = static_cast<std::size_t>(-1) / 4;

// Shortest terminal yield per variable; kInfYield marks non-generating ones.
inline std::vector<std::size_t> min_yields(const Cfg& g) {
  std::vector<std::size_t> yield(g.variables().size(), kInfYield);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : g.productions()) {
      std::size_t len = 0;
      for (const auto& s : p.body) {
        std::size_t part = s.is_var ? yield[s.idx] : 1;
        len = (part >= kInfYield || len >= kInfYield) ? kInfYield : len + part;
      }
      if (len < yield[p.head]) {
        yield[p.head] = len;
        changed = true;
      }
    }
  }
  return yield;
}

inline std::string form_key(const std::vector<GSym>& form) {
  std::string k;
  k.reserve(form.size() * 5 + 1);
  for (const auto& s : form) {
    k.push_back(s.is_var ? 'V' : 'T');
    for (int i = 0; i < 4; ++i) k.push_back(static_cast<char>((s.idx >> (8 * i)) & 0xff));
  }
  return k;
}

}  // namespace detail

// Exactly L(g) intersected with the strings of length <= max_len, via
// breadth-first leftmost derivation. Sentential forms are pruned as soon as
// their minimal terminal yield exceeds max_len.
inline std::set<Str> generate_upto(const Cfg& g, std::size_t max_len,
                                   std::size_t budget = kDefaultDerivationBudget) {
  auto yields = detail::min_yields(g);
  auto lower_bound = [&](const std::vector<GSym>& form) {
    std::size_t len = 0;
    for (const auto& s : form) {
      std::size_t part = s.is_var ? yields[s.idx] : 1;
      len = (part >= detail::kInfYield || len >= detail::kInfYield) ? detail::kInfYield
                                                                    : len + part;
    }
    return len;
  };

  std::set<Str> out;
  std::deque<std::vector<GSym>> queue;
  std::unordered_set<std::string> seen;
  std::vector<GSym> start_form{GSym{true, g.start()}};
  if (lower_bound(start_form) <= max_len) {
    seen.insert(detail::form_key(start_form));
    queue.push_back(std::move(start_form));
  }

  std::size_t processed = 0;
  while (!queue.empty()) {
    require(++processed <= budget, Errc::budget_exceeded,
            "derivation budget exhausted after " + std::to_string(budget) + " forms");
    std::vector<GSym> form = std::move(queue.front());
    queue.pop_front();

    std::size_t var_pos = form.size();
    for (std::size_t i = 0; i < form.size(); ++i)
      if (form[i].is_var) {
        var_pos = i;
        break;
      }
    if (var_pos == form.size()) {
      std::vector<SymbolId> ids;
      ids.reserve(form.size());
      for (const auto& s : form) ids.push_back(s.idx);
      out.insert(Str(g.terminals(), std::move(ids)));
      continue;
    }
    for (const auto& p : g.productions()) {
      if (p.head != form[var_pos].idx) continue;
      std::vector<GSym> next;
      next.reserve(form.size() + p.body.size());
      next.insert(next.end(), form.begin(), form.begin() + var_pos);
      next.insert(next.end(), p.body.begin(), p.body.end());
      next.insert(next.end(), form.begin() + var_pos + 1, form.end());
      if (lower_bound(next) > max_len) continue;
      if (seen.insert(detail::form_key(next)).second) queue.push_back(std::move(next));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Greibach normal form pipeline

namespace detail {

struct GrammarBuilder {
  std::vector<std::string> variables;
  std::map<std::string, std::uint32_t> index;
  AlphabetPtr terminals;
  std::uint32_t start = 0;
  std::vector<Production> productions;

  explicit GrammarBuilder(const Cfg& g)
      : variables(g.variables()), terminals(g.terminals()), start(g.start()),
        productions(g.productions()) {
    for (std::size_t i = 0; i < variables.size(); ++i)
      index.emplace(variables[i], static_cast<std::uint32_t>(i));
  }

  std::uint32_t fresh_var(std::string base) {
    while (index.count(base) || terminals->find(base)) base += '\'';
    auto id = static_cast<std::uint32_t>(variables.size());
    variables.push_back(base);
    index.emplace(std::move(base), id);
    return id;
  }

  Cfg finish() const {
    return Cfg(variables, terminals, variables.at(start), productions);
  }

  // Drops non-generating and unreachable variables (keeping the original
  // order) and every production touching them.
  void remove_useless() {
    std::vector<bool> generating(variables.size(), false);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& p : productions) {
        if (generating[p.head]) continue;
        bool ok = true;
        for (const auto& s : p.body)
          if (s.is_var && !generating[s.idx]) ok = false;
        if (ok) {
          generating[p.head] = true;
          changed = true;
        }
      }
    }
    require(generating[start], Errc::empty_language, "start symbol generates nothing");

    std::vector<Production> kept;
    for (const auto& p : productions) {
      bool ok = generating[p.head];
      for (const auto& s : p.body)
        if (s.is_var && !generating[s.idx]) ok = false;
      if (ok) kept.push_back(p);
    }
    productions = std::move(kept);

    std::vector<bool> reachable(variables.size(), false);
    reachable[start] = true;
    changed = true;
    while (changed) {
      changed = false;
      for (const auto& p : productions) {
        if (!reachable[p.head]) continue;
        for (const auto& s : p.body)
          if (s.is_var && !reachable[s.idx]) {
            reachable[s.idx] = true;
            changed = true;
          }
      }
    }
    std::vector<Production> reached;
    for (const auto& p : productions)
      if (reachable[p.head]) reached.push_back(p);
    productions = std::move(reached);

    compact(reachable);
  }

  void compact(const std::vector<bool>& keep) {
    std::vector<std::uint32_t> remap(variables.size(), 0);
    std::vector<std::string> new_vars;
    std::map<std::string, std::uint32_t> new_index;
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (!keep[i]) continue;
      remap[i] = static_cast<std::uint32_t>(new_vars.size());
      new_index.emplace(variables[i], remap[i]);
      new_vars.push_back(variables[i]);
    }
    for (auto& p : productions) {
      p.head = remap[p.head];
      for (auto& s : p.body)
        if (s.is_var) s.idx = remap[s.idx];
    }
    start = remap[start];
    variables = std::move(new_vars);
    index = std::move(new_index);
  }

  void eliminate_lambda() {
    std::vector<bool> nullable(variables.size(), false);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& p : productions) {
        if (nullable[p.head]) continue;
        bool all = true;
        for (const auto& s : p.body)
          if (!s.is_var || !nullable[s.idx]) all = false;
        if (all) {
          nullable[p.head] = true;
          changed = true;
        }
      }
    }
    require(!nullable[start], Errc::empty_string_in_language,
            "the language contains the empty string");

    std::set<Production> expanded;
    for (const auto& p : productions) {
      std::vector<std::size_t> optional_positions;
      for (std::size_t i = 0; i < p.body.size(); ++i)
        if (p.body[i].is_var && nullable[p.body[i].idx]) optional_positions.push_back(i);
      std::size_t subsets = std::size_t{1} << optional_positions.size();
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        Production q{p.head, {}};
        std::size_t opt = 0;
        for (std::size_t i = 0; i < p.body.size(); ++i) {
          if (opt < optional_positions.size() && optional_positions[opt] == i) {
            if (mask & (std::size_t{1} << opt)) q.body.push_back(p.body[i]);
            ++opt;
          } else {
            q.body.push_back(p.body[i]);
          }
        }
        if (!q.body.empty()) expanded.insert(std::move(q));
      }
    }
    productions.assign(expanded.begin(), expanded.end());
  }

  void eliminate_units() {
    std::size_t n = variables.size();
    std::vector<std::vector<bool>> unit(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) unit[v][v] = true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& p : productions) {
        if (p.body.size() != 1 || !p.body[0].is_var) continue;
        for (std::size_t v = 0; v < n; ++v)
          if (unit[v][p.head] && !unit[v][p.body[0].idx]) {
            unit[v][p.body[0].idx] = true;
            changed = true;
          }
      }
    }
    std::set<Production> out;
    for (std::size_t v = 0; v < n; ++v)
      for (const auto& p : productions) {
        if (p.body.size() == 1 && p.body[0].is_var) continue;
        if (unit[v][p.head])
          out.insert(Production{static_cast<std::uint32_t>(v), p.body});
      }
    productions.assign(out.begin(), out.end());
  }

  // Paull's algorithm over the serialized variable order. Fresh tail
  // variables take the recursive variable's name with a prime appended.
  void eliminate_left_recursion() {
    std::size_t original_count = variables.size();
    for (std::size_t i = 0; i < original_count; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<Production> next;
        for (const auto& p : productions) {
          if (p.head != i || p.body.empty() || !p.body.front().is_var ||
              p.body.front().idx != j) {
            next.push_back(p);
            continue;
          }
          for (const auto& q : productions) {
            if (q.head != j) continue;
            Production r{p.head, q.body};
            r.body.insert(r.body.end(), p.body.begin() + 1, p.body.end());
            next.push_back(std::move(r));
          }
        }
        sort_unique(next);
        productions = std::move(next);
      }
      // immediate left recursion of variable i
      std::vector<Production> recursive, other;
      for (const auto& p : productions) {
        if (p.head == i && !p.body.empty() && p.body.front().is_var &&
            p.body.front().idx == i)
          recursive.push_back(p);
        else if (p.head == i)
          other.push_back(p);
      }
      if (recursive.empty()) continue;
      require(!other.empty(), Errc::empty_language,
              "variable " + variables[i] + " is purely left recursive");
      std::uint32_t tail = fresh_var(variables[i] + "'");
      std::vector<Production> next;
      for (const auto& p : productions)
        if (p.head != i) next.push_back(p);
      for (const auto& p : other) {
        next.push_back(p);
        Production with_tail = p;
        with_tail.body.push_back(GSym{true, tail});
        next.push_back(std::move(with_tail));
      }
      for (const auto& p : recursive) {
        Production alpha{tail, {p.body.begin() + 1, p.body.end()}};
        Production alpha_tail = alpha;
        alpha_tail.body.push_back(GSym{true, tail});
        next.push_back(std::move(alpha));
        next.push_back(std::move(alpha_tail));
      }
      sort_unique(next);
      productions = std::move(next);
    }
  }

  bool terminal_leading(std::uint32_t v) const {
    for (const auto& p : productions)
      if (p.head == v && (p.body.empty() || p.body.front().is_var)) return false;
    return true;
  }

  // Replaces the leading variable of every v-production by that variable's
  // (terminal-leading) bodies.
  void substitute_leading(std::uint32_t v) {
    std::vector<Production> next;
    for (const auto& p : productions) {
      if (p.head != v || p.body.empty() || !p.body.front().is_var) {
        next.push_back(p);
        continue;
      }
      std::uint32_t lead = p.body.front().idx;
      for (const auto& q : productions) {
        if (q.head != lead) continue;
        Production r{p.head, q.body};
        r.body.insert(r.body.end(), p.body.begin() + 1, p.body.end());
        next.push_back(std::move(r));
      }
    }
    sort_unique(next);
    productions = std::move(next);
  }

  void back_substitute(std::size_t original_count) {
    for (std::size_t i = original_count; i-- > 0;) substitute_leading(static_cast<std::uint32_t>(i));
    // Tail variables were introduced left to right; by now every earlier
    // variable is terminal-leading, so one or two passes settle each.
    for (std::size_t v = original_count; v < variables.size(); ++v) {
      while (!terminal_leading(static_cast<std::uint32_t>(v)))
        substitute_leading(static_cast<std::uint32_t>(v));
    }
  }

  // GNF wants variables after the leading terminal; promote every non-leading
  // terminal to a fresh single-production variable.
  void promote_inner_terminals() {
    std::map<SymbolId, std::uint32_t> promoted;
    std::vector<Production> extra;
    for (auto& p : productions) {
      for (std::size_t i = 1; i < p.body.size(); ++i) {
        if (p.body[i].is_var) continue;
        SymbolId t = p.body[i].idx;
        auto it = promoted.find(t);
        if (it == promoted.end()) {
          std::uint32_t v = fresh_var("T_" + terminals->token(t));
          extra.push_back(Production{v, {GSym{false, t}}});
          it = promoted.emplace(t, v).first;
        }
        p.body[i] = GSym{true, it->second};
      }
    }
    productions.insert(productions.end(), extra.begin(), extra.end());
    sort_unique(productions);
  }

  static void sort_unique(std::vector<Production>& ps) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  }
};

}  // namespace detail

// Language-preserving conversion to Greibach normal form. The output grammar
// is canonical only up to variable naming; the contract is GNF shape plus
// bounded-length language equality.
inline Cfg to_greibach(const Cfg& g) {
  detail::GrammarBuilder b(g);
  b.remove_useless();
  b.eliminate_lambda();
  b.eliminate_units();
  std::size_t original_count = b.variables.size();
  b.eliminate_left_recursion();
  b.back_substitute(original_count);
  b.promote_inner_terminals();
  b.remove_useless();
  Cfg out = b.finish();
  require(is_gnf(out), Errc::not_gnf, "normal form pipeline left a non-GNF production");
  return out;
}

// ---------------------------------------------------------------------------
// Grammar-to-NPDA compiler

// Three-state machine over the endmarked tape: the initial move plants the
// start variable on the stack, each input symbol replaces the top variable
// by a production tail, and the final move checks that only the stack start
// remains.
inline Npda cfg_to_npda(const Cfg& g) {
  require(is_gnf(g), Errc::not_gnf, "cfg_to_npda needs a Greibach normal form grammar");
  std::string z = "z";
  while (std::find(g.variables().begin(), g.variables().end(), z) != g.variables().end())
    z += '\'';
  std::vector<std::string> stack_tokens = g.variables();
  stack_tokens.push_back(z);
  auto stack = make_alphabet(stack_tokens);
  SymbolId zid = stack->id(z);

  std::vector<NpdaTransition> ts;
  ts.push_back(NpdaTransition{0, 0, 0, 0, {}});  // placeholders fixed below
  auto& init = ts.back();
  init.from = 0;
  init.to = 1;
  init.top = zid;
  init.push = {static_cast<SymbolId>(g.start()), zid};
  for (const auto& p : g.productions()) {
    NpdaTransition t;
    t.from = 1;
    t.to = 1;
    t.top = static_cast<SymbolId>(p.head);
    t.input = p.body.front().idx;  // terminal ids coincide with tape ids
    for (std::size_t i = 1; i < p.body.size(); ++i)
      t.push.push_back(static_cast<SymbolId>(p.body[i].idx));
    ts.push_back(std::move(t));
  }
  NpdaTransition fin;
  fin.from = 1;
  fin.to = 2;
  fin.top = zid;
  fin.push = {zid};
  ts.push_back(fin);

  // Input ids for CENT/DOLLAR live past the plain alphabet.
  SymbolId cent = static_cast<SymbolId>(g.terminals()->size());
  SymbolId dollar = cent + 1;
  ts.front().input = cent;
  ts.back().input = dollar;

  return Npda({"q0", "q1", "qf"}, g.terminals(), stack, "q0", z, {"qf"}, ts);
}

// ---------------------------------------------------------------------------
// Stack-growth bounding

namespace detail {

inline std::string group_token(const Npda& m, const std::vector<SymbolId>& group) {
  std::string out = "(";
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (i) out += ',';
    out += m.stack_alphabet()->token(group[i]);
  }
  out += ')';
  return out;
}

}  // namespace detail

// Rewrites a gnf_normal machine so that no transition pushes more than two
// symbols, by grouping consecutive stack symbols into compound symbols. A
// push w1..wp over the top group (v1..vs) becomes the two-group push
// (w1..w_{p-1}) (w_p v2..vs); the stack start stays alone in its own group.
// Machines already pushing at most two symbols are returned unchanged.
inline Npda bound_stack_growth(const Npda& m) {
  require(m.gnf_normal(), Errc::not_gnf_normal,
          "stack-growth bounding needs the three-state normal form");
  std::size_t max_push = 0;
  for (const auto& t : m.transitions()) max_push = std::max(max_push, t.push.size());
  if (max_push <= 2) return m;

  const std::uint32_t q1 = m.work_state();
  SymbolId z = m.stack_start();
  SymbolId start_var = 0;
  for (const auto& t : m.transitions())
    if (t.input == m.cent()) start_var = t.push.front();

  using Group = std::vector<SymbolId>;
  std::vector<Group> groups;
  std::map<Group, std::size_t> group_index;
  auto intern = [&](const Group& g) {
    auto it = group_index.find(g);
    if (it != group_index.end()) return it->second;
    std::size_t id = groups.size();
    groups.push_back(g);
    group_index.emplace(g, id);
    return id;
  };
  std::size_t gz = intern({z});
  std::size_t gstart = intern({start_var});

  struct GroupedTransition {
    SymbolId input;
    std::size_t top;
    std::vector<std::size_t> push;
  };
  std::vector<GroupedTransition> grouped;

  // Worklist closure over groups reachable as stack tops.
  std::deque<std::size_t> todo{gstart};
  std::set<std::size_t> expanded{gz};
  while (!todo.empty()) {
    std::size_t gi = todo.front();
    todo.pop_front();
    if (!expanded.insert(gi).second) continue;
    Group group = groups[gi];
    SymbolId v1 = group.front();
    Group rest(group.begin() + 1, group.end());
    for (std::size_t ti = 0; ti < m.transitions().size(); ++ti) {
      const NpdaTransition& t = m.transitions()[ti];
      if (t.from != q1 || t.top != v1 || t.input == m.cent() || t.input == m.dollar())
        continue;
      GroupedTransition gt;
      gt.input = t.input;
      gt.top = gi;
      if (t.push.empty()) {
        if (!rest.empty()) gt.push.push_back(intern(rest));
      } else if (t.push.size() == 1) {
        Group merged{t.push[0]};
        merged.insert(merged.end(), rest.begin(), rest.end());
        gt.push.push_back(intern(merged));
      } else {
        Group head(t.push.begin(), t.push.end() - 1);
        Group tail{t.push.back()};
        tail.insert(tail.end(), rest.begin(), rest.end());
        gt.push.push_back(intern(head));
        gt.push.push_back(intern(tail));
      }
      for (std::size_t gp : gt.push)
        if (!expanded.count(gp)) todo.push_back(gp);
      grouped.push_back(std::move(gt));
    }
  }

  std::vector<std::string> stack_tokens;
  stack_tokens.reserve(groups.size());
  for (const auto& g : groups) stack_tokens.push_back(detail::group_token(m, g));
  auto stack = make_alphabet(stack_tokens);

  std::vector<std::string> states{m.state_name(m.start()), m.state_name(q1)};
  std::uint32_t qf_old = 0;
  for (std::uint32_t q = 0; q < m.states().size(); ++q)
    if (m.is_final(q)) qf_old = q;
  states.push_back(m.state_name(qf_old));

  SymbolId cent = static_cast<SymbolId>(m.input_alphabet()->size());
  SymbolId dollar = cent + 1;
  std::vector<NpdaTransition> ts;
  ts.push_back(NpdaTransition{0, cent, static_cast<SymbolId>(gz), 1,
                              {static_cast<SymbolId>(gstart), static_cast<SymbolId>(gz)}});
  for (const auto& gt : grouped) {
    NpdaTransition t;
    t.from = 1;
    t.to = 1;
    t.input = gt.input;
    t.top = static_cast<SymbolId>(gt.top);
    for (std::size_t gp : gt.push) t.push.push_back(static_cast<SymbolId>(gp));
    ts.push_back(std::move(t));
  }
  ts.push_back(NpdaTransition{1, dollar, static_cast<SymbolId>(gz), 2,
                              {static_cast<SymbolId>(gz)}});

  return Npda(states, m.input_alphabet(), stack, states[0], stack_tokens[gz], {states[2]},
              ts);
}

// ---------------------------------------------------------------------------
// Grammar file format: "start: S" then one line per head,
// "S -> a S B | a B", tokens space-separated, EPS for a lambda body.

inline Cfg parse_cfg(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string start;
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> raw;
  while (std::getline(in, line)) {
    auto toks = detail::split_tokens(line);
    if (toks.empty()) continue;
    if (toks[0] == "start:") {
      require(toks.size() == 2, Errc::parse_error, "start: expects one token");
      start = toks[1];
      continue;
    }
    require(toks.size() >= 3 && toks[1] == "->", Errc::parse_error,
            "production must look like: S -> a S B | a B");
    std::vector<std::vector<std::string>> alts(1);
    for (std::size_t i = 2; i < toks.size(); ++i) {
      if (toks[i] == "|") {
        alts.emplace_back();
      } else {
        alts.back().push_back(toks[i]);
      }
    }
    for (const auto& alt : alts)
      require(!alt.empty(), Errc::parse_error, "empty alternative (use EPS)");
    raw.emplace_back(toks[0], std::move(alts));
  }
  require(!start.empty(), Errc::parse_error, "missing start: line");

  std::vector<std::string> variables;
  std::set<std::string> var_set;
  for (const auto& [head, alts] : raw)
    if (var_set.insert(head).second) variables.push_back(head);
  require(var_set.count(start), Errc::parse_error, "start symbol has no productions");

  std::vector<std::string> terminal_tokens;
  std::set<std::string> term_set;
  for (const auto& [head, alts] : raw)
    for (const auto& alt : alts)
      for (const auto& tok : alt) {
        if (tok == kEpsilonToken || var_set.count(tok)) continue;
        if (term_set.insert(tok).second) terminal_tokens.push_back(tok);
      }
  require(!terminal_tokens.empty(), Errc::parse_error, "grammar has no terminals");
  auto terminals = make_alphabet(terminal_tokens);

  std::map<std::string, std::uint32_t> var_ids;
  for (std::size_t i = 0; i < variables.size(); ++i)
    var_ids.emplace(variables[i], static_cast<std::uint32_t>(i));

  std::vector<Production> productions;
  for (const auto& [head, alts] : raw)
    for (const auto& alt : alts) {
      Production p{var_ids.at(head), {}};
      if (alt.size() == 1 && alt[0] == kEpsilonToken) {
        productions.push_back(std::move(p));
        continue;
      }
      for (const auto& tok : alt) {
        require(tok != kEpsilonToken, Errc::parse_error, "EPS must stand alone");
        auto it = var_ids.find(tok);
        if (it != var_ids.end())
          p.body.push_back(GSym{true, it->second});
        else
          p.body.push_back(GSym{false, terminals->id(tok)});
      }
      productions.push_back(std::move(p));
    }
  return Cfg(variables, terminals, start, productions);
}

inline std::string serialize_cfg(const Cfg& g) {
  std::ostringstream out;
  out << "start: " << g.var_name(g.start()) << '\n';
  for (std::uint32_t v = 0; v < g.variables().size(); ++v) {
    std::vector<std::string> alts;
    for (const auto& p : g.productions()) {
      if (p.head != v) continue;
      if (p.body.empty()) {
        alts.emplace_back(kEpsilonToken);
        continue;
      }
      std::string alt;
      for (std::size_t i = 0; i < p.body.size(); ++i) {
        if (i) alt += ' ';
        alt += p.body[i].is_var ? g.var_name(p.body[i].idx)
                                : g.terminals()->token(p.body[i].idx);
      }
      alts.push_back(std::move(alt));
    }
    if (alts.empty()) continue;
    out << g.var_name(v) << " ->";
    for (std::size_t i = 0; i < alts.size(); ++i) {
      if (i) out << " |";
      out << ' ' << alts[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace swaplab
