// Experiment harness for the swapping-lemma laboratory: grammar
// normalization, machine compilation, simulation, stack profiles, and the
// regular/context-free swap-witness finders, all emitting reproducible
// reports.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swaplab/automata.hpp"
#include "swaplab/core.hpp"
#include "swaplab/fixtures.hpp"
#include "swaplab/grammar.hpp"
#include "swaplab/report.hpp"
#include "swaplab/swap_cfl.hpp"
#include "swaplab/swap_regular.hpp"

using namespace swaplab;

namespace {

struct Options {
  bool json = false;
  std::size_t parallel = 1;
  std::size_t budget = kDefaultPathLimit;  // SWAPLAB_BUDGET overrides
  bool budget_from_env = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::parse_error, "cannot write file: " + path);
  out << content;
}

// Inputs are whitespace-separated tokens, or one symbol per character when
// no whitespace is present.
Str parse_input(const AlphabetPtr& alphabet, const std::string& text) {
  if (text.find_first_of(" \t") != std::string::npos)
    return Str::parse(alphabet, text);
  return Str::from_chars(alphabet, text);
}

std::string machine_type(const std::string& text) {
  auto mt = detail::scan_machine_text(text);
  return detail::single_header(mt, "type");
}

void emit(const Report& report, const Options& opt,
          std::chrono::steady_clock::time_point started) {
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  Report full = report;
  full.add("timing-ms", static_cast<std::uint64_t>(elapsed));
  if (opt.json)
    std::cout << full.json().dump(2) << '\n';
  else
    std::cout << full.text();
}

int cmd_gnf(const std::string& grammar_path, const std::string& out_path) {
  Cfg g = parse_cfg(read_file(grammar_path));
  write_output(out_path, serialize_cfg(to_greibach(g)));
  return 0;
}

int cmd_build_pda(const std::string& grammar_path, const std::string& out_path,
                  bool bound) {
  Cfg g = parse_cfg(read_file(grammar_path));
  require(is_gnf(g), Errc::not_gnf, "build-pda expects a normal form grammar (run gnf first)");
  Npda m = cfg_to_npda(g);
  if (bound) m = bound_stack_growth(m);
  write_output(out_path, serialize_npda(m));
  return 0;
}

int cmd_run(const std::string& machine_path, const std::string& input,
            bool show_stack, const Options& opt) {
  auto started = std::chrono::steady_clock::now();
  std::string text = read_file(machine_path);
  Report report;
  report.add("report", "run");
  report.add("machine", machine_path);
  report.add("machine-hash", content_hash(text));
  int exit_code = 0;
  if (machine_type(text) == "dfa") {
    Dfa d = parse_dfa(text);
    Str x = parse_input(d.input_alphabet(), input);
    auto run = dfa_run(d, x);
    report.add("input", x.text());
    report.add("result", run.accepted ? "accepted" : "rejected");
    auto& trace = report.section("trace");
    for (std::size_t i = 0; i < run.trace.size(); ++i)
      Report::add_to(trace, std::to_string(i), d.state_name(run.trace[i]));
    exit_code = run.accepted ? 0 : 1;
  } else {
    Npda m = parse_npda(text);
    Str x = parse_input(m.input_alphabet(), input);
    auto path = npda_accepts(m, x);
    report.add("input", x.text());
    report.add("result", path ? "accepted" : "rejected");
    if (path && show_stack) {
      auto& stack = report.section("stack");
      for (const auto& c : path->configs)
        Report::add_to(stack, std::to_string(c.boundary),
                       m.state_name(c.state) + " | " + c.stack.text());
    }
    exit_code = path ? 0 : 1;
  }
  emit(report, opt, started);
  return exit_code;
}

int cmd_profile(const std::string& machine_path, const std::string& input,
                const std::string& format) {
  require(format == "csv", Errc::invalid_parameter, "profile emits csv only");
  Npda m = parse_npda(read_file(machine_path));
  Str x = parse_input(m.input_alphabet(), input);
  auto path = npda_accepts(m, x);
  if (!path) {
    std::cerr << "profile: input rejected: " << x.text() << '\n';
    return 1;
  }
  std::cout << "boundary,height,stack\n";
  for (const auto& c : path->configs)
    std::cout << c.boundary << ',' << c.stack.size() << ",\"" << c.stack.text()
              << "\"\n";
  return 0;
}

void describe_sample(Report& report, const std::string& path, const SampleSet& s) {
  auto& params = report.section("sample");
  Report::add_to(params, "file", path);
  Report::add_to(params, "size", static_cast<std::uint64_t>(s.size()));
  Report::add_to(params, "length", static_cast<std::uint64_t>(s.n()));
}

int cmd_swap_reg(const std::string& dfa_path, const std::string& samples_path,
                 std::optional<std::size_t> cut, const std::string& blocks_text,
                 const Options& opt) {
  auto started = std::chrono::steady_clock::now();
  std::string text = read_file(dfa_path);
  Dfa d = parse_dfa(text);
  SampleSet s = parse_samples(read_file(samples_path));

  Report report;
  report.add("report", "swap-reg");
  report.add("subject", dfa_path);
  report.add("subject-hash", content_hash(text));
  describe_sample(report, samples_path, s);

  int exit_code = 0;
  if (!blocks_text.empty()) {
    std::vector<std::size_t> blocks;
    std::stringstream ss(blocks_text);
    for (std::string part; std::getline(ss, part, ',');) {
      try {
        blocks.push_back(std::stoul(part));
      } catch (const std::exception&) {
        fail(Errc::parse_error, "bad block length: " + part);
      }
    }
    auto& params = report.section("parameters");
    Report::add_to(params, "blocks", blocks_text);
    Report::add_to(params, "swapping-constant",
                   std::to_string(swapping_constant(d, blocks.size())));
    auto w = find_swap_multi(d, s, blocks);
    if (w) {
      report.add("result", "witness");
      auto& sec = report.section("witness");
      Report::add_to(sec, "x", w->x.text());
      Report::add_to(sec, "y", w->y.text());
      std::string states;
      for (std::size_t i = 0; i < w->state_tuple.size(); ++i) {
        if (i) states += ' ';
        states += d.state_name(w->state_tuple[i]);
      }
      Report::add_to(sec, "state-tuple", states);
      auto& ver = report.section("verification");
      for (const auto& pair : w->swapped) {
        auto& block = Report::section_of(ver, "block-" + std::to_string(pair.block));
        Report::add_to(block, "x-variant", pair.x_variant.text());
        Report::add_to(block, "y-variant", pair.y_variant.text());
        Report::add_to(block, "accepted", "both");
      }
    } else {
      report.add("result", "no-collision");
      exit_code = 1;
    }
  } else {
    require(cut.has_value(), Errc::invalid_parameter, "need --cut or --blocks");
    auto& params = report.section("parameters");
    Report::add_to(params, "cut", static_cast<std::uint64_t>(*cut));
    Report::add_to(params, "swapping-constant", std::to_string(swapping_constant(d)));
    auto w = find_swap(d, s, *cut);
    if (w) {
      report.add("result", "witness");
      auto& sec = report.section("witness");
      Report::add_to(sec, "x", w->x.text());
      Report::add_to(sec, "y", w->y.text());
      Report::add_to(sec, "collision-state", d.state_name(w->collision_state));
      Report::add_to(sec, "swapped-xy", w->swapped_xy.text());
      Report::add_to(sec, "swapped-yx", w->swapped_yx.text());
      auto& ver = report.section("verification");
      Report::add_to(ver, "swapped-xy", "accepted");
      Report::add_to(ver, "swapped-yx", "accepted");
    } else {
      report.add("result", "no-collision");
      exit_code = 1;
    }
  }
  emit(report, opt, started);
  return exit_code;
}

int cmd_swap_cfl(const std::string& pda_path, const std::string& samples_path,
                 std::size_t j0, std::size_t k, std::size_t path_budget,
                 const Options& opt) {
  auto started = std::chrono::steady_clock::now();
  std::string text = read_file(pda_path);
  Npda m = parse_npda(text);
  SampleSet s = parse_samples(read_file(samples_path));

  Report report;
  report.add("report", "swap-cfl");
  report.add("subject", pda_path);
  report.add("subject-hash", content_hash(text));
  describe_sample(report, samples_path, s);
  auto& params = report.section("parameters");
  Report::add_to(params, "j0", static_cast<std::uint64_t>(j0));
  Report::add_to(params, "k", static_cast<std::uint64_t>(k));
  Report::add_to(params, "path-budget", static_cast<std::uint64_t>(path_budget));
  auto ds = delta_size(m, s.n(), j0, k);
  Report::add_to(params, "delta-exact", ds.exact);
  Report::add_to(params, "delta-coarse-bound", ds.coarse_bound);

  int exit_code = 0;
  try {
    auto w = find_cfl_swap(m, s, j0, k, path_budget, opt.parallel);
    if (w) {
      report.add("result", "witness");
      auto& sec = report.section("witness");
      Report::add_to(sec, "x", w->x.text());
      Report::add_to(sec, "y", w->y.text());
      Report::add_to(sec, "i", static_cast<std::uint64_t>(w->index.i));
      Report::add_to(sec, "j", static_cast<std::uint64_t>(w->index.j));
      Report::add_to(sec, "v", m.stack_alphabet()->token(w->index.v));
      Report::add_to(sec, "w", m.stack_alphabet()->token(w->index.w));
      Report::add_to(sec, "x-mid", w->x_mid.text());
      Report::add_to(sec, "y-mid", w->y_mid.text());
      Report::add_to(sec, "swapped-x", w->swapped_x.text());
      Report::add_to(sec, "swapped-y", w->swapped_y.text());
      Report::add_to(sec, "middles-differ-in-counts",
                     w->middles_differ_in_counts ? "true" : "false");
      auto& ver = report.section("verification");
      Report::add_to(ver, "swapped-x", "accepted");
      Report::add_to(ver, "swapped-y", "accepted");
    } else {
      report.add("result", "no-collision");
      exit_code = 1;
    }
  } catch (const Error& e) {
    if (e.code() != Errc::no_assignment && e.code() != Errc::path_budget_exceeded)
      throw;
    report.add("result",
               e.code() == Errc::no_assignment ? "no-assignment" : "path-budget-exceeded");
    report.add("detail", e.what());
    exit_code = 1;
  }
  emit(report, opt, started);
  return exit_code;
}

int cmd_fixtures(const std::string& name, std::size_t n, const Options& opt) {
  if (name == "equal") {
    std::cout << serialize_samples(equal_samples(n));
  } else if (name == "gt") {
    std::cout << serialize_samples(gt_samples(n));
  } else if (name == "equal6") {
    std::cout << serialize_samples(equal6_samples(n));
  } else if (name == "pal") {
    std::cout << serialize_samples(pal_samples(n));
  } else if (name == "dup-params") {
    auto started = std::chrono::steady_clock::now();
    Report report;
    report.add("report", "dup-params");
    auto describe = [](Report::Node& sec, const DupParams& p) {
      Report::add_to(sec, "n", static_cast<std::uint64_t>(p.n));
      Report::add_to(sec, "j0", static_cast<std::uint64_t>(p.j0));
      Report::add_to(sec, "k", static_cast<std::uint64_t>(p.k));
      Report::add_to(sec, "sample-bound-ok", p.sample_bound_ok ? "true" : "false");
      Report::add_to(sec, "lemma-bound-ok", p.lemma_bound_ok ? "true" : "false");
      Report::add_to(sec, "premise-2j0-le-k", p.premise_ok ? "true" : "false");
    };
    report.add("m", static_cast<std::uint64_t>(n));
    describe(report.section("minimal"), dup_params(n));
    describe(report.section("minimal-with-premise"), dup_params_strict(n));
    emit(report, opt, started);
  } else {
    fail(Errc::unknown_fixture, "fixture sample set: " + name);
  }
  return 0;
}

int cmd_advice(const std::string& name, std::size_t n) {
  std::cout << advice_function(name).generate(n).text() << '\n';
  return 0;
}

int cmd_verify(const std::string& grammar_path, const std::string& machine_path,
               std::size_t max_len, const Options& opt) {
  auto started = std::chrono::steady_clock::now();
  Cfg g = parse_cfg(read_file(grammar_path));
  std::string text = read_file(machine_path);
  Npda m = parse_npda(text);
  std::size_t node_budget = opt.budget_from_env ? opt.budget : kDefaultNodeBudget;
  auto from_grammar = generate_upto(g, max_len);
  auto from_machine = language_upto(m, max_len, std::max(max_len, kDefaultMaxLen),
                                    node_budget);

  Report report;
  report.add("report", "verify");
  report.add("grammar", grammar_path);
  report.add("machine", machine_path);
  report.add("machine-hash", content_hash(text));
  report.add("maxlen", static_cast<std::uint64_t>(max_len));

  int exit_code = 0;
  if (from_grammar == from_machine) {
    report.add("result", "equal up to " + std::to_string(max_len));
    report.add("words", static_cast<std::uint64_t>(from_grammar.size()));
  } else {
    report.add("result", "mismatch");
    // first counterexample in shortlex order, from either side
    std::optional<Str> best;
    std::string side;
    for (const Str& w : from_grammar)
      if (!from_machine.count(w)) {
        best = w;
        side = "grammar-only";
        break;
      }
    for (const Str& w : from_machine) {
      if (best && !(w < *best)) break;
      if (!from_grammar.count(w)) {
        best = w;
        side = "machine-only";
        break;
      }
    }
    report.add("counterexample", best->empty() ? "EPS" : best->text());
    report.add("side", side);
    exit_code = 1;
  }
  emit(report, opt, started);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swaplab: executable swapping lemmas for regular and context-free languages"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "mirror reports as JSON");
  app.add_option("--parallel", opt.parallel, "worker threads for per-sample analysis")
      ->default_val(1);
  if (const char* env = std::getenv("SWAPLAB_BUDGET")) {
    try {
      opt.budget = std::stoull(env);
      opt.budget_from_env = true;
    } catch (const std::exception&) {
      std::cerr << "swaplab: ignoring malformed SWAPLAB_BUDGET\n";
    }
  }

  std::string grammar_path, machine_path, samples_path, out_path, input_text;
  std::string name, blocks_text, format = "csv";
  std::size_t n_param = 0, j0 = 2, k = 4, max_len = 8;
  std::size_t path_budget = opt.budget;
  bool bound = false, show_stack = false;
  std::optional<std::size_t> cut;

  auto* gnf = app.add_subcommand("gnf", "convert a grammar to Greibach normal form");
  gnf->add_option("--grammar", grammar_path, "grammar file")->required();
  gnf->add_option("--out", out_path, "output file (default stdout)");

  auto* build = app.add_subcommand("build-pda", "compile a GNF grammar into an npda");
  build->add_option("--grammar", grammar_path, "GNF grammar file")->required();
  build->add_option("--out", out_path, "output file (default stdout)");
  build->add_flag("--bound", bound, "bound stack growth to two-symbol pushes");

  auto* run = app.add_subcommand("run", "simulate a machine on one input");
  run->add_option("--machine", machine_path, "dfa or npda file")->required();
  run->add_option("--input", input_text, "input string")->required();
  run->add_flag("--show-stack", show_stack, "print per-boundary stack contents");

  auto* prof = app.add_subcommand("profile", "csv stack heights of the first accepting path");
  prof->add_option("--pda", machine_path, "npda file")->required();
  prof->add_option("--input", input_text, "input string")->required();
  prof->add_option("--format", format, "output format (csv)");

  auto* sreg = app.add_subcommand("swap-reg", "regular swap-witness finder");
  sreg->add_option("--dfa", machine_path, "dfa file")->required();
  sreg->add_option("--samples", samples_path, "sample file")->required();
  auto* cut_opt = sreg->add_option("--cut", cut, "single cut index");
  sreg->add_option("--blocks", blocks_text, "comma-separated block lengths")
      ->excludes(cut_opt);

  auto* scfl = app.add_subcommand("swap-cfl", "context-free swap-witness finder");
  scfl->add_option("--pda", machine_path, "npda file")->required();
  scfl->add_option("--samples", samples_path, "sample file")->required();
  scfl->add_option("--j0", j0, "minimal window width")->required();
  scfl->add_option("--k", k, "maximal window width")->required();
  scfl->add_option("--path-budget", path_budget, "accepting paths examined per string");

  auto* fix = app.add_subcommand("fixtures", "emit a fixture sample set");
  fix->add_option("--name", name, "equal | gt | equal6 | pal | dup-params")->required();
  fix->add_option("--n,--n-param", n_param, "length (gt: block count, dup-params: constant)")
      ->required();

  auto* adv = app.add_subcommand("advice", "emit an advice string");
  adv->add_option("--name", name, "l3eq | pal")->required();
  adv->add_option("--n", n_param, "length")->required();

  auto* ver = app.add_subcommand("verify", "bounded-language equality of grammar and machine");
  ver->add_option("--grammar", grammar_path, "grammar file")->required();
  ver->add_option("--machine", machine_path, "npda file")->required();
  ver->add_option("--maxlen", max_len, "length bound")->required();

  // global flags (--json, --parallel) remain usable after the subcommand name
  for (auto* sub : {gnf, build, run, prof, sreg, scfl, fix, adv, ver}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gnf->parsed()) return cmd_gnf(grammar_path, out_path);
    if (build->parsed()) return cmd_build_pda(grammar_path, out_path, bound);
    if (run->parsed()) return cmd_run(machine_path, input_text, show_stack, opt);
    if (prof->parsed()) return cmd_profile(machine_path, input_text, format);
    if (sreg->parsed())
      return cmd_swap_reg(machine_path, samples_path, cut, blocks_text, opt);
    if (scfl->parsed())
      return cmd_swap_cfl(machine_path, samples_path, j0, k, path_budget, opt);
    if (fix->parsed()) return cmd_fixtures(name, n_param, opt);
    if (adv->parsed()) return cmd_advice(name, n_param);
    if (ver->parsed()) return cmd_verify(grammar_path, machine_path, max_len, opt);
  } catch (const Error& e) {
    std::cerr << "swaplab: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "swaplab: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
