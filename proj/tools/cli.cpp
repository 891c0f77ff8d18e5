// Copyright 2026 The likepat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "likepat/automata.hpp"
#include "likepat/errors.hpp"
#include "likepat/expression.hpp"
#include "likepat/matcher.hpp"
#include "likepat/normalize.hpp"
#include "likepat/pattern.hpp"
#include "likepat/reductions.hpp"
#include "likepat/turing.hpp"

namespace likepat::cli {
namespace {

using Clock = std::chrono::steady_clock;

class UsageError : public Error {
 public:
  using Error::Error;
};

// Either an inline character list or a file with one symbol per line.
struct AlphabetSpec {
  std::string chars;
  std::string file;

  bool given() const { return !chars.empty() || !file.empty(); }

  Alphabet resolve() const {
    if (!chars.empty() && !file.empty()) {
      throw UsageError("--alphabet and --alphabet-file are mutually exclusive");
    }
    if (!file.empty()) return Alphabet::from_file(file);
    if (!chars.empty()) return Alphabet::from_chars(chars);
    throw UsageError("an alphabet is required (--alphabet or --alphabet-file)");
  }
};

struct Common {
  std::string escape;
  bool tokens = false;
  bool json = false;
  AlphabetSpec alphabet;
  std::size_t budget = kDefaultStateBudget;

  std::optional<char> escape_char() const {
    if (escape.empty()) return std::nullopt;
    if (escape.size() != 1) throw UsageError("--escape takes a single character");
    return escape[0];
  }
  SyntaxMode mode() const { return tokens ? SyntaxMode::kTokens : SyntaxMode::kChars; }
};

void add_escape(CLI::App* app, Common& c) {
  app->add_option("--escape", c.escape, "Escape character for literal % and _");
}
void add_tokens(CLI::App* app, Common& c) {
  app->add_flag("--tokens", c.tokens,
                "Whitespace-separated symbol names instead of one symbol per character");
}
void add_json(CLI::App* app, Common& c) {
  app->add_flag("--json", c.json, "Emit a single JSON report");
}
void add_alphabet(CLI::App* app, Common& c) {
  app->add_option("--alphabet", c.alphabet.chars, "Alphabet as a character list");
  app->add_option("--alphabet-file", c.alphabet.file, "Alphabet file, one symbol per line");
}
void add_budget(CLI::App* app, Common& c) {
  app->add_option("--budget", c.budget, "Search state budget")->check(CLI::PositiveNumber);
}

// An argument naming an existing file is replaced by the file's contents.
std::string read_expr_arg(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_in_alphabet(const Text& t, const Alphabet& sigma) {
  for (const auto& s : t) {
    if (!sigma.contains(s)) throw UsageError("symbol '" + s.token() + "' is not in the alphabet");
  }
}

void check_in_alphabet(const Pattern& p, const Alphabet& sigma) {
  for (const auto& t : p) {
    if (is_literal(t) && !sigma.contains(std::get<Symbol>(t))) {
      throw UsageError("literal '" + std::get<Symbol>(t).token() + "' is not in the alphabet");
    }
  }
}

void check_in_alphabet(const LikeExpression& e, const Alphabet& sigma) {
  for (const auto& p : distinct_atoms(e)) check_in_alphabet(p, sigma);
}

nlohmann::json text_json(const Text& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : t) arr.push_back(s.token());
  return arr;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Renders an expression, falling back to a backslash escape when needed.
std::pair<std::string, std::optional<char>> render_for_output(const LikeExpression& e,
                                                              std::optional<char> escape,
                                                              SyntaxMode mode) {
  try {
    return {render_expression(e, escape, mode), escape};
  } catch (const Error&) {
    if (escape) throw;
    return {render_expression(e, '\\', mode), '\\'};
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"likepat: SQL LIKE patterns, expressions and decision procedures", "likepat"};
  app.require_subcommand(1);

  Common c;

  // match
  std::string pattern_text, text_arg, algo = "greedy";
  auto* match = app.add_subcommand("match", "Match a pattern against an entire text");
  match->add_option("--pattern", pattern_text, "LIKE pattern")->required();
  match->add_option("--text", text_arg, "Text")->required();
  match->add_option("--algo", algo, "greedy | oracle | nfa")
      ->check(CLI::IsMember({"greedy", "oracle", "nfa"}));
  add_escape(match, c);
  add_tokens(match, c);
  add_alphabet(match, c);
  add_json(match, c);

  // normalize
  auto* norm = app.add_subcommand("normalize", "Print the normalized pattern");
  norm->add_option("--pattern", pattern_text, "LIKE pattern")->required();
  add_escape(norm, c);
  add_tokens(norm, c);
  add_json(norm, c);

  // to-regex
  auto* regex = app.add_subcommand("to-regex", "Translate a pattern to a classical regex");
  regex->add_option("--pattern", pattern_text, "LIKE pattern")->required();
  add_escape(regex, c);
  add_tokens(regex, c);
  add_alphabet(regex, c);
  add_json(regex, c);

  // eval
  std::string expr_arg;
  auto* eval = app.add_subcommand("eval", "Evaluate a LIKE expression on a text");
  eval->add_option("--expr", expr_arg, "Expression or file containing it")->required();
  eval->add_option("--text", text_arg, "Text")->required();
  add_escape(eval, c);
  add_tokens(eval, c);
  add_alphabet(eval, c);
  add_json(eval, c);

  // dnf
  std::size_t cap = kDefaultExplosionCap;
  auto* dnf = app.add_subcommand("dnf", "Underscore-free disjunctive normal form");
  dnf->add_option("--expr", expr_arg, "Expression or file containing it")->required();
  dnf->add_option("--cap", cap, "Maximum number of generated atoms")->check(CLI::PositiveNumber);
  add_escape(dnf, c);
  add_tokens(dnf, c);
  add_alphabet(dnf, c);
  add_json(dnf, c);

  // equiv
  std::string e1_arg, e2_arg;
  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two expressions");
  equiv->add_option("--e1", e1_arg, "First expression or file")->required();
  equiv->add_option("--e2", e2_arg, "Second expression or file")->required();
  add_escape(equiv, c);
  add_tokens(equiv, c);
  add_alphabet(equiv, c);
  add_budget(equiv, c);
  add_json(equiv, c);

  // nonempty
  std::optional<std::size_t> max_len;
  auto* nonempty = app.add_subcommand("nonempty", "Shortest text satisfying an expression");
  nonempty->add_option("--expr", expr_arg, "Expression or file containing it")->required();
  nonempty->add_option("--max-len", max_len, "Longest text to consider");
  add_escape(nonempty, c);
  add_tokens(nonempty, c);
  add_alphabet(nonempty, c);
  add_budget(nonempty, c);
  add_json(nonempty, c);

  // reduce
  std::string dimacs_path, machine_path, alphabet_out, input_arg;
  std::size_t n = 0, space = 0;
  std::optional<std::size_t> transition_gap, inertia_gap;
  bool triple_windows = false;
  auto* reduce = app.add_subcommand("reduce", "Generate reduction instances");
  reduce->require_subcommand(1);
  auto* r3sat = reduce->add_subcommand("3sat", "3-CNF to monotone expression");
  r3sat->add_option("--dimacs", dimacs_path, "DIMACS cnf file")->required();
  r3sat->add_option("--alphabet-out", alphabet_out, "Write the alphabet file here");
  add_json(r3sat, c);
  auto* rmaj = reduce->add_subcommand("majority", "Majority pattern for inputs of length n");
  rmaj->add_option("--n", n, "Input length")->required()->check(CLI::PositiveNumber);
  add_json(rmaj, c);
  auto* rtm = reduce->add_subcommand("tm", "Turing machine run to negative expression");
  rtm->add_option("--machine", machine_path, "Machine JSON file")->required();
  rtm->add_option("--input", input_arg, "Input text (token mode with --tokens)");
  rtm->add_option("--space", space, "Tape cells")->required()->check(CLI::PositiveNumber);
  rtm->add_option("--alphabet-out", alphabet_out, "Write the alphabet file here");
  rtm->add_option("--transition-gap", transition_gap, "Override the transition window gap");
  rtm->add_option("--inertia-gap", inertia_gap, "Override the inertia window gap");
  rtm->add_flag("--triple-windows", triple_windows,
                "Enumerate wrong three-symbol images instead of single symbols");
  add_escape(rtm, c);
  add_tokens(rtm, c);
  add_json(rtm, c);

  // simulate
  std::optional<std::size_t> step_cap;
  auto* simulate = app.add_subcommand("simulate", "Run a machine directly");
  simulate->require_subcommand(1);
  auto* stm = simulate->add_subcommand("tm", "Simulate a space-bounded Turing machine");
  stm->add_option("--machine", machine_path, "Machine JSON file")->required();
  stm->add_option("--input", input_arg, "Input text (token mode with --tokens)");
  stm->add_option("--space", space, "Tape cells")->required()->check(CLI::PositiveNumber);
  stm->add_option("--step-cap", step_cap, "Stop after this many steps");
  add_tokens(stm, c);
  add_json(stm, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kUsage;
  }

  const auto start = Clock::now();
  nlohmann::json report;
  auto emit = [&](const std::string& verdict, int code) {
    if (c.json) {
      report["verdict"] = verdict;
      report["elapsed_ms"] = elapsed_ms(start);
      out << report.dump() << '\n';
    }
    return code;
  };

  try {
    const auto escape = c.escape_char();
    const SyntaxMode mode = c.mode();

    if (*match) {
      Pattern p = parse_pattern(pattern_text, escape, mode);
      Text t = parse_text(text_arg, mode);
      if (c.alphabet.given()) {
        Alphabet sigma = c.alphabet.resolve();
        check_in_alphabet(p, sigma);
        check_in_alphabet(t, sigma);
      }
      bool ok = algo == "oracle" ? match_oracle(p, t)
                : algo == "nfa"  ? nfa_accepts(compile(p), t)
                                 : match_greedy(p, t);
      report["command"] = "match";
      report["algorithm"] = algo;
      if (!c.json) out << (ok ? "MATCH" : "NO MATCH") << '\n';
      return emit(ok ? "MATCH" : "NO MATCH", ok ? kPositive : kNegative);
    }

    if (*norm) {
      Pattern p = normalize(parse_pattern(pattern_text, escape, mode));
      std::string rendered = render_pattern(p, escape, mode);
      report["command"] = "normalize";
      report["pattern"] = rendered;
      if (!c.json) out << rendered << '\n';
      return emit("OK", kPositive);
    }

    if (*regex) {
      Pattern p = parse_pattern(pattern_text, escape, mode);
      std::string re = to_classical_regex(p, c.alphabet.resolve());
      report["command"] = "to-regex";
      report["regex"] = re;
      if (!c.json) out << re << '\n';
      return emit("OK", kPositive);
    }

    if (*eval) {
      LikeExpression e = parse_expression(read_expr_arg(expr_arg), escape, mode);
      Text t = parse_text(text_arg, mode);
      if (c.alphabet.given()) {
        Alphabet sigma = c.alphabet.resolve();
        check_in_alphabet(e, sigma);
        check_in_alphabet(t, sigma);
      }
      bool value = evaluate(e, t);
      report["command"] = "eval";
      if (!c.json) out << (value ? "TRUE" : "FALSE") << '\n';
      return emit(value ? "TRUE" : "FALSE", value ? kPositive : kNegative);
    }

    if (*dnf) {
      LikeExpression e = parse_expression(read_expr_arg(expr_arg), escape, mode);
      Alphabet sigma = c.alphabet.resolve();
      check_in_alphabet(e, sigma);
      Dnf d = to_dot_depth1_dnf(e, sigma, cap);
      auto [rendered, used_escape] = render_for_output(d.to_expression(), escape, mode);
      report["command"] = "dnf";
      report["expression"] = rendered;
      report["clauses"] = d.clauses.size();
      report["atoms"] = d.atom_count();
      if (used_escape) report["escape"] = std::string(1, *used_escape);
      if (!c.json) out << rendered << '\n';
      return emit("OK", kPositive);
    }

    if (*equiv) {
      LikeExpression e1 = parse_expression(read_expr_arg(e1_arg), escape, mode);
      LikeExpression e2 = parse_expression(read_expr_arg(e2_arg), escape, mode);
      Alphabet sigma = c.alphabet.resolve();
      check_in_alphabet(e1, sigma);
      check_in_alphabet(e2, sigma);
      SearchOptions opts;
      opts.state_budget = c.budget;
      SearchOutcome r = find_separating_string(e1, e2, sigma, opts);
      report["command"] = "equiv";
      report["explored"] = r.explored;
      if (r.verdict == Verdict::kFound) {
        report["witness"] = render_text(*r.text, mode);
        report["witness_tokens"] = text_json(*r.text);
        if (!c.json) out << "SEPARATED \"" << render_text(*r.text, mode) << "\"\n";
        return emit("SEPARATED", kNegative);
      }
      if (!c.json) out << "EQUIVALENT\n";
      return emit("EQUIVALENT", kPositive);
    }

    if (*nonempty) {
      LikeExpression e = parse_expression(read_expr_arg(expr_arg), escape, mode);
      Alphabet sigma = c.alphabet.resolve();
      check_in_alphabet(e, sigma);
      SearchOptions opts;
      opts.state_budget = c.budget;
      opts.max_len = max_len;
      SearchOutcome r = find_witness(e, sigma, opts);
      report["command"] = "nonempty";
      report["explored"] = r.explored;
      if (r.verdict == Verdict::kFound) {
        report["witness"] = render_text(*r.text, mode);
        report["witness_tokens"] = text_json(*r.text);
        if (!c.json) out << "WITNESS \"" << render_text(*r.text, mode) << "\"\n";
        return emit("WITNESS", kPositive);
      }
      if (!c.json) out << "EMPTY\n";
      return emit("EMPTY", kNegative);
    }

    auto write_encoding = [&](const Encoding& enc, const char* command, std::optional<char> esc) {
      const SyntaxMode out_mode = preferred_mode(enc.alphabet.symbols());
      auto [rendered, used_escape] = render_for_output(enc.expression, esc, out_mode);
      if (!alphabet_out.empty()) {
        std::ofstream f(alphabet_out);
        if (!f) throw UsageError("cannot write '" + alphabet_out + "'");
        f << enc.alphabet.to_lines();
      }
      report["command"] = command;
      report["expression"] = rendered;
      report["alphabet"] = text_json(enc.alphabet.symbols());
      report["atoms"] = atom_count(enc.expression);
      report["size"] = expression_size(enc.expression);
      report["tokens"] = out_mode == SyntaxMode::kTokens;
      if (used_escape) report["escape"] = std::string(1, *used_escape);
      if (!c.json) out << rendered << '\n';
      return emit("OK", kPositive);
    };

    if (*r3sat) {
      Cnf f = parse_dimacs(read_file(dimacs_path));
      return write_encoding(encode_3sat(f), "reduce 3sat", std::nullopt);
    }

    if (*rmaj) {
      std::string rendered = render_pattern(encode_majority(n));
      report["command"] = "reduce majority";
      report["pattern"] = rendered;
      if (!c.json) out << rendered << '\n';
      return emit("OK", kPositive);
    }

    if (*rtm) {
      TmSpec m = load_machine(machine_path);
      TmEncodingOptions opts;
      opts.transition_gap = transition_gap;
      opts.inertia_gap = inertia_gap;
      opts.split_windows = !triple_windows;
      Encoding enc = encode_tm(m, parse_text(input_arg, mode), space, opts);
      return write_encoding(enc, "reduce tm", escape);
    }

    if (*stm) {
      TmSpec m = load_machine(machine_path);
      TmRunResult r = simulate_tm(m, parse_text(input_arg, mode), space, step_cap);
      report["command"] = "simulate tm";
      report["steps"] = r.steps;
      report["history"] = render_text(r.history, SyntaxMode::kTokens);
      report["history_tokens"] = text_json(r.history);
      if (!c.json) {
        out << (r.accepted ? render_text(r.history, SyntaxMode::kTokens) : "REJECT") << '\n';
      }
      return emit(r.accepted ? "ACCEPT" : "REJECT", r.accepted ? kPositive : kNegative);
    }
  } catch (const BudgetExceeded& e) {
    report["explored"] = e.explored();
    if (!c.json) err << "likepat: " << e.what() << '\n';
    return emit("BUDGET EXCEEDED", kResource);
  } catch (const CapExceeded& e) {
    report["required"] = e.required();
    if (!c.json) err << "likepat: " << e.what() << '\n';
    return emit("CAP EXCEEDED", kResource);
  } catch (const Error& e) {
    err << "likepat: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace likepat::cli
