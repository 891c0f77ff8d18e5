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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "likepat/automata.hpp"
#include "likepat/errors.hpp"
#include "likepat/expression.hpp"
#include "likepat/matcher.hpp"
#include "likepat/normalize.hpp"
#include "likepat/pattern.hpp"
#include "likepat/reductions.hpp"
#include "likepat/turing.hpp"

namespace py = pybind11;

namespace likepat {
namespace {

// A text or alphabet given as a string of characters or a list of symbols.
using Symbols = std::variant<std::string, std::vector<std::string>>;

Text to_text(const Symbols& s) {
  if (const auto* str = std::get_if<std::string>(&s)) {
    return parse_text(*str, SyntaxMode::kChars);
  }
  Text t;
  for (const auto& x : std::get<std::vector<std::string>>(s)) t.emplace_back(x);
  return t;
}

Alphabet to_alphabet(const Symbols& s) {
  if (const auto* str = std::get_if<std::string>(&s)) return Alphabet::from_chars(*str);
  return Alphabet(to_text(s));
}

std::vector<std::string> to_list(const Text& t) {
  std::vector<std::string> out;
  for (const auto& s : t) out.push_back(s.token());
  return out;
}

SyntaxMode mode_of(bool tokens) { return tokens ? SyntaxMode::kTokens : SyntaxMode::kChars; }

struct Result {
  std::string verdict;
  std::optional<std::vector<std::string>> witness;
  std::size_t explored = 0;
};

Result to_result(const SearchOutcome& o) {
  Result r;
  r.verdict = o.verdict == Verdict::kFound                 ? "found"
              : o.verdict == Verdict::kExhaustedEquivalent ? "equivalent"
                                                           : "empty";
  if (o.text) r.witness = to_list(*o.text);
  r.explored = o.explored;
  return r;
}

SearchOptions options(std::optional<std::size_t> max_len, std::size_t budget) {
  SearchOptions o;
  o.max_len = max_len;
  o.state_budget = budget;
  return o;
}

}  // namespace
}  // namespace likepat

PYBIND11_MODULE(_likepat, m) {
  using namespace likepat;
  m.doc() = "SQL LIKE patterns, LIKE expressions and their decision procedures.";

  auto& error = py::register_exception<Error>(m, "LikeError");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());

  py::class_<Pattern>(m, "Pattern")
      .def(py::init([](const std::string& text, std::optional<char> escape, bool tokens) {
             return parse_pattern(text, escape, mode_of(tokens));
           }),
           py::arg("text"), py::arg("escape") = py::none(), py::arg("tokens") = false)
      .def("__len__", &Pattern::size)
      .def("__eq__", [](const Pattern& a, const Pattern& b) { return a == b; })
      .def(
          "render",
          [](const Pattern& p, std::optional<char> escape, bool tokens) {
            return render_pattern(p, escape, mode_of(tokens));
          },
          py::arg("escape") = py::none(), py::arg("tokens") = false)
      .def("normalize", [](const Pattern& p) { return normalize(p); })
      .def("is_normalized", [](const Pattern& p) { return is_normalized(p); })
      .def(
          "matches",
          [](const Pattern& p, const Symbols& text, const std::string& algorithm) {
            Text t = to_text(text);
            if (algorithm == "greedy") return match_greedy(p, t);
            if (algorithm == "oracle") return match_oracle(p, t);
            if (algorithm == "nfa") return nfa_accepts(compile(p), t);
            throw Error("unknown algorithm '" + algorithm + "'");
          },
          py::arg("text"), py::arg("algorithm") = "greedy")
      .def(
          "to_regex",
          [](const Pattern& p, const Symbols& alphabet) {
            return to_classical_regex(p, to_alphabet(alphabet));
          },
          py::arg("alphabet"))
      .def("__repr__", [](const Pattern& p) {
        std::ostringstream s;
        s << "Pattern(" << p << ")";
        return s.str();
      });

  py::class_<LikeExpression>(m, "Expression")
      .def(py::init([](const std::string& text, std::optional<char> escape, bool tokens) {
             return parse_expression(text, escape, mode_of(tokens));
           }),
           py::arg("text"), py::arg("escape") = py::none(), py::arg("tokens") = false)
      .def("__eq__", [](const LikeExpression& a, const LikeExpression& b) { return a == b; })
      .def(
          "render",
          [](const LikeExpression& e, std::optional<char> escape, bool tokens) {
            return render_expression(e, escape, mode_of(tokens));
          },
          py::arg("escape") = py::none(), py::arg("tokens") = false)
      .def_property_readonly("size", [](const LikeExpression& e) { return expression_size(e); })
      .def_property_readonly("atom_count", [](const LikeExpression& e) { return atom_count(e); })
      .def_property_readonly("is_monotone", [](const LikeExpression& e) { return is_monotone(e); })
      .def(
          "evaluate",
          [](const LikeExpression& e, const Symbols& text) { return evaluate(e, to_text(text)); },
          py::arg("text"))
      .def(
          "to_dnf",
          [](const LikeExpression& e, const Symbols& alphabet, std::size_t cap) {
            return to_dot_depth1_dnf(e, to_alphabet(alphabet), cap).to_expression();
          },
          py::arg("alphabet"), py::arg("cap") = kDefaultExplosionCap)
      .def("__repr__", [](const LikeExpression& e) {
        try {
          return "Expression(" + render_expression(e) + ")";
        } catch (const Error&) {
          return "Expression(" + render_expression(e, std::nullopt, SyntaxMode::kTokens) + ")";
        }
      });

  py::class_<Result>(m, "SearchResult")
      .def_readonly("verdict", &Result::verdict)
      .def_readonly("witness", &Result::witness)
      .def_readonly("explored", &Result::explored)
      .def("__repr__", [](const Result& r) {
        return "SearchResult(verdict='" + r.verdict + "', explored=" + std::to_string(r.explored) +
               ")";
      });

  m.def(
      "find_witness",
      [](const LikeExpression& e, const Symbols& alphabet, std::optional<std::size_t> max_len,
         std::size_t budget) {
        return to_result(find_witness(e, to_alphabet(alphabet), options(max_len, budget)));
      },
      py::arg("expression"), py::arg("alphabet"), py::arg("max_len") = py::none(),
      py::arg("budget") = kDefaultStateBudget);

  m.def(
      "find_separating_string",
      [](const LikeExpression& e1, const LikeExpression& e2, const Symbols& alphabet,
         std::size_t budget) {
        return to_result(
            find_separating_string(e1, e2, to_alphabet(alphabet), options(std::nullopt, budget)));
      },
      py::arg("e1"), py::arg("e2"), py::arg("alphabet"), py::arg("budget") = kDefaultStateBudget);

  m.def(
      "equivalent",
      [](const LikeExpression& e1, const LikeExpression& e2, const Symbols& alphabet,
         std::size_t budget) {
        return decide_equivalence(e1, e2, to_alphabet(alphabet), options(std::nullopt, budget));
      },
      py::arg("e1"), py::arg("e2"), py::arg("alphabet"), py::arg("budget") = kDefaultStateBudget);

  m.def("encode_majority", &encode_majority, py::arg("n"));

  m.def(
      "encode_3sat",
      [](const std::string& dimacs) {
        Encoding enc = encode_3sat(parse_dimacs(dimacs));
        return py::make_tuple(enc.expression, to_list(enc.alphabet.symbols()));
      },
      py::arg("dimacs"), "Returns (expression, alphabet symbols).");

  m.def(
      "decode_assignment",
      [](const std::vector<std::string>& witness, const std::string& dimacs) {
        return decode_assignment(to_text(witness), parse_dimacs(dimacs));
      },
      py::arg("witness"), py::arg("dimacs"));

  m.def(
      "simulate_tm",
      [](const std::string& machine_json, const std::vector<std::string>& input, std::size_t space,
         std::optional<std::size_t> step_cap) {
        TmRunResult r = simulate_tm(parse_machine(machine_json), to_text(input), space, step_cap);
        return py::make_tuple(r.accepted, to_list(r.history));
      },
      py::arg("machine"), py::arg("input"), py::arg("space"), py::arg("step_cap") = py::none(),
      "Returns (accepted, history symbols).");

  m.def(
      "encode_tm",
      [](const std::string& machine_json, const std::vector<std::string>& input,
         std::size_t space) {
        Encoding enc = encode_tm(parse_machine(machine_json), to_text(input), space);
        return py::make_tuple(enc.expression, to_list(enc.alphabet.symbols()));
      },
      py::arg("machine"), py::arg("input"), py::arg("space"),
      "Returns (expression, alphabet symbols).");
}
