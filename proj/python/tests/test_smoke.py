# Copyright 2026 The likepat Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import pathlib

import pytest

import likepat

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


def test_pattern_match_and_normalize():
    p = likepat.Pattern("%0%1%")
    assert p.matches("021")
    assert not likepat.Pattern("%01%").matches("021", algorithm="nfa")
    assert likepat.Pattern("%%_").normalize().render() == "_%"
    assert likepat.Pattern("%01%").to_regex("01") == "(0+1)*01(0+1)*"
    assert len(likepat.Pattern("a\\%", escape="\\")) == 2


def test_expression_evaluate_and_dnf():
    e = likepat.Expression('LIKE "0%" AND NOT LIKE "%1"')
    assert e.evaluate("00")
    assert not e.evaluate("01")
    assert e.size == 4
    assert not e.is_monotone
    d = likepat.Expression('LIKE "0_"').to_dnf("01")
    assert d.render() == 'LIKE "00" OR LIKE "01"'


def test_equivalence_and_separation():
    e1 = likepat.Expression('LIKE "%01%"')
    e2 = likepat.Expression('LIKE "%0%1%"')
    assert likepat.equivalent(e1, e2, "01")
    r = likepat.find_separating_string(e1, e2, "012")
    assert r.verdict == "found"
    assert r.witness == ["0", "2", "1"]
    assert e1.evaluate(r.witness) != e2.evaluate(r.witness)


def test_witness_and_budget():
    r = likepat.find_witness(likepat.Expression('LIKE "%1%" AND NOT LIKE "1%"'), "01")
    assert r.verdict == "found" and r.witness == ["0", "1"]
    assert likepat.find_witness(likepat.Expression('LIKE "0" AND LIKE "1"'), "01").verdict == "empty"
    with pytest.raises(likepat.BudgetExceeded):
        likepat.find_witness(likepat.Expression('LIKE "%0101%"'), "01", budget=2)


def test_reductions():
    assert likepat.encode_majority(3).render() == "%1%1%"
    dimacs = "p cnf 2 2\n1 2 2 0\n-1 -1 -2 0\n"
    expr, alphabet = likepat.encode_3sat(dimacs)
    assert alphabet == ["x1", "x2", "~x1", "~x2"]
    r = likepat.find_witness(expr, alphabet)
    assert len(r.witness) == 2
    assert likepat.decode_assignment(r.witness, dimacs) is not None


def test_turing_machine_round_trip():
    machine = (DATA / "erase_one.json").read_text()
    accepted, history = likepat.simulate_tm(machine, ["1"], 2)
    assert accepted
    expr, alphabet = likepat.encode_tm(machine, ["1"], 2)
    assert likepat.find_witness(expr, alphabet).witness == history


def test_errors():
    with pytest.raises(likepat.ParseError):
        likepat.Expression('LIKE "a" AND')
    with pytest.raises(likepat.CapExceeded):
        likepat.Expression('LIKE "____"').to_dnf("01", cap=4)
    assert issubclass(likepat.ParseError, likepat.LikeError)
