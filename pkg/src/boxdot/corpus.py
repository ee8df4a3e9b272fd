"""Bundled derivations exercised by the ``corpus`` CLI command and the tests.

Each entry is kept as proof-script text so the corpus doubles as documentation
of the script format; ``corpus()`` parses them on demand.  All four check as
accepted, hypothesis-free theorems.
"""

from __future__ import annotations

from .proofs import parse_proof_script

__all__ = ["CORPUS_SCRIPTS", "corpus"]

# Positive introspection for full knowledge, []p -> [][]p.  The system has no
# necessitation rule for [], so the proof routes through anec and mono.
_LEMMA1 = """\
# lemma1: []p -> [][]p
1: !([]p) -> [](!([]p)) ; ax neg-intro
2: (!([]p) -> [](!([]p))) -> (!([](!([]p))) -> []p) ; taut
3: !([](!([]p))) -> []p ; mp 1 2
4: [.](!([](!([]p))) -> []p) ; anec 3
5: [.](!([](!([]p))) -> []p) -> [](!([](!([]p))) -> []p) ; ax mono
6: [](!([](!([]p))) -> []p) ; mp 4 5
7: [](!([](!([]p))) -> []p) -> ([](!([](!([]p)))) -> [][]p) ; ax dist
8: [](!([](!([]p)))) -> [][]p ; mp 6 7
9: [](!([]p)) -> !([]p) ; ax truth
10: ([](!([]p)) -> !([]p)) -> ([]p -> !([](!([]p)))) ; taut
11: []p -> !([](!([]p))) ; mp 9 10
12: !([](!([]p))) -> [](!([](!([]p)))) ; ax neg-intro
13: ([]p -> !([](!([]p)))) -> ((!([](!([]p))) -> [](!([](!([]p))))) -> ([]p -> [](!([](!([]p)))))) ; taut
14: (!([](!([]p))) -> [](!([](!([]p))))) -> ([]p -> [](!([](!([]p))))) ; mp 11 13
15: []p -> [](!([](!([]p)))) ; mp 12 14
16: ([]p -> [](!([](!([]p))))) -> (([](!([](!([]p)))) -> [][]p) -> ([]p -> [][]p)) ; taut
17: ([](!([](!([]p)))) -> [][]p) -> ([]p -> [][]p) ; mp 15 16
18: []p -> [][]p ; mp 8 17
"""

# Mixed negative introspection, ![.]p -> []![.]p: failure of attainable
# knowledge is fully knowable.
_LEMMA2 = """\
# lemma2: ![.]p -> []![.]p
1: []([.]p) -> [.]p ; ax truth
2: ([]([.]p) -> [.]p) -> (!([.]p) -> !([]([.]p))) ; taut
3: !([.]p) -> !([]([.]p)) ; mp 1 2
4: !([]([.]p)) -> [](!([]([.]p))) ; ax neg-intro
5: (!([.]p) -> !([]([.]p))) -> ((!([]([.]p)) -> [](!([]([.]p)))) -> (!([.]p) -> [](!([]([.]p))))) ; taut
6: (!([]([.]p)) -> [](!([]([.]p)))) -> (!([.]p) -> [](!([]([.]p)))) ; mp 3 5
7: !([.]p) -> [](!([]([.]p))) ; mp 4 6
8: [.]p -> [.]([.]p) ; ax att-pos-intro
9: [.]([.]p) -> []([.]p) ; ax mono
10: ([.]p -> [.]([.]p)) -> (([.]([.]p) -> []([.]p)) -> ([.]p -> []([.]p))) ; taut
11: ([.]([.]p) -> []([.]p)) -> ([.]p -> []([.]p)) ; mp 8 10
12: [.]p -> []([.]p) ; mp 9 11
13: ([.]p -> []([.]p)) -> (!([]([.]p)) -> !([.]p)) ; taut
14: !([]([.]p)) -> !([.]p) ; mp 12 13
15: [.](!([]([.]p)) -> !([.]p)) ; anec 14
16: [.](!([]([.]p)) -> !([.]p)) -> [](!([]([.]p)) -> !([.]p)) ; ax mono
17: [](!([]([.]p)) -> !([.]p)) ; mp 15 16
18: [](!([]([.]p)) -> !([.]p)) -> ([](!([]([.]p))) -> [](!([.]p))) ; ax dist
19: [](!([]([.]p))) -> [](!([.]p)) ; mp 17 18
20: (!([.]p) -> [](!([]([.]p)))) -> (([](!([]([.]p))) -> [](!([.]p))) -> (!([.]p) -> [](!([.]p)))) ; taut
21: ([](!([]([.]p))) -> [](!([.]p))) -> (!([.]p) -> [](!([.]p))) ; mp 7 20
22: !([.]p) -> [](!([.]p)) ; mp 19 21
"""

# Attainable truth, [.]p -> p: not an axiom, it already follows from
# monotonicity and truth.
_ATT_TRUTH = """\
# att-truth: [.]p -> p
1: [.]p -> []p ; ax mono
2: []p -> p ; ax truth
3: ([.]p -> []p) -> (([]p -> p) -> ([.]p -> p)) ; taut
4: ([]p -> p) -> ([.]p -> p) ; mp 1 3
5: [.]p -> p ; mp 2 4
"""

# Necessitation for [] recovered from anec plus mono, applied to a theorem.
_BOX_NEC = """\
# box-nec: []([]p -> p)
1: []p -> p ; ax truth
2: [.]([]p -> p) ; anec 1
3: [.]([]p -> p) -> []([]p -> p) ; ax mono
4: []([]p -> p) ; mp 2 3
"""

CORPUS_SCRIPTS = {
    "lemma1": _LEMMA1,
    "lemma2": _LEMMA2,
    "att-truth": _ATT_TRUTH,
    "box-nec": _BOX_NEC,
}


def corpus():
    """Parse the bundled scripts; returns {name: Derivation}."""
    return {name: parse_proof_script(text) for name, text in CORPUS_SCRIPTS.items()}
