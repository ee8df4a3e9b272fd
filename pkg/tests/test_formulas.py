import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boxdot.formulas import (
    Atom,
    AttainKnow,
    Implies,
    Know,
    Not,
    ParseError,
    atom_names,
    modal_depth,
    parse,
    substitute,
)
from boxdot.proofs import eval_skeleton, skeleton_letters

from helpers import random_core_formula

p, q = Atom("p"), Atom("q")


class TestParse:
    def test_monotonicity_shape(self):
        assert parse("[.]p -> []p") == Implies(AttainKnow(p), Know(p))

    def test_atom(self):
        assert parse("p") == p

    def test_conjunction_desugars(self):
        assert parse("p & q") == Not(Implies(p, Not(q)))

    def test_disjunction_desugars(self):
        assert parse("p | q") == Implies(Not(p), q)

    def test_iff_desugars(self):
        pq, qp = Implies(p, q), Implies(q, p)
        assert parse("p <-> q") == Not(Implies(pq, Not(qp)))

    def test_negation_binds_tighter_than_arrow(self):
        assert parse("!p -> q") == Implies(Not(p), q)

    def test_arrow_right_associative(self):
        assert parse("p -> q -> p") == Implies(p, Implies(q, p))

    def test_and_binds_tighter_than_or(self):
        a = parse("p | q & p")
        assert a == Implies(Not(p), Not(Implies(q, Not(p))))

    def test_modalities_chain(self):
        assert parse("![.]p") == Not(AttainKnow(p))
        assert parse("[][.]p") == Know(AttainKnow(p))

    def test_whitespace_and_comments(self):
        assert parse("p  ->\n # comment\n q") == Implies(p, q)

    @pytest.mark.parametrize("text", ["", "   ", "# only a comment"])
    def test_empty_input(self, text):
        with pytest.raises(ParseError, match="empty input"):
            parse(text)

    def test_unbalanced_paren(self):
        with pytest.raises(ParseError, match="expected"):
            parse("(p -> q")

    def test_lone_bracket(self):
        with pytest.raises(ParseError, match="unbalanced"):
            parse("[p]")

    def test_trailing_tokens(self):
        with pytest.raises(ParseError, match="trailing"):
            parse("p q")

    def test_error_carries_position(self):
        try:
            parse("p ->\n-> q")
        except ParseError as exc:
            assert exc.line == 2 and exc.column == 1
        else:
            pytest.fail("expected ParseError")

    def test_chained_iff_is_rejected(self):
        with pytest.raises(ParseError):
            parse("p <-> q <-> p")


class TestPrint:
    def test_know(self):
        assert str(Know(p)) == "([]p)"

    def test_right_association_explicit(self):
        assert str(Implies(p, Implies(q, p))) == "(p -> (q -> p))"

    def test_nested_attain(self):
        f = AttainKnow(AttainKnow(p))
        assert str(f) == "([.]([.]p))"
        assert parse(str(f)) == f


class TestQueries:
    @pytest.mark.parametrize("text,depth", [
        ("p", 0),
        ("[][.]p", 2),
        ("[]p -> q", 1),
        ("[.]([]p -> [.][.]q)", 3),
    ])
    def test_modal_depth(self, text, depth):
        assert modal_depth(parse(text)) == depth

    @pytest.mark.parametrize("text,names", [
        ("p -> q", {"p", "q"}),
        ("[](p -> p)", {"p"}),
        ("[]p -> [.]p", {"p"}),
    ])
    def test_atom_names(self, text, names):
        assert atom_names(parse(text)) == names

    def test_substitute(self):
        f = parse("[]p -> (q -> p)")
        g = substitute(f, {"p": parse("[.]r")})
        assert g == parse("[]([.]r) -> (q -> [.]r)")


identifiers = st.from_regex(r"[a-zA-Z_][a-zA-Z0-9_]{0,8}", fullmatch=True)
formulas = st.recursive(
    identifiers.map(Atom),
    lambda kids: st.one_of(
        kids.map(Not),
        kids.map(AttainKnow),
        kids.map(Know),
        st.tuples(kids, kids).map(lambda ab: Implies(ab[0], ab[1])),
    ),
    max_leaves=30,
)


@settings(max_examples=400, deadline=None)
@given(formulas)
def test_round_trip(f):
    assert parse(str(f)) == f


def _truth_table(f):
    letters = skeleton_letters(f)
    rows = []
    for values in itertools.product((False, True), repeat=len(letters)):
        rows.append(eval_skeleton(f, dict(zip(letters, values))))
    return letters, rows


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_desugaring_matches_boolean_connectives(data):
    rng = random.Random(data.draw(st.integers(0, 2**32)))
    a = random_core_formula(rng, 2, atoms=("p", "q"))
    b = random_core_formula(rng, 2, atoms=("q", "r"))
    combined = {
        "&": lambda x, y: x and y,
        "|": lambda x, y: x or y,
        "<->": lambda x, y: x == y,
    }
    for op, boolean in combined.items():
        f = parse(f"({a}) {op} ({b})")
        letters = skeleton_letters(f)
        for values in itertools.product((False, True), repeat=len(letters)):
            env = dict(zip(letters, values))
            assert eval_skeleton(f, env) == boolean(eval_skeleton(a, env),
                                                    eval_skeleton(b, env))
