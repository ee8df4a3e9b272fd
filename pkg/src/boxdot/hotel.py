"""Exact satisfaction over the two infinite Grand Hotel model families.

Worlds are room-state functions on the natural numbers, presented cofinitely
(a default state plus finitely many exceptions).  Examining room r is one
piece of evidence: two worlds are r-indistinguishable when room r has the
same state in both.  Variant I has states occupied/vacant; variant II adds
infested, with the global rule that an infested room anywhere means no
occupied rooms at all.

This is the one setting where ``[.]`` and ``[]`` genuinely differ.  Because
agreement on *all* rooms pins the world completely, ``[]f`` holds exactly
where f does; ``[.]f`` asks for a finite set F of rooms whose examination
guarantees f across every valid world agreeing on F.

Evaluation strategy.  Untracked rooms are interchangeable, so a world is
abstracted relative to a tracked room set as (exact states of named tracked
rooms, a multiset of states of anonymous pinned rooms, per-state counts of
untracked rooms saturated at a cap, with exactly one state cofinite).  For
``[.]`` it is enough to search F = all tracked rooms plus j fresh untracked
rooms, j = 0..cap: enlarging F only shrinks the agreement class, and fresh
rooms matter only through their states.  Successor worlds under agreement on
F keep the tracked part and take arbitrary valid saturated count vectors.
The cap defaults to modal_depth(f) + number of exists_* atoms + 2; verdicts
must not change when it grows (see the cap-stability tests).

Atom spelling: ``exists_<state>`` and ``room_<index>_<state>``.
World literals: ``default=<state>; <room>=<state>; ...``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Tuple

from .formulas import (
    Atom,
    AttainKnow,
    CapacityError,
    Implies,
    Know,
    Not,
    atom_names,
    modal_depth,
    parse,
)

__all__ = [
    "HotelVariant",
    "VARIANT_I",
    "VARIANT_II",
    "VARIANTS",
    "HotelWorld",
    "EvidenceWitness",
    "EvalSession",
    "CounterexampleReport",
    "MODAL_DEPTH_CAP",
    "ATOM_COUNT_CAP",
    "parse_world_literal",
    "format_world",
    "validate_world",
    "hotel_eval",
    "confirm_witness",
    "counterexample_report",
]

MODAL_DEPTH_CAP = 4
ATOM_COUNT_CAP = 6

OMEGA = -1  # cofinite count marker


@dataclass(frozen=True)
class HotelVariant:
    name: str
    states: Tuple[str, ...]


VARIANT_I = HotelVariant("I", ("occupied", "vacant"))
VARIANT_II = HotelVariant("II", ("occupied", "vacant", "infested"))
VARIANTS = {"I": VARIANT_I, "II": VARIANT_II}


@dataclass
class HotelWorld:
    default: str
    exceptions: Dict[int, str] = field(default_factory=dict)


@dataclass(frozen=True)
class EvidenceWitness:
    """Normalized finite evidence set: the named tracked rooms plus a number
    of interchangeable fresh rooms."""

    tracked: frozenset
    fresh_count: int


_WORLD_RE = re.compile(r"^\s*default\s*=\s*([a-z]+)\s*$")
_ROOM_RE = re.compile(r"^\s*(\d+)\s*=\s*([a-z]+)\s*$")


def parse_world_literal(text):
    """Parse ``default=<state>; <room>=<state>; ...`` into a HotelWorld."""
    parts = [p for p in text.split(";") if p.strip()]
    if not parts:
        raise ValueError("empty world literal")
    m = _WORLD_RE.match(parts[0])
    if m is None:
        raise ValueError(f"world literal must start with default=<state>: {text!r}")
    exceptions = {}
    for part in parts[1:]:
        rm = _ROOM_RE.match(part)
        if rm is None:
            raise ValueError(f"bad room assignment {part.strip()!r}")
        room = int(rm.group(1))
        if room in exceptions:
            raise ValueError(f"room {room} assigned twice")
        exceptions[room] = rm.group(2)
    return HotelWorld(m.group(1), exceptions)


def format_world(w):
    parts = [f"default={w.default}"]
    for room in sorted(w.exceptions):
        parts.append(f"{room}={w.exceptions[room]}")
    return "; ".join(parts)


def validate_world(v, w):
    """None when the world is a canonical, variant-valid presentation;
    otherwise a description of the violation."""
    if w.default not in v.states:
        return f"default state {w.default!r} is not a variant-{v.name} state"
    for room, state in w.exceptions.items():
        if not isinstance(room, int) or room < 0:
            return f"room index {room!r} is not a non-negative integer"
        if state not in v.states:
            return f"state {state!r} of room {room} is not a variant-{v.name} state"
        if state == w.default:
            return f"room {room} maps to the default state (non-canonical)"
    if "infested" in v.states:
        states = set(w.exceptions.values())
        infested = w.default == "infested" or "infested" in states
        occupied = w.default == "occupied" or "occupied" in states
        if infested and occupied:
            return "infested rooms and occupied rooms cannot coexist"
    return None


# ---------- hotel atoms ----------

def _parse_atom(name, v):
    if name.startswith("exists_"):
        state = name[len("exists_"):]
        if state not in v.states:
            return None
        return ("exists", state)
    m = re.fullmatch(r"room_(\d+)_([a-z]+)", name)
    if m and m.group(2) in v.states:
        return ("room", int(m.group(1)), m.group(2))
    return None


@lru_cache(maxsize=None)
def _classify_atoms(f, v):
    atoms = {}
    for name in atom_names(f):
        parsed = _parse_atom(name, v)
        if parsed is None:
            raise ValueError(
                f"unknown hotel atom {name!r}; expected exists_<state> or "
                f"room_<index>_<state> over variant-{v.name} states {v.states}")
        atoms[name] = parsed
    return atoms


# ---------- the abstraction ----------

class _HotelEval:
    """Evaluator for a fixed (variant, cap, named tracked room set).

    Abstract worlds are (named state tuple, anonymous pin counts per state,
    untracked counts per state).  Counts live in 0..cap with OMEGA marking
    the one cofinite state.  The memo table is a cache of pure results, so
    one evaluator may serve many formulas and worlds that share the cap and
    the named room set.
    """

    def __init__(self, v, cap, named_rooms):
        self.v = v
        self.cap = cap
        self.named_rooms = named_rooms  # sorted tuple of room indices
        self.nstates = len(v.states)
        self.state_index = {s: i for i, s in enumerate(v.states)}
        self.memo = {}
        self._succ_cache = {}
        self._atom_cache = {}
        self._pins_cache = {}

    # -- atoms --

    def atom_true(self, name, named, anon, counts):
        kind = self._atom_cache.get(name)
        if kind is None:
            kind = _parse_atom(name, self.v)
            if kind is None:
                raise ValueError(f"unknown hotel atom {name!r}")
            self._atom_cache[name] = kind
        if kind[0] == "room":
            _, room, state = kind
            return named[self.named_rooms.index(room)] == state
        _, state = kind
        si = self.state_index[state]
        if state in named or anon[si] > 0:
            return True
        return counts[si] != 0  # positive or OMEGA

    # -- successor vectors --

    def successors(self, named, anon):
        """All valid saturated count vectors a world agreeing on the tracked
        rooms may have.  Validity only depends on which states the tracked
        part makes present, so the enumeration is cached on that."""
        if "infested" not in self.v.states:
            key = ()
        else:
            occ = "occupied" in named or anon[self.state_index["occupied"]] > 0
            inf = "infested" in named or anon[self.state_index["infested"]] > 0
            key = (occ, inf)
        cached = self._succ_cache.get(key)
        if cached is not None:
            return cached
        vectors = []
        rng = range(self.cap + 1)
        for d in range(self.nstates):
            for finite in itertools.product(rng, repeat=self.nstates - 1):
                counts = list(finite[:d]) + [OMEGA] + list(finite[d:])
                counts = tuple(counts)
                if key != () and not self._tracked_plus_counts_valid(key, counts):
                    continue
                vectors.append(counts)
        self._succ_cache[key] = vectors
        return vectors

    def _tracked_plus_counts_valid(self, tracked_presence, counts):
        occ_tracked, inf_tracked = tracked_presence
        occ = occ_tracked or counts[self.state_index["occupied"]] != 0
        inf = inf_tracked or counts[self.state_index["infested"]] != 0
        return not (occ and inf)

    # -- pin multisets --

    def pin_multisets(self, counts, size):
        """Multisets of `size` fresh untracked rooms drawable from `counts`,
        as per-state count tuples."""
        key = (counts, size)
        cached = self._pins_cache.get(key)
        if cached is not None:
            return cached
        avail = [self.cap if c == OMEGA else c for c in counts]
        out = []

        def rec(i, left, acc):
            if i == self.nstates - 1:
                if left <= avail[i]:
                    out.append(tuple(acc + [left]))
                return
            for take in range(min(left, avail[i]) + 1):
                rec(i + 1, left - take, acc + [take])

        rec(0, size, [])
        self._pins_cache[key] = out
        return out

    # -- evaluation --

    def eval(self, f, named, anon, counts):
        key = (f, named, anon, counts)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        if isinstance(f, Atom):
            value = self.atom_true(f.name, named, anon, counts)
        elif isinstance(f, Not):
            value = not self.eval(f.child, named, anon, counts)
        elif isinstance(f, Implies):
            value = ((not self.eval(f.left, named, anon, counts))
                     or self.eval(f.right, named, anon, counts))
        elif isinstance(f, Know):
            # agreement on every room pins the world exactly
            value = self.eval(f.child, named, anon, counts)
        elif isinstance(f, AttainKnow):
            value = self.attain(f.child, named, anon, counts) is not None
        else:
            raise TypeError(f"not a formula: {f!r}")
        self.memo[key] = value
        return value

    def attain(self, child, named, anon, counts):
        """Smallest number j of fresh pinned rooms (with some pinnable state
        multiset) making the universal check succeed, or None."""
        for j in range(self.cap + 1):
            for pins in self.pin_multisets(counts, j):
                anon2 = tuple(a + p for a, p in zip(anon, pins))
                if self.universal(child, named, anon2):
                    return j
        return None

    def universal(self, child, named, anon):
        return all(self.eval(child, named, anon, succ)
                   for succ in self.successors(named, anon))


class EvalSession:
    """Pool of evaluators whose memo tables persist across calls.

    Evaluation is pure, so sharing is only a cache; use one session when
    checking many formulas against many worlds (the soundness fuzz does)."""

    def __init__(self):
        self._pool = {}

    def evaluator(self, v, cap, named_rooms):
        key = (v.name, cap, named_rooms)
        ev = self._pool.get(key)
        if ev is None:
            ev = _HotelEval(v, cap, named_rooms)
            self._pool[key] = ev
        return ev


def _context(v, w, f, cap, session=None):
    violation = validate_world(v, w)
    if violation is not None:
        raise ValueError(f"invalid world: {violation}")
    depth = modal_depth(f)
    names = atom_names(f)
    if depth > MODAL_DEPTH_CAP:
        raise CapacityError(f"modal depth {depth} exceeds the cap of {MODAL_DEPTH_CAP}")
    if len(names) > ATOM_COUNT_CAP:
        raise CapacityError(f"{len(names)} atoms exceed the cap of {ATOM_COUNT_CAP}")
    atoms = _classify_atoms(f, v)
    if cap is None:
        exists_atoms = sum(1 for kind in atoms.values() if kind[0] == "exists")
        cap = depth + exists_atoms + 2
    named_rooms = set(w.exceptions)
    for kind in atoms.values():
        if kind[0] == "room":
            named_rooms.add(kind[1])
    named_rooms = tuple(sorted(named_rooms))
    if session is None:
        ev = _HotelEval(v, cap, named_rooms)
    else:
        ev = session.evaluator(v, cap, named_rooms)
    named = tuple(w.exceptions.get(r, w.default) for r in named_rooms)
    anon = (0,) * ev.nstates
    counts = tuple(OMEGA if s == w.default else 0 for s in v.states)
    return ev, named, anon, counts


def hotel_eval(v, w, f, cap=None, session=None):
    """Decide f at world w of the variant's infinite model.

    Returns (verdict, witness); the witness is present only when f itself is
    a ``[.]`` formula that holds, and then records the normalized evidence
    set: all named tracked rooms plus a minimal count of fresh rooms.
    """
    ev, named, anon, counts = _context(v, w, f, cap, session)
    if isinstance(f, AttainKnow):
        j = ev.attain(f.child, named, anon, counts)
        if j is None:
            return False, None
        return True, EvidenceWitness(frozenset(ev.named_rooms), j)
    return ev.eval(f, named, anon, counts), None


def confirm_witness(v, w, f, witness, cap=None):
    """Re-run the inner universal check of ``[.]`` with exactly the witness's
    evidence set (tracked rooms plus fresh_count fresh rooms)."""
    if not isinstance(f, AttainKnow):
        raise ValueError("witnesses only accompany [.] formulas")
    ev, named, anon, counts = _context(v, w, f, cap)
    if frozenset(ev.named_rooms) != witness.tracked:
        raise ValueError("witness tracked set does not match the world/formula")
    for pins in ev.pin_multisets(counts, witness.fresh_count):
        anon2 = tuple(a + p for a, p in zip(anon, pins))
        if ev.universal(f.child, named, anon2):
            return True
    return False


# ---------- the two bundled counterexamples ----------

@dataclass(frozen=True)
class CounterexampleReport:
    name: str
    variant: str
    world: str
    formula: str
    verdict: bool
    parts: Tuple[Tuple[str, bool], ...]

    def to_dict(self):
        return {
            "name": self.name,
            "variant": self.variant,
            "world": self.world,
            "formula": self.formula,
            "verdict": self.verdict,
            "parts": [{"formula": t, "verdict": v} for t, v in self.parts],
        }


_COUNTEREXAMPLES = {
    # Negative introspection !([.]f) -> [.](!([.]f)) fails at the fully
    # occupied variant-I hotel with f = exists_vacant.
    "negative-introspection": (
        VARIANT_I,
        "default=occupied",
        "!([.]exists_vacant) -> [.](!([.]exists_vacant))",
        (
            "exists_vacant",
            "[.]exists_vacant",
            "!([.]exists_vacant)",
            "[.](!([.]exists_vacant))",
            "!([.](!([.]exists_vacant)))",
            "[](!exists_vacant)",
        ),
    ),
    # The weaker f -> (!([.]f) -> [.](!([.]f))) fails at the all-vacant
    # variant-II hotel with f = !exists_occupied: only a bedbug sighting
    # could finitely certify emptiness, and there is none to point at.
    "weak-negative-introspection": (
        VARIANT_II,
        "default=vacant",
        "(!exists_occupied) -> (!([.](!exists_occupied)) -> [.](!([.](!exists_occupied))))",
        (
            "!exists_occupied",
            "[.](!exists_occupied)",
            "!([.](!exists_occupied))",
            "[.](!([.](!exists_occupied)))",
        ),
    ),
}


def counterexample_report(which):
    """Reproduce one of the two bundled counterexamples, with per-subformula
    verdicts recomputed by hotel_eval."""
    if which not in _COUNTEREXAMPLES:
        known = ", ".join(sorted(_COUNTEREXAMPLES))
        raise ValueError(f"unknown report {which!r}; known: {known}")
    v, world_text, formula_text, part_texts = _COUNTEREXAMPLES[which]
    w = parse_world_literal(world_text)
    parts = []
    for text in part_texts:
        verdict, _ = hotel_eval(v, w, parse(text))
        parts.append((text, verdict))
    verdict, _ = hotel_eval(v, w, parse(formula_text))
    return CounterexampleReport(
        name=which,
        variant=v.name,
        world=world_text,
        formula=formula_text,
        verdict=verdict,
        parts=tuple(parts),
    )
