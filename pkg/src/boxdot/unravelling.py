"""Labeled-sequence machinery from the canonical-model unravelling.

Sequences alternate node labels and edge labels, (X0, e1, X1, ..., en, Xn);
an edge label is either the marker STAR or a finite set of previously built
sequences.  Node labels are opaque here: only the combinatorial layer is
modeled, so its properties (the indistinguishability relation being an
equivalence, well-foundedness of edge references) can be tested directly.

Universes are built generation by generation: a new sequence may only
reference sequences that already exist, and never the sequence it extends,
so no sequence can end up inside its own edge labels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Tuple

__all__ = [
    "STAR",
    "LabeledSequence",
    "SequenceUniverse",
    "GenerationViolation",
    "head",
    "sim",
    "sim_witnesses",
    "random_universe",
    "universe_report",
    "UniverseReport",
]


class _Star:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "*"


STAR = _Star()


class GenerationViolation(ValueError):
    """An edge tried to reference the extended sequence itself or a sequence
    outside the universe."""


@dataclass(frozen=True)
class LabeledSequence:
    nodes: Tuple[str, ...]
    edges: Tuple[object, ...]  # each STAR or frozenset[LabeledSequence]

    def __repr__(self):
        parts = [self.nodes[0]]
        for edge, node in zip(self.edges, self.nodes[1:]):
            parts.append("*" if edge is STAR else f"{{{len(edge)} seqs}}")
            parts.append(node)
        return "(" + ", ".join(parts) + ")"


class SequenceUniverse:
    """Generational registry of labeled sequences."""

    def __init__(self):
        self.generations = [[]]
        self._gen_of = {}

    def add_root(self, label):
        seq = LabeledSequence((label,), ())
        if seq not in self._gen_of:
            self.generations[0].append(seq)
            self._gen_of[seq] = 0
        return seq

    def generation_of(self, seq):
        return self._gen_of[seq]

    def sequences(self):
        return [s for gen in self.generations for s in gen]

    def __len__(self):
        return len(self._gen_of)

    def concat(self, w, edge, label):
        """Extend w by one (edge, label) pair and register the result in the
        generation after its last dependency."""
        if w not in self._gen_of:
            raise GenerationViolation("base sequence is not in this universe")
        if edge is STAR:
            members = None
            gen = self._gen_of[w] + 1
        else:
            members = frozenset(edge)
            for member in members:
                if member not in self._gen_of:
                    raise GenerationViolation("edge references a sequence outside the universe")
            if w in members:
                raise GenerationViolation(
                    "edge may not reference the sequence being extended")
            deps = [self._gen_of[w]] + [self._gen_of[m] for m in members]
            gen = max(deps) + 1
        seq = LabeledSequence(w.nodes + (label,),
                              w.edges + (STAR if members is None else members,))
        existing = self._gen_of.get(seq)
        if existing is not None:
            return seq
        while len(self.generations) <= gen:
            self.generations.append([])
        self.generations[gen].append(seq)
        self._gen_of[seq] = gen
        return seq


def head(w):
    """Last node label of a sequence."""
    return w.nodes[-1]


def _ok_suffix_len(w, e):
    """Longest suffix of w's edges in which every edge is STAR or contains e."""
    count = 0
    for edge in reversed(w.edges):
        if edge is STAR or e in edge:
            count += 1
        else:
            break
    return count


def _common_prefix(w, u):
    """Largest k with equal nodes up to index k and equal edges before it,
    or -1 when even the first nodes differ."""
    if w.nodes[0] != u.nodes[0]:
        return -1
    k = 0
    limit = min(len(w.edges), len(u.edges))
    while k < limit and w.edges[k] == u.edges[k] and w.nodes[k + 1] == u.nodes[k + 1]:
        k += 1
    return k


def sim_witnesses(w, u, e):
    """All deviation indices k witnessing that w and u are e-indistinguishable.

    A witness k requires a shared prefix of nodes and edges through k and,
    past k on both sides, every edge to be STAR or to contain e.  The valid
    k form the interval [max deviation forced by the tails, common prefix].
    """
    lcp = _common_prefix(w, u)
    if lcp < 0:
        return range(0)
    lo = max(len(w.edges) - _ok_suffix_len(w, e),
             len(u.edges) - _ok_suffix_len(u, e),
             0)
    return range(lo, lcp + 1)


def sim(w, u, e):
    """Definition of ~e on sequences: indistinguishable after examining e."""
    return len(sim_witnesses(w, u, e)) > 0


# ---------- random universes and their property report ----------

_LABELS = "ABCDEF"


def random_universe(seed, size):
    """Seeded random universe with `size` sequences."""
    if size < 1:
        raise ValueError("size must be >= 1")
    rng = random.Random(seed)
    uni = SequenceUniverse()
    for _ in range(rng.randint(1, min(3, size))):
        uni.add_root(rng.choice(_LABELS))
    while len(uni) < size:
        seqs = uni.sequences()
        w = rng.choice(seqs)
        if rng.random() < 0.5:
            edge = STAR
        else:
            candidates = [s for s in seqs if s != w]
            if not candidates:
                edge = STAR
            else:
                edge = rng.sample(candidates, rng.randint(1, min(3, len(candidates))))
        uni.concat(w, edge, rng.choice(_LABELS))
    return uni


@dataclass(frozen=True)
class UniverseReport:
    sequences: int
    reflexive: bool
    symmetric: bool
    transitive: bool
    well_founded: bool

    @property
    def all_hold(self):
        return self.reflexive and self.symmetric and self.transitive and self.well_founded

    def to_dict(self):
        return {
            "sequences": self.sequences,
            "reflexive": self.reflexive,
            "symmetric": self.symmetric,
            "transitive": self.transitive,
            "well_founded": self.well_founded,
        }


def universe_report(uni):
    """Exhaustively check, for every e in the universe, that ~e is an
    equivalence relation, and that no sequence occurs in its own edges."""
    seqs = uni.sequences()
    n = len(seqs)
    reflexive = symmetric = transitive = True
    for e in seqs:
        rows = []
        for w in seqs:
            row = 0
            for j, u in enumerate(seqs):
                if sim(w, u, e):
                    row |= 1 << j
            rows.append(row)
        for i in range(n):
            if not rows[i] >> i & 1:
                reflexive = False
            for j in range(n):
                if rows[i] >> j & 1:
                    if not rows[j] >> i & 1:
                        symmetric = False
                    if rows[j] & ~rows[i]:
                        transitive = False
    well_founded = all(
        all(edge is STAR or w not in edge for edge in w.edges)
        for w in seqs
    )
    return UniverseReport(n, reflexive, symmetric, transitive, well_founded)
