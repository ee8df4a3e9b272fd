"""Finite Kripke models with evidence, and exact satisfaction checking.

A model is a finite world set, a finite evidence set where each piece of
evidence carries a partition of the worlds (its indistinguishability classes),
and a valuation.  ``[.]f`` holds at w when truth of f over some
finite-evidence indistinguishability class of w is guaranteed; since the
whole evidence set is finite here, the evaluator enumerates *all* subsets of
it.  ``[]f`` uses the full evidence set.  On finite models the two collapse;
keeping the honest subset enumeration is what lets the test suite observe
that collapse rather than assume it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List

from .formulas import Atom, AttainKnow, Implies, Know, Not

__all__ = [
    "FiniteEvidenceModel",
    "validate_model",
    "indist",
    "satisfies",
    "extension",
    "model_from_json",
    "model_to_json",
]


@dataclass
class FiniteEvidenceModel:
    worlds: List[str]
    evidence: Dict[str, List[List[str]]]  # evidence id -> partition blocks
    valuation: Dict[str, List[str]]       # atom name -> worlds where true
    _ev: object = field(default=None, init=False, repr=False, compare=False)

    def evaluator(self):
        if self._ev is None:
            self._ev = _Evaluator(self)
        return self._ev


def validate_model(m):
    """Return a list of violation descriptions; empty means the model is valid."""
    violations = []
    if not m.worlds:
        violations.append("world set is empty")
    seen = set()
    for w in m.worlds:
        if w in seen:
            violations.append(f"duplicate world id {w!r}")
        seen.add(w)
    world_set = set(m.worlds)
    for eid, blocks in m.evidence.items():
        covered = set()
        for blk in blocks:
            if not blk:
                violations.append(f"evidence {eid!r} has an empty block")
            for w in blk:
                if w not in world_set:
                    violations.append(f"evidence {eid!r} mentions unknown world {w!r}")
                elif w in covered:
                    violations.append(f"evidence {eid!r}: world {w!r} occurs in two blocks")
                covered.add(w)
        missing = world_set - covered
        if missing:
            names = ", ".join(sorted(missing))
            violations.append(f"evidence {eid!r} does not cover worlds {{{names}}}")
    for atom, ws in m.valuation.items():
        for w in ws:
            if w not in world_set:
                violations.append(f"valuation of {atom!r} mentions unknown world {w!r}")
    return violations


class _Evaluator:
    """Bitmask evaluation over a validated model, memoized per formula."""

    def __init__(self, m):
        violations = validate_model(m)
        if violations:
            raise ValueError("invalid model: " + "; ".join(violations))
        self.model = m
        self.index = {w: i for i, w in enumerate(m.worlds)}
        n = len(m.worlds)
        self.full = (1 << n) - 1
        # per evidence id: per world, mask of its block
        self.block_mask = {}
        for eid, blocks in m.evidence.items():
            per_world = [0] * n
            for blk in blocks:
                mask = 0
                for w in blk:
                    mask |= 1 << self.index[w]
                for w in blk:
                    per_world[self.index[w]] = mask
            self.block_mask[eid] = per_world
        self.evidence_ids = tuple(m.evidence)
        self.atom_mask = {}
        for atom, ws in m.valuation.items():
            mask = 0
            for w in ws:
                mask |= 1 << self.index[w]
            self.atom_mask[atom] = mask
        self._class_cache = {}
        self._ext_cache = {}

    def class_masks(self, eids):
        """Per-world masks of the common refinement over the given evidence ids."""
        key = frozenset(eids)
        cached = self._class_cache.get(key)
        if cached is not None:
            return cached
        n = len(self.model.worlds)
        masks = [self.full] * n
        for eid in key:
            per_world = self.block_mask.get(eid)
            if per_world is None:
                raise KeyError(f"unknown evidence id {eid!r}")
            masks = [a & b for a, b in zip(masks, per_world)]
        masks = tuple(masks)
        self._class_cache[key] = masks
        return masks

    def extension_mask(self, f):
        cached = self._ext_cache.get(f)
        if cached is not None:
            return cached
        if isinstance(f, Atom):
            mask = self.atom_mask.get(f.name, 0)
        elif isinstance(f, Not):
            mask = self.full & ~self.extension_mask(f.child)
        elif isinstance(f, Implies):
            mask = (self.full & ~self.extension_mask(f.left)) | self.extension_mask(f.right)
        elif isinstance(f, Know):
            child = self.extension_mask(f.child)
            classes = self.class_masks(self.evidence_ids)
            mask = 0
            for i, cls in enumerate(classes):
                if cls & ~child == 0:
                    mask |= 1 << i
        elif isinstance(f, AttainKnow):
            child = self.extension_mask(f.child)
            mask = 0
            eids = self.evidence_ids
            for bits in range(1 << len(eids)):
                subset = [eids[k] for k in range(len(eids)) if bits >> k & 1]
                classes = self.class_masks(subset)
                for i, cls in enumerate(classes):
                    if cls & ~child == 0:
                        mask |= 1 << i
        else:
            raise TypeError(f"not a formula: {f!r}")
        self._ext_cache[f] = mask
        return mask


def indist(m, evidence_ids):
    """Common refinement of the partitions for the given evidence ids.

    The empty set yields the one-block partition.  Blocks and their members
    come out in `worlds` order.
    """
    ev = m.evaluator()
    masks = ev.class_masks(evidence_ids)
    blocks = []
    seen = set()
    for i, w in enumerate(m.worlds):
        mask = masks[i]
        if mask not in seen:
            seen.add(mask)
            blocks.append([u for j, u in enumerate(m.worlds) if mask >> j & 1])
    return blocks


def satisfies(m, w, f):
    """Truth of f at world w of m."""
    ev = m.evaluator()
    if w not in ev.index:
        raise KeyError(f"unknown world id {w!r}")
    return bool(ev.extension_mask(f) >> ev.index[w] & 1)


def extension(m, f):
    """The set of worlds of m where f holds, in `worlds` order."""
    ev = m.evaluator()
    mask = ev.extension_mask(f)
    return [w for i, w in enumerate(m.worlds) if mask >> i & 1]


def model_from_json(text):
    """Read a model document: {"worlds": [...], "evidence": {...}, "valuation": {...}}."""
    doc = json.loads(text)
    for key in ("worlds", "evidence", "valuation"):
        if key not in doc:
            raise ValueError(f"model document lacks {key!r}")
    return FiniteEvidenceModel(
        worlds=list(doc["worlds"]),
        evidence={eid: [list(blk) for blk in blocks]
                  for eid, blocks in doc["evidence"].items()},
        valuation={atom: list(ws) for atom, ws in doc["valuation"].items()},
    )


def model_to_json(m):
    return json.dumps(
        {"worlds": m.worlds, "evidence": m.evidence, "valuation": m.valuation},
        indent=2, sort_keys=True) + "\n"
