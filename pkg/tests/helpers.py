"""Shared test utilities: an independent truth-table oracle, random formula
generation, and single-node formula mutation."""

import itertools
import random

from boxdot.formulas import Atom, AttainKnow, Formula, Implies, Know, Not
from boxdot.proofs import Derivation, ProofStep


def opaque_letters(f):
    """Letters of the propositional skeleton, computed independently of the
    kernel: atoms and maximal modal subformulas, via explicit stack walk."""
    letters = []
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, (Atom, AttainKnow, Know)):
            if g not in letters:
                letters.append(g)
        elif isinstance(g, Not):
            stack.append(g.child)
        elif isinstance(g, Implies):
            stack.append(g.right)
            stack.append(g.left)
    return letters


def brute_force_tautology(f):
    """Truth-table check written without reusing the kernel's evaluator."""
    letters = opaque_letters(f)

    def truth(g, env):
        if isinstance(g, (Atom, AttainKnow, Know)):
            return env[g]
        if isinstance(g, Not):
            return not truth(g.child, env)
        return truth(g.right, env) if truth(g.left, env) else True

    for values in itertools.product((False, True), repeat=len(letters)):
        if not truth(f, dict(zip(letters, values))):
            return False
    return True


def skeleton_truth(f, env):
    """Truth of f's skeleton under env (letter -> bool); independent oracle."""
    if isinstance(f, (Atom, AttainKnow, Know)):
        return env[f]
    if isinstance(f, Not):
        return not skeleton_truth(f.child, env)
    return skeleton_truth(f.right, env) if skeleton_truth(f.left, env) else True


def random_core_formula(rng, depth, atoms=("p", "q", "r", "s")):
    if depth <= 0 or rng.random() < 0.3:
        return Atom(rng.choice(atoms))
    r = rng.random()
    if r < 0.4:
        return Implies(random_core_formula(rng, depth - 1, atoms),
                       random_core_formula(rng, depth - 1, atoms))
    if r < 0.6:
        return Not(random_core_formula(rng, depth - 1, atoms))
    if r < 0.8:
        return AttainKnow(random_core_formula(rng, depth - 1, atoms))
    return Know(random_core_formula(rng, depth - 1, atoms))


# ---------- single-node mutation ----------

def _node_count(f):
    if isinstance(f, Atom):
        return 1
    if isinstance(f, Implies):
        return 1 + _node_count(f.left) + _node_count(f.right)
    return 1 + _node_count(f.child)


def _replace_node(f, pos, rng):
    """Rebuild f with the node at preorder index pos perturbed."""
    if pos == 0:
        return _perturb(f, rng)
    if isinstance(f, (Not, AttainKnow, Know)):
        return type(f)(_replace_node(f.child, pos - 1, rng))
    left_size = _node_count(f.left)
    if pos - 1 < left_size:
        return Implies(_replace_node(f.left, pos - 1, rng), f.right)
    return Implies(f.left, _replace_node(f.right, pos - 1 - left_size, rng))


def _perturb(f, rng):
    """Change one node while keeping a well-formed formula."""
    choices = []
    if isinstance(f, Atom):
        others = [a for a in ("p", "q", "r", "s", "t") if a != f.name]
        choices.append(Atom(rng.choice(others)))
        choices.append(Not(f))
    else:
        choices.append(Not(f))
        choices.append(Atom("p"))
        if isinstance(f, (Not, AttainKnow, Know)):
            choices.append(f.child)  # drop the operator
            for ctor in (Not, AttainKnow, Know):
                if ctor is not type(f):
                    choices.append(ctor(f.child))
        if isinstance(f, Implies):
            choices.append(Implies(f.right, f.left))  # swap sides
            choices.append(f.left)
            choices.append(f.right)
    mutated = rng.choice(choices)
    return mutated if mutated != f else Not(f)


def mutate_formula(f, rng):
    """Return f with a single randomly chosen node changed."""
    pos = rng.randrange(_node_count(f))
    mutated = _replace_node(f, pos, rng)
    if mutated == f:  # the perturbation happened to rebuild the same tree
        return Not(f)
    return mutated


def mutate_derivation(d, rng):
    """Flip one node of one randomly chosen step's formula."""
    idx = rng.randrange(len(d.steps))
    step = d.steps[idx]
    mutated = ProofStep(mutate_formula(step.formula, rng), step.justification)
    steps = d.steps[:idx] + (mutated,) + d.steps[idx + 1:]
    return Derivation(d.hypotheses, steps)
