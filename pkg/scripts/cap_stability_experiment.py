#!/usr/bin/env python3
"""Sweep the hotel evaluator's abstraction cap and report verdict stability.

The symbolic evaluator saturates untracked-room counts at a cap b; the
default b0 = modal_depth + #exists-atoms + 2 is validated empirically by
checking that verdicts do not change for b0..b0+extra on random pairs.
A cap-unstable verdict is an evaluator bug.
"""

import argparse
import random
import sys

from boxdot.formulas import atom_names, modal_depth, substitute
from boxdot.fuzz import HOTEL_ATOMS, derive_seed, random_formula
from boxdot.hotel import VARIANT_I, VARIANT_II, EvalSession, HotelWorld, format_world, hotel_eval


def random_world(rng, variant):
    if variant.name == "II" and rng.random() < 0.4:
        states = ("vacant", "infested")
    else:
        states = ("occupied", "vacant")
    default = rng.choice(states)
    exceptions = {room: rng.choice([s for s in states if s != default])
                  for room in rng.sample(range(9), rng.randint(0, 3))}
    return HotelWorld(default, exceptions)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--pairs", type=int, default=500)
    ap.add_argument("--extra", type=int, default=3, help="caps b0..b0+extra")
    args = ap.parse_args()

    unstable = 0
    for variant in (VARIANT_I, VARIANT_II):
        session = EvalSession()
        for i in range(args.pairs):
            rng = random.Random(derive_seed(args.seed, variant.name, i))
            w = random_world(rng, variant)
            f = substitute(random_formula(rng, 3), HOTEL_ATOMS[variant.name])
            b0 = (modal_depth(f)
                  + sum(1 for a in atom_names(f) if a.startswith("exists_")) + 2)
            verdicts = [hotel_eval(variant, w, f, cap=b0 + k, session=session)[0]
                        for k in range(args.extra + 1)]
            if len(set(verdicts)) != 1:
                unstable += 1
                print(f"UNSTABLE variant {variant.name}: {f} at {format_world(w)} "
                      f"-> {verdicts}")
        print(f"variant {variant.name}: {args.pairs} pairs checked")
    print(f"unstable verdicts: {unstable}")
    return 0 if unstable == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
