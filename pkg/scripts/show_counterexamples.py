#!/usr/bin/env python3
"""Print the two bundled Grand Hotel counterexamples with sub-verdicts.

Negative introspection for attainable knowledge fails at the fully occupied
variant-I hotel; its weaker guarded form fails at the all-vacant variant-II
hotel, where only a bedbug sighting could finitely certify emptiness.
"""

from boxdot.hotel import counterexample_report

for name in ("negative-introspection", "weak-negative-introspection"):
    r = counterexample_report(name)
    print(f"{r.name}  (variant {r.variant}, world: {r.world})")
    for text, verdict in r.parts:
        print(f"    {text:<45} {str(verdict).lower()}")
    print(f"    {r.formula:<45} {str(r.verdict).lower()}")
    print()
