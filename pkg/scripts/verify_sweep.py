#!/usr/bin/env python3
"""Sweep the core verification checks over a grid of supports and bounds.

Usage: python scripts/verify_sweep.py [bound ...]
"""

import sys
import time

from brandt_omega.brandt import verify_embedding_homomorphism, verify_restricted_closed
from brandt_omega.families import AtomicFamily, parse_support
from brandt_omega.verification import (
    BoundedUniverse,
    check_associativity,
    check_inverse_axioms,
    check_order_equivalence,
)

SUPPORTS = ["0", "0,1,3", "2,5", "0,+4", "1,2,+6"]


def main():
    bounds = [int(b) for b in sys.argv[1:]] or [3, 4]
    print(f"{'support':>8}  {'bound':>5}  {'check':<24} {'checked':>10}  {'time':>7}")
    for text in SUPPORTS:
        fam = AtomicFamily(parse_support(text))
        for bound in bounds:
            atoms = BoundedUniverse.atoms(fam, bound)
            checks = [
                ("associativity", lambda: check_associativity(atoms)),
                ("inverse-axioms", lambda: check_inverse_axioms(atoms)),
                ("order-equivalence", lambda: check_order_equivalence(atoms)),
                ("embedding-homomorphism", lambda: verify_embedding_homomorphism(fam, bound)),
                ("restricted-closure", lambda: verify_restricted_closed(fam, bound)),
            ]
            for name, fn in checks:
                start = time.monotonic()
                r = fn()
                dt = time.monotonic() - start
                status = "ok" if r.passed else f"FAIL {r.counterexample}"
                print(f"{text:>8}  {bound:>5}  {name:<24} {r.checked:>10}  {dt:6.2f}s  {status}")


if __name__ == "__main__":
    main()
