#!/usr/bin/env python3
"""Print maximal chains, censuses, and fiber tables for a few supports.

Usage: python scripts/chain_gallery.py [support ...]
"""

import sys

from brandt_omega.core import AtomElem, format_elem, idempotent_chain_census, maximal_chain_down
from brandt_omega.families import AtomicFamily, parse_support
from brandt_omega.topology import isolation_report
from brandt_omega.verification import maximal_chain_census


def main():
    supports = sys.argv[1:] or ["0,1,3", "0,2", "2,3,5", "0,+4"]
    for text in supports:
        fam = AtomicFamily(parse_support(text))
        print(f"== support {text} ==")
        ks = fam.support.upto(max(6, fam.support.minimum + 2))
        for k in ks[:4]:
            chain = maximal_chain_down(AtomElem(0, 0, k), fam)
            print(f"  chain from (0,0,{k}): " + " > ".join(format_elem(e) for e in chain))
        print(f"  idempotent census (bound 6): {idempotent_chain_census(fam, 6)}")
        print(f"  maximal-chain census (bound 6): {maximal_chain_census(fam, 6)}")
        sizes = isolation_report(fam, 4)
        rows = []
        for r in range(5):
            rows.append(" ".join(str(sizes[(r, c)]) for c in range(5)))
        print("  fiber sizes (rows 0..4 x cols 0..4):")
        for line in rows:
            print(f"    {line}")
        print()


if __name__ == "__main__":
    main()
