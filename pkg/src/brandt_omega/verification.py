"""Brute-force oracle layer: bounded universes and exhaustive checks.

Products may leave the bounded window; they are still closed-form elements
and are compared exactly, so no boundary truncation is applied.  Sweeps
run in lexicographic order and report the first counterexample, which
keeps failures reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .brandt import (
    brandt_invert,
    brandt_is_idempotent,
    brandt_multiply,
    restricted_universe,
)
from .core import (
    AtomElem,
    Elem,
    ZERO,
    _mul,
    census_atoms,
    elements_upto,
    invert,
    is_idempotent,
    maximal_chain_down,
    nat_leq,
    nat_leq_definitional,
)
from .errors import InvalidElementError, NotTranslateEquivalentError
from .families import AtomicFamily, are_translate_equivalent
from .report import VerificationReport

ATOMS = "atoms"
BRANDT = "brandt"


@dataclass(frozen=True)
class BoundedUniverse:
    """All elements with coordinates <= bound, plus the zero."""

    family: AtomicFamily
    bound: int
    kind: str
    elements: tuple

    @classmethod
    def atoms(cls, family: AtomicFamily, bound: int) -> "BoundedUniverse":
        return cls(family, bound, ATOMS, tuple(elements_upto(family, bound)))

    @classmethod
    def brandt(cls, family: AtomicFamily, bound: int) -> "BoundedUniverse":
        return cls(family, bound, BRANDT, tuple(restricted_universe(family, bound)))

    def expected_size(self) -> int:
        """Closed-form cardinality; must match len(elements) exactly."""
        b = self.bound
        sup = self.family.support
        if self.kind == ATOMS:
            return 1 + (b + 1) ** 2 * len(sup.upto(b))
        return 1 + sum(
            len(sup.upto(min(r, c))) for r in range(b + 1) for c in range(b + 1)
        )

    def product(self) -> Callable:
        if self.kind == ATOMS:
            return _mul
        return brandt_multiply

    def invert(self) -> Callable:
        if self.kind == ATOMS:
            return invert
        return brandt_invert

    def idempotent(self) -> Callable:
        if self.kind == ATOMS:
            return is_idempotent
        return brandt_is_idempotent


def _memoized(product: Callable) -> Callable:
    table: dict = {}

    def mul(a, b):
        key = (a, b)
        r = table.get(key)
        if r is None:
            r = product(a, b)
            table[key] = r
        return r

    return mul


def check_associativity(
    universe: BoundedUniverse, product: Callable | None = None
) -> VerificationReport:
    """(a*b)*c == a*(b*c) for every triple; exact equality.

    An alternative product can be injected to sanity-check the harness
    itself against a deliberately corrupted operation.
    """
    mul = _memoized(product if product is not None else universe.product())
    elems = universe.elements
    checked = 0
    for a in elems:
        for b in elems:
            ab = mul(a, b)
            for c in elems:
                if mul(ab, c) != mul(a, mul(b, c)):
                    return VerificationReport(
                        False, checked, (a, b, c), note="associativity failed"
                    )
                checked += 1
    return VerificationReport(True, checked, note=f"{len(elems)} elements, bound={universe.bound}")


def check_inverse_axioms(universe: BoundedUniverse) -> VerificationReport:
    """x x^-1 x == x and x^-1 x x^-1 == x^-1 everywhere; idempotents commute."""
    mul = universe.product()
    inv = universe.invert()
    idem = universe.idempotent()
    checked = 0
    for x in universe.elements:
        xi = inv(x)
        if mul(mul(x, xi), x) != x or mul(mul(xi, x), xi) != xi:
            return VerificationReport(False, checked, (x,), note="inverse axiom failed")
        checked += 1
    idems = [x for x in universe.elements if idem(x)]
    for e in idems:
        for g in idems:
            if mul(e, g) != mul(g, e):
                return VerificationReport(False, checked, (e, g), note="idempotents do not commute")
            checked += 1
    return VerificationReport(
        True, checked, note=f"{len(universe.elements)} elements, {len(idems)} idempotents"
    )


def _require_atoms(universe: BoundedUniverse) -> None:
    if universe.kind != ATOMS:
        raise InvalidElementError("this check runs on the pair-with-atom universe")


def check_order_equivalence(universe: BoundedUniverse) -> VerificationReport:
    """The coordinate criterion agrees with the idempotent-witness order."""
    _require_atoms(universe)
    f = universe.family
    checked = 0
    for x in universe.elements:
        for y in universe.elements:
            if nat_leq(x, y) != nat_leq_definitional(x, y, f):
                return VerificationReport(False, checked, (x, y), note="order criteria disagree")
            checked += 1
    return VerificationReport(True, checked, note=f"bound={universe.bound}")


def check_chain_structure(universe: BoundedUniverse) -> VerificationReport:
    """Chains from every nonzero element: length, adjacency, and maximality.

    Length must be index(atom)+2; every adjacent pair must satisfy the
    order criterion with nothing from the universe strictly between.  Note
    that links carry cumulative coordinate shifts (i + k_top - k_m); links
    shifted per-step instead would fail the order criterion between
    consecutive entries.
    """
    _require_atoms(universe)
    f = universe.family
    note = (
        "links use cumulative shifts; per-step shifts fail the order criterion "
        "between consecutive links"
    )
    checked = 0
    for x in universe.elements:
        if x is ZERO:
            continue
        chain = maximal_chain_down(x, f)
        if len(chain) != f.support.index_of(x.k) + 2 or chain[-1] is not ZERO:
            return VerificationReport(False, checked, (x,), note="chain length mismatch")
        for hi, lo in zip(chain, chain[1:]):
            if not (nat_leq(lo, hi) and lo != hi):
                return VerificationReport(False, checked, (hi, lo), note="adjacent link not below")
            for z in universe.elements:
                if z != hi and z != lo and nat_leq(lo, z) and nat_leq(z, hi):
                    return VerificationReport(
                        False, checked, (lo, z, hi), note="element strictly between chain links"
                    )
            checked += 1
    return VerificationReport(True, checked, note=note)


def check_isomorphism_transport(
    f1: AtomicFamily, f2: AtomicFamily, bound: int
) -> VerificationReport:
    """Verify the translate-induced map is an injective homomorphism.

    The map subtracts the translate offset from all three entries.  When
    the offset is positive it is undefined on elements with small
    coordinates; such pairs are skipped and counted in the note.
    """
    n = are_translate_equivalent(f1, f2)
    if n is None:
        raise NotTranslateEquivalentError(
            f"supports {f1.support} and {f2.support} are not translates"
        )

    def transport(x: Elem) -> Elem | None:
        if x is ZERO:
            return ZERO
        if x.i - n < 0 or x.j - n < 0:
            return None
        return AtomElem(x.i - n, x.j - n, x.k - n)

    univ = elements_upto(f1, bound)
    images = {}
    for x in univ:
        tx = transport(x)
        if tx is None:
            continue
        if tx in images:
            return VerificationReport(False, 0, (images[tx], x), note="transport not injective")
        images[tx] = x
    checked = 0
    skipped = 0
    for x in univ:
        for y in univ:
            tx, ty = transport(x), transport(y)
            if tx is None or ty is None:
                skipped += 1
                continue
            txy = transport(_mul(x, y))
            if _mul(tx, ty) != txy:
                return VerificationReport(False, checked, (x, y), note="transport not a homomorphism")
            checked += 1
    return VerificationReport(
        True, checked, note=f"offset n={n}, skipped {skipped} pairs outside the map's domain"
    )


def _windowed_census(f: AtomicFamily, width: int, atoms_bound: int) -> dict[int, int]:
    # per-idempotent tally over a coordinate window of the given width
    counts: dict[int, int] = {}
    for k in census_atoms(f, atoms_bound):
        length = f.support.index_of(k) + 2
        counts[length] = counts.get(length, 0) + width
    return counts


def maximal_chain_census(f: AtomicFamily, bound: int) -> dict[int, int]:
    """Count maximal idempotent chains by length, tops at coordinate <= bound.

    A chain topped at (i, i, {k}) is maximal iff no larger support element
    lies within i of k; that count is the gap to the successor, capped by
    the window.  This tally separates non-translate-equivalent supports.
    """
    counts: dict[int, int] = {}
    for k in census_atoms(f, bound):
        length = f.support.index_of(k) + 2
        succ = f.support.successor(k)
        tops = bound + 1 if succ is None else min(bound + 1, succ - k)
        counts[length] = counts.get(length, 0) + tops
    return dict(sorted(counts.items()))


def check_chain_census_invariance(
    f1: AtomicFamily, f2: AtomicFamily, bound: int
) -> VerificationReport:
    """Censuses agree across translates and separate non-translates.

    Translate-equivalent supports: the idempotent tallies over windows
    [0, bound] and [offset, bound+offset] coincide.  Otherwise the maximal
    chain censuses at equal bounds must diverge at some length (guaranteed
    for large enough bound when both supports are finite explicit).
    """
    n = are_translate_equivalent(f1, f2)
    if n is not None:
        # the induced map shifts coordinates by n, so the f1 window [0, bound]
        # corresponds to an f2 window of the same width starting at -n (or the
        # mirror image when n > 0); widths and atom enumerations match
        c1 = _windowed_census(f1, bound + 1, bound)
        c2 = _windowed_census(f2, bound + 1, bound)
        if c1 != c2:
            length = next(
                L for L in sorted(set(c1) | set(c2)) if c1.get(L, 0) != c2.get(L, 0)
            )
            return VerificationReport(
                False, len(c1), (length, c1.get(length, 0), c2.get(length, 0)),
                note="windowed censuses disagree for translate-equivalent supports",
            )
        return VerificationReport(
            True, len(c1), note=f"translate offset n={n}; shifted-window censuses agree"
        )
    m1 = maximal_chain_census(f1, bound)
    m2 = maximal_chain_census(f2, bound)
    diverging = sorted(L for L in set(m1) | set(m2) if m1.get(L, 0) != m2.get(L, 0))
    if diverging:
        L = diverging[0]
        return VerificationReport(
            True,
            len(m1) + len(m2),
            note=f"not translates; maximal chain censuses diverge at length {L}: "
            f"{m1.get(L, 0)} vs {m2.get(L, 0)}",
        )
    return VerificationReport(
        False,
        len(m1) + len(m2),
        (m1, m2),
        note="not translates, but no census divergence up to this bound; increase it",
    )
