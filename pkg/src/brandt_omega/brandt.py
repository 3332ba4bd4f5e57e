"""Brandt extension over the min-semilattice on a support.

Elements are (row, val, col) triples plus an absorbing zero; the product
matches inner indices and meets the values.  The restricted subsemigroup
(val <= row and val <= col) is the image of the core semigroup under the
embedding (i, j, {k}) -> (i+k, k, j+k).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import AtomElem, Elem, ZERO, Zero, elements_upto, multiply, validate_elem
from .errors import InvalidElementError, NotInImageError, ParseError
from .families import AtomicFamily, SupportSet
from .report import VerificationReport

O = ZERO  # customary name for the zero on the Brandt side; same sentinel


@dataclass(frozen=True, order=True, slots=True)
class BrandtElem:
    row: int
    val: int
    col: int


BrElem = Zero | BrandtElem


@dataclass(frozen=True)
class MinSemilattice:
    """The support under meet(x, y) = min(x, y)."""

    support: SupportSet

    def meet(self, x: int, y: int) -> int:
        if x not in self.support or y not in self.support:
            raise InvalidElementError("meet arguments must lie in the support")
        return min(x, y)


def brandt_multiply(a: BrElem, b: BrElem, meet: Callable[[int, int], int] = min) -> BrElem:
    """Index-matching product; generic in the value semilattice.

    The kernel never consults the index set, so any hashable indices work;
    the default meet is min.
    """
    if a is ZERO or b is ZERO:
        return ZERO
    if a.col != b.row:
        return ZERO
    return BrandtElem(a.row, meet(a.val, b.val), b.col)


def brandt_invert(e: BrElem) -> BrElem:
    if e is ZERO:
        return ZERO
    return BrandtElem(e.col, e.val, e.row)


def brandt_is_idempotent(e: BrElem) -> bool:
    return e is ZERO or e.row == e.col


def in_restricted(e: BrElem, f: AtomicFamily) -> bool:
    """Membership in the restricted subsemigroup.

    Closed form for "some (i, j, {k}) maps onto e": val in support and
    val <= row and val <= col.
    """
    if e is ZERO:
        return True
    return f.contains_atom(e.val) and e.val <= e.row and e.val <= e.col


def validate_restricted(e: BrElem, f: AtomicFamily) -> None:
    if not in_restricted(e, f):
        raise NotInImageError(f"{format_brandt(e)} is not in the restricted subsemigroup")


def fiber(row: int, col: int, f: AtomicFamily) -> list[BrandtElem]:
    """All restricted elements with the given row and column, sorted by value."""
    return [BrandtElem(row, k, col) for k in f.support.upto(min(row, col))]


def embed(x: Elem, f: AtomicFamily) -> BrElem:
    """(i, j, {k}) -> (i+k, k, j+k); zero to zero."""
    validate_elem(x, f)
    if x is ZERO:
        return ZERO
    return BrandtElem(x.i + x.k, x.k, x.j + x.k)


def embed_inverse(e: BrElem, f: AtomicFamily) -> Elem:
    """(row, val, col) -> (row-val, col-val, {val}); two-sided inverse of embed."""
    validate_restricted(e, f)
    if e is ZERO:
        return ZERO
    return AtomElem(e.row - e.val, e.col - e.val, e.val)


def restricted_universe(f: AtomicFamily, bound: int) -> list[BrElem]:
    """The zero plus every restricted element with row, col <= bound, sorted."""
    out: list[BrElem] = [ZERO]
    for row in range(bound + 1):
        triples = []
        for col in range(bound + 1):
            for k in f.support.upto(min(row, col)):
                triples.append(BrandtElem(row, k, col))
        triples.sort()
        out.extend(triples)
    return out


def verify_embedding_homomorphism(f: AtomicFamily, bound: int) -> VerificationReport:
    """Sweep all pairs with coordinates <= bound: the embedding preserves
    products and is injective on the swept universe."""
    univ = elements_upto(f, bound)
    images = {x: embed(x, f) for x in univ}
    seen: dict[BrElem, Elem] = {}
    for x in univ:
        y = images[x]
        if y in seen:
            return VerificationReport(False, 0, (seen[y], x), note="embedding not injective")
        seen[y] = x
    checked = 0
    for x in univ:
        for y in univ:
            if embed(multiply(x, y, f), f) != brandt_multiply(images[x], images[y]):
                return VerificationReport(False, checked, (x, y), note="embedding not a homomorphism")
            checked += 1
    return VerificationReport(True, checked, note=f"injective homomorphism on {len(univ)} elements")


def verify_restricted_closed(f: AtomicFamily, bound: int) -> VerificationReport:
    """Sweep all restricted pairs with coordinates <= bound: products stay
    in the restricted subsemigroup."""
    univ = restricted_universe(f, bound)
    checked = 0
    for a in univ:
        for b in univ:
            if not in_restricted(brandt_multiply(a, b), f):
                return VerificationReport(False, checked, (a, b), note="product left the restricted set")
            checked += 1
    return VerificationReport(True, checked, note=f"closed under products on {len(univ)} elements")


def brandt_sort_key(e: BrElem) -> tuple[int, int, int, int]:
    if e is ZERO:
        return (0, 0, 0, 0)
    return (1, e.row, e.val, e.col)


# --- text and JSON forms ------------------------------------------------

def format_brandt(e: BrElem) -> str:
    if e is ZERO:
        return "O"
    return f"({e.row};{e.val};{e.col})"


def parse_brandt(text: str) -> BrElem:
    s = "".join(text.split())
    if s == "O":
        return ZERO
    if s.startswith("(") and s.endswith(")"):
        parts = s[1:-1].split(";")
        if len(parts) == 3 and all(p.isdigit() for p in parts):
            return BrandtElem(*(int(p) for p in parts))
    raise ParseError(f"bad Brandt element: {text!r}")


def brandt_to_json(e: BrElem) -> dict:
    if e is ZERO:
        return {"O": True}
    return {"row": e.row, "val": e.val, "col": e.col}


def brandt_from_json(obj: dict) -> BrElem:
    if obj.get("O"):
        return ZERO
    try:
        return BrandtElem(int(obj["row"]), int(obj["val"]), int(obj["col"]))
    except (KeyError, TypeError) as e:
        raise ParseError(f"bad Brandt element object: {obj!r}") from e
