"""The core inverse semigroup: pairs (i, j) carrying an atom k, plus a zero.

Nonzero elements multiply by the two-case rule on the (i, j) pairs; the
product survives exactly when j1 + k1 == i2 + k2, otherwise it falls into
the zero.  A set-valued variant implements the product over general
families and doubles as the oracle for the singleton case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidElementError, ParseError
from .families import AtomicFamily, GeneralFamily


class Zero:
    """Absorbing zero, a singleton shared by every element kind."""

    __slots__ = ()
    _instance = None

    def __new__(cls) -> "Zero":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"


ZERO = Zero()


@dataclass(frozen=True, order=True, slots=True)
class AtomElem:
    """Nonzero element (i, j, {k}): a pair of naturals and an atom index."""

    i: int
    j: int
    k: int


Elem = Zero | AtomElem


@dataclass(frozen=True, slots=True)
class SetElem:
    """Nonzero element (i, j, F) over a general family; F is never empty."""

    i: int
    j: int
    members: frozenset[int]


GeneralElem = Zero | SetElem


def validate_elem(x: Elem, f: AtomicFamily) -> None:
    if x is ZERO:
        return
    if x.i < 0 or x.j < 0:
        raise InvalidElementError(f"negative coordinate in {x}")
    if not f.contains_atom(x.k):
        raise InvalidElementError(f"atom {x.k} is not in support {f.support}")


def _mul(a: Elem, b: Elem) -> Elem:
    # Unchecked two-case product; the nonzero condition j1+k1 == i2+k2 is
    # the singleton trace of the shifted-intersection formula.
    if a is ZERO or b is ZERO:
        return ZERO
    if a.j + a.k != b.i + b.k:
        return ZERO
    if a.j <= b.i:
        return AtomElem(a.i - a.j + b.i, b.j, b.k)
    return AtomElem(a.i, a.j - b.i + b.j, a.k)


def multiply(a: Elem, b: Elem, f: AtomicFamily) -> Elem:
    validate_elem(a, f)
    validate_elem(b, f)
    return _mul(a, b)


def _validate_general(x: GeneralElem, fam: GeneralFamily) -> None:
    if x is ZERO:
        if frozenset() not in fam:
            raise InvalidElementError("family has no empty member, so no zero")
        return
    if not x.members:
        raise InvalidElementError("empty member set must be the zero")
    if x.members not in fam:
        raise InvalidElementError(f"{set(x.members)} is not a family member")


def multiply_general(a: GeneralElem, b: GeneralElem, fam: GeneralFamily) -> GeneralElem:
    """Set-valued product: the intersection of suitably shifted members.

    Collapses to the zero exactly when the empty set is a family member and
    the resulting set is empty.
    """
    _validate_general(a, fam)
    _validate_general(b, fam)
    if a is ZERO or b is ZERO:
        return ZERO
    if a.j <= b.i:
        shift = a.j - b.i
        third = frozenset(x + shift for x in a.members) & b.members
        i, j = a.i - a.j + b.i, b.j
    else:
        shift = b.i - a.j
        third = a.members & frozenset(x + shift for x in b.members)
        i, j = a.i, a.j - b.i + b.j
    if not third:
        if frozenset() in fam:
            return ZERO
        raise InvalidElementError("product set is empty but the family has no empty member")
    return SetElem(i, j, third)


def invert(x: Elem) -> Elem:
    """(i, j, k) -> (j, i, k); the unique inverse under the product."""
    if x is ZERO:
        return ZERO
    return AtomElem(x.j, x.i, x.k)


def is_idempotent(x: Elem) -> bool:
    return x is ZERO or x.i == x.j


def nat_leq(x: Elem, y: Elem) -> bool:
    """Coordinate criterion for the natural partial order: x below y iff
    k_y - k_x == i_x - i_y == j_x - j_y is a natural."""
    if x is ZERO:
        return True
    if y is ZERO:
        return False
    p = y.k - x.k
    return p >= 0 and x.i - y.i == p and x.j - y.j == p


def nat_leq_definitional(x: Elem, y: Elem, f: AtomicFamily) -> bool:
    """Definitional order: x below y iff y*e == x for some idempotent e.

    Brute-force oracle.  Any nonzero witness (m, m, k') is forced to have
    m == j_x <= max coordinate and k' == j_y + k_y - m, so the search space
    below is provably complete.
    """
    validate_elem(x, f)
    validate_elem(y, f)
    if x is ZERO:
        return True  # e = ZERO
    if y is ZERO:
        return False
    mmax = max(x.i, x.j, y.i, y.j)
    for m in range(mmax + 1):
        for k in f.support.upto(y.j + y.k):
            if _mul(y, AtomElem(m, m, k)) == x:
                return True
    return False


def immediate_predecessors(x: Elem, f: AtomicFamily) -> list[Elem]:
    """The unique element covered by x: step the atom down and the pair up.

    An element over the least atom covers only the zero; the zero covers
    nothing.
    """
    validate_elem(x, f)
    if x is ZERO:
        return []
    below = f.support.predecessor(x.k)
    if below is None:
        return [ZERO]
    p = x.k - below
    return [AtomElem(x.i + p, x.j + p, below)]


def maximal_chain_down(x: Elem, f: AtomicFamily) -> list[Elem]:
    """The descending chain from x through iterated predecessors to the zero.

    Each link steps the atom to the next support element below, adding the
    cumulative difference to both coordinates; the chain has length
    index(k) + 2.
    """
    validate_elem(x, f)
    if x is ZERO:
        raise InvalidElementError("chains start from a nonzero element")
    chain: list[Elem] = [x]
    while chain[-1] is not ZERO:
        (pred,) = immediate_predecessors(chain[-1], f)
        chain.append(pred)
    return chain


def census_atoms(f: AtomicFamily, bound: int) -> list[int]:
    """Atoms entering a census at this bound: the whole support when it is
    finite, the first bound+1 elements otherwise."""
    sup = f.support
    if sup.is_finite:
        return list(sup.explicit)
    return sup.prefix(bound + 1)


def idempotent_chain_census(f: AtomicFamily, bound: int) -> dict[int, int]:
    """Tally chain lengths index(k)+2 over idempotents (i, i, {k}), i <= bound."""
    if bound < 0:
        raise InvalidElementError("bound must be a natural")
    counts: dict[int, int] = {}
    for k in census_atoms(f, bound):
        length = f.support.index_of(k) + 2
        for _ in range(bound + 1):
            counts[length] = counts.get(length, 0) + 1
    return dict(sorted(counts.items()))


def elements_upto(f: AtomicFamily, bound: int) -> list[Elem]:
    """The zero plus every (i, j, k) with i, j <= bound and atom k <= bound."""
    out: list[Elem] = [ZERO]
    ks = f.support.upto(bound)
    for i in range(bound + 1):
        for j in range(bound + 1):
            for k in ks:
                out.append(AtomElem(i, j, k))
    return out


def sort_key(x: Elem) -> tuple[int, int, int, int]:
    if x is ZERO:
        return (0, 0, 0, 0)
    return (1, x.i, x.j, x.k)


# --- text and JSON forms ------------------------------------------------

def format_elem(x: Elem) -> str:
    if x is ZERO:
        return "0"
    return f"({x.i},{x.j},{x.k})"


def parse_elem(text: str) -> Elem:
    s = "".join(text.split())
    if s == "0":
        return ZERO
    if s.startswith("(") and s.endswith(")"):
        parts = s[1:-1].split(",")
        if len(parts) == 3 and all(p.isdigit() for p in parts):
            return AtomElem(*(int(p) for p in parts))
    raise ParseError(f"bad element: {text!r}")


def elem_to_json(x: Elem) -> dict:
    if x is ZERO:
        return {"zero": True}
    return {"i": x.i, "j": x.j, "k": x.k}


def elem_from_json(obj: dict) -> Elem:
    if obj.get("zero"):
        return ZERO
    try:
        return AtomElem(int(obj["i"]), int(obj["j"]), int(obj["k"]))
    except (KeyError, TypeError) as e:
        raise ParseError(f"bad element object: {obj!r}") from e
