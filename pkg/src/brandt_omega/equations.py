"""Solvers for A*X = B and X*A = B in the restricted Brandt subsemigroup.

For B nonzero the solution set is finite and sits inside a single fiber;
the solvers enumerate that fiber.  For B zero the solution set is
cofinite and is returned as a symbolic predicate instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .brandt import (
    BrandtElem,
    BrElem,
    brandt_multiply,
    fiber,
    restricted_universe,
    validate_restricted,
)
from .core import ZERO
from .errors import InvalidElementError
from .families import AtomicFamily


@dataclass(frozen=True)
class FiniteSolutions:
    solutions: tuple[BrandtElem, ...]


@dataclass(frozen=True)
class InfiniteZeroCase:
    """Cofinite solution set of an equation with zero right-hand side."""

    description: str


SolutionSet = FiniteSolutions | InfiniteZeroCase


def solve_left(A: BrElem, B: BrElem, f: AtomicFamily) -> SolutionSet:
    """All X with A*X = B.

    Nonzero B: solutions exist only when rows match and val(B) <= val(A),
    and all lie in the fiber over (col(A), col(B)).
    """
    validate_restricted(A, f)
    validate_restricted(B, f)
    if B is ZERO:
        if A is ZERO:
            return InfiniteZeroCase("every X solves O*X = O")
        return InfiniteZeroCase(f"X = O or row(X) != {A.col}")
    if A is ZERO or A.row != B.row or B.val > A.val:
        return FiniteSolutions(())
    sols = tuple(X for X in fiber(A.col, B.col, f) if brandt_multiply(A, X) == B)
    return FiniteSolutions(sols)


def solve_right(A: BrElem, B: BrElem, f: AtomicFamily) -> SolutionSet:
    """All X with X*A = B; mirror image of solve_left."""
    validate_restricted(A, f)
    validate_restricted(B, f)
    if B is ZERO:
        if A is ZERO:
            return InfiniteZeroCase("every X solves X*O = O")
        return InfiniteZeroCase(f"X = O or col(X) != {A.row}")
    if A is ZERO or A.col != B.col or B.val > A.val:
        return FiniteSolutions(())
    sols = tuple(X for X in fiber(B.row, A.row, f) if brandt_multiply(X, A) == B)
    return FiniteSolutions(sols)


def brute_force_solutions(
    A: BrElem, B: BrElem, side: str, bound: int, f: AtomicFamily
) -> list[BrandtElem]:
    """Oracle: scan every restricted element with coordinates <= bound.

    Complete whenever bound >= max of the four equation coordinates plus
    the largest relevant support element, since solutions live in a fiber
    at known coordinates.
    """
    if side not in ("left", "right"):
        raise InvalidElementError(f"side must be 'left' or 'right', got {side!r}")
    if B is ZERO:
        raise InvalidElementError("the brute-force oracle covers nonzero right-hand sides only")
    validate_restricted(A, f)
    validate_restricted(B, f)
    out = []
    for X in restricted_universe(f, bound):
        if X is ZERO:
            continue
        prod = brandt_multiply(A, X) if side == "left" else brandt_multiply(X, A)
        if prod == B:
            out.append(X)
    return sorted(out)
