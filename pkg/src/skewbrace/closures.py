"""Closure computations inside a skew brace.

Subsets are plain frozensets of 1-based elements; the ambient structure is
passed alongside rather than stored. All closures are worklist fixpoints,
so termination follows from finiteness.
"""

from __future__ import annotations

from itertools import combinations

from .biquandle import Biquandle
from .tables import FiniteGroup, SkewBrace

__all__ = [
    "EmptyGenerators",
    "group_closure",
    "biquandle_closure",
    "ideal_closure",
    "is_ideal",
    "enumerate_ideals",
]

Subset = frozenset[int]

# powerset enumeration of ideals is kept below this carrier size
_POWERSET_LIMIT = 16


class EmptyGenerators(ValueError):
    def __init__(self) -> None:
        super().__init__("closure of the empty set is not defined")


def _require_nonempty(s) -> set[int]:
    out = set(s)
    if not out:
        raise EmptyGenerators()
    return out


def group_closure(group: FiniteGroup, s) -> Subset:
    """Smallest subset containing s closed under the group operation.

    Inverses and the identity come for free in a finite group.
    """
    members = _require_nonempty(s)
    work = list(members)
    while work:
        x = work.pop()
        for y in tuple(members):
            for z in (group.op(x, y), group.op(y, x)):
                if z not in members:
                    members.add(z)
                    work.append(z)
    return frozenset(members)


def biquandle_closure(bq: Biquandle, s) -> Subset:
    """Smallest superset of s closed under the under and over operations."""
    members = _require_nonempty(s)
    work = list(members)
    while work:
        x = work.pop()
        for y in tuple(members):
            for z in (
                bq.under.value(x, y),
                bq.over.value(x, y),
                bq.under.value(y, x),
                bq.over.value(y, x),
            ):
                if z not in members:
                    members.add(z)
                    work.append(z)
    return frozenset(members)


def _ideal_steps(brace: SkewBrace, x: int, members) -> list[int]:
    circ, star = brace.circ, brace.star
    out = []
    for y in tuple(members):
        # y^circ circ x
        out.append(circ.op(circ.inv(y), x))
    for z in range(1, brace.n + 1):
        out.append(star.op(star.op(star.inv(z), x), z))   # z^star star x star z
        out.append(circ.op(circ.op(circ.inv(z), x), z))   # z^circ circ x circ z
        out.append(star.op(star.inv(z), circ.op(z, x)))   # z^star star (z circ x)
    return out


def ideal_closure(brace: SkewBrace, s) -> Subset:
    """Smallest superset of s satisfying the four ideal closure conditions.

    Always contains the identity, since y^circ circ y = e.
    """
    members = _require_nonempty(s)
    work = list(members)
    while work:
        x = work.pop()
        for z in _ideal_steps(brace, x, members):
            if z not in members:
                members.add(z)
                work.append(z)
        # condition one pairs new members with x as the y argument too
        for y in tuple(members):
            z = brace.circ.op(brace.circ.inv(x), y)
            if z not in members:
                members.add(z)
                work.append(z)
    return frozenset(members)


def is_ideal(brace: SkewBrace, s) -> bool:
    """Direct check of the ideal conditions for a nonempty subset."""
    members = _require_nonempty(s)
    circ, star = brace.circ, brace.star
    for x in members:
        for y in members:
            if circ.op(circ.inv(y), x) not in members:
                return False
        for z in range(1, brace.n + 1):
            if star.op(star.op(star.inv(z), x), z) not in members:
                return False
            if circ.op(circ.op(circ.inv(z), x), z) not in members:
                return False
            if star.op(star.inv(z), circ.op(z, x)) not in members:
                return False
    return True


def _sort_key(s: Subset):
    return (len(s), tuple(sorted(s)))


def _ideals_powerset(brace: SkewBrace) -> list[Subset]:
    found = []
    elems = range(1, brace.n + 1)
    for size in range(1, brace.n + 1):
        for combo in combinations(elems, size):
            s = frozenset(combo)
            if is_ideal(brace, s):
                found.append(s)
    return found


def _ideals_from_closures(brace: SkewBrace) -> list[Subset]:
    # closures of singletons generate; joins close the lattice upward
    found = {ideal_closure(brace, {x}) for x in range(1, brace.n + 1)}
    changed = True
    while changed:
        changed = False
        for a, b in combinations(tuple(found), 2):
            j = ideal_closure(brace, a | b)
            if j not in found:
                found.add(j)
                changed = True
                break
    return sorted(found, key=_sort_key)


def enumerate_ideals(brace: SkewBrace, method: str = "auto") -> list[Subset]:
    """All nonempty ideals, ascending by size then lexicographically.

    The empty set vacuously satisfies the conditions but is excluded.
    The powerset filter is exact for any size where it is feasible; the
    closure-based search is used above the cutoff and agrees with it
    wherever both run. Output always includes {e} and the full carrier.
    """
    if method == "auto":
        method = "powerset" if brace.n <= _POWERSET_LIMIT else "closure"
    if method == "powerset":
        return _ideals_powerset(brace)
    if method == "closure":
        return _ideals_from_closures(brace)
    raise ValueError(f"unknown enumeration method {method!r}")
