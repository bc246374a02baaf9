"""Polynomial invariants refining the coloring count.

Each coloring contributes one monomial determined by closures of its
image, where the image of a coloring is the biquandle closure of the set
of colors it uses. Setting every variable to 1 recovers the coloring
count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .biquandle import Biquandle
from .closures import biquandle_closure, group_closure, ideal_closure
from .coloring import derived_biquandle, enumerate_colorings
from .gauss import LinkDiagram
from .moves import random_diagram_walk
from .tables import SkewBrace

__all__ = [
    "Polynomial2",
    "Polynomial1",
    "ExponentProfile",
    "MoveTrialResult",
    "sb_polynomial",
    "ideal_polynomial",
    "both_polynomials",
    "specialize",
    "exponent_profile",
    "move_invariance_trials",
]


def _format_terms(parts: list[str]) -> str:
    return " + ".join(parts) if parts else "0"


def _coeff_prefix(coeff: int) -> str:
    if coeff == 1:
        return ""
    if coeff == -1:
        return "-"
    return str(coeff)


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


@dataclass(frozen=True)
class Polynomial2:
    """Integer polynomial in u and v; no zero coefficients stored."""

    terms: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {k: v for k, v in self.terms.items() if v != 0}
        object.__setattr__(self, "terms", clean)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """(a, b, coeff) in canonical order: total degree then a, descending."""
        keys = sorted(self.terms, key=lambda ab: (ab[0] + ab[1], ab[0]), reverse=True)
        return [(a, b, self.terms[(a, b)]) for a, b in keys]

    def specialize(self) -> int:
        return sum(self.terms.values())

    def json_terms(self) -> list[dict[str, int]]:
        return [{"u": a, "v": b, "coeff": c} for a, b, c in self.sorted_terms()]

    def __str__(self) -> str:
        parts = []
        for a, b, c in self.sorted_terms():
            body = _power("u", a) + _power("v", b)
            parts.append(_coeff_prefix(c) + body if body else str(c))
        return _format_terms(parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial2):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))


@dataclass(frozen=True)
class Polynomial1:
    """Integer polynomial in u alone; no zero coefficients stored."""

    terms: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {k: v for k, v in self.terms.items() if v != 0}
        object.__setattr__(self, "terms", clean)

    def sorted_terms(self) -> list[tuple[int, int]]:
        return [(a, self.terms[a]) for a in sorted(self.terms, reverse=True)]

    def specialize(self) -> int:
        return sum(self.terms.values())

    def json_terms(self) -> list[dict[str, int]]:
        return [{"u": a, "coeff": c} for a, c in self.sorted_terms()]

    def __str__(self) -> str:
        parts = []
        for a, c in self.sorted_terms():
            body = _power("u", a)
            parts.append(_coeff_prefix(c) + body if body else str(c))
        return _format_terms(parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial1):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))


def both_polynomials(
    brace: SkewBrace, d: LinkDiagram, jobs: int | None = None
) -> tuple[Polynomial2, Polynomial1]:
    """Both enhancements from a single enumeration pass.

    Each coloring's image (the biquandle closure of its used colors) is
    measured three ways: circ- and star-group closure sizes feed the
    two-variable polynomial, the ideal closure size the one-variable one.
    """
    bq = derived_biquandle(brace)
    memo: dict[frozenset[int], tuple[int, int, int]] = {}
    terms2: dict[tuple[int, int], int] = {}
    terms1: dict[int, int] = {}
    for coloring in enumerate_colorings(brace, d, jobs=jobs):
        colors = frozenset(coloring)
        hit = memo.get(colors)
        if hit is None:
            image = biquandle_closure(bq, colors)
            hit = (
                len(group_closure(brace.circ, image)),
                len(group_closure(brace.star, image)),
                len(ideal_closure(brace, image)),
            )
            memo[colors] = hit
        a, b, c = hit
        terms2[(a, b)] = terms2.get((a, b), 0) + 1
        terms1[c] = terms1.get(c, 0) + 1
    return Polynomial2(terms2), Polynomial1(terms1)


def sb_polynomial(brace: SkewBrace, d: LinkDiagram, jobs: int | None = None) -> Polynomial2:
    """Two-variable enhancement: each coloring contributes u^a v^b where a
    and b are the sizes of the circ- and star-group closures of its image."""
    return both_polynomials(brace, d, jobs=jobs)[0]


def ideal_polynomial(brace: SkewBrace, d: LinkDiagram, jobs: int | None = None) -> Polynomial1:
    """One-variable enhancement: each coloring contributes u^a where a is
    the size of the ideal closure of its image."""
    return both_polynomials(brace, d, jobs=jobs)[1]


def specialize(p: Polynomial2 | Polynomial1) -> int:
    """Sum of coefficients, the value at u = v = 1."""
    return p.specialize()


@dataclass(frozen=True)
class ExponentProfile:
    uniform: bool
    counterexamples: tuple[tuple[int, int], ...]


def exponent_profile(p: Polynomial2) -> ExponentProfile:
    """Report whether every term has equal u- and v-exponents."""
    bad = tuple((a, b) for a, b, _ in p.sorted_terms() if a != b)
    return ExponentProfile(uniform=not bad, counterexamples=bad)


@dataclass(frozen=True)
class MoveTrialResult:
    trials: int
    all_invariant: bool
    base_sb: Polynomial2
    base_ideal: Polynomial1
    first_mismatch: int | None
    mismatch_code: str | None


def move_invariance_trials(
    brace: SkewBrace,
    d: LinkDiagram,
    trials: int,
    seed: int,
    max_moves: int = 3,
    jobs: int | None = None,
) -> MoveTrialResult:
    """Compare both polynomials across seeded random move rewrites of d."""
    from .gauss import format_gauss_code

    rng = random.Random(seed)
    base_sb, base_ideal = both_polynomials(brace, d, jobs=jobs)
    for t in range(trials):
        moved = random_diagram_walk(d, rng, max_moves=max_moves)
        moved_sb, moved_ideal = both_polynomials(brace, moved, jobs=jobs)
        if moved_sb != base_sb or moved_ideal != base_ideal:
            return MoveTrialResult(
                trials=trials,
                all_invariant=False,
                base_sb=base_sb,
                base_ideal=base_ideal,
                first_mismatch=t,
                mismatch_code=format_gauss_code(moved),
            )
    return MoveTrialResult(
        trials=trials,
        all_invariant=True,
        base_sb=base_sb,
        base_ideal=base_ideal,
        first_mismatch=None,
        mismatch_code=None,
    )
