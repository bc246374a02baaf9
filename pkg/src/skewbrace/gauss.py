"""Signed Gauss codes for oriented classical and virtual links.

A code is a `/`-separated list of components. Each component is either a
sequence of passage tokens like `O3+` or `U12-`, or the single token `-`
for a closed component with no crossings. Every crossing id must occur
exactly once as O and once as U, with the same sign both times. Virtual
crossings are never written: the signed Gauss code already determines the
virtual link.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "Passage",
    "LinkDiagram",
    "CrossingConstraint",
    "SemiarcSystem",
    "GaussCodeError",
    "GaussSyntaxError",
    "CrossingUsedWrong",
    "SignMismatch",
    "parse_gauss_code",
    "format_gauss_code",
    "looks_like_gauss_code",
    "build_constraints",
    "parse_link_file",
]

_TOKEN = re.compile(r"([OU])([0-9]+)([+-])\Z")


class GaussCodeError(ValueError):
    """Base class for Gauss-code parse and validation failures."""


class GaussSyntaxError(GaussCodeError):
    def __init__(self, position: int, message: str) -> None:
        self.position = position
        super().__init__(f"bad Gauss code at offset {position}: {message}")


class CrossingUsedWrong(GaussCodeError):
    def __init__(self, crossing_id: int) -> None:
        self.crossing_id = crossing_id
        super().__init__(
            f"crossing {crossing_id} must appear exactly once over and once under"
        )


class SignMismatch(GaussCodeError):
    def __init__(self, crossing_id: int) -> None:
        self.crossing_id = crossing_id
        super().__init__(f"crossing {crossing_id} appears with two different signs")


@dataclass(frozen=True)
class Passage:
    crossing: int
    over: bool
    sign: int  # +1 or -1


@dataclass(frozen=True)
class LinkDiagram:
    """Oriented multi-component diagram; a component with no passages is a
    zero-crossing unknotted component."""

    components: tuple[tuple[Passage, ...], ...]

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def crossing_count(self) -> int:
        return sum(len(comp) for comp in self.components) // 2

    @property
    def crossing_ids(self) -> tuple[int, ...]:
        ids = {p.crossing for comp in self.components for p in comp}
        return tuple(sorted(ids))


@dataclass(frozen=True)
class CrossingConstraint:
    """Semiarc indices incident to one classical crossing."""

    crossing: int
    sign: int
    under_in: int
    over_in: int
    under_out: int
    over_out: int


@dataclass(frozen=True)
class SemiarcSystem:
    semiarc_count: int
    constraints: tuple[CrossingConstraint, ...]


def looks_like_gauss_code(text: str) -> bool:
    """Cheap token-level test; true when every token could belong to a code.

    Used to tell inline codes apart from (possibly missing) file names;
    a true result does not promise that parse_gauss_code will accept it.
    """
    tokens = text.split()
    return bool(tokens) and all(
        tok in ("/", "-") or _TOKEN.match(tok) for tok in tokens
    )


def parse_gauss_code(text: str) -> LinkDiagram:
    """Parse and validate a signed Gauss code."""
    components: list[list[Passage]] = []
    current: list[Passage] = []
    current_tokens = 0
    marker_pos: int | None = None
    boundary_pos = 0
    saw_any = False

    def close_component(pos: int) -> None:
        nonlocal current, current_tokens, marker_pos
        if current_tokens == 0:
            raise GaussSyntaxError(pos, "empty component")
        if marker_pos is not None and current_tokens > 1:
            raise GaussSyntaxError(marker_pos, "`-` must be the only token in its component")
        components.append(current)
        current = []
        current_tokens = 0
        marker_pos = None

    for m in re.finditer(r"\S+", text):
        tok = m.group()
        saw_any = True
        if tok == "/":
            close_component(m.start())
            boundary_pos = m.end()
            continue
        current_tokens += 1
        if tok == "-":
            if marker_pos is not None or current:
                raise GaussSyntaxError(m.start(), "`-` must be the only token in its component")
            marker_pos = m.start()
            continue
        tm = _TOKEN.match(tok)
        if tm is None:
            raise GaussSyntaxError(m.start(), f"expected a passage like O1+ or `-`, got {tok!r}")
        cid = int(tm.group(2))
        if cid == 0:
            raise GaussSyntaxError(m.start(), "crossing ids start at 1")
        if marker_pos is not None:
            raise GaussSyntaxError(marker_pos, "`-` must be the only token in its component")
        current.append(Passage(cid, tm.group(1) == "O", 1 if tm.group(3) == "+" else -1))

    if not saw_any:
        raise GaussSyntaxError(0, "empty code")
    close_component(boundary_pos if not current and marker_pos is None else len(text))

    uses: dict[int, list[Passage]] = {}
    for comp in components:
        for p in comp:
            uses.setdefault(p.crossing, []).append(p)
    for cid in sorted(uses):
        ps = uses[cid]
        if len(ps) != 2 or ps[0].over == ps[1].over:
            raise CrossingUsedWrong(cid)
        if ps[0].sign != ps[1].sign:
            raise SignMismatch(cid)
    return LinkDiagram(components=tuple(tuple(comp) for comp in components))


def format_gauss_code(d: LinkDiagram) -> str:
    parts = []
    for comp in d.components:
        if not comp:
            parts.append("-")
        else:
            parts.append(
                " ".join(
                    f"{'O' if p.over else 'U'}{p.crossing}{'+' if p.sign > 0 else '-'}"
                    for p in comp
                )
            )
    return " / ".join(parts)


def build_constraints(d: LinkDiagram) -> SemiarcSystem:
    """Number the semiarcs and emit one constraint record per crossing.

    In a component with k passages, passage j runs from semiarc (j-1) mod k
    into semiarc j (component-local, then globally offset). A component
    with no passages contributes one semiarc and no constraints.
    """
    in_arc: dict[tuple[int, bool], int] = {}
    out_arc: dict[tuple[int, bool], int] = {}
    sign_of: dict[int, int] = {}
    base = 0
    for comp in d.components:
        k = len(comp)
        if k == 0:
            base += 1
            continue
        for j, p in enumerate(comp):
            in_arc[(p.crossing, p.over)] = base + (j - 1) % k
            out_arc[(p.crossing, p.over)] = base + j
            sign_of[p.crossing] = p.sign
        base += k
    constraints = []
    for cid in sorted(sign_of):
        constraints.append(
            CrossingConstraint(
                crossing=cid,
                sign=sign_of[cid],
                under_in=in_arc[(cid, False)],
                over_in=in_arc[(cid, True)],
                under_out=out_arc[(cid, False)],
                over_out=out_arc[(cid, True)],
            )
        )
    return SemiarcSystem(semiarc_count=base, constraints=tuple(constraints))


def parse_link_file(text: str) -> dict[str, LinkDiagram]:
    """Parse a `name := code` link file; `#` starts a comment line."""
    links: dict[str, LinkDiagram] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if ":=" not in stripped:
            raise GaussCodeError(f"line {lineno}: expected `name := code`")
        name, code = stripped.split(":=", 1)
        name = name.strip()
        if not name:
            raise GaussCodeError(f"line {lineno}: empty link name")
        if name in links:
            raise GaussCodeError(f"line {lineno}: duplicate link name {name!r}")
        try:
            links[name] = parse_gauss_code(code.strip())
        except GaussCodeError as exc:
            raise GaussCodeError(f"line {lineno} ({name}): {exc}") from exc
    return links
