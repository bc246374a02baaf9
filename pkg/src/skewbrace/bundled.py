"""Access to the structure tables and link codes shipped with the package."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .gauss import LinkDiagram, parse_link_file
from .tables import SkewBrace, parse_brace_file

__all__ = [
    "bundled_brace_names",
    "load_bundled_brace",
    "bundled_links",
    "bundled_brace_path",
    "bundled_links_path",
]

BRACE_NAMES = ("klein_z4", "z4_klein", "nab6", "cyc6", "dih8", "inv8")


def _data_root():
    return resources.files("skewbrace") / "data"


def bundled_brace_names() -> tuple[str, ...]:
    return BRACE_NAMES


def bundled_brace_path(name: str) -> str:
    if name not in BRACE_NAMES:
        raise KeyError(f"no bundled brace named {name!r}; have {BRACE_NAMES}")
    return str(_data_root() / "braces" / f"{name}.txt")


def bundled_links_path() -> str:
    return str(_data_root() / "links.txt")


@lru_cache(maxsize=None)
def load_bundled_brace(name: str) -> SkewBrace:
    path = bundled_brace_path(name)
    with open(path, encoding="utf-8") as fh:
        return parse_brace_file(fh.read())


@lru_cache(maxsize=1)
def bundled_links() -> dict[str, LinkDiagram]:
    with open(bundled_links_path(), encoding="utf-8") as fh:
        return parse_link_file(fh.read())
