"""The S3 and S4 tables of irreducible Yetter-Drinfeld modules, recomputed.

Each row names an orbit and either one or more representation labels or
``any``; the dimension and reference columns come from the verdict engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .criteria import (
    INFINITE,
    INFINITE_FOR_ALL,
    KNOWN_FINITE,
    RULE_TAGS,
    orbit_symbol,
    orbit_verdict,
    pair_verdict,
    parse_type,
    source_tag,
)
from .permcore import canonical_representative, centralizer

__all__ = ["TableRow", "TABLE_LAYOUT", "table_rows", "render_text", "rows_to_json"]

# (cycle type, representation column, labels or None for "any")
TABLE_LAYOUT: dict[str, tuple[int, tuple[tuple[str, str, tuple[str, ...] | None], ...]]] = {
    "s3": (3, (
        ("1^3", "any", None),
        ("3", "any", None),
        ("2", "eps", ("eps",)),
        ("2", "sgn", ("sgn",)),
    )),
    "s4": (4, (
        ("1^4", "any", None),
        ("2^2", "any", None),
        ("4", "eps", ("eps",)),
        ("4", "chi4 or chi4^3", ("chi4", "chi4^3")),
        ("4", "chi4^2", ("chi4^2",)),
        ("3", "any", None),
        ("2", "eps or eps*sgn", ("eps", "eps*sgn")),
        ("2", "sgn*eps", ("sgn*eps",)),
        ("2", "sgn*sgn", ("sgn*sgn",)),
    )),
}

INFINITY = "∞"


@dataclass(frozen=True)
class TableRow:
    orbit: str
    isotropy: str
    representation: str
    dimension: str  # "∞" or a decimal integer
    reference: str
    type: str
    labels: tuple[str, ...] | None

    @property
    def dim_value(self) -> int | None:
        return None if self.dimension == INFINITY else int(self.dimension)

    def to_json(self) -> dict[str, Any]:
        return {
            "orbit": self.orbit,
            "isotropy": self.isotropy,
            "representation": self.representation,
            "type": self.type,
            "labels": list(self.labels) if self.labels is not None else None,
            "dim": self.dim_value if self.dim_value is not None else "infinite",
            "reference": self.reference,
        }


def _row(n: int, type_text: str, rep: str, labels: tuple[str, ...] | None) -> TableRow:
    t = parse_type(n, type_text)
    isotropy = centralizer(n, canonical_representative(t)).name
    if labels is None:
        ov = orbit_verdict(n, t)
        if ov.outcome != INFINITE_FOR_ALL:
            raise AssertionError(f"orbit {t} in S_{n} is not decided for every ρ")
        dim, refs = INFINITY, [RULE_TAGS[ov.rule]]  # type: ignore[index]
    else:
        dims, refs = set(), []
        for label in labels:
            v = pair_verdict(n, t, label)
            if v.outcome == INFINITE:
                dims.add(INFINITY)
                ref = RULE_TAGS[v.rule]  # type: ignore[index]
            elif v.outcome == KNOWN_FINITE:
                dims.add(str(v.dim))
                ref = source_tag(v.source)  # type: ignore[arg-type]
            else:
                dims.add("?")
                ref = "open"
            if ref not in refs:
                refs.append(ref)
        if len(dims) != 1:
            raise AssertionError(f"labels {labels} disagree on {t} in S_{n}: {sorted(dims)}")
        dim = dims.pop()
    return TableRow(orbit_symbol(t), isotropy, rep, dim, " / ".join(refs), t.symbol(), labels)


def table_rows(which: str) -> list[TableRow]:
    try:
        n, layout = TABLE_LAYOUT[which]
    except KeyError:
        raise ValueError(f"unknown table {which!r} (choose from {', '.join(TABLE_LAYOUT)})") from None
    return [_row(n, *entry) for entry in layout]


_HEADERS = ("Orbit", "Isotropy", "Representation", "dim B(V)", "Reference")


def render_text(rows: list[TableRow]) -> str:
    cells = [_HEADERS] + [(r.orbit, r.isotropy, r.representation, r.dimension, r.reference) for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(_HEADERS))]
    lines = []
    for k, c in enumerate(cells):
        lines.append("  ".join(x.ljust(w) for x, w in zip(c, widths)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def rows_to_json(which: str, rows: list[TableRow]) -> dict[str, Any]:
    return {"table": which, "n": TABLE_LAYOUT[which][0], "rows": [r.to_json() for r in rows]}
