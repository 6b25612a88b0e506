"""Report rendering: JSON for machines, aligned text for people, CSV for tables.

Every rational is written as "p/q" (denominator always present). Reports
carry no timestamps or host data, so identical inputs give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .canon import canonical_form
from .formats import to_graph6
from .graph import Graph
from .hom import DegreeProfile, Pattern

CSV_SCHEMA_VERSION = 1


def rat(x: Fraction | int | None) -> str | None:
    if x is None:
        return None
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def graph_ref(g: Graph) -> dict:
    return {"graph6": to_graph6(g), "cert": canonical_form(g).hex(),
            "n": g.n, "edges": g.edge_count}


def pattern_ref(q: Pattern, label: str | None = None) -> dict:
    out = {"graph6": to_graph6(q.graph), "n": q.n, "aut": q.aut_count}
    if label is not None:
        out["spec"] = label
    return out


@dataclass
class Report:
    kind: str
    config: dict
    result: dict
    columns: list[str] = field(default_factory=list)
    rows: list[list[Any]] = field(default_factory=list)
    summary: list[tuple[str, Any]] = field(default_factory=list)
    headline: str | None = None  # text mode prints only this when set

    def envelope(self) -> dict:
        return {"tool": "oddturan", "version": __version__, "kind": self.kind,
                "config": self.config, "result": self.result}

    def to_json(self) -> str:
        return json.dumps(self.envelope(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# oddturan {__version__} {self.kind} csv-schema {CSV_SCHEMA_VERSION}\n")
        buf.write("# config " + json.dumps(self.config, sort_keys=True) + "\n")
        writer = csv.writer(buf, lineterminator="\n")
        if self.columns:
            writer.writerow(self.columns)
            writer.writerows(self.rows)
        else:
            writer.writerow(["key", "value"])
            writer.writerows([k, _plain(v)] for k, v in self.summary)
        return buf.getvalue()

    def to_text(self) -> str:
        if self.headline is not None:
            return self.headline + "\n"
        lines = [f"oddturan {__version__} {self.kind}"]
        width = max((len(k) for k, _ in self.summary), default=0)
        lines += [f"{k.ljust(width)}  {_plain(v)}" for k, v in self.summary]
        if self.columns:
            lines.append("")
            lines += align(self.columns, self.rows)
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "text": self.to_text}[fmt]()


def _plain(v: Any) -> str:
    if isinstance(v, Fraction):
        return rat(v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    return str(v)


def align(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> list[str]:
    cells = [[str(h) for h in headers]] + [[_plain(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    return ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]


def degree_payload(prof: DegreeProfile) -> dict:
    return {"per_vertex": list(prof.per_vertex), "min": prof.min, "max": prof.max,
            "avg": rat(prof.avg), "sum": prof.sum, "inj": prof.total}
