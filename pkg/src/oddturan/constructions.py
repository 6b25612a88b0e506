"""Parser for the graph construction mini-language used on the command line.

Grammar (whitespace ignored)::

    spec     := name | turan | multi | blowup | file | g6
    name     := ("K" | "C" | "P" | "E") INT | "Petersen"
    turan    := "T(" INT "," INT ")"
    multi    := "K(" INT ("," INT)* ")"          complete multipartite
    blowup   := "blowup(" spec ",[" INT ("," INT)* "])"
    file     := "file:" PATH
    g6       := "g6:" GRAPH6
    family   := spec ("," spec)*                 split at top-level commas

K, C, P and E are the complete graph, cycle, path and edgeless graph.
A bare token ending in .g6, .txt, .el or .edges is read as a file. Anything
else is rejected.
"""

from __future__ import annotations

import re

from .formats import from_graph6, read_graph
from .graph import (Graph, GraphError, blowup, complete_graph, complete_multipartite,
                    cycle_graph, empty_graph, path_graph, petersen_graph, turan_graph)

FILE_SUFFIXES = (".g6", ".txt", ".el", ".edges")

_NAMED = {"K": complete_graph, "C": cycle_graph, "P": path_graph, "E": empty_graph}


class SpecError(ValueError):
    """A construction string that does not parse."""


def split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise SpecError(f"unbalanced brackets in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise SpecError(f"unbalanced brackets in {text!r}")
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def _ints(text: str) -> list[int]:
    items = [t.strip() for t in text.split(",")]
    if not all(re.fullmatch(r"\d+", t) for t in items):
        raise SpecError(f"expected a list of non-negative integers, got {text!r}")
    return [int(t) for t in items]


def parse_graph(spec: str) -> Graph:
    raw = spec.strip()
    if raw.startswith("file:"):
        return read_graph(raw[5:])
    if raw.startswith("g6:"):
        return from_graph6(raw[3:])
    s = re.sub(r"\s+", "", raw)
    try:
        if m := re.fullmatch(r"([KCPE])(\d+)", s):
            return _NAMED[m.group(1)](int(m.group(2)))
        if s.lower() == "petersen":
            return petersen_graph()
        if m := re.fullmatch(r"T\((\d+),(\d+)\)", s):
            return turan_graph(int(m.group(1)), int(m.group(2)))
        if m := re.fullmatch(r"K\(([\d,]+)\)", s):
            return complete_multipartite(_ints(m.group(1)))
        if s.startswith("blowup(") and s.endswith(")"):
            args = split_top_level(s[len("blowup("):-1])
            if len(args) != 2 or not (args[1].startswith("[") and args[1].endswith("]")):
                raise SpecError(f"blowup takes (pattern,[sizes]), got {raw!r}")
            return blowup(parse_graph(args[0]), _ints(args[1][1:-1]))
    except GraphError as exc:
        raise SpecError(f"{raw!r}: {exc}") from None
    if raw.endswith(FILE_SUFFIXES):
        return read_graph(raw)
    raise SpecError(f"unrecognised graph construction {raw!r}")


def parse_family(spec: str) -> list[Graph]:
    if not spec.strip():
        return []
    return [parse_graph(p) for p in split_top_level(spec)]
