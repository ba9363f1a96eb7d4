"""Deterministic diagram and report emitters: DOT, TikZ, and JSON.

Node identifiers are always the comma-joined tuple entries; display
labels drop the commas while every entry is a single digit.  Output is
byte-deterministic for fixed inputs: nodes are emitted in lexicographic
order and edges in sorted order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .exangles import Exangle
from .models import CategoryModel
from .quotients import QuotientModel
from .rigidity import mutation_graph_dot
from .tuples import IndexTuple, Quiver
from .verify import VerificationReport

FORMATS = ("dot", "tikz", "json")
CONTENTS = ("quiver", "category", "mutation-graph", "exangle", "report")
ARROW_POLICIES = ("all-nonzero-homs", "irreducible-only")


@dataclass(frozen=True)
class EmitSpec:
    """What to emit and how: format, content kind, and arrow policy."""
    fmt: str = "dot"
    content: str = "category"
    arrows: str = "all-nonzero-homs"

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.content not in CONTENTS:
            raise ValueError(f"unknown content {self.content!r}")
        if self.arrows not in ARROW_POLICIES:
            raise ValueError(f"unknown arrow policy {self.arrows!r}")


def node_id(t: IndexTuple) -> str:
    return ",".join(str(v) for v in t)


def render_label(t: IndexTuple) -> str:
    """Compact concatenated rendering when all entries are single digits."""
    if all(1 <= v <= 9 for v in t):
        return "".join(str(v) for v in t)
    return node_id(t)


def irreducible_arrows(model) -> tuple[tuple[IndexTuple, IndexTuple], ...]:
    """Nonzero homs between distinct objects that are not nonzero composites
    of two nonzero non-identity basis morphisms."""
    objs = model.objects
    edges = []
    for x in objs:
        for y in objs:
            if x == y or model.hom_dim(x, y) == 0:
                continue
            reducible = any(
                z not in (x, y)
                and model.hom_dim(x, z) and model.hom_dim(z, y)
                and model.compose_scalar(x, z, y)
                for z in objs)
            if not reducible:
                edges.append((x, y))
    return tuple(sorted(edges))


def category_arrows(model, policy: str) -> tuple[tuple[IndexTuple, IndexTuple], ...]:
    if policy == "irreducible-only":
        return irreducible_arrows(model)
    return tuple(sorted((x, y) for x in model.objects for y in model.objects
                        if x != y and model.hom_dim(x, y)))


def _dot_graph(nodes, edges) -> str:
    lines = ["digraph {"]
    for t in sorted(nodes):
        lines.append(f'  "{node_id(t)}" [label="{render_label(t)}"];')
    for src, tgt in sorted(edges):
        lines.append(f'  "{node_id(src)}" -> "{node_id(tgt)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _tikz_graph(nodes, edges) -> str:
    nodes = sorted(nodes)
    # simple deterministic layout: column by lexicographic index, row by first entry
    coords = {t: (i, t[0] if t else 0) for i, t in enumerate(nodes)}
    lines = ["\\begin{tikzpicture}"]
    for t in nodes:
        x, y = coords[t]
        lines.append(f"  \\node ({node_id(t)}) at ({x},{y}) {{{render_label(t)}}};")
    for src, tgt in sorted(edges):
        lines.append(f"  \\draw[->] ({node_id(src)}) -- ({node_id(tgt)});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def model_descriptor(model) -> dict:
    desc = {"kind": model.kind, "d": model.d, "n": model.n,
            "objects": [list(t) for t in model.objects]}
    if getattr(model, "window", None):
        desc["window"] = list(model.window)
    return desc


def hom_table(model) -> dict:
    return {node_id(x): [node_id(y) for y in model.objects if model.hom_dim(x, y)]
            for x in model.objects}


def ext_table(model) -> dict:
    return {node_id(b): [node_id(a) for a in model.objects if model.ext_dim(b, a)]
            for b in model.objects}


def quiver_to_dict(q: Quiver) -> dict:
    def path_dict(p):
        start, i, j = p
        return {"start": list(start), "first": i, "second": j}

    return {
        "vertices": [list(v) for v in q.vertices],
        "arrows": [{"source": list(s), "target": list(t), "direction": i}
                   for s, t, i in q.arrows],
        "relations": [{"path": path_dict(p),
                       "equals": path_dict(partner) if partner else None}
                      for p, partner in q.relations],
    }


def exangle_to_dict(e: Exangle) -> dict:
    return {
        "A": list(e.x0),
        "B": list(e.xlast),
        "middles": [[list(t) for t in level] for level in e.middles],
        "differentials": [{"source": [list(t) for t in m.source],
                           "target": [list(t) for t in m.target],
                           "entries": [list(row) for row in m.entries]}
                          for m in e.differentials],
    }


def report_to_dict(r: VerificationReport) -> dict:
    return {"theorem": r.theorem, "d": r.d, "n": r.n, "ok": r.ok,
            "counters": dict(sorted(r.counters.items())),
            "counterexample": repr(r.counterexample) if r.counterexample else None,
            "elapsed": round(r.elapsed, 4)}


def quotient_to_dict(q: QuotientModel) -> dict:
    desc = model_descriptor(q.base)
    desc["killed"] = [[list(src), list(tgt)] for src, tgt in sorted(q.killed)]
    desc["zero_objects"] = [list(t) for t in q.zero_objects]
    return desc


def _json_dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def emit_string(obj, spec: EmitSpec) -> str:
    """Render one object under the given spec; raises on invalid pairings."""
    if spec.content == "quiver":
        if not isinstance(obj, Quiver):
            raise ValueError("quiver content needs a Quiver")
        if spec.fmt == "dot":
            return _dot_graph(obj.vertices, [(s, t) for s, t, _ in obj.arrows])
        if spec.fmt == "tikz":
            return _tikz_graph(obj.vertices, [(s, t) for s, t, _ in obj.arrows])
        return _json_dump(quiver_to_dict(obj))
    if spec.content == "category":
        if not isinstance(obj, (CategoryModel, QuotientModel)):
            raise ValueError("category content needs a model")
        if spec.fmt == "json":
            payload = model_descriptor(obj.base if isinstance(obj, QuotientModel) else obj)
            payload["hom"] = hom_table(obj)
            payload["ext"] = ext_table(obj)
            if isinstance(obj, QuotientModel):
                payload.update(quotient_to_dict(obj))
            return _json_dump(payload)
        nodes = obj.nonzero_objects if isinstance(obj, QuotientModel) else obj.objects
        edges = category_arrows(obj, spec.arrows)
        edges = [(s, t) for s, t in edges if s in set(nodes) and t in set(nodes)]
        if spec.fmt == "dot":
            return _dot_graph(nodes, edges)
        return _tikz_graph(nodes, edges)
    if spec.content == "mutation-graph":
        if not isinstance(obj, CategoryModel):
            raise ValueError("mutation-graph content needs a model")
        if spec.fmt != "dot":
            raise ValueError("mutation graphs are emitted as DOT only")
        return mutation_graph_dot(obj)
    if spec.content == "exangle":
        if not isinstance(obj, Exangle):
            raise ValueError("exangle content needs an Exangle")
        if spec.fmt == "json":
            return _json_dump(exangle_to_dict(obj))
        nodes = [e for level in obj.terms for e in level]
        edges = []
        for diff in obj.differentials:
            for i, tgt in enumerate(diff.target):
                for j, src in enumerate(diff.source):
                    if diff.entries[i][j]:
                        edges.append((src, tgt))
        if spec.fmt == "dot":
            return _dot_graph(nodes, edges)
        return _tikz_graph(nodes, edges)
    # report
    if not isinstance(obj, VerificationReport):
        raise ValueError("report content needs a VerificationReport")
    if spec.fmt != "json":
        raise ValueError("reports are emitted as JSON only")
    return _json_dump(report_to_dict(obj))


def emit(obj, spec: EmitSpec, out: str | Path | None = None) -> str:
    """Render and optionally write to a file; returns the rendered text."""
    text = emit_string(obj, spec)
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
    return text
