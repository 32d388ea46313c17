"""On-disk formats and the deterministic JSON renderer.

Matrix JSON:  {"d": d, "entries": [[[re, im], ...] x d] x d}
Graph JSON:   {"n": n, "edges": [[u, v], ...]}
State JSON:   {"n": n, "d": d, "amps": [[re, im], ...]}  (length d**n)
Classical code text: one digit word per line, '#' starts a comment.

render_json writes floats at 12 significant digits with a fixed key order
(insertion order of the dicts handed to it), so identical inputs produce
byte-identical output.
"""

from __future__ import annotations

import json
import math
from typing import Any

import numpy as np

from .graphs import Graph, build
from .qstate import StateVector


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r} cannot be serialized")
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return format(x, ".12g")


def _render(obj: Any, out: list) -> None:
    if isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(str(k)))
            out.append(": ")
            _render(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)) or isinstance(obj, np.ndarray):
        seq = obj.tolist() if isinstance(obj, np.ndarray) else obj
        out.append("[")
        for i, v in enumerate(seq):
            if i:
                out.append(", ")
            _render(v, out)
        out.append("]")
    elif isinstance(obj, (bool, np.bool_)):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_fmt_float(float(obj)))
    elif isinstance(obj, complex):
        _render([obj.real, obj.imag], out)
    elif obj is None:
        out.append("null")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def render_json(obj: Any) -> str:
    out: list = []
    _render(obj, out)
    return "".join(out)


def render_text(obj: Any) -> str:
    """One `key: value` line per top-level dict entry."""
    if not isinstance(obj, dict):
        return render_json(obj)
    return "\n".join(f"{k}: {render_json(v)}" for k, v in obj.items())


def complex_pairs(arr: np.ndarray):
    """Nested lists with every complex scalar replaced by [re, im]."""
    a = np.asarray(arr, dtype=np.complex128)
    stacked = np.stack([a.real, a.imag], axis=-1)
    return stacked.tolist()


def pairs_to_complex(obj) -> np.ndarray:
    a = np.asarray(obj, dtype=np.float64)
    if a.shape[-1] != 2:
        raise ValueError("expected [re, im] pairs on the last axis")
    return a[..., 0] + 1j * a[..., 1]


def matrix_to_obj(d: int, entries: np.ndarray) -> dict:
    return {"d": d, "entries": complex_pairs(entries)}


def matrix_entries_from_obj(obj) -> np.ndarray:
    d = int(obj["d"])
    entries = pairs_to_complex(obj["entries"])
    if entries.shape != (d, d):
        raise ValueError(f"entries shape {entries.shape} does not match d={d}")
    return entries


def graph_to_obj(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges]}


def graph_from_obj(obj) -> Graph:
    return build(int(obj["n"]), [(int(u), int(v)) for u, v in obj["edges"]])


def state_to_obj(s: StateVector) -> dict:
    return {"n": s.n, "d": s.d, "amps": complex_pairs(s.amps)}


def state_from_obj(obj) -> StateVector:
    n = int(obj["n"])
    d = int(obj["d"])
    amps = pairs_to_complex(obj["amps"])
    if amps.shape != (d**n,):
        raise ValueError(f"amps length {amps.shape} does not match d**n = {d**n}")
    return StateVector(n=n, d=d, amps=amps)
