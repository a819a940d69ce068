"""
JSON documents for matchers and gates, and the trajectory table.

Complex numbers are ``[re, im]`` pairs and the point at infinity is the
string ``"inf"``. Floats are written with full double precision.
"""
from __future__ import annotations

import io
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError
from .extcomplex import INF, as_ext
from .gates import BASIS, SingleQubitGate, TwoQubitGate, single_qubit_gate
from .matcher import Matcher
from .protocol import StepResult, decomposed_step, protocol_step
from .qubit import orthogonal_partner, overlap_sq


def encode_point(z):
    z = as_ext(z)
    return "inf" if z is INF else [z.real, z.imag]


def decode_point(obj):
    if isinstance(obj, str):
        if obj.strip().lower() in ("inf", "infinity"):
            return INF
        raise DomainError(f"unrecognized point {obj!r}")
    re, im = obj
    return as_ext(complex(float(re), float(im)))


def _encode_matrix(m):
    return [[[float(x.real), float(x.imag)] for x in row] for row in np.asarray(m)]


def _decode_matrix(rows):
    return np.array([[complex(re, im) for re, im in row] for row in rows], dtype=complex)


def matcher_document(m: Matcher) -> dict:
    f = m.f
    doc = {
        "type": "matcher",
        "z1": encode_point(m.z1),
        "partner": encode_point(m.partner),
        "s_eps": m.spec.s_eps,
        "overlap2": m.spec.s_eps**2,
        "epsilon": m.epsilon,
        "alpha_u": m.spec.alpha_u,
        "alpha_eps": m.spec.alpha_eps,
        "f": {
            "numerator": [encode_point(c) for c in f.numerator],
            "denominator": [encode_point(c) for c in f.denominator],
        },
    }
    if m.julia.is_line:
        doc["julia"] = {"line": {"A": 0.0, "B": encode_point(m.julia.B), "C": m.julia.C}}
    else:
        doc["julia"] = {"center": encode_point(m.julia.center), "radius": m.julia.radius}
    return doc


def gate_document(gate: TwoQubitGate, reference=None) -> dict:
    doc = {
        "type": "two_qubit_gate",
        "basis": ["|%s>" % b for b in BASIS],
        "layout": "row-major",
        "protocol": "keep qubit A when qubit B measures 0",
        "matrix": _encode_matrix(gate.matrix),
    }
    if reference is not None:
        doc["reference"] = encode_point(reference)
    return doc


def decomposed_document(m: Matcher, contraction: TwoQubitGate) -> dict:
    return {
        "type": "decomposed_gate",
        "epsilon": m.epsilon,
        "reference": encode_point(m.z1),
        "contraction_gate": gate_document(contraction),
        "single_qubit_gate": {"basis": ["|0>", "|1>"], "matrix": _encode_matrix(
            single_qubit_gate(m.g_u).matrix)},
    }


@dataclass(frozen=True, eq=False)
class GateSource:
    """A loaded gate document: either one gate or a contraction gate plus rotation."""

    gate: TwoQubitGate | None = None
    contraction: TwoQubitGate | None = None
    rotation: SingleQubitGate | None = None
    reference: object = None

    def step(self, z) -> StepResult:
        if self.gate is not None:
            return protocol_step(self.gate, z)
        return decomposed_step(self.contraction, self.rotation, z)


def load_gate(path) -> GateSource:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise OSError(f"cannot read gate document {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path} is not valid JSON: {exc}") from exc
    ref = decode_point(doc["reference"]) if "reference" in doc else None
    kind = doc.get("type")
    if kind == "two_qubit_gate":
        return GateSource(gate=TwoQubitGate(_decode_matrix(doc["matrix"])), reference=ref)
    if kind == "decomposed_gate":
        return GateSource(
            contraction=TwoQubitGate(_decode_matrix(doc["contraction_gate"]["matrix"])),
            rotation=SingleQubitGate(_decode_matrix(doc["single_qubit_gate"]["matrix"])),
            reference=ref,
        )
    raise DomainError(f"{path}: unknown document type {kind!r}")


def write_json(doc: dict, path):
    try:
        Path(path).write_text(json.dumps(doc, indent=2) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


TRAJECTORY_HEADER = ("step", "re", "im", "success_prob", "overlap2_reference", "overlap2_partner")


def format_number(x: float, precision: int = 17) -> str:
    # adding 0.0 turns -0.0 into 0.0
    return f"{x + 0.0:.{precision}g}"


def trajectory_table(zs, probs, reference=None, precision: int = 17) -> str:
    """Comma-separated table; INF is written as ``inf,inf``.

    Step 0 has an empty success probability. Without a reference the overlap
    columns are empty.
    """
    fmt = lambda x: format_number(x, precision)  # noqa: E731
    out = io.StringIO()
    out.write(",".join(TRAJECTORY_HEADER) + "\n")
    partner = orthogonal_partner(reference) if reference is not None else None
    for k, z in enumerate(zs):
        cols = [str(k)]
        cols += ["inf", "inf"] if z is INF else [fmt(z.real), fmt(z.imag)]
        cols.append(fmt(probs[k - 1]) if k > 0 else "")
        if reference is None:
            cols += ["", ""]
        else:
            cols += [fmt(overlap_sq(reference, z)), fmt(overlap_sq(partner, z))]
        out.write(",".join(cols) + "\n")
    return out.getvalue()
