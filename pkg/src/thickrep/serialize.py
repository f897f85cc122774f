"""JSON forms for every value that crosses the CLI boundary.

All scalars travel as strings ("3/2" over the rationals, "4" in a prime
field); reports are plain JSON objects that round-trip byte-identically
through `dumps`.
"""

from __future__ import annotations

import json

from .errors import ThickRepError
from .fields import field_from_json, field_to_json
from .linalg import Matrix, Subspace
from .repcore import (
    GROUP,
    LIE,
    NotThickCertificate,
    Representation,
    RNumberBounds,
    ThicknessReport,
)


def dumps(obj) -> str:
    """Canonical serialization; parse -> dumps is byte-identical."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def matrix_to_json(m: Matrix):
    return [[m.field.format(x) for x in row] for row in m.rows]


def matrix_from_json(field, data) -> Matrix:
    return Matrix(field, [[field.parse(x) for x in row] for row in data])


def vector_to_json(field, v):
    return [field.format(x) for x in v]


def vector_from_json(field, data):
    return tuple(field.parse(x) for x in data)


def subspace_to_json(s: Subspace):
    return {"ambient": s.ambient, "basis": matrix_to_json(s.mat)}


def subspace_from_json(field, data) -> Subspace:
    rows = [[field.parse(x) for x in row] for row in data["basis"]]
    return Subspace.from_vectors(field, int(data["ambient"]), rows)


def representation_to_json(r: Representation):
    return {
        "field": field_to_json(r.field),
        "dim": r.dim,
        "mode": r.mode,
        "generators": [matrix_to_json(g) for g in r.generators],
        "label": r.label,
    }


def representation_from_json(data) -> Representation:
    field = field_from_json(data["field"])
    mode = data.get("mode", GROUP)
    if mode not in (GROUP, LIE):
        raise ThickRepError("unknown mode %r" % (mode,))
    gens = [matrix_from_json(field, g) for g in data["generators"]]
    return Representation(
        field, int(data["dim"]), mode, gens, label=data.get("label", "")
    )


def certificate_to_json(r: Representation, cert: NotThickCertificate):
    """Self-contained refutation: carries the generators so third parties
    can re-check without any other input."""
    f = cert.field
    out = {
        "kind": "not_thick_certificate",
        "field": field_to_json(f),
        "n": cert.n,
        "m": cert.m,
        "mode": r.mode,
        "generators": [matrix_to_json(g) for g in r.generators],
        "w1": subspace_to_json(cert.w1),
        "w2": subspace_to_json(cert.w2),
        "witness1": [vector_to_json(f, v) for v in cert.witness1],
        "witness2": [vector_to_json(f, v) for v in cert.witness2],
    }
    if cert.pair is not None:
        v1, v2 = cert.pair
        out["pair"] = [subspace_to_json(v1), subspace_to_json(v2)]
    return out


def certificate_from_json(data):
    """Returns (representation, certificate)."""
    if data.get("kind") != "not_thick_certificate":
        raise ThickRepError("not a thickness refutation certificate")
    field = field_from_json(data["field"])
    n = int(data["n"])
    gens = [matrix_from_json(field, g) for g in data["generators"]]
    rep = Representation(field, n, data.get("mode", GROUP), gens)
    cert = NotThickCertificate(
        field=field,
        n=n,
        m=int(data["m"]),
        w1=subspace_from_json(field, data["w1"]),
        w2=subspace_from_json(field, data["w2"]),
        witness1=tuple(vector_from_json(field, v) for v in data["witness1"]),
        witness2=tuple(vector_from_json(field, v) for v in data["witness2"]),
        pair=(
            tuple(subspace_from_json(field, p) for p in data["pair"])
            if "pair" in data
            else None
        ),
    )
    return rep, cert


def thickness_report_to_json(r: Representation, report: ThicknessReport):
    out = {
        "m": report.m,
        "verdict": report.verdict,
        "method": report.method,
        "mode": report.mode,
        "field_scope": report.field_scope,
        "log": report.log,
    }
    if report.reason:
        out["reason"] = report.reason
    if report.certificate is not None:
        out["certificate"] = certificate_to_json(r, report.certificate)
    return out


def r_number_to_json(b: RNumberBounds):
    return {
        "n": b.n,
        "m": b.m,
        "lower": b.lower,
        "upper": b.upper,
        "exact": b.exact,
    }
