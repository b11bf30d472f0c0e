"""JSON certificate documents.

Every document has the shape::

    {"schema_version": 1, "kind": ..., "payload": {...}, "provenance": {...}}

The payload is a pure function of the inputs.  Tool version, parameters,
seed, status tiers and the creation time live in ``provenance``.  Floats
are written with ``repr``, which round-trips exactly.
"""

from __future__ import annotations

import json
import math
from datetime import datetime, timezone

from . import __version__
from .errors import ParameterError
from .fillings.certificates import FillingCertificate, Lambda1Status, TriangleAssembly
from .lps import LowerBound, LpsGraph, rank_check
from .graphs import graph_hash
from .smith import Presentation, abelianization

SCHEMA_VERSION = 1
KINDS = ("filling", "assembly", "lps_graph", "lps_scan", "varju_report", "presentation", "spectral_report")


def girth_doc(g) -> dict:
    if isinstance(g, LowerBound):
        return {"lower_bound": g.value}
    if g == math.inf:
        return {"infinite": True}
    return {"value": int(g)}


def girth_from_doc(d: dict):
    if "lower_bound" in d:
        return LowerBound(int(d["lower_bound"]))
    if d.get("infinite"):
        return math.inf
    return int(d["value"])


def filling_payload(c: FillingCertificate) -> dict:
    lam = {"status": c.lambda1.status}
    for key in ("reason", "estimate", "error_bound", "citation"):
        value = getattr(c.lambda1, key)
        if value is not None:
            lam[key] = value
    return {
        "k": c.k,
        "source": c.source,
        "girth": girth_doc(c.girth),
        "rotund": c.rotund,
        "lambda1": lam,
        "graph_hash": c.graph_hash,
    }


def filling_from_payload(d: dict) -> FillingCertificate:
    try:
        lam = d["lambda1"]
        cert = FillingCertificate(
            k=int(d["k"]),
            source=d["source"],
            girth=girth_from_doc(d["girth"]),
            rotund=bool(d["rotund"]),
            lambda1=Lambda1Status(
                lam["status"], lam.get("reason"), lam.get("estimate"),
                lam.get("error_bound"), lam.get("citation"),
            ),
            graph_hash=d["graph_hash"],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"malformed filling payload: {exc}") from None
    floor = cert.girth_floor
    if cert.rotund != (floor > 6):
        raise ParameterError("rotund flag is inconsistent with the stored girth")
    return cert


def assembly_payload(a: TriangleAssembly) -> dict:
    d = {
        "k": a.k,
        "theta": a.theta,
        "checks": {
            "angle_per_filling": list(a.angle_per_filling),
            "triangle_angle_sum": a.triangle_angle_sum,
        },
        "verdict": a.verdict,
        "inputs": list(a.inputs),
    }
    if a.reason is not None:
        d["reason"] = a.reason
    if a.t_basis is not None:
        d["t_basis"] = a.t_basis
    return d


def lps_graph_payload(lg: LpsGraph) -> dict:
    computed, predicted, ok = rank_check(lg)
    return {
        "p": lg.params.p,
        "q": lg.params.q,
        "k": lg.params.k,
        "legendre": lg.params.legendre_pq,
        "bipartite": lg.bipartite,
        "vertices": lg.graph.n,
        "edges": lg.graph.m,
        "generators": [list(m.entries) for m in lg.generators],
        "rank": {"computed": computed, "predicted": predicted, "match": ok},
        "graph_hash": graph_hash(lg.graph),
    }


def presentation_payload(pres: Presentation, k: int) -> dict:
    rank, torsion = abelianization(pres)
    return {
        "k": k,
        "generator_count": pres.generator_count,
        "relators": [[list(s) for s in w] for w in pres.relators],
        "abelianization": {"free_rank": rank, "torsion": torsion},
    }


def make_document(
    kind: str, payload: dict, parameters: dict | None = None, seed: int | None = None,
    status_tiers: list[str] | None = None,
) -> dict:
    if kind not in KINDS:
        raise ParameterError(f"unknown document kind {kind!r}")
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "payload": payload,
        "provenance": {
            "tool_version": __version__,
            "parameters": parameters or {},
            "seed": seed,
            "status_tiers": status_tiers or [],
            "created_utc": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        },
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def payload_bytes(doc: dict) -> bytes:
    return json.dumps(doc["payload"], sort_keys=True).encode()


def loads(text: str, kind: str | None = None) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"not a JSON document: {exc}") from None
    if not isinstance(doc, dict) or doc.get("schema_version") != SCHEMA_VERSION:
        raise ParameterError("unsupported schema version")
    if doc.get("kind") not in KINDS or "payload" not in doc:
        raise ParameterError("document has no valid kind/payload")
    if kind is not None and doc["kind"] != kind:
        raise ParameterError(f"expected a {kind} document, got {doc['kind']}")
    return doc
