"""Exact knot concordance invariants, covering-link calculus, and obstruction
certificates, backed by the C++ core."""

import json as _json

from ._core import (  # noqa: F401
    ConcordError,
    parse_expr,
    normalize_expr,
    sigma,
    sigma_oracle,
    tau,
    upsilon_at,
    replay_certificate,
)
from . import _core as _c

__all__ = [
    "ConcordError",
    "alexander",
    "genus",
    "jumps",
    "normalize_expr",
    "obstruct",
    "parse_expr",
    "replay",
    "sigma",
    "sigma_oracle",
    "tau",
    "upsilon",
    "upsilon_at",
]


def alexander(expr):
    """Alexander polynomial as an exponent -> coefficient dict of ints."""
    result = _json.loads(_c.eval_json(expr, "alexander"))
    return {int(e): int(c) for e, c in result["value"].items()}


def genus(expr):
    """Seifert genus as a {'value': int, 'exact': bool} dict, or None."""
    result = _json.loads(_c.eval_json(expr, "genus"))
    return result["value"] if result["status"] == "known" else None


def upsilon(expr):
    """Upsilon as a list of (t, value) breakpoint fraction strings, or None."""
    result = _json.loads(_c.eval_json(expr, "upsilon"))
    if result["status"] != "known":
        return None
    return [tuple(point) for point in result["value"]["breakpoints"]]


def jumps(r, s):
    """Signature jump spectrum as a list of (t, jump) pairs."""
    spectrum = _json.loads(_c.jumps_json(r, s))
    return [(entry["t"], entry["jump"]) for entry in spectrum["entries"]]


def obstruct(engine, **inputs):
    """Run an obstruction engine; returns the certificate as a dict."""
    return _json.loads(_c.obstruct_json(engine, _json.dumps(inputs)))


def replay(certificate):
    """Re-run the engine recorded in a certificate dict and compare."""
    return _c.replay_certificate(_json.dumps(certificate))
