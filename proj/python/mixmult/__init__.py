"""Exact mixed multiplicities, joint reductions, and Rees superficial sequences.

Problems are described by a small line-oriented text format::

    field Fp 32003
    ring x y z
    ideal J = x, y, z
    ideal I1 = x, y
    module H = 0

and every function here takes such a text plus a type string like ``"1;2"``
(the I-block tallies, then the J tally after the semicolon).
"""

import json as _json

from ._core import __version__, run as _run

__all__ = [
    "__version__",
    "mixed_multiplicity",
    "multiplicity",
    "verify",
    "verify_rees",
    "superficial",
    "joint_reduction",
    "fuzz",
]


def _invoke(text, command, **kwargs):
    code, records, human = _run(text, command, **kwargs)
    recs = [_json.loads(r) for r in records]
    if code == 2:
        detail = recs[-1].get("detail", human) if recs else human
        raise RuntimeError(detail)
    return code, recs


def mixed_multiplicity(text, type, seed=0, offset=-1):
    """Exact mixed multiplicity of the given type; an integer."""
    _, recs = _invoke(text, "mixed-mult", type=type, seed=seed, offset=offset)
    return recs[0]["value"]


def multiplicity(text, ideal="", seed=0):
    """Hilbert-Samuel multiplicity of the declared (or named) ideal."""
    _, recs = _invoke(text, "multiplicity", ideal=ideal, seed=seed)
    return recs[0]["value"]


def verify(text, type, seed=0, window=-1, offset=-1, field_check=False):
    """Compare the mixed multiplicity with the multiplicity of a certified
    joint reduction; returns the full report as a dict."""
    _, recs = _invoke(text, "verify", type=type, seed=seed, window=window, offset=offset,
                      field_check=field_check)
    return recs[0]


def verify_rees(text, type, seed=0):
    """m-primary case: type is a plain tally list like "1,1"."""
    _, recs = _invoke(text, "verify-rees", type=type, seed=seed)
    return recs[0]


def superficial(text, type, seed=0):
    """Superficial-sequence route (no joint-reduction window check)."""
    _, recs = _invoke(text, "superficial", type=type, seed=seed)
    return recs[0]


def joint_reduction(text, type, seed=0):
    """Build a typed joint reduction and certify it on a window."""
    _, recs = _invoke(text, "joint-reduction", type=type, seed=seed)
    return recs[0]


def fuzz(trials=20, seed=0):
    """Random hypothesis-satisfying instances; returns the summary dict."""
    _, recs = _invoke("", "fuzz", trials=trials, seed=seed)
    return recs[0]
