"""Exact rational checks for limit linear series on a chain of three curves.

Instances, certificates and reports are exchanged as JSON; this wrapper
decodes them into Python objects.
"""

import json

from . import _lsl
from ._lsl import BudgetExhausted, DegradeUnavailable, FormatError, h0_dims

__all__ = [
    "BudgetExhausted",
    "DegradeUnavailable",
    "FormatError",
    "analyze",
    "certify",
    "chain_laws",
    "chain_skeleton",
    "gen",
    "grid",
    "h0_dims",
    "laws",
    "validate",
    "verify_certificate",
]


def _text(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def _check(res):
    return {"ok": res["ok"], "report": json.loads(res["report"]), "text": res["text"]}


def gen(d, r, strategy="from-sections", seed=0, budget=10000, mode="break-linking", from_instance=None):
    out = dict(_lsl.gen(d, r, strategy, seed, budget, mode, _text(from_instance) if from_instance else ""))
    for key in ("instance", "certificate"):
        if out.get(key) is not None:
            out[key] = json.loads(out[key])
    return out


def validate(instance):
    return _check(_lsl.validate(_text(instance)))


def analyze(instance):
    return _check(_lsl.analyze(_text(instance)))


def certify(instance):
    return _check(_lsl.certify(_text(instance)))


def verify_certificate(instance, certificate):
    return _check(_lsl.verify_certificate(_text(instance), _text(certificate)))


def laws(instance):
    return _check(_lsl.laws(_text(instance)))


def chain_laws(d):
    return _check(_lsl.chain_laws(d))


def grid(instance):
    return _check(_lsl.grid(_text(instance)))


def chain_skeleton(d, r=0):
    return json.loads(_lsl.chain_skeleton(d, r))
