"""Canonical trace ideals of Stanley-Reisner rings."""

import json

from ._core import (
    SimplicialComplex,
    SrtraceError,
    builtin_names,
    reduced_betti,
    sweep,
)
from . import _core

__all__ = [
    "SimplicialComplex",
    "SrtraceError",
    "analyze",
    "builtin",
    "builtin_names",
    "classify",
    "combine",
    "homology",
    "reduced_betti",
    "sweep",
]


def builtin(name):
    return SimplicialComplex.builtin(name)


def _complex(value):
    if isinstance(value, SimplicialComplex):
        return value
    if isinstance(value, str):
        return builtin(value)
    return SimplicialComplex([[str(v) for v in facet] for facet in value])


def analyze(complex, field="q", all_faces=False):
    """Scope flags and reduced homology as a report dict."""
    return json.loads(_core.analyze_json(_complex(complex), field, all_faces))


def homology(complex, field="q"):
    return json.loads(_core.homology_json(_complex(complex), field))


def classify(complex, field="q", all_faces=False):
    """Trace classification; disconnected input gets a fiber_product section."""
    return json.loads(_core.classify_json(_complex(complex), field, all_faces))


def combine(descriptors):
    """Fiber-product trace of ring descriptor dicts."""
    return json.loads(_core.combine_json(json.dumps(list(descriptors))))
