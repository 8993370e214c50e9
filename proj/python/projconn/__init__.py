"""Connections, curvature and jets on ellipsoid rings."""

import json

from . import _core
from ._core import Ellipsoid, ResourceError, suite_names

__all__ = ["Ellipsoid", "ResourceError", "suite_names", "run_suite", "ring_report", "jets_report", "mcm_report"]


def run_suite(name, exponents, seed=0, samples=20):
    return json.loads(_core.run_suite(name, list(exponents), seed, samples))


def ring_report(exponents):
    return json.loads(_core.ring_report(list(exponents)))


def jets_report(exponents, l, k, free_rank=0):
    return json.loads(_core.jets_report(list(exponents), l, k, free_rank))


def mcm_report(m, n, k, l):
    return json.loads(_core.mcm_report(m, n, k, l))
