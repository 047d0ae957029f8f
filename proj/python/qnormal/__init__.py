"""Normal surface enumeration and unknot recognition for triangulated 3-manifolds."""

import json

from ._core import (
    AdmissibilityError,
    Error,
    IncompatibleSumError,
    IndexOutOfRangeError,
    InternalError,
    InvalidGluingError,
    NonOrientableError,
    ParseError,
    ResourceLimitError,
    Triangulation,
    UnsupportedBoundaryError,
    enumerate,
    enumerate_bruteforce,
    is_admissible,
    matching_rows,
    quad_to_standard,
)
from . import _core

__all__ = [
    "AdmissibilityError",
    "Error",
    "IncompatibleSumError",
    "IndexOutOfRangeError",
    "InternalError",
    "InvalidGluingError",
    "NonOrientableError",
    "ParseError",
    "ResourceLimitError",
    "Triangulation",
    "UnsupportedBoundaryError",
    "cross_check",
    "enumerate",
    "enumerate_bruteforce",
    "invariants",
    "is_admissible",
    "load",
    "matching_rows",
    "parse",
    "quad_to_standard",
    "recognize",
    "survey",
]


def load(path):
    return Triangulation.load(str(path))


def parse(text):
    return Triangulation.parse(text)


def invariants(tri, standard):
    return json.loads(_core.invariants_json(tri, standard))


def survey(tri, coords="quad", **kwargs):
    return json.loads(_core.survey_json(tri, coords, **kwargs))


def recognize(tri, coords="quad", **kwargs):
    """Report dict; ``report["verdict"]`` is DISC_FOUND, NO_DISC or UNSUPPORTED."""
    return json.loads(_core.recognize_json(tri, coords, **kwargs))


def cross_check(tri):
    return json.loads(_core.cross_check_json(tri))
