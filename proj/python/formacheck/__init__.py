"""Formality checks for finite-dimensional graded commutative algebras over Q."""

import json
from fractions import Fraction

from ._core import (  # noqa: F401
    GradedAlgebra,
    InputError,
    Model,
    __version__,
    build_model,
    choose_generators,
    compute_E,
    corollary_integer_check,
    corollary_nonnegative_check,
    corpus,
    duality_check,
    good_objects,
    kernel_basis,
    load_algebra,
    parse_algebra,
    rank,
    validate,
    verify_quasi_iso,
)
from ._core import check as _check


def check(algebra, cap=None):
    """Run the full pipeline and return the certificate as a dict."""
    return json.loads(_check(algebra, cap))


def as_fraction(text):
    """Convert a "p/q" coefficient string to a Fraction."""
    return Fraction(text)
