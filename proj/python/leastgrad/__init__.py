"""Chord trees over concave arcs and least-gradient experiments."""

import json

from ._leastgrad import *  # noqa: F401,F403
from ._leastgrad import verify as _verify


def verify_report(arc, depth=8, model_suite=False):
    """Runs the verification checks and returns the parsed report."""
    return json.loads(_verify(arc, depth, model_suite))
