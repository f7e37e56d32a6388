"""Kottwitz-Rapoport strata of the Siegel local model with Iwahori level."""

import json

from ._core import *  # noqa: F401,F403
from ._core import KrstrataError, strata_report_json, point_count_json


def strata_report(n):
    """Strata report for GSp(2n) as a dict (same schema as the CLI's JSON)."""
    return json.loads(strata_report_json(n))


def point_count(n, q):
    """Brute-force point count of the special fiber over F_q as a dict."""
    return json.loads(point_count_json(n, q))


def error_kind(exc):
    """The error kind name carried by a KrstrataError."""
    return exc.args[0] if isinstance(exc, KrstrataError) and exc.args else None
