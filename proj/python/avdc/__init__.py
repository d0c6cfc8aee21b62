"""Adjacent vertex distinguishing edge colouring of normal graphs."""

import json as _json

from ._avdc import *  # noqa: F401,F403
from ._avdc import _audit_json


def audit(g, oracle_edge_cap=16):
    """Run every pipeline check on ``g`` and return the report as a dict."""
    return _json.loads(_audit_json(g, oracle_edge_cap))
