"""Finite group extensions, their endomorphism rings and low-degree cohomology."""

import json as _json

from . import _cohomoring
from ._cohomoring import (
    CohomoringError,
    Extension,
    Group,
    Ring,
    cyclic,
    dihedral,
    dihedral_extension,
    dihedral_ring,
    direct_product,
    extension_from_json,
    extension_from_quadruple,
    group_from_json,
    prop_qr,
    ring_from_json,
    ring_s_r,
    z1,
    zn_ring,
)

__all__ = [
    "CohomoringError",
    "Extension",
    "Group",
    "Ring",
    "cyclic",
    "dihedral",
    "dihedral_extension",
    "dihedral_ring",
    "direct_product",
    "endo_ring",
    "extension_from_json",
    "extension_from_quadruple",
    "group_from_json",
    "h2",
    "prop_qr",
    "quadruple",
    "ring_from_json",
    "ring_s_r",
    "verify_catalog",
    "verify_extension",
    "z1",
    "zn_ring",
]


def h2(extension, method="linear"):
    """H^2(Q, N) as a dict with invariant factors and the extension's class."""
    return _json.loads(_cohomoring.h2(extension, method))


def endo_ring(extension):
    """End^Q_N(G): size, [+] and [x] tables, ideal members, restrictions to N."""
    return _json.loads(_cohomoring.endo_ring(extension))


def verify_extension(extension, check_h2g=True):
    return _json.loads(_cohomoring.verify_extension(extension, check_h2g))


def verify_catalog(catalog=None, check_h2g=True):
    """Sweep a catalog (a list or dict in the JSON catalog format); None means the built-in one."""
    text = "" if catalog is None else _json.dumps(catalog)
    return _json.loads(_cohomoring.verify_catalog(text, check_h2g))


def quadruple(Q, N, action="trivial", cocycle=None):
    """Extension from group descriptions, an action table and an optional cocycle table."""
    entry = {"Q": Q, "N": N, "action": action}
    if cocycle is not None:
        entry["cocycle"] = cocycle
    return extension_from_quadruple(_json.dumps(entry))
