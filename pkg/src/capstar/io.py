"""JSON file formats for complexes, chains, and cochains.

Complex files carry maximal simplices (closure implied) and an optional
explicit vertex order; unknown keys are rejected so fixture typos fail
loudly.  Chain/cochain files map comma-joined increasing vertex tuples
to integer coefficients.
"""

from __future__ import annotations

import json

from .bridge import SimplicialChain, SimplicialCochain
from .complexes import SimplicialComplex, from_maximal_simplices
from .errors import ValidationError

__all__ = [
    "parse_complex",
    "serialize_complex",
    "load_complex",
    "parse_cochain",
    "parse_chain",
    "serialize_cochain",
    "load_cochain",
    "load_chain",
]


def _check_keys(data: dict, allowed: set, what: str):
    if not isinstance(data, dict):
        raise ValidationError(f"{what} file must be a JSON object")
    unknown = set(data) - allowed
    if unknown:
        raise ValidationError(f"unknown keys in {what} file: {sorted(unknown)}")


_COMPLEX_KEYS = {"name", "simplices", "vertex_order"}


def _as_token(v, what: str):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ValidationError(f"{what}: vertex tokens must be integers or strings, got {v!r}")
    if isinstance(v, str) and not v:
        raise ValidationError(f"{what}: vertex tokens must be nonempty")
    return v


def parse_complex(data: dict) -> SimplicialComplex:
    _check_keys(data, _COMPLEX_KEYS, "complex")
    if "name" not in data or not isinstance(data["name"], str):
        raise ValidationError("complex file needs a string 'name'")
    if "simplices" not in data or not isinstance(data["simplices"], list):
        raise ValidationError("complex file needs a list 'simplices'")
    simplices = []
    for s in data["simplices"]:
        if not isinstance(s, list) or not s:
            raise ValidationError(f"simplex entries must be nonempty lists, got {s!r}")
        simplices.append([_as_token(v, "simplices") for v in s])
    order = None
    if "vertex_order" in data:
        if not isinstance(data["vertex_order"], list):
            raise ValidationError("vertex_order must be a list of tokens")
        order = [_as_token(v, "vertex_order") for v in data["vertex_order"]]
        mentioned = {v for s in simplices for v in s}
        missing = mentioned - set(order)
        if missing:
            raise ValidationError(f"vertex_order is missing tokens: {sorted(map(str, missing))}")
    return from_maximal_simplices(simplices, order=order, name=data["name"])


def serialize_complex(x: SimplicialComplex) -> str:
    maximal = sorted(x.maximal_simplices(), key=lambda s: (len(s), x.sort_key(s)))
    payload = {
        "name": x.name,
        "simplices": [list(s) for s in maximal],
        "vertex_order": list(x.vertex_order),
    }
    return json.dumps(payload, indent=2)


def load_complex(path: str) -> SimplicialComplex:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise ValidationError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise ValidationError(f"{path} is not valid JSON: {e}")
    return parse_complex(data)


_VALUED_KEYS = {"degree", "values"}


def _resolve_token(part: str, x: SimplicialComplex):
    if x.has_vertex(part):
        return part
    try:
        as_int = int(part)
    except ValueError:
        as_int = None
    if as_int is not None and x.has_vertex(as_int):
        return as_int
    raise ValidationError(f"unknown vertex token {part!r} in simplex key")


def _parse_valued(data: dict, x: SimplicialComplex, what: str):
    _check_keys(data, _VALUED_KEYS, what)
    if "degree" not in data or not isinstance(data["degree"], int):
        raise ValidationError(f"{what} file needs an integer 'degree'")
    if "values" not in data or not isinstance(data["values"], dict):
        raise ValidationError(f"{what} file needs an object 'values'")
    degree = data["degree"]
    out = {}
    for key, coeff in data["values"].items():
        if not isinstance(coeff, int):
            raise ValidationError(f"{what}: coefficient for {key!r} must be an integer")
        parts = key.split(",")
        simplex = tuple(_resolve_token(p, x) for p in parts)
        if len(simplex) - 1 != degree:
            raise ValidationError(
                f"{what}: key {key!r} names a {len(simplex) - 1}-simplex, expected degree {degree}"
            )
        if simplex not in x:
            raise ValidationError(f"{what}: {key!r} is not a simplex of the complex")
        ranks = [x.rank_of(v) for v in simplex]
        if ranks != sorted(ranks):
            raise ValidationError(f"{what}: key {key!r} is not in increasing vertex order")
        out[simplex] = coeff
    return degree, out


def parse_cochain(data: dict, x: SimplicialComplex) -> SimplicialCochain:
    degree, values = _parse_valued(data, x, "cochain")
    return SimplicialCochain(x, degree, values)


def parse_chain(data: dict, x: SimplicialComplex) -> SimplicialChain:
    degree, values = _parse_valued(data, x, "chain")
    return SimplicialChain(x, degree, values)


def serialize_cochain(u) -> str:
    x = u.complex
    coeffs = u.values if hasattr(u, "values") else u.coefficients
    items = sorted(coeffs.items(), key=lambda kv: x.sort_key(kv[0]))
    payload = {
        "degree": u.degree,
        "values": {",".join(str(v) for v in s): c for s, c in items},
    }
    return json.dumps(payload, indent=2)


def _load_valued(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise ValidationError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise ValidationError(f"{path} is not valid JSON: {e}")


def load_cochain(path: str, x: SimplicialComplex) -> SimplicialCochain:
    return parse_cochain(_load_valued(path), x)


def load_chain(path: str, x: SimplicialComplex) -> SimplicialChain:
    return parse_chain(_load_valued(path), x)
