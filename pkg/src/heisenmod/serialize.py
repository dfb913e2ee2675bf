"""JSON encoding and decoding with path-carrying diagnostics.

Schemas.  A field descriptor is {"p": int} with an optional "modulus"
holding ascending prime-field coefficients.  An element is an integer over
a prime field and an ascending integer coefficient array over an extension.
A matrix is {"field", "rows", "cols", "entries"} with a row-major grid of
elements; a representation is {"n", "field", "x", "y", "z"} whose members
are matrix objects over the same field.  Malformed input raises SchemaError
carrying a JSON path such as $.x[0].entries[2][1].
"""

from __future__ import annotations

from typing import Any

from .errors import AlgebraError, SchemaError
from .fields import Field, FieldElem, GF, Poly, is_prime, make_extension
from .heisenberg import (
    HeisenbergAlgebra,
    InvariantTuple,
    ModuleParams,
    Representation,
)
from .matrices import CanonicalForm, Matrix


def _expect(cond: bool, path: str, message: str):
    if not cond:
        raise SchemaError(path, message)


def _int(obj: Any, path: str) -> int:
    _expect(type(obj) is int, path, f"expected an integer, got {type(obj).__name__}")
    return obj


# -- fields ------------------------------------------------------------------


def encode_field(field: Field) -> dict:
    if field.modulus is None:
        return {"p": field.p}
    return {"p": field.p, "modulus": list(field.modulus)}


def decode_field(obj: Any, path: str = "$") -> Field:
    _expect(isinstance(obj, dict), path, "field descriptor must be an object")
    _expect("p" in obj, path, 'missing "p"')
    p = _int(obj["p"], f"{path}.p")
    _expect(is_prime(p), f"{path}.p", f"{p} is not prime")
    extra = set(obj) - {"p", "modulus"}
    _expect(not extra, path, f"unknown keys {sorted(extra)}")
    if "modulus" not in obj:
        return GF(p)
    mod = obj["modulus"]
    _expect(isinstance(mod, list) and len(mod) >= 2, f"{path}.modulus",
            "modulus must be a coefficient array of degree >= 1")
    coeffs = [_int(c, f"{path}.modulus[{i}]") for i, c in enumerate(mod)]
    for i, c in enumerate(coeffs):
        _expect(0 <= c < p, f"{path}.modulus[{i}]", f"coefficient out of range [0, {p})")
    _expect(coeffs[-1] == 1, f"{path}.modulus", "modulus must be monic")
    try:
        return make_extension(p, Poly(GF(p), coeffs))
    except AlgebraError as exc:
        raise SchemaError(f"{path}.modulus", str(exc)) from exc


# -- elements ------------------------------------------------------------------


def encode_elem(e: FieldElem):
    if e.field.modulus is None:
        return e.code
    return list(e.coeffs)


def decode_elem(field: Field, obj: Any, path: str) -> FieldElem:
    if field.modulus is None:
        v = _int(obj, path)
        _expect(0 <= v < field.p, path, f"element out of range [0, {field.p})")
        return FieldElem(field, v)
    _expect(isinstance(obj, list), path, "extension element must be an array")
    _expect(len(obj) <= field.degree, path,
            f"at most {field.degree} coefficients allowed")
    coeffs = [_int(c, f"{path}[{i}]") for i, c in enumerate(obj)]
    for i, c in enumerate(coeffs):
        _expect(0 <= c < field.p, f"{path}[{i}]",
                f"coefficient out of range [0, {field.p})")
    return FieldElem(field, field.code_from_coeffs(coeffs))


# -- matrices ------------------------------------------------------------------


def encode_matrix(m: Matrix) -> dict:
    f = m.field
    grid = [
        [encode_elem(FieldElem(f, m.code_at(i, j))) for j in range(m.cols)]
        for i in range(m.rows)
    ]
    return {
        "field": encode_field(f),
        "rows": m.rows,
        "cols": m.cols,
        "entries": grid,
    }


def decode_matrix(obj: Any, path: str = "$") -> Matrix:
    _expect(isinstance(obj, dict), path, "matrix must be an object")
    for key in ("field", "rows", "cols", "entries"):
        _expect(key in obj, path, f'missing "{key}"')
    field = decode_field(obj["field"], f"{path}.field")
    rows = _int(obj["rows"], f"{path}.rows")
    cols = _int(obj["cols"], f"{path}.cols")
    _expect(rows >= 0 and cols >= 0, path, "rows and cols must be nonnegative")
    grid = obj["entries"]
    _expect(isinstance(grid, list) and len(grid) == rows, f"{path}.entries",
            f"expected {rows} rows")
    data = []
    for i, row in enumerate(grid):
        _expect(isinstance(row, list) and len(row) == cols,
                f"{path}.entries[{i}]", f"expected {cols} entries")
        for j, cell in enumerate(row):
            data.append(decode_elem(field, cell, f"{path}.entries[{i}][{j}]").code)
    return Matrix(field, rows, cols, data)


# -- representations ---------------------------------------------------------------


def encode_representation(rep: Representation) -> dict:
    return {
        "n": rep.n,
        "field": encode_field(rep.field),
        "x": [encode_matrix(m) for m in rep.x],
        "y": [encode_matrix(m) for m in rep.y],
        "z": encode_matrix(rep.z),
    }


def decode_representation(obj: Any, path: str = "$") -> Representation:
    _expect(isinstance(obj, dict), path, "representation must be an object")
    for key in ("n", "field", "x", "y", "z"):
        _expect(key in obj, path, f'missing "{key}"')
    n = _int(obj["n"], f"{path}.n")
    _expect(n >= 1, f"{path}.n", "rank must be >= 1")
    field = decode_field(obj["field"], f"{path}.field")

    def mats(key: str) -> list[Matrix]:
        arr = obj[key]
        _expect(isinstance(arr, list) and len(arr) == n, f"{path}.{key}",
                f"expected {n} matrices")
        out = []
        for i, mobj in enumerate(arr):
            m = decode_matrix(mobj, f"{path}.{key}[{i}]")
            _expect(m.field == field, f"{path}.{key}[{i}].field",
                    "matrix field differs from the representation field")
            out.append(m)
        return out

    xs = mats("x")
    ys = mats("y")
    z = decode_matrix(obj["z"], f"{path}.z")
    _expect(z.field == field, f"{path}.z.field",
            "matrix field differs from the representation field")
    d = z.rows
    for label, m in [(f"x[{i}]", m) for i, m in enumerate(xs)] + [
        (f"y[{i}]", m) for i, m in enumerate(ys)
    ] + [("z", z)]:
        _expect(m.rows == m.cols, f"{path}.{label}", "matrix must be square")
        _expect(m.rows == d, f"{path}.{label}",
                f"size {m.rows} differs from z size {d}")
    return Representation(HeisenbergAlgebra(n, field), xs, ys, z)


# -- parameters and reports ----------------------------------------------------------


def encode_params(params: ModuleParams) -> dict:
    return {
        "alpha": encode_elem(params.alpha),
        "betas": [encode_elem(b) for b in params.betas],
        "gammas": [encode_elem(g) for g in params.gammas],
    }


def decode_params(field: Field, obj: Any, path: str = "$") -> ModuleParams:
    _expect(isinstance(obj, dict), path, "parameters must be an object")
    for key in ("alpha", "betas", "gammas"):
        _expect(key in obj, path, f'missing "{key}"')
    alpha = decode_elem(field, obj["alpha"], f"{path}.alpha")
    for key in ("betas", "gammas"):
        _expect(isinstance(obj[key], list) and obj[key], f"{path}.{key}",
                "expected a nonempty array")
    betas = [
        decode_elem(field, b, f"{path}.betas[{i}]")
        for i, b in enumerate(obj["betas"])
    ]
    gammas = [
        decode_elem(field, g, f"{path}.gammas[{i}]")
        for i, g in enumerate(obj["gammas"])
    ]
    _expect(len(betas) == len(gammas), path,
            "betas and gammas must have equal length")
    try:
        return ModuleParams(alpha, betas, gammas)
    except AlgebraError as exc:
        raise SchemaError(path, str(exc)) from exc


def encode_invariants(inv: InvariantTuple) -> dict:
    return {
        "alpha": encode_elem(inv.alpha),
        "deltas": [encode_elem(d) for d in inv.deltas],
        "epsilons": [encode_elem(e) for e in inv.epsilons],
    }


def encode_poly(f: Poly) -> list:
    return [encode_elem(f.elem(i)) for i in range(len(f.coeffs))]


def encode_canonical_form(cf: CanonicalForm) -> dict:
    return {
        "invariant_factors": [encode_poly(d) for d in cf.invariant_factors],
        "transform": encode_matrix(cf.transform),
    }


def encode_series(series) -> dict:
    return {
        "chain_dims": series.chain_dims,
        "factors": [
            {
                "dim": f.dim,
                "faithful": f.faithful,
                "invariants": (
                    encode_invariants(f.invariants)
                    if f.invariants is not None
                    else None
                ),
            }
            for f in series.factors
        ],
    }


def encode_subspace(space) -> list:
    f = space.field
    return [
        [encode_elem(FieldElem(f, c)) for c in row] for row in space.vectors
    ]
