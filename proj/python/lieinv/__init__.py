"""Differential invariants and invariant second-order PDEs of low-dimensional Lie algebras."""

from __future__ import annotations

import json
from typing import Mapping, Sequence

from . import _lieinv
from ._lieinv import LieinvError, catalog_names

__all__ = [
    "LieinvError",
    "catalog_names",
    "validate",
    "invariants",
    "reproduce",
    "to_covariant",
    "from_covariant",
    "canonical",
    "is_zero",
]

DEFAULT_SEED = 0xC0FFEE


def _params(params: Mapping[str, object] | None) -> dict[str, str]:
    return {k: str(v) for k, v in (params or {}).items()}


def validate(path: str) -> dict:
    """Jacobi check of a structure-constant JSON file."""
    return json.loads(_lieinv.validate_file(str(path)))


def invariants(
    algebra: str,
    pipeline: str = "transitive",
    m: int = 2,
    params: Mapping[str, object] | None = None,
    seed: int = DEFAULT_SEED,
    points: int = 32,
    tol: float = 1e-7,
) -> dict:
    """Invariant set and PDE template of a catalog algebra."""
    return json.loads(_lieinv.invariants(algebra, pipeline, m, _params(params), seed, points, tol))


def reproduce(
    tables: Sequence[str] = (),
    params: Mapping[str, Sequence[Mapping[str, object]]] | None = None,
    seed: int = DEFAULT_SEED,
    points: int = 32,
    tol: float = 1e-7,
) -> dict:
    """Runs the table fixture suite; `params` maps an algebra to parameter draws."""
    draws = {alg: [_params(d) for d in ds] for alg, ds in (params or {}).items()}
    return json.loads(_lieinv.reproduce(list(tables), draws, seed, points, tol))


def to_covariant(pde: str, seed: int = DEFAULT_SEED) -> dict:
    """Covariant form of a scalar PDE given in the two-line PDE file format."""
    return json.loads(_lieinv.covariant(pde, True, seed))


def from_covariant(pde: str, seed: int = DEFAULT_SEED) -> dict:
    """Scalar PDE of a rescale-invariant covariant form."""
    return json.loads(_lieinv.covariant(pde, False, seed))


def canonical(expr: str, coords: Sequence[str], dep: str = "u") -> str:
    """Canonical rendering of an expression over the given jet space."""
    return _lieinv.canonical(expr, list(coords), dep)


def is_zero(expr: str, coords: Sequence[str], dep: str = "u", seed: int = DEFAULT_SEED) -> bool:
    """Randomized numeric zero test."""
    return _lieinv.is_zero(expr, list(coords), dep, seed)
