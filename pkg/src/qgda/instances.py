"""Built-in extensions and loading of algebra-definition files."""
from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

from .basealg import (
    BaseAlgebra,
    BaseElement,
    NotInvertible,
    make_cyclic_coordinate_algebra,
    make_gaussian_base,
)
from .calculus import Coordinate, make_coordinate
from .extension import ExtAlgebra


@lru_cache(maxsize=None)
def quantum_plane(N: int) -> ExtAlgebra:
    """Reduced quantum plane x y = q y x, x^N = y^N = 1, as A[t] with t = y."""
    return ExtAlgebra(make_cyclic_coordinate_algebra(N), 1, name=f"quantum-plane:{N}")


@lru_cache(maxsize=None)
def quaternions() -> ExtAlgebra:
    """H = C[i]: base span{1, j}, t = i, i^2 = -1, conjugation as twist."""
    return ExtAlgebra(make_gaussian_base(), -1, name="quaternion")


def load_algebra_file(path: str | Path) -> ExtAlgebra:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    base = BaseAlgebra.from_json(data, name=f"file:{Path(path).name}")
    return ExtAlgebra(base, int(data.get("sign", 1)), name=str(path))


def save_algebra_file(ext: ExtAlgebra, path: str | Path) -> None:
    Path(path).write_text(json.dumps(ext.base.to_json(ext.sign), indent=2), encoding="utf-8")


def resolve_algebra(spec: str) -> ExtAlgebra:
    """'quantum-plane:N', 'quaternion', or a path to an algebra JSON file."""
    s = spec.strip()
    low = s.lower()
    if low in ("quaternion", "quaternions", "h"):
        return quaternions()
    for prefix in ("quantum-plane", "qp", "cyclic"):
        if low.startswith(prefix + ":"):
            N = int(low.split(":", 1)[1])
            if N < 2:
                raise ValueError("N must be >= 2")
            return quantum_plane(N)
    if Path(s).exists():
        return load_algebra_file(s)
    raise ValueError(f"unknown algebra {spec!r}: use quantum-plane:N, quaternion, or a file path")


def generator_symbols(ext: ExtAlgebra) -> dict[str, object]:
    """Names usable in expressions: 't' for tau plus identifier-like basis names."""
    syms: dict[str, object] = {"t": ext.tau()}
    base = ext.base
    for i, name in enumerate(base.basis_names):
        if name.isidentifier():
            syms[name] = ext.from_base(base.basis(i))
    if base.name.startswith("cyclic:"):
        syms["y"] = ext.tau()
    if base.name == "gaussian":
        syms["i"] = ext.tau()
        syms["k"] = ext.tau() * ext.from_base(base.basis(1))
    return syms


def default_coordinate_element(ext: ExtAlgebra) -> BaseElement:
    base = ext.base
    for name in ("x", "j"):
        if name in base.basis_names:
            return base.basis_element(name)
    for i in range(base.dim):
        try:
            make_coordinate(ext, base.basis(i))
            return base.basis(i)
        except NotInvertible:
            continue
    raise NotInvertible("no basis element of this algebra has invertible Delta")


def default_coordinate(ext: ExtAlgebra) -> Coordinate:
    return make_coordinate(ext, default_coordinate_element(ext))
