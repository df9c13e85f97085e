"""Coordinatewise-ordered vectors in R^n and the cone predicates behind them.

The positive cone is the nonnegative orthant and its interior is the strictly
positive orthant.  ``leq``/``lt`` are defined through cone membership of the
difference, so the order/cone correspondence holds by construction rather
than by a separate proof.  Every predicate uses exact float comparison:
tolerances belong to convergence checks, never to the order itself (an
epsilon-order would not even be transitive).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Vec",
    "SpaceSpec",
    "in_cone",
    "in_interior",
    "leq",
    "lt",
    "minorant_scale",
    "bounding_scale",
    "vec_from_json",
]


class Vec:
    """Immutable vector in R^n, used both for points and for distance values.

    NaN and infinities are rejected at construction so that the order
    predicates stay total on every value that exists.
    """

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[float]):
        cs = tuple(float(c) for c in coords)
        if not cs:
            raise ValueError("a vector needs at least one coordinate")
        for c in cs:
            if not math.isfinite(c):
                raise ValueError(f"non-finite coordinate: {c!r}")
        self.coords = cs

    @classmethod
    def zeros(cls, n: int) -> "Vec":
        return cls((0.0,) * n)

    @classmethod
    def ones(cls, n: int) -> "Vec":
        return cls((1.0,) * n)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> float:
        return self.coords[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Vec) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"Vec({list(self.coords)!r})"

    def _same_dim(self, other: "Vec") -> None:
        if not isinstance(other, Vec):
            raise TypeError(f"expected Vec, got {type(other).__name__}")
        if len(other.coords) != len(self.coords):
            raise ValueError(
                f"dimension mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def __add__(self, other: "Vec") -> "Vec":
        self._same_dim(other)
        return Vec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Vec") -> "Vec":
        self._same_dim(other)
        return Vec(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Vec":
        return Vec(-a for a in self.coords)

    def __mul__(self, scalar: float) -> "Vec":
        return Vec(a * scalar for a in self.coords)

    __rmul__ = __mul__


def in_cone(x: Vec) -> bool:
    """True iff every coordinate of x is >= 0 (x lies in the positive cone)."""
    return all(c >= 0.0 for c in x.coords)


def in_interior(x: Vec) -> bool:
    """True iff every coordinate of x is > 0 (x lies in the cone's interior)."""
    return all(c > 0.0 for c in x.coords)


def leq(x: Vec, y: Vec) -> bool:
    """Coordinatewise order: x precedes y iff y - x lies in the cone."""
    return in_cone(y - x)


def lt(x: Vec, y: Vec) -> bool:
    """Strict order: x strictly precedes y iff y - x lies in the interior."""
    return in_interior(y - x)


@dataclass(frozen=True)
class SpaceSpec:
    """Dimension together with a strictly positive base vector.

    The base vector fixes the order interval [-base, base] whose gauge the
    rest of the package uses for scalarization.
    """

    n: int
    base: Vec

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n!r}")
        if len(self.base) != self.n:
            raise ValueError(
                f"base vector has {len(self.base)} coordinates, expected {self.n}"
            )
        if not in_interior(self.base):
            raise ValueError("base vector must be strictly positive")

    @classmethod
    def from_json(cls, obj: dict) -> "SpaceSpec":
        if not isinstance(obj, dict) or "n" not in obj or "base" not in obj:
            raise ValueError('space spec needs {"n": int, "base": [numbers]}')
        return cls(obj["n"], vec_from_json(obj["base"]))


def vec_from_json(values: Sequence[float]) -> Vec:
    if not isinstance(values, (list, tuple)):
        raise ValueError(f"expected a JSON array of numbers, got {values!r}")
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ValueError(f"expected a number, got {v!r}")
    return Vec(values)


def minorant_scale(vectors: Iterable[Vec], spec: SpaceSpec) -> float:
    """Positive scale putting the base strictly below every vector of a set.

    For a finite set A of strictly positive vectors returns
    ``lam = 0.5 * min(x_i / base_i)`` and re-verifies ``lt(lam * base, x)``
    for every member before returning, so the result is a checked witness
    rather than a formula output.
    """
    vs = list(vectors)
    if not vs:
        raise ValueError("minorant_scale needs a nonempty set")
    b = spec.base
    for x in vs:
        if len(x) != spec.n:
            raise ValueError(f"dimension mismatch: {len(x)} vs {spec.n}")
        if not in_interior(x):
            raise ValueError(f"minorant_scale needs strictly positive vectors: {x!r}")
    lam = 0.5 * min(x[i] / b[i] for x in vs for i in range(spec.n))
    for x in vs:
        if not lt(lam * b, x):
            raise ArithmeticError("minorant witness failed re-verification")
    return lam


def bounding_scale(vectors: Iterable[Vec], spec: SpaceSpec) -> float:
    """Positive scale trapping every vector of a set strictly inside [-lam*b, lam*b].

    Returns ``lam = 1 + max(|x_i| / base_i)`` over the set (1 for the set
    containing only the zero vector) and re-verifies both strict bounds for
    every member before returning.
    """
    vs = list(vectors)
    if not vs:
        raise ValueError("bounding_scale needs a nonempty set")
    b = spec.base
    for x in vs:
        if len(x) != spec.n:
            raise ValueError(f"dimension mismatch: {len(x)} vs {spec.n}")
    lam = 1.0 + max(abs(x[i]) / b[i] for x in vs for i in range(spec.n))
    scaled = lam * b
    for x in vs:
        if not (lt(-scaled, x) and lt(x, scaled)):
            raise ArithmeticError("bounding witness failed re-verification")
    return lam
