"""Shifted square and triangular sampling grids.

A grid is fixed by a global shift ``a``, a sub-cell shift ``b`` in
``[0, 1]``, a density ``N`` and a side length ``T``; node ``(m, n)`` sits at
``(a + (m + b) T / N, a + (n + b) T / N)``.  The ``kind`` keeps all index
pairs (``full``), only ``m > n`` (``anti``) or ``m >= n`` (``sym``).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

import numpy as np


class GridKind(str, Enum):
    FULL = "full"
    ANTI = "anti"
    SYM = "sym"

    def cardinality(self, N: int) -> int:
        if self is GridKind.FULL:
            return N * N
        if self is GridKind.ANTI:
            return N * (N - 1) // 2
        return N * (N + 1) // 2

    def keeps(self, m, n):
        if self is GridKind.FULL:
            return np.ones(np.broadcast(m, n).shape, dtype=bool)
        if self is GridKind.ANTI:
            return m > n
        return m >= n


@dataclass(frozen=True)
class GridSpec:
    a: float = 0.0
    b: float = 0.5
    N: int = 4
    T: float = 1.0

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N!r}")
        object.__setattr__(self, "N", int(self.N))
        if not 0.0 <= self.b <= 1.0:
            raise ValueError(f"b must lie in [0, 1], got {self.b!r}")
        if not self.T > 0:
            raise ValueError(f"T must be positive, got {self.T!r}")
        if not np.isfinite(self.a):
            raise ValueError("a must be finite")

    @property
    def M(self) -> int:
        return self.N // 2

    @property
    def odd(self) -> bool:
        return self.N % 2 == 1

    @property
    def tau(self) -> complex:
        """Phase ``exp(2 pi i (N a + b))`` coupling the even-N boundary coefficients.

        Uses the shift of the unit-side grid, i.e. ``a / T``.
        """
        phase = self.N * (self.a / self.T) + self.b
        theta = 2.0 * np.pi * np.remainder(phase, 1.0)
        return complex(np.cos(theta), np.sin(theta))

    def normalized(self) -> "GridSpec":
        """Same grid after the rescaling ``(x, y) -> (x / T, y / T)``."""
        return GridSpec(self.a / self.T, self.b, self.N, 1.0)

    def coordinate(self, index):
        return self.a + (np.asarray(index, dtype=float) + self.b) * self.T / self.N


class GridPoint(NamedTuple):
    m: int
    n: int
    x: float
    y: float


@dataclass(frozen=True)
class Grid:
    """Nodes of one grid kind, ordered by ``m`` then ``n``."""

    spec: GridSpec
    kind: GridKind
    m: np.ndarray
    n: np.ndarray
    x: np.ndarray
    y: np.ndarray

    def __len__(self) -> int:
        return len(self.m)

    def __iter__(self) -> Iterator[GridPoint]:
        for row in zip(self.m, self.n, self.x, self.y):
            yield GridPoint(int(row[0]), int(row[1]), float(row[2]), float(row[3]))

    def __getitem__(self, i) -> GridPoint:
        return GridPoint(int(self.m[i]), int(self.n[i]), float(self.x[i]), float(self.y[i]))

    @property
    def points(self) -> np.ndarray:
        return np.column_stack([self.x, self.y])

    def normalized_points(self):
        """Coordinates rescaled to unit side length."""
        return self.x / self.spec.T, self.y / self.spec.T


def make_grid(spec: GridSpec, kind="full") -> Grid:
    kind = GridKind(kind)
    idx = np.arange(spec.N)
    mm, nn = np.meshgrid(idx, idx, indexing="ij")
    keep = kind.keeps(mm, nn)
    m = mm[keep]
    n = nn[keep]
    return Grid(spec, kind, m, n, spec.coordinate(m), spec.coordinate(n))


def fundamental_domain_contains(x, y):
    """True strictly inside the open triangle ``0 < y < x < 1``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return (0.0 < y) & (y < x) & (x < 1.0)


def triangle_raster(resolution: int):
    """Points ``(i / R, j / R)`` of the closed triangle ``0 <= y <= x <= 1``."""
    R = int(resolution)
    t = np.arange(R + 1) / R
    ii, jj = np.meshgrid(np.arange(R + 1), np.arange(R + 1), indexing="ij")
    keep = ii >= jj
    return t[ii[keep]], t[jj[keep]]
