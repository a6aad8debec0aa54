"""Antisymmetric and symmetric discrete Fourier transforms on triangular grids.

The forward transforms are direct sums over the grid nodes (one dense
matrix-vector product); no fast algorithm is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from .basis import FrequencyPair, weight_G
from .grids import Grid, GridKind, GridSpec, make_grid

EXP_FAMILIES = ("exp-anti", "exp-sym")

_KIND_OF = {"exp-anti": GridKind.ANTI, "exp-sym": GridKind.SYM}


@dataclass(frozen=True)
class SampleSet:
    """Complex samples aligned with :func:`make_grid` ordering."""

    spec: GridSpec
    kind: GridKind
    values: np.ndarray

    def __post_init__(self):
        kind = GridKind(self.kind)
        object.__setattr__(self, "kind", kind)
        values = np.asarray(self.values, dtype=complex).ravel()
        if values.size != kind.cardinality(self.spec.N):
            raise ValueError(
                f"{kind.value} grid with N={self.spec.N} has "
                f"{kind.cardinality(self.spec.N)} nodes, got {values.size} values"
            )
        object.__setattr__(self, "values", values)

    @property
    def grid(self) -> Grid:
        return make_grid(self.spec, self.kind)

    @classmethod
    def from_function(cls, f, spec: GridSpec, kind) -> "SampleSet":
        """Sample a vectorised ``f(x, y)`` on the grid."""
        grid = make_grid(spec, kind)
        values = np.broadcast_to(np.asarray(f(grid.x, grid.y)), grid.x.shape)
        return cls(spec, grid.kind, values)


def dominant_pairs(N: int, strict: bool, low: int = 0, high: Optional[int] = None) -> List[FrequencyPair]:
    """Pairs ``low <= l (<)<= k <= high`` ordered by ``k`` then ``l``."""
    high = N - 1 if high is None else high
    out = []
    for k in range(low, high + 1):
        for l in range(low, k if strict else k + 1):  # noqa: E741
            out.append(FrequencyPair(k, l))
    return out


def _pair_arrays(pairs: Sequence[FrequencyPair]):
    k = np.array([float(p.k) for p in pairs])
    l = np.array([float(p.l) for p in pairs])  # noqa: E741
    return k, l


def basis_matrix(family: str, x, y, pairs: Sequence[FrequencyPair]) -> np.ndarray:
    """Matrix ``B[j, i] = E_(pairs[i])(x[j], y[j])`` for an exponential family."""
    k, l = _pair_arrays(pairs)  # noqa: E741
    x = np.asarray(x, dtype=float)[:, None]
    y = np.asarray(y, dtype=float)[:, None]
    first = np.exp(2j * np.pi * np.remainder(k * x + l * y, 1.0))
    second = np.exp(2j * np.pi * np.remainder(k * y + l * x, 1.0))
    if family == "exp-anti":
        return first - second
    if family == "exp-sym":
        return first + second
    raise ValueError(f"not an exponential family: {family!r}")


@dataclass(frozen=True)
class Spectrum:
    """Coefficients over the dominant index set ``{0..N-1}``.

    Only dominant pairs are stored; indexing with a non-dominant pair is
    answered through the label (anti)symmetry.
    """

    family: str
    spec: GridSpec
    values: np.ndarray
    pairs: List[FrequencyPair] = field(default=None, repr=False)

    def __post_init__(self):
        if self.family not in EXP_FAMILIES:
            raise ValueError(f"unknown spectrum family {self.family!r}")
        strict = self.family == "exp-anti"
        pairs = dominant_pairs(self.spec.N, strict) if self.pairs is None else list(self.pairs)
        values = np.asarray(self.values, dtype=complex).ravel()
        if len(pairs) != values.size:
            raise ValueError(f"expected {len(pairs)} coefficients, got {values.size}")
        for p in pairs:
            if not p.is_dominant(strict):
                raise ValueError(f"pair {p} is not dominant for {self.family}")
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.pairs)

    def _index(self) -> Dict[FrequencyPair, int]:
        return {p: i for i, p in enumerate(self.pairs)}

    def __getitem__(self, p) -> complex:
        p = FrequencyPair.coerce(p)
        index = self._index()
        if p in index:
            return complex(self.values[index[p]])
        q = p.swapped()
        if self.family == "exp-anti":
            if p.k == p.l:
                return 0j
            if q in index:
                return -complex(self.values[index[q]])
        elif q in index:
            return complex(self.values[index[q]])
        raise KeyError(p)

    def as_dict(self) -> Dict[FrequencyPair, complex]:
        return {p: complex(v) for p, v in zip(self.pairs, self.values)}

    @classmethod
    def unit(cls, family: str, spec: GridSpec, p) -> "Spectrum":
        pairs = dominant_pairs(spec.N, family == "exp-anti")
        values = np.zeros(len(pairs), dtype=complex)
        values[pairs.index(FrequencyPair.coerce(p))] = 1.0
        return cls(family, spec, values)


def _require_kind(s: SampleSet, kind: GridKind):
    if s.kind is not kind:
        raise ValueError(f"grid kind must be {kind.value}, got {s.kind.value}")


def _forward(s: SampleSet, family: str) -> Spectrum:
    grid = s.grid
    x, y = grid.normalized_points()
    N = s.spec.N
    pairs = dominant_pairs(N, family == "exp-anti")
    B = basis_matrix(family, x, y, pairs)
    f = s.values
    if family == "exp-sym":
        f = f / np.where(grid.m == grid.n, 2.0, 1.0)
    beta = B.conj().T @ f / N**2
    if family == "exp-sym":
        beta = beta / np.array([weight_G(p.k, p.l) for p in pairs])
    return Spectrum(family, s.spec, beta, pairs)


def _inverse(sp: Spectrum, kind: GridKind) -> SampleSet:
    grid = make_grid(sp.spec, kind)
    x, y = grid.normalized_points()
    B = basis_matrix(sp.family, x, y, sp.pairs)
    return SampleSet(sp.spec, kind, B @ sp.values)


def adft_forward(s: SampleSet) -> Spectrum:
    """Antisymmetric DFT: ``beta_kl = N^-2 sum_{m>n} f conj(E-_kl)``."""
    _require_kind(s, GridKind.ANTI)
    return _forward(s, "exp-anti")


def adft_inverse(sp: Spectrum) -> SampleSet:
    if sp.family != "exp-anti":
        raise ValueError(f"spectrum family must be exp-anti, got {sp.family}")
    return _inverse(sp, GridKind.ANTI)


def sdft_forward(s: SampleSet) -> Spectrum:
    """Symmetric DFT with diagonal weights ``G_kl`` and ``G_mn``."""
    _require_kind(s, GridKind.SYM)
    return _forward(s, "exp-sym")


def sdft_inverse(sp: Spectrum) -> SampleSet:
    if sp.family != "exp-sym":
        raise ValueError(f"spectrum family must be exp-sym, got {sp.family}")
    return _inverse(sp, GridKind.SYM)


def forward(s: SampleSet) -> Spectrum:
    return adft_forward(s) if s.kind is GridKind.ANTI else sdft_forward(s)


def inverse(sp: Spectrum) -> SampleSet:
    return adft_inverse(sp) if sp.family == "exp-anti" else sdft_inverse(sp)


def _in_range(p: FrequencyPair, N: int, strict: bool) -> bool:
    if not (p.is_integer and p.is_dominant(strict)):
        return False
    if 0 <= p.l and p.k <= N - 1:
        return True
    M = N // 2
    # odd N also admits the symmetric window {-M..M}
    return N % 2 == 1 and -M <= p.l and p.k <= M


def gram_matrix(family: str, spec: GridSpec, pairs: Optional[Sequence[FrequencyPair]] = None) -> np.ndarray:
    """Discrete Gram matrix of the basis on the family's triangular grid.

    The symmetric family uses the node weights ``1 / G_mn``.
    """
    strict = family == "exp-anti"
    pairs = dominant_pairs(spec.N, strict) if pairs is None else [FrequencyPair.coerce(p) for p in pairs]
    grid = make_grid(spec, _KIND_OF[family])
    x, y = grid.normalized_points()
    B = basis_matrix(family, x, y, pairs)
    w = np.where(grid.m == grid.n, 0.5, 1.0) if family == "exp-sym" else np.ones(len(grid))
    return B.T @ (w[:, None] * B.conj())


def check_discrete_orthogonality(family: str, spec: GridSpec, p, q) -> complex:
    """Weighted sum ``sum E_p conj(E_q)`` over the family's grid."""
    if family not in EXP_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    p = FrequencyPair.coerce(p)
    q = FrequencyPair.coerce(q)
    strict = family == "exp-anti"
    for r in (p, q):
        if not _in_range(r, spec.N, strict):
            raise ValueError(f"pair {r} outside the dominant range for N={spec.N}")
    return complex(gram_matrix(family, spec, [p, q])[0, 1])
