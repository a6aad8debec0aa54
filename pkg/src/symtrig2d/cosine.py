"""Antisymmetric and symmetric multivariate discrete cosine transforms.

Four variants per symmetry class, on the triangle ``0 <= y <= x <= 1``:

=======  ==================  ===========  ==================
variant  nodes               node range   frequencies
=======  ==================  ===========  ==================
I        ``m / M``           ``0..M``     ``k``, ``k <= M``
II       ``(m + 1/2) / M``   ``0..M-1``   ``k``, ``k <= M-1``
III      ``m / M``           ``0..M-1``   ``k + 1/2``
IV       ``(m + 1/2) / M``   ``0..M-1``   ``k + 1/2``
=======  ==================  ===========  ==================

Antisymmetric variants use ``m > n`` / ``k > l``; symmetric ones ``m >= n``
/ ``k >= l`` with the diagonal weights ``G``.  Nodes on the edges ``x = 0``
and ``x = 1`` are halved through ``d_{m,M}`` in variants I and III.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List

import numpy as np

from .basis import FrequencyPair, weight_G
from .grids import GridSpec, make_grid
from .interpolation import antisym_extend, h_weight, sym_extend, trig_form
from .transforms import SampleSet

COSINE_FAMILIES = ("cos-anti", "cos-sym")
VARIANTS = ("I", "II", "III", "IV")

_ROMAN = {"1": "I", "2": "II", "3": "III", "4": "IV"}


def normalize_variant(variant) -> str:
    v = str(variant).upper()
    v = _ROMAN.get(v, v)
    if v not in VARIANTS:
        raise ValueError(f"unknown cosine variant {variant!r}")
    return v


def _check_family(family: str) -> bool:
    if family not in COSINE_FAMILIES:
        raise ValueError(f"unknown cosine family {family!r}")
    return family == "cos-anti"


def d_weight(k: int, M: int) -> float:
    return 0.5 if k in (0, M) else 1.0


def _half_shifted_nodes(variant: str) -> bool:
    return variant in ("II", "IV")


def _half_integer_labels(variant: str) -> bool:
    return variant in ("III", "IV")


@dataclass(frozen=True)
class CosineNodeSet:
    """Sampling nodes of one cosine variant, ordered by ``m`` then ``n``."""

    family: str
    variant: str
    M: int
    m: np.ndarray = field(init=False, repr=False)
    n: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        strict = _check_family(self.family)
        object.__setattr__(self, "variant", normalize_variant(self.variant))
        if int(self.M) != self.M or self.M < 1:
            raise ValueError(f"M must be a positive integer, got {self.M!r}")
        object.__setattr__(self, "M", int(self.M))
        top = self.M if self.variant == "I" else self.M - 1
        idx = np.arange(top + 1)
        mm, nn = np.meshgrid(idx, idx, indexing="ij")
        keep = mm > nn if strict else mm >= nn
        object.__setattr__(self, "m", mm[keep])
        object.__setattr__(self, "n", nn[keep])

    def __len__(self) -> int:
        return len(self.m)

    def coordinate(self, index):
        shift = 0.5 if _half_shifted_nodes(self.variant) else 0.0
        return (np.asarray(index, dtype=float) + shift) / self.M

    @property
    def x(self) -> np.ndarray:
        return self.coordinate(self.m)

    @property
    def y(self) -> np.ndarray:
        return self.coordinate(self.n)

    @property
    def points(self) -> np.ndarray:
        return np.column_stack([self.x, self.y])

    def weights(self) -> np.ndarray:
        """Node weights ``d_m d_n`` (I, III) and ``1 / G_mn`` (symmetric)."""
        if self.variant in ("I", "III"):
            w = np.array([d_weight(m, self.M) * d_weight(n, self.M) for m, n in zip(self.m, self.n)])
        else:
            w = np.ones(len(self))
        if self.family == "cos-sym":
            w = w / np.where(self.m == self.n, 2.0, 1.0)
        return w

    def sample(self, f: Callable) -> np.ndarray:
        return np.broadcast_to(np.asarray(f(self.x, self.y)), self.x.shape).copy()


def cosine_pairs(family: str, variant, M: int) -> List[FrequencyPair]:
    """Frequency labels of a variant (half-integers for III and IV)."""
    strict = _check_family(family)
    variant = normalize_variant(variant)
    top = M if variant == "I" else M - 1
    shift = Fraction(1, 2) if _half_integer_labels(variant) else 0
    out = []
    for k in range(top + 1):
        for l in range(k if strict else k + 1):  # noqa: E741
            out.append(FrequencyPair(k + shift, l + shift))
    return out


def _coefficient_factor(family, variant, M, pairs) -> np.ndarray:
    out = []
    for p in pairs:
        k, l = int(p.k), int(p.l)  # noqa: E741  (floor for half-integers)
        c = 4.0 / M**2
        if not _half_integer_labels(variant):
            c *= d_weight(k, M) * d_weight(l, M)
        if family == "cos-sym":
            c /= weight_G(k, l)
        out.append(c)
    return np.array(out)


def cosine_matrix(family: str, x, y, pairs) -> np.ndarray:
    """``B[j, i] = cos^+-_(pairs[i])(x[j], y[j])``, formed from separable factors."""
    k = np.array([float(p.k) for p in pairs])
    l = np.array([float(p.l) for p in pairs])  # noqa: E741
    x = np.asarray(x, dtype=float)[:, None]
    y = np.asarray(y, dtype=float)[:, None]
    first = np.cos(np.pi * k * x) * np.cos(np.pi * l * y)
    second = np.cos(np.pi * l * x) * np.cos(np.pi * k * y)
    return first - second if family == "cos-anti" else first + second


@dataclass(frozen=True)
class CosineSpectrum:
    family: str
    variant: str
    M: int
    values: np.ndarray
    pairs: List[FrequencyPair] = field(default=None, repr=False)

    def __post_init__(self):
        _check_family(self.family)
        object.__setattr__(self, "variant", normalize_variant(self.variant))
        pairs = cosine_pairs(self.family, self.variant, self.M) if self.pairs is None else list(self.pairs)
        values = np.asarray(self.values).ravel()
        if len(pairs) != values.size:
            raise ValueError(f"expected {len(pairs)} coefficients, got {values.size}")
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> Dict[FrequencyPair, complex]:
        return dict(zip(self.pairs, self.values))

    @property
    def nodes(self) -> CosineNodeSet:
        return CosineNodeSet(self.family, self.variant, self.M)

    def __call__(self, x, y):
        return eval_cosine_interpolant(self, x, y)


def cosine_transform(family: str, values, variant, M: int) -> CosineSpectrum:
    """Coefficients of the cosine interpolant through samples on the variant's nodes."""
    nodes = CosineNodeSet(family, variant, M)
    values = np.asarray(values)
    if values.ndim != 1 or values.size != len(nodes):
        raise ValueError(
            f"{family} variant {nodes.variant} with M={M} has {len(nodes)} nodes, "
            f"got {values.size} samples"
        )
    pairs = cosine_pairs(family, nodes.variant, M)
    B = cosine_matrix(family, nodes.x, nodes.y, pairs)
    coeffs = _coefficient_factor(family, nodes.variant, M, pairs) * (B.T @ (nodes.weights() * values))
    return CosineSpectrum(family, nodes.variant, M, coeffs, pairs)


def amdct(values, variant, M: int) -> CosineSpectrum:
    """Antisymmetric discrete cosine transform of the given variant."""
    return cosine_transform("cos-anti", values, variant, M)


def smdct(values, variant, M: int) -> CosineSpectrum:
    """Symmetric discrete cosine transform of the given variant."""
    return cosine_transform("cos-sym", values, variant, M)


def eval_cosine_interpolant(sp: CosineSpectrum, x, y, chunk: int = 8192):
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    shape = x.shape
    xs, ys = x.ravel(), y.ravel()
    dtype = np.result_type(sp.values.dtype, float)
    out = np.empty(xs.size, dtype=dtype)
    for s in range(0, xs.size, chunk):
        B = cosine_matrix(sp.family, xs[s : s + chunk], ys[s : s + chunk], sp.pairs)
        out[s : s + chunk] = B @ sp.values
    return out.reshape(shape)


def cosine_gram(family: str, variant, M: int) -> np.ndarray:
    """Weighted Gram matrix ``sum_nodes w cos_p cos_q`` of a variant's basis."""
    nodes = CosineNodeSet(family, variant, M)
    pairs = cosine_pairs(family, nodes.variant, M)
    B = cosine_matrix(family, nodes.x, nodes.y, pairs)
    return B.T @ (nodes.weights()[:, None] * B)


def cosine_gram_diagonal(family: str, variant, M: int) -> np.ndarray:
    """Diagonal the Gram matrix must have for the transform to invert sampling."""
    variant = normalize_variant(variant)
    pairs = cosine_pairs(family, variant, M)
    return 1.0 / _coefficient_factor(family, variant, M, pairs)


# extension operators


def extend_even(f: Callable, L: float = 1.0) -> Callable:
    """Even reflection of ``f`` on ``[0, L]^2`` across both axes onto ``[-L, L]^2``."""

    def E(x, y):
        return f(np.abs(np.asarray(x, dtype=float)), np.abs(np.asarray(y, dtype=float)))

    return E


def extend_R(f: Callable) -> Callable:
    """Odd reflection about ``x = 1`` and ``y = 1`` from ``[0, 1]^2`` onto ``[0, 2]^2``."""

    def R(x, y):
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        sx = np.where(x > 1.0, -1.0, 1.0)
        sy = np.where(y > 1.0, -1.0, 1.0)
        xr = np.where(x > 1.0, 2.0 - x, x)
        yr = np.where(y > 1.0, 2.0 - y, y)
        return sx * sy * np.asarray(f(xr, yr))

    return R


_DERIVATION = {
    # variant: (N per M, T, b)
    "I": (2, 2.0, 1.0),
    "II": (2, 2.0, 0.5),
    "III": (4, 4.0, 1.0),
    "IV": (4, 4.0, 0.5),
}


def derive_from_trig(f: Callable, variant, family: str, M: int, tol: float = 1e-9) -> CosineSpectrum:
    """Cosine spectrum obtained through the exponential trigonometric form.

    ``f`` on the triangle is extended (anti)symmetrically to the unit square,
    then evenly (I, II) or oddly-about-1 and evenly (III, IV), sampled on the
    matching full grid, and passed through :func:`trig_form`.  The sine parts
    must vanish; the cosine part is the spectrum.
    """
    strict = _check_family(family)
    variant = normalize_variant(variant)
    per_M, T, b = _DERIVATION[variant]
    g = antisym_extend(f) if strict else sym_extend(f)
    if variant in ("III", "IV"):
        g = extend_even(extend_R(g), 2.0)
    else:
        g = extend_even(g, 1.0)
    N = per_M * M
    spec = GridSpec(a=-T / 2, b=b, N=N, T=T)
    grid = make_grid(spec, "anti" if strict else "sym")
    # mirror-exact coordinates: the extension jumps across x = y, so the
    # reflected nodes must land on the diagonal bit-for-bit
    x = T * (grid.m + b - N / 2) / N
    y = T * (grid.n + b - N / 2) / N
    s = SampleSet(spec, grid.kind, np.broadcast_to(np.asarray(g(x, y)), x.shape))
    tf = trig_form(s)
    residue = max(np.abs(tf.B).max(), np.abs(tf.C).max(), np.abs(tf.D).max())
    scale = max(1.0, np.abs(tf.A).max())
    if residue > tol * scale:
        raise ValueError(f"extension symmetry violated: sine coefficients reach {residue:.3e}")
    pairs = cosine_pairs(family, variant, M)
    values = []
    for p in pairs:
        if _half_integer_labels(variant):
            k, l = int(2 * p.k), int(2 * p.l)  # noqa: E741
        else:
            k, l = int(p.k), int(p.l)  # noqa: E741
        values.append(h_weight(k) * h_weight(l) * tf.A[k, l])
    values = np.array(values)
    if np.isrealobj(f(np.array([0.5]), np.array([0.25]))):
        values = values.real
    return CosineSpectrum(family, variant, M, values, pairs)
