"""Quadrature, interpolation errors and model functions on the fundamental domain.

Integrals over the triangle ``0 < y < x < 1`` use a midpoint raster of
``R x R`` cells on the unit square.  In ``half-square`` mode the integrand
is evaluated at the folded point ``(max(x, y), min(x, y))`` of every cell
and the square sum is halved; in ``triangle-filter`` mode only cells with
center ``x > y`` contribute.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, NamedTuple, Sequence

import numpy as np

from .basis import FrequencyPair, evaluate, laplace_eigenvalue, mixed_eigenvalue, weight_G
from .cosine import CosineNodeSet, cosine_transform
from .grids import GridSpec
from .interpolation import h_weight, interp_anti, interp_sym
from .transforms import SampleSet

GAUSSIAN_CENTER = (0.707, 0.293)
GAUSSIAN_SIGMA = 0.079

REDUCTIONS = ("half-square", "triangle-filter")
STRIPS = ("y=0", "x=1", "x=y")


def gaussian_model(x, y, center=GAUSSIAN_CENTER, sigma=GAUSSIAN_SIGMA):
    """Gaussian bump ``exp(-|p - center|^2 / (2 sigma^2))``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.exp(-((x - center[0]) ** 2 + (y - center[1]) ** 2) / (2.0 * sigma**2))


def ripple_model(x, y, center=GAUSSIAN_CENTER):
    """Radial ripple ``cos(40 r) / 15`` around ``center``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.cos(40.0 * np.hypot(x - center[0], y - center[1])) / 15.0


MODELS = {"gaussian": gaussian_model, "ripple": ripple_model}


@dataclass(frozen=True)
class QuadratureSpec:
    resolution: int = 1000
    reduction: str = "half-square"

    def __post_init__(self):
        if int(self.resolution) != self.resolution or self.resolution < 2:
            raise ValueError(f"quadrature resolution must be an integer >= 2, got {self.resolution!r}")
        object.__setattr__(self, "resolution", int(self.resolution))
        if self.reduction not in REDUCTIONS:
            raise ValueError(f"reduction must be one of {REDUCTIONS}, got {self.reduction!r}")


def quadrature_rule(q: QuadratureSpec):
    """Points and weights of the rule, points already in the closed triangle."""
    R = q.resolution
    t = (np.arange(R) + 0.5) / R
    xx, yy = np.meshgrid(t, t, indexing="ij")
    if q.reduction == "half-square":
        x = np.maximum(xx, yy).ravel()
        y = np.minimum(xx, yy).ravel()
        w = np.full(x.size, 0.5 / R**2)
    else:
        keep = xx > yy
        x, y = xx[keep], yy[keep]
        w = np.full(x.size, 1.0 / R**2)
    return x, y, w


def integrate_fundamental(g: Callable, q: QuadratureSpec = QuadratureSpec(), chunk: int = 250_000):
    """Midpoint approximation of the integral of ``g`` over the fundamental domain."""
    x, y, w = quadrature_rule(q)
    total = 0.0
    for s in range(0, x.size, chunk):
        v = np.broadcast_to(np.asarray(g(x[s : s + chunk], y[s : s + chunk])), x[s : s + chunk].shape)
        total = total + np.dot(w[s : s + chunk], v)
    return total


def nominal_normalization(family: str, p) -> float:
    """Conventional expansion constant: 1, 1/G, 4 and 4/G for the four families."""
    p = FrequencyPair.coerce(p)
    G = weight_G(p.k, p.l)
    return {"exp-anti": 1.0, "exp-sym": 1.0 / G, "cos-anti": 4.0, "cos-sym": 4.0 / G}[family]


def cosine_norm_exact(family: str, p) -> float:
    """Closed form of the squared norm of a cosine basis function on the triangle.

    Equals ``G_kl / (4 h_k h_l)``; it departs from ``1/4`` (resp. ``G/4``)
    whenever one label is zero.
    """
    p = FrequencyPair.coerce(p)
    G = weight_G(p.k, p.l) if family == "cos-sym" else 1
    return G / (4.0 * h_weight(p.k) * h_weight(p.l))


def cosine_norm(family: str, p, q: QuadratureSpec = QuadratureSpec()) -> float:
    """Squared norm of a cosine basis function, by quadrature."""
    p = FrequencyPair.coerce(p)
    return float(integrate_fundamental(lambda x, y: evaluate(family, p, x, y) ** 2, q))


def continuous_coefficient(f: Callable, family: str, p, q: QuadratureSpec = QuadratureSpec(),
                           normalization: str = "nominal") -> complex:
    """Expansion coefficient ``c_p = norm * integral f conj(basis_p)``.

    ``normalization="nominal"`` uses the conventional constants; ``"exact"`` divides
    by the true squared norm of the basis function instead.
    """
    p = FrequencyPair.coerce(p)
    if normalization == "nominal":
        scale = nominal_normalization(family, p)
    elif normalization == "exact":
        if family.startswith("cos"):
            scale = 1.0 / cosine_norm_exact(family, p)
        else:
            scale = 1.0 / (weight_G(p.k, p.l) if family == "exp-sym" else 1.0)
    else:
        raise ValueError(f"normalization must be 'nominal' or 'exact', got {normalization!r}")
    integral = integrate_fundamental(lambda x, y: f(x, y) * np.conj(evaluate(family, p, x, y)), q)
    return complex(scale * integral)


def continuous_gram(family: str, pairs: Sequence, q: QuadratureSpec = QuadratureSpec(),
                    chunk: int = 250_000) -> np.ndarray:
    """``integral basis_p conj(basis_q)`` over the triangle for all pairs."""
    pairs = [FrequencyPair.coerce(p) for p in pairs]
    x, y, w = quadrature_rule(q)
    G = np.zeros((len(pairs), len(pairs)), dtype=complex)
    for s in range(0, x.size, chunk):
        xs, ys = x[s : s + chunk], y[s : s + chunk]
        B = np.column_stack([evaluate(family, p, xs, ys) for p in pairs])
        G += B.T @ (w[s : s + chunk, None] * B.conj())
    return G


def l2_error(interpolant: Callable, reference: Callable, q: QuadratureSpec = QuadratureSpec()) -> float:
    """Integral of ``|interpolant - reference|^2`` over the fundamental domain."""
    return float(integrate_fundamental(lambda x, y: np.abs(interpolant(x, y) - reference(x, y)) ** 2, q))


# finite differences

_D2 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
_OFFSETS = np.arange(-2, 3)


class LaplaceResidual(NamedTuple):
    laplace: float
    mixed: float
    eigenvalue: float
    mixed_eigenvalue: float

    def within(self, rtol: float = 1e-4) -> bool:
        return (self.laplace <= rtol * (1 + abs(self.eigenvalue))
                and self.mixed <= rtol * (1 + abs(self.mixed_eigenvalue)))


def _stencil(family, p, x, y, h):
    dx, dy = np.meshgrid(_OFFSETS * h, _OFFSETS * h, indexing="ij")
    return evaluate(family, p, x + dx, y + dy)


def laplace_residual(family: str, p, x: float, y: float, h: float = 1e-3,
                     h_mixed: float = 1e-2) -> LaplaceResidual:
    """Residuals of the Laplace and mixed-derivative eigen-equations at ``(x, y)``.

    Uses fourth-order central differences; each residual is
    ``|FD(basis) - eigenvalue * basis|``.  The fourth derivative gets its
    own step: at ``h = 1e-3`` its rounding floor ``eps / h^4`` is already
    about ``1e-4``.
    """
    p = FrequencyPair.coerce(p)
    F = _stencil(family, p, x, y, h)
    centre = F[2, 2]
    lap = (_D2 @ F[:, 2] + _D2 @ F[2, :]) / h**2
    mixed = _D2 @ _stencil(family, p, x, y, h_mixed) @ _D2 / h_mixed**4
    lam = laplace_eigenvalue(family, p)
    mu = mixed_eigenvalue(family, p)
    return LaplaceResidual(float(abs(lap - lam * centre)), float(abs(mixed - mu * centre)), lam, mu)


# interpolation error table


class ErrorTableRow(NamedTuple):
    N: int
    err_exp_anti: float
    err_exp_sym: float
    err_cos2_anti: float
    err_cos2_sym: float


def interpolants(model: Callable, N: int):
    """The four interpolants of ``model`` compared in the error table."""
    spec = GridSpec(a=0.0, b=0.5, N=N, T=1.0)
    out = {
        "exp-anti": interp_anti(SampleSet.from_function(model, spec, "anti")),
        "exp-sym": interp_sym(SampleSet.from_function(model, spec, "sym")),
    }
    for family in ("cos-anti", "cos-sym"):
        nodes = CosineNodeSet(family, "II", N)
        out[family] = cosine_transform(family, nodes.sample(model), "II", N)
    return out


def error_table(model: Callable = gaussian_model, Ns: Sequence[int] = range(4, 13),
                q: QuadratureSpec = QuadratureSpec()) -> List[ErrorTableRow]:
    rows = []
    for N in Ns:
        psi = interpolants(model, N)
        errs = [l2_error(psi[f], model, q) for f in ("exp-anti", "exp-sym", "cos-anti", "cos-sym")]
        rows.append(ErrorTableRow(int(N), *errs))
    return rows


# reference interpolation errors of the Gaussian model, in units of 1e-7
REFERENCE_ERRORS = {
    4: (97987, 97336, 94170, 89002),
    5: (86234, 86224, 77865, 77839),
    6: (21116, 21447, 35708, 35636),
    7: (9841, 9812, 14023, 13915),
    8: (1949, 1978, 2570, 2570),
    9: (1000, 1001, 1309, 1310),
    10: (503, 504, 600, 601),
    11: (63, 63, 86, 86),
    12: (3, 3, 11, 11),
}


def strip_points(strip: str, width: float, resolution: int = 400):
    """Sample points of the closed triangle within ``width`` of one border.

    ``width = 0`` samples the border line itself.
    """
    if strip not in STRIPS:
        raise ValueError(f"strip must be one of {STRIPS}, got {strip!r}")
    if width < 0:
        raise ValueError("strip width must be nonnegative")
    t = np.linspace(0.0, 1.0, resolution + 1)
    depth = np.linspace(0.0, width, max(2, int(np.ceil(width * resolution)) + 1)) if width > 0 else np.zeros(1)
    tt, dd = np.meshgrid(t, depth, indexing="ij")
    tt, dd = tt.ravel(), dd.ravel()
    if strip == "y=0":
        x, y = tt, dd
    elif strip == "x=1":
        x, y = 1.0 - dd, tt
    else:
        # offset along the inward normal of x = y
        x, y = tt + dd / 2, tt - dd / 2
    keep = (y <= x) & (x <= 1.0) & (y >= 0.0)
    return x[keep], y[keep]


def gibbs_profile(interpolant: Callable, reference: Callable, strip: str, width: float = 0.02,
                  resolution: int = 400) -> float:
    """Largest ``|interpolant - reference|`` over a border strip of the triangle."""
    x, y = strip_points(strip, width, resolution)
    return float(np.max(np.abs(interpolant(x, y) - reference(x, y))))
