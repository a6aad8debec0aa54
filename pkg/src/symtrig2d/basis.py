"""Pointwise evaluation of the four two-variable basis families.

``E-`` and ``E+`` are the 2x2 determinant and permanent of one-variable
exponentials ``exp(2*pi*i*k*x)``; ``cos-`` and ``cos+`` are the determinant
and permanent of half-argument cosines ``cos(pi*k*x)``.

All evaluators broadcast over ``x`` and ``y`` and accept any frequency
label, dominant or not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

Label = Union[int, Fraction, str]

FAMILIES = ("exp-anti", "exp-sym", "cos-anti", "cos-sym")


def _as_label(value: Label) -> Fraction:
    q = Fraction(value)
    if q.denominator not in (1, 2):
        raise ValueError(f"frequency {value!r} is not an integer or half-integer")
    return q


@dataclass(frozen=True, order=True)
class FrequencyPair:
    """Frequency label ``(k, l)``.

    Labels are exact rationals with denominator 1 or 2 so that the
    half-integer frequencies of cosine variants III and IV never drift.
    """

    k: Fraction
    l: Fraction  # noqa: E741

    def __init__(self, k: Label, l: Label):  # noqa: E741
        object.__setattr__(self, "k", _as_label(k))
        object.__setattr__(self, "l", _as_label(l))

    @classmethod
    def coerce(cls, p) -> "FrequencyPair":
        if isinstance(p, FrequencyPair):
            return p
        k, l = p  # noqa: E741
        return cls(k, l)

    @property
    def is_integer(self) -> bool:
        return self.k.denominator == 1 and self.l.denominator == 1

    def is_dominant(self, strict: bool) -> bool:
        return self.k > self.l if strict else self.k >= self.l

    def swapped(self) -> "FrequencyPair":
        return FrequencyPair(self.l, self.k)

    def __iter__(self):
        yield self.k
        yield self.l

    def __str__(self) -> str:
        return f"({self.k},{self.l})"


def weight_G(k, l) -> int:  # noqa: E741
    """Diagonal weight: 2 when ``k == l``, otherwise 1."""
    return 2 if k == l else 1


def _labels(p):
    p = FrequencyPair.coerce(p)
    return float(p.k), float(p.l)


def _expi(phase):
    # phase in cycles; reduce before scaling so large arguments keep precision
    phase = np.asarray(phase, dtype=float)
    theta = 2.0 * np.pi * np.remainder(phase, 1.0)
    return np.cos(theta) + 1j * np.sin(theta)


def eval_exp_anti(p, x, y):
    """``E-_(k,l)(x, y) = exp(2 pi i (kx + ly)) - exp(2 pi i (ky + lx))``."""
    k, l = _labels(p)  # noqa: E741
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return _expi(k * x + l * y) - _expi(k * y + l * x)


def eval_exp_sym(p, x, y):
    """``E+_(k,l)(x, y) = exp(2 pi i (kx + ly)) + exp(2 pi i (ky + lx))``."""
    k, l = _labels(p)  # noqa: E741
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return _expi(k * x + l * y) + _expi(k * y + l * x)


def eval_cos_anti(p, x, y):
    """``cos-_(k,l)(x, y) = cos(pi k x) cos(pi l y) - cos(pi l x) cos(pi k y)``."""
    k, l = _labels(p)  # noqa: E741
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.cos(np.pi * k * x) * np.cos(np.pi * l * y) - np.cos(np.pi * l * x) * np.cos(
        np.pi * k * y
    )


def eval_cos_sym(p, x, y):
    """``cos+_(k,l)(x, y) = cos(pi k x) cos(pi l y) + cos(pi l x) cos(pi k y)``."""
    k, l = _labels(p)  # noqa: E741
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.cos(np.pi * k * x) * np.cos(np.pi * l * y) + np.cos(np.pi * l * x) * np.cos(
        np.pi * k * y
    )


_EVALUATORS = {
    "exp-anti": eval_exp_anti,
    "exp-sym": eval_exp_sym,
    "cos-anti": eval_cos_anti,
    "cos-sym": eval_cos_sym,
}


def evaluate(family: str, p, x, y):
    """Dispatch to the evaluator of ``family``."""
    try:
        fn = _EVALUATORS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}") from None
    return fn(p, x, y)


def is_antisymmetric(family: str) -> bool:
    return family.endswith("-anti")


def laplace_eigenvalue(family: str, p) -> float:
    """Eigenvalue of the Laplacian for a basis function of ``family``."""
    k, l = _labels(p)  # noqa: E741
    scale = 4.0 if family.startswith("exp") else 1.0
    return -scale * np.pi**2 * (k * k + l * l)


def mixed_eigenvalue(family: str, p) -> float:
    """Eigenvalue of ``d^2/dx^2 d^2/dy^2`` for a basis function of ``family``."""
    k, l = _labels(p)  # noqa: E741
    scale = 16.0 if family.startswith("exp") else 1.0
    return scale * np.pi**4 * k * k * l * l
