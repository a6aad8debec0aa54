"""scikit-learn style wrappers around the transforms and interpolants.

:class:`TriangularTransform` maps rows of grid samples to rows of spectral
coefficients (``transform``) and back (``inverse_transform``).
:class:`TriangularInterpolator` fits the unique interpolant through samples
on a triangular grid and evaluates it anywhere (``predict``).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.metrics import r2_score
from sklearn.utils.validation import check_is_fitted

from .cosine import CosineNodeSet, CosineSpectrum, cosine_pairs, cosine_transform, normalize_variant
from .grids import GridSpec, make_grid
from .interpolation import interp_anti, interp_sym
from .transforms import SampleSet, Spectrum, dominant_pairs, forward, inverse
from .validation import check_family, check_points, check_positive_int, check_signals, match_nodes


def _is_cosine(family):
    return family.startswith("cos")


class _GridParamsMixin:
    """Shared handling of ``family, n, a, b, t, variant``.

    ``n`` is the grid density ``N`` for exponential families and ``M`` for
    cosine families.
    """

    def _check_params(self):
        check_family(self.family)
        check_positive_int(self.n, "n")
        if _is_cosine(self.family):
            return normalize_variant(self.variant)
        return None

    def _spec(self):
        return GridSpec(a=self.a, b=self.b, N=self.n, T=self.t)

    def grid_points(self):
        """Sampling nodes in the order expected by ``fit`` and ``transform``."""
        variant = self._check_params()
        if _is_cosine(self.family):
            return CosineNodeSet(self.family, variant, self.n).points
        kind = "anti" if self.family == "exp-anti" else "sym"
        return make_grid(self._spec(), kind).points


class TriangularTransform(_GridParamsMixin, TransformerMixin, BaseEstimator):
    """Discrete (anti)symmetric transform on a triangular grid.

    Parameters
    ----------
    family : {"exp-anti", "exp-sym", "cos-anti", "cos-sym"}
    n : int
        Grid density ``N`` (exponential) or ``M`` (cosine).
    a, b, t : float
        Grid shift, sub-cell shift and side; exponential families only.
    variant : {1, 2, 3, 4} or roman numeral
        Cosine variant; ignored for exponential families.

    Attributes
    ----------
    pairs_ : list of FrequencyPair
    analysis_ : ndarray of shape (n_coefficients, n_nodes)
    synthesis_ : ndarray of shape (n_nodes, n_coefficients)
    """

    def __init__(self, family="exp-anti", n=4, a=0.0, b=0.5, t=1.0, variant=2):
        self.family = family
        self.n = n
        self.a = a
        self.b = b
        self.t = t
        self.variant = variant

    def _forward_one(self, values):
        if _is_cosine(self.family):
            return cosine_transform(self.family, values, self.variant_, self.n).values
        kind = "anti" if self.family == "exp-anti" else "sym"
        return forward(SampleSet(self.spec_, kind, values)).values

    def _inverse_one(self, coeffs):
        if _is_cosine(self.family):
            sp = CosineSpectrum(self.family, self.variant_, self.n, coeffs, self.pairs_)
            nodes = sp.nodes
            return sp(nodes.x, nodes.y)
        return inverse(Spectrum(self.family, self.spec_, coeffs, self.pairs_)).values

    def fit(self, X=None, y=None):
        """Build the analysis and synthesis matrices; ``X`` is only checked."""
        self.variant_ = self._check_params()
        self.spec_ = self._spec()
        nodes = self.grid_points()
        self.n_features_in_ = len(nodes)
        if X is not None:
            check_signals(X, self.n_features_in_)
        eye = np.eye(self.n_features_in_)
        # columns are the images of unit vectors, so the matrices agree with the library calls
        self.analysis_ = np.column_stack([self._forward_one(e) for e in eye]) if len(eye) else np.zeros((0, 0))
        if _is_cosine(self.family):
            self.pairs_ = cosine_pairs(self.family, self.variant_, self.n)
        else:
            self.pairs_ = dominant_pairs(self.n, strict=self.family == "exp-anti")
        k = len(self.pairs_)
        self.synthesis_ = np.column_stack([self._inverse_one(e) for e in np.eye(k)]) if k else np.zeros((0, 0))
        return self

    def transform(self, X):
        """Coefficients of every row of samples, shape ``(n_signals, n_coefficients)``."""
        check_is_fitted(self, "analysis_")
        X = check_signals(X, self.n_features_in_, allow_complex=not _is_cosine(self.family))
        return X @ self.analysis_.T

    def inverse_transform(self, C):
        """Samples on the grid reconstructed from coefficient rows."""
        check_is_fitted(self, "synthesis_")
        C = check_signals(C, len(self.pairs_))
        return C @ self.synthesis_.T


class TriangularInterpolator(_GridParamsMixin, RegressorMixin, BaseEstimator):
    """Unique (anti)symmetric trigonometric or cosine interpolant.

    ``fit(X, y)`` takes the grid nodes (any order) and their sample values;
    ``predict`` evaluates the interpolant at arbitrary points.

    Parameters are those of :class:`TriangularTransform`.

    Attributes
    ----------
    coef_ : InterpCoefficients or CosineSpectrum
    """

    def __init__(self, family="exp-anti", n=4, a=0.0, b=0.5, t=1.0, variant=2):
        self.family = family
        self.n = n
        self.a = a
        self.b = b
        self.t = t
        self.variant = variant

    def fit(self, X, y):
        variant = self._check_params()
        nodes = self.grid_points()
        X = check_points(X) if len(nodes) else np.zeros((0, 2))
        y = check_signals(y, len(nodes)).ravel() if len(nodes) else np.zeros(0)
        order = match_nodes(X, nodes[:, 0], nodes[:, 1]) if len(nodes) else np.zeros(0, dtype=int)
        values = y[order]
        if _is_cosine(self.family):
            self.coef_ = cosine_transform(self.family, values, variant, self.n)
        else:
            kind = "anti" if self.family == "exp-anti" else "sym"
            s = SampleSet(self._spec(), kind, values)
            self.coef_ = interp_anti(s) if kind == "anti" else interp_sym(s)
        self.n_features_in_ = 2
        return self

    def fit_function(self, f):
        """Sample a vectorised ``f(x, y)`` on the grid and fit it."""
        nodes = self.grid_points()
        return self.fit(nodes, f(nodes[:, 0], nodes[:, 1]))

    def predict(self, X):
        check_is_fitted(self, "coef_")
        X = check_points(X)
        return self.coef_(X[:, 0], X[:, 1])

    def score(self, X, y, sample_weight=None):
        """R^2 of the real parts of prediction and target."""
        return r2_score(np.real(y), np.real(self.predict(X)), sample_weight=sample_weight)
