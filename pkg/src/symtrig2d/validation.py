"""Input checks shared by the estimators and the command line.

scikit-learn's ``check_array`` refuses complex data, which the exponential
transforms need, so the array checks here are written out directly.
"""

from __future__ import annotations

import numpy as np

FAMILIES = ("exp-anti", "exp-sym", "cos-anti", "cos-sym")


def check_family(family, allowed=FAMILIES) -> str:
    if family not in allowed:
        raise ValueError(f"family must be one of {tuple(allowed)}, got {family!r}")
    return family


def check_positive_int(value, name: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or int(value) != value or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)


def check_points(X) -> np.ndarray:
    """Return ``X`` as a finite float array of shape ``(n_points, 2)``."""
    X = np.asarray(X, dtype=float)
    if X.ndim == 1 and X.size == 2:
        X = X[None, :]
    if X.ndim != 2 or X.shape[1] != 2:
        raise ValueError(f"expected points of shape (n_points, 2), got {X.shape}")
    if not np.all(np.isfinite(X)):
        raise ValueError("points must be finite")
    return X


def check_signals(X, n_features: int | None = None, allow_complex: bool = True) -> np.ndarray:
    """Return ``X`` as a 2-D array of signals, one per row."""
    X = np.asarray(X)
    if X.ndim == 1:
        X = X[None, :]
    if X.ndim != 2:
        raise ValueError(f"expected a 2-D array of signals, got {X.ndim} dimensions")
    if np.iscomplexobj(X):
        if not allow_complex:
            raise ValueError("complex values are not supported by this transform")
        X = X.astype(complex)
    else:
        X = X.astype(float)
    if not np.all(np.isfinite(X)):
        raise ValueError("signals must be finite")
    if n_features is not None and X.shape[1] != n_features:
        raise ValueError(f"expected {n_features} values per signal, got {X.shape[1]}")
    return X


def match_nodes(X, node_x, node_y, atol: float = 1e-9) -> np.ndarray:
    """Permutation ``order`` with ``X[order]`` equal to the nodes, or raise."""
    X = check_points(X)
    nodes = np.column_stack([node_x, node_y])
    if len(X) != len(nodes):
        raise ValueError(f"expected {len(nodes)} sample points, got {len(X)}")
    d = np.abs(X[None, :, :] - nodes[:, None, :]).max(axis=2)
    order = d.argmin(axis=1)
    if np.any(d[np.arange(len(nodes)), order] > atol) or len(set(order.tolist())) != len(nodes):
        raise ValueError("sample points do not coincide with the interpolation grid")
    return order
