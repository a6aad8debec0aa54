import numpy as np
import pytest

from symtrig2d.analysis import (
    REFERENCE_ERRORS,
    QuadratureSpec,
    continuous_coefficient,
    continuous_gram,
    cosine_norm,
    cosine_norm_exact,
    error_table,
    gaussian_model,
    gibbs_profile,
    integrate_fundamental,
    interpolants,
    l2_error,
    laplace_residual,
    ripple_model,
    strip_points,
)
from symtrig2d.basis import evaluate
from symtrig2d.transforms import dominant_pairs

Q400 = QuadratureSpec(400)


def test_gaussian_model():
    assert gaussian_model(0.707, 0.293) == 1.0
    assert gaussian_model(0.707 + 0.079, 0.293) == pytest.approx(np.exp(-0.5))
    assert gaussian_model(0.707 + 0.05, 0.293) == pytest.approx(gaussian_model(0.707 - 0.05, 0.293))


def test_ripple_model():
    assert ripple_model(0.707, 0.293) == pytest.approx(1 / 15)
    x, y = np.random.default_rng(0).uniform(0, 1, (2, 1000))
    assert np.abs(ripple_model(x, y)).max() <= 1 / 15


@pytest.mark.parametrize("reduction", ["half-square", "triangle-filter"])
@pytest.mark.parametrize("R", [10, 101, 1000])
def test_area(reduction, R):
    area = integrate_fundamental(lambda x, y: np.ones_like(x), QuadratureSpec(R, reduction))
    assert abs(area - 0.5) <= 2 / R


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(1)
    with pytest.raises(ValueError):
        QuadratureSpec(100, "simpson")


def test_reductions_agree():
    g = lambda x, y: np.cos(3 * x) * np.cos(3 * y) + x * y  # noqa: E731
    for R in (50, 200):
        a = integrate_fundamental(g, QuadratureSpec(R, "half-square"))
        b = integrate_fundamental(g, QuadratureSpec(R, "triangle-filter"))
        assert abs(a - b) <= 5 / R


def test_orthonormality_by_quadrature():
    q = QuadratureSpec(2000)
    f = lambda x, y: evaluate("exp-anti", (2, 1), x, y)  # noqa: E731
    assert continuous_coefficient(f, "exp-anti", (2, 1), q) == pytest.approx(1, abs=1e-3)
    assert abs(continuous_coefficient(f, "exp-anti", (3, 0), q)) < 1e-3


def test_gram_matrices_small():
    for family, strict in (("exp-anti", True), ("exp-sym", False)):
        pairs = dominant_pairs(4, strict)
        G = continuous_gram(family, pairs, Q400)
        target = np.diag([2.0 if (family == "exp-sym" and p.k == p.l) else 1.0 for p in pairs])
        assert np.abs(G - target).max() < 1e-3


def test_cos_sym_coefficient():
    f = lambda x, y: evaluate("cos-sym", (2, 2), x, y)  # noqa: E731
    assert continuous_coefficient(f, "cos-sym", (2, 2), Q400).real == pytest.approx(1, abs=1e-2)


def test_cosine_norms_at_edge_labels():
    for family in ("cos-anti", "cos-sym"):
        for p in dominant_pairs(4, family == "cos-anti"):
            assert cosine_norm(family, p, Q400) == pytest.approx(cosine_norm_exact(family, p), abs=1e-4)
    # the conventional constant 1/4 would predict 0.25 here
    assert cosine_norm_exact("cos-anti", (1, 0)) == 0.5
    assert cosine_norm_exact("cos-sym", (0, 0)) == 2.0
    f = lambda x, y: evaluate("cos-anti", (1, 0), x, y)  # noqa: E731
    assert continuous_coefficient(f, "cos-anti", (1, 0), Q400).real == pytest.approx(2.0, abs=1e-3)
    assert continuous_coefficient(f, "cos-anti", (1, 0), Q400, "exact").real == pytest.approx(1.0, abs=1e-3)


def test_l2_error_of_identity():
    assert l2_error(gaussian_model, gaussian_model, Q400) == 0


def test_published_rows_at_lower_resolution():
    rows = error_table(gaussian_model, [4, 8, 11], QuadratureSpec(500))
    for row in rows:
        for got, reference in zip(row[1:], REFERENCE_ERRORS[row.N]):
            assert got == pytest.approx(reference * 1e-7, rel=0.05)


def test_error_table_frozen_values():
    # regression values from a run of this implementation at R = 200
    (row,) = error_table(gaussian_model, [4], QuadratureSpec(200))
    expected = (0.00978429040755404, 0.009720431009157076, 0.009405624164429811, 0.008888533235842839)
    assert row[1:] == pytest.approx(expected, rel=1e-9)


def test_error_table_decreasing():
    rows = error_table(gaussian_model, range(6, 13), QuadratureSpec(300))
    for col in range(1, 5):
        values = [r[col] for r in rows]
        assert all(b <= a for a, b in zip(values, values[1:]))


def test_laplace_examples():
    r = laplace_residual("exp-anti", (2, 1), 0.6, 0.2, h=1e-3)
    assert r.laplace <= 1e-4 * abs(r.eigenvalue)
    r = laplace_residual("cos-sym", (0, 0), 0.6, 0.2)
    assert r.eigenvalue == 0 and r.laplace < 1e-6
    assert laplace_residual("cos-anti", (1, 0), 0.5, 0.25).within()


def test_strip_points():
    x, y = strip_points("y=0", 0.02)
    assert np.all(y <= 0.02) and np.all(x >= y)
    x, y = strip_points("x=1", 0.02)
    assert np.all(x >= 0.98)
    x, y = strip_points("x=y", 0.0)
    assert np.all(x == y)
    with pytest.raises(ValueError):
        strip_points("x=0", 0.1)


def test_gibbs_profile_diagonal():
    psi = interpolants(gaussian_model, 9)["exp-anti"]
    x, y = strip_points("x=y", 0.0)
    assert gibbs_profile(psi, gaussian_model, "x=y", 0.0) == np.abs(gaussian_model(x, y)).max()
    assert gibbs_profile(gaussian_model, gaussian_model, "y=0") == 0
