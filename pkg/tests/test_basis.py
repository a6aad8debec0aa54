import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symtrig2d.analysis import laplace_residual
from symtrig2d.basis import (
    FAMILIES,
    FrequencyPair,
    eval_cos_anti,
    eval_cos_sym,
    eval_exp_anti,
    eval_exp_sym,
    evaluate,
    laplace_eigenvalue,
    mixed_eigenvalue,
)

coords = st.floats(-3, 3, allow_nan=False)
labels = st.integers(-6, 6)


# point values worked out by hand


def test_exp_anti_values():
    assert eval_exp_anti((3, 3), 0.3, 0.8) == 0
    assert eval_exp_anti((1, 0), 0.42, 0.42) == 0
    assert eval_exp_anti((1, 0), 0.5, 0.0) == pytest.approx(-2.0, abs=1e-15)


def test_exp_sym_values():
    assert eval_exp_sym((0, 0), 0.1, 0.9) == 2
    assert abs(eval_exp_sym((1, 0), 0.5, 0.0)) < 1e-15
    assert eval_exp_sym((1, 0), 0.2, 0.7) == pytest.approx(eval_exp_sym((1, 0), 0.7, 0.2))


def test_cos_anti_values():
    assert eval_cos_anti((2, 2), 0.3, 0.1) == 0
    assert eval_cos_anti((1, 0), 1.0, 0.0) == pytest.approx(-2.0)
    p = ("3/2", "1/2")
    assert eval_cos_anti(p, -0.3, 0.7) == pytest.approx(eval_cos_anti(p, 0.3, 0.7))


def test_cos_sym_values():
    assert eval_cos_sym((0, 0), 0.3, 0.6) == 2
    assert eval_cos_sym((1, 0), 1.0, 0.0) == pytest.approx(0.0, abs=1e-15)
    assert eval_cos_sym((2, 1), 0.3, 0.8) == pytest.approx(eval_cos_sym((2, 1), 0.8, 0.3))


def test_broadcasting():
    x = np.linspace(0, 1, 5)[:, None]
    y = np.linspace(0, 1, 3)[None, :]
    assert evaluate("exp-anti", (2, 1), x, y).shape == (5, 3)


def test_unknown_family():
    with pytest.raises(ValueError, match="unknown family"):
        evaluate("sine", (1, 0), 0.0, 0.0)


def test_frequency_pair_labels():
    p = FrequencyPair("3/2", 0.5)
    assert (p.k, p.l) == (1.5, 0.5)
    assert not p.is_integer
    assert FrequencyPair(2, 1).is_dominant(strict=True)
    assert not FrequencyPair(1, 1).is_dominant(strict=True)
    assert FrequencyPair(1, 1).is_dominant(strict=False)
    assert FrequencyPair(2, 1).swapped() == FrequencyPair(1, 2)
    with pytest.raises(ValueError):
        FrequencyPair("1/3", 0)


# symmetry identities


@given(st.sampled_from(FAMILIES), labels, labels, coords, coords)
def test_point_swap(family, k, l, x, y):  # noqa: E741
    a = evaluate(family, (k, l), x, y)
    b = evaluate(family, (k, l), y, x)
    sign = -1 if family.endswith("anti") else 1
    assert np.isclose(b, sign * a, atol=1e-12)


@given(st.sampled_from(FAMILIES), labels, labels, coords, coords)
def test_label_swap(family, k, l, x, y):  # noqa: E741
    a = evaluate(family, (k, l), x, y)
    b = evaluate(family, (l, k), x, y)
    sign = -1 if family.endswith("anti") else 1
    assert np.isclose(b, sign * a, atol=1e-12)


@given(st.sampled_from(FAMILIES), labels, labels, coords, coords, st.integers(-3, 3), st.integers(-3, 3))
def test_periodicity(family, k, l, x, y, r, s):  # noqa: E741
    period = 1 if family.startswith("exp") else 2
    a = evaluate(family, (k, l), x, y)
    b = evaluate(family, (k, l), x + period * r, y + period * s)
    assert np.isclose(a, b, atol=1e-11)


@given(st.sampled_from(["exp-anti", "exp-sym"]), labels, labels, coords, coords, st.floats(-2, 2))
def test_diagonal_shift(family, k, l, x, y, a):  # noqa: E741
    lhs = evaluate(family, (k, l), x + a, y + a)
    rhs = np.exp(2j * np.pi * (k + l) * a) * evaluate(family, (k, l), x, y)
    assert abs(lhs - rhs) <= 1e-12 * 4 * (1 + abs(k) + abs(l))


@given(st.sampled_from(["cos-anti", "cos-sym"]), st.integers(0, 5), st.integers(0, 5), st.booleans(), coords, coords)
def test_cosine_sign_invariance(family, k, l, half, x, y):  # noqa: E741
    shift = 0.5 if half else 0
    p = (k + shift, l + shift)
    q = (-(k + shift), l + shift)
    v = evaluate(family, p, x, y)
    for px, py in ((-x, y), (x, -y), (-x, -y)):
        assert np.isclose(evaluate(family, p, px, py), v, atol=1e-12)
    assert np.isclose(evaluate(family, q, x, y), v, atol=1e-12)


# boundary behaviour


@pytest.mark.parametrize("family", ["exp-anti", "cos-anti"])
def test_antisymmetric_vanish_on_diagonal(family):
    t = np.linspace(-1, 2, 301)
    for k in range(-3, 4):
        for l in range(-3, 4):  # noqa: E741
            assert np.all(evaluate(family, (k, l), t, t) == 0)


def test_cos_sym_normal_derivative_on_diagonal():
    t = np.linspace(0.01, 0.99, 50)
    h = 1e-5
    for k in range(4):
        for l in range(4):  # noqa: E741
            d = (eval_cos_sym((k, l), t + h, t - h) - eval_cos_sym((k, l), t - h, t + h)) / (2 * np.sqrt(2) * h)
            assert np.abs(d).max() <= 1e-8


# eigenvalues


def test_eigenvalue_formulas():
    assert laplace_eigenvalue("exp-anti", (2, 1)) == pytest.approx(-20 * np.pi**2)
    assert laplace_eigenvalue("cos-sym", (2, 1)) == pytest.approx(-5 * np.pi**2)
    assert mixed_eigenvalue("exp-sym", (2, 1)) == pytest.approx(64 * np.pi**4)
    assert mixed_eigenvalue("cos-anti", ("3/2", "1/2")) == pytest.approx(9 / 16 * np.pi**4)


@pytest.mark.parametrize("family", FAMILIES)
def test_laplace_residual_small(family, rng):
    for _ in range(10):
        k, l = rng.integers(-3, 4, 2)  # noqa: E741
        x, y = rng.uniform(0.1, 0.9, 2)
        assert laplace_residual(family, (k, l), x, y).within(1e-4)


def test_laplace_of_constant_cosine():
    r = laplace_residual("cos-sym", (0, 0), 0.4, 0.2)
    assert r.eigenvalue == 0
    assert r.laplace < 1e-6
