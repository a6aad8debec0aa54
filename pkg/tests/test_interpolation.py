import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symtrig2d.analysis import gaussian_model
from symtrig2d.basis import FrequencyPair, evaluate, weight_G
from symtrig2d.grids import GridKind, GridSpec, make_grid
from symtrig2d.interpolation import (
    InterpCoefficients,
    antisym_extend,
    beta_to_c,
    constraint_system,
    eval_trig_form,
    extend_samples,
    free_pairs,
    interp_anti,
    interp_dense,
    interp_full,
    interp_sym,
    interp_via_extension,
    interpolate,
    sym_extend,
    trig_form,
    trig_form_from_coefficients,
)
from symtrig2d.transforms import SampleSet, adft_forward, forward


def random_samples(rng, spec, kind, real=False):
    n = GridKind(kind).cardinality(spec.N)
    v = rng.normal(size=n)
    return SampleSet(spec, kind, v if real else v + 1j * rng.normal(size=n))


def node_gap(c, s):
    g = s.grid
    return np.abs(c(g.x, g.y) - s.values).max(initial=0)


# hand-computed cases


def test_n2_anti_single_coefficient():
    # one node at (3/4, 1/4); c_10 = g_1 g_0 / 4 * f * conj(-2i) = i f / 4
    s = SampleSet(GridSpec(0, 0.5, 2, 1), "anti", [3.0])
    c = interp_anti(s)
    assert c.pairs == [FrequencyPair(1, 0)]
    assert c.values[0] == pytest.approx(0.75j)
    exp = c.expanded()
    assert exp[FrequencyPair(0, -1)] == pytest.approx(0.75j)
    assert exp[FrequencyPair(1, -1)] == 0
    assert c(0.75, 0.25) == pytest.approx(3.0)


def test_n1_degenerate():
    spec = GridSpec(0.2, 0.4, 1, 1)
    assert len(interp_anti(SampleSet(spec, "anti", []))) == 0
    assert interp_anti(SampleSet(spec, "anti", []))(0.3, 0.1) == 0
    assert interp_sym(SampleSet(spec, "sym", [5.0])).values[0] == pytest.approx(2.5)
    assert interp_full(SampleSet(spec, "full", [5.0])).values[0] == pytest.approx(5.0)


def test_full_constant():
    c = interp_full(SampleSet(GridSpec(N=4), "full", np.ones(16)))
    d = c.as_dict()
    assert d[FrequencyPair(0, 0)] == pytest.approx(1)
    assert max(abs(v) for p, v in d.items() if p != FrequencyPair(0, 0)) < 1e-14


@pytest.mark.parametrize("k0,l0", [(2, -1), (0, 0), (-2, 2)])
def test_full_plane_wave_is_delta(k0, l0):
    spec = GridSpec(0.3, 0.7, 5, 1)
    s = SampleSet.from_function(lambda x, y: np.exp(2j * np.pi * (k0 * x + l0 * y)), spec, "full")
    for p, v in interp_full(s).as_dict().items():
        assert abs(v - float(p == FrequencyPair(k0, l0))) < 1e-12


@pytest.mark.parametrize("k0,l0", [(1, 0), (2, -2), (2, 1)])
def test_anti_basis_is_delta(k0, l0):
    spec = GridSpec(0.1, 0.35, 5, 1)
    s = SampleSet.from_function(lambda x, y: evaluate("exp-anti", (k0, l0), x, y), spec, "anti")
    c = interp_anti(s)
    for p, v in c.as_dict().items():
        assert abs(v - float(p == FrequencyPair(k0, l0))) < 1e-12
    pts = np.random.default_rng(1).uniform(-1, 2, (100, 2))
    assert np.allclose(c(pts[:, 0], pts[:, 1]), evaluate("exp-anti", (k0, l0), pts[:, 0], pts[:, 1]), atol=1e-12)


@pytest.mark.parametrize("k0,l0", [(0, 0), (1, -1), (2, 2)])
def test_sym_basis_is_delta(k0, l0):
    spec = GridSpec(-0.2, 0.6, 5, 1)
    s = SampleSet.from_function(lambda x, y: evaluate("exp-sym", (k0, l0), x, y), spec, "sym")
    for p, v in interp_sym(s).as_dict().items():
        assert abs(v - float(p == FrequencyPair(k0, l0))) < 1e-12


def test_sym_constant():
    c = interp_sym(SampleSet(GridSpec(N=4), "sym", np.full(10, 4.0)))
    d = c.as_dict()
    assert d[FrequencyPair(0, 0)] == pytest.approx(2.0)
    assert max(abs(v) for p, v in d.items() if p != FrequencyPair(0, 0)) < 1e-14


def test_zero_samples():
    for kind in ("anti", "sym"):
        c = interpolate(SampleSet(GridSpec(N=5), kind, np.zeros(GridKind(kind).cardinality(5))))
        assert np.all(c.values == 0)
    assert np.all(beta_to_c(adft_forward(SampleSet(GridSpec(N=4), "anti", np.zeros(6)))).values == 0)


def test_gaussian_node_coincidence():
    s = SampleSet.from_function(gaussian_model, GridSpec(0, 0.5, 7, 1), "anti")
    assert node_gap(interp_anti(s), s) < 1e-9


# cross-path checks


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 8), st.sampled_from(["full", "anti", "sym"]), st.floats(-1, 1), st.floats(0, 1),
       st.integers(0, 2**32 - 1))
def test_node_coincidence(N, kind, a, b, seed):
    s = random_samples(np.random.default_rng(seed), GridSpec(a, b, N, 1), kind)
    assert node_gap(interpolate(s), s) < 1e-9


@pytest.mark.parametrize("N", [2, 3, 4, 5])
@pytest.mark.parametrize("kind", ["full", "anti", "sym"])
def test_dense_solve_agrees(N, kind, rng):
    spec = GridSpec(rng.uniform(-1, 1), rng.uniform(0, 1), N, 1)
    s = random_samples(rng, spec, kind)
    A, labels, _ = constraint_system({"full": "full", "anti": "exp-anti", "sym": "exp-sym"}[kind], spec)
    assert A.shape[0] == A.shape[1]
    assert abs(np.linalg.det(A)) > 1e-6
    dense = interp_dense(s)
    closed = interpolate(s).expanded()
    assert set(dense) == set(closed)
    assert max(abs(dense[p] - closed[p]) for p in dense) < 1e-8


@pytest.mark.parametrize("N", [3, 4, 5, 6])
@pytest.mark.parametrize("kind", ["anti", "sym"])
def test_three_paths_agree(N, kind, rng):
    s = random_samples(rng, GridSpec(rng.uniform(-1, 1), rng.uniform(0, 1), N, 1), kind)
    direct = interpolate(s).values
    assert np.abs(beta_to_c(forward(s)).values - direct).max() < 1e-9
    assert np.abs(interp_via_extension(s).values - direct).max() < 1e-9


def test_beta_unchanged_on_positive_labels(rng):
    s = random_samples(rng, GridSpec(0.2, 0.3, 7, 1), "anti")
    beta = adft_forward(s)
    c = beta_to_c(beta).as_dict()
    for k in range(4):
        for l in range(k):  # noqa: E741
            assert c[FrequencyPair(k, l)] == pytest.approx(beta[(k, l)], abs=1e-14)


def test_extension_is_antisymmetric(rng):
    for N in (4, 5):
        s = random_samples(rng, GridSpec(0.1, 0.6, N, 1), "anti")
        C = interp_full(extend_samples(s)).square()
        assert np.abs(C + C.T).max() < 1e-10
        assert np.abs(np.diag(C)).max() < 1e-10


@pytest.mark.parametrize("N", [2, 4, 6])
def test_even_closure(N, rng):
    spec = GridSpec(rng.uniform(-1, 1), rng.uniform(0, 1), N, 1)
    M, tau = spec.M, spec.tau
    anti = interpolate(random_samples(rng, spec, "anti")).expanded()
    assert anti[FrequencyPair(M, -M)] == 0
    for l in range(-M + 1, M):  # noqa: E741
        assert anti[FrequencyPair(l, -M)] == pytest.approx(-tau * anti[FrequencyPair(M, l)], abs=1e-14)
    sym = interpolate(random_samples(rng, spec, "sym")).expanded()
    for l in range(-M, M + 1):  # noqa: E741
        ratio = weight_G(M, l) / weight_G(l, -M)
        assert sym[FrequencyPair(l, -M)] == pytest.approx(tau * ratio * sym[FrequencyPair(M, l)], abs=1e-14)


def test_free_coefficient_counts():
    for N in range(1, 9):
        assert len(free_pairs("full", N)) == N * N
        assert len(free_pairs("exp-anti", N)) == N * (N - 1) // 2
        assert len(free_pairs("exp-sym", N)) == N * (N + 1) // 2


def test_diagonal_vanishes(rng):
    s = random_samples(rng, GridSpec(0.3, 0.2, 6, 1), "anti")
    t = rng.uniform(-2, 2, 1000)
    assert np.all(interp_anti(s)(t, t) == 0)


def test_side_rescaling(rng):
    T = 2.5
    values = rng.normal(size=15)
    wide = interp_sym(SampleSet(GridSpec(0.4, 0.3, 5, T), "sym", values))
    unit = interp_sym(SampleSet(GridSpec(0.4 / T, 0.3, 5, 1), "sym", values))
    p = rng.uniform(0, 1, (50, 2))
    assert np.allclose(wide(T * p[:, 0], T * p[:, 1]), unit(p[:, 0], p[:, 1]), atol=1e-12)


# trigonometric form


@pytest.mark.parametrize("N", [3, 4, 7, 8])
@pytest.mark.parametrize("kind", ["anti", "sym"])
def test_trig_form_real_and_consistent(N, kind, rng):
    s = random_samples(rng, GridSpec(0, 0.5, N, 1), kind, real=True)
    tf = trig_form(s)
    for X in (tf.A, tf.B, tf.C, tf.D):
        assert np.abs(np.imag(X)).max() < 1e-10
    other = trig_form_from_coefficients(interpolate(s))
    for X, Y in zip((tf.A, tf.B, tf.C, tf.D), (other.A, other.B, other.C, other.D)):
        assert np.abs(X - Y).max() < 1e-12
    p = rng.uniform(-0.5, 1.5, (500, 2))
    assert np.abs(eval_trig_form(tf, p[:, 0], p[:, 1]) - interpolate(s)(p[:, 0], p[:, 1])).max() < 1e-9


def test_trig_form_zero_and_kind():
    tf = trig_form(SampleSet(GridSpec(N=5), "anti", np.zeros(10)))
    assert all(np.all(X == 0) for X in (tf.A, tf.B, tf.C, tf.D))
    with pytest.raises(ValueError, match="grid kind must be anti or sym"):
        trig_form(SampleSet(GridSpec(N=2), "full", np.zeros(4)))


# extensions


def test_extensions():
    f = lambda x, y: 10 * x + y  # noqa: E731
    A, S = antisym_extend(f), sym_extend(f)
    assert A(0.4, 0.4) == 0
    assert A(0.3, 0.7) == -f(0.7, 0.3)
    assert A(0.7, 0.3) == f(0.7, 0.3)
    assert S(0.3, 0.7) == f(0.7, 0.3)
    assert S(0.4, 0.4) == f(0.4, 0.4)
    p = np.random.default_rng(0).uniform(0, 1, (100, 2))
    assert np.all(S(p[:, 0], p[:, 1]) == S(p[:, 1], p[:, 0]))


def test_kind_mismatch():
    with pytest.raises(ValueError, match="grid kind must be anti"):
        interp_anti(SampleSet(GridSpec(N=3), "sym", np.zeros(6)))
    with pytest.raises(ValueError, match="grid kind must be full"):
        interp_full(SampleSet(GridSpec(N=3), "anti", np.zeros(3)))


def test_coefficient_count_checked():
    with pytest.raises(ValueError, match="expected 6 coefficients"):
        InterpCoefficients("exp-anti", GridSpec(N=4), np.zeros(5))
