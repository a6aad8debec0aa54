"""Command-line front end.

Subcommands::

    sample       grid samples of a model function -> CSV
    transform    sample CSV -> spectrum JSON
    synthesize   spectrum JSON -> sample CSV
    interpolate  sample CSV (or model) -> CSV of interpolant values on a raster
    error-table  interpolation errors of the Gaussian model -> CSV
    verify       run the invariant checks and print a pass/fail report

Sample CSV columns are ``m,n,x,y,re,im``; floats use the shortest
round-trip representation so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import os
import sys
from contextlib import contextmanager, nullcontext
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .analysis import (
    MODELS,
    QuadratureSpec,
    error_table,
    gaussian_model,
    gibbs_profile,
    laplace_residual,
    ripple_model,
)
from .basis import FrequencyPair, weight_G
from .cosine import (
    COSINE_FAMILIES,
    CosineNodeSet,
    CosineSpectrum,
    cosine_gram,
    cosine_gram_diagonal,
    cosine_transform,
    derive_from_trig,
    normalize_variant,
    smdct,
)
from .grids import GridKind, GridSpec, make_grid, triangle_raster
from .interpolation import beta_to_c, interp_dense, interp_via_extension, interpolate
from .transforms import SampleSet, Spectrum, dominant_pairs, forward, gram_matrix, inverse
from .validation import FAMILIES

SAMPLE_HEADER = ["m", "n", "x", "y", "re", "im"]
RASTER_HEADER = ["x", "y", "re", "im"]
TABLE_HEADER = ["N", "exp_anti", "exp_sym", "cos2_anti", "cos2_sym"]


class CLIError(Exception):
    """Bad configuration or input; reported on stderr with exit status 1."""


def _fmt(v) -> str:
    return repr(float(v))


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def parse_ns(text: str) -> List[int]:
    """``"4..12"`` or ``"4,6,8"`` (or a mix) to a list of positive integers."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(_positive_int(lo), _positive_int(hi) + 1))
        elif part:
            out.append(_positive_int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty list of N values")
    return out


def _ns_type(text):
    try:
        return parse_ns(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


@contextmanager
def _open_out(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _read_text(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, newline="") as fh:
            return fh.read()
    except OSError as e:
        raise CLIError(f"cannot read {path}: {e.strerror}") from None


# configuration


def _is_cosine(family):
    return family in COSINE_FAMILIES


def _variant(args) -> Optional[str]:
    if not _is_cosine(args.family):
        if args.variant is not None:
            raise CLIError(f"--variant applies to cosine families only, not {args.family}")
        return None
    return normalize_variant(2 if args.variant is None else args.variant)


def _size(args) -> int:
    """``N`` for exponential families, ``M`` for cosine families."""
    if _is_cosine(args.family):
        size = args.m if args.m is not None else args.n
    else:
        if args.m is not None:
            raise CLIError("--m applies to cosine families; use --n")
        size = args.n
    if size is None:
        raise CLIError("grid size missing: pass --n (or --m for cosine families)")
    return size


def _spec(args) -> GridSpec:
    try:
        return GridSpec(a=args.a, b=args.b, N=_size(args), T=args.t)
    except ValueError as e:
        raise CLIError(str(e)) from None


def _nodes(args):
    """``(m, n, x, y)`` arrays of the configured node set."""
    variant = _variant(args)
    if _is_cosine(args.family):
        ns = CosineNodeSet(args.family, variant, _size(args))
        return ns.m, ns.n, ns.x, ns.y
    kind = "anti" if args.family == "exp-anti" else "sym"
    g = make_grid(_spec(args), kind)
    return g.m, g.n, g.x, g.y


# file formats


def write_samples(fh, m, n, x, y, values):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(SAMPLE_HEADER)
    values = np.asarray(values, dtype=complex)
    for row in zip(m, n, x, y, values):
        w.writerow([int(row[0]), int(row[1]), _fmt(row[2]), _fmt(row[3]), _fmt(row[4].real), _fmt(row[4].imag)])


def read_samples(text: str):
    """Parse a sample CSV into ``(m, n, x, y, values)`` arrays."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise CLIError("sample file is empty")
    if [h.strip() for h in rows[0]] != SAMPLE_HEADER:
        raise CLIError(f"sample file header must be {','.join(SAMPLE_HEADER)}")
    body = [r for r in rows[1:] if r]
    try:
        m = np.array([int(r[0]) for r in body], dtype=int)
        n = np.array([int(r[1]) for r in body], dtype=int)
        x, y, re, im = (np.array([float(r[i]) for r in body]) for i in range(2, 6))
    except (ValueError, IndexError) as e:
        raise CLIError(f"malformed sample row: {e}") from None
    return m, n, x, y, re + 1j * im


def _label_json(q: Fraction):
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def spectrum_to_json(family, variant, size, spec: Optional[GridSpec], pairs, values) -> dict:
    values = np.asarray(values, dtype=complex)
    return {
        "family": family,
        "variant": variant,
        "N": int(size),
        "a": spec.a if spec is not None else None,
        "b": spec.b if spec is not None else None,
        "T": spec.T if spec is not None else None,
        "coeffs": [
            {"k": _label_json(p.k), "l": _label_json(p.l), "re": float(v.real), "im": float(v.imag)}
            for p, v in zip(pairs, values)
        ],
    }


def spectrum_from_json(doc: dict):
    """Rebuild a :class:`Spectrum` or :class:`CosineSpectrum` from its JSON form."""
    try:
        family = doc["family"]
        if family not in FAMILIES:
            raise CLIError(f"unknown family {family!r} in spectrum")
        pairs = [FrequencyPair(Fraction(str(c["k"])), Fraction(str(c["l"]))) for c in doc["coeffs"]]
        values = np.array([complex(c["re"], c["im"]) for c in doc["coeffs"]])
        if _is_cosine(family):
            return CosineSpectrum(family, doc["variant"], int(doc["N"]), values.real, pairs)
        spec = GridSpec(a=doc["a"], b=doc["b"], N=int(doc["N"]), T=doc.get("T") or 1.0)
        return Spectrum(family, spec, values, pairs)
    except (KeyError, TypeError, ValueError) as e:
        raise CLIError(f"malformed spectrum: {e}") from None


def _check_alignment(args, m, n, x, y):
    gm, gn, gx, gy = _nodes(args)
    if len(gm) != len(m) or np.any(gm != m) or np.any(gn != n):
        raise CLIError(
            f"sample grid does not match the configuration: expected {len(gm)} nodes "
            f"in (m, n) order for {args.family} with size {_size(args)}"
        )
    scale = max(1.0, float(np.abs(np.concatenate([gx, gy])).max(initial=0.0)))
    if len(gx) and max(np.abs(gx - x).max(), np.abs(gy - y).max()) > 1e-9 * scale:
        raise CLIError("sample coordinates do not match the configured grid")


def _fit(args, values):
    """Spectrum (exponential) or cosine spectrum of samples aligned with the config."""
    if _is_cosine(args.family):
        if np.abs(np.imag(values)).max(initial=0.0) > 0:
            raise CLIError("cosine transforms take real samples")
        return cosine_transform(args.family, np.real(values), _variant(args), _size(args))
    kind = "anti" if args.family == "exp-anti" else "sym"
    return forward(SampleSet(_spec(args), kind, values))


def _interpolant(args, values) -> Callable:
    if _is_cosine(args.family):
        return _fit(args, values)
    kind = "anti" if args.family == "exp-anti" else "sym"
    return interpolate(SampleSet(_spec(args), kind, values))


# commands


def cmd_sample(args):
    model = MODELS[args.model]
    m, n, x, y = _nodes(args)
    with _open_out(args.output) as fh:
        write_samples(fh, m, n, x, y, model(x, y))


def cmd_transform(args):
    m, n, x, y, values = read_samples(_read_text(args.input))
    _check_alignment(args, m, n, x, y)
    sp = _fit(args, values)
    spec = None if _is_cosine(args.family) else sp.spec
    doc = spectrum_to_json(args.family, _variant(args), _size(args), spec, sp.pairs, sp.values)
    with _open_out(args.output) as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def cmd_synthesize(args):
    try:
        doc = json.loads(_read_text(args.input))
    except json.JSONDecodeError as e:
        raise CLIError(f"spectrum is not valid JSON: {e}") from None
    sp = spectrum_from_json(doc)
    if isinstance(sp, CosineSpectrum):
        nodes = sp.nodes
        m, n, x, y = nodes.m, nodes.n, nodes.x, nodes.y
        values = sp(x, y)
    else:
        s = inverse(sp)
        g = s.grid
        m, n, x, y, values = g.m, g.n, g.x, g.y, s.values
    with _open_out(args.output) as fh:
        write_samples(fh, m, n, x, y, values)


def cmd_interpolate(args):
    if args.input is not None:
        m, n, x, y, values = read_samples(_read_text(args.input))
        _check_alignment(args, m, n, x, y)
    else:
        m, n, x, y = _nodes(args)
        values = MODELS[args.model](x, y)
    psi = _interpolant(args, values)
    if args.at_nodes:
        px, py = x, y
    else:
        px, py = triangle_raster(args.resolution)
        if not _is_cosine(args.family):
            px, py = px * args.t, py * args.t
    out = np.asarray(psi(px, py), dtype=complex)
    with _open_out(args.output) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(RASTER_HEADER)
        for row in zip(px, py, out):
            w.writerow([_fmt(row[0]), _fmt(row[1]), _fmt(row[2].real), _fmt(row[2].imag)])


def cmd_error_table(args):
    rows = error_table(MODELS[args.model], args.ns, QuadratureSpec(args.resolution))
    with _open_out(args.output) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(TABLE_HEADER)
        for r in rows:
            w.writerow([r.N] + [_fmt(v) for v in r[1:]])


# verification suite


def _orthogonality(N, a, b) -> float:
    worst = 0.0
    for family in ("exp-anti", "exp-sym"):
        pairs = dominant_pairs(N, strict=family == "exp-anti")
        if not pairs:
            continue
        G = gram_matrix(family, GridSpec(a=a, b=b, N=N), pairs)
        target = np.diag([N**2 * weight_G(p.k, p.l) for p in pairs])
        worst = max(worst, np.abs(G - target).max() / N**2)
    return worst


def _perturbed(c, delta):
    if not delta or not len(c):
        return c
    values = c.values.copy()
    values[0] += delta
    return dataclasses.replace(c, values=values)


def _interp_paths(N, rng, perturb) -> Tuple[float, float, float]:
    """Dense-solve gap, triple-path gap and node mismatch over both classes."""
    dense_gap = path_gap = node_gap = 0.0
    for kind in ("anti", "sym"):
        spec = GridSpec(a=rng.uniform(-1, 1), b=rng.uniform(0, 1), N=N)
        size = GridKind(kind).cardinality(N)
        s = SampleSet(spec, kind, rng.normal(size=size) + 1j * rng.normal(size=size))
        c = _perturbed(interpolate(s), perturb)
        if not len(c):
            continue
        exp = c.expanded()
        dense = interp_dense(s)
        dense_gap = max(dense_gap, max(abs(exp[p] - v) for p, v in dense.items()))
        for other in (beta_to_c(forward(s)), interp_via_extension(s)):
            path_gap = max(path_gap, np.abs(other.values - c.values).max())
        g = s.grid
        node_gap = max(node_gap, np.abs(c(g.x, g.y) - s.values).max())
    return dense_gap, path_gap, node_gap


def _cosine_checks(M, rng, perturb) -> Tuple[float, float, float]:
    gram_gap = node_gap = dual_gap = 0.0
    f = lambda x, y: np.exp(-((x - 0.6) ** 2 + (y - 0.3) ** 2)) * (1 + x * y)  # noqa: E731
    for family in COSINE_FAMILIES:
        for variant in ("I", "II", "III", "IV"):
            G = cosine_gram(family, variant, M)
            if G.size:
                gram_gap = max(gram_gap, np.abs(G - np.diag(cosine_gram_diagonal(family, variant, M))).max())
            nodes = CosineNodeSet(family, variant, M)
            values = rng.normal(size=len(nodes))
            sp = _perturbed(cosine_transform(family, values, variant, M), perturb)
            if len(sp):
                node_gap = max(node_gap, np.abs(sp(nodes.x, nodes.y) - values).max())
                direct = cosine_transform(family, nodes.sample(f), variant, M)
                dual_gap = max(dual_gap, np.abs(derive_from_trig(f, variant, family, M).values - direct.values).max())
    return gram_gap, node_gap, dual_gap


def _laplace_worst(rng) -> float:
    worst = 0.0
    for family in FAMILIES:
        for k in range(-3, 4):
            for l in range(-3, 4):  # noqa: E741
                x, y = rng.uniform(0.05, 0.95, 2)
                r = laplace_residual(family, (k, l), x, y)
                worst = max(worst, r.laplace / (1 + abs(r.eigenvalue)), r.mixed / (1 + abs(r.mixed_eigenvalue)))
    return worst


def _gibbs(width=0.02) -> Tuple[float, float]:
    out = []
    for M in (12, 20):
        nodes = CosineNodeSet("cos-sym", "II", M)
        psi = smdct(nodes.sample(ripple_model), "II", M)
        out.append(max(gibbs_profile(psi, ripple_model, s, width) for s in ("y=0", "x=1")))
    return out[0], out[1]


def run_checks(Ns: Sequence[int], perturb: float = 0.0, seed: int = 0):
    """Yield ``(name, passed, detail)`` for every check of the suite."""
    rng = np.random.default_rng(seed)
    for N in Ns:
        gap = max(_orthogonality(N, a, b) for a in (-0.7, 0.0, 1.3) for b in (0.0, 0.5, 1.0))
        yield f"discrete orthogonality N={N}", gap <= 1e-9, f"max deviation {gap:.2e} N^2"
        for kind in ("anti", "sym"):
            size = GridKind(kind).cardinality(N)
            s = SampleSet(GridSpec(a=0.3, b=0.25, N=N), kind, rng.normal(size=size) + 1j * rng.normal(size=size))
            back = inverse(forward(s)).values
            err = np.abs(back - s.values).max() if size else 0.0
            yield f"round trip {kind} N={N}", err <= 1e-10, f"max error {err:.2e}"
        dense_gap, path_gap, node_gap = _interp_paths(N, rng, perturb)
        yield f"interpolant vs dense solve N={N}", dense_gap <= 1e-8, f"{dense_gap:.2e}"
        yield f"coefficient paths agree N={N}", path_gap <= 1e-9, f"{path_gap:.2e}"
        yield f"interpolant node coincidence N={N}", node_gap <= 1e-9, f"{node_gap:.2e}"
    for M in sorted({max(2, min(N, 6)) for N in Ns}):
        gram_gap, node_gap, dual_gap = _cosine_checks(M, rng, perturb)
        yield f"cosine Gram diagonal M={M}", gram_gap <= 1e-9, f"{gram_gap:.2e}"
        yield f"cosine node coincidence M={M}", node_gap <= 1e-9, f"{node_gap:.2e}"
        yield f"cosine dual path M={M}", dual_gap <= 1e-9, f"{dual_gap:.2e}"
    worst = _laplace_worst(rng)
    yield "Laplace eigen-equations", worst <= 1e-4, f"worst residual ratio {worst:.2e}"
    e12, e20 = _gibbs()
    yield "ripple border error decreases M=12 -> 20", e20 < e12, f"{e12:.4f} -> {e20:.4f}"
    t = np.linspace(0.0, 1.0, 201)
    psi = interpolate(SampleSet.from_function(gaussian_model, GridSpec(N=7), "anti"))
    on_diag = gibbs_profile(psi, gaussian_model, "x=y", 0.0, resolution=200)
    target = float(np.abs(gaussian_model(t, t)).max())
    yield "antisymmetric interpolant vanishes on x=y", on_diag == target, f"{on_diag:.3e} vs {target:.3e}"


def cmd_verify(args):
    Ns = args.ns if args.ns is not None else ([args.n] if args.n is not None else [2, 3, 4, 5])
    failures = 0
    with _open_out(args.output) as fh:
        for name, passed, detail in run_checks(Ns, perturb=args.perturb, seed=args.seed):
            failures += not passed
            fh.write(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}\n")
        fh.write(f"{failures} failure(s)\n")
    return 1 if failures else 0


# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symtrig2d",
        description="Symmetric and antisymmetric transforms and interpolation on triangular grids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def grid_flags(p, model=True):
        p.add_argument("--family", choices=FAMILIES, default="exp-anti")
        p.add_argument("--variant", help="cosine variant 1-4 (default 2)")
        p.add_argument("--n", type=_positive_int, help="grid density N (also M for cosine families)")
        p.add_argument("--m", type=_positive_int, help="cosine node count M")
        p.add_argument("--a", type=float, default=0.0, help="grid shift (default 0)")
        p.add_argument("--b", type=float, default=0.5, help="sub-cell shift in [0, 1] (default 0.5)")
        p.add_argument("--t", type=float, default=1.0, help="grid side (default 1)")
        if model:
            p.add_argument("--model", choices=sorted(MODELS), default="gaussian")

    p = sub.add_parser("sample", help="sample a model function on a grid")
    grid_flags(p)
    p.add_argument("--output")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("transform", help="sample CSV to spectrum JSON")
    grid_flags(p, model=False)
    p.add_argument("--input")
    p.add_argument("--output")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("synthesize", help="spectrum JSON to sample CSV")
    p.add_argument("--input")
    p.add_argument("--output")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("interpolate", help="evaluate an interpolant on a triangle raster")
    grid_flags(p)
    p.add_argument("--input", help="sample CSV; the model is sampled when omitted")
    p.add_argument("--resolution", type=_positive_int, default=1000, help="raster R (default 1000)")
    p.add_argument("--at-nodes", action="store_true", help="evaluate at the sample nodes instead")
    p.add_argument("--output")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("error-table", help="L2 interpolation errors of a model")
    p.add_argument("--model", choices=sorted(MODELS), default="gaussian")
    p.add_argument("--ns", type=_ns_type, default=list(range(4, 13)), help="N values, e.g. 4..12 or 4,6,8")
    p.add_argument("--resolution", type=_positive_int, default=1000, help="quadrature R (default 1000)")
    p.add_argument("--output")
    p.set_defaults(func=cmd_error_table)

    p = sub.add_parser("verify", help="run the invariant checks")
    p.add_argument("--n", type=_positive_int, help="single N to check")
    p.add_argument("--ns", type=_ns_type, help="N values to check (default 2..5)")
    p.add_argument("--perturb", type=float, default=0.0, help="add this to one coefficient (negative control)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)
    return parser


def _thread_limit():
    value = os.environ.get("SYMTRIG2D_THREADS")
    if not value:
        return nullcontext()
    from threadpoolctl import threadpool_limits

    try:
        return threadpool_limits(limits=max(1, int(value)))
    except ValueError:
        raise CLIError(f"SYMTRIG2D_THREADS must be an integer, got {value!r}") from None


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _thread_limit():
            status = args.func(args)
    except CLIError as e:
        print(f"symtrig2d {args.command}: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"symtrig2d {args.command}: {e}", file=sys.stderr)
        return 1
    return int(status or 0)


if __name__ == "__main__":
    sys.exit(main())
