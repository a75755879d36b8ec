"""Command-line surface.

Subcommands: sample, wc-sample, pdf, cdf, pushforward, karcher, fit,
optimize, check. Row outputs are CSV with a header (default) or JSON lines
via --format json; every number is printed with 17 significant digits so
parsed values round-trip exactly. Exit codes: 0 success, 1 usage error,
2 domain/numeric error, 3 non-convergence.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .conf_natural import (
    ConfNatural,
    cn_normalization_quadrature,
    cn_pdf_hyp,
    cn_pdf_lebesgue,
    cn_pushforward,
    cn_radial_cdf,
    cn_sample_complex,
)
from .errors import DomainError, NonConvergenceError, NumericError, ObjectiveError
from .estimation import CemConfig, KarcherConfig, cem_optimize, fit_mle, karcher_mean
from .geometry import DiscPoint, MoebiusTransform, hyp_distance, mobius_apply_complex
from .hyp2f1 import hyp2f1_aa1, poisson_circle_integral
from .rng import RngStream
from .wrapped_cauchy import WrappedCauchy, wc_sample_angles

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_NONCONVERGENCE = 3

# Fixed default so unseeded invocations are still reproducible.
DEFAULT_SEED = 0


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the CLI contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.17g}"


def _pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}") from None


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be a decimal integer, got {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in an unsigned 64-bit integer, got {text}")
    return value


def _emit_rows(rows, fields, fmt: str, out) -> None:
    if fmt == "csv":
        out.write(",".join(fields) + "\n")
        for row in rows:
            out.write(",".join(_fmt(row[f]) for f in fields) + "\n")
    else:
        for row in rows:
            body = ",".join(f'"{f}":{_fmt(row[f])}' for f in fields)
            out.write("{" + body + "}\n")


def _emit_value(value: float, fmt: str, out) -> None:
    if fmt == "csv":
        out.write(_fmt(value) + "\n")
    else:
        out.write('{"value":' + _fmt(value) + "}\n")


def _read_points(path: str) -> list[DiscPoint]:
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header.replace(" ", "") != "re,im":
            raise DomainError(f"{path}: expected header 're,im', got {header!r}")
        points = []
        for lineno, line in enumerate(fh, start=2):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise DomainError(f"{path}: row {lineno}: expected two columns")
            try:
                re, im = float(parts[0]), float(parts[1])
            except ValueError:
                raise DomainError(f"{path}: row {lineno}: not numeric: {line!r}") from None
            try:
                points.append(DiscPoint(re, im))
            except DomainError as exc:
                raise DomainError(f"{path}: row {lineno}: {exc}") from None
    return points


def _cmd_sample(args, out) -> int:
    dist = ConfNatural(args.alpha, DiscPoint(*args.a))
    z = cn_sample_complex(dist, RngStream(args.seed), args.n)
    rows = (
        {"index": i, "re": z[i].real, "im": z[i].imag, "radius": abs(z[i])}
        for i in range(len(z))
    )
    _emit_rows(rows, ["index", "re", "im", "radius"], args.format, out)
    return EXIT_OK


def _cmd_wc_sample(args, out) -> int:
    dist = WrappedCauchy(DiscPoint(*args.a))
    phis = wc_sample_angles(dist, RngStream(args.seed), args.n)
    rows = ({"index": i, "phi": float(phis[i])} for i in range(len(phis)))
    _emit_rows(rows, ["index", "phi"], args.format, out)
    return EXIT_OK


def _cmd_pdf(args, out) -> int:
    dist = ConfNatural(args.alpha, DiscPoint(*args.a))
    z = DiscPoint(*args.z)
    value = cn_pdf_hyp(dist, z) if args.measure == "hyp" else cn_pdf_lebesgue(dist, z)
    _emit_value(value, args.format, out)
    return EXIT_OK


def _cmd_cdf(args, out) -> int:
    dist = ConfNatural(args.alpha, DiscPoint(*args.a))
    _emit_value(cn_radial_cdf(dist, args.b), args.format, out)
    return EXIT_OK


def _cmd_pushforward(args, out) -> int:
    dist = ConfNatural(args.alpha, DiscPoint(*args.a))
    transform = MoebiusTransform(DiscPoint(*args.g_a), args.g_theta)
    moved = cn_pushforward(dist, transform)
    rows = [{"alpha": moved.alpha, "a_re": moved.a.re, "a_im": moved.a.im}]
    _emit_rows(rows, ["alpha", "a_re", "a_im"], args.format, out)
    return EXIT_OK


def _cmd_karcher(args, out) -> int:
    points = _read_points(args.input)
    mean = karcher_mean(points, cfg=KarcherConfig(tol=args.tol, max_iter=args.max_iter))
    _emit_rows([{"re": mean.re, "im": mean.im}], ["re", "im"], args.format, out)
    return EXIT_OK


def _cmd_fit(args, out) -> int:
    points = _read_points(args.input)
    result = fit_mle(points, fixed_alpha=args.fixed_alpha)
    fields = ["alpha_hat", "a_re", "a_im", "log_likelihood", "iterations", "converged"]
    row = {
        "alpha_hat": result.alpha_hat,
        "a_re": result.a_hat.re,
        "a_im": result.a_hat.im,
        "log_likelihood": result.log_likelihood,
        "iterations": result.iterations,
        "converged": result.converged,
    }
    body = ",".join(f'"{f}":{_fmt(row[f])}' for f in fields)
    out.write("{" + body + "}\n")
    return EXIT_OK if result.converged else EXIT_NONCONVERGENCE


def _cmd_optimize(args, out) -> int:
    target = DiscPoint(*args.target)
    cfg = CemConfig(
        population=args.pop,
        elite_frac=args.elite_frac,
        iterations=args.iters,
        alpha0=args.alpha0,
        alpha_growth=args.alpha_growth,
    )
    _, trace = cem_optimize(lambda p: hyp_distance(p, target), cfg, RngStream(args.seed))
    rows = (
        {
            "iteration": it.iteration,
            "a_re": it.location.re,
            "a_im": it.location.im,
            "alpha": it.alpha,
            "best_value": it.best_value,
        }
        for it in trace
    )
    _emit_rows(rows, ["iteration", "a_re", "a_im", "alpha", "best_value"], args.format, out)
    return EXIT_OK


def _cmd_check(args, out) -> int:
    ok = True

    def report(name: str, passed: bool) -> None:
        nonlocal ok
        ok = ok and passed
        out.write(f"{name}: {'PASS' if passed else 'FAIL'}\n")

    worst = 0.0
    for alpha in (1.5, 2.0, 5.0):
        for m in (0.2, 0.5, 0.8):
            series = hyp2f1_aa1(alpha, m * m)
            integral = poisson_circle_integral(m, alpha)
            worst = max(worst, abs(series - integral) / integral)
    report("hypergeometric-series-vs-circle-integral", worst < 1e-9)

    rng = RngStream(20240913)
    u = rng.uniform((100, 2))
    z = 0.95 * np.sqrt(u[:, 0]) * np.exp(2j * np.pi * u[:, 1])
    g = MoebiusTransform.involution(DiscPoint(0.37, -0.45))
    roundtrip = mobius_apply_complex(g, mobius_apply_complex(g, z))
    report("involution-roundtrip", float(np.max(np.abs(roundtrip - z))) < 1e-12)

    worst = 0.0
    for alpha, a in ((1.5, DiscPoint(0.3, 0.4)), (2.0, DiscPoint(0.0, 0.0)), (5.0, DiscPoint(0.5, 0.0))):
        worst = max(worst, abs(cn_normalization_quadrature(ConfNatural(alpha, a)) - 1.0))
    report("density-normalization", worst < 1e-6)

    return EXIT_OK if ok else EXIT_DOMAIN


def build_parser() -> _Parser:
    parser = _Parser(prog="hypdisc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("sample", help="draw from the disc family")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--a", type=_pair, required=True, metavar="RE,IM")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    add_format(p)
    p.set_defaults(run=_cmd_sample)

    p = sub.add_parser("wc-sample", help="draw angles from the circle family")
    p.add_argument("--a", type=_pair, required=True, metavar="RE,IM")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    add_format(p)
    p.set_defaults(run=_cmd_wc_sample)

    p = sub.add_parser("pdf", help="density value at a point")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--a", type=_pair, required=True, metavar="RE,IM")
    p.add_argument("--z", type=_pair, required=True, metavar="RE,IM")
    p.add_argument("--measure", choices=("hyp", "lebesgue"), default="hyp")
    add_format(p)
    p.set_defaults(run=_cmd_pdf)

    p = sub.add_parser("cdf", help="radial probability P{|Z| < b}")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--a", type=_pair, required=True, metavar="RE,IM")
    p.add_argument("--b", type=float, required=True)
    add_format(p)
    p.set_defaults(run=_cmd_cdf)

    p = sub.add_parser("pushforward", help="parameters after applying an automorphism")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--a", type=_pair, required=True, metavar="RE,IM")
    p.add_argument("--g-a", type=_pair, required=True, metavar="RE,IM", dest="g_a")
    p.add_argument("--g-theta", type=float, required=True, dest="g_theta")
    add_format(p)
    p.set_defaults(run=_cmd_pushforward)

    p = sub.add_parser("karcher", help="Karcher mean of a CSV point cloud")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--max-iter", type=int, default=1000, dest="max_iter")
    add_format(p)
    p.set_defaults(run=_cmd_karcher)

    p = sub.add_parser("fit", help="maximum-likelihood fit of a CSV point cloud")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--fixed-alpha", type=float, default=None, dest="fixed_alpha")
    p.set_defaults(run=_cmd_fit)

    p = sub.add_parser("optimize", help="cross-entropy search over the disc")
    p.add_argument("--objective", choices=("builtin:distance",), default="builtin:distance")
    p.add_argument("--target", type=_pair, required=True, metavar="RE,IM")
    p.add_argument("--pop", type=int, default=200)
    p.add_argument("--elite-frac", type=float, default=0.2, dest="elite_frac")
    p.add_argument("--iters", type=int, default=40)
    p.add_argument("--alpha0", type=float, default=2.0)
    p.add_argument("--alpha-growth", type=float, default=1.15, dest="alpha_growth")
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    add_format(p)
    p.set_defaults(run=_cmd_optimize)

    p = sub.add_parser("check", help="run the embedded identity suite")
    p.set_defaults(run=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args, sys.stdout)
    except (DomainError, NumericError, ObjectiveError) as exc:
        sys.stderr.write(f"hypdisc: error: {exc}\n")
        return EXIT_DOMAIN
    except NonConvergenceError as exc:
        sys.stderr.write(f"hypdisc: did not converge: {exc}\n")
        return EXIT_NONCONVERGENCE
    except OSError as exc:
        sys.stderr.write(f"hypdisc: error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
