"""Command-line surface: classify, gcd, constants, density, lattice, convergence.

Text output rounds to 12 significant digits; csv and json carry the shortest
round-trip representation (repr) so numeric fields re-parse exactly.  Data goes
to stdout, diagnostics to stderr, and the exit code is 0 only on success.
"""

import argparse
import enum
import json
import sys
from typing import Sequence

from . import backend, density, lattice, zeta
from .density import Mode
from .gaussian import GaussianInt, PrimeTag, classify, gcd


class OutputFormat(enum.Enum):
    TEXT = "text"
    CSV = "csv"
    JSON = "json"


def _fmt12(x: float) -> str:
    return f"{x:.12g}"


def _cell(x) -> str:
    # csv/json cell: shortest round-trip for floats, empty for None.
    if x is None:
        return ""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence]) -> None:
    print(",".join(header))
    for row in rows:
        print(",".join(_cell(v) for v in row))


def _apply_threads(args) -> None:
    cap = getattr(args, "threads", None)
    if cap is None:
        cap = backend.default_thread_cap()
    if cap is not None:
        backend.set_thread_cap(cap)


def cmd_classify(args) -> int:
    z = GaussianInt(args.a, args.b)
    cls = classify(z)
    parts = [cls.tag.value]
    if cls.tag in (PrimeTag.SPLIT, PrimeTag.COMPOSITE):
        parts.append(f"norm={z.norm()}")
    if cls.rational_prime is not None:
        parts.append(f"p={cls.rational_prime}")
    print(", ".join(parts))
    return 0


def cmd_gcd(args) -> int:
    print(gcd(GaussianInt(args.a1, args.b1), GaussianInt(args.a2, args.b2)))
    return 0


def _constants_rows(s: int, prime_limit: int, n_limit: int):
    zs = zeta.zeta_series(s, n_limit)
    ze = zeta.zeta_euler(s, prime_limit)
    ls = zeta.dirichlet_L(s, n_limit)
    le = zeta.dirichlet_L_euler(s, prime_limit)
    zqi = zeta.dedekind_zeta_Qi(s, n_limit)
    inv = zqi.reciprocal()
    rows = [
        ("zeta_series", s, zs),
        ("zeta_euler", s, ze),
        ("L_series", s, ls),
        ("L_euler", s, le),
        ("zeta_qi", s, zqi),
        ("inv_zeta_qi", s, inv),
    ]
    if s == 2:
        rows.append(("coprime_product", s, zeta.coprime_constant_product(prime_limit)))
    return rows


def cmd_constants(args) -> int:
    rows = _constants_rows(args.s, args.prime_limit, args.n_limit)
    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.TEXT:
        for name, s, tv in rows:
            print(f"{name:15s} s={s}  value={_fmt12(tv.value)}  tail_bound={tv.tail_bound:.3g}")
    elif fmt is OutputFormat.CSV:
        _emit_csv(
            ("name", "s", "value", "tail_bound"),
            [(name, s, tv.value, tv.tail_bound) for name, s, tv in rows],
        )
    else:
        doc = [
            {"name": name, "s": s, "value": tv.value, "tail_bound": tv.tail_bound}
            for name, s, tv in rows
        ]
        json.dump(doc, sys.stdout)
        print()
    return 0


def _run_density(args) -> density.DensityEstimate:
    mode = Mode(args.mode)
    if args.ring == "gauss":
        if args.k != 2:
            raise ValueError("Gaussian densities are implemented for pairs only")
        if mode is Mode.EXHAUSTIVE:
            return density.gaussian_pair_density_exhaustive(args.radius)
        return density.gaussian_pair_density_mc(args.samples, args.radius, args.seed)
    return density.rational_tuple_density(args.k, args.radius, mode, args.samples, args.seed)


def cmd_density(args) -> int:
    _apply_threads(args)
    est = _run_density(args)
    fmt = OutputFormat(args.format)
    fields = {
        "ring": args.ring,
        "k": args.k,
        "mode": est.mode.value,
        "radius": est.region_radius,
        "hits": est.hits,
        "trials": est.trials,
        "estimate": est.estimate,
        "std_error": est.std_error,
        "seed": est.seed,
    }
    if fmt is OutputFormat.TEXT:
        line = (
            f"ring={args.ring} k={args.k} mode={est.mode.value} radius={est.region_radius} "
            f"hits={est.hits} trials={est.trials} estimate={_fmt12(est.estimate)}"
        )
        if est.std_error is not None:
            line += f" std_error={_fmt12(est.std_error)} seed={est.seed}"
        print(line)
    elif fmt is OutputFormat.CSV:
        _emit_csv(tuple(fields), [tuple(fields.values())])
    else:
        json.dump(fields, sys.stdout)
        print()
    return 0


def cmd_lattice(args) -> int:
    domain = lattice.MultiplicityLattice(GaussianInt(args.a, args.b)).fundamental_domain()
    report = lattice.pick_identity_check(domain)
    pick = "ok" if report.holds else "FAIL"
    print(f"A={report.area} I={report.interior} B={report.boundary} pick={pick}")
    return 0


def cmd_convergence(args) -> int:
    _apply_threads(args)
    radii = [int(r) for r in args.radii.split(",") if r.strip()]
    target = None if args.target == "auto" else float(args.target)
    rows = density.convergence_table(
        radii,
        mode=Mode(args.mode),
        target=target,
        ring=args.ring,
        k=args.k,
        samples=args.samples,
        seed=args.seed,
    )
    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.CSV:
        _emit_csv(
            ("radius", "estimate", "abs_error"),
            [(r.radius, r.estimate, r.abs_error) for r in rows],
        )
    elif fmt is OutputFormat.TEXT:
        for r in rows:
            print(f"radius={r.radius} estimate={_fmt12(r.estimate)} abs_error={_fmt12(r.abs_error)}")
    else:
        doc = [
            {"radius": r.radius, "estimate": r.estimate, "abs_error": r.abs_error}
            for r in rows
        ]
        json.dump(doc, sys.stdout)
        print()
    return 0


def _add_format(p: argparse.ArgumentParser, default: str = "text") -> None:
    p.add_argument("--format", choices=[f.value for f in OutputFormat], default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussdensity",
        description="Coprimality densities and prime structure in the Gaussian integers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a+bi as a Gaussian prime or not")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gcd", help="canonical gcd of two Gaussian integers")
    for name in ("a1", "b1", "a2", "b2"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_gcd)

    p = sub.add_parser("constants", help="zeta / L-function table with tail bounds")
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--prime-limit", type=int, default=1_000_000)
    p.add_argument("--n-limit", type=int, default=10_000_000)
    _add_format(p)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("density", help="coprimality density by enumeration or Monte Carlo")
    p.add_argument("--ring", choices=("gauss", "rational"), default="gauss")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="exhaustive")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int)
    _add_format(p)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("lattice", help="Pick report for the multiplicity lattice of a+bi")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("convergence", help="density vs analytic target over a radius ladder")
    p.add_argument("--radii", required=True, help="comma-separated ascending radii")
    p.add_argument("--target", default="auto", help="'auto' or an explicit real")
    p.add_argument("--ring", choices=("gauss", "rational"), default="gauss")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="exhaustive")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int)
    _add_format(p, default="csv")
    p.set_defaults(func=cmd_convergence)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
