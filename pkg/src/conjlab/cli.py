"""Command-line front end.

One subcommand group per library module.  Data go to stdout, one CSV or
JSON line per record; diagnostics (timings, warnings, expected values)
go to stderr so stdout stays byte-stable for a fixed invocation.  Floats
are printed with repr, the shortest round-trip form.

Exit codes: 0 success / property verified, 1 budget exhausted or
property not confirmed (candidates found, truncated orbit, count
mismatch), 2 usage or domain error.
"""

import argparse
import json
import sys
import warnings

from . import __version__
from .collatz import DEFAULT_CHUNK_SIZE, total_stopping_time, trajectory, verify_range
from .mobius import growth_statistic, mertens, mobius_sieve, random_walk_compare
from .parity import (
    ESTIMATOR_ID,
    bijection_check,
    description_length_estimate,
    estimator_overhead,
    parity_vector,
    random_fraction,
    realize,
)
from .stochastic import (
    WalkConfig,
    empirical_parity_frequency,
    expected_step_drift,
    heuristic_walk,
)
from .zeta import (
    Z_CORRECTION_ORDER,
    sign_changes,
    theta_value,
    verify_rh,
    z_function,
    zero_count_analytic,
    zeros_in,
)

_BANNER = (
    f"conjlab {__version__} "
    f"(estimator={ESTIMATOR_ID}; riemann-siegel-correction=C{Z_CORRECTION_ORDER}; "
    f"theta-series=t^-3)"
)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _emit(fields: tuple[str, ...], rows, fmt: str) -> None:
    for row in rows:
        if fmt == "csv":
            print(",".join(_fmt(v) for v in row))
        else:
            print(json.dumps(dict(zip(fields, row))))


def _forward_warnings(caught) -> None:
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)


def _cmd_collatz_verify(args) -> int:
    rep = verify_range(
        args.lo,
        args.hi,
        args.budget,
        args.floor,
        chunk_size=args.chunk_size,
        workers=args.workers,
    )
    print(
        f"chunks={rep.chunk_count} wall={rep.wall_time:.3f}s",
        file=sys.stderr,
    )
    if args.format == "jsonl":
        print(rep.to_json())
    else:
        # summary line, then one line per candidate
        print(
            f"{rep.lo},{rep.hi},{rep.verified_count},"
            f"{len(rep.counterexample_candidates)},{rep.max_stopping_time_seen}"
        )
        for c in rep.counterexample_candidates:
            print(c.csv_line())
    return 1 if rep.counterexample_candidates else 0


def _cmd_collatz_trajectory(args) -> int:
    traj = trajectory(args.n, args.max_steps)
    if args.format == "jsonl":
        print(
            json.dumps(
                {
                    "start": traj.start,
                    "iterates": list(traj.iterates),
                    "parities": list(traj.parities),
                    "truncated": traj.truncated,
                }
            )
        )
    else:
        _emit(
            ("step", "value", "parity"),
            [(i, v, p) for i, (v, p) in enumerate(zip(traj.iterates, traj.parities))],
            "csv",
        )
    return 1 if traj.truncated else 0


def _cmd_collatz_stopping(args) -> int:
    rec = total_stopping_time(args.n, args.budget)
    if rec is None:
        print(f"budget {args.budget} exhausted before n={args.n} reached 1", file=sys.stderr)
        return 1
    _emit(
        ("n", "total_stopping_time", "max_excursion"),
        [(rec.n, rec.total_stopping_time, rec.max_excursion)],
        args.format,
    )
    return 0


def _cmd_parity_extract(args) -> int:
    x = parity_vector(args.n, args.k)
    _emit(("n", "k", "bits"), [(args.n, args.k, x.to_bitstring())], args.format)
    return 0


def _cmd_parity_realize(args) -> int:
    r = realize(args.bits)
    _emit(("k", "residue", "witness"), [(r.k, r.residue, r.witness)], args.format)
    return 0


def _cmd_parity_bijection(args) -> int:
    ok = bijection_check(args.k)
    _emit(("k", "ok"), [(args.k, ok)], args.format)
    return 0 if ok else 1


def _cmd_parity_score(args) -> int:
    if args.bits is not None:
        x = args.bits
    elif args.n is not None and args.k is not None:
        x = parity_vector(args.n, args.k)
    else:
        raise ValueError("provide --bits, or both --n and --k")
    s = description_length_estimate(x)
    print(f"estimator={s.estimator} overhead_bits={s.overhead_bits}", file=sys.stderr)
    _emit(
        ("length", "estimate", "deficiency"),
        [(s.length, s.estimate, s.deficiency)],
        args.format,
    )
    return 0


def _cmd_parity_fraction(args) -> int:
    threshold = args.threshold if args.threshold is not None else estimator_overhead(args.k)
    frac = random_fraction(
        args.k, args.samples, args.seed, threshold, workers=args.workers
    )
    _emit(
        ("k", "samples", "threshold", "fraction"),
        [(args.k, args.samples, threshold, frac)],
        args.format,
    )
    return 0


def _cmd_walk_simulate(args) -> int:
    summary = heuristic_walk(
        WalkConfig(trials=args.trials, steps=args.steps, seed=args.seed, p_odd=args.p_odd),
        workers=args.workers,
    )
    print(f"expected_step_drift={expected_step_drift(args.p_odd)!r}", file=sys.stderr)
    _emit(
        ("trials", "steps", "mean_step_drift", "std_error", "fraction_descended"),
        [
            (
                summary.trials,
                summary.steps,
                summary.mean_step_drift,
                summary.std_error,
                summary.fraction_descended,
            )
        ],
        args.format,
    )
    return 0


def _cmd_walk_empirical(args) -> int:
    freq = empirical_parity_frequency(args.lo, args.count, args.k)
    _emit(
        ("lo", "count", "k", "frequency"),
        [(args.lo, args.count, args.k, freq)],
        args.format,
    )
    return 0


def _cmd_mertens_sieve(args) -> int:
    table = mobius_sieve(args.limit)
    upto = args.limit if args.head is None else min(args.head, args.limit)
    _emit(
        ("n", "mu"),
        ((n, int(table.values[n])) for n in range(1, upto + 1)),
        args.format,
    )
    return 0


def _cmd_mertens_series(args) -> int:
    series = mertens(args.limit)
    if args.at is None:
        points = [args.limit]
    else:
        points = [int(s) for s in args.at.split(",") if s.strip()]
        for n in points:
            if not 1 <= n <= args.limit:
                raise ValueError(f"--at value {n} outside [1, {args.limit}]")
    _emit(
        ("n", "M"),
        [(n, int(series.partial_sums[n])) for n in points],
        args.format,
    )
    return 0


def _cmd_mertens_growth(args) -> int:
    g = growth_statistic(mertens(args.limit), args.epsilon)
    _emit(
        ("epsilon", "sup", "argmax"),
        [(g.epsilon, g.sup_statistic, g.argmax_n)],
        args.format,
    )
    return 0


def _cmd_mertens_compare(args) -> int:
    c = random_walk_compare(args.limit, args.trials, args.seed, workers=args.workers)
    _emit(
        (
            "n",
            "trials",
            "walk_length",
            "mertens_statistic",
            "walk_mean_statistic",
            "percentile_rank",
            "mean_final_position",
            "final_position_sem",
        ),
        [
            (
                c.n_limit,
                c.trials,
                c.walk_length,
                c.mertens_statistic,
                c.walk_mean_statistic,
                c.percentile_rank,
                c.mean_final_position,
                c.final_position_sem,
            )
        ],
        args.format,
    )
    return 0


def _cmd_zeta_theta(args) -> int:
    tv = theta_value(args.t)
    _emit(("t", "theta", "error_bound"), [(tv.t, tv.theta, tv.error_bound)], args.format)
    return 0


def _cmd_zeta_z(args) -> int:
    ze = z_function(args.t)
    _emit(
        ("t", "z", "terms", "error_bound"),
        [(ze.t, ze.z, ze.terms, ze.error_bound)],
        args.format,
    )
    return 0


def _cmd_zeta_scan(args) -> int:
    brackets = sign_changes(args.lo, args.hi, args.step)
    _emit(("t_lo", "t_hi"), [(b.t_lo, b.t_hi) for b in brackets], args.format)
    return 0


def _cmd_zeta_count(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        count = zero_count_analytic(args.at)
    _forward_warnings(caught)
    _emit(("T", "count"), [(args.at, count)], args.format)
    return 0


def _cmd_zeta_refine(args) -> int:
    zs = zeros_in(args.lo, args.hi, args.step, args.tol)
    _emit(("index", "t"), [(i + 1, z) for i, z in enumerate(zs)], args.format)
    return 0


def _cmd_zeta_verify(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rep = verify_rh(args.T, args.step, args.max_refinements)
    _forward_warnings(caught)
    _emit(
        ("T", "sign_change_count", "analytic_count", "verified", "grid_step"),
        [(rep.T, rep.sign_change_count, rep.analytic_count, rep.verified, rep.grid_step)],
        args.format,
    )
    return 0 if rep.verified else 1


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format", choices=("csv", "jsonl"), default="csv", help="output record format"
    )

    p = argparse.ArgumentParser(prog="conjlab", description=__doc__)
    p.add_argument("--version", action="version", version=_BANNER)
    groups = p.add_subparsers(dest="group", required=True)

    # collatz
    g = groups.add_parser("collatz", help="accelerated map and range verification")
    sub = g.add_subparsers(dest="command", required=True)

    c = sub.add_parser("verify", parents=[fmt], help="sweep a range under a step budget")
    c.add_argument("--lo", type=int, required=True)
    c.add_argument("--hi", type=int, required=True)
    c.add_argument("--budget", type=int, required=True)
    c.add_argument("--floor", type=int, default=None, help="pre-verified cutoff")
    c.add_argument("--chunk-size", type=int, default=DEFAULT_CHUNK_SIZE)
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=_cmd_collatz_verify)

    c = sub.add_parser("trajectory", parents=[fmt], help="orbit of one start")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--max-steps", type=int, required=True)
    c.set_defaults(func=_cmd_collatz_trajectory)

    c = sub.add_parser("stopping-time", parents=[fmt], help="steps to reach 1")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--budget", type=int, required=True)
    c.set_defaults(func=_cmd_collatz_stopping)

    # parity
    g = groups.add_parser("parity", help="parity vectors, realization, compressibility")
    sub = g.add_subparsers(dest="command", required=True)

    c = sub.add_parser("extract", parents=[fmt], help="first k orbit parities")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.set_defaults(func=_cmd_parity_extract)

    c = sub.add_parser("realize", parents=[fmt], help="residue realizing a parity vector")
    c.add_argument("--bits", type=str, required=True)
    c.set_defaults(func=_cmd_parity_realize)

    c = sub.add_parser("bijection", parents=[fmt], help="exhaustive residue/vector check")
    c.add_argument("--k", type=int, required=True)
    c.set_defaults(func=_cmd_parity_bijection)

    c = sub.add_parser("score", parents=[fmt], help="two-part description length")
    c.add_argument("--bits", type=str, default=None)
    c.add_argument("--n", type=int, default=None)
    c.add_argument("--k", type=int, default=None)
    c.set_defaults(func=_cmd_parity_score)

    c = sub.add_parser("fraction", parents=[fmt], help="incompressible fraction of random vectors")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--samples", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--threshold", type=int, default=None)
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=_cmd_parity_fraction)

    # walk
    g = groups.add_parser("walk", help="multiplicative random-walk heuristic")
    sub = g.add_subparsers(dest="command", required=True)

    c = sub.add_parser("simulate", parents=[fmt], help="log-space drift simulation")
    c.add_argument("--trials", type=int, required=True)
    c.add_argument("--steps", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--p-odd", type=float, default=0.5)
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=_cmd_walk_simulate)

    c = sub.add_parser("empirical", parents=[fmt], help="observed odd-step frequency")
    c.add_argument("--lo", type=int, required=True)
    c.add_argument("--count", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.set_defaults(func=_cmd_walk_empirical)

    # mertens
    g = groups.add_parser("mertens", help="Mobius sieve and Mertens growth")
    sub = g.add_subparsers(dest="command", required=True)

    c = sub.add_parser("sieve", parents=[fmt], help="mu values")
    c.add_argument("--limit", type=int, required=True)
    c.add_argument("--head", type=int, default=None, help="print only the first H values")
    c.set_defaults(func=_cmd_mertens_sieve)

    c = sub.add_parser("series", parents=[fmt], help="Mertens partial sums")
    c.add_argument("--limit", type=int, required=True)
    c.add_argument("--at", type=str, default=None, help="comma-separated sample points")
    c.set_defaults(func=_cmd_mertens_series)

    c = sub.add_parser("growth", parents=[fmt], help="sup |M(n)| / n^(1/2+eps)")
    c.add_argument("--limit", type=int, required=True)
    c.add_argument("--epsilon", type=float, required=True)
    c.set_defaults(func=_cmd_mertens_growth)

    c = sub.add_parser("compare", parents=[fmt], help="rank against +-1 random walks")
    c.add_argument("--limit", type=int, required=True)
    c.add_argument("--trials", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=_cmd_mertens_compare)

    # zeta
    g = groups.add_parser("zeta", help="Riemann-Siegel Z and zero verification")
    sub = g.add_subparsers(dest="command", required=True)

    c = sub.add_parser("theta", parents=[fmt], help="phase function")
    c.add_argument("--t", type=float, required=True)
    c.set_defaults(func=_cmd_zeta_theta)

    c = sub.add_parser("z", parents=[fmt], help="Z(t) via main sum + first correction")
    c.add_argument("--t", type=float, required=True)
    c.set_defaults(func=_cmd_zeta_z)

    c = sub.add_parser("scan", parents=[fmt], help="sign-change brackets on a grid")
    c.add_argument("--lo", type=float, required=True)
    c.add_argument("--hi", type=float, required=True)
    c.add_argument("--step", type=float, default=0.05)
    c.set_defaults(func=_cmd_zeta_scan)

    c = sub.add_parser("count", parents=[fmt], help="analytic zero count up to T")
    c.add_argument("--at", type=float, required=True, metavar="T")
    c.set_defaults(func=_cmd_zeta_count)

    c = sub.add_parser("refine", parents=[fmt], help="bisected zero ordinates")
    c.add_argument("--lo", type=float, required=True)
    c.add_argument("--hi", type=float, required=True)
    c.add_argument("--step", type=float, default=0.05)
    c.add_argument("--tol", type=float, default=1e-9)
    c.set_defaults(func=_cmd_zeta_refine)

    c = sub.add_parser("verify", parents=[fmt], help="sign changes vs analytic count")
    c.add_argument("--T", type=float, required=True)
    c.add_argument("--step", type=float, default=0.05)
    c.add_argument("--max-refinements", type=int, default=3)
    c.set_defaults(func=_cmd_zeta_verify)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
