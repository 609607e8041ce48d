"""Command-line surface: machine-readable exports for every subsystem.

Commands: best-approx, orbit, critical, dirichlet, regions-export,
density-check.  Exit codes: 0 ok, 1 invariant failure, 2 usage error.
Identical flags and seed produce byte-identical output files; the
environment variable GAUSSCF_SEED overrides --seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys

import numpy as np

from . import cfrac, critical, dirichlet, regions, transversal

THETA_GRAMMAR = "theta := [-] float [ (+|-) float 'i' ]   e.g. 0.7+0.3i, -1.25, 0.5-0.1i"

_FLOAT = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_THETA_RE = re.compile(rf"^(?P<re>[+-]?{_FLOAT})(?:(?P<sign>[+-])(?P<im>{_FLOAT})i)?$")


def parse_theta(text: str) -> complex:
    m = _THETA_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse theta {text!r}; grammar: {THETA_GRAMMAR}")
    re_part = float(m.group("re"))
    im_part = 0.0
    if m.group("im") is not None:
        im_part = float(m.group("im"))
        if m.group("sign") == "-":
            im_part = -im_part
    return complex(re_part, im_part)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _seed(args) -> int:
    env = os.environ.get("GAUSSCF_SEED")
    if env is not None:
        return int(env)
    return args.seed


def cmd_best_approx(args) -> int:
    theta = parse_theta(args.theta)
    seq, terminated = cfrac.best_approximations(theta, args.qmax)
    rows = [
        {
            "p": [term.p.re, term.p.im],
            "q": [term.q.re, term.q.im],
            "qmod": term.qmod,
            "err": term.err,
        }
        for term in seq
    ]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["p_re", "p_im", "q_re", "q_im", "qmod", "err"])
        for t in seq:
            writer.writerow(
                [t.p.re, t.p.im, t.q.re, t.q.im, _fmt(t.qmod), _fmt(t.err)]
            )
        _write(args.out, buf.getvalue())
    else:
        doc = {
            "theta": [theta.real, theta.imag],
            "q_max": args.qmax,
            "terminated": terminated,
            "terms": rows,
        }
        _write(args.out, json.dumps(doc, sort_keys=True, indent=1) + "\n")
    return 0


def cmd_orbit(args) -> int:
    theta = parse_theta(args.theta)
    sample = transversal.orbit_sample(theta, args.steps, args.burn_in)
    lines = []
    for rec in sample.records:
        pt = rec.point
        lines.append(
            json.dumps(
                {
                    "theta": pt.theta,
                    "w1": [pt.w1.real, pt.w1.imag],
                    "w2": [pt.w2.real, pt.w2.imag],
                    "k": pt.k,
                    "case": rec.case,
                    "t_return": rec.t_return,
                },
                sort_keys=True,
            )
        )
    text = "\n".join(lines) + ("\n" if lines else "")
    _write(args.out, text)
    if sample.terminated and args.steps > len(sample.records):
        sys.stderr.write("orbit terminated early (rational seed)\n")
    return 0


def cmd_critical(args) -> int:
    if args.ring == "zi":
        pairs = critical.filter_G1(args.epsilon)
    else:
        pairs = critical.filter_G2(args.epsilon)
    rows = sorted(
        [p.g.re, p.g.im, p.h.re, p.h.im, p.ring] for p in pairs
    )
    _write(args.out, json.dumps({"ring": args.ring, "epsilon": args.epsilon, "pairs": rows}, sort_keys=True, indent=1) + "\n")
    expected = {"zi": 18, "j": 16}[args.ring]
    if args.epsilon == 0.001 and len(rows) != expected:
        sys.stderr.write(f"critical-set invariant failed: {len(rows)} != {expected}\n")
        return 1
    return 0


def cmd_dirichlet(args) -> int:
    rng = np.random.default_rng(_seed(args))
    bound = dirichlet.theoretical_constant() + 1e-9
    rows = []
    for _ in range(args.samples):
        theta = complex(rng.uniform(0, 1), rng.uniform(0, 1))
        rep = dirichlet.dirichlet_constant(theta, args.qmax)
        rows.append(rep)
        if rep.c_theta > bound:
            sys.stderr.write(f"Dirichlet bound violated at theta={theta}\n")
            return 1
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["theta_re", "theta_im", "c_theta", "n_terms", "max_product_index"])
    for rep in rows:
        writer.writerow(
            [
                _fmt(rep.theta.real),
                _fmt(rep.theta.imag),
                _fmt(rep.c_theta),
                rep.n_terms,
                rep.attaining_index,
            ]
        )
    _write(args.out, buf.getvalue())
    return 0


def cmd_regions_export(args) -> int:
    _write(args.out, json.dumps(regions.region_geometry(), sort_keys=True, indent=1) + "\n")
    return 0


def cmd_density_check(args) -> int:
    theta = parse_theta(args.theta)
    report = transversal.measure_check(
        theta,
        args.steps,
        bins=args.bins,
        mc_samples=args.mc_samples,
        seed=_seed(args),
    )
    report["reject_at_1e-3"] = report["pvalue"] < 1e-3
    _write(args.out, json.dumps(report, sort_keys=True, indent=1) + "\n")
    return 1 if report["reject_at_1e-3"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gausscf",
        description="Best Gaussian-integer approximations of complex numbers",
        epilog=THETA_GRAMMAR,
    )
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (env GAUSSCF_SEED wins)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("best-approx", help="best-approximation sequence of theta")
    p.add_argument("--theta", required=True)
    p.add_argument("--qmax", type=float, default=100.0)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_best_approx)

    p = sub.add_parser("orbit", help="first-return orbit sample (JSONL)")
    p.add_argument("--theta", required=True)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--burn-in", type=int, default=20, dest="burn_in")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("critical", help="critical coefficient-pair sets")
    p.add_argument("--ring", choices=["zi", "j"], required=True)
    p.add_argument("--epsilon", type=float, default=0.001)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("dirichlet", help="per-theta Dirichlet constants (CSV)")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--qmax", type=float, default=1000.0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_dirichlet)

    p = sub.add_parser("regions-export", help="region geometry as JSON")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_regions_export)

    p = sub.add_parser("density-check", help="chi-squared test of the invariant density")
    p.add_argument("--theta", default="0.7+0.3i")
    p.add_argument("--steps", type=int, default=100000)
    p.add_argument("--bins", type=int, default=4)
    p.add_argument("--mc-samples", type=int, default=4000000, dest="mc_samples")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_density_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except RuntimeError as exc:
        sys.stderr.write(f"invariant failure: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
