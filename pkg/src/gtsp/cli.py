"""Batch front end: ``python -m gtsp <command> ...``.

Every command prints one JSON document (or CSV with ``--format csv``) and
exits 0 on success, 1 when a verification found failures and 2 on malformed
input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import format_symbol, parse_symbol
from .enumeration import enumerate_standard, weyl_dimension
from .modules import (
    Bounded,
    _vec,
    highest_weight_tableau,
    is_primitive,
    iso_equivalent,
    psi_reachable,
    special_lower,
    special_upper,
    spec_from_json,
    support_contains,
    weight_space_basis,
)
from .scalars import format_rational, parse_vector
from .tableau import tableau_from_json, tableau_to_json, weight_C
from .vector import LinComb
from . import verification as V


class UsageError(ValueError):
    """Malformed arguments or input files (exit code 2)."""


def _fmt(v) -> list[str]:
    return [format_rational(x) for x in v]


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for this command")
    return value


# -- output --------------------------------------------------------------------

def _cell(v) -> str:
    return v if isinstance(v, str) else json.dumps(v, separators=(",", ":"))


def render(payload, fmt: str, rows: Optional[list] = None) -> str:
    if fmt == "json":
        return json.dumps(payload, separators=(",", ":"))
    rows = rows if rows is not None else [payload]
    buf = io.StringIO()
    if rows:
        fields = list(dict.fromkeys(k for r in rows for k in r))
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _cell(r[k]) for k in r})
    return buf.getvalue().rstrip("\n")


# -- commands -----------------------------------------------------------------

def cmd_enum(args):
    lam = parse_vector(_need(args, "lam"))
    std = enumerate_standard(args.series, lam)
    weyl = weyl_dimension(args.series, lam)
    if args.count_only:
        return {"count": len(std), "weyl": weyl, "match": len(std) == weyl}, None, 0
    tabs = [tableau_to_json(t) for t in std.tableaux]
    return {"count": len(tabs), "tableaux": tabs}, tabs, 0


def cmd_dim(args):
    lam = parse_vector(_need(args, "lam"))
    weyl = weyl_dimension(args.series, lam)
    count = len(enumerate_standard(args.series, lam))
    return {"weyl": weyl, "enumerated": count, "match": weyl == count}, None, 0 if weyl == count else 1


def cmd_act(args):
    sym = parse_symbol(_need(args, "gen"))
    t = tableau_from_json(_load_json(_need(args, "tableau")))
    spec = spec_from_json(_load_json(_need(args, "module")))
    if not spec.member(t):
        raise UsageError("tableau is not a basis element of the module")
    image = spec.module().apply(sym, LinComb.basis(t))
    terms = [{"coefficient": format_rational(c), "tableau": tableau_to_json(b)}
             for b, c in sorted(image, key=lambda bc: repr(bc[0]))]
    return {"generator": format_symbol(sym), "terms": terms}, terms, 0


def cmd_weight(args):
    t = tableau_from_json(_load_json(_need(args, "tableau")))
    return {"weight": _fmt(weight_C(t))}, None, 0


def cmd_weights(args):
    spec = spec_from_json(_load_json(_need(args, "module")))
    if not isinstance(spec, Bounded):
        raise UsageError("weights needs a bounded module spec")
    gamma = parse_vector(_need(args, "gamma"))
    basis = weight_space_basis(spec, gamma)
    out = {"gamma": _fmt(gamma), "dimension": len(basis), "basis": [tableau_to_json(t) for t in basis]}
    if not support_contains(spec, gamma):
        out["diagnostic"] = "gamma is not in the support coset 2mu+lambda+1+Q_C"
    return out, out["basis"], 0


def cmd_special(args):
    mu, lam = parse_vector(_need(args, "mu")), parse_vector(_need(args, "lam"))
    t = (special_upper if args.which == "upper" else special_lower)(mu, lam)
    return tableau_to_json(t), None, 0


def cmd_primitive(args):
    lam = parse_vector(_need(args, "lam"))
    report = V.verify_primitive(lam)
    spec = Bounded((Fraction(1, 2),) * len(lam), lam)
    report["primitive"] = is_primitive(highest_weight_tableau(lam), spec)
    return report, report["failures"], 0 if not report["failures"] else 1


def _verify(args):
    kind = args.suite
    if kind == "lagrange":
        k = _need(args, "k")
        c = parse_vector(args.c) if args.c else None
        if c is None:
            rng = random.Random(args.seed)
            c = tuple(Fraction(v, rng.randint(1, 9)) for v in rng.sample(range(-50, 50), k))
        if len(c) != k:
            raise UsageError(f"--c must list exactly k={k} values")
        failures = [] if V.verify_lagrange(k, c) else [{"value": format_rational(V.lagrange_sum(c))}]
        return V._report("lagrange", None, failures, 1, None, c=_fmt(c))
    if kind == "vanishing":
        if args.tableau:
            t = tableau_from_json(_load_json(args.tableau))
        else:
            t = highest_weight_tableau(parse_vector(_need(args, "lam")))
        return V.verify_vanishing_lemmas(t, [args.k] if args.k else None)
    if kind == "oscillator":
        mu, lam = parse_vector(_need(args, "mu")), parse_vector(_need(args, "lam"))
        sigma = [int(s) for s in args.sigma.split(",") if s.strip()] if args.sigma else []
        return V.verify_oscillator(mu, lam, sigma, radius=args.radius or 6, samples=args.samples, seed=args.seed)
    spec = spec_from_json(_load_json(_need(args, "module")))
    radius = args.radius or 3
    if kind == "relations":
        return V.verify_representation(spec, samples=args.samples, seed=args.seed, radius=radius)
    if kind == "casimir":
        return V.verify_casimir(spec, samples=args.samples, seed=args.seed, radius=radius)
    if not isinstance(spec, Bounded):
        raise UsageError("multiplicity needs a bounded module spec")
    return V.verify_multiplicity(spec, window_radius=radius)


def cmd_verify(args):
    report = _verify(args)
    return report, report["failures"], 0 if not report["failures"] else 1


def _triple(path: str):
    data = _load_json(path)
    try:
        return _vec(data["mu"]), _vec(data["lambda"]), frozenset(data.get("sigma", []))
    except KeyError as exc:
        raise UsageError(f"{path}: missing field {exc}") from exc


def cmd_classify(args):
    a, b = _triple(args.spec_a), _triple(args.spec_b)
    return {"isomorphic": iso_equivalent(a, b)}, None, 0


def cmd_reach(args):
    lam, target = parse_vector(_need(args, "lam")), parse_vector(_need(args, "target"))
    mu = psi_reachable(lam, target)
    return {"mu": None if mu is None else _fmt(mu)}, None, 0


# -- parser ---------------------------------------------------------------------

def _vector_arg(text: str) -> str:
    try:
        parse_vector(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    return text


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="python -m gtsp", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "csv"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        s = sub.add_parser(name, help=help_)
        s.set_defaults(fn=fn)
        s.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
        return s

    s = add("enum", cmd_enum, "enumerate standard tableaux")
    s.add_argument("--series", choices=("C", "D"), default="C")
    s.add_argument("--lambda", dest="lam", type=_vector_arg)
    s.add_argument("--count-only", action="store_true")

    s = add("dim", cmd_dim, "Weyl dimension with enumeration cross-check")
    s.add_argument("--series", choices=("C", "D"), default="C")
    s.add_argument("--lambda", dest="lam", type=_vector_arg)

    s = add("act", cmd_act, "apply a generator to a basis tableau")
    s.add_argument("--gen")
    s.add_argument("--tableau")
    s.add_argument("--module")

    s = add("weight", cmd_weight, "weight of a tableau")
    s.add_argument("--tableau")

    s = add("weights", cmd_weights, "weight-space basis of a bounded module")
    s.add_argument("--module")
    s.add_argument("--gamma", type=_vector_arg)

    s = add("special", cmd_special, "special upper or lower tableau")
    s.add_argument("--which", choices=("upper", "lower"), default="upper")
    s.add_argument("--mu", type=_vector_arg)
    s.add_argument("--lambda", dest="lam", type=_vector_arg)

    s = add("primitive", cmd_primitive, "annihilation checks on T(W_lambda)")
    s.add_argument("--lambda", dest="lam", type=_vector_arg)

    s = add("verify", cmd_verify, "run a verification suite")
    s.add_argument("suite", choices=("relations", "casimir", "multiplicity", "lagrange", "vanishing", "oscillator"))
    s.add_argument("--module")
    s.add_argument("--tableau")
    s.add_argument("--samples", type=int, default=20)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--radius", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--c", type=_vector_arg)
    s.add_argument("--mu", type=_vector_arg)
    s.add_argument("--lambda", dest="lam", type=_vector_arg)
    s.add_argument("--sigma")

    s = add("classify", cmd_classify, "isomorphism test on two (mu, lambda, sigma) files")
    s.add_argument("spec_a")
    s.add_argument("spec_b")

    s = add("reach", cmd_reach, "find mu with 2mu+lambda+1 in a given coset")
    s.add_argument("--lambda", dest="lam", type=_vector_arg)
    s.add_argument("--target", type=_vector_arg)
    return p


_VALUE_FLAGS = ("--lambda", "--mu", "--gamma", "--target", "--c", "--sigma")


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--lambda -1/2,-1/2`` as ``--lambda=-1/2,-1/2`` so argparse accepts it."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_glue_negative_values(argv))
    try:
        payload, rows, code = args.fn(args)
    except (ValueError, KeyError, TypeError) as exc:
        # UsageError, bad rationals, invalid specs and unknown generators all land here
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(payload, args.format, rows))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
