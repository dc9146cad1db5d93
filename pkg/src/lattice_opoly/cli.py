"""Command-line interface: ``lattice-opoly <subcommand> ...``.

Exit codes: 0 success, 2 a mathematical finding (non-regularity, degenerate
classification, failed verification), 1 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import atomic, classification, families, locus, moments, pearson, recurrence
from .core_algebra import Poly, gauss, parse_gauss
from .lattice import LinearLattice

NMAX_ENV = "LATTICE_OPOLY_NMAX_DEFAULT"
EXIT_OK, EXIT_ERROR, EXIT_FINDING = 0, 1, 2


class UsageError(Exception):
    pass


def default_nmax() -> int:
    raw = os.environ.get(NMAX_ENV, "32")
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{NMAX_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{NMAX_ENV} must be positive")
    return value


def _coeff_list(text: str) -> list:
    return [parse_gauss(part) for part in text.split(",") if part.strip()]


# ---------------------------------------------------------------------------
# input resolution
# ---------------------------------------------------------------------------


def _read_json(src: str) -> dict:
    if src == "-":
        return json.load(sys.stdin)
    with open(src) as fh:
        return json.load(fh)


def pair_from_document(doc: dict) -> pearson.PearsonPair:
    """Accept a pair document, a classify result or a canonical class document."""
    if "phi" in doc or "psi" in doc:
        return pearson.pair_from_json(doc)
    if "class" in doc:
        return classification.CanonicalClass.from_json(doc).pair()
    if "pair" in doc:
        return pair_from_document(doc["pair"])
    raise UsageError("input JSON has neither a pair nor a canonical class")


def resolve_pair(args) -> pearson.PearsonPair:
    if getattr(args, "pair", None):
        return pair_from_document(_read_json(args.pair))
    if getattr(args, "phi", None) is not None or getattr(args, "psi", None) is not None:
        phi = Poly(_coeff_list(args.phi or ""))
        psi = Poly(_coeff_list(args.psi or ""))
        lat = LinearLattice(parse_gauss(args.c), parse_gauss(args.d))
        return pearson.PearsonPair(phi, psi, pearson.Form(args.form), lat)
    if getattr(args, "canonical", None):
        return families.canonical(args.canonical, _p(args.alpha), _p(args.beta), _p(args.gamma))
    if getattr(args, "family", None):
        return family_pair(args)
    raise UsageError("no input: give --pair, --phi/--psi, --canonical or --family")


def _p(text):
    return parse_gauss(text) if text is not None else gauss(0)


def family_pair(args) -> pearson.PearsonPair:
    name = args.family
    if name in families.FAMILY_NAMES:
        return families.locus_pair(name, _p(args.alpha), _p(args.beta), parse_gauss(args.c))
    if name in ("para-krawtchouk", "parakrawtchouk"):
        if args.N is None:
            raise UsageError("para-krawtchouk needs --N")
        return families.para_krawtchouk(int(args.N), _p(args.gamma))
    if name in ("charlier", "meixner", "krawtchouk", "hahn"):
        n = int(args.N) if args.N is not None else None
        return families.gms_centered(name, _p(args.e), n)
    if name == "charlier-atomic":
        return families.charlier_pair(_p(args.eps))
    raise UsageError(f"unknown family {name!r}")


def centered(pair: pearson.PearsonPair) -> pearson.PearsonPair:
    if pair.form is pearson.Form.CENTERED:
        return pair
    return pearson.to_centered(pair)


def _nmax(args) -> int:
    return args.nmax if args.nmax is not None else default_nmax()


# ---------------------------------------------------------------------------
# commands; each returns (payload, exit code)
# ---------------------------------------------------------------------------


def cmd_classify(args):
    pair = centered(resolve_pair(args))
    try:
        cls, red = classification.classify(pair)
    except classification.ClassificationError as exc:
        return {"input": pair.to_json(), "finding": str(exc)}, EXIT_FINDING
    out = cls.to_json()
    out["reduction"] = red.to_json()
    out["input"] = pair.to_json()
    return out, EXIT_OK


def cmd_recurrence(args):
    pair = centered(resolve_pair(args))
    t = None if args.symbolic else "lattice"
    rc = recurrence.recurrence_coeffs(pair, _nmax(args), t)
    out = rc.to_json()
    out["input"] = pair.to_json()
    if args.table_note:
        cls, _ = classification.classify(pair)
        if cls.kind == "laguerre1":
            out["table_note"] = recurrence.laguerre_table_note(cls.alpha, cls.beta)
    if args.positivity:
        cls, _ = classification.classify(pair)
        out["positivity"] = recurrence.positivity_classify(cls, _nmax(args)).to_json()
    code = EXIT_OK if rc.report.regular else EXIT_FINDING
    return out, code


def cmd_moments(args):
    pair = centered(resolve_pair(args))
    ms = moments.moments_from_pearson(pair, _nmax(args))
    out = ms.to_json()
    out["input"] = pair.to_json()
    return out, EXIT_OK if ms.failure_index is None else EXIT_FINDING


def cmd_limit(args):
    pair = centered(resolve_pair(args))
    n = _nmax(args)
    ms = moments.moments_from_pearson(pair, n)
    ms0 = moments.limit_moments(ms)
    top = len(ms0) - 2
    residuals = [
        moments.continuous_pearson_residual(pair.phi, pair.psi, ms0, Poly.monomial(k)) for k in range(top + 1)
    ]
    bad = [k for k, r in enumerate(residuals) if r]
    out = {
        "mu": [str(v) for v in ms0.values()],
        "residual": {"max_degree_checked": top, "nonzero_degrees": bad, "status": "pass" if not bad else "fail"},
        "input": pair.to_json(),
    }
    if ms.failure_index is not None:
        out["failure"] = {"index": ms.failure_index, "reason": "DnZero"}
    code = EXIT_OK if not bad and ms.failure_index is None else EXIT_FINDING
    return out, code


def cmd_atoms(args):
    pair = centered(resolve_pair(args))
    n_max = args.nmax if args.nmax is not None else atomic.DEFAULT_NMAX
    try:
        rep, report = atomic.solve_pair(pair, n_max)
    except ValueError as exc:
        return {"input": pair.to_json(), "finding": str(exc)}, EXIT_FINDING
    if rep is None:
        return {"anchors": report.to_json(), "input": pair.to_json()}, EXIT_FINDING
    out = rep.to_json()
    out["anchors"] = report.to_json()
    if rep.finite:
        k = 2 * rep.atom_count()
        bad = [j for j in range(k + 1) if atomic.residual_check(rep, pair, Poly.monomial(j))]
        out["residual_max_degree_checked"] = k
        out["residual_status"] = "pass" if not bad else "fail"
        code = EXIT_OK if not bad else EXIT_FINDING
    else:
        out["residual_max_degree_checked"] = 0
        out["residual_status"] = "truncated"
        code = EXIT_OK
    out["input"] = pair.to_json()
    return out, code


def cmd_locus(args):
    pair = centered(resolve_pair(args))
    res = locus.nonregularity_locus(pair, range(1, _nmax(args) + 1))
    return res, EXIT_OK


def _random_rational(rng: random.Random, lo=-6, hi=6, nonzero=False):
    while True:
        q = Fraction(rng.randint(lo, hi), rng.randint(1, hi))
        if q or not nonzero:
            return gauss(q)


def random_pair(rng: random.Random, admissible_depth: int = 0) -> pearson.PearsonPair:
    """Random rational centered pair; with ``admissible_depth`` all ``d_n``, ``n <= depth``, are nonzero."""
    while True:
        a, b, c = (_random_rational(rng) for _ in range(3))
        d = _random_rational(rng, nonzero=True)
        e = _random_rational(rng)
        slope = _random_rational(rng, nonzero=True)
        if not (a or b or c):
            continue
        if any(not (a * n + d) for n in range(admissible_depth + 1)):
            continue
        return pearson.PearsonPair.centered([c, b, a], [e, d], slope=slope)


def verify_pair(pair: pearson.PearsonPair, N: int) -> dict:
    """Oracle suite on one pair: Hankel ratios, pairing moments, degree bound."""
    depth = 2 * N + 2
    ms = moments.moments_from_pearson(pair, N + 2)
    checks = {}
    oracle = moments.pairing_moments(pair, N + 2)
    checks["pairing_oracle"] = oracle.mu == ms.mu
    checks["degree_bound"] = all((m.degree or 0) <= n // 2 for n, m in enumerate(ms.mu))
    num = moments.moments_from_pearson(pair, depth, pair.lattice.t)
    if num.failure_index is not None:
        checks["hankel_oracle"] = None
        return checks
    dets, hb = moments.hankel_b(num, N)
    rc = recurrence.recurrence_coeffs(pair, N)
    first_zero = next((k for k, d in enumerate(dets) if not d), None)
    report = rc.report
    ok = True
    if report.regular:
        ok = first_zero is None and list(rc.b_seq) == hb
    else:
        ok = first_zero == report.index and list(rc.b_seq[: report.index - 1]) == hb[: report.index - 1]
        if report.index >= 1 and len(rc.b_seq) >= report.index:
            ok = ok and not rc.b_seq[report.index - 1]
    checks["hankel_oracle"] = ok
    return checks


def cmd_verify(args):
    n = _nmax(args) if args.nmax is not None else 10
    if args.random:
        rng = random.Random(args.seed)
        pairs = [random_pair(rng, 2 * n + 2) for _ in range(args.random)]
    else:
        pairs = [centered(resolve_pair(args))]
    tallies = {"hankel_oracle": [0, 0], "pairing_oracle": [0, 0], "degree_bound": [0, 0]}
    for pair in pairs:
        for name, ok in verify_pair(pair, n).items():
            if ok is None:
                continue
            tallies[name][0 if ok else 1] += 1
    out = {"pairs": len(pairs), "N": n}
    failed = False
    for name, (good, bad) in tallies.items():
        out[name] = "pass" if bad == 0 and good > 0 else ("skipped" if good == bad == 0 else "fail")
        out[name + "_counts"] = {"pass": good, "fail": bad}
        failed = failed or bad > 0
    return out, EXIT_FINDING if failed else EXIT_OK


def cmd_kls(args):
    k = pearson.KlsParameters(_p(args.e), _p(args.f), _p(args.g), _p(args.eps), _p(args.gamma_kls))
    pair = pearson.kls_import(k)
    out = {"pair": pair.to_json()}
    try:
        cls, red = classification.classify(pair)
        out.update(cls.to_json())
        out["reduction"] = red.to_json()
        code = EXIT_OK
    except classification.ClassificationError as exc:
        out["finding"] = str(exc)
        code = EXIT_FINDING
    return out, code


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser):
    g = p.add_argument_group("input")
    g.add_argument("--pair", help="pair or classify-output JSON file, '-' for stdin")
    g.add_argument("--phi", help="comma-separated coefficients, lowest degree first")
    g.add_argument("--psi", help="comma-separated coefficients, lowest degree first")
    g.add_argument("--form", default="centered", choices=[f.value for f in pearson.Form])
    g.add_argument("--c", default="1", help="lattice slope")
    g.add_argument("--d", default="0", help="lattice intercept")
    g.add_argument("--canonical", choices=classification.KINDS)
    g.add_argument(
        "--family",
        help="hermite|laguerre|bessel|jacobi|para-krawtchouk|charlier|meixner|krawtchouk|hahn|charlier-atomic",
    )
    g.add_argument("--alpha")
    g.add_argument("--beta")
    g.add_argument("--gamma")
    g.add_argument("--N")
    g.add_argument("--e")
    g.add_argument("--eps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lattice-opoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_text, nmax=True, inputs=True):
        p = sub.add_parser(name, help=help_text)
        if inputs:
            _add_input(p)
        if nmax:
            p.add_argument("--nmax", type=int, default=None)
        p.add_argument("--out", help="output file (default stdout)")
        return p

    cmd("classify", "canonical family and affine reduction", nmax=False)
    p = cmd("recurrence", "recurrence coefficients and regularity")
    p.add_argument("--symbolic", action="store_true", help="keep the squared slope as t")
    p.add_argument("--table-note", action="store_true", help="compare Laguerre b_n with the tabulated row")
    p.add_argument("--positivity", action="store_true", help="positivity verdict of the canonical class")
    cmd("moments", "moment polynomials in t")
    cmd("limit", "moments at t = 0 and the continuous residual")
    cmd("atoms", "atomic representation")
    cmd("locus", "non-regularity points as CSV")
    p = cmd("verify", "oracle suite")
    p.add_argument("--random", type=int, default=0, help="number of random pairs")
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("kls", help="import a backward-form parameter set")
    for name in ("e", "f", "g", "eps"):
        p.add_argument(f"--{name}", default="0")
    p.add_argument("--gamma", dest="gamma_kls", default="0")
    p.add_argument("--out")
    return parser


COMMANDS = {
    "classify": cmd_classify,
    "recurrence": cmd_recurrence,
    "moments": cmd_moments,
    "limit": cmd_limit,
    "atoms": cmd_atoms,
    "locus": cmd_locus,
    "verify": cmd_verify,
    "kls": cmd_kls,
}


def _write(text: str, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = COMMANDS[args.command](args)
        if args.command == "locus":
            if args.out:
                locus.emit_locus_csv(payload.points, args.out)
            else:
                locus.write_locus_csv(payload.points, sys.stdout)
            if payload.skipped:
                sys.stderr.write(f"skipped levels (n*d_n = 0): {list(payload.skipped)}\n")
        else:
            _write(json.dumps(payload, sort_keys=True, indent=2) + "\n", getattr(args, "out", None))
        return code
    except (UsageError, ValueError, ZeroDivisionError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
