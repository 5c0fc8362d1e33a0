"""Command-line front end.

Characters are written q,i: the i-th entry (from 0) of the enumeration of
characters mod q, ordered by exponent vectors on the canonical generators.
Complex numbers are written a+bi (also a, bi, a-bi, with i or j).
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
from pathlib import Path

from . import __version__
from .lfun import PrecisionError
from .specialfn import PoleError, WindowError

CONFIG_ENV = "EISBASIS_CONFIG"
GOLDEN_PK = Path(__file__).resolve().parents[2] / "testdata" / "pk_polynomials.csv"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_WINDOW = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- parsing

_NUM = r"[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?"
_COMPLEX = re.compile(rf"^(?P<re>[+-]?{_NUM})?(?:(?P<im>[+-]?(?:{_NUM})?)[ij])?$")


def parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "")
    m = _COMPLEX.match(t)
    if not t or not m or (m.group("re") is None and m.group("im") is None):
        raise UsageError(f"cannot parse complex number {text!r}")
    re_part = float(m.group("re")) if m.group("re") else 0.0
    im = m.group("im")
    if im == "" and m.group("re") is not None:
        # "2i": the only number is the imaginary coefficient
        return complex(0.0, re_part)
    if im is None:
        im_part = 0.0
    elif im in ("", "+"):
        im_part = 1.0
    elif im == "-":
        im_part = -1.0
    else:
        im_part = float(im)
    return complex(re_part, im_part)


def parse_character(text: str):
    from .characters import character

    try:
        q, i = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"characters are written q,index; got {text!r}") from None
    if q < 1:
        raise UsageError("modulus must be positive")
    try:
        return character(q, i)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _cplx(v: complex) -> dict:
    v = complex(v)
    return {"re": v.real, "im": v.imag}


def _fmt_complex(v: complex) -> str:
    v = complex(v)
    return f"{v.real!r}{'+' if v.imag >= 0 or math.isnan(v.imag) else '-'}{abs(v.imag)!r}i"


# ---------------------------------------------------------------- output


class Writer:
    """Single writer for JSON lines or CSV rows."""

    def __init__(self, stream, fmt: str):
        self.stream = stream
        self.fmt = fmt
        self._csv = None

    def row(self, obj: dict):
        if self.fmt == "json":
            self.stream.write(json.dumps(obj, sort_keys=True) + "\n")
        else:
            flat = {k: (json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v) for k, v in obj.items()}
            if self._csv is None:
                self._csv = csv.DictWriter(self.stream, fieldnames=list(flat), lineterminator="\n")
                self._csv.writeheader()
            self._csv.writerow(flat)
        self.stream.flush()


# ---------------------------------------------------------------- config


def load_config(path) -> dict:
    """JSON file with any of: max_level, weights, tol, points [[z, s], ...], seed, jobs, output, prec, format."""
    if not path:
        return {}
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read config {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"bad config {path}: {e}") from None
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    return data


def suite_config(args):
    from .verify import SuiteConfig

    conf = load_config(getattr(args, "config", None) or os.environ.get(CONFIG_ENV))
    points = conf.get("points")
    if points is not None:
        points = tuple((parse_complex(str(z)), parse_complex(str(s))) for z, s in points)
    kw = {
        "max_level": _pick(args, "max_level", conf),
        "weights": tuple(conf.get("weights", (0, 1))),
        "tol": _pick(args, "tol", conf),
        "seed": _pick(args, "seed", conf, 0),
        "jobs": _pick(args, "jobs", conf, 1),
        "output": _pick(args, "output", conf),
        "prec": _pick(args, "prec", conf, "double"),
    }
    if points:
        kw["points"] = points
    try:
        return SuiteConfig(**kw)
    except (TypeError, ValueError) as e:
        raise UsageError(str(e)) from None


def _pick(args, name, conf, default=None):
    v = getattr(args, name, None)
    if v is not None:
        return v
    return conf.get(name, default)


# ---------------------------------------------------------------- commands


def cmd_chars(args, out):
    from .characters import enumerate_characters

    chars = enumerate_characters(args.modulus)
    if args.index is None:
        chosen = list(enumerate(chars))
    else:
        if not 0 <= args.index < len(chars):
            raise UsageError("character index out of range")
        chosen = [(args.index, chars[args.index])]
    for i, chi in chosen:
        row = {"modulus": chi.modulus, "index": i, "exponents": list(chi.exponents), "conductor": chi.conductor,
               "parity": chi.parity, "order": chi.order}
        if args.gauss:
            row["gauss"] = _cplx(chi.gauss_sum())
        if args.index is not None and (args.conductor or args.parity or args.gauss):
            keep = {"modulus", "index"} | {k for k, on in (("conductor", args.conductor), ("parity", args.parity),
                                                              ("gauss", args.gauss)) if on}
            row = {k: v for k, v in row.items() if k in keep}
        out.row(row)
    return EXIT_OK


def cmd_lfun(args, out):
    from .lfun import completed_l, dirichlet_l_with_error

    chi = parse_character(f"{args.modulus},{args.index}")
    s = parse_complex(args.s)
    val, err = dirichlet_l_with_error(s, chi)
    if args.completed:
        val = completed_l(s, chi)
    if args.tol is not None and err > args.tol * max(abs(val), 1e-300):
        raise PrecisionError("precision")
    out.row({"s": _fmt_complex(s), "value_re": val.real, "value_im": val.imag, "precision_est": err,
             "completed": bool(args.completed)})
    return EXIT_OK


def cmd_phi(args, out):
    from .specialfn import phi_mellin_closed, phi_mellin_numeric, phi_polynomial

    if args.eps not in (1, -1):
        raise UsageError("--eps must be +1 or -1")
    s, beta = parse_complex(args.s), parse_complex(args.beta)
    if args.numeric:
        val = phi_mellin_numeric(args.k, args.eps, s, beta)
    else:
        val = phi_mellin_closed(args.k, args.eps, s, beta)
    out.row({"k": args.k, "eps": args.eps, "s": _fmt_complex(s), "beta": _fmt_complex(beta),
             "polynomial": phi_polynomial(args.k, args.eps).format(), "value_re": val.real, "value_im": val.imag,
             "method": "numeric" if args.numeric else "closed"})
    return EXIT_OK


def cmd_whittaker(args, out):
    from .specialfn import whittaker_w

    kappa = float(args.kappa)
    mu = parse_complex(args.mu)
    val = whittaker_w(kappa, mu, args.y)
    out.row({"kappa": kappa, "mu": _fmt_complex(mu), "y": args.y, "value_re": val.real, "value_im": val.imag})
    return EXIT_OK


def _cusp_row(cusp, psi=None):
    from .modgroup import is_singular

    f0, n0 = cusp.split
    row = {"N": cusp.N, "f": cusp.f, "u": cusp.u, "w": cusp.w, "Nprime": cusp.Nprime, "Ndouble": cusp.Ndouble,
           "f0": f0, "N0prime": n0}
    if psi is not None:
        row["singular"] = is_singular(cusp, psi)
    return row


def cmd_cusps(args, out):
    from .modgroup import enumerate_cusps, is_singular

    psi = parse_character(args.psi) if args.psi else None
    if psi is not None and psi.modulus != args.level:
        raise UsageError("--psi must have modulus equal to --level")
    if args.singular_only and psi is None:
        raise UsageError("--singular-only needs --psi")
    for cusp in enumerate_cusps(args.level):
        if args.singular_only and not is_singular(cusp, psi):
            continue
        out.row(_cusp_row(cusp, psi))
    return EXIT_OK


def cmd_kloosterman(args, out):
    from .characters import principal
    from .modgroup import kloosterman

    psi = parse_character(args.psi) if args.psi else principal(args.level)
    if psi.modulus != args.level:
        raise UsageError("--psi must have modulus equal to --level")
    try:
        val = kloosterman(psi, args.m, args.n, args.c)
    except ValueError as e:
        raise UsageError(str(e)) from None
    out.row({"N": args.level, "psi": psi.label(), "m": args.m, "n": args.n, "c": args.c, "value_re": val.real,
             "value_im": val.imag})
    return EXIT_OK


def _pair_from_args(args):
    from .eisenstein.pairs import CharacterPair

    c1, c2 = parse_character(args.chi1), parse_character(args.chi2)
    k = args.k if args.k is not None else (c1.parity + c2.parity) % 2
    return CharacterPair(c1, c2, k)


def _trunc(args):
    from .verify import DEFAULT_TRUNCATION, EXTENDED_TRUNCATION

    return EXTENDED_TRUNCATION if getattr(args, "prec", None) == "extended" else DEFAULT_TRUNCATION


def cmd_eval(args, out):
    from .eisenstein.fourier import eval_pair_fourier
    from .eisenstein.series import eval_cusp_coset, eval_pair_lattice
    from .modgroup import make_cusp

    z, s = parse_complex(args.z), parse_complex(args.s)
    trunc = _trunc(args)
    row = {"mode": args.mode, "z": _fmt_complex(z), "s": _fmt_complex(s)}
    if args.mode == "coset":
        if args.psi is None or args.f is None or args.level is None:
            raise UsageError("coset mode needs --level, --psi and --f")
        psi = parse_character(args.psi)
        if psi.modulus != args.level:
            raise UsageError("--psi must have modulus equal to --level")
        k = args.k if args.k is not None else psi.parity
        try:
            cusp = make_cusp(args.level, args.f, args.u)
        except ValueError as e:
            raise UsageError(str(e)) from None
        val = eval_cusp_coset(args.level, psi, cusp, z, s, k, trunc=trunc)
        info = {}
        row.update({"N": args.level, "psi": psi.label(), "cusp": str(cusp), "k": k})
    else:
        if args.chi1 is None or args.chi2 is None:
            raise UsageError(f"{args.mode} mode needs --chi1 and --chi2")
        pair = _pair_from_args(args)
        if args.level is not None and args.level % pair.level:
            raise UsageError("q1 q2 must divide --level")
        if args.mode == "lattice":
            val, info = eval_pair_lattice(pair, z, s, trunc, with_info=True)
        else:
            val, info = eval_pair_fourier(pair, z, s, trunc, with_info=True)
        row.update({"chi1": pair.chi1.label(), "chi2": pair.chi2.label(), "k": pair.k})
    row.update({"value_re": val.real, "value_im": val.imag, "precision_est": trunc.tol,
                "truncation": {"decay": trunc.decay, "binomial_terms": trunc.binomial_terms,
                               "radius_factor": trunc.radius_factor, "fourier_decay": trunc.fourier_decay},
                "info": {k: (v if isinstance(v, (int, float, str)) else str(v)) for k, v in info.items()}})
    out.row(row)
    return EXIT_OK


def _expansion_rows(exp, s, out, kind):
    for lab, c in exp.terms.items():
        v = c.evaluate(s)
        out.row({"kind": kind, "term": str(lab), "coeff_re": v.real, "coeff_im": v.imag, "symbolic": repr(c)})


def cmd_basis(args, out):
    from .basis.expansions import cusp_to_pairs, pairs_to_cusps
    from .modgroup import is_singular, make_cusp

    if args.action == "verify":
        mapping = {"orthogonality": "d-orthogonality", "kuznetsov": "kuznetsov-eisenstein"}
        return _run_verify(args, mapping.get(args.suite, args.suite), out)
    s = parse_complex(args.s)
    try:
        if args.action == "forward":
            psi = parse_character(args.psi)
            cusp = make_cusp(args.level, args.f, args.u)
            if not is_singular(cusp, psi):
                raise UsageError("cusp is not singular for psi")
            exp = cusp_to_pairs(args.level, psi, cusp, args.k)
            _expansion_rows(exp, s, out, "pair")
        else:
            pair = _pair_from_args(args)
            exp = pairs_to_cusps(pair, args.level, args.B)
            _expansion_rows(exp, s, out, "cusp")
    except ValueError as e:
        if isinstance(e, (WindowError, PoleError, PrecisionError)):
            raise
        raise UsageError(str(e)) from None
    return EXIT_OK


def _run_verify(args, suite, out):
    from .verify import SUITES, run_suite

    if suite not in SUITES:
        print(f"unknown suite {suite!r}; choose from: {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_USAGE
    cfg = suite_config(args)
    _, status = run_suite(cfg, suite, sink=lambda r: out.row(r.to_dict()))
    return status


def cmd_verify(args, out):
    return _run_verify(args, args.suite, out)


def pk_rows(k_max: int = 8) -> list:
    from .specialfn import phi_polynomial

    return [{"k": k, "eps": eps, "polynomial": phi_polynomial(k, eps).format()}
            for k in range(k_max + 1) for eps in (1, -1)]


def pk_table_text(k_max: int = 8) -> str:
    buf = io.StringIO()
    w = Writer(buf, "csv")
    for row in pk_rows(k_max):
        w.row(row)
    return buf.getvalue()


def _pk_selfcheck() -> list:
    """Failing reports that block regeneration of the golden pk table."""
    from .verify import SuiteConfig, run_suite

    reps, _ = run_suite(SuiteConfig(), "phi-mellin")
    return [r for r in reps if not r.passed]


def cmd_dump(args, out):
    from .characters import enumerate_characters
    from .eisenstein.fourier import lambda_coeff
    from .modgroup import enumerate_cusps

    if args.kind == "cusps":
        _need(args, "level")
        for cusp in enumerate_cusps(args.level):
            out.row(_cusp_row(cusp))
    elif args.kind == "characters":
        _need(args, "modulus")
        for i, chi in enumerate(enumerate_characters(args.modulus)):
            out.row({"modulus": chi.modulus, "index": i, "exponents": list(chi.exponents), "conductor": chi.conductor,
                     "parity": chi.parity, "order": chi.order})
    elif args.kind == "lambda":
        pair = _pair_from_args(args) if args.chi1 else _trivial_pair()
        s = parse_complex(args.s) if args.s else 1.5
        for n in range(1, args.n_max + 1):
            v = lambda_coeff(pair, n, s)
            out.row({"n": n, "value_re": v.real, "value_im": v.imag})
    else:
        if args.regenerate:
            bad = _pk_selfcheck()
            if bad:
                for r in bad:
                    print(r.to_json(), file=sys.stderr)
                print("refusing to regenerate: self-check failed", file=sys.stderr)
                return EXIT_FAIL
            target = Path(args.regenerate)
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(pk_table_text(args.k_max))
            return EXIT_OK
        for row in pk_rows(args.k_max):
            out.row(row)
    return EXIT_OK


def _trivial_pair():
    from .characters import principal
    from .eisenstein.pairs import CharacterPair

    return CharacterPair(principal(1), principal(1), 0)


def _need(args, name):
    if getattr(args, name, None) is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")


# ---------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _global_options() -> argparse.ArgumentParser:
    g = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    g.add_argument("--tol", type=float, help="tolerance override")
    g.add_argument("--prec", choices=("double", "extended"), help="truncation preset")
    g.add_argument("--jobs", type=int, help="worker processes for verification suites")
    g.add_argument("--seed", type=int, help="random seed")
    g.add_argument("--output", help="write rows to PATH instead of stdout")
    g.add_argument("--format", choices=("json", "csv"), help="row format (default json lines)")
    g.add_argument("--config", help=f"JSON config file (default from ${CONFIG_ENV})")
    return g


def build_parser() -> argparse.ArgumentParser:
    glob = _global_options()
    p = _Parser(prog="eisbasis", description=__doc__, parents=[glob],
                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    c = sub.add_parser("chars", parents=[glob], help="Dirichlet characters mod q")
    c.add_argument("--modulus", type=int, required=True)
    c.add_argument("--index", type=int)
    c.add_argument("--list", action="store_true")
    c.add_argument("--conductor", action="store_true")
    c.add_argument("--gauss", action="store_true")
    c.add_argument("--parity", action="store_true")
    c.set_defaults(fn=cmd_chars)

    c = sub.add_parser("lfun", parents=[glob], help="L(s, chi) or Lambda(s, chi)")
    c.add_argument("--modulus", type=int, required=True)
    c.add_argument("--index", type=int, required=True)
    c.add_argument("--s", required=True)
    c.add_argument("--completed", action="store_true")
    c.set_defaults(fn=cmd_lfun)

    c = sub.add_parser("phi", parents=[glob], help="Mellin transform of the Whittaker combination")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--eps", type=int, required=True)
    c.add_argument("--s", required=True)
    c.add_argument("--beta", required=True)
    c.add_argument("--numeric", action="store_true")
    c.set_defaults(fn=cmd_phi)

    c = sub.add_parser("whittaker", parents=[glob], help="W_{kappa,mu}(y)")
    c.add_argument("--kappa", required=True)
    c.add_argument("--mu", required=True)
    c.add_argument("--y", type=float, required=True)
    c.set_defaults(fn=cmd_whittaker)

    c = sub.add_parser("cusps", parents=[glob], help="cusps of Gamma_0(N)")
    c.add_argument("--level", type=int, required=True)
    c.add_argument("--psi")
    c.add_argument("--singular-only", action="store_true")
    c.set_defaults(fn=cmd_cusps)

    c = sub.add_parser("kloosterman", parents=[glob], help="twisted Kloosterman sum")
    c.add_argument("--level", type=int, required=True)
    c.add_argument("--psi")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--c", type=int, required=True)
    c.set_defaults(fn=cmd_kloosterman)

    c = sub.add_parser("eval", parents=[glob], help="evaluate an Eisenstein series")
    c.add_argument("--mode", choices=("lattice", "fourier", "coset"), required=True)
    c.add_argument("--level", type=int)
    c.add_argument("--chi1")
    c.add_argument("--chi2")
    c.add_argument("--psi")
    c.add_argument("--f", type=int)
    c.add_argument("--u", type=int, default=1)
    c.add_argument("--k", type=int)
    c.add_argument("--z", required=True)
    c.add_argument("--s", required=True)
    c.set_defaults(fn=cmd_eval)

    c = sub.add_parser("basis", parents=[glob], help="change of basis")
    bs = c.add_subparsers(dest="action", parser_class=_Parser)
    bs.required = True
    b = bs.add_parser("forward", parents=[glob], help="cusp series in terms of pair dilates")
    b.add_argument("--level", type=int, required=True)
    b.add_argument("--psi", required=True)
    b.add_argument("--f", type=int, required=True)
    b.add_argument("--u", type=int, default=1)
    b.add_argument("--k", type=int)
    b.add_argument("--s", default="1.4")
    b = bs.add_parser("inverse", parents=[glob], help="pair dilate in terms of cusp series")
    b.add_argument("--level", type=int, required=True)
    b.add_argument("--chi1", required=True)
    b.add_argument("--chi2", required=True)
    b.add_argument("--B", type=int, default=1)
    b.add_argument("--k", type=int)
    b.add_argument("--s", default="1.4")
    b = bs.add_parser("verify", parents=[glob], help="basis verification suites")
    b.add_argument("--suite", required=True,
                   choices=("roundtrip", "orthogonality", "innerprod", "inversion-lemma", "kuznetsov",
                            "d-atkin-lehner"))
    b.add_argument("--max-level", type=int)
    c.set_defaults(fn=cmd_basis)

    c = sub.add_parser("verify", parents=[glob], help="run a verification suite")
    c.add_argument("suite")
    c.add_argument("--max-level", type=int)
    c.set_defaults(fn=cmd_verify)

    c = sub.add_parser("dump", parents=[glob], help="tables")
    c.add_argument("kind", choices=("cusps", "characters", "lambda", "pk-polynomials"))
    c.add_argument("--level", type=int)
    c.add_argument("--modulus", type=int)
    c.add_argument("--chi1")
    c.add_argument("--chi2")
    c.add_argument("--k", type=int)
    c.add_argument("--s")
    c.add_argument("--n-max", type=int, default=10)
    c.add_argument("--k-max", type=int, default=8)
    c.add_argument("--regenerate", metavar="PATH", help="rewrite the golden pk table after a self-check")
    c.set_defaults(fn=cmd_dump)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"eisbasis: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:  # --help / --version
        return int(e.code or 0)
    fmt = getattr(args, "format", None) or "json"
    path = getattr(args, "output", None)
    if args.command == "verify" or getattr(args, "action", None) == "verify":
        try:
            path = path or suite_config(args).output
        except UsageError as e:
            print(f"eisbasis: {e}", file=sys.stderr)
            return EXIT_USAGE
    for name in ("tol", "prec", "jobs", "seed", "output", "config"):
        if not hasattr(args, name):
            setattr(args, name, None)
    stream = open(path, "w") if path else sys.stdout
    try:
        return args.fn(args, Writer(stream, fmt))
    except UsageError as e:
        print(f"eisbasis: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (WindowError, PoleError, PrecisionError) as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}), file=sys.stderr)
        return EXIT_WINDOW
    except ValueError as e:
        print(f"eisbasis: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    finally:
        if path:
            stream.close()


if __name__ == "__main__":
    sys.exit(main())
