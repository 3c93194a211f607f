"""Command-line interface: compute polynomials, print constants, expand
kernels, and run the verification suite.

Exit codes: 0 success (all checks pass), 1 verification failure, 2 bad
arguments.  The symbolic commands never take a parameter value; pass
--alpha p/q to specialize the output exactly at a rational point.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import combinat, jack, scalars, verify
from .polyalg import BiPoly, MultiPoly, omega_truncated, pi_truncated
from .qalpha import ALPHA, alpha_shift, format_alpha


def _parse_parts(text: str, parser, n=None):
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        parser.error(f"cannot parse index {text!r}: expected comma-separated integers")
    if any(p < 0 for p in parts):
        parser.error(f"negative parts in {text!r}")
    if n is not None:
        if n < len(parts):
            parser.error(f"--N {n} is smaller than the given {len(parts)} parts")
        parts = parts + (0,) * (n - len(parts))
    return parts


def _parse_fraction(text: str, parser) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        parser.error(f"cannot parse rational {text!r}")


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def _poly_json(f: MultiPoly, alpha0=None) -> str:
    if alpha0 is None:
        return _json_dumps(f.to_json())
    terms = [{"exp": list(e), "coeff": str(c.eval_at(alpha0))}
             for e, c in f.sorted_terms()]
    return _json_dumps({"N": f.nvars, "alpha": str(alpha0), "terms": terms})


def _poly_text(f: MultiPoly, symbol: str, alpha0=None) -> str:
    if alpha0 is None:
        return f.format(symbol)
    spec = f.specialize(alpha0)
    if not spec:
        return "0"
    chunks = []
    for e, c in sorted(spec.items()):
        vars_part = "*".join(f"{symbol}{i+1}" + (f"^{k}" if k > 1 else "")
                             for i, k in enumerate(e) if k)
        if not vars_part:
            chunks.append(str(c))
        elif c == 1:
            chunks.append(vars_part)
        elif c == -1:
            chunks.append(f"-{vars_part}")
        else:
            chunks.append(f"({c})*{vars_part}")
    out = chunks[0]
    for ch in chunks[1:]:
        out += f" - {ch[1:]}" if ch.startswith("-") else f" + {ch}"
    return out


def _m_basis_text(p: MultiPoly) -> str:
    rows = []
    for e, c in p.terms.items():
        kappa = combinat.sort_to_partition(e)
        if kappa == e:
            rows.append((kappa, c))
    rows.sort(reverse=True)
    chunks = []
    for kappa, c in rows:
        label = ",".join(str(v) for v in kappa if v)
        mono = f"m[{label}]" if label else "1"
        if c.is_one():
            chunks.append(mono)
        else:
            chunks.append(f"({format_alpha(c)})*{mono}")
    return " + ".join(chunks) if chunks else "0"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_compute(args, parser):
    n = args.N
    index = _parse_parts(args.index, parser, n)
    if args.family == "E":
        poly = jack.build_E(index)
        symbol = "z"
    elif args.family == "P":
        if not combinat.is_partition(index):
            parser.error(f"P wants a weakly decreasing index, got {index}")
        poly = jack.build_P(index, len(index))
        symbol = "z"
    else:
        if not combinat.has_distinct_parts(index) or not combinat.is_partition(index):
            parser.error(f"S wants strictly decreasing parts, got {index}")
        delta = combinat.staircase(len(index))
        if any(r < d for r, d in zip(index, delta)):
            parser.error(f"S index {index} must dominate the staircase {delta}")
        poly = jack.build_S(index)
        symbol = "x"
    if args.format == "json":
        print(_poly_json(poly, args.alpha))
    elif args.family == "P" and args.alpha is None:
        print(_m_basis_text(poly))
    else:
        print(_poly_text(poly, symbol, args.alpha))
    return 0


def cmd_constants(args, parser):
    eta = _parse_parts(args.eta, parser, args.N)
    kappa = combinat.sort_to_partition(eta)
    values = [
        ("eta", list(eta)),
        ("d", scalars.const_d(eta)),
        ("dp", scalars.const_dp(eta)),
        ("e", scalars.const_e(eta)),
        ("ep", scalars.const_ep(eta)),
        ("b", scalars.const_b(eta)),
        ("h(eta+)", scalars.const_h(kappa)),
        ("b(eta+)", scalars.const_b(kappa)),
        ("E(1^N)", scalars.eval_E_at_ones(eta)),
        ("P(1^N)", scalars.eval_P_at_ones(kappa)),
        ("norm_E/norm_0", scalars.norm_ratio_E(eta)),
        ("norm_P/norm_0", scalars.norm_ratio_P(kappa)),
        ("u", scalars.u_eta(eta)),
        ("v", scalars.v_kappa(kappa)),
    ]
    if args.alpha is not None:
        values = [(k, v if isinstance(v, list) else v.eval_at(args.alpha))
                  for k, v in values]
    if args.format == "json":
        out = {k: (v if isinstance(v, list) else
                   (str(v) if args.alpha is not None else v.to_json()))
               for k, v in values}
        print(_json_dumps(out))
    else:
        for k, v in values:
            if isinstance(v, list):
                continue
            print(f"{k:>14} = {v}")
    return 0


def cmd_verify(args, parser):
    if args.deg < 0 or args.N < 1 or args.jobs < 1:
        parser.error("--deg must be >= 0, --N and --jobs >= 1")
    ks = tuple(int(k) for k in args.k.split(","))
    if any(k < 1 for k in ks):
        parser.error("--k entries must be positive integers")
    rs = tuple(_parse_fraction(r, parser) for r in args.r.split(","))
    bounds = verify.Bounds(n_max=args.N, deg=args.deg, ks=ks, rs=rs)
    report = verify.run_checks(bounds, name_filter=args.filter, jobs=args.jobs)
    if not report.results:
        parser.error(f"no checks match filter {args.filter!r}")
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def _bipoly_text(bp: BiPoly) -> str:
    chunks = []
    for (xe, ye), c in bp.sorted_terms():
        mono = "*".join([f"x{i+1}" + (f"^{k}" if k > 1 else "")
                         for i, k in enumerate(xe) if k]
                        + [f"y{i+1}" + (f"^{k}" if k > 1 else "")
                           for i, k in enumerate(ye) if k])
        cs = format_alpha(c)
        chunks.append(f"({cs})*{mono}" if mono else cs)
    return " + ".join(chunks) if chunks else "0"


def cmd_expand(args, parser):
    if args.deg < 0:
        parser.error("--deg must be >= 0")
    n = args.N
    if args.kernel == "omega":
        bp = omega_truncated(n, args.deg)
        if args.format == "json":
            print(_json_dumps(bp.to_json()))
        else:
            print(_bipoly_text(bp))
        if args.coeffs:
            print("# label -> 1/u")
            for eta in combinat.compositions_upto(args.deg, n):
                print(f"{list(eta)} -> {scalars.u_eta(eta).inverse()}")
    elif args.kernel == "pi":
        param = alpha_shift() if args.shifted else ALPHA
        bp = pi_truncated(param, n, n, args.deg)
        if args.format == "json":
            print(_json_dumps(bp.to_json()))
        else:
            print(_bipoly_text(bp))
        if args.coeffs:
            print("# label -> 1/v")
            for kappa in combinat.partitions_upto(args.deg, n):
                v = scalars.v_kappa(kappa)
                if args.shifted:
                    v = v.substitute(alpha_shift())
                print(f"{list(kappa)} -> {v.inverse()}")
    else:
        if args.r is None:
            parser.error("binomial expansion needs --r")
        r = _parse_fraction(args.r, parser)
        print(f"# expansion coefficients of prod_j (1-x_j)^(-{r}), degree <= {args.deg}")
        print("# label -> alpha^|eta| [r](eta+) / (u d)")
        for eta in combinat.compositions_upto(args.deg, n):
            kappa = combinat.sort_to_partition(eta)
            coeff = (ALPHA ** sum(eta) * scalars.gen_factorial(r, kappa)
                     / (scalars.u_eta(eta) * scalars.const_d(eta)))
            print(f"{list(eta)} -> {coeff}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jackpoly",
        description="Exact construction and verification of non-symmetric, "
                    "symmetric, and anti-symmetric Jack polynomials over Q(alpha).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print one polynomial")
    p.add_argument("family", choices=["E", "P", "S"])
    p.add_argument("index", help="comma-separated parts, e.g. 1,0")
    p.add_argument("--N", type=int, default=None, help="pad the index with zeros to N parts")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--alpha", type=Fraction, default=None,
                   help="specialize the parameter at an exact rational p/q")

    p = sub.add_parser("constants", help="print the scalar constants for a composition")
    p.add_argument("eta", help="comma-separated parts")
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--alpha", type=Fraction, default=None)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--N", type=int, default=4, help="largest variable count (default 4)")
    p.add_argument("--deg", type=int, default=5, help="largest sweep degree (default 5)")
    p.add_argument("--k", default="1,2", help="inverse parameter values for the torus oracle")
    p.add_argument("--r", default="1,2,3,5/2", help="exponents for the binomial checks")
    p.add_argument("--filter", default=None, help="run only checks whose name contains this")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("expand", help="print a truncated kernel or expansion table")
    p.add_argument("kernel", choices=["omega", "pi", "binomial"])
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--r", default=None, help="binomial exponent (rational)")
    p.add_argument("--shifted", action="store_true",
                   help="use the substituted parameter alpha/(alpha+1) for pi")
    p.add_argument("--coeffs", action="store_true", help="also print decomposition norms")
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"compute": cmd_compute, "constants": cmd_constants,
                "verify": cmd_verify, "expand": cmd_expand}
    return handlers[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
