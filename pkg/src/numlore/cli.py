"""Command-line interface: ``numlore <command> ... [--format json|text]``.

In JSON mode exactly one envelope is written to stdout::

    {"command": ..., "inputs": {...}, "result": {...},
     "verified": true|false|null, "provenance": "..."}

Integers and rationals are serialized as decimal strings ("9437056",
"10/9") so no value passes through a float. Diagnostics go to stderr.
Exit status: 0 success, 1 domain error or failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import re
import sys
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from numlore import amicable, arith, bench, congruence, diophantine, geometry, powersum, puzzles, verify
from numlore.errors import NumloreError

log = logging.getLogger("numlore")


@dataclass
class Outcome:
    result: dict
    text: list[str]
    verified: bool | None = None
    inputs: dict = field(default_factory=dict)


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # accept -3, -1:7 and -1/2 as values rather than option flags
        self._negative_number_matcher = re.compile(r"^-\d[\d/:.]*$")


# -- argument types -----------------------------------------------------------

def _int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer {token!r}") from None


def _rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational {token!r}") from None


def _congruence_token(token: str) -> tuple[int, int]:
    parts = token.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"malformed congruence {token!r}; expected r:m")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed congruence {token!r}; expected r:m") from None


def _sign(token: str) -> int:
    if token in ("+", "plus"):
        return 1
    if token in ("-", "minus"):
        return -1
    raise argparse.ArgumentTypeError(f"malformed sign {token!r}; expected + or -")


# -- serialization ------------------------------------------------------------

def jsonable(obj):
    """Recursively convert results to JSON-safe values with numbers as strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, float):
        return repr(obj)
    if isinstance(obj, diophantine.Surd):
        return {"p": str(obj.p), "s": str(obj.s), "d": str(obj.d), "q": str(obj.q), "text": str(obj)}
    if isinstance(obj, diophantine.CubeRadical):
        return {"coeff": str(obj.coeff), "radicand": str(obj.radicand), "text": str(obj)}
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return str(obj)


def _report(r: powersum.IdentityReport) -> dict:
    return {"lhs": r.lhs, "rhs": r.rhs, "holds": r.holds}


# -- handlers -----------------------------------------------------------------

def cmd_arith_egcd(args):
    g, x, y = arith.egcd(args.a, args.b)
    ok = args.a * x + args.b * y == g
    return Outcome({"g": g, "x": x, "y": y}, [f"gcd({args.a}, {args.b}) = {g} = {args.a}*({x}) + {args.b}*({y})"], ok)


def cmd_arith_inverse(args):
    r = arith.mod_inverse(args.a, args.m)
    return Outcome({"inverse": r}, [f"{args.a}^-1 mod {args.m} = {r}"], args.a * r % args.m == 1)


def cmd_arith_prime(args):
    p = arith.is_prime(args.n)
    return Outcome({"prime": p}, [f"{args.n} is {'prime' if p else 'not prime'}"])


def cmd_arith_factor(args):
    f = arith.factorize(args.n)
    text = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in f)
    return Outcome({"factors": [[p, e] for p, e in f]}, [f"{args.n} = {text}"])


def cmd_arith_divsum(args):
    s = arith.proper_divisor_sum(args.n)
    return Outcome({"proper_divisor_sum": s}, [f"s({args.n}) = {s}"])


def cmd_arith_cubefree(args):
    c, m = arith.cube_free_decompose(args.n)
    return Outcome({"c": c, "m": m}, [f"{args.n} = {c}^3 * {m}"], c**3 * m == args.n)


def cmd_amicable_thabit(args):
    cand = amicable.thabit_candidate(args.n)
    pair = amicable.thabit_pair(args.n)
    text = [f"n={cand.n}: p={cand.p} ({_pr(cand.p_prime)}), q={cand.q} ({_pr(cand.q_prime)}), r={cand.r} ({_pr(cand.r_prime)})"]
    if pair is None:
        text.append("not all of p, q, r are prime: no pair")
        return Outcome({"candidate": cand, "pair": None}, text, None)
    text.append(f"amicable pair ({pair.a}, {pair.b}), verified by divisor sums")
    return Outcome({"candidate": cand, "pair": pair}, text, True)


def _pr(flag: bool) -> str:
    return "prime" if flag else "composite"


def cmd_amicable_search(args):
    pairs = amicable.search_amicable(args.limit)
    text = [f"{len(pairs)} amicable pair(s) with both members <= {args.limit}"]
    text += [f"  ({p.a}, {p.b})" for p in pairs]
    return Outcome({"pairs": [[p.a, p.b] for p in pairs]}, text)


def cmd_amicable_check(args):
    ok = amicable.is_amicable(args.a, args.b)
    return Outcome({"amicable": ok}, [f"({args.a}, {args.b}) {'is' if ok else 'is not'} an amicable pair"])


def cmd_perfect(args):
    if args.what[0] == "check":
        if len(args.what) != 2:
            raise _UsageError("usage: perfect check <n>")
        n = _parse_or_usage(_int, args.what[1])
        ok = amicable.is_perfect(n)
        return Outcome({"n": n, "perfect": ok}, [f"{n} {'is' if ok else 'is not'} perfect"], inputs={"n": n})
    if len(args.what) != 1:
        raise _UsageError("usage: perfect <k> | perfect check <n>")
    k = _parse_or_usage(_int, args.what[0])
    n = amicable.perfect_of_rank(k)
    if n is None:
        return Outcome({"k": k, "perfect": None}, [f"2^{k} - 1 = {2**k - 1} is composite: no perfect number"], inputs={"k": k})
    return Outcome({"k": k, "perfect": n}, [f"2^{k-1} * (2^{k} - 1) = {n}, perfect"], True, inputs={"k": k})


def cmd_crt(args):
    system = [congruence.Congruence(r, m) for r, m in args.congruences]
    sol = congruence.crt_solve(system)
    result = {"x0": sol.x0, "M": sol.M, "basis": list(sol.basis)}
    text = [
        "basis: " + ", ".join(str(e) for e in sol.basis),
        f"x ≡ {sol.x0} (mod {sol.M})",
    ]
    if args.t is not None:
        xt = congruence.crt_general_solution(sol, args.t)
        result["t"] = args.t
        result["x"] = xt
        text.append(f"t={args.t}: x = {xt}")
    ok = all(sol.x0 % c.modulus == c.residue for c in system)
    return Outcome(result, text, ok, inputs={"congruences": [f"{r}:{m}" for r, m in args.congruences], "t": args.t})


def cmd_wilson(args):
    ok = congruence.wilson_is_prime(args.p)
    return Outcome({"prime": ok}, [f"({args.p}-1)! {'≡' if ok else '≢'} -1 (mod {args.p}): {'prime' if ok else 'not prime'}"])


def cmd_powersum_sum(args):
    s = powersum.sum_powers(args.n, args.k)
    return Outcome({"sum": s}, [f"sum i^{args.k}, i=1..{args.n} = {s}"])


def cmd_powersum_identity(args):
    r = powersum.haytham_identity(args.n, args.k)
    return Outcome(_report(r), [f"(n+1) S_{args.k}({args.n}) = {r.lhs}", f"S_{args.k + 1} + sum of partials = {r.rhs}", _holds(r.holds)], r.holds)


def cmd_powersum_general(args):
    r = powersum.haytham_general(args.values)
    return Outcome(_report(r), [f"lhs = {r.lhs}", f"rhs = {r.rhs}", _holds(r.holds)], r.holds)


def cmd_powersum_factorial(args):
    r = powersum.factorial_identity(args.n)
    return Outcome(_report(r), [f"(n+1) sum i! = {r.lhs}", f"sum i*i! + sum of partials = {r.rhs}", _holds(r.holds)], r.holds)


def cmd_powersum_faulhaber(args):
    poly = powersum.faulhaber(args.k)
    terms = [f"{c}*n^{j}" for j, c in enumerate(poly.coefficients) if c]
    return Outcome({"k": args.k, "coefficients": list(poly.coefficients)}, [f"S_{args.k}(n) = " + " + ".join(terms)])


def cmd_powersum_karaji(args):
    r = powersum.karaji_cube_square(args.n)
    text = [f"sum of cubes = {r.lhs}", f"square of sum = {r.rhs}"]
    text += [f"  {s.square} = {s.inner_square} + {s.m}^3" for s in r.steps]
    text.append(_holds(r.holds))
    result = _report(r)
    result["steps"] = [{"m": s.m, "square": s.square, "inner_square": s.inner_square, "border": s.border, "holds": s.holds} for s in r.steps]
    return Outcome(result, text, r.holds)


def _holds(flag: bool) -> str:
    return "identity holds" if flag else "IDENTITY FAILS"


def cmd_dioph_karaji(args):
    t = diophantine.karaji_solution(args.u, args.v)
    ok = diophantine.verify_cube_square_triple(t)
    return Outcome({"x": t.x, "y": t.y, "z": t.z}, [f"x = {t.x}, y = {t.y}, z = {t.z}", f"x^3 + y^3 = {t.x**3 + t.y**3} = z^2"], ok)


def cmd_dioph_check(args):
    ok = diophantine.verify_cube_square_triple(diophantine.RationalTriple(args.x, args.y, args.z))
    return Outcome({"holds": ok}, [f"x^3 + y^3 {'=' if ok else '!='} z^2"], ok)


def cmd_radical_simplify(args):
    r = diophantine.simplify_cube_root(args.n)
    return Outcome({"radical": r}, [f"cbrt({args.n}) = {r}"])


def cmd_radical_combine(args):
    a, b = diophantine.simplify_cube_root(args.n1), diophantine.simplify_cube_root(args.n2)
    r = diophantine.radical_add(a, b, args.sign)
    op = "+" if args.sign > 0 else "-"
    if r is None:
        return Outcome({"radical": None, "cube": None}, [f"cbrt({args.n1}) {op} cbrt({args.n2}) has no single-radical form"], inputs={"n1": args.n1, "sign": op, "n2": args.n2})
    cube = r.coeff**3 * r.radicand
    text = [f"cbrt({args.n1}) {op} cbrt({args.n2}) = {a} {op} {b} = {r}"]
    if cube > 0 and cube.denominator == 1:
        text.append(f"  = cbrt({cube})")
    return Outcome({"radical": r, "cube": cube}, text, inputs={"n1": args.n1, "sign": op, "n2": args.n2})


def cmd_quadratic(args):
    roots = diophantine.quadratic_positive_roots(args.a, args.b, args.c)
    shown = ", ".join(str(r) for r in roots) or "none"
    return Outcome({"roots": roots}, [f"positive roots of {args.a}x^2 + {args.b}x + {args.c}: {shown}"])


def cmd_triangle(args):
    t = geometry.Triangle(args.a, args.b, args.c)
    aa, bb = geometry.thabit_segments(t)
    report = geometry.verify_generalized_pythagoras(t)
    feet = geometry.construct_feet(t)
    c = float(t.c)
    agree = abs(feet.aa - float(aa)) / c < 1e-9 and abs(feet.bb - float(bb)) / c < 1e-9
    text = [
        f"AA' = b^2/c = {aa}, BB' = a^2/c = {bb}",
        f"a^2 + b^2 = {report.lhs}, c(AA' + BB') = {report.rhs}: {_holds(report.holds)}",
        f"constructed A' = ({feet.A_prime[0]:.12g}, 0), B' = ({feet.B_prime[0]:.12g}, 0), agreement: {agree}",
    ]
    result = {"AA": aa, "BB": bb, **_report(report), "feet": {"A_prime": list(feet.A_prime), "B_prime": list(feet.B_prime), "C": list(feet.C)}, "construction_agrees": agree}
    return Outcome(result, text, report.holds and agree)


def cmd_puzzle_camels(args):
    sol = puzzles.solve_estate(puzzles.EstateProblem(args.total, tuple(args.fractions)))
    text = [f"borrow {sol.borrow}, divide {args.total + sol.borrow}: shares " + ", ".join(map(str, sol.shares)), f"return {sol.borrow}"]
    return Outcome({"borrow": sol.borrow, "shares": list(sol.shares)}, text, sum(sol.shares) == args.total)


def cmd_puzzle_bread(args):
    pay = puzzles.solve_meal(puzzles.MealProblem(tuple(args.contributions), args.eaters, args.payment))
    return Outcome({"payments": pay}, ["payments: " + " : ".join(map(str, pay))], sum(pay) == args.payment)


def cmd_puzzle_wage(args):
    d = puzzles.solve_wage(puzzles.WageProblem(args.period, args.cash, args.worked))
    return Outcome({"value": d}, [f"item value = {d}"])


def cmd_verify_all(args):
    rows = verify.verify_all()
    width = max(len(r.key) for r in rows)
    text = [f"{'PASS' if r.passed else 'FAIL'}  {r.key:<{width}}  {r.source}: {r.detail} ({r.seconds:.2f}s)" for r in rows]
    passed = sum(r.passed for r in rows)
    text.append(f"{passed}/{len(rows)} checks passed")
    result = {"rows": [{"key": r.key, "source": r.source, "claim": r.claim, "passed": r.passed, "detail": r.detail} for r in rows], "passed": passed, "total": len(rows)}
    return Outcome(result, text, passed == len(rows))


def cmd_bench_sieve(args):
    rows = bench.run_sieve_bench(args.limit, repeat=args.repeat, steps=args.steps)
    text = [f"limit={r.limit} elapsed_ms={r.elapsed_ms:.3f} checksum={r.checksum} agrees={r.agrees}" for r in rows]
    if args.out:
        bench.write_csv(rows, args.out)
        text.append(f"wrote {args.out}")
    if args.plot:
        from numlore import plotting

        plotting.plot_sieve_bench(rows, args.plot)
        text.append(f"wrote {args.plot}")
    result = {"rows": [{"limit": r.limit, "elapsed_ms": f"{r.elapsed_ms:.3f}", "checksum": r.checksum, "agrees": r.agrees} for r in rows]}
    return Outcome(result, text, all(r.agrees for r in rows))


# command path -> (handler, library operations it exposes, source attribution)
COMMANDS = {
    ("arith", "egcd"): (cmd_arith_egcd, ("arith.egcd",), "extended Euclid"),
    ("arith", "inverse"): (cmd_arith_inverse, ("arith.mod_inverse",), "Ibn Tahir al-Baghdadi"),
    ("arith", "prime"): (cmd_arith_prime, ("arith.is_prime",), "trial division"),
    ("arith", "factor"): (cmd_arith_factor, ("arith.factorize",), "trial division"),
    ("arith", "divsum"): (cmd_arith_divsum, ("arith.proper_divisor_sum",), "Thabit ibn Qurra"),
    ("arith", "cubefree"): (cmd_arith_cubefree, ("arith.cube_free_decompose",), "al-Karaji"),
    ("amicable", "thabit"): (cmd_amicable_thabit, ("amicable.thabit_candidate", "amicable.thabit_pair"), "Thabit ibn Qurra"),
    ("amicable", "search"): (cmd_amicable_search, ("amicable.search_amicable",), "Thabit ibn Qurra"),
    ("amicable", "check"): (cmd_amicable_check, ("amicable.is_amicable",), "Thabit ibn Qurra"),
    ("perfect",): (cmd_perfect, ("amicable.perfect_of_rank", "amicable.is_perfect"), "al-Haytham"),
    ("crt",): (cmd_crt, ("congruence.crt_basis", "congruence.crt_solve", "congruence.crt_general_solution"), "Sun Zi; Ibn Tahir al-Baghdadi"),
    ("wilson",): (cmd_wilson, ("congruence.wilson_is_prime",), "al-Haytham"),
    ("powersum", "sum"): (cmd_powersum_sum, ("powersum.sum_powers",), "al-Haytham"),
    ("powersum", "identity"): (cmd_powersum_identity, ("powersum.haytham_identity",), "al-Haytham"),
    ("powersum", "general"): (cmd_powersum_general, ("powersum.haytham_general",), "al-Haytham"),
    ("powersum", "factorial"): (cmd_powersum_factorial, ("powersum.factorial_identity",), "al-Haytham"),
    ("powersum", "faulhaber"): (cmd_powersum_faulhaber, ("powersum.faulhaber",), "al-Haytham"),
    ("powersum", "karaji"): (cmd_powersum_karaji, ("powersum.karaji_cube_square",), "al-Karaji"),
    ("dioph", "karaji"): (cmd_dioph_karaji, ("diophantine.karaji_solution",), "al-Karaji"),
    ("dioph", "check"): (cmd_dioph_check, ("diophantine.verify_cube_square_triple",), "al-Karaji"),
    ("radical", "simplify"): (cmd_radical_simplify, ("diophantine.simplify_cube_root",), "al-Karaji"),
    ("radical", "combine"): (cmd_radical_combine, ("diophantine.radical_add",), "al-Karaji"),
    ("quadratic",): (cmd_quadratic, ("diophantine.quadratic_positive_roots",), "al-Khwarizmi"),
    ("triangle",): (cmd_triangle, ("geometry.thabit_segments", "geometry.verify_generalized_pythagoras", "geometry.construct_feet"), "Thabit ibn Qurra"),
    ("puzzle", "camels"): (cmd_puzzle_camels, ("puzzles.solve_estate",), "classical puzzle"),
    ("puzzle", "bread"): (cmd_puzzle_bread, ("puzzles.solve_meal",), "classical puzzle"),
    ("puzzle", "wage"): (cmd_puzzle_wage, ("puzzles.solve_wage",), "al-Kashi"),
    ("verify-all",): (cmd_verify_all, ("verify.verify_all",), "all checks"),
    ("bench", "sieve"): (cmd_bench_sieve, ("arith.divisor_sum_sieve",), "divisor-sum sieve"),
}


def _add_arguments(path: tuple[str, ...], p: argparse.ArgumentParser) -> None:
    add = p.add_argument
    if path == ("arith", "egcd"):
        add("a", type=_int)
        add("b", type=_int)
    elif path == ("arith", "inverse"):
        add("a", type=_int)
        add("m", type=_int)
    elif path[0] == "arith":
        add("n", type=_int)
    elif path == ("amicable", "thabit"):
        add("n", type=_int)
    elif path == ("amicable", "search"):
        add("limit", type=_int)
    elif path == ("amicable", "check"):
        add("a", type=_int)
        add("b", type=_int)
    elif path == ("perfect",):
        add("what", nargs="+", metavar="k | check n")
    elif path == ("crt",):
        add("congruences", nargs="+", type=_congruence_token, metavar="r:m")
        add("--t", type=_int, default=None, help="also report x0 + t*M")
    elif path == ("wilson",):
        add("p", type=_int)
    elif path in (("powersum", "sum"), ("powersum", "identity")):
        add("n", type=_int)
        add("k", type=_int)
    elif path == ("powersum", "general"):
        add("values", nargs="+", type=_int, metavar="f(i)")
    elif path == ("powersum", "faulhaber"):
        add("k", type=_int)
    elif path in (("powersum", "factorial"), ("powersum", "karaji")):
        add("n", type=_int)
    elif path == ("dioph", "karaji"):
        add("u", type=_rational)
        add("v", type=_rational)
    elif path == ("dioph", "check"):
        for name in "xyz":
            add(name, type=_rational)
    elif path == ("radical", "simplify"):
        add("n", type=_int)
    elif path == ("radical", "combine"):
        add("n1", type=_int)
        add("sign", type=_sign, metavar="+|-")
        add("n2", type=_int)
    elif path in (("quadratic",), ("triangle",)):
        for name in "abc":
            add(name, type=_rational)
    elif path == ("puzzle", "camels"):
        add("total", type=_int)
        add("fractions", nargs="+", type=_rational, metavar="fraction")
    elif path == ("puzzle", "bread"):
        add("contributions", nargs="+", type=_int, metavar="loaves")
        add("--eaters", type=_int, required=True)
        add("--payment", type=_rational, required=True)
    elif path == ("puzzle", "wage"):
        add("period", type=_int)
        add("cash", type=_rational)
        add("worked", type=_int)
    elif path == ("bench", "sieve"):
        add("limit", type=_int)
        add("--repeat", type=_int, default=3)
        add("--steps", type=_int, default=1, help="also time a geometric ladder of smaller limits")
        add("--out", help="write limit,elapsed_ms,checksum CSV here")
        add("--plot", help="write a timing figure here (png, pdf or svg)")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="output format; JSON numbers are decimal strings (default: text)")
    parser = _Parser(prog="numlore", description=__doc__.splitlines()[0], parents=[common])
    groups: dict[str, argparse._SubParsersAction] = {}
    top = parser.add_subparsers(dest="command", metavar="command", required=True)
    for path in COMMANDS:
        if len(path) == 1:
            leaf = top.add_parser(path[0], parents=[common])
        else:
            if path[0] not in groups:
                grp = top.add_parser(path[0], parents=[common])
                groups[path[0]] = grp.add_subparsers(dest="sub", metavar="subcommand", required=True)
            leaf = groups[path[0]].add_parser(path[1], parents=[common])
        _add_arguments(path, leaf)
        leaf.set_defaults(path=path)
    return parser


class _UsageError(Exception):
    pass


def _parse_or_usage(fn, token):
    try:
        return fn(token)
    except argparse.ArgumentTypeError as exc:
        raise _UsageError(str(exc)) from None


def _inputs(args) -> dict:
    skip = {"command", "sub", "path", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _emit(fmt, envelope, text):
    if fmt == "json":
        sys.stdout.write(json.dumps(jsonable(envelope), sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(text) + "\n")


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "text")
    handler, _ops, source = COMMANDS[args.path]
    command = " ".join(args.path)
    try:
        out = handler(args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"numlore: error: {exc}", file=sys.stderr)
        return 2
    except NumloreError as exc:
        print(f"numlore: {command}: {exc}", file=sys.stderr)
        if fmt == "json":
            envelope = {"command": command, "inputs": _inputs(args), "result": None,
                        "error": {"type": type(exc).__name__, "message": str(exc)},
                        "verified": None, "provenance": source}
            sys.stdout.write(json.dumps(jsonable(envelope), sort_keys=True) + "\n")
        return 1
    envelope = {"command": command, "inputs": out.inputs or _inputs(args), "result": out.result,
                "verified": out.verified, "provenance": source}
    _emit(fmt, envelope, out.text)
    return 1 if out.verified is False else 0


if __name__ == "__main__":
    sys.exit(main())
