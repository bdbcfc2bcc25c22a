"""The full identity suite behind ``numlore verify-all``.

Every check looks up library functions through their modules at call time,
so a patched formula (say, a wrong Thabit exponent) is seen by the suite.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from numlore import amicable, arith, congruence, diophantine, geometry, powersum, puzzles

SEED = 20240611

LISTED_PAIRS = [(220, 284), (1184, 1210), (2620, 2924), (5020, 5564), (6232, 6368), (17296, 18416)]


@dataclass
class Row:
    key: str
    source: str
    claim: str
    passed: bool
    detail: str
    seconds: float


def _thabit_pairs():
    want = {2: (220, 284), 4: (17296, 18416), 7: (9363584, 9437056)}
    got = {}
    for n in want:
        pair = amicable.thabit_pair(n)
        got[n] = None if pair is None else (pair.a, pair.b)
    ok = got == want and all(amicable.is_amicable(a, b) for a, b in want.values())
    return ok, f"n=2,4,7 -> {list(got.values())}"


def _thabit_composite():
    cand = amicable.thabit_candidate(3)
    ok = (cand.p, cand.q, cand.r) == (11, 23, 287) and not cand.r_prime and amicable.thabit_pair(3) is None
    return ok, f"n=3: r={cand.r} prime={cand.r_prime}"


def _amicable_search():
    found = [(p.a, p.b) for p in amicable.search_amicable(20000)]
    s = [0] + [arith.proper_divisor_sum(n) for n in range(1, 20001)]
    per_number = [(a, s[a]) for a in range(2, 20001) if a < s[a] <= 20000 and s[s[a]] == a]
    small = [(p.a, p.b) for p in amicable.search_amicable(2000)]
    ok = set(LISTED_PAIRS) <= set(found) and found == per_number and small == _brute_amicable(2000)
    return ok, f"{len(found)} pairs <= 20000, listed six present; oracles agree: {ok}"


def _brute_amicable(limit):
    # enumerate divisors directly, independent of the factorization path
    s = [0] * (limit + 1)
    for n in range(1, limit + 1):
        s[n] = sum(d for d in range(1, n // 2 + 1) if n % d == 0)
    return [(a, b) for a in range(1, limit + 1) for b in (s[a],) if a < b <= limit and s[b] == a]


def _perfect_scan():
    scan = [n for n in range(1, 10001) if amicable.is_perfect(n)]
    ranks = {amicable.perfect_of_rank(k) for k in range(2, 14)} - {None}
    ok = scan == [6, 28, 496, 8128] and set(scan) <= ranks
    return ok, f"perfect <= 10000: {scan}"


def _crt(residues, expected):
    system = [congruence.Congruence(r, m) for r, m in zip(residues, (3, 5, 7))]
    sol = congruence.crt_solve(system)
    scan = [x for x in range(105) if all(x % c.modulus == c.residue for c in system)]
    ok = sol.x0 == expected and sol.M == 105 and list(sol.basis) == [70, 21, 15] and scan == [sol.x0]
    return ok, f"x0={sol.x0} M={sol.M} basis={list(sol.basis)}"


def _wilson():
    bad = [p for p in range(2, 10001) if congruence.wilson_is_prime(p) != arith.is_prime(p)]
    return not bad, f"disagreements on [2, 10000]: {len(bad)}"


def _haytham():
    r = powersum.haytham_identity(4, 1)
    ok = (r.lhs, r.rhs) == (50, 50)
    ok &= all(powersum.haytham_identity(n, k).holds for n in range(1, 201) for k in range(7))
    return ok, "n=4,k=1: 50 = 30 + 20; exhaustive n<=200, k<=6"


def _haytham_general():
    rng = random.Random(SEED)
    r = powersum.haytham_general([1, 2, 6])
    ok = (r.lhs, r.rhs) == (36, 36)
    for _ in range(1000):
        seq = [rng.randint(-10**6, 10**6) for _ in range(rng.randint(1, 50))]
        ok &= powersum.haytham_general(seq).holds
    return ok, "f=i! at n=3: 36 = 36; 1000 random sequences"


def _factorial_identity():
    r = powersum.factorial_identity(6)
    return (r.lhs, r.rhs) == (6111, 6111) and r.holds, f"n=6: {r.lhs} = {r.rhs}"


def _faulhaber():
    ok = all(
        powersum.faulhaber(k)(n) == sum(i**k for i in range(1, n + 1))
        for k in range(11)
        for n in range(201)
    )
    square = powersum.poly_square(powersum.faulhaber(1))
    ok &= tuple(powersum.faulhaber(3).coefficients) == square
    return ok, "k<=10, n<=200 agree; S_3 == S_1^2 coefficient-wise"


def _karaji_cubes():
    r = powersum.karaji_cube_square(10)
    ok = r.lhs == r.rhs == 3025 and len(r.steps) == 10 and r.holds
    return ok, f"1^3+...+10^3 = {r.lhs}, (1+...+10)^2 = {r.rhs}, {len(r.steps)} steps"


def _karaji_param():
    rng = random.Random(SEED + 1)
    ok = True
    for _ in range(1000):
        u = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        v = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        if v == -1:
            continue
        ok &= diophantine.verify_cube_square_triple(diophantine.karaji_solution(u, v))
    t = diophantine.karaji_solution(2, 1)
    ok &= (t.x, t.y, t.z) == (2, 2, 4)
    return ok, "(u,v)=(2,1) -> (2,2,4); 1000 random rational pairs"


def _radicals():
    cr = diophantine.simplify_cube_root
    diff = diophantine.radical_add(cr(54), cr(2), -1)
    total = diophantine.radical_add(cr(54), cr(2), 1)
    ok = diff == cr(16) and total == cr(128)
    return ok, f"cbrt54 - cbrt2 = {diff}; cbrt54 + cbrt2 = {total}"


def _pythagoras():
    rng = random.Random(SEED + 2)
    ok = True
    n = 0
    while n < 10000:
        sides = [Fraction(rng.randint(1, 400), rng.randint(1, 30)) for _ in range(3)]
        try:
            t = geometry.Triangle(*sides)
        except geometry.DegenerateTriangleError:
            continue
        ok &= geometry.verify_generalized_pythagoras(t).holds
        n += 1
    worst = 0.0
    for t in _well_conditioned(rng, 1000):
        feet = geometry.construct_feet(t)
        aa, bb = geometry.thabit_segments(t)
        c = float(t.c)
        worst = max(worst, abs(feet.aa - float(aa)) / c, abs(feet.bb - float(bb)) / c)
    ok &= worst < 1e-9
    return ok, f"10000 exact triangles; construction max rel. error {worst:.2e}"


def _well_conditioned(rng, count, min_angle_deg=5.0):
    out = []
    while len(out) < count:
        sides = [Fraction(rng.randint(1, 400), rng.randint(1, 30)) for _ in range(3)]
        try:
            t = geometry.Triangle(*sides)
        except geometry.DegenerateTriangleError:
            continue
        a, b, c = map(float, (t.a, t.b, t.c))
        angles = (
            math.acos((b * b + c * c - a * a) / (2 * b * c)),
            math.acos((a * a + c * c - b * b) / (2 * a * c)),
            math.acos((a * a + b * b - c * c) / (2 * a * b)),
        )
        if min(angles) >= math.radians(min_angle_deg):
            out.append(t)
    return out


def _camels():
    sol = puzzles.solve_estate(puzzles.EstateProblem(17, (Fraction(1, 2), Fraction(1, 3), Fraction(1, 9))))
    return (sol.borrow, sol.shares) == (1, (9, 6, 2)), f"borrow {sol.borrow}, shares {list(sol.shares)}"


def _bread():
    pay = puzzles.solve_meal(puzzles.MealProblem((3, 5), 3, Fraction(8)))
    return pay == [1, 7], f"payments {[str(p) for p in pay]}"


def _wage():
    d = puzzles.solve_wage(puzzles.WageProblem(30, Fraction(10), 3))
    return d == Fraction(10, 9), f"dress = {d}"


def _quadratic():
    roots = diophantine.quadratic_positive_roots(1, 10, -39)
    return roots == [3], f"x^2 + 10x = 39 -> {[str(r) for r in roots]}"


CHECKS = [
    ("thabit-pairs", "Thabit ibn Qurra; al-Farisi; Yazdi", "Thabit's rule yields 220/284, 17296/18416, 9363584/9437056", _thabit_pairs),
    ("thabit-composite", "Thabit ibn Qurra", "n=3 fails because r = 287 = 7*41", _thabit_composite),
    ("amicable-search", "Thabit ibn Qurra", "sieve search to 20000 matches per-number divisor sums", _amicable_search),
    ("perfect-numbers", "al-Haytham", "even perfect numbers have the form 2^(k-1)(2^k-1)", _perfect_scan),
    ("crt-sunzi", "Sun Zi; Ibn Tahir al-Baghdadi", "x = 2 (3), 3 (5), 2 (7) -> 23 with basis 70, 21, 15", lambda: _crt((2, 3, 2), 23)),
    ("crt-liber-abaci", "Fibonacci", "x = 2 (3), 3 (5), 4 (7) -> 53", lambda: _crt((2, 3, 4), 53)),
    ("wilson", "al-Haytham", "p prime iff p | (p-1)! + 1, for p <= 10000", _wilson),
    ("haytham-rectangle", "al-Haytham", "(n+1) S_k = S_{k+1} + sum of partial sums", _haytham),
    ("haytham-general", "al-Haytham", "the rectangle identity for any f", _haytham_general),
    ("factorial-identity", "al-Haytham", "the rectangle identity with f(i) = i!", _factorial_identity),
    ("faulhaber", "al-Haytham", "power-sum polynomials from the recurrence", _faulhaber),
    ("karaji-cube-square", "al-Karaji", "1^3 + ... + 10^3 = (1 + ... + 10)^2", _karaji_cubes),
    ("karaji-parameterization", "al-Karaji", "rational points on x^3 + y^3 = z^2", _karaji_param),
    ("cube-radicals", "al-Karaji", "cbrt54 - cbrt2 = cbrt16, cbrt54 + cbrt2 = cbrt128", _radicals),
    ("generalized-pythagoras", "Thabit ibn Qurra", "a^2 + b^2 = c(AA' + BB')", _pythagoras),
    ("camels", "classical puzzle", "17 camels split 1/2, 1/3, 1/9", _camels),
    ("bread", "classical puzzle", "3 and 5 loaves, 8 coins -> 1 : 7", _bread),
    ("wage", "al-Kashi", "30 days for 10 dinars and a dress, 3 days worked -> 10/9", _wage),
    ("quadratic", "al-Khwarizmi", "positive root of x^2 + 10x = 39 is 3", _quadratic),
]


def verify_all(only: list[str] | None = None) -> list[Row]:
    rows = []
    for key, source, claim, check in CHECKS:
        if only is not None and key not in only:
            continue
        start = time.perf_counter()
        try:
            passed, detail = check()
        except Exception as exc:  # a crashing check is a failing row
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        rows.append(Row(key, source, claim, bool(passed), detail, time.perf_counter() - start))
    return rows
