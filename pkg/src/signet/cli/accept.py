# src/signet/cli/accept.py
"""Acceptance suites: exact cross-checks between independent computations.

Each criterion runs a seeded batch of instances and reports a pass flag,
the number of instances checked, wall time and a small details object.
Instance counts are multiplied by ``scale`` (at least one instance each),
so a quick run can use ``scale=0.05`` and a full run ``scale=1``.
"""

import logging
import math
import random
import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Tuple

from signet.cli import corpus
from signet.errors import SignetError, SingularError
from signet.exact.factor import factor_poly
from signet.exact.poly import Poly
from signet.forms.diagonalize import generator_relation
from signet.forms.linalg import congruence, mat_mul
from signet.forms.lpoly import l_polynomial
from signet.forms.matrix import EpsSymMatrix
from signet.forms.plumbing import e8_matrix
from signet.forms.signature import principal_minors, signature, variation
from signet.knots.braid import BraidWord, closure_components, mirror, stabilize
from signet.knots.seifert import alexander, is_unimodular, knot_signature, s_equiv_enlarge, seifert_matrix
from signet.knots.signature import omega_signature, signature_function
from signet.maslov.dedekind import dedekind_cross_check, dedekind_sum
from signet.maslov.defect import DEFAULT_CONVENTION, search_conventions
from signet.maslov.wall import cocycle_defect, meyer_pair, wall_maslov
from signet.sturm.chain import count_real_roots, count_roots, primitive_sturm_sequence, root_bound
from signet.sturm.contfrac import sturm_tri, tri, tri_minors
from signet.sturm.hermite import bezoutian, hermite_count, jacobi_hermite
from signet.sturm.roots import RealAlgebraic, isolate_roots, ra_compare
from signet.witt.linking import (
    chain_boundary,
    euclidean_chain,
    lens_linking,
    linking_boundary,
    linking_witt_eq,
    verify_trilinking,
)
from signet.witt.ratfunc import ResidueClass, WittClassRX, residue, witt_rx
from signet.witt.rational import witt_q

logger = logging.getLogger(__name__)

SUITES = ("sturm", "witt", "maslov", "knots", "defect-search")
DEFAULT_SEED = 20240601

# Sampled roots of unity for the braid-relation comparisons.
_OMEGAS = ((1, 3), (1, 4), (1, 5), (2, 5), (1, 6), (1, 7), (2, 7), (3, 7), (1, 8), (3, 8))

# Coefficient tables of L_1 .. L_4, keyed by exponent vectors of (p_1, ..., p_k).
_L_TABLE: Dict[int, Dict[Tuple[int, ...], Fraction]] = {
    1: {(1,): Fraction(1, 3)},
    2: {(0, 1): Fraction(7, 45), (2, 0): Fraction(-1, 45)},
    3: {(0, 0, 1): Fraction(62, 945), (1, 1, 0): Fraction(-13, 945), (3, 0, 0): Fraction(2, 945)},
    4: {
        (0, 0, 0, 1): Fraction(381, 14175),
        (1, 0, 1, 0): Fraction(-71, 14175),
        (0, 2, 0, 0): Fraction(-19, 14175),
        (2, 1, 0, 0): Fraction(22, 14175),
        (4, 0, 0, 0): Fraction(-3, 14175),
    },
}


@dataclass
class Criterion:
    name: str
    passed: bool
    count: int
    seconds: float
    details: Dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "count": self.count,
            "seconds": round(self.seconds, 6),
            "details": self.details,
        }


@dataclass
class Report:
    suite: str
    criteria: List[Criterion]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.criteria)

    def as_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "criteria": [c.as_dict() for c in self.criteria]}


@dataclass
class _Run:
    """Shared state of one suite run."""

    rng: random.Random
    scale: float
    jobs: int

    def count(self, n: int) -> int:
        return max(1, int(round(n * self.scale)))


CheckResult = Tuple[bool, int, Dict[str, Any]]
_REGISTRY: Dict[str, List[Tuple[str, Callable[[_Run], CheckResult]]]] = {s: [] for s in SUITES}


def _criterion(suite: str, name: str):
    def register(fn: Callable[[_Run], CheckResult]) -> Callable[[_Run], CheckResult]:
        _REGISTRY[suite].append((name, fn))
        return fn

    return register


def _first_failures(failures: List[Any], limit: int = 5) -> Dict[str, Any]:
    return {"failures": len(failures), "examples": [str(f) for f in failures[:limit]]} if failures else {}


# -------------------- sturm --------------------
@_criterion("sturm", "e8")
def _e8(run: _Run) -> CheckResult:
    E8 = e8_matrix()
    profile = signature(E8)
    minors = [int(v) for v in principal_minors(E8)]
    ok = (profile.p, profile.q, profile.nullity) == (8, 0, 0) and minors == [1, 2, 3, 4, 5, 6, 7, 8, 1]
    return ok, 1, {"signature": profile.as_dict(), "minors": minors}


@_criterion("sturm", "inertia")
def _inertia(run: _Run) -> CheckResult:
    failures = []
    total = run.count(500)
    for _ in range(total):
        n = run.rng.randint(1, 8)
        S = corpus.random_regular_symmetric(run.rng, n)
        profiles = {m: signature(S, m) for m in ("sjgf", "lagrange", "eps")}
        if len(set(profiles.values())) != 1:
            failures.append(("methods", S))
            continue
        for _ in range(3):
            A = corpus.random_invertible(run.rng, n)
            if signature(EpsSymMatrix.of(congruence(A, S))) != profiles["sjgf"]:
                failures.append(("congruence", S, A))
                break
    return not failures, total, _first_failures(failures)


def _generic_point(P: Poly, start: Fraction, step: int) -> Fraction:
    """First of ``start, start + step, ...`` where no Sturm chain element vanishes."""
    chain = primitive_sturm_sequence(P)
    t = start
    while 0 in chain.signs_at(t):
        t += step
    return t


@_criterion("sturm", "four-way-root-count")
def _four_way(run: _Run) -> CheckResult:
    failures = []
    total = run.count(200)
    for _ in range(total):
        P = corpus.random_squarefree(run.rng, run.rng.randint(1, 8)).monic()
        B = root_bound(P)
        hi, lo = _generic_point(P, B, 1), _generic_point(P, -B, -1)
        n = count_roots(P, lo, hi)
        hermite = signature(jacobi_hermite(P).hermite).tau
        bez = signature(bezoutian(P, P.derivative())).tau
        T = sturm_tri(P)
        jump = signature(T.evaluate(hi)).tau - signature(T.evaluate(lo)).tau
        if not n == hermite == bez == jump // 2 or jump % 2:
            failures.append((P.coeffs, n, hermite, bez, jump))
            continue
        for _ in range(5):
            t1, t2 = sorted(Fraction(run.rng.randint(-400, 400), run.rng.randint(1, 40)) for _ in range(2))
            if t1 == t2 or P.evaluate(t1) == 0 or P.evaluate(t2) == 0:
                continue
            if hermite_count(P, t2) - hermite_count(P, t1) != 2 * count_roots(P, t1, t2):
                failures.append((P.coeffs, t1, t2))
                break
    return not failures, total, _first_failures(failures)


@_criterion("sturm", "duality")
def _duality(run: _Run) -> CheckResult:
    failures = []
    total = run.count(500)
    for _ in range(total):
        chi = corpus.random_regular_chi(run.rng, run.rng.randint(1, 10))
        if variation(tri_minors(chi)) != variation(tri_minors(list(reversed(chi)))):
            failures.append(chi)
    symbolic = run.count(100)
    for _ in range(symbolic):
        A, B, C = (Fraction(run.rng.choice([-1, 1]) * run.rng.randint(1, 9), run.rng.randint(1, 4)) for _ in range(3))
        forward = [Fraction(1), A, B * A - 1, C * B * A - C - A]
        backward = [Fraction(1), C, B * C - 1, A * B * C - A - C]
        if 0 in forward or 0 in backward:
            continue
        if tri_minors([A, B, C]) != forward or variation(forward) != variation(backward):
            failures.append((A, B, C))
    return not failures, total + symbolic, _first_failures(failures)


@_criterion("sturm", "l-polynomials")
def _l_polynomials(run: _Run) -> CheckResult:
    failures = []
    for k, expected in _L_TABLE.items():
        got = {m: c for m, c in l_polynomial(k).as_dict().items() if c}
        if got != expected:
            failures.append(k)
    return not failures, len(_L_TABLE), _first_failures(failures)


@_criterion("sturm", "isolation-performance")
def _isolation_performance(run: _Run) -> CheckResult:
    timings = []
    total = run.count(20)
    bound = 2**32
    for _ in range(total):
        cs = [run.rng.randint(-bound, bound) for _ in range(64)] + [run.rng.randint(1, bound)]
        started = time.perf_counter()
        isolate_roots(Poly(cs))
        timings.append(time.perf_counter() - started)
    median = statistics.median(timings)
    return median < 5.0, total, {"median_seconds": round(median, 6), "max_seconds": round(max(timings), 6)}


# -------------------- witt --------------------
def _expected_witt_rx(P: Poly) -> WittClassRX:
    roots = isolate_roots(P)
    h_part = sorted(
        ((f, 1) for f, k in factor_poly(P) if k % 2 and count_real_roots(f) < f.degree),
        key=lambda fb: (fb[0].degree, fb[0].coeffs),
    )
    return WittClassRX(len(roots), tuple((r, 1) for r in roots), tuple(h_part))


@_criterion("witt", "witt-rx")
def _witt_rx(run: _Run) -> CheckResult:
    failures = []
    total = run.count(100)
    for _ in range(total):
        P = corpus.random_monic_squarefree(run.rng, run.rng.randint(1, 6))
        if witt_rx(sturm_tri(P)) != _expected_witt_rx(P):
            failures.append(P.coeffs)
    return not failures, total, _first_failures(failures)


@_criterion("witt", "residues")
def _residues(run: _Run) -> CheckResult:
    failures = []
    total = run.count(100)
    checked = 0
    for _ in range(total):
        P = corpus.random_monic_squarefree(run.rng, run.rng.randint(1, 6))
        T = sturm_tri(P)
        for f, _k in factor_poly(P):
            if f.degree > 2:
                continue
            checked += 1
            if not residue(T, f).witt_equal(ResidueClass(f.monic(), (f.derivative(),))):
                failures.append((P.coeffs, f.coeffs))
        c = run.rng.randint(-20, 20)
        while P.evaluate(c) == 0:
            c += 1
        checked += 1
        if not residue(T, Poly((-c, 1))).is_zero():
            failures.append((P.coeffs, c))
    return not failures, checked, _first_failures(failures)


@_criterion("witt", "generator-relation")
def _generator_relation(run: _Run) -> CheckResult:
    failures = []
    total = run.count(200)
    for _ in range(total):
        x, y = (Fraction(run.rng.choice([-1, 1]) * run.rng.randint(1, 60), run.rng.randint(1, 12)) for _ in range(2))
        if x + y == 0:
            continue
        left = [[x, 0], [0, y]]
        right = [[x + y, 0], [0, x * y / (x + y)]]
        if witt_q(left) != witt_q(right) or congruence(generator_relation(x, y), left) != right:
            failures.append((x, y))
    return not failures, total, _first_failures(failures)


@_criterion("witt", "linking-chains")
def _linking_chains(run: _Run) -> CheckResult:
    failures = []
    total = run.count(100)
    for _ in range(total):
        p0 = run.rng.randint(2, 10**4)
        p1 = run.rng.randint(1, p0 - 1)
        while math.gcd(p0, p1) != 1:
            p1 = run.rng.randint(1, p0 - 1)
        ps, qs = euclidean_chain(p0, p1)
        lens = lens_linking(p0, p1)
        if not linking_witt_eq(linking_boundary(tri(qs)), lens) or not linking_witt_eq(chain_boundary(ps), lens):
            failures.append((p0, p1))
    return not failures, total, _first_failures(failures)


@_criterion("witt", "trilinking")
def _trilinking(run: _Run) -> CheckResult:
    failures = []
    total = run.count(100)
    for _ in range(total):
        s, t = run.rng.randint(1, 12), run.rng.randint(2, 12)
        while math.gcd(s, t) != 1:
            s = run.rng.randint(1, 12)
        if not verify_trilinking(s, t):
            failures.append((s, t))
    return not failures, total, _first_failures(failures)


# -------------------- maslov --------------------
@_criterion("maslov", "cocycle")
def _cocycle(run: _Run) -> CheckResult:
    failures = []
    total = run.count(500)
    for _ in range(total):
        n = run.rng.randint(1, 3)
        Ls = [corpus.random_lagrangian(run.rng, n) for _ in range(4)]
        if cocycle_defect(*Ls) != 0:
            failures.append([L.basis for L in Ls])
    return not failures, total, _first_failures(failures)


@_criterion("maslov", "antisymmetry-and-invariance")
def _antisymmetry(run: _Run) -> CheckResult:
    failures = []
    total = run.count(500)
    for _ in range(total):
        n = run.rng.randint(1, 3)
        L1, L2, L3 = (corpus.random_lagrangian(run.rng, n) for _ in range(3))
        t = wall_maslov(L1, L2, L3)
        swaps = (wall_maslov(L2, L1, L3), wall_maslov(L1, L3, L2), wall_maslov(L3, L2, L1))
        g = corpus.random_symplectic(run.rng, n)
        moved = wall_maslov(L1.transform(g), L2.transform(g), L3.transform(g))
        if any(s != -t for s in swaps) or wall_maslov(L2, L3, L1) != t or moved != t or abs(t) > n:
            failures.append((L1.basis, L2.basis, L3.basis))
    return not failures, total, _first_failures(failures)


@_criterion("maslov", "meyer-cocycle")
def _meyer(run: _Run) -> CheckResult:
    failures = []
    total = run.count(500)
    for k in range(total):
        n = 1 + k % 2
        A, B, C = (corpus.random_symplectic(run.rng, n, steps=run.rng.randint(1, 4)) for _ in range(3))
        AB = mat_mul(A, B)
        BC = mat_mul(B, C)
        values = (meyer_pair(A, B), meyer_pair(AB, C), meyer_pair(A, BC), meyer_pair(B, C))
        if values[0] + values[1] != values[2] + values[3] or any(abs(v) > 2 * n for v in values):
            failures.append((n, values))
    return not failures, total, _first_failures(failures)


@_criterion("maslov", "dedekind")
def _dedekind(run: _Run) -> CheckResult:
    failures = []
    checked = 0
    for c in range(2, 51):
        for a in range(1, c):
            if math.gcd(a, c) != 1:
                continue
            checked += 1
            if not dedekind_cross_check(a, c) or dedekind_sum(-a, c) != -dedekind_sum(a, c):
                failures.append((a, c))
    return not failures, checked, _first_failures(failures)


# -------------------- knots --------------------
def _invariants(b: BraidWord) -> Tuple[Poly, int, Tuple[Any, ...]]:
    s = seifert_matrix(b)
    omegas = []
    for a, q in _OMEGAS:
        try:
            omegas.append(omega_signature(s, a, q))
        except SingularError:
            omegas.append(None)
    return alexander(s), knot_signature(s), tuple(omegas)


def _random_knot(run: _Run, strands: int, length: int) -> BraidWord:
    while True:
        b = corpus.random_braid(run.rng, strands, length)
        if closure_components(b) == 1:
            return b


@_criterion("knots", "named-knots")
def _named_knots(run: _Run) -> CheckResult:
    braids = dict(corpus.knot_braids())
    trefoil, eight = seifert_matrix(braids["trefoil"]), seifert_matrix(braids["figure-eight"])
    sf = signature_function(trefoil, jobs=run.jobs)
    checks = {
        "trefoil-signature": knot_signature(trefoil) == -2,
        "trefoil-alexander": alexander(trefoil) == Poly((1, -1, 1)),
        "trefoil-profile": sf.plateaus == (0, -2)
        and len(sf.breakpoints) == 1
        and ra_compare(sf.breakpoints[0], RealAlgebraic.from_rational(1)) == 0,
        "figure-eight-signature": knot_signature(eight) == 0,
        "figure-eight-alexander": alexander(eight) == Poly((1, -3, 1)),
    }
    return all(checks.values()), len(checks), checks


@_criterion("knots", "corpus-identities")
def _corpus_identities(run: _Run) -> CheckResult:
    failures = []
    named = corpus.knot_braids()
    for name, b in named:
        s = seifert_matrix(b)
        tau = knot_signature(s)
        delta = alexander(s)
        sf = signature_function(s, jobs=run.jobs)
        if knot_signature(mirror(b)) != -tau:
            failures.append((name, "mirror"))
        if omega_signature(s, 1, 2) != tau:
            failures.append((name, "omega=-1"))
        if not is_unimodular(s):
            failures.append((name, "unimodular"))
        if delta.reversed() not in (delta, -delta):
            failures.append((name, "symmetry"))
        if any(v % 2 for v in sf.plateaus) or sum(abs(j) for j in sf.jumps()) > 2 * s.size:
            failures.append((name, "plateaus"))
    return not failures, len(named), _first_failures(failures)


@_criterion("knots", "stabilization")
def _stabilization(run: _Run) -> CheckResult:
    failures = []
    total = run.count(50)
    for _ in range(total):
        b = _random_knot(run, run.rng.randint(2, 4), run.rng.randint(3, 8))
        s, t = seifert_matrix(b), seifert_matrix(stabilize(b))
        if alexander(s) != alexander(t) or knot_signature(s) != knot_signature(t):
            failures.append(str(b))
    return not failures, total, _first_failures(failures)


def _far_commutation(run: _Run, b: BraidWord) -> BraidWord:
    """Swap one adjacent pair of far-apart letters, if any."""
    letters = list(b.letters)
    spots = [k for k in range(len(letters) - 1) if abs(letters[k][0] - letters[k + 1][0]) >= 2]
    if spots:
        k = run.rng.choice(spots)
        letters[k], letters[k + 1] = letters[k + 1], letters[k]
    return BraidWord(b.strands, tuple(letters))


@_criterion("knots", "braid-relations")
def _braid_relations(run: _Run) -> CheckResult:
    failures = []
    total = run.count(50)
    for _ in range(total):
        strands = run.rng.randint(3, 5)
        while True:
            base = list(corpus.random_braid(run.rng, strands, run.rng.randint(3, 7)).letters)
            i = run.rng.randint(1, strands - 2)
            e = run.rng.choice((-1, 1))
            k = run.rng.randint(0, len(base))
            left = BraidWord(strands, tuple(base[:k] + [(i, e), (i + 1, e), (i, e)] + base[k:]))
            if closure_components(left) == 1:
                break
        right = BraidWord(strands, tuple(base[:k] + [(i + 1, e), (i, e), (i + 1, e)] + base[k:]))
        swapped = _far_commutation(run, left)
        reference = _invariants(left)
        if _invariants(right) != reference or _invariants(swapped) != reference:
            failures.append(str(left))
    return not failures, total, _first_failures(failures)


@_criterion("knots", "s-equivalence")
def _s_equivalence(run: _Run) -> CheckResult:
    failures = []
    total = run.count(50)
    for _ in range(total):
        s = seifert_matrix(_random_knot(run, run.rng.randint(2, 4), run.rng.randint(3, 8)))
        alpha = [run.rng.randint(-3, 3) for _ in range(s.size)]
        t = s_equiv_enlarge(s, alpha)
        if alexander(s) != alexander(t) or knot_signature(s) != knot_signature(t):
            failures.append((s.rows(), alpha))
    return not failures, total, _first_failures(failures)


# -------------------- defect convention search --------------------
@_criterion("defect-search", "convention-search")
def _convention_search(run: _Run) -> CheckResult:
    total = run.count(200)
    instances = [[2, 2]] + [corpus.random_regular_chi(run.rng, run.rng.randint(1, 8), min_abs=2) for _ in range(total)]
    survivors = search_conventions(instances, jobs=run.jobs)
    names = [c.name for c in survivors]
    details = {"surviving": names, "frozen": DEFAULT_CONVENTION.name}
    return bool(survivors) and DEFAULT_CONVENTION in survivors, len(instances), details


# -------------------- runner --------------------
def _run_criterion(name: str, fn: Callable[[_Run], CheckResult], run: _Run) -> Criterion:
    started = time.perf_counter()
    try:
        passed, count, details = fn(run)
    except SignetError as exc:
        passed, count, details = False, 0, {"error": type(exc).__name__, "message": str(exc)}
    seconds = time.perf_counter() - started
    logger.info("accept %s: %s (%d instances, %.3fs)", name, "pass" if passed else "FAIL", count, seconds)
    return Criterion(name, passed, count, seconds, details)


def run_suite(suite: str, scale: float = 1.0, seed: int = DEFAULT_SEED, jobs: int = 1) -> List[Report]:
    """Run one suite, or every suite for ``"all"``.

    :param str suite: ``"all"`` or one of :data:`SUITES`.
    :param float scale: Multiplier on the instance counts.
    :param int seed: Seed of the instance generators; each suite reseeds.
    :param int jobs: Worker threads where a check supports them.
    :rtype: list[Report]
    :raises KeyError: On an unknown suite name.
    """
    names = SUITES if suite == "all" else (suite,)
    reports = []
    for name in names:
        checks = _REGISTRY[name]
        run = _Run(random.Random(f"{seed}:{name}"), max(scale, 0.0), max(1, jobs))
        reports.append(Report(name, [_run_criterion(n, fn, run) for n, fn in checks]))
    return reports
