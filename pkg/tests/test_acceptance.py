"""Acceptance gate: one test per verified statement, exact checks only.

Each test runs the relevant suites at their stated ranges, collects any
problems, and prints a single ACCEPTANCE line before asserting.  Time
ceilings are part of the contract: the whole gate is desk scale.
"""

import itertools
import random
import time

from heisenmod import (
    GF,
    HeisenbergAlgebra,
    Matrix,
    ModuleParams,
    Poly,
    build_restriction_rep,
    build_standard,
    build_V,
    char_poly,
    conjugate_rep,
    direct_sum_reps,
    find_irreducible,
    is_irreducible,
    make_extension,
    min_poly,
    run_suite,
)
from oracles import (
    brute_char_poly,
    brute_min_poly,
    oracle_irreducible,
    trial_division_irreducible,
)


def _rand_matrix(field, dim, rng):
    return Matrix(field, dim, dim, [rng.randrange(field.order) for _ in range(dim * dim)])


def _rand_invertible(field, dim, rng):
    while True:
        m = _rand_matrix(field, dim, rng)
        if not m.det().is_zero():
            return m


def _verdict(num, label, problems):
    status = "FAIL" if problems else "PASS"
    print(f"ACCEPTANCE {num} {label}: {status}")
    assert not problems, "; ".join(problems)


def _check_report(problems, report, want_cases=None):
    if not report.ok:
        first = report.failures[0]
        problems.append(
            f"{report.suite}: {report.cases_passed}/{report.cases_run} passed,"
            f" first failure {first.case}: {first.message}"
        )
    if want_cases is not None and report.cases_run != want_cases:
        problems.append(
            f"{report.suite}: ran {report.cases_run} cases, expected {want_cases}"
        )


def test_acceptance_01_v_family_properties():
    problems = []
    start = time.perf_counter()
    small = run_suite("prop21", p=[2, 3], n=[1])
    five = run_suite("prop21", p=[5], n=[1])
    rank2 = run_suite("prop21", p=[2], n=[2])
    elapsed = time.perf_counter() - start
    _check_report(problems, small, want_cases=4 + 18)  # exhaustive alpha != 0
    _check_report(problems, five, want_cases=10)  # seeded sample
    _check_report(problems, rank2, want_cases=16)  # exhaustive at n=2
    if elapsed >= 10.0:
        problems.append(f"took {elapsed:.1f}s, ceiling 10s")
    _verdict(1, "V families validate, faithful, irreducible, scalar center", problems)


def test_acceptance_02_classification_round_trip():
    problems = []
    report = run_suite("thm22", p=[2, 3], n=[1, 2])
    # 200 exhaustive parameter tuples plus 50 seeded conjugates per (p, n)
    _check_report(problems, report, want_cases=400)
    if report.wall_time >= 30.0:
        problems.append(f"took {report.wall_time:.1f}s, ceiling 30s")
    _verdict(2, "classify recovers parameters with verified transform", problems)


def test_acceptance_03_isomorphism_iff_invariants():
    problems = []
    report = run_suite("cor24")
    _check_report(problems, report, want_cases=100)
    if report.wall_time >= 60.0:
        problems.append(f"took {report.wall_time:.1f}s, ceiling 60s")
    _verdict(3, "hom space nonzero iff invariant tuples agree", problems)


def test_acceptance_04_triple_similarity():
    problems = []
    report = run_suite("cor25", p=[3, 5])
    _check_report(problems, report, want_cases=100)
    _verdict(4, "triples similar iff determinant tuples agree", problems)


def test_acceptance_05_d_matrix_structure():
    problems = []
    cor26 = run_suite("cor26", p=[2, 3, 5])
    ex27 = run_suite("ex27", p=[2, 3, 5])
    _check_report(problems, cor26, want_cases=300)
    _check_report(problems, ex27, want_cases=7)  # one case per alpha != 0
    _verdict(5, "D similar to companion of X^p - det(D)", problems)


def test_acceptance_06_minimum_faithful_dimension():
    problems = []
    start = time.perf_counter()
    searches = run_suite("sec3-min-dim", p=[2, 3, 5], n=[1])
    witnesses = run_suite("sec3-min-dim", p=[2, 3, 7], n=[1, 2, 3, 4, 5])
    elapsed = time.perf_counter() - start
    _check_report(problems, searches, want_cases=6)
    _check_report(problems, witnesses, want_cases=18)
    messages = {o.case: o.message for o in searches.outcomes}
    if messages.get("p=3,d=2") != "d=2: none found over 6561 pairs":
        problems.append(f"GF(3) search: {messages.get('p=3,d=2')}")
    if messages.get("p=5,d=2") != "d=2: none found over 390625 pairs":
        problems.append(f"GF(5) search: {messages.get('p=5,d=2')}")
    if not messages.get("p=2,d=2", "").startswith("d=2: witness found"):
        problems.append(f"GF(2) witness: {messages.get('p=2,d=2')}")
    witness_keys = {o.case for o in witnesses.outcomes}
    for p in (2, 3, 7):
        for n in (2, 3, 4, 5):
            key = f"p={p},n={n},d={n + 2}"
            if key not in witness_keys:
                problems.append(f"missing witness case {key}")
    if elapsed >= 120.0:
        problems.append(f"took {elapsed:.1f}s, ceiling 120s")
    _verdict(6, "minimum faithful dimension n+2 at desk scale", problems)


def test_acceptance_07_restriction_modules():
    problems = []
    report = run_suite("sec4-restriction", p=[2, 3], m=[2, 3])
    # (3, 3) sits above desk scale, leaving (2,2), (2,3), (3,2), 5 seeds each
    _check_report(problems, report, want_cases=15)
    if report.wall_time >= 60.0:
        problems.append(f"took {report.wall_time:.1f}s, ceiling 60s")
    _verdict(7, "restriction modules irreducible with matching blocks", problems)


def test_acceptance_08_companion_modules():
    problems = []
    report = run_suite("thm51", p=[2, 3], m=[2, 3])
    _check_report(problems, report, want_cases=35)
    kinds = {"minpolys": 0, "uniserial": 0, "irreducible": 0}
    for o in report.outcomes:
        if "minpolys" in o.case:
            kinds["minpolys"] += 1
        elif "uniserial" in o.case:
            kinds["uniserial"] += 1
        else:
            kinds["irreducible"] += 1
    if kinds["minpolys"] != 20:
        problems.append(f"{kinds['minpolys']} minimal-polynomial cases, expected 20")
    if kinds["irreducible"] != 6:
        problems.append(f"{kinds['irreducible']} irreducible-f cases, expected 6")
    if kinds["uniserial"] != 9:
        problems.append(f"{kinds['uniserial']} uniserial cases, expected 9")
    if report.wall_time >= 120.0:
        problems.append(f"took {report.wall_time:.1f}s, ceiling 120s")
    _verdict(8, "companion modules: min polys, irreducibility, uniseriality", problems)


def test_acceptance_09_scalar_extension_and_factor_dims():
    problems = []
    note52 = run_suite("note52", p=[2, 3])
    cor23 = run_suite("cor23", p=[2, 3], m=[2, 3])
    _check_report(problems, note52, want_cases=6)
    _check_report(problems, cor23, want_cases=15)
    _verdict(9, "splitting-field summands and p^n-divisible factor dims", problems)


def test_acceptance_10_oracle_cross_checks():
    problems = []

    # polynomial irreducibility against trial division, all degrees 1..6
    for p in (2, 3):
        field = GF(p)
        for degree in range(1, 7):
            for tail in itertools.product(range(p), repeat=degree):
                f = Poly(field, list(tail) + [1])
                if f.is_irreducible() != trial_division_irreducible(f):
                    problems.append(f"irreducibility disagrees at {f} over GF({p})")

    # char and min polynomials against brute force up to dimension 4
    rng = random.Random(1090)
    fields = [GF(2), GF(3), GF(5), make_extension(2, find_irreducible(2, 2))]
    for field in fields:
        for dim in range(1, 5):
            for _ in range(3):
                a = _rand_matrix(field, dim, rng)
                if char_poly(a) != brute_char_poly(a):
                    problems.append(f"char_poly disagrees at dim {dim} over {field}")
                if min_poly(a) != brute_min_poly(a):
                    problems.append(f"min_poly disagrees at dim {dim} over {field}")

    # module irreducibility against full invariant-subspace enumeration
    f2, f3 = GF(2), GF(3)

    def v_rep(field, alpha, betas, gammas):
        e = field.element
        params = ModuleParams(e(alpha), [e(b) for b in betas], [e(g) for g in gammas])
        return build_V(HeisenbergAlgebra(len(betas), field), params)

    reps = [
        v_rep(f2, 1, [0], [1]),
        v_rep(f2, 1, [1, 0], [0, 1]),
        direct_sum_reps([v_rep(f2, 1, [0], [0]), v_rep(f2, 1, [1], [1])]),
        build_standard(HeisenbergAlgebra(1, f2)),
        build_restriction_rep(2, find_irreducible(2, 2), [Poly(f2, [0, 1])], [Poly(f2, [1])]),
        v_rep(f3, 2, [1], [2]),
        build_standard(HeisenbergAlgebra(1, f3)),
        conjugate_rep(v_rep(f3, 1, [0], [1]), _rand_invertible(f3, 3, random.Random(7))),
    ]
    for rep in reps:
        if is_irreducible(rep).irreducible != oracle_irreducible(rep):
            problems.append(f"irreducibility disagrees on dim {rep.dim} over {rep.field}")

    _verdict(10, "library agrees with brute-force oracles", problems)
