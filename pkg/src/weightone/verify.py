"""Invariant suites shared by the ``verify`` subcommand and the acceptance tests."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import hecke_poly as hp
from .arith import divisor_counts, integer_root, kronecker, prime_pi, primes_up_to
from .bounds import eval_scheme, scheme_ico, scheme_oct
from .characters import characters
from .class_group import class_group
from .meanvalue import (
    DualityInstance,
    best_constants,
    exp_integral_E1,
    lemma2_ratio,
    parseval_check,
    prop1_best_constant,
    prop1_check,
)
from .rankin import b_coeffs, petersson_estimate, prop2a_ratios, ramanujan_rankin_violations
from .theta import dihedral_basis, eta_product_coefficients, theta_hecke, theta_lattice

DEFAULT_GRID = (23, 31, 47, 59, 71, 79, 83)
MEANVALUE_GRID = (23, 31, 47, 59, 71)
RATIO_CEILING = 100.0


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}"


def suite_identities() -> list[Check]:
    checks = []
    for kind, lhs, rhs, values in (
        ("octahedral", hp.oct_combination(), hp.oct_factorization(), hp.OCT_VALUES),
        ("icosahedral", hp.ico_combination(), hp.ico_factorization(), hp.ICO_VALUES),
    ):
        evals = {str(x): str(lhs(x)) for x in values}
        checks.append(
            Check(
                f"{kind} identity expands exactly",
                lhs == rhs,
                {"combination": list(lhs.coeffs), "factorization": list(rhs.coeffs)},
            )
        )
        checks.append(Check(f"{kind} identity equals 1 on its value set", all(lhs(x) == 1 for x in values), evals))
    return checks


def suite_duality(instances: int = 100, max_dim: int = 20, max_vectors: int = 50, seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    worst_gap = 0.0
    worst_parseval = 0.0
    for _ in range(instances):
        d = int(rng.integers(1, max_dim + 1))
        n = int(rng.integers(1, max_vectors + 1))
        inst = DualityInstance.random(d, n, rng)
        du, dc = best_constants(inst)
        worst_gap = max(worst_gap, abs(du - dc) / max(1.0, du))
        c = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        scale = max(1.0, float(np.sum(np.abs(inst.M @ c) ** 2)))
        worst_parseval = max(worst_parseval, parseval_check(inst, c) / scale)
    return [
        Check("best constants agree (relative 1e-9)", worst_gap <= 1e-9, {"worst_relative_gap": worst_gap}),
        Check("Parseval residual below 1e-9", worst_parseval <= 1e-9, {"worst_relative_residual": worst_parseval}),
    ]


def suite_theta(grid=DEFAULT_GRID, N: int = 10_000) -> list[Check]:
    mismatches = []
    for q in grid:
        G = class_group(q)
        for i, chi in enumerate(characters(G)[1:], start=1):
            if not theta_lattice(chi, N).same_coefficients(theta_hecke(chi, N)):
                mismatches.append([q, i])
    checks = [Check(f"lattice and Hecke constructions agree (n <= {N})", not mismatches, {"mismatches": mismatches})]
    eta_N = min(N, 2000)
    f = dihedral_basis(23, eta_N)[0]
    checks.append(
        Check(
            f"q = 23 matches eta(z) eta(23z) (n <= {eta_N})",
            f.is_rational() and np.array_equal(f.table[:, 0], eta_product_coefficients(23, eta_N)),
        )
    )
    checks.append(ramanujan_check(grid, N))
    checks.append(even_power_check(grid, N))
    return checks


def ramanujan_check(grid=DEFAULT_GRID, N: int = 10_000) -> Check:
    d = divisor_counts(N)
    violations = 0
    worst_imag = 0.0
    for q in grid:
        for f in dihedral_basis(q, N):
            violations += int(np.sum(np.abs(f.floats[1:]) > d[1:] + 1e-9))
            worst_imag = max(worst_imag, float(np.abs(f.imag).max()))
    return Check("|a(n)| <= d(n) and a(n) real", violations == 0 and worst_imag < 1e-10,
                 {"violations": violations, "max_imag": worst_imag})


def even_power_check(grid=DEFAULT_GRID, N: int = 10_000, p_max: int = 100) -> Check:
    """eps(p)^n a(p^(2n)) == P_n(eps(p) a(p^2)) exactly (eps real, so conj is itself)."""
    failures = []
    tested = 0
    for q in grid:
        for f in dihedral_basis(q, N):
            for p in primes_up_to(p_max):
                if p == q or p * p > N:
                    continue
                eps = kronecker(p, q)
                x = f.coefficient(p * p) * eps
                n = 0
                while p ** (2 * n) <= N:
                    lhs = f.coefficient(p ** (2 * n)) * (eps**n) if n else f.coefficient(1)
                    if lhs != hp.hecke_P(n)(x):
                        failures.append([q, p, n])
                    tested += 1
                    n += 1
    return Check("even prime powers follow P_n", not failures, {"tested": tested, "failures": failures})


def suite_scheme(q: int = 65539) -> list[Check]:
    so, si = scheme_oct(q), scheme_ico(q)
    pi8, pi12 = prime_pi(integer_root(q, 8)), prime_pi(integer_root(q, 12))
    oct_values = [eval_scheme(so, hp.synth_stream("octahedral", q, a, q)) for a in hp.all_assignments("octahedral", so.primes)]
    ico_values = [eval_scheme(si, hp.synth_stream("icosahedral", q, a, q)) for a in hp.all_assignments("icosahedral", si.primes)]
    return [
        Check(f"octahedral scheme sums to pi(q^(1/8)) = {pi8} for all {len(oct_values)} assignments",
              all(v == pi8 for v in oct_values), {"values": sorted({str(v) for v in oct_values})}),
        Check(f"icosahedral scheme sums to pi(q^(1/12)) = {pi12} for all {len(ico_values)} assignments",
              all(v == pi12 for v in ico_values), {"values": sorted({str(v) for v in ico_values})}),
        Check("sum |c_n|^2 = 3 pi(q^(1/8))", so.norm_sq == 3 * pi8, {"norm_sq": so.norm_sq}),
        Check("sum |c_n|^2 = 3 pi(q^(1/12)) (icosahedral)", si.norm_sq == 3 * pi12, {"norm_sq": si.norm_sq}),
    ]


def suite_rankin(grid=DEFAULT_GRID, X: int = 10_000, stability_q: int = 23, stability_X: int = 100_000,
                 tolerance: float = 0.1) -> list[Check]:
    f = dihedral_basis(stability_q, stability_X)[0]
    est = petersson_estimate(f, stability_X)
    checks = [
        Check(f"Cesaro residue stable between X and X/2 (q = {stability_q}, X = {stability_X})",
              est.stability_gap <= tolerance and est.value > 0, est.to_json()),
    ]
    r1 = prop2a_ratios(grid, X)
    r2 = prop2a_ratios(grid, 2 * X)
    finite = all(math.isfinite(v) and v > 0 for v in list(r1.values()) + list(r2.values()))
    stable = all(0.5 < r2[q] / r1[q] < 2.0 for q in r1)
    checks.append(Check("<f,f>/(q log^3 q) finite and stable under X -> 2X", finite and stable,
                        {"X": r1, "2X": r2, "max": max(r1.values())}))
    violations = sum(ramanujan_rankin_violations(b_coeffs(g, X)) for q in grid for g in dihedral_basis(q, X))
    checks.append(Check("0 <= b(n) <= 2 d4(n)", violations == 0, {"violations": violations}))
    return checks


def suite_meanvalue(grid=MEANVALUE_GRID, X: int = 10_000, ceiling: float = RATIO_CEILING) -> list[Check]:
    points = [0.5, 1.0, 5.0, 20.0]
    brackets = all(math.exp(-x) / (x + 1) <= exp_integral_E1(x) <= math.exp(-x) / x for x in points)
    checks = [Check("E1 within exp(-x)/(x+1) <= E1 <= exp(-x)/x", brackets)]
    lemma2, prop1, prop1_exact = {}, {}, {}
    for q in grid:
        forms = dihedral_basis(q, max(X, 10 * q))
        norms = [petersson_estimate(f, X).value for f in forms]
        for N in (q, 10 * q):
            lemma2[f"{q}:{N}"] = max(lemma2_ratio(f, N, w).ratio for f, w in zip(forms, norms))
            prop1[f"{q}:{N}"] = prop1_check(q, N, trials=100, X=X)
            prop1_exact[f"{q}:{N}"] = prop1_best_constant(q, N, X)
    worst = max(list(lemma2.values()) + list(prop1.values()) + list(prop1_exact.values()))
    checks.append(Check(f"mean-value ratios below ceiling {ceiling:g}", worst < ceiling,
                        {"lemma2": lemma2, "prop1_random": prop1, "prop1_worst_case": prop1_exact, "max": worst}))
    return checks


SUITE_NAMES = ("identities", "duality", "theta", "meanvalue", "rankin", "scheme")


def run_suite(name: str, grid=None) -> list[Check]:
    """Run one named suite; ``grid`` overrides the suite's default list of q."""
    if name == "identities":
        return suite_identities()
    if name == "duality":
        return suite_duality()
    if name == "scheme":
        return suite_scheme()
    if name == "theta":
        return suite_theta(grid or DEFAULT_GRID)
    if name == "meanvalue":
        return suite_meanvalue(grid or MEANVALUE_GRID)
    if name == "rankin":
        return suite_rankin(grid or DEFAULT_GRID)
    raise ValueError(f"unknown suite {name!r}")
