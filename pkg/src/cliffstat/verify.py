"""Seeded property suites behind ``cliffstat verify``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from cliffstat import clifford, stats
from cliffstat.ssgs import decompose, isqrt_floor, reconstruct


@dataclass
class VerifyConfig:
    seed: int = 0
    cases: int = 1000
    max_set_size: int = 50
    max_value: int = 10**12
    max_coeff: int = 20


@dataclass
class SuiteResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" - {self.detail}" if self.detail else ""
        return f"{self.name}: {status} ({self.cases} cases){tail}"


def _rng(seed_seq: np.random.SeedSequence) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed_seq))


def random_set(rng: np.random.Generator, cfg: VerifyConfig) -> list[int]:
    size = int(rng.integers(1, cfg.max_set_size + 1))
    return [int(v) for v in rng.integers(0, cfg.max_value + 1, size=size)]


def random_multivector(rng: np.random.Generator, cfg: VerifyConfig) -> clifford.Multivector:
    c = rng.integers(-cfg.max_coeff, cfg.max_coeff + 1, size=8)
    return clifford.Multivector(tuple(int(x) for x in c))


def _rel_close(a: float, b: float, rel: float) -> bool:
    return abs(a - b) <= rel * max(abs(a), abs(b), 1.0)


def suite_reconstruction(rng, cfg):
    for _ in range(cfg.cases):
        x = int(rng.integers(0, cfg.max_value + 1))
        d = decompose(x)
        if reconstruct(d) != x:
            return f"reconstruct({x}) = {reconstruct(d)}"
        residue = x
        for prev, r in zip((None,) + d.roots, d.roots):
            if r != isqrt_floor(residue):
                return f"greedy rule broken for {x}"
            if prev is not None and r > prev:
                return f"roots of {x} increase"
            residue -= r * r
    return None


def suite_nm_le_am(rng, cfg):
    for _ in range(cfg.cases):
        values = random_set(rng, cfg)
        s = stats.summarize(values)
        if not 0 <= s.new_mean <= s.am:
            return f"NM {float(s.new_mean)} > AM {float(s.am)} for {values}"
    return None


def suite_lambda_identity(rng, cfg):
    for _ in range(cfg.cases):
        values = random_set(rng, cfg)
        m = stats.coefficient_matrix(values)
        am = Fraction(sum(values), len(values))
        var_sum = sum(stats.column_variances(m), Fraction(0))
        if am - stats.new_mean_exact(m) != var_sum:
            return f"AM - NM != sum of column variances for {values}"
        if not _rel_close(float(am) - stats.new_mean_direct(m), float(var_sum), 1e-6):
            return f"float identity off for {values}"
    return None


def suite_two_route(rng, cfg):
    for _ in range(cfg.cases):
        values = random_set(rng, cfg)
        direct = stats.new_mean_direct(values)
        via_algebra = stats.new_mean_clifford(values)
        if not _rel_close(direct, via_algebra, 1e-9):
            return f"routes differ ({direct} vs {via_algebra}) for {values}"
    return None


# expected entries straight from the basis definitions: (a, b) -> (sign, slot)
EXPECTED_BASIS_FACTS = {
    (0, 0): (1, 0),
    (1, 1): (-1, 0),
    (2, 2): (-1, 0),
    (3, 3): (-1, 0),
    (4, 4): (-1, 0),
    (5, 5): (-1, 0),
    (6, 6): (-1, 0),
    (7, 7): (1, 0),
    (1, 2): (1, 4),
    (2, 3): (1, 5),
    (3, 1): (1, 6),
    (4, 3): (1, 7),
}


def suite_algebra_table(rng, cfg):
    for (a, b), expected in EXPECTED_BASIS_FACTS.items():
        got = tuple(clifford.basis_product(a, b))
        if got != expected:
            return f"e{a}*e{b} = {got}, expected {expected}"
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i != j:
                pij, pji = clifford.basis_product(i, j), clifford.basis_product(j, i)
                if pij.index != pji.index or pij.sign != -pji.sign:
                    return f"e{i}, e{j} do not anticommute"
    for k in range(8):
        if tuple(clifford.basis_product(0, k)) != (1, k) or tuple(clifford.basis_product(k, 0)) != (1, k):
            return f"e0 is not the identity on e{k}"
    return None


def suite_associativity(rng, cfg):
    for _ in range(cfg.cases):
        p, q, r = (random_multivector(rng, cfg) for _ in range(3))
        gp = clifford.geometric_product
        if gp(gp(p, q), r) != gp(p, gp(q, r)):
            return f"(pq)r != p(qr) for {p.coeffs}, {q.coeffs}, {r.coeffs}"
    return None


SUITES: list[tuple[str, Callable]] = [
    ("reconstruction", suite_reconstruction),
    ("nm_le_am", suite_nm_le_am),
    ("two_route", suite_two_route),
    ("lambda_identity", suite_lambda_identity),
    ("algebra_table", suite_algebra_table),
    ("associativity", suite_associativity),
]


def run_suites(cfg: VerifyConfig = VerifyConfig()) -> list[SuiteResult]:
    children = np.random.SeedSequence(cfg.seed).spawn(len(SUITES))
    results = []
    for (name, fn), child in zip(SUITES, children):
        n = len(EXPECTED_BASIS_FACTS) if name == "algebra_table" else cfg.cases
        try:
            failure = fn(_rng(child), cfg)
        except Exception as exc:  # a crashing suite counts as a failure
            failure = f"{type(exc).__name__}: {exc}"
        results.append(SuiteResult(name, failure is None, n, failure or ""))
    return results
