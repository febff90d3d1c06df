"""New Mean, lambda and New SD of a set of nonnegative integers.

Each value is decomposed with SSGS and padded to an 8-slot coefficient row.
The New Mean is the scalar part of (mean multivector) * (mean conjugate),
which reduces to the sum of squared column means; lambda = AM - New Mean is
the sum of the population variances of the columns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from cliffstat import clifford
from cliffstat.ssgs import decompose

SLOTS = 8


class RepresentationOverflow(ValueError):
    """A value needs more SSGS roots than Cl(0,3) has slots."""

    def __init__(self, value: int, n_roots: int):
        self.value = value
        self.n_roots = n_roots
        super().__init__(
            f"{value} needs {n_roots} squares; Cl(0,3) holds at most {SLOTS}"
        )


@dataclass(frozen=True)
class CoefficientMatrix:
    rows: tuple[tuple[int, ...], ...]
    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def column(self, k: int) -> list[int]:
        return [row[k] for row in self.rows]

    def column_sums(self) -> list[int]:
        return [sum(row[k] for row in self.rows) for k in range(SLOTS)]

    def column_square_sums(self) -> list[int]:
        return [sum(row[k] * row[k] for row in self.rows) for k in range(SLOTS)]


@dataclass(frozen=True)
class SetSummary:
    am: Fraction
    new_mean: Fraction
    lam: Fraction
    sd: float
    new_sd: float


def coefficient_row(value: int) -> tuple[int, ...]:
    roots = decompose(value).roots
    if len(roots) > SLOTS:
        raise RepresentationOverflow(value, len(roots))
    return roots + (0,) * (SLOTS - len(roots))


def coefficient_matrix(values: Sequence[int]) -> CoefficientMatrix:
    if not values:
        raise ValueError("empty data set")
    values = tuple(int(v) for v in values)
    return CoefficientMatrix(tuple(coefficient_row(v) for v in values), values)


def _as_matrix(m) -> CoefficientMatrix:
    return m if isinstance(m, CoefficientMatrix) else coefficient_matrix(m)


def new_mean_exact(m: CoefficientMatrix | Sequence[int]) -> Fraction:
    m = _as_matrix(m)
    if m.n == 0:
        raise ValueError("empty data set")
    return sum(Fraction(s * s, m.n * m.n) for s in m.column_sums())


def new_mean_direct(m: CoefficientMatrix | Sequence[int]) -> float:
    """Sum over slots of the squared column mean."""
    return float(new_mean_exact(m))


def column_variances(m: CoefficientMatrix | Sequence[int]) -> list[Fraction]:
    """Population variance of each of the 8 coefficient columns, exact."""
    m = _as_matrix(m)
    if m.n == 0:
        raise ValueError("empty data set")
    n = m.n
    return [
        Fraction(n * sq - s * s, n * n)
        for s, sq in zip(m.column_sums(), m.column_square_sums())
    ]


def lambda_exact(m: CoefficientMatrix | Sequence[int]) -> Fraction:
    return sum(column_variances(m), Fraction(0))


def lambda_(m: CoefficientMatrix | Sequence[int]) -> float:
    return float(lambda_exact(m))


def new_mean_clifford(values: Sequence[int]) -> float:
    """New Mean computed through the algebra: scalar part of mean(p) * mean(p^c)."""
    m = coefficient_matrix(values)
    total = clifford.Multivector()
    for row in m.rows:
        total = total + clifford.from_decomposition(row)
    # multiply the integer sums first, divide by n^2 once
    product = clifford.geometric_product(total, clifford.conjugate(total))
    return clifford.scalar_part(product).real / (m.n * m.n)


def summarize(values: Sequence[int]) -> SetSummary:
    m = coefficient_matrix(values)
    n = m.n
    total = sum(m.values)
    am = Fraction(total, n)
    nm = new_mean_exact(m)
    lam = am - nm
    var = Fraction(n * sum(v * v for v in m.values) - total * total, n * n)
    return SetSummary(
        am=am,
        new_mean=nm,
        lam=lam,
        sd=math.sqrt(var),
        new_sd=math.sqrt(var + lam * lam),
    )
