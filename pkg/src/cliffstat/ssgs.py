"""Greedy significant-square / generation-square (SSGS) decomposition.

A nonnegative integer x is written as x = x1^2 + x2^2 + ... + xt^2 where x1 is
the largest root with x1^2 <= x and every following root is extracted the same
way from the running residue. Finite decimals are handled by scaling to an
integer numerator over an even power of ten.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

_DECIMAL_RE = re.compile(r"^\s*(\d*)(?:\.(\d*))?\s*$")


def isqrt_floor(x: int) -> int:
    """Largest r with r*r <= x, exact for arbitrarily large integers."""
    if x < 0:
        raise ValueError(f"isqrt_floor of negative value {x}")
    return math.isqrt(x)


@dataclass(frozen=True)
class SquareDecomposition:
    value: int
    roots: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def residues(self) -> list[int]:
        """Running residues after each extracted square (last one is 0)."""
        out = []
        r = self.value
        for root in self.roots:
            r -= root * root
            out.append(r)
        return out


@dataclass(frozen=True)
class ScaledDecomposition:
    integer_part: SquareDecomposition
    scale_k: int

    @property
    def roots(self) -> tuple[int, ...]:
        return self.integer_part.roots

    def value(self) -> Fraction:
        denom = 10 ** (2 * self.scale_k)
        return Fraction(self.integer_part.value, denom)

    def scaled_roots(self) -> list[Fraction]:
        return [Fraction(r, 10**self.scale_k) for r in self.roots]


def decompose(x: int) -> SquareDecomposition:
    if x < 0:
        raise ValueError(f"cannot decompose negative value {x}")
    roots = []
    residue = x
    while residue:
        r = isqrt_floor(residue)
        roots.append(r)
        residue -= r * r
    return SquareDecomposition(x, tuple(roots))


def reconstruct(d: SquareDecomposition) -> int:
    return sum(r * r for r in d.roots)


def minimal_term_count_value(m: int) -> int:
    """Smallest integer whose SSGS decomposition has exactly ``m`` roots.

    Uses s_1 = 1, s_m = ceil(s_{m-1} / 2)^2 + s_{m-1}: the cheapest way to force
    one more term is to put the previous minimum under the smallest square
    that leaves it as the residue.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    s = 1
    for _ in range(m - 1):
        s = (-(-s // 2)) ** 2 + s
    return s


def parse_decimal(text: str) -> tuple[int, int]:
    """Split a plain decimal string into (digits as integer, fractional digit count).

    Fractional digits are counted exactly as written, trailing zeros included.
    """
    if text.strip().startswith("-"):
        raise ValueError(f"negative decimal not allowed: {text!r}")
    m = _DECIMAL_RE.match(text)
    if m is None or not (m.group(1) or m.group(2)):
        raise ValueError(f"not a nonnegative decimal: {text!r}")
    whole, frac = m.group(1), m.group(2) or ""
    return int((whole or "0") + frac), len(frac)


def decompose_decimal(text: str) -> ScaledDecomposition:
    digits, d = parse_decimal(text)
    # odd digit count: append exactly one zero, never more
    if d % 2:
        digits *= 10
        d += 1
    return ScaledDecomposition(decompose(digits), d // 2)


def format_scaled_root(root: int, k: int) -> str:
    """Render root / 10^k as a short decimal, e.g. (35, 1) -> '3.5'."""
    if k == 0:
        return str(root)
    whole, frac = divmod(root, 10**k)
    frac_text = str(frac).rjust(k, "0").rstrip("0")
    return f"{whole}.{frac_text}" if frac_text else str(whole)
