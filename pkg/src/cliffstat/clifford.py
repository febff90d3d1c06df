"""Cl(0,3) multivectors over the slot basis e0..e7.

Slots: e0 = 1, e1, e2, e3 generators (each squares to -1), e4 = e1e2,
e5 = e2e3, e6 = e3e1, e7 = e1e2e3. Internally every slot is a signed
canonical blade, a bitmask over the generators in ascending order; e6 is the
only slot carrying a minus sign (e3e1 = -e1e3).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

# slot -> (sign, bitmask) with bit 0 = e1, bit 1 = e2, bit 2 = e3
SLOT_BLADES = (
    (1, 0b000),
    (1, 0b001),
    (1, 0b010),
    (1, 0b100),
    (1, 0b011),
    (1, 0b110),
    (-1, 0b101),
    (1, 0b111),
)
_MASK_TO_SLOT = {mask: (sign, slot) for slot, (sign, mask) in enumerate(SLOT_BLADES)}


class BasisProduct(NamedTuple):
    sign: int
    index: int


def _blade_product(a: int, b: int) -> tuple[int, int]:
    # sign from reordering generators into ascending order
    swaps = 0
    t = a >> 1
    while t:
        swaps += bin(t & b).count("1")
        t >>= 1
    sign = -1 if swaps & 1 else 1
    # every shared generator contracts to -1
    if bin(a & b).count("1") & 1:
        sign = -sign
    return sign, a ^ b


def _build_table() -> list[list[BasisProduct]]:
    table = []
    for i in range(8):
        si, mi = SLOT_BLADES[i]
        row = []
        for j in range(8):
            sj, mj = SLOT_BLADES[j]
            s, mask = _blade_product(mi, mj)
            sk, k = _MASK_TO_SLOT[mask]
            row.append(BasisProduct(si * sj * s * sk, k))
        table.append(row)
    return table


_TABLE = _build_table()


def basis_product(a: int, b: int) -> BasisProduct:
    if not (0 <= a < 8 and 0 <= b < 8):
        raise IndexError(f"basis indices out of range: {a}, {b}")
    return _TABLE[a][b]


def basis_table() -> list[list[BasisProduct]]:
    return [list(row) for row in _TABLE]


@dataclass(frozen=True)
class Multivector:
    coeffs: tuple = (0,) * 8

    def __post_init__(self):
        if len(self.coeffs) != 8:
            raise ValueError(f"Cl(0,3) multivector needs 8 coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def basis(cls, k: int, value=1) -> "Multivector":
        c = [0] * 8
        c[k] = value
        return cls(tuple(c))

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __add__(self, other: "Multivector") -> "Multivector":
        return Multivector(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Multivector") -> "Multivector":
        return Multivector(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Multivector":
        return Multivector(tuple(-x for x in self.coeffs))

    def scale(self, factor) -> "Multivector":
        return Multivector(tuple(x * factor for x in self.coeffs))

    def __mul__(self, other: "Multivector") -> "Multivector":
        return geometric_product(self, other)


def geometric_product(p: Multivector, q: Multivector) -> Multivector:
    out = [0] * 8
    for i, pi in enumerate(p.coeffs):
        if not pi:
            continue
        row = _TABLE[i]
        for j, qj in enumerate(q.coeffs):
            if not qj:
                continue
            sign, k = row[j]
            out[k] += sign * pi * qj
    return Multivector(tuple(out))


def conjugate(p: Multivector) -> Multivector:
    """Keep the scalar slot, negate slots 1..7."""
    c = p.coeffs
    return Multivector((c[0],) + tuple(-x for x in c[1:]))


def scalar_part(p: Multivector):
    return p.coeffs[0]


def from_decomposition(c: Sequence[int]) -> Multivector:
    """Multivector with real slots 0..6 and imaginary trivector coefficient i*c[7]."""
    if len(c) != 8:
        raise ValueError(f"expected 8 coefficient slots, got {len(c)}")
    return Multivector(tuple(c[:7]) + (complex(0, c[7]) if c[7] else 0,))
