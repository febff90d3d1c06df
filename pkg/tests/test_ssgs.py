from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cliffstat.ssgs import (
    decompose,
    decompose_decimal,
    format_scaled_root,
    isqrt_floor,
    minimal_term_count_value,
    reconstruct,
    SquareDecomposition,
)
from oracles import slow_greedy_roots


@pytest.mark.parametrize("x, expected", [(0, 0), (1, 1), (99, 9), (100, 10), (2**62 + 1, 2**31)])
def test_isqrt_floor_examples(x, expected):
    assert isqrt_floor(x) == expected


@given(st.integers(min_value=0, max_value=2**64))
def test_isqrt_floor_brackets(x):
    r = isqrt_floor(x)
    assert r * r <= x < (r + 1) * (r + 1)


def test_isqrt_near_float_trouble():
    # float sqrt rounds these up
    x = (2**32 - 1) ** 2 + 2 * (2**32 - 1)
    assert isqrt_floor(x) == 2**32 - 1
    assert isqrt_floor(2**63 - 1) == 3037000499


def test_isqrt_negative():
    with pytest.raises(ValueError):
        isqrt_floor(-1)


@pytest.mark.parametrize(
    "x, roots",
    [
        (91, [9, 3, 1]),
        (192, [13, 4, 2, 1, 1, 1]),
        (999998, [999, 44, 7, 3, 1, 1, 1]),
        (0, []),
        (191, [13, 4, 2, 1, 1]),
        (99, [9, 4, 1, 1]),
        (140, [11, 4, 1, 1, 1]),
    ],
)
def test_decompose_examples(x, roots):
    d = decompose(x)
    assert list(d.roots) == roots
    assert d.value == x


@pytest.mark.parametrize("roots, x", [((9, 3, 1), 91), ((), 0), ((13, 4, 2, 1, 1), 191)])
def test_reconstruct_examples(roots, x):
    assert reconstruct(SquareDecomposition(x, roots)) == x


def test_residues():
    assert decompose(91).residues() == [10, 1, 0]


def test_sweep_to_a_million():
    for x in range(10**6 + 1):
        d = decompose(x)
        assert reconstruct(d) == x
        roots = d.roots
        assert all(a >= b for a, b in zip(roots, roots[1:]))


def test_matches_slow_greedy_oracle():
    for x in range(3000):
        assert list(decompose(x).roots) == slow_greedy_roots(x)


@given(st.integers(min_value=0, max_value=10**30))
def test_structure_invariants(x):
    d = decompose(x)
    roots = d.roots
    assert reconstruct(d) == x
    assert (x == 0) == (len(roots) == 0)
    if roots:
        assert roots[0] == isqrt_floor(x)
    for prev, r in zip(roots, roots[1:]):
        assert r <= prev
        assert r <= isqrt_floor(2 * prev)
    assert roots.count(1) <= 3
    assert roots.count(2) <= 2
    for r in set(roots):
        if r >= 3:
            assert roots.count(r) == 1
    # greedy at every step
    residue = x
    for r in roots:
        assert r == isqrt_floor(residue)
        residue -= r * r


@given(st.integers(min_value=0, max_value=10**18))
def test_deterministic(x):
    assert decompose(x) == decompose(x)


@pytest.mark.parametrize("m, expected", [(1, 1), (2, 2), (3, 3), (4, 7), (5, 23), (6, 167), (7, 7223)])
def test_minimal_term_count_value(m, expected):
    assert minimal_term_count_value(m) == expected
    assert len(decompose(expected).roots) == m
    assert all(len(decompose(v).roots) != m for v in range(expected))


def test_minimal_term_count_rejects_zero():
    with pytest.raises(ValueError):
        minimal_term_count_value(0)


@pytest.mark.parametrize(
    "text, roots, k",
    [
        ("12.3", [35, 2, 1], 1),
        ("7", [2, 1, 1, 1], 0),
        ("0.0", [], 1),
        ("12.30", [35, 2, 1], 1),
        ("12.3000", [350, 22, 4], 2),
        ("0.5", [7, 1], 1),
        ("5.", [2, 1], 0),
    ],
)
def test_decompose_decimal(text, roots, k):
    d = decompose_decimal(text)
    assert list(d.roots) == roots
    assert d.scale_k == k


def test_decimal_appends_exactly_one_zero():
    # 3 fractional digits -> 4, numerator 12300 (not 123000)
    d = decompose_decimal("1.234")
    assert d.scale_k == 2
    assert d.integer_part.value == 12340


def test_decimal_value_is_exact():
    d = decompose_decimal("12.3")
    assert d.value() == Fraction(123, 10)
    assert sum(r * r for r in d.scaled_roots()) == Fraction(123, 10)
    assert d.scaled_roots() == [Fraction(35, 10), Fraction(2, 10), Fraction(1, 10)]


@given(st.integers(min_value=0, max_value=10**12), st.integers(min_value=0, max_value=4))
def test_even_digits_match_integer_path(numerator, k):
    digits = str(numerator).rjust(2 * k + 1, "0")
    text = digits[: len(digits) - 2 * k] + ("." + digits[len(digits) - 2 * k :] if k else "")
    d = decompose_decimal(text)
    assert d.scale_k == k
    assert d.integer_part == decompose(numerator)


@pytest.mark.parametrize("text", ["-1.5", "abc", "", ".", "1.2.3", "1e5"])
def test_decompose_decimal_rejects(text):
    with pytest.raises(ValueError):
        decompose_decimal(text)


@pytest.mark.parametrize(
    "root, k, text", [(35, 1, "3.5"), (2, 1, "0.2"), (22, 2, "0.22"), (350, 2, "3.5"), (10, 0, "10"), (4, 2, "0.04")]
)
def test_format_scaled_root(root, k, text):
    assert format_scaled_root(root, k) == text
