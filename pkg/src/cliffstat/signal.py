"""Time-series ingestion, scaling to positive integers, and MA/NMA windows."""

from __future__ import annotations

import io
import re
from dataclasses import dataclass
from decimal import Decimal
from typing import BinaryIO, Sequence

import numpy as np

from cliffstat import stats

_NUMBER_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")


class SeriesFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class SignalSeries:
    samples: tuple[Decimal, ...]
    index_origin: int = 0

    def __len__(self) -> int:
        return len(self.samples)


@dataclass(frozen=True)
class ScalingTransform:
    decimal_shift: int
    offset: int

    def apply(self, value: Decimal) -> int:
        scaled = value.scaleb(self.decimal_shift)
        if scaled != scaled.to_integral_value():
            raise ValueError(f"{value} has more than {self.decimal_shift} fractional digits")
        return int(scaled) + self.offset

    def invert(self, value: int) -> Decimal:
        return Decimal(value - self.offset).scaleb(-self.decimal_shift)


@dataclass(frozen=True)
class WindowReport:
    position: int
    length: int
    total: int
    am: float
    nma: float
    range: int
    sd: float
    new_sd: float


def _fractional_digits(value: Decimal) -> int:
    return max(0, -value.as_tuple().exponent)


def ingest_csv(source: BinaryIO | bytes | str) -> SignalSeries:
    """Read `value` or `index,value` lines; a non-numeric first line is a header."""
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        text = source.read().decode("utf-8")

    samples: list[Decimal] = []
    origin = None
    width = None
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) > 2:
            raise SeriesFormatError(f"too many fields ({len(fields)})", lineno)
        if not samples and width is None and not _NUMBER_RE.match(fields[0]):
            width = len(fields)
            continue
        if width is not None and len(fields) != width:
            raise SeriesFormatError(f"expected {width} fields, got {len(fields)}", lineno)
        width = len(fields)
        for f in fields:
            if not _NUMBER_RE.match(f):
                raise SeriesFormatError(f"not a decimal number: {f!r}", lineno)
        if len(fields) == 2:
            if origin is None:
                idx = Decimal(fields[0])
                if idx != idx.to_integral_value():
                    raise SeriesFormatError(f"index must be an integer: {fields[0]!r}", lineno)
                origin = int(idx)
        samples.append(Decimal(fields[-1]))
    if not samples:
        raise SeriesFormatError("empty input")
    return SignalSeries(tuple(samples), origin or 0)


def is_nonnegative_integer_series(s: SignalSeries) -> bool:
    return all(_fractional_digits(v) == 0 and v >= 0 for v in s.samples)


def scale_to_positive_integers(s: SignalSeries) -> tuple[list[int], ScalingTransform]:
    """Shift the decimal point uniformly, then add an offset so the minimum is 1."""
    if not s.samples:
        raise ValueError("empty series")
    shift = max(_fractional_digits(v) for v in s.samples)
    shifted = [int(v.scaleb(shift)) for v in s.samples]
    transform = ScalingTransform(shift, 1 - min(shifted))
    return [v + transform.offset for v in shifted], transform


def window_report(position: int, window: Sequence[int]) -> WindowReport:
    summary = stats.summarize(window)
    return WindowReport(
        position=position,
        length=len(window),
        total=sum(window),
        am=float(summary.am),
        nma=float(summary.new_mean),
        range=max(window) - min(window),
        sd=summary.sd,
        new_sd=summary.new_sd,
    )


def moving_windows(series: Sequence[int], length: int) -> list[WindowReport]:
    """One report per stride-1 window of ``length`` samples."""
    if not 1 <= length <= len(series):
        raise ValueError(f"window length {length} outside 1..{len(series)}")
    series = [int(v) for v in series]
    return [
        window_report(i, series[i : i + length])
        for i in range(len(series) - length + 1)
    ]


def format_report_csv(reports: Sequence[WindowReport]) -> str:
    lines = ["position,am,nma,range,sd,new_sd"]
    for r in reports:
        lines.append(
            f"{r.position},{r.am:.6f},{r.nma:.6f},{r.range},{r.sd:.6f},{r.new_sd:.6f}"
        )
    return "\n".join(lines) + "\n"


def emit_csv(reports: Sequence[WindowReport], sink: BinaryIO) -> None:
    sink.write(format_report_csv(reports).encode("utf-8"))


@dataclass
class SyntheticSeriesConfig:
    """Knobs for the stand-in series used where the original plot data is unavailable."""

    length: int = 200
    baseline: float = 150.0
    amplitude: float = 30.0
    period: float = 40.0
    noise: float = 15.0
    # runs of repeated values, so some windows are exactly constant
    plateau_count: int = 4
    plateau_length: int = 8
    seed: int = 0


def synthetic_series(config: SyntheticSeriesConfig = SyntheticSeriesConfig()) -> list[int]:
    rng = np.random.Generator(np.random.Philox(config.seed))
    t = np.arange(config.length)
    raw = (
        config.baseline
        + config.amplitude * np.sin(2 * np.pi * t / config.period)
        + rng.normal(0.0, config.noise, config.length)
    )
    values = np.rint(raw).astype(np.int64)
    if config.plateau_count and config.length > config.plateau_length:
        starts = rng.choice(
            config.length - config.plateau_length, config.plateau_count, replace=False
        )
        for s in sorted(starts):
            values[s : s + config.plateau_length] = values[s]
    values = values - values.min() + 1
    return [int(v) for v in values]
