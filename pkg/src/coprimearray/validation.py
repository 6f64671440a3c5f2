"""Input validation helpers shared by the estimator and the CLI."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import OutOfRangeError
from .pair import CoprimePair
from .sets import RangeKind
from .spectra import FrequencyGrid


def as_pair(value: CoprimePair | Iterable[int]) -> CoprimePair:
    """Coerce a CoprimePair or an (M, N) iterable into a validated pair."""
    if isinstance(value, CoprimePair):
        return value
    factors = tuple(value)
    if len(factors) != 2:
        raise OutOfRangeError(f"expected two factors (M, N), got {factors!r}")
    return CoprimePair(int(factors[0]), int(factors[1]))


def as_range_kind(value: RangeKind | str) -> RangeKind:
    """Coerce a RangeKind or its string name ('full', 'continuous', 'prototype')."""
    if isinstance(value, RangeKind):
        return value
    try:
        return RangeKind(str(value).lower())
    except ValueError:
        choices = ", ".join(kind.value for kind in RangeKind)
        raise OutOfRangeError(f"unknown lag range {value!r}; choose one of {choices}") from None


def as_grid(value: FrequencyGrid | int) -> FrequencyGrid:
    """Coerce a FrequencyGrid or a grid size."""
    if isinstance(value, FrequencyGrid):
        return value
    return FrequencyGrid(int(value))


def check_stream(values: object) -> np.ndarray:
    """Validate a sample stream: one-dimensional, finite, complex-valued."""
    stream = np.asarray(values)
    if stream.ndim != 1:
        raise OutOfRangeError(f"sample stream must be one-dimensional, got shape {stream.shape}")
    stream = stream.astype(np.complex128, copy=False)
    if stream.size and not np.all(np.isfinite(stream.real) & np.isfinite(stream.imag)):
        raise OutOfRangeError("sample stream contains non-finite values")
    return stream


def check_positive_int(name: str, value: int) -> int:
    value = int(value)
    if value < 1:
        raise OutOfRangeError(f"{name} must be a positive integer, got {value}")
    return value
