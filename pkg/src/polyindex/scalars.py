"""Scalar backends.

All geometry in this package is generic over two kinds of scalar:

* exact rationals (``fractions.Fraction``, arbitrary precision), used
  whenever the input coordinates are rational;
* ``float`` with an explicit comparison tolerance ``eps``.

A :class:`Context` bundles the backend choice with the tolerance and
provides all comparisons, so that the same algorithms run bit-exactly on
rationals and tolerantly on floats.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import InputError

Scalar = Union[Fraction, float]

DEFAULT_EPS = 1e-9
EPS_ENV_VAR = "POLYINDEX_EPS"


def default_eps() -> float:
    """Default float tolerance, overridable via the POLYINDEX_EPS env var."""
    raw = os.environ.get(EPS_ENV_VAR)
    if raw is None:
        return DEFAULT_EPS
    try:
        eps = float(raw)
    except ValueError as exc:
        raise InputError(f"{EPS_ENV_VAR}: not a number: {raw!r}") from exc
    if eps <= 0:
        raise InputError(f"{EPS_ENV_VAR}: tolerance must be positive, got {eps}")
    return eps


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", an integer, or a decimal literal into an exact Fraction.

    "5/17" -> Fraction(5, 17); "-1" -> Fraction(-1); "0.5" -> Fraction(1, 2).
    """
    if not isinstance(text, str):
        raise InputError(f"expected a rational literal string, got {type(text).__name__}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError as exc:
        raise InputError(f"rational literal has zero denominator: {text!r}") from exc
    except ValueError as exc:
        raise InputError(f"malformed rational literal: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render a Fraction as "p/q" (or "p" for integers), losslessly."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Context:
    """Comparison context: ``eps == 0`` selects the exact rational backend."""

    eps: float = 0.0

    def __post_init__(self):
        if self.eps < 0:
            raise InputError(f"tolerance must be nonnegative, got {self.eps}")

    @property
    def exact(self) -> bool:
        return self.eps == 0

    def coerce(self, value) -> Scalar:
        """Convert a number (or rational literal string) to this backend's type."""
        if self.exact:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, str):
                return parse_rational(value)
            try:
                return Fraction(value)
            except (TypeError, ValueError) as exc:
                raise InputError(f"cannot interpret {value!r} as an exact rational") from exc
        try:
            return float(value)
        except (TypeError, ValueError) as exc:
            raise InputError(f"cannot interpret {value!r} as a float") from exc

    def sign(self, value) -> int:
        """-1, 0, or +1; values within eps of zero count as zero."""
        if value > self.eps:
            return 1
        if value < -self.eps:
            return -1
        return 0

    def is_zero(self, value) -> bool:
        return self.sign(value) == 0

    def eq(self, a, b) -> bool:
        return self.sign(a - b) == 0

    def leq(self, a, b) -> bool:
        return self.sign(a - b) <= 0

    def lt(self, a, b) -> bool:
        return self.sign(a - b) < 0


EXACT = Context(0.0)


def float_context(eps: float | None = None) -> Context:
    return Context(default_eps() if eps is None else float(eps))


def infer_exact(values: Iterable) -> bool:
    """True when no float occurs among the (possibly nested) values."""
    for v in values:
        if isinstance(v, (list, tuple)):
            if not infer_exact(v):
                return False
        elif isinstance(v, float):
            return False
    return True
