"""Power series in s, truncated at a fixed order, with polynomial coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

DEFAULT_ORDER = 10


def _div(a, b):
    if isinstance(a, (int, Fraction)):
        return Fraction(a) / b
    return a / b


def _zero_like(c):
    return c * 0


def _is_const(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return True
    terms = getattr(c, "terms", None)
    if terms is not None:
        return set(terms) <= {(0, 0)}
    coeffs = getattr(c, "coeffs", None)
    if coeffs is not None:
        return len(coeffs) <= 1
    return False


def _const_value(c) -> Fraction:
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    terms = getattr(c, "terms", None)
    if terms is not None:
        return terms.get((0, 0), Fraction(0))
    return c[0]


class TruncSeries:
    """sum_{k <= order} c_k s^k; coefficients are ring elements (UniPoly, BiPoly or scalars)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Any], order: int = DEFAULT_ORDER, zero: Any = None):
        if order < 1:
            raise ValueError("order must be positive")
        cs = list(coeffs)[: order + 1]
        if zero is None:
            if not cs:
                raise ValueError("need a coefficient or an explicit zero")
            zero = _zero_like(cs[0])
        cs += [zero] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = cs

    @property
    def zero(self):
        return _zero_like(self.coeffs[0])

    @classmethod
    def s(cls, order: int, one) -> "TruncSeries":
        z = _zero_like(one)
        return cls([z, one], order, zero=z)

    def _check(self, other: "TruncSeries"):
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def _lift(self, other):
        if isinstance(other, TruncSeries):
            self._check(other)
            return other
        return TruncSeries([self.zero + other], self.order, zero=self.zero)

    def __add__(self, other):
        other = self._lift(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([a * other for a in self.coeffs], self.order)
        self._check(other)
        n = self.order
        out = [self.zero] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if _is_const(a) and _const_value(a) == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = TruncSeries([self.zero + 1], self.order, zero=self.zero)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def is_zero(self) -> bool:
        return all(_is_const(c) and _const_value(c) == 0 for c in self.coeffs)

    def inverse(self) -> "TruncSeries":
        c0 = self.coeffs[0]
        if not _is_const(c0) or _const_value(c0) == 0:
            raise ZeroDivisionError("constant term must be a nonzero scalar")
        inv0 = Fraction(1) / _const_value(c0)
        out = [self.zero + inv0]
        for k in range(1, self.order + 1):
            acc = self.zero
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * out[k - j]
            out.append(acc * (-inv0))
        return TruncSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        return TruncSeries([_div(a, other) for a in self.coeffs], self.order)

    def integral(self) -> "TruncSeries":
        """Antiderivative in s with zero constant term."""
        return TruncSeries([self.zero] + [_div(c, k + 1) for k, c in enumerate(self.coeffs[:-1])], self.order)

    def derivative(self) -> "TruncSeries":
        return TruncSeries([c * k for k, c in enumerate(self.coeffs)][1:] + [self.zero], self.order)

    def exp(self) -> "TruncSeries":
        c0 = self.coeffs[0]
        if not (_is_const(c0) and _const_value(c0) == 0):
            raise ValueError("exp needs a series with zero constant term")
        out = TruncSeries([self.zero + 1], self.order, zero=self.zero)
        term = out
        for k in range(1, self.order + 1):
            term = term * self / k
            out = out + term
        return out

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __repr__(self):
        return " + ".join(f"({c})*s^{k}" for k, c in enumerate(self.coeffs) if not (_is_const(c) and _const_value(c) == 0)) or "0"


def poly_in_s(coeffs: Sequence[Any], order: int) -> TruncSeries:
    """A polynomial in s, given by its coefficient list, as a truncated series."""
    return TruncSeries(coeffs, order)
