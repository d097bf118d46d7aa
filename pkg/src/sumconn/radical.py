"""Exact arithmetic on numbers of the form sum_k q_k * sqrt(k).

Every value is stored as a rational combination of square roots of
squarefree integers (k = 1 giving the rational part).  Since the square
roots of distinct squarefree integers are linearly independent over Q,
two values are equal exactly when their term maps are identical, and a
nonzero value can always be strictly separated from zero by evaluating
the terms as binary intervals at a high enough precision.  That gives
decidable exact comparison without any symbolic engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable


@lru_cache(maxsize=None)
def squarefree_split(s: int) -> tuple[int, int]:
    """Return (k, t) with s == k * t**2 and k squarefree."""
    if s <= 0:
        raise ValueError(f"radicand must be positive, got {s}")
    k, t = s, 1
    d = 2
    while d * d <= k:
        dd = d * d
        while k % dd == 0:
            k //= dd
            t *= d
        d += 1
    return k, t


def _normalize(terms: dict[int, Fraction]) -> tuple[tuple[int, Fraction], ...]:
    return tuple(sorted((k, q) for k, q in terms.items() if q != 0))


@dataclass(frozen=True)
class RadicalSum:
    """Immutable exact value sum_k terms[k] * sqrt(k), k squarefree."""

    terms: tuple[tuple[int, Fraction], ...] = ()

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "RadicalSum":
        return RadicalSum()

    @staticmethod
    def from_rational(q) -> "RadicalSum":
        return RadicalSum(_normalize({1: Fraction(q)}))

    @staticmethod
    def from_sqrt(s: int, mult=1) -> "RadicalSum":
        """mult * sqrt(s)."""
        k, t = squarefree_split(s)
        return RadicalSum(_normalize({k: Fraction(mult) * t}))

    @staticmethod
    def from_inverse_sqrt(s: int, mult=1) -> "RadicalSum":
        """mult / sqrt(s), stored with a rationalized coefficient."""
        k, t = squarefree_split(s)
        # 1/sqrt(s) = 1/(t*sqrt(k)) = sqrt(k)/(t*k)
        return RadicalSum(_normalize({k: Fraction(mult) / (t * k)}))

    @staticmethod
    def total(parts: Iterable["RadicalSum"]) -> "RadicalSum":
        acc: dict[int, Fraction] = {}
        for p in parts:
            for k, q in p.terms:
                acc[k] = acc.get(k, Fraction(0)) + q
        return RadicalSum(_normalize(acc))

    # -- algebra --------------------------------------------------------

    def add(self, other: "RadicalSum") -> "RadicalSum":
        acc = dict(self.terms)
        for k, q in other.terms:
            acc[k] = acc.get(k, Fraction(0)) + q
        return RadicalSum(_normalize(acc))

    def scale(self, q) -> "RadicalSum":
        f = Fraction(q)
        return RadicalSum(_normalize({k: c * f for k, c in self.terms}))

    def __add__(self, other: "RadicalSum") -> "RadicalSum":
        return self.add(other)

    def __sub__(self, other: "RadicalSum") -> "RadicalSum":
        return self.add(other.scale(-1))

    def __neg__(self) -> "RadicalSum":
        return self.scale(-1)

    def __mul__(self, q) -> "RadicalSum":
        return self.scale(q)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    # -- evaluation and order --------------------------------------------

    def _interval(self, prec: int) -> tuple[Fraction, Fraction]:
        """Enclosing interval with sqrt errors below 2**-prec per term."""
        lo = Fraction(0)
        hi = Fraction(0)
        one = 1 << prec
        for k, q in self.terms:
            if k == 1:
                lo += q
                hi += q
                continue
            r = isqrt(k << (2 * prec))
            rlo = Fraction(r, one)
            rhi = Fraction(r + 1, one)
            if q >= 0:
                lo += q * rlo
                hi += q * rhi
            else:
                lo += q * rhi
                hi += q * rlo
        return lo, hi

    def sign(self) -> int:
        """Exact sign; terminates because sqrt of distinct squarefree
        integers are linearly independent over Q."""
        if not self.terms:
            return 0
        if len(self.terms) == 1 and self.terms[0][0] == 1:
            q = self.terms[0][1]
            return -1 if q < 0 else 1
        prec = 64
        while True:
            lo, hi = self._interval(prec)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2

    def cmp(self, other: "RadicalSum") -> int:
        """-1, 0, or 1; zero exactly when the term maps coincide."""
        if self.terms == other.terms:
            return 0
        return (self - other).sign()

    def __lt__(self, other: "RadicalSum") -> bool:
        return self.cmp(other) < 0

    def __le__(self, other: "RadicalSum") -> bool:
        return self.cmp(other) <= 0

    def __gt__(self, other: "RadicalSum") -> bool:
        return self.cmp(other) > 0

    def __ge__(self, other: "RadicalSum") -> bool:
        return self.cmp(other) >= 0

    def to_float(self) -> float:
        if not self.terms:
            return 0.0
        lo, hi = self._interval(96)
        return float((lo + hi) / 2)

    # -- rendering --------------------------------------------------------

    def exact_str(self) -> str:
        """Canonical term string, e.g. '1 + 4/7*sqrt(7) + 1/6*sqrt(6)'.

        Rational part first, then sqrt terms by descending radicand.
        """
        if not self.terms:
            return "0"
        ordered: list[tuple[int, Fraction]] = []
        d = dict(self.terms)
        if 1 in d:
            ordered.append((1, d.pop(1)))
        ordered.extend(sorted(d.items(), reverse=True))
        parts: list[str] = []
        for idx, (k, q) in enumerate(ordered):
            mag = -q if q < 0 else q
            if k == 1:
                body = str(mag)
            elif mag == 1:
                body = f"sqrt({k})"
            else:
                body = f"{mag}*sqrt({k})"
            if idx == 0:
                parts.append(f"-{body}" if q < 0 else body)
            else:
                parts.append(f" - {body}" if q < 0 else f" + {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.exact_str()

    def to_jsonable(self) -> dict:
        return {
            "terms": [
                {
                    "squarefree_part": k,
                    "numerator": q.numerator,
                    "denominator": q.denominator,
                }
                for k, q in self.terms
            ],
            "value": self.to_float(),
        }

    @staticmethod
    def from_jsonable(obj: dict) -> "RadicalSum":
        acc: dict[int, Fraction] = {}
        for t in obj["terms"]:
            k = t["squarefree_part"]
            acc[k] = acc.get(k, Fraction(0)) + Fraction(
                t["numerator"], t["denominator"]
            )
        return RadicalSum(_normalize(acc))
