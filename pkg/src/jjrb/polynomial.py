"""
Sparse multivariate polynomials with exact rational coefficients.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by the
variables' natural order, so ``x_{0,10}`` sorts after ``x_{0,2}``.
Variables are plain strings.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .linalg import Q, format_rational

_NAT_RE = re.compile(r"(\d+)")


def natural_key(name: str) -> tuple:
    return tuple(int(tok) if tok.isdigit() else tok for tok in _NAT_RE.split(name))


def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), key=lambda ve: natural_key(ve[0])))


def _mono_degree(m: tuple) -> int:
    return sum(e for _, e in m)


def _mono_sort_key(m: tuple):
    # degree descending, then lexicographic on the expanded variable list
    expanded = [natural_key(v) for v, e in m for _ in range(e)]
    return (-_mono_degree(m), expanded)


class Poly:
    """Immutable polynomial ``{monomial: coefficient}`` with zero terms dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = Q(coeff)
            if coeff != 0:
                clean[mono] = clean.get(mono, Fraction(0)) + coeff
        self.terms = {m: c for m, c in clean.items() if c != 0}

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, value) -> "Poly":
        return cls({(): value})

    @staticmethod
    def coerce(value) -> "Poly":
        return value if isinstance(value, Poly) else Poly.const(value)

    # arithmetic -------------------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = Poly.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-Poly.coerce(other))

    def __rsub__(self, other) -> "Poly":
        return Poly.coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = Poly.coerce(other)
        out: dict[tuple, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    # inspection -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((_mono_degree(m) for m in self.terms), default=0)

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        return sorted(self.terms.items(), key=lambda mc: _mono_sort_key(mc[0]))

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for v, e in mono:
                try:
                    term *= Q(values[v]) ** e
                except KeyError:
                    raise KeyError(f"no value for variable {v!r}") from None
            total += term
        return total

    def substitute(self, values: Mapping[str, "Poly | object"]) -> "Poly":
        out = Poly()
        for mono, coeff in self.terms.items():
            term = Poly.const(coeff)
            for v, e in mono:
                term = term * (Poly.coerce(values[v]) ** e if v in values else Poly.var(v) ** e)
            out = out + term
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            other = Poly.coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_text(self) -> str:
        """``coef*x*y + coef*z + coef`` in canonical term order; ``0`` if empty."""
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = [format_rational(coeff)]
            factors += [v for v, e in mono for _ in range(e)]
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self.to_text()})"

    __str__ = to_text


class RationalFunction:
    """Quotient of two polynomials; only used for parametric matrix entries."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        self.num = Poly.coerce(num)
        self.den = Poly.coerce(den)
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDivisionError(f"denominator {self.den} vanishes")
        return self.num.evaluate(values) / d

    def variables(self) -> set[str]:
        return self.num.variables() | self.den.variables()

    def to_text(self) -> str:
        if self.den == Poly.const(1):
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.den.to_text()})"

    def __repr__(self):
        return f"RationalFunction({self.to_text()})"
