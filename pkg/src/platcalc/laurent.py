"""Exact integer Laurent polynomials in one variable A.

Coefficients are arbitrary-precision ints keyed by exponent; zero
coefficients are never stored, so equality is coefficient-wise.  The
text form is part of the CLI contract: terms print as ``c*A^e`` in
decreasing exponent order, joined by `` + `` / `` - ``, with unit
coefficients and the A^0 monomial elided (``A^4 + 2 + A^-4``).
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        table: dict[int, int] = {}
        for e, c in items:
            if c:
                table[e] = table.get(e, 0) + c
                if not table[e]:
                    del table[e]
        self.coeffs = table

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        table = dict(self.coeffs)
        for e, c in other.coeffs.items():
            table[e] = table.get(e, 0) + c
            if not table[e]:
                del table[e]
        out = LaurentPoly.zero()
        out.coeffs = table
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.zero()
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            out = LaurentPoly.zero()
            out.coeffs = {e: c * other for e, c in self.coeffs.items()}
            return out
        table: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                table[e] = table.get(e, 0) + c1 * c2
                if not table[e]:
                    del table[e]
        out = LaurentPoly.zero()
        out.coeffs = table
        return out

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exponent: int) -> "LaurentPoly":
        """Multiply by A^exponent."""
        out = LaurentPoly.zero()
        out.coeffs = {e + exponent: c for e, c in self.coeffs.items()}
        return out

    def substitute_inverse(self) -> "LaurentPoly":
        """A -> A^-1, the mirror involution."""
        out = LaurentPoly.zero()
        out.coeffs = {-e: c for e, c in self.coeffs.items()}
        return out

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError when there is a remainder."""
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self.coeffs)
        lead_e = max(divisor.coeffs)
        lead_c = divisor.coeffs[lead_e]
        table: dict[int, int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            if c % lead_c:
                raise ValueError("not exactly divisible")
            qe, qc = e - lead_e, c // lead_c
            table[qe] = qc
            for de, dc in divisor.coeffs.items():
                k = de + qe
                rem[k] = rem.get(k, 0) - dc * qc
                if not rem[k]:
                    del rem[k]
        out = LaurentPoly.zero()
        out.coeffs = table
        return out

    def is_unit_multiple_of(self, other: "LaurentPoly") -> bool:
        """True when self = +-A^k * other for some integer k."""
        if not self or not other:
            return self.coeffs == other.coeffs
        if len(self.coeffs) != len(other.coeffs):
            return False
        e0 = max(self.coeffs) - max(other.coeffs)
        c0 = self.coeffs[max(self.coeffs)]
        d0 = other.coeffs[max(other.coeffs)]
        if abs(c0) != abs(d0):
            return False
        sign = 1 if c0 == d0 else -1
        return all(self.coeffs.get(e + e0) == sign * c for e, c in other.coeffs.items())

    def unit_shift_from(self, other: "LaurentPoly") -> tuple[int, int] | None:
        """Return (k, sign) with self = sign*A^k*other, or None."""
        if not self.is_unit_multiple_of(other):
            return None
        if not self:
            return (0, 1)
        e0 = max(self.coeffs) - max(other.coeffs)
        sign = 1 if self.coeffs[max(self.coeffs)] == other.coeffs[max(other.coeffs)] else -1
        return (e0, sign)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = f"A^{e}"
            else:
                body = f"{mag}*A^{e}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"


#: Value of a disjoint crossingless loop, -A^2 - A^-2.
DELTA = LaurentPoly({2: -1, -2: -1})
