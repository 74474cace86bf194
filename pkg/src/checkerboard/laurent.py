"""Exact Laurent polynomials in one variable ``t`` with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """Finitely supported map ``exponent -> coefficient``; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], offset: int = 0) -> "LaurentPoly":
        return cls({offset + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, exponent: int = 0, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        return cls.from_coeffs(data["coeffs"], data.get("offset", 0))

    # -- basic queries -------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def span(self) -> int:
        return 0 if self.is_zero() else self.max_degree() - self.min_degree()

    def coeffs(self) -> tuple[int, tuple[int, ...]]:
        """Return ``(offset, ascending coefficients)``."""
        if self.is_zero():
            return 0, ()
        lo, hi = self.min_degree(), self.max_degree()
        return lo, tuple(self._terms.get(e, 0) for e in range(lo, hi + 1))

    def __call__(self, t):
        total = 0
        for e, c in self._terms.items():
            total += c * (Fraction(t) ** e if e < 0 else t**e)
        return total

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPoly.monomial()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def divmod(self, divisor: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Long division treating both as ordinary polynomials after shifting.

        Raises ``ArithmeticError`` when a quotient coefficient is not integral.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        # self = t^a P, divisor = t^b Q with P(0), Q(0) nonzero; divide P by Q.
        a, b = self.min_degree(), divisor.min_degree()
        rem = {e - a: c for e, c in self._terms.items()}
        dq = {e - b: c for e, c in divisor._terms.items()}
        dhi = max(dq)
        lead = dq[dhi]
        quot: dict[int, int] = {}
        while rem and max(rem) >= dhi:
            top = max(rem)
            c = rem[top]
            if c % lead:
                raise ArithmeticError("non-integral quotient")
            q = c // lead
            qe = top - dhi
            quot[qe] = q
            for e, dc in dq.items():
                key = qe + e
                rem[key] = rem.get(key, 0) - q * dc
                if rem[key] == 0:
                    del rem[key]
        return LaurentPoly(quot).shift(a - b), LaurentPoly(rem).shift(a)

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    # -- normal forms ----------------------------------------------------
    def normalized(self) -> "LaurentPoly":
        """Multiply by ``±t^k`` so the lowest exponent is 0 and the constant term is positive."""
        if self.is_zero():
            return self
        lo = self.min_degree()
        sign = -1 if self._terms[lo] < 0 else 1
        return LaurentPoly({e - lo: sign * c for e, c in self._terms.items()})

    def reciprocal(self) -> "LaurentPoly":
        """``t^{max+min} * p(1/t)``: reverses the coefficient list in place."""
        if self.is_zero():
            return self
        s = self.max_degree() + self.min_degree()
        return LaurentPoly({s - e: c for e, c in self._terms.items()})

    def is_symmetric_up_to_sign(self) -> bool:
        r = self.reciprocal()
        return r == self or r == -self

    def is_monic_both_ends(self) -> bool:
        return (not self.is_zero()) and abs(self._terms[self.min_degree()]) == 1 and abs(self._terms[self.max_degree()]) == 1

    # -- dunder plumbing -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(0, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(sorted(self._terms.items())))

    def to_json(self) -> dict:
        offset, coeffs = self.coeffs()
        return {"offset": offset, "coeffs": list(coeffs)}

    def __repr__(self):
        return f"LaurentPoly({self.to_json()})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.monomial(0, x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


T = LaurentPoly.monomial(1)


def interpolate(points: list[int], values: list[int]) -> LaurentPoly:
    """Exact interpolation through integer data; coefficients must come out integral.

    Uses the Newton form. For an integer polynomial sampled at integer points
    every divided difference is an integer, so all arithmetic stays in ``int``.
    """
    n = len(points)
    dd = list(values)
    newton = [dd[0]] if n else []
    for k in range(1, n):
        for i in range(n - k):
            num = dd[i + 1] - dd[i]
            den = points[i + k] - points[i]
            if num % den:
                raise ArithmeticError("interpolated polynomial has non-integral coefficients")
            dd[i] = num // den
        newton.append(dd[0])
    # Horner evaluation of the Newton form with polynomial coefficients
    coeffs = [0] * max(n, 1)
    deg = 0
    for k in range(n - 1, -1, -1):
        # coeffs <- coeffs * (t - x_k) + newton[k]
        if k < n - 1:
            x = points[k]
            for d in range(deg + 1, 0, -1):
                coeffs[d] = coeffs[d - 1] - x * coeffs[d]
            coeffs[0] = -x * coeffs[0]
            deg += 1
        coeffs[0] += newton[k]
    return LaurentPoly.from_coeffs(coeffs)
