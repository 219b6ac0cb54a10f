"""Exact polynomial arithmetic.

Three rings, each exact:

* ``PolyX`` — dense univariate polynomials in x over the rationals, with
  conversion to the binomial basis C(x,0), C(x,1), ... for integer-valuedness
  certificates.
* ``LaurentQ`` — sparse Laurent polynomials in q with integer coefficients
  (finite support over possibly negative exponents).
* ``MultiPolyZ`` — sparse multivariate integer polynomials (for the linear
  Schmidt forms and their powers).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Union

Scalar = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """Exact Laurent division failed; carries the remainder as witness."""

    def __init__(self, remainder: "LaurentQ", message: str = "") -> None:
        self.remainder = remainder
        super().__init__(message or f"not divisible, remainder {remainder}")


def _format_terms(terms: list[tuple[int, Scalar]], var: str) -> str:
    """Canonical text form: descending powers, `var^-3` for negative ones."""
    if not terms:
        return "0"
    parts: list[str] = []
    for exp, coeff in sorted(terms, reverse=True):
        mag = -coeff if coeff < 0 else coeff
        if exp == 0:
            body = str(mag)
        else:
            power = var if exp == 1 else f"{var}^{exp}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"{'-' if coeff < 0 else '+'} {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# univariate rational polynomials in x
# ---------------------------------------------------------------------------


class PolyX:
    """Dense univariate polynomial over exact rationals, immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PolyX is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "PolyX":
        return cls((c,))

    @classmethod
    def x(cls) -> "PolyX":
        return cls((0, 1))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial (explicit sentinel)."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyX):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == PolyX((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "PolyX | Scalar") -> "PolyX":
        if isinstance(other, (int, Fraction)):
            other = PolyX((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyX(out)

    __radd__ = __add__

    def __neg__(self) -> "PolyX":
        return PolyX(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "PolyX | Scalar") -> "PolyX":
        if isinstance(other, (int, Fraction)):
            other = PolyX((other,))
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "PolyX":
        return PolyX((other,)) - self

    def __mul__(self, other: "PolyX | Scalar") -> "PolyX":
        if isinstance(other, (int, Fraction)):
            return PolyX(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return PolyX()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return PolyX(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PolyX":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = PolyX((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "PolyX") -> "PolyX":
        """Substitute: returns self(inner(x))."""
        acc = PolyX()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __str__(self) -> str:
        return _format_terms(list(enumerate(self.coeffs)), "x")

    def __repr__(self) -> str:
        return f"PolyX({self})"


@lru_cache(maxsize=None)
def polyx_binomial(k: int, shift: int = 0) -> PolyX:
    """The polynomial x -> C(x + shift, k), exact over the rationals."""
    if k < 0:
        return PolyX()
    p = PolyX((1,))
    for i in range(k):
        p = p * PolyX((shift - i, 1))
    return p * Fraction(1, factorial(k))


@dataclass(frozen=True)
class BinomialBasisPoly:
    """Coefficients c_k of P(x) = sum_k c_k * C(x, k)."""

    bcoeffs: tuple[Fraction, ...]

    def to_polyx(self) -> PolyX:
        acc = PolyX()
        for k, c in enumerate(self.bcoeffs):
            acc = acc + polyx_binomial(k) * c
        return acc


def to_binomial_basis(p: PolyX) -> BinomialBasisPoly:
    """Exact binomial-basis coefficients via iterated finite differences.

    c_k equals the k-th forward difference of p evaluated at 0.
    """
    if p.is_zero:
        return BinomialBasisPoly(())
    vals = [p(i) for i in range(len(p.coeffs))]
    out: list[Fraction] = []
    while vals:
        out.append(vals[0])
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return BinomialBasisPoly(tuple(out))


def is_integer_valued(p: PolyX) -> bool:
    """True iff p maps every integer to an integer.

    Uses the binomial-basis criterion: all basis coefficients must be
    integers.  This is a certificate, not a sampling test.
    """
    return all(c.denominator == 1 for c in to_binomial_basis(p).bcoeffs)


# ---------------------------------------------------------------------------
# integer Laurent polynomials in q
# ---------------------------------------------------------------------------


class LaurentQ:
    """Sparse Laurent polynomial in q over the integers, immutable.

    No zero coefficients are stored; the zero polynomial has empty support.
    """

    __slots__ = ("support",)

    def __init__(
        self, support: "dict[int, int] | Iterable[tuple[int, int]]" = ()
    ) -> None:
        items = support.items() if isinstance(support, dict) else support
        d: dict[int, int] = {}
        for e, c in items:
            c = d.get(e, 0) + c
            if c:
                d[e] = c
            else:
                d.pop(e, None)
        object.__setattr__(self, "support", d)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LaurentQ is immutable")

    @classmethod
    def zero(cls) -> "LaurentQ":
        return cls()

    @classmethod
    def one(cls) -> "LaurentQ":
        return cls({0: 1})

    @classmethod
    def q_power(cls, e: int, c: int = 1) -> "LaurentQ":
        """The monomial c * q^e."""
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], offset: int = 0) -> "LaurentQ":
        """Dense list -> Laurent polynomial; coeffs[i] is the q^(offset+i) term."""
        return cls({offset + i: c for i, c in enumerate(coeffs) if c})

    @property
    def is_zero(self) -> bool:
        return not self.support

    @property
    def min_exp(self) -> int | None:
        return min(self.support) if self.support else None

    @property
    def max_exp(self) -> int | None:
        return max(self.support) if self.support else None

    def coeff(self, e: int) -> int:
        return self.support.get(e, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.support.items()))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentQ):
            return self.support == other.support
        if isinstance(other, int):
            return self.support == ({0: other} if other else {})
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "LaurentQ | int") -> "LaurentQ":
        if isinstance(other, int):
            other = LaurentQ({0: other})
        d = dict(self.support)
        for e, c in other.support.items():
            c = d.get(e, 0) + c
            if c:
                d[e] = c
            else:
                del d[e]
        out = LaurentQ()
        object.__setattr__(out, "support", d)
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentQ":
        out = LaurentQ()
        object.__setattr__(out, "support", {e: -c for e, c in self.support.items()})
        return out

    def __sub__(self, other: "LaurentQ | int") -> "LaurentQ":
        if isinstance(other, int):
            other = LaurentQ({0: other})
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentQ":
        return LaurentQ({0: other}) - self

    def _dense(self) -> tuple[list[int], int]:
        """(coefficient list, offset) with list[0] the q^offset coefficient."""
        if self.is_zero:
            return [], 0
        lo, hi = min(self.support), max(self.support)
        out = [0] * (hi - lo + 1)
        for e, c in self.support.items():
            out[e - lo] = c
        return out, lo

    def __mul__(self, other: "LaurentQ | int") -> "LaurentQ":
        if isinstance(other, int):
            if not other:
                return LaurentQ()
            out = LaurentQ()
            object.__setattr__(
                out, "support", {e: c * other for e, c in self.support.items()}
            )
            return out
        if self.is_zero or other.is_zero:
            return LaurentQ()
        a, ao = self._dense()
        b, bo = other._dense()
        if len(b) < len(a):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return LaurentQ.from_coeffs(out, ao + bo)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentQ":
        if e < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentQ.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, t: int) -> "LaurentQ":
        """Multiply by q^t."""
        out = LaurentQ()
        object.__setattr__(out, "support", {e + t: c for e, c in self.support.items()})
        return out

    def subs_q_inverse(self) -> "LaurentQ":
        """Substitute q -> 1/q (mirror the exponents)."""
        out = LaurentQ()
        object.__setattr__(out, "support", {-e: c for e, c in self.support.items()})
        return out

    def eval_at_one(self) -> int:
        """Specialize q -> 1."""
        return sum(self.support.values())

    def is_nonneg(self) -> bool:
        """True iff no coefficient is negative."""
        return all(c > 0 for c in self.support.values())

    def exact_div(self, den: "LaurentQ") -> "LaurentQ":
        """Exact quotient in the integer Laurent ring.

        Raises NotDivisible (with the remainder as witness) when den does
        not divide self; that signal doubles as the polynomiality test for
        quotient expressions.
        """
        if den.is_zero:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero:
            return LaurentQ()
        num, noff = self._dense()
        d, doff = den._dense()
        if len(num) < len(d):
            raise NotDivisible(self)
        lead = d[-1]
        unit_lead = lead in (1, -1)
        rem: list = list(num)
        quot: list = [0] * (len(num) - len(d) + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(d) - 1]
            if not c:
                continue
            t = c * lead if unit_lead else Fraction(c, lead)
            quot[i] = t
            for j, dc in enumerate(d):
                rem[i + j] -= t * dc
        if any(rem):
            raise NotDivisible(LaurentQ.from_coeffs(rem, noff))
        if not unit_lead and any(
            isinstance(t, Fraction) and t.denominator != 1 for t in quot
        ):
            raise NotDivisible(
                LaurentQ(), "quotient has non-integer coefficients"
            )
        return LaurentQ.from_coeffs((int(t) for t in quot), noff - doff)

    def poly_rem(self, den: "LaurentQ") -> "LaurentQ":
        """Remainder of ordinary polynomial division (both operands must
        have non-negative exponents; den must be monic up to sign)."""
        if den.is_zero:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if (self.min_exp or 0) < 0 or (den.min_exp or 0) < 0:
            raise ValueError("poly_rem needs non-negative exponents")
        d, doff = den._dense()
        d = [0] * doff + d
        if d[-1] not in (1, -1):
            raise ValueError("poly_rem needs a divisor with unit leading term")
        rem, roff = self._dense()
        rem = [0] * roff + rem
        lead = d[-1]
        for i in range(len(rem) - len(d), -1, -1):
            c = rem[i + len(d) - 1]
            if not c:
                continue
            t = c * lead
            for j, dc in enumerate(d):
                rem[i + j] -= t * dc
        return LaurentQ.from_coeffs(rem)

    def __str__(self) -> str:
        return _format_terms(list(self.support.items()), "q")

    def __repr__(self) -> str:
        return f"LaurentQ({self})"


def one_minus_q_pow(a: int) -> LaurentQ:
    """The Laurent polynomial 1 - q^a (a may be negative; a = 0 gives 0)."""
    return LaurentQ({0: 1, a: -1}) if a else LaurentQ()


def q_int(n: int) -> LaurentQ:
    """The q-integer [n] = 1 + q + ... + q^(n-1) = (1 - q^n)/(1 - q)."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return LaurentQ({e: 1 for e in range(n)})


# ---------------------------------------------------------------------------
# multivariate integer polynomials
# ---------------------------------------------------------------------------


def _trim(key: tuple[int, ...]) -> tuple[int, ...]:
    i = len(key)
    while i and not key[i - 1]:
        i -= 1
    return key[:i]


class MultiPolyZ:
    """Sparse multivariate integer polynomial in x0, x1, ...

    Keys are exponent tuples with trailing zeros removed, so polynomials in
    different prefixes of the variable list mix freely.
    """

    __slots__ = ("terms",)

    def __init__(
        self,
        terms: "dict[tuple[int, ...], int] | Iterable[tuple[tuple[int, ...], int]]" = (),
    ) -> None:
        items = terms.items() if isinstance(terms, dict) else terms
        d: dict[tuple[int, ...], int] = {}
        for key, c in items:
            key = _trim(tuple(key))
            c = d.get(key, 0) + c
            if c:
                d[key] = c
            else:
                d.pop(key, None)
        object.__setattr__(self, "terms", d)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MultiPolyZ is immutable")

    @classmethod
    def var(cls, i: int) -> "MultiPolyZ":
        """The variable x_i."""
        return cls({(0,) * i + (1,): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPolyZ):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({(): other} if other else {})
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "MultiPolyZ | int") -> "MultiPolyZ":
        if isinstance(other, int):
            other = MultiPolyZ({(): other})
        d = dict(self.terms)
        for key, c in other.terms.items():
            c = d.get(key, 0) + c
            if c:
                d[key] = c
            else:
                del d[key]
        out = MultiPolyZ()
        object.__setattr__(out, "terms", d)
        return out

    __radd__ = __add__

    def __neg__(self) -> "MultiPolyZ":
        out = MultiPolyZ()
        object.__setattr__(out, "terms", {k: -c for k, c in self.terms.items()})
        return out

    def __sub__(self, other: "MultiPolyZ | int") -> "MultiPolyZ":
        if isinstance(other, int):
            other = MultiPolyZ({(): other})
        return self + (-other)

    def __mul__(self, other: "MultiPolyZ | int") -> "MultiPolyZ":
        if isinstance(other, int):
            if not other:
                return MultiPolyZ()
            out = MultiPolyZ()
            object.__setattr__(
                out, "terms", {k: c * other for k, c in self.terms.items()}
            )
            return out
        acc: dict[tuple[int, ...], int] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                if len(ka) < len(kb):
                    ka_p = ka + (0,) * (len(kb) - len(ka))
                    key = tuple(a + b for a, b in zip(ka_p, kb))
                else:
                    kb_p = kb + (0,) * (len(ka) - len(kb))
                    key = tuple(a + b for a, b in zip(ka, kb_p))
                acc[key] = acc.get(key, 0) + ca * cb
        return MultiPolyZ(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPolyZ":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPolyZ({(): 1})
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def coeffs_divisible_by(self, n: int) -> bool:
        """True iff n divides every coefficient."""
        return all(c % n == 0 for c in self.terms.values())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: (sum(k), k), reverse=True):
            c = self.terms[key]
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}"
                for i, e in enumerate(key)
                if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPolyZ({self})"
