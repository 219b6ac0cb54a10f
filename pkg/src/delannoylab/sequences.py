"""The Delannoy-type polynomial families and the sums built from them.

Everything here is an exact construction: d_n(x) (degree n), s_n(x) (degree
2n, two independent forms), the single-sum expansion of d_n(x)^2, the
double-sum expansion of s_n(x)^2, the multivariate Schmidt forms, the paired
double sums behind the s_n(x)^2 identity, and the six weighted sums whose
integer-valuedness is the THM11 claim.

Point evaluation at integer x goes through generalized integer binomials
(fast path for large powers); polynomial construction goes through PolyX.
Both paths are exercised against each other in the tests.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact_core import int_binomial
from .poly_engine import MultiPolyZ, PolyX, polyx_binomial

THM11_KINDS = ("T11_1", "T11_2", "T11_3", "T11_4", "T11_5", "T11_6")


@lru_cache(maxsize=None)
def delannoy_number(m: int, n: int) -> int:
    """Lattice paths from (0,0) to (m,n) with east/north/northeast steps."""
    if m < 0 or n < 0:
        raise ValueError("delannoy_number needs m, n >= 0")
    if m == 0 or n == 0:
        return 1
    return (
        delannoy_number(m - 1, n)
        + delannoy_number(m, n - 1)
        + delannoy_number(m - 1, n - 1)
    )


@lru_cache(maxsize=None)
def d_poly(n: int) -> PolyX:
    """d_n(x) = sum_k C(n,k) C(x,k) 2^k, exact polynomial of degree n."""
    acc = PolyX()
    for k in range(n + 1):
        acc = acc + polyx_binomial(k) * (int_binomial(n, k) * 2**k)
    return acc


@lru_cache(maxsize=None)
def s_poly(n: int) -> PolyX:
    """s_n(x) = sum_k C(n,k) C(x,k) C(x+k,k), exact polynomial of degree 2n."""
    acc = PolyX()
    for k in range(n + 1):
        acc = acc + (
            polyx_binomial(k) * polyx_binomial(k, k) * int_binomial(n, k)
        )
    return acc


@lru_cache(maxsize=None)
def s_alt_poly(n: int) -> PolyX:
    """Alternate form s_n(x) = sum_k C(n,k) C(x,k) C(x+n-k,n).

    Independent construction of s_poly, kept as an oracle.
    """
    acc = PolyX()
    for k in range(n + 1):
        acc = acc + (
            polyx_binomial(k) * polyx_binomial(n, n - k) * int_binomial(n, k)
        )
    return acc


@lru_cache(maxsize=None)
def dn_square_rhs(n: int) -> PolyX:
    """Single-sum form of d_n(x)^2: sum_k C(n+k,2k) C(x,k) C(x+k,k) 4^k."""
    acc = PolyX()
    for k in range(n + 1):
        acc = acc + (
            polyx_binomial(k)
            * polyx_binomial(k, k)
            * (int_binomial(n + k, 2 * k) * 4**k)
        )
    return acc


@lru_cache(maxsize=None)
def sn_square_rhs(n: int) -> PolyX:
    """Double-sum form of s_n(x)^2:
    sum_k C(n+k,2k) C(x,k) C(x+k,k) * sum_j C(2k,j+k) C(x,j) C(x+j,j)."""
    acc = PolyX()
    for k in range(n + 1):
        inner = PolyX()
        for j in range(k + 1):
            inner = inner + (
                polyx_binomial(j)
                * polyx_binomial(j, j)
                * int_binomial(2 * k, j + k)
            )
        acc = acc + (
            polyx_binomial(k)
            * polyx_binomial(k, k)
            * inner
            * int_binomial(n + k, 2 * k)
        )
    return acc


@lru_cache(maxsize=None)
def schmidt_poly(n: int) -> MultiPolyZ:
    """Linear Schmidt form sum_k C(n+k,2k) C(2k,k) x_k."""
    acc = MultiPolyZ()
    for k in range(n + 1):
        acc = acc + MultiPolyZ.var(k) * (
            int_binomial(n + k, 2 * k) * int_binomial(2 * k, k)
        )
    return acc


@lru_cache(maxsize=None)
def double_sum_A(n: int, r: int) -> int:
    """sum_{j,k<=n} C(n,j) C(n,k) C(j+k,j) C(k,r-j) C(r,k)."""
    total = 0
    for j in range(n + 1):
        cj = int_binomial(n, j)
        for k in range(n + 1):
            total += (
                cj
                * int_binomial(n, k)
                * int_binomial(j + k, j)
                * int_binomial(k, r - j)
                * int_binomial(r, k)
            )
    return total


@lru_cache(maxsize=None)
def double_sum_B(n: int, r: int) -> int:
    """sum_{j,k<=n} C(n+k,2k) C(2k,j+k) C(j+k,j) C(k,r-j) C(r,k)."""
    total = 0
    for j in range(n + 1):
        for k in range(n + 1):
            total += (
                int_binomial(n + k, 2 * k)
                * int_binomial(2 * k, j + k)
                * int_binomial(j + k, j)
                * int_binomial(k, r - j)
                * int_binomial(r, k)
            )
    return total


# ---------------------------------------------------------------------------
# integer-point evaluation (fast path, no polynomial expansion)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def d_value(k: int, x: int) -> int:
    """d_k evaluated at integer x, via generalized integer binomials."""
    return sum(
        int_binomial(k, i) * int_binomial(x, i) * 2**i for i in range(k + 1)
    )


@lru_cache(maxsize=None)
def s_value(k: int, x: int) -> int:
    """s_k evaluated at integer x."""
    return sum(
        int_binomial(k, i) * int_binomial(x, i) * int_binomial(x + i, i)
        for i in range(k + 1)
    )


def thm11_value(kind: str, n: int, m: int, x: int) -> Fraction:
    """Exact rational value at integer x of one of the six THM11 sums.

    T11_1: x(x+1)/(2n^2) * sum (2k+1) d_k(x)^2
    T11_2: 1/n  * sum (2k+1) d_k(x)^(2m)       T11_3: alternating variant
    T11_4: 1/n^2 * sum (2k+1) s_k(x)^2
    T11_5: 1/n  * sum (2k+1) s_k(x)^(2m)       T11_6: alternating variant
    (m is ignored for T11_1 and T11_4, whose power is fixed at 2.)
    """
    if kind not in THM11_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    value = d_value if kind in ("T11_1", "T11_2", "T11_3") else s_value
    power = 2 if kind in ("T11_1", "T11_4") else 2 * m
    alternating = kind in ("T11_3", "T11_6")
    total = 0
    for k in range(n):
        term = (2 * k + 1) * value(k, x) ** power
        total += -term if alternating and k % 2 else term
    if kind == "T11_1":
        return Fraction(x * (x + 1) * total, 2 * n * n)
    if kind == "T11_4":
        return Fraction(total, n * n)
    return Fraction(total, n)


def thm11_poly(kind: str, n: int, m: int) -> PolyX:
    """The same six sums as exact polynomials in x (for basis certificates)."""
    if kind not in THM11_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    family = d_poly if kind in ("T11_1", "T11_2", "T11_3") else s_poly
    power = 2 if kind in ("T11_1", "T11_4") else 2 * m
    alternating = kind in ("T11_3", "T11_6")
    acc = PolyX()
    for k in range(n):
        term = family(k) ** power * (2 * k + 1)
        acc = acc - term if alternating and k % 2 else acc + term
    if kind == "T11_1":
        return acc * PolyX((0, 1, 1)) * Fraction(1, 2 * n * n)
    if kind == "T11_4":
        return acc * Fraction(1, n * n)
    return acc * Fraction(1, n)


def thm12_quantities(n: int, m: int, k: int, j: int) -> tuple[Fraction, Fraction]:
    """The two THM12 rational quantities (both claimed to be integers):

    (n-k)(k+1)/n * C(n+k,2k) C(m+1,k+1) C(m+k,k+1)   and
    1/(k+1) * C(n-1,k) C(n+k,k) C(2k,j+k) C(m+k,2k) C(m,j) C(m+j,j).
    """
    first = Fraction(
        (n - k)
        * (k + 1)
        * int_binomial(n + k, 2 * k)
        * int_binomial(m + 1, k + 1)
        * int_binomial(m + k, k + 1),
        n,
    )
    second = Fraction(
        int_binomial(n - 1, k)
        * int_binomial(n + k, k)
        * int_binomial(2 * k, j + k)
        * int_binomial(m + k, 2 * k)
        * int_binomial(m, j)
        * int_binomial(m + j, j),
        k + 1,
    )
    return first, second


def xx1_rhs_poly(n: int) -> PolyX:
    """Closed form of x(x+1)/(2n^2) * sum_{m<n} (2m+1) d_m(x)^2:
    sum_k (n-k)(k+1)/(2n) C(n+k,2k) C(x+1,k+1) C(x+k,k+1) 4^k."""
    acc = PolyX()
    for k in range(n):
        acc = acc + (
            polyx_binomial(k + 1, 1)
            * polyx_binomial(k + 1, k)
            * Fraction((n - k) * (k + 1) * int_binomial(n + k, 2 * k) * 4**k, 2 * n)
        )
    return acc


def double_sum_two_rhs_poly(n: int) -> PolyX:
    """Closed form of 1/n^2 * sum_{m<n} (2m+1) s_m(x)^2:
    sum_k 1/(k+1) C(n-1,k) C(n+k,k) C(x+k,2k) sum_j C(2k,j+k) C(x,j) C(x+j,j).
    """
    acc = PolyX()
    for k in range(n):
        inner = PolyX()
        for j in range(k + 1):
            inner = inner + (
                polyx_binomial(j)
                * polyx_binomial(j, j)
                * int_binomial(2 * k, j + k)
            )
        acc = acc + (
            polyx_binomial(2 * k, k)
            * inner
            * Fraction(int_binomial(n - 1, k) * int_binomial(n + k, k), k + 1)
        )
    return acc


def mixed_ds_poly(n: int, m: int, alternating: bool) -> PolyX:
    """1/n * sum_{k<n} (+-1)^k (2k+1) (d_k(x) s_k(x))^m as an exact PolyX."""
    acc = PolyX()
    for k in range(n):
        term = (d_poly(k) * s_poly(k)) ** m * (2 * k + 1)
        acc = acc - term if alternating and k % 2 else acc + term
    return acc * Fraction(1, n)
