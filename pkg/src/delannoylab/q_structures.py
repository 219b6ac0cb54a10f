"""q-binomial coefficients, cyclotomic polynomials, cyclotomic exponent
profiles for the two q-integrality expressions, and q-Delannoy numbers.

The exponent profiles come in two flavours: a closed floor/indicator formula
(`exponent_profile_a` / `exponent_profile_b`) and a brute-force oracle that
factors the explicit Laurent expression by repeated exact division
(`cyclo_valuation`).  Agreement of the two is one of the package's core
checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .poly_engine import LaurentQ, one_minus_q_pow

_CYCLO_CACHE: dict[int, LaurentQ] = {}
_QBINOM_CACHE: dict[tuple[int, int], LaurentQ] = {}


def cyclotomic(d: int) -> LaurentQ:
    """The d-th cyclotomic polynomial, by exact division:
    (q^d - 1) / prod of the lower cyclotomics dividing it."""
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    phi = _CYCLO_CACHE.get(d)
    if phi is None:
        den = LaurentQ.one()
        for e in range(1, d):
            if d % e == 0:
                den = den * cyclotomic(e)
        phi = LaurentQ({d: 1, 0: -1}).exact_div(den)
        _CYCLO_CACHE[d] = phi
    return phi


def q_binomial(n: int, k: int) -> LaurentQ:
    """Gaussian binomial coefficient as a polynomial in q.

    Computed by the q-Pascal recurrence (integer arithmetic only); the
    product formula is kept separately as a test oracle.  Out-of-range
    arguments give 0.
    """
    if k < 0 or n < 0 or k > n:
        return LaurentQ.zero()
    if k == 0 or k == n:
        return LaurentQ.one()
    key = (n, k)
    val = _QBINOM_CACHE.get(key)
    if val is None:
        val = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)
        _QBINOM_CACHE[key] = val
    return val


def q_binomial_product(n: int, k: int) -> LaurentQ:
    """Gaussian binomial via the defining product of (1-q^i) ratios.

    Independent of the q-Pascal path; used as an oracle in tests.
    """
    if k < 0 or n < 0 or k > n:
        return LaurentQ.zero()
    num = LaurentQ.one()
    den = LaurentQ.one()
    for i in range(1, k + 1):
        num = num * one_minus_q_pow(n - k + i)
        den = den * one_minus_q_pow(i)
    return num.exact_div(den)


def cyclo_valuation(poly: LaurentQ, d: int) -> int:
    """Largest t with cyclotomic(d)^t dividing poly, by repeated division."""
    if poly.is_zero:
        raise ValueError("valuation of the zero polynomial is undefined")
    phi = cyclotomic(d)
    count = 0
    while True:
        try:
            poly = poly.exact_div(phi)
        except ArithmeticError:
            return count
        count += 1


@lru_cache(maxsize=None)
def _val_one_minus(a: int, d: int) -> int:
    return cyclo_valuation(one_minus_q_pow(a), d)


@lru_cache(maxsize=None)
def _val_qbinom(n: int, k: int, d: int) -> int:
    return cyclo_valuation(q_binomial(n, k), d)


@dataclass(frozen=True, eq=True)
class CycloProfile:
    """Map d -> exponent of cyclotomic(d) for d in [2, d_max]."""

    exponents: dict[int, int]
    d_max: int

    def is_nonneg(self) -> bool:
        return all(e >= 0 for e in self.exponents.values())

    def reconstruct(self) -> LaurentQ:
        """Product of cyclotomic(d)^e_d; requires all exponents >= 0."""
        acc = LaurentQ.one()
        for d, e in sorted(self.exponents.items()):
            if e < 0:
                raise ValueError(f"negative exponent e_{d} = {e}")
            if e:
                acc = acc * cyclotomic(d) ** e
        return acc


def _chi(d: int, t: int) -> int:
    return 1 if t % d == 0 else 0


def exponent_profile_a(n: int, k: int, m: int) -> CycloProfile:
    """Cyclotomic exponents of the first q-integrality expression
    (prefactor (1-q^(n-k))(1-q^(k+1)) / ((1-q)(1-q^n)) times three Gaussian
    binomials), from the closed indicator-plus-floors formula.

    The d range is the largest exponent appearing in any factor; m+1 is
    included for the k = 0 edge where it exceeds max(m+k, n+k).
    """
    d_max = max(m + k, n + k, m + 1)
    ex = {}
    for d in range(2, d_max + 1):
        ex[d] = (
            _chi(d, n - k) + _chi(d, k + 1) - _chi(d, n)
            + (n + k) // d + (m + 1) // d + (m + k) // d
            - (n - k) // d - (2 * k) // d - (m - k) // d - (m - 1) // d
            - 2 * ((k + 1) // d)
        )
    return CycloProfile(ex, d_max)


def exponent_profile_b(n: int, k: int, m: int, j: int) -> CycloProfile:
    """Cyclotomic exponents of the second q-integrality expression
    (prefactor (1-q)/(1-q^(k+1)) times six Gaussian binomials), from the
    closed formula.  Meaningful for 0 <= j <= k (terms beyond make the
    2k-over-(j+k) binomial vanish)."""
    d_max = max(n + k, m + k, m + j)
    ex = {}
    for d in range(2, d_max + 1):
        ex[d] = (
            -_chi(d, k + 1)
            + (n - 1) // d + (n + k) // d + (m + k) // d + (m + j) // d
            - n // d
            - (n - k - 1) // d - (j + k) // d - (k - j) // d - (m - k) // d
            - 2 * (k // d) - (m - j) // d - 2 * (j // d)
        )
    return CycloProfile(ex, d_max)


def integrality_a_parts(n: int, k: int, m: int) -> tuple[LaurentQ, LaurentQ]:
    """(numerator, denominator) of the first q-integrality expression."""
    num = (
        one_minus_q_pow(n - k)
        * one_minus_q_pow(k + 1)
        * q_binomial(n + k, 2 * k)
        * q_binomial(m + 1, k + 1)
        * q_binomial(m + k, k + 1)
    )
    den = one_minus_q_pow(1) * one_minus_q_pow(n)
    return num, den


def integrality_b_parts(
    n: int, k: int, m: int, j: int
) -> tuple[LaurentQ, LaurentQ]:
    """(numerator, denominator) of the second q-integrality expression."""
    num = (
        one_minus_q_pow(1)
        * q_binomial(n - 1, k)
        * q_binomial(n + k, k)
        * q_binomial(2 * k, j + k)
        * q_binomial(m + k, 2 * k)
        * q_binomial(m, j)
        * q_binomial(m + j, j)
    )
    den = one_minus_q_pow(k + 1)
    return num, den


def valuation_profile_a(n: int, k: int, m: int) -> CycloProfile:
    """Brute-force counterpart of exponent_profile_a: sum per-factor
    cyclotomic valuations obtained by repeated exact division."""
    d_max = max(m + k, n + k, m + 1)
    ex = {}
    for d in range(2, d_max + 1):
        ex[d] = (
            _val_one_minus(n - k, d)
            + _val_one_minus(k + 1, d)
            + _val_qbinom(n + k, 2 * k, d)
            + _val_qbinom(m + 1, k + 1, d)
            + _val_qbinom(m + k, k + 1, d)
            - _val_one_minus(1, d)
            - _val_one_minus(n, d)
        )
    return CycloProfile(ex, d_max)


def valuation_profile_b(n: int, k: int, m: int, j: int) -> CycloProfile:
    """Brute-force counterpart of exponent_profile_b."""
    d_max = max(n + k, m + k, m + j)
    ex = {}
    for d in range(2, d_max + 1):
        ex[d] = (
            _val_one_minus(1, d)
            + _val_qbinom(n - 1, k, d)
            + _val_qbinom(n + k, k, d)
            + _val_qbinom(2 * k, j + k, d)
            + _val_qbinom(m + k, 2 * k, d)
            + _val_qbinom(m, j, d)
            + _val_qbinom(m + j, j, d)
            - _val_one_minus(k + 1, d)
        )
    return CycloProfile(ex, d_max)


# ---------------------------------------------------------------------------
# q-Delannoy numbers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QDelannoyPair:
    """D_q(m, n) together with its q -> 1/q companion.

    `dq` has non-negative exponents; `dqinv` carries the q^(-mn) prefactor
    of the closed form, so specializing either at q = 1 gives the ordinary
    Delannoy number D(m, n).
    """

    m: int
    n: int
    dq: LaurentQ
    dqinv: LaurentQ


@lru_cache(maxsize=None)
def q_delannoy(m: int, n: int) -> QDelannoyPair:
    """q-Delannoy pair: sum over k of q^C(k,2) [n,k][n+m-k,n], and the
    inverse-q value via the closed form q^(-mn) sum q^C(k+1,2) [n,k][n+m-k,n].
    """
    if m < 0 or n < 0:
        raise ValueError("q_delannoy needs m, n >= 0")
    dq = LaurentQ.zero()
    inv_sum = LaurentQ.zero()
    for k in range(n + 1):
        base = q_binomial(n, k) * q_binomial(n + m - k, n)
        dq = dq + base.shift(k * (k - 1) // 2)
        inv_sum = inv_sum + base.shift((k + 1) * k // 2)
    return QDelannoyPair(m, n, dq, inv_sum.shift(-m * n))
