"""Gaussian (q-)binomial coefficients.

Everything here is built from the q-Pascal recursion on coefficient lists;
no polynomial division is ever performed.  A partition-in-a-box enumerator
is kept alongside as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .polyring import ONE, ZERO, MPoly, psum

ORACLE_MAX = 14


@dataclass(frozen=True)
class QBinSpec:
    a: int
    b: int
    var: str = "q"
    step: int = 1

    def __post_init__(self):
        _check_args(self.a, self.b)
        if self.step == 0:
            raise ValueError("step must be nonzero")


def _check_args(a: int, b: int) -> None:
    if a < 0 or b < 0 or b > a:
        raise ValueError(f"q-binomial needs a >= b >= 0, got a={a}, b={b}")


@lru_cache(maxsize=None)
def gauss_coeffs(a: int, b: int) -> tuple[int, ...]:
    """Coefficients of C(a, b)_q, lowest degree first.

    Uses C(a,b) = q^b C(a-1,b) + C(a-1,b-1).
    """
    _check_args(a, b)
    if b == 0 or b == a:
        return (1,)
    left = gauss_coeffs(a - 1, b)
    right = gauss_coeffs(a - 1, b - 1)
    out = [0] * (b * (a - b) + 1)
    for i, c in enumerate(left):
        out[i + b] += c
    for i, c in enumerate(right):
        out[i] += c
    return tuple(out)


def qbinom_at(a: int, b: int, base: MPoly) -> MPoly:
    """C(a, b) evaluated at a monomial ``base`` such as (q t)^2 or w^-4."""
    if not base.is_monomial():
        raise ValueError("q-binomial base must be a monomial")
    (e, c), = base.terms.items()
    if c != 1:
        raise ValueError("q-binomial base must have coefficient 1")
    coeffs = gauss_coeffs(a, b)
    return MPoly({(k * e[0], k * e[1], k * e[2]): v for k, v in enumerate(coeffs)})


def qbinom(spec_or_a, b: int | None = None, var: str = "q", step: int = 1) -> MPoly:
    """C(a, b)_x with x = var^step.

    Accepts either a :class:`QBinSpec` or the fields positionally.
    """
    if isinstance(spec_or_a, QBinSpec):
        spec = spec_or_a
    else:
        spec = QBinSpec(spec_or_a, b, var, step)
    return qbinom_at(spec.a, spec.b, MPoly.var(spec.var, spec.step))


def qbinom_or_zero(a: int, b: int, base: MPoly) -> MPoly:
    # empty binomials (b < 0 or b > a) contribute nothing to a sum
    if b < 0 or a < 0 or b > a:
        return ZERO
    return qbinom_at(a, b, base)


def qbinom_oracle(a: int, b: int) -> MPoly:
    """Sum of q^|lambda| over partitions lambda inside a b x (a-b) box."""
    _check_args(a, b)
    if a > ORACLE_MAX:
        raise ValueError(f"partition oracle is capped at a <= {ORACLE_MAX}, got a={a}")
    counts: dict[int, int] = {}
    for parts in combinations_with_replacement(range(a - b + 1), b):
        size = sum(parts)
        counts[size] = counts.get(size, 0) + 1
    return MPoly({(k, 0, 0): v for k, v in counts.items()})


def rescale_identity_check(a: int, b: int, step: int) -> bool:
    """Check C(a,b)_{x^-1} == x^{-b(a-b)} C(a,b)_x for x = q^step."""
    x = MPoly.var("q", step)
    lhs = qbinom_at(a, b, x ** -1)
    rhs = x ** (-b * (a - b)) * qbinom_at(a, b, x)
    return lhs == rhs


def gauss_product(n: int, a_mono: MPoly, b_mono: MPoly) -> MPoly:
    """The product of (1 + a^k b) for k = 0 .. n-1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = ONE
    ak = ONE
    for _ in range(n):
        out = out * (ONE + ak * b_mono)
        ak = ak * a_mono
    return out


def gauss_sum(n: int, a_mono: MPoly, b_mono: MPoly) -> MPoly:
    """Right-hand side of the Gaussian binomial theorem."""
    return psum(
        a_mono ** (k * (k - 1) // 2) * qbinom_at(n, k, a_mono) * b_mono ** k
        for k in range(n + 1)
    )
