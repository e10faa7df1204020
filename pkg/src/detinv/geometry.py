"""Matrix spaces and orbit dimension bookkeeping.

Three cases are supported:

* ``general``   -- m x n matrices with m >= n, O_p = rank p
* ``skew``      -- n x n skew-symmetric matrices, O_p = rank 2p
* ``symmetric`` -- n x n symmetric matrices, O_p = rank p

For skew and symmetric spaces ``half`` is floor(n/2) and ``eps`` is n mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Case(str, Enum):
    GENERAL = "general"
    SKEW = "skew"
    SYMMETRIC = "symmetric"

    def __str__(self) -> str:
        return self.value


CASE_NAMES = tuple(c.value for c in Case)


def choose2(k: int) -> int:
    return k * (k - 1) // 2


@dataclass(frozen=True, order=True)
class Space:
    case: Case
    n: int
    m: int | None = None

    def __post_init__(self):
        case = Case(self.case)
        object.__setattr__(self, "case", case)
        if case is Case.GENERAL:
            if self.m is None or self.n < 1 or self.m < self.n:
                raise ValueError(f"general space needs m >= n >= 1, got m={self.m}, n={self.n}")
        else:
            if self.m is not None:
                raise ValueError(f"{case.value} space takes only n")
            lo = 2 if case is Case.SKEW else 1
            if self.n < lo:
                raise ValueError(f"{case.value} space needs n >= {lo}, got n={self.n}")

    @classmethod
    def general(cls, m: int, n: int) -> "Space":
        return cls(Case.GENERAL, n, m)

    @classmethod
    def skew(cls, n: int) -> "Space":
        return cls(Case.SKEW, n)

    @classmethod
    def symmetric(cls, n: int) -> "Space":
        return cls(Case.SYMMETRIC, n)

    @property
    def half(self) -> int:
        return self.n // 2

    @property
    def eps(self) -> int:
        return self.n - 2 * (self.n // 2)

    @property
    def dim(self) -> int:
        """Complex dimension d_X of the ambient matrix space."""
        if self.case is Case.GENERAL:
            return self.m * self.n
        if self.case is Case.SKEW:
            return choose2(self.n)
        return self.n * (self.n + 1) // 2

    @property
    def p_max(self) -> int:
        return self.half if self.case is Case.SKEW else self.n

    def orbits(self) -> range:
        return range(self.p_max + 1)

    def check_p(self, p: int) -> None:
        if not 0 <= p <= self.p_max:
            raise ValueError(f"orbit index p={p} out of range 0..{self.p_max} for {self}")

    def label(self) -> str:
        if self.case is Case.GENERAL:
            return f"general(m={self.m},n={self.n})"
        return f"{self.case.value}(n={self.n})"

    def __str__(self) -> str:
        return self.label()


def codim_orbit(space: Space, p: int) -> int:
    space.check_p(p)
    n = space.n
    if space.case is Case.GENERAL:
        return (space.m - p) * (n - p)
    if space.case is Case.SKEW:
        return choose2(n - 2 * p)
    return (n - p) * (n - p + 1) // 2


def dim_orbit(space: Space, p: int) -> int:
    return space.dim - codim_orbit(space, p)


def epsilon_p(space: Space, p: int) -> int:
    """1 if p is even and n is odd, else 0 (symmetric case only)."""
    if space.case is not Case.SYMMETRIC:
        raise ValueError("epsilon_p is only defined for symmetric spaces")
    if not 0 <= p <= space.n + 1:
        raise ValueError(f"p={p} out of range for {space}")
    return 1 if (p % 2 == 0 and space.n % 2 == 1) else 0


def parse_space(case: str, n: int, m: int | None = None) -> Space:
    """Build a space from CLI-style arguments."""
    if case not in CASE_NAMES:
        raise ValueError(f"unknown case {case!r}; expected one of {', '.join(CASE_NAMES)}")
    if case == "general":
        if m is None:
            raise ValueError("general case needs --m")
        return Space.general(m, n)
    return Space(Case(case), n)
