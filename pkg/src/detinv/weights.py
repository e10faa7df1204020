"""Dominant weights indexing the simple modules D_s, and box-removal checks.

Each case has its own family of index sets:

* general (square, n x n):  lambda_s >= s - n >= lambda_{s+1}
* skew (n even, paired entries lambda_{2i-1} = lambda_{2i}):
      lambda_{2s} >= 2s - n  and  lambda_{2s+1} <= 2s - n + 1
* symmetric (all entries even, n - s odd, 0 <= s <= n + 1):
      lambda_{s-1} >= s - n - 1 >= lambda_{s+1}

Indices are 1-based; entries before position 1 count as +infinity and
entries after position n as -infinity.

Taking a derivative of an isotypic component removes one box (general), two
boxes from one column (skew) or two boxes from one row (symmetric).  The
closure check confirms on a finite box that such removals never move a
weight into a strictly larger class that is still <= p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator

from .geometry import Case

INF = float("inf")


@dataclass(frozen=True, order=True)
class DomWeight:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if any(entries[i] < entries[i + 1] for i in range(len(entries) - 1)):
            raise ValueError(f"weight {entries} is not dominant (weakly decreasing)")

    @property
    def n(self) -> int:
        return len(self.entries)

    def at(self, i: int) -> float:
        """1-based entry, with the +/- infinity conventions outside 1..n."""
        if i < 1:
            return INF
        if i > len(self.entries):
            return -INF
        return self.entries[i - 1]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class WeightBox:
    n: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("box needs n >= 1")
        if self.lo > self.hi:
            raise ValueError(f"empty box: lo={self.lo} > hi={self.hi}")

    @classmethod
    def around(cls, case: Case | str, n: int, radius: int) -> "WeightBox":
        """Box reaching ``radius`` past the class thresholds, which live in [-n-1, 1]."""
        lo, hi = -(n + radius), radius
        if Case(case) is Case.SYMMETRIC:
            lo -= lo % 2
            hi += hi % 2
        return cls(n, lo, hi)

    def contains(self, lam: DomWeight) -> bool:
        return all(self.lo <= x <= self.hi for x in lam.entries)


def _as_case(case) -> Case:
    return Case(case)


def _weight(lam) -> DomWeight:
    return lam if isinstance(lam, DomWeight) else DomWeight(tuple(lam))


# -- classification -----------------------------------------------------------


def classify_general(lam, n: int | None = None) -> int | None:
    lam = _weight(lam)
    n = lam.n if n is None else n
    if lam.n != n:
        raise ValueError(f"weight has length {lam.n}, expected {n}")
    hits = [s for s in range(n + 1) if lam.at(s) >= s - n >= lam.at(s + 1)]
    return hits[0] if hits else None


def classify_skew(lam, n: int | None = None) -> int | None:
    lam = _weight(lam)
    n = lam.n if n is None else n
    if lam.n != n or n % 2:
        raise ValueError(f"skew classification needs an even-length weight, got length {lam.n}")
    if any(lam.at(2 * i - 1) != lam.at(2 * i) for i in range(1, n // 2 + 1)):
        raise ValueError(f"skew weight {lam} is not paired")
    hits = [
        s
        for s in range(n // 2 + 1)
        if lam.at(2 * s) >= 2 * s - n and lam.at(2 * s + 1) <= 2 * s - n + 1
    ]
    return hits[0] if hits else None


def classify_symmetric(lam, n: int | None = None) -> int | None:
    lam = _weight(lam)
    n = lam.n if n is None else n
    if lam.n != n:
        raise ValueError(f"weight has length {lam.n}, expected {n}")
    if any(x % 2 for x in lam.entries):
        raise ValueError(f"symmetric weight {lam} has an odd entry")
    hits = [
        s
        for s in range(n + 2)
        if (n - s) % 2 == 1 and lam.at(s - 1) >= s - n - 1 >= lam.at(s + 1)
    ]
    return hits[0] if hits else None


def all_classes(case, lam) -> list[int]:
    """Every s whose defining inequalities hold (used to test uniqueness)."""
    case, lam = _as_case(case), _weight(lam)
    n = lam.n
    if case is Case.GENERAL:
        return [s for s in range(n + 1) if lam.at(s) >= s - n >= lam.at(s + 1)]
    if case is Case.SKEW:
        return [
            s for s in range(n // 2 + 1)
            if lam.at(2 * s) >= 2 * s - n and lam.at(2 * s + 1) <= 2 * s - n + 1
        ]
    return [
        s for s in range(n + 2)
        if (n - s) % 2 == 1 and lam.at(s - 1) >= s - n - 1 >= lam.at(s + 1)
    ]


_CLASSIFIERS = {
    Case.GENERAL: classify_general,
    Case.SKEW: classify_skew,
    Case.SYMMETRIC: classify_symmetric,
}


def classify(case, lam) -> int | None:
    return _CLASSIFIERS[_as_case(case)](lam)


def class_range(case, n: int) -> list[int]:
    case = _as_case(case)
    if case is Case.GENERAL:
        return list(range(n + 1))
    if case is Case.SKEW:
        return list(range(n // 2 + 1))
    return [s for s in range(n + 2) if (n - s) % 2 == 1]


# -- enumeration ----------------------------------------------------------------


def dominant_weights(case, box: WeightBox) -> Iterator[DomWeight]:
    """All case-admissible dominant weights with entries in the box."""
    case = _as_case(case)
    n = box.n
    if case is Case.SKEW:
        if n % 2:
            raise ValueError("skew weights need even n")
        for pairs in combinations_with_replacement(range(box.hi, box.lo - 1, -1), n // 2):
            yield DomWeight(tuple(x for x in pairs for _ in range(2)))
        return
    if case is Case.SYMMETRIC:
        values = [v for v in range(box.hi, box.lo - 1, -1) if v % 2 == 0]
    else:
        values = list(range(box.hi, box.lo - 1, -1))
    for combo in combinations_with_replacement(values, n):
        yield DomWeight(combo)


def enumerate_class(case, s: int, box: WeightBox) -> list[DomWeight]:
    return [lam for lam in dominant_weights(case, box) if classify(case, lam) == s]


def removals(case, lam: DomWeight) -> Iterator[DomWeight]:
    """Dominant weights reachable by one derivation (support-level Pieri rule)."""
    case = _as_case(case)
    e = list(lam.entries)
    n = len(e)
    if case is Case.GENERAL:
        for r in range(n):
            if r == n - 1 or e[r] - 1 >= e[r + 1]:
                nu = e.copy()
                nu[r] -= 1
                yield DomWeight(tuple(nu))
    elif case is Case.SKEW:
        for r in range(0, n, 2):
            if r + 2 >= n or e[r + 1] - 1 >= e[r + 2]:
                nu = e.copy()
                nu[r] -= 1
                nu[r + 1] -= 1
                yield DomWeight(tuple(nu))
    else:
        for r in range(n):
            if r == n - 1 or e[r] - 2 >= e[r + 1]:
                nu = e.copy()
                nu[r] -= 2
                yield DomWeight(tuple(nu))


# -- closure check ----------------------------------------------------------------


@dataclass
class ClosureReport:
    case: str
    n: int
    p: int
    box: WeightBox
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    unclassified: list[dict] = field(default_factory=list)
    above_p: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.unclassified

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "n": self.n,
            "p": self.p,
            "box": {"lo": self.box.lo, "hi": self.box.hi},
            "checked": self.checked,
            "violations": self.violations,
            "unclassified": self.unclassified,
            "above_p": self.above_p,
        }


@lru_cache(maxsize=32)
def _removal_table(case: Case, box: WeightBox) -> tuple[tuple, ...]:
    rows = []
    for lam in dominant_weights(case, box):
        s = classify(case, lam)
        for nu in removals(case, lam):
            if box.contains(nu):
                rows.append((s, classify(case, nu), lam.entries, nu.entries))
    return tuple(rows)


def closure_check(case, p: int, box: WeightBox) -> ClosureReport:
    case = _as_case(case)
    n = box.n
    valid = class_range(case, n)
    if case is Case.SYMMETRIC:
        if p not in valid:
            raise ValueError(f"symmetric closure check needs 0 <= p <= n+1 with n - p odd, got p={p}, n={n}")
        admissible = [s for s in valid if s <= p]
    else:
        if p not in valid:
            raise ValueError(f"p={p} out of range {valid[0]}..{valid[-1]}")
        admissible = [s for s in valid if s <= p]
    report = ClosureReport(case.value, n, p, box)
    allowed = set(admissible)
    for s, t, lam, nu in _removal_table(case, box):
        if s not in allowed:
            continue
        report.checked += 1
        if t is None:
            report.unclassified.append({"lambda": list(lam), "nu": list(nu), "s": s})
        elif t > p:
            report.above_p.append({"lambda": list(lam), "nu": list(nu), "s": s, "t": t})
        elif t > s:
            report.violations.append({"lambda": list(lam), "nu": list(nu), "s": s, "t": t})
    return report
