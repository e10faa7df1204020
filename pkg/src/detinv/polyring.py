"""Exact Laurent polynomials in the three variables q, w, t.

Terms are stored as a dict mapping exponent triples ``(e_q, e_w, e_t)`` to
nonzero Python integers.  Values are immutable once built.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping, Union

VARS = ("q", "w", "t")
_VAR_INDEX = {v: i for i, v in enumerate(VARS)}

Exponent = tuple[int, int, int]
Scalar = int


def _var_index(var: str) -> int:
    try:
        return _VAR_INDEX[var]
    except KeyError:
        raise ValueError(f"unknown variable {var!r}; expected one of {VARS}") from None


class MPoly:
    """A Laurent polynomial in q, w, t with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] | None = None):
        acc: dict[Exponent, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                if len(e) != 3:
                    raise ValueError(f"exponent must be a triple, got {e!r}")
                key = (int(e[0]), int(e[1]), int(e[2]))
                acc[key] = acc.get(key, 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]) -> "MPoly":
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, e_q: int = 0, e_w: int = 0, e_t: int = 0, coeff: int = 1) -> "MPoly":
        return cls({(e_q, e_w, e_t): coeff})

    @classmethod
    def const(cls, c: int) -> "MPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MPoly":
        e = [0, 0, 0]
        e[_var_index(name)] = power
        return cls({tuple(e): 1})

    # -- access ---------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, int]]:
        """Terms in lexicographic exponent order."""
        for e in sorted(self._terms):
            yield e, self._terms[e]

    def coeff(self, e_q: int = 0, e_w: int = 0, e_t: int = 0) -> int:
        return self._terms.get((e_q, e_w, e_t), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_nonneg(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def support_range(self, var: str) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("empty support: the zero polynomial has no exponent range")
        i = _var_index(var)
        exps = [e[i] for e in self._terms]
        return min(exps), max(exps)

    def total_degree_range(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("empty support: the zero polynomial has no exponent range")
        tot = [sum(e) for e in self._terms]
        return min(tot), max(tot)

    def variables(self) -> set[str]:
        return {VARS[i] for e in self._terms for i in range(3) if e[i] != 0}

    def eval_all_one(self) -> int:
        return sum(self._terms.values())

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return MPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for (a0, a1, a2), ca in self._terms.items():
            for (b0, b1, b2), cb in other._terms.items():
                key = (a0 + b0, a1 + b1, a2 + b2)
                out[key] = out.get(key, 0) + ca * cb
        return MPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers are only defined for monomials")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative power of a monomial needs a unit coefficient")
            return MPoly.monomial(-e[0] * -k, -e[1] * -k, -e[2] * -k, c ** (-k))
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, e_q: int = 0, e_w: int = 0, e_t: int = 0) -> "MPoly":
        """Multiply by the monomial q^e_q w^e_w t^e_t."""
        return MPoly._raw({(a + e_q, b + e_w, c + e_t): v for (a, b, c), v in self._terms.items()})

    # -- exponent transformations ---------------------------------------

    def substitute(self, assignment: Mapping[str, Union["MPoly", str, int]]) -> "MPoly":
        """Replace variables by Laurent monomials.

        ``assignment`` maps a variable name to a monomial ``MPoly`` with unit
        coefficient, another variable name, or the integer 1.  Unmapped
        variables are left alone.
        """
        images: list[tuple[Exponent, int]] = []
        for i, v in enumerate(VARS):
            img = assignment.get(v, v)
            if isinstance(img, str):
                img = MPoly.var(img)
            elif isinstance(img, int):
                img = MPoly.const(img)
            if not img.is_monomial():
                raise ValueError(f"image of {v} must be a monomial, got {img}")
            (e, c), = img._terms.items()
            if c not in (1, -1):
                raise ValueError(f"image of {v} must have unit coefficient, got {c}")
            images.append((e, c))
        out: dict[Exponent, int] = {}
        for e, c in self._terms.items():
            new = [0, 0, 0]
            sign = 1
            for i in range(3):
                k = e[i]
                if k == 0:
                    continue
                img_e, img_c = images[i]
                new[0] += k * img_e[0]
                new[1] += k * img_e[1]
                new[2] += k * img_e[2]
                if img_c == -1 and k % 2:
                    sign = -sign
            key = (new[0], new[1], new[2])
            out[key] = out.get(key, 0) + sign * c
        return MPoly._raw({e: c for e, c in out.items() if c})

    def reverse(self, var: str, center: int) -> "MPoly":
        """Send every exponent e of ``var`` to ``center - e``."""
        i = _var_index(var)
        out = {}
        for e, c in self._terms.items():
            k = list(e)
            k[i] = center - k[i]
            out[tuple(k)] = c
        return MPoly._raw(out)

    # -- comparison -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def first_difference(self, other: "MPoly") -> tuple[Exponent, int, int] | None:
        """Lexicographically smallest exponent where the two differ."""
        keys = sorted(set(self._terms) | set(other._terms))
        for e in keys:
            a, b = self._terms.get(e, 0), other._terms.get(e, 0)
            if a != b:
                return e, a, b
        return None

    # -- rendering ------------------------------------------------------

    def to_json_obj(self) -> list[dict]:
        return [{"e": list(e), "c": str(c)} for e, c in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, data: list[dict]) -> "MPoly":
        return cls((tuple(item["e"]), int(item["c"])) for item in data)

    @classmethod
    def from_json(cls, text: str) -> "MPoly":
        return cls.from_json_obj(json.loads(text))

    def to_text(self) -> str:
        return _render(self, latex=False)

    def to_latex(self) -> str:
        return _render(self, latex=True)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MPoly({self.to_text()})"


def _render(p: MPoly, latex: bool) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for e, c in p.items():
        factors = []
        for name, k in zip(VARS, e):
            if k == 0:
                continue
            if k == 1:
                factors.append(name)
            elif latex:
                factors.append(f"{name}^{{{k}}}")
            else:
                factors.append(f"{name}^{k}")
        mono = " ".join(factors) if latex else "*".join(factors)
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag} {mono}" if latex else f"{mag}*{mono}"
        pieces.append((c < 0, body))
    neg, body = pieces[0]
    out = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


ZERO = MPoly()
ONE = MPoly.const(1)
Q = MPoly.var("q")
W = MPoly.var("w")
T = MPoly.var("t")


def mono(e_q: int = 0, e_w: int = 0, e_t: int = 0) -> MPoly:
    return MPoly.monomial(e_q, e_w, e_t)


def psum(polys: Iterable[MPoly]) -> MPoly:
    out: dict[Exponent, int] = {}
    for p in polys:
        for e, c in p._terms.items():
            out[e] = out.get(e, 0) + c
    return MPoly._raw({e: c for e, c in out.items() if c})


def pprod(polys: Iterable[MPoly]) -> MPoly:
    out = ONE
    for p in polys:
        out = out * p
    return out
