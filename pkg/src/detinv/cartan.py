"""Orbit cohomology from Cartan presentation data.

A presentation records the degrees of a complete-intersection quotient
C[gens]/(rels) together with the odd exterior generators.  Its Poincare
polynomial is

    prod(1 - q^rel) / prod(1 - q^gen) * prod(1 + q^ext)

and is computed here without a general division routine: each factor
1/(1 - q^d) is expanded as a geometric series truncated at the known top
degree, and the result is multiplied back to confirm the remainder is zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import Case, Space
from .polyring import ONE, MPoly, mono, pprod, psum


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    gen_degrees: tuple[int, ...]
    rel_degrees: tuple[int, ...]
    ext_degrees: tuple[int, ...]
    note: str = ""

    def __post_init__(self):
        object.__setattr__(self, "gen_degrees", tuple(self.gen_degrees))
        object.__setattr__(self, "rel_degrees", tuple(self.rel_degrees))
        object.__setattr__(self, "ext_degrees", tuple(self.ext_degrees))
        if len(self.gen_degrees) != len(self.rel_degrees):
            raise PresentationError(
                f"need as many relations as generators, got {len(self.rel_degrees)} and {len(self.gen_degrees)}"
            )
        for d in self.gen_degrees + self.rel_degrees:
            if d <= 0 or d % 2:
                raise PresentationError(f"ring degrees must be positive and even, got {d}")
        for d in self.ext_degrees:
            if d <= 0 or d % 2 == 0:
                raise PresentationError(f"exterior degrees must be positive and odd, got {d}")

    @property
    def top_degree(self) -> int:
        return sum(self.rel_degrees) - sum(self.gen_degrees)


def _truncated_inverse(d: int, bound: int) -> MPoly:
    # 1 + q^d + q^2d + ... up to q^bound
    return psum(mono(k) for k in range(0, bound + 1, d))


def _truncate(p: MPoly, bound: int) -> MPoly:
    return MPoly({e: c for e, c in p.terms.items() if e[0] <= bound})


def hilbert_quotient(gen_degrees, rel_degrees) -> MPoly:
    """Hilbert series of the complete intersection, checked to be a polynomial."""
    bound = sum(rel_degrees) - sum(gen_degrees)
    if bound < 0:
        raise PresentationError("relations have lower total degree than generators")
    numerator = pprod(ONE - mono(d) for d in rel_degrees)
    quotient = numerator
    for d in gen_degrees:
        quotient = _truncate(quotient * _truncated_inverse(d, bound), bound)
    remainder = numerator - quotient * pprod(ONE - mono(d) for d in gen_degrees)
    if remainder:
        raise PresentationError(f"nonzero remainder {remainder}: relations are not a regular sequence")
    if not quotient.is_nonneg():
        raise PresentationError(f"quotient {quotient} has negative coefficients")
    return quotient


def cartan_poincare(pres: Presentation) -> MPoly:
    ring = hilbert_quotient(pres.gen_degrees, pres.rel_degrees)
    return ring * pprod(ONE + mono(d) for d in pres.ext_degrees)


def _z(i: int) -> int:
    # degree of the primitive exterior generator z_i
    return 2 * i - 1


def presentation_for(space: Space, p: int) -> Presentation:
    """Degree data of the orbit cohomology presentation for O_p."""
    space.check_p(p)
    n = space.n
    if space.case is Case.GENERAL:
        m = space.m
        # K = U(m) x U(n), L = U(p) x U(m-p) x U(n-p); the surviving relations are
        # rho(x_1..x_{m-p}) and rho(y_1..y_n), the rest become exterior classes.
        gens = [2 * i for i in range(1, p + 1)]
        gens += [2 * i for i in range(1, m - p + 1)]
        gens += [2 * i for i in range(1, n - p + 1)]
        rels = [2 * i for i in range(1, m - p + 1)] + [2 * i for i in range(1, n + 1)]
        exts = [_z(i) for i in range(m - p + 1, m + 1)]
        return Presentation(gens, rels, exts, "Grass(p,n) x exterior(z_{m-p+1}..z_m)")
    h, e = space.half, space.eps
    if space.case is Case.SKEW:
        gens = [4 * i for i in range(1, p + 1)]
        rels = [4 * i for i in range(h - p + 1, h + 1)]
        exts = [_z(i) for i in range(n + e - 2 * p + 1, n + e, 2)]
        return Presentation(gens, rels, exts, "C[h_1..h_p]/(h_{m-p+1}..h_m)")
    r = p // 2
    gens = [4 * i for i in range(1, r + 1)]
    if p % 2 == 0:
        rels = [4 * i for i in range(h - r + 1, h + 1)]
        exts = [_z(i) for i in range(n + e - p + 1, n + e, 2)]
        return Presentation(gens, rels, exts, "C[h_1..h_r]/(h_{m-r+1}..h_m)")
    rels = [4 * i for i in range(h - r + e, h + e)]
    exts = [_z(i) for i in range(2 * h - 2 * r + 1, 2 * h, 2)] + [_z(n)]
    return Presentation(gens, rels, exts, "C[h_1..h_r]/(h_{m-r+eps}..h_{m-1+eps}), extra z_n")
