"""Closed-form generating functions for determinantal orbit closures.

Conventions: ``q`` tracks cohomological / homological degree, ``w`` tracks
the local cohomology index (or weight, in the Hodge-theoretic forms), ``t``
tracks weight in the trivariate form.

The section forms (``cdr_section_form``) are assembled from the de Rham
polynomials of the simple modules and the composition-series data.  The
introduction forms (``cdr_intro_form``) and BM polynomials are transcribed
from their own displays.  The two encodings are compared by ``verify``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .geometry import Case, Space, choose2, codim_orbit, dim_orbit, epsilon_p
from .polyring import ONE, MPoly, mono, pprod, psum
from .qcomb import qbinom_at, qbinom_or_zero

q = MPoly.var("q")
w = MPoly.var("w")
t = MPoly.var("t")


def _qb(a: int, b: int, base: MPoly) -> MPoly:
    return qbinom_or_zero(a, b, base)


def _sym_indices(p: int) -> range:
    # s runs over 0..p with s = p mod 2
    return range(p % 2, p + 1, 2)


class DenseOrbitError(ValueError):
    """Raised by section-theorem formulas when p is the dense orbit."""


def _require_proper(space: Space, p: int) -> None:
    space.check_p(p)
    if p == space.p_max:
        raise DenseOrbitError(
            f"dense orbit: composition series formula not applicable for p={p} in {space}"
        )


# ---------------------------------------------------------------------------
# Borel-Moore homology and orbit cohomology


def bm_poincare(space: Space, p: int) -> MPoly:
    """Poincare polynomial of the Borel-Moore homology of the closure of O_p."""
    space.check_p(p)
    if p == space.p_max:
        return mono(2 * space.dim)
    n = space.n
    if space.case is Case.GENERAL:
        m = space.m
        return psum(
            mono(2 * s * (m + n - s) + (p - s) * (p - s + 2))
            * _qb(n, s, q ** -2)
            * _qb(n - 1 - s, p - s, q ** 2)
            for s in range(p + 1)
        )
    if space.case is Case.SKEW:
        h = space.half
        return psum(
            mono(2 * s * (2 * n - 1 - 2 * s) + (p - s) * (2 * p - 2 * s + 3))
            * _qb(h, s, q ** -4)
            * _qb(h - 1 - s, p - s, q ** 4)
            for s in range(p + 1)
        )
    h, ep = space.half, epsilon_p(space, p)
    return psum(
        mono(s * (2 * n + 1 - s) + (p - s) * (p - s + 3) // 2)
        * _qb(h + ep, s // 2, q ** -4)
        * _qb((n - s - 1) // 2, (p - s) // 2, q ** 4)
        for s in _sym_indices(p)
    )


def bm_poincare_section(space: Space, p: int) -> MPoly:
    """The same polynomial, in the positive-binomial form of the per-case theorems.

    Kept as a second transcription to catch exponent typos.
    """
    space.check_p(p)
    if p == space.p_max:
        return mono(2 * space.dim)
    n = space.n
    if space.case is Case.GENERAL:
        m = space.m
        return psum(
            mono(2 * s * m + (p - s) * (p - s + 2))
            * _qb(n, s, q ** 2)
            * _qb(n - 1 - s, p - s, q ** 2)
            for s in range(p + 1)
        )
    if space.case is Case.SKEW:
        h, e = space.half, space.eps
        return psum(
            mono(2 * s * (n + e - 1) + (p - s) * (2 * p - 2 * s + 3))
            * _qb(h, s, q ** 4)
            * _qb(h - 1 - s, p - s, q ** 4)
            for s in range(p + 1)
        )
    h, ep = space.half, epsilon_p(space, p)
    return psum(
        mono(2 * choose2(n + 1) + choose2(p - s + 2) - 2 * choose2(n - s + 1) - 1)
        * _qb(h + ep, s // 2, q ** -4)
        * _qb((n - s - 1) // 2, (p - s) // 2, q ** 4)
        for s in _sym_indices(p)
    )


def _odd_factors(start: int, step: int, count: int) -> MPoly:
    return pprod(ONE + mono(start + step * k) for k in range(count))


def orbit_cohomology(space: Space, p: int) -> MPoly:
    """Poincare polynomial of the singular cohomology of O_p."""
    space.check_p(p)
    n = space.n
    if space.case is Case.GENERAL:
        m = space.m
        return _qb(n, p, q ** 2) * _odd_factors(2 * m - 2 * p + 1, 2, p)
    h, e = space.half, space.eps
    if space.case is Case.SKEW:
        return _qb(h, p, q ** 4) * _odd_factors(2 * (n + e) - 4 * p + 1, 4, p)
    r = p // 2
    if p % 2 == 0:
        return _qb(h, r, q ** 4) * _odd_factors(2 * (n + e) - 4 * r + 1, 4, r)
    return (
        _qb(h - 1 + e, r, q ** 4)
        * _odd_factors(4 * h - 4 * r + 1, 4, r)
        * (ONE + mono(2 * n - 1))
    )


def total_betti(space: Space, p: int) -> int:
    """Sum of Betti numbers of O_p, from binomial closed forms.

    For symmetric spaces with p = 2r+1 this is C(floor(n/2) - 1 + eps, r) 2^(r+1),
    which reduces to C(floor(n/2), r) 2^(r+1) when n is odd.
    """
    space.check_p(p)
    if space.case is Case.GENERAL:
        return comb(space.n, p) * 2 ** p
    h = space.half
    if space.case is Case.SKEW:
        return comb(h, p) * 2 ** p
    r = p // 2
    if p % 2 == 0:
        return comb(h, r) * 2 ** r
    return comb(h - 1 + space.eps, r) * 2 ** (r + 1)


# ---------------------------------------------------------------------------
# de Rham cohomology of simples and composition series


def derham_simple(space: Space, s: int) -> MPoly:
    """de Rham cohomology polynomial of the simple module D_s."""
    space.check_p(s)
    n = space.n
    if space.case is Case.GENERAL:
        m = space.m
        return _qb(n, s, q ** 2).shift((m - s) * (n - s))
    h = space.half
    if space.case is Case.SKEW:
        return _qb(h, s, q ** 4).shift(choose2(n) - s * (2 * n - 2 * s - 1))
    return _qb(h + epsilon_p(space, s), s // 2, q ** 4).shift(choose2(n - s + 1))


def ih_poincare(space: Space, s: int) -> MPoly:
    """Intersection cohomology of the closure of O_s (de Rham of D_s, unshifted)."""
    return derham_simple(space, s).shift(-codim_orbit(space, s))


@dataclass(frozen=True)
class CompSeries:
    """s -> multiplicity generating function (in w) of D_s in local cohomology."""

    space: Space
    p: int
    entries: dict[int, MPoly] = field(default_factory=dict)

    def __getitem__(self, s: int) -> MPoly:
        return self.entries[s]

    def __iter__(self):
        return iter(sorted(self.entries))

    def items(self):
        return sorted(self.entries.items())


def loccoh_series(space: Space, p: int) -> CompSeries:
    _require_proper(space, p)
    n = space.n
    entries: dict[int, MPoly] = {}
    if space.case is Case.GENERAL:
        m = space.m
        for s in range(p + 1):
            entries[s] = _qb(n - 1 - s, p - s, w ** 2).shift(0, (n - p) ** 2 + (n - s) * (m - n))
    elif space.case is Case.SKEW:
        h, e = space.half, space.eps
        for s in range(p + 1):
            ew = 2 * (h - p) ** 2 + p - h + 2 * e * (h - s)
            entries[s] = _qb(h - 1 - s, p - s, w ** 4).shift(0, ew)
    else:
        for s in _sym_indices(p):
            ew = 1 + choose2(n - s + 1) - choose2(p - s + 2)
            entries[s] = _qb((n - s - 1) // 2, (p - s) // 2, w ** -4).shift(0, ew)
    return CompSeries(space, p, entries)


def cdr_section_form(space: Space, p: int) -> MPoly:
    """Generating function of h^i_dR(H^j(local cohomology)) q^i w^j, p < p_max."""
    series = loccoh_series(space, p)
    return psum(derham_simple(space, s) * mult for s, mult in series.items())


def cdr_intro_form(space: Space, p: int) -> MPoly:
    """Cech-de Rham numbers rho_{i,j} q^i w^j, typed from their own display."""
    space.check_p(p)
    d = space.dim
    if p == space.p_max:
        return mono(d, d)
    n = space.n
    qw = mono(1, 1)
    if space.case is Case.GENERAL:
        m = space.m
        return psum(
            qw ** (s * (m + n - s))
            * _qb(n, s, q ** -2)
            * w ** ((p - s) * (p - s + 2))
            * _qb(n - 1 - s, p - s, w ** 2)
            for s in range(p + 1)
        )
    h = space.half
    if space.case is Case.SKEW:
        return psum(
            qw ** (s * (2 * n - 1 - 2 * s))
            * _qb(h, s, q ** -4)
            * w ** ((p - s) * (2 * p - 2 * s + 3))
            * _qb(h - 1 - s, p - s, w ** 4)
            for s in range(p + 1)
        )
    ep = epsilon_p(space, p)
    return psum(
        qw ** (s * (2 * n + 1 - s) // 2)
        * _qb(h + ep, s // 2, q ** -4)
        * w ** ((p - s) * (p - s + 3) // 2)
        * _qb((n - s - 1) // 2, (p - s) // 2, w ** 4)
        for s in _sym_indices(p)
    )


def np_total(space: Space, p: int) -> int:
    """N_p: total of the composition-factor de Rham dimensions (1 for the dense orbit)."""
    space.check_p(p)
    if p == space.p_max:
        return 1
    return cdr_section_form(space, p).eval_all_one()


# ---------------------------------------------------------------------------
# weight filtrations (general matrices only)


def _general_args(m: int, n: int, p: int, *, allow_dense: bool) -> None:
    if not (m >= n >= 1 and p >= 0):
        raise ValueError(f"weight forms need m >= n >= 1 and p >= 0, got m={m}, n={n}, p={p}")
    if p > n or (p == n and not allow_dense):
        bound = "<=" if allow_dense else "<"
        raise ValueError(f"weight form needs p {bound} n, got p={p}, n={n}")


def weight_bm_general(m: int, n: int, p: int) -> MPoly:
    """dim Gr^W_j H^BM_i q^i w^j for the closure of O_p in m x n matrices, p < n."""
    _general_args(m, n, p, allow_dense=False)
    u = mono(1, -1)  # q w^-1
    return psum(
        w ** (p - s)
        * u ** (2 * s * m + (p - s) * (p - s + 2))
        * _qb(n, s, u ** 2)
        * _qb(n - 1 - s, p - s, u ** 2)
        for s in range(p + 1)
    )


def weight_bm_lowest_piece(m: int, n: int, p: int) -> MPoly:
    """The s = p summand of :func:`weight_bm_general`."""
    _general_args(m, n, p, allow_dense=False)
    u = mono(1, -1)
    return u ** (2 * p * m) * _qb(n, p, u ** 2)


def weight_orbit_general(m: int, n: int, p: int) -> MPoly:
    """dim Gr^W_j H^i(O_p) q^i w^j."""
    _general_args(m, n, p, allow_dense=True)
    return _qb(n, p, mono(2, 2)) * pprod(
        ONE + mono(2 * m - 2 * s - 1, 2 * m - 2 * s) for s in range(p)
    )


def weight_cdr_trivariate(m: int, n: int, p: int) -> MPoly:
    """dim Gr^W_k H^i_dR(H^j) q^i w^j t^k for the closure of O_p, p < n."""
    _general_args(m, n, p, allow_dense=False)
    qt, wt = mono(1, 0, 1), mono(0, 1, 1)
    return psum(
        t ** (p - s)
        * qt ** ((m - s) * (n - s))
        * _qb(n, s, qt ** 2)
        * wt ** ((n - p) ** 2 + (n - s) * (m - n))
        * _qb(n - 1 - s, p - s, wt ** 2)
        for s in range(p + 1)
    )


def trivariate_to_weight_bm(tri: MPoly, m: int, n: int) -> MPoly:
    """Push the trivariate de Rham weight table to BM homology weights.

    Steps: w -> q (total degree i+j), q -> q^-1 and multiply by q^{2mn}
    (homological degree 2d - i - j), t -> w, then undo the Tate twist (-d)
    by shifting weights down by 2d.
    """
    d = m * n
    out = tri.substitute({"w": "q"})
    out = out.substitute({"q": q ** -1}).shift(2 * d)
    out = out.substitute({"t": "w", "w": "t"})
    return out.shift(0, -2 * d)


# ---------------------------------------------------------------------------

INVARIANT_NAMES = (
    "bm",
    "orbit-cohomology",
    "cdr-intro",
    "cdr-section",
    "loccoh-series",
    "derham-simple",
    "ih",
    "weight-bm",
    "weight-orbit",
    "weight-cdr3",
    "np",
    "btot",
    "cartan-check",
)

GENERAL_ONLY = frozenset({"weight-bm", "weight-orbit", "weight-cdr3"})


def evaluate(name: str, space: Space, p: int):
    """Dispatch by CLI invariant name.  Returns an MPoly, an int, or a CompSeries."""
    if name in GENERAL_ONLY and space.case is not Case.GENERAL:
        raise ValueError(f"invariant {name!r} is only available for the general case")
    table = {
        "bm": bm_poincare,
        "orbit-cohomology": orbit_cohomology,
        "cdr-intro": cdr_intro_form,
        "cdr-section": cdr_section_form,
        "loccoh-series": loccoh_series,
        "derham-simple": derham_simple,
        "ih": ih_poincare,
        "np": np_total,
        "btot": total_betti,
    }
    if name in table:
        return table[name](space, p)
    if name == "weight-bm":
        return weight_bm_general(space.m, space.n, p)
    if name == "weight-orbit":
        return weight_orbit_general(space.m, space.n, p)
    if name == "weight-cdr3":
        return weight_cdr_trivariate(space.m, space.n, p)
    if name == "cartan-check":
        from .cartan import cartan_poincare, presentation_for

        return cartan_poincare(presentation_for(space, p))
    raise ValueError(f"unknown invariant {name!r}; expected one of {', '.join(INVARIANT_NAMES)}")


__all__ = [
    "CompSeries",
    "DenseOrbitError",
    "INVARIANT_NAMES",
    "bm_poincare",
    "bm_poincare_section",
    "cdr_intro_form",
    "cdr_section_form",
    "derham_simple",
    "dim_orbit",
    "evaluate",
    "ih_poincare",
    "loccoh_series",
    "np_total",
    "orbit_cohomology",
    "total_betti",
    "trivariate_to_weight_bm",
    "weight_bm_general",
    "weight_bm_lowest_piece",
    "weight_cdr_trivariate",
    "weight_orbit_general",
]
