"""Identity checks between the computed invariants, run over parameter sweeps.

Every check produces a :class:`Check`.  A check fails exactly when it carries
a witness: the first exponent (or item) where the two sides disagree.
Informational findings that are expected outside a theorem's hypotheses
(strict inequalities, non-vanishing LES maps) go into ``detail``.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from . import invariants as inv
from .cartan import PresentationError, cartan_poincare, presentation_for
from .geometry import Case, Space, codim_orbit, dim_orbit
from .polyring import ONE, MPoly, mono
from .qcomb import gauss_product, gauss_sum, qbinom_at, qbinom_oracle, rescale_identity_check
from .weights import WeightBox, class_range, closure_check

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Check:
    name: str
    case: str
    n: int | None = None
    m: int | None = None
    p: int | None = None
    witness: dict | None = None
    detail: dict | None = None
    skipped: bool = False

    @property
    def status(self) -> str:
        if self.witness is not None:
            return FAIL
        return SKIPPED if self.skipped else PASS

    def sort_key(self):
        def k(x):
            return -1 if x is None else x

        return (self.case, k(self.n), k(self.m), k(self.p), self.name)

    def to_dict(self) -> dict:
        d = asdict(self)
        del d["skipped"]
        d["status"] = self.status
        return d


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def summary(self) -> dict[str, int]:
        counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for c in self.checks:
            counts[c.status] += 1
        counts["total"] = len(self.checks)
        return counts

    @property
    def ok(self) -> bool:
        return self.summary[FAIL] == 0

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def to_dict(self) -> dict:
        # elapsed time is left out so the payload is byte-deterministic
        return {"summary": self.summary, "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            where = _where(c)
            line = f"{c.status.upper():7s} {c.name:16s} {where}"
            if c.witness is not None:
                line += f"  witness={json.dumps(c.witness, sort_keys=True)}"
            elif c.detail:
                line += f"  {json.dumps(c.detail, sort_keys=True)}"
            lines.append(line)
        s = self.summary
        lines.append(f"{s['total']} checks: {s[PASS]} passed, {s[FAIL]} failed, {s[SKIPPED]} skipped")
        return "\n".join(lines)


def _where(c: Check) -> str:
    parts = [c.case]
    for key in ("m", "n", "p"):
        v = getattr(c, key)
        if v is not None:
            parts.append(f"{key}={v}")
    return " ".join(parts)


def _check(name: str, space: Space, p: int | None, **kw) -> Check:
    return Check(name, space.case.value, space.n, space.m, p, **kw)


def _poly_witness(lhs: MPoly, rhs: MPoly) -> dict | None:
    diff = lhs.first_difference(rhs)
    if diff is None:
        return None
    e, a, b = diff
    return {"exponent": list(e), "lhs": a, "rhs": b}


def _slots(poly: MPoly) -> dict[str, int]:
    return {str(e[0]): c for e, c in poly.items()}


def in_vanishing_regime(space: Space, p: int) -> bool:
    """Whether the connecting maps of the orbit LES all vanish."""
    if space.case is not Case.SYMMETRIC:
        return True
    return (space.n - p) % 2 == 0 or p == 1


# -- individual checks ----------------------------------------------------------


def check_degeneration(space: Space, p: int) -> Check:
    lhs = inv.cdr_intro_form(space, p).substitute({"w": "q"})
    return _check("degeneration", space, p, witness=_poly_witness(lhs, inv.bm_poincare(space, p)))


def check_reindex(space: Space, p: int) -> Check:
    if p == space.p_max:
        return _check("reindex", space, p, skipped=True, detail={"reason": "dense orbit"})
    d = space.dim
    lhs = inv.cdr_section_form(space, p).reverse("q", d).reverse("w", d)
    return _check("reindex", space, p, witness=_poly_witness(lhs, inv.cdr_intro_form(space, p)))


def check_bm_forms(space: Space, p: int) -> Check:
    lhs = inv.bm_poincare(space, p)
    return _check("bm-forms", space, p, witness=_poly_witness(lhs, inv.bm_poincare_section(space, p)))


def check_rho_vanishing(space: Space, p: int) -> Check:
    for (i, j, _), c in inv.cdr_intro_form(space, p).items():
        if i > j:
            return _check("rho-vanishing", space, p, witness={"exponent": [i, j, 0], "coeff": c})
    return _check("rho-vanishing", space, p)


def les_defect(space: Space, p: int) -> MPoly:
    """Delta with Delta_i = h^{2d-i}(O_p) - h^BM_i(p) - h^BM_{i-1}(p-1)."""
    reversed_coh = inv.orbit_cohomology(space, p).reverse("q", 2 * dim_orbit(space, p))
    return reversed_coh - inv.bm_poincare(space, p) - inv.bm_poincare(space, p - 1).shift(1)


def recover_map_ranks(delta: MPoly) -> dict[int, int] | None:
    """Ranks r_i of the connecting maps from Delta_i = -r_i - r_{i-1}.

    Returns None when no nonnegative solution exists.
    """
    if not delta:
        return {}
    lo, hi = delta.support_range("q")
    ranks: dict[int, int] = {}
    prev = 0
    for i in range(lo, hi + 1):
        r = -delta.coeff(i) - prev
        if r < 0:
            return None
        if r:
            ranks[i] = r
        prev = r
    return ranks if prev == 0 else None


def check_les(space: Space, p: int) -> Check:
    if p < 1:
        return _check("les", space, p, skipped=True, detail={"reason": "needs p >= 1"})
    delta = les_defect(space, p)
    if in_vanishing_regime(space, p):
        witness = None
        if delta:
            (e, c), = list(delta.items())[:1]
            witness = {"exponent": list(e), "delta": c}
        return _check("les", space, p, witness=witness, detail={"regime": "identity"})
    positive = [(e, c) for e, c in delta.items() if c > 0]
    if positive:
        e, c = positive[0]
        return _check("les", space, p, witness={"exponent": list(e), "delta": c})
    ranks = recover_map_ranks(delta)
    if ranks is None:
        return _check("les", space, p, witness={"delta": _slots(delta), "reason": "no nonnegative map ranks"})
    detail = {
        "regime": "inequality",
        "delta": _slots(delta),
        "map_ranks": {str(i): r for i, r in ranks.items()},
    }
    return _check("les", space, p, detail=detail)


def check_totals(space: Space, p: int) -> Check:
    if p < 1:
        return _check("totals", space, p, skipped=True, detail={"reason": "needs p >= 1"})
    btot = inv.total_betti(space, p)
    poly_total = inv.orbit_cohomology(space, p).eval_all_one()
    if btot != poly_total:
        return _check("totals", space, p, witness={"btot": btot, "orbit_cohomology_total": poly_total})
    n_sum = inv.np_total(space, p) + inv.np_total(space, p - 1)
    detail = {"np_sum": n_sum, "btot": btot}
    if in_vanishing_regime(space, p):
        witness = None if n_sum == btot else detail
        return _check("totals", space, p, witness=witness, detail={"regime": "identity"})
    detail["regime"] = "inequality"
    witness = None if n_sum >= btot else detail
    return _check("totals", space, p, witness=witness, detail=detail)


def _section_or_dense(space: Space, p: int) -> MPoly:
    # the dense orbit contributes O_X itself: de Rham degree 0, local cohomology index 0
    return ONE if p == space.p_max else inv.cdr_section_form(space, p)


def locally_closed_form(space: Space, p: int) -> MPoly:
    g = _section_or_dense(space, p) + inv.cdr_section_form(space, p - 1).shift(0, -1)
    return g.substitute({"w": "q"}).shift(-2 * codim_orbit(space, p))


def check_locally_closed(space: Space, p: int) -> Check:
    if p < 1:
        return _check("locally-closed", space, p, skipped=True, detail={"reason": "needs p >= 1"})
    lhs = locally_closed_form(space, p)
    rhs = inv.orbit_cohomology(space, p)
    if in_vanishing_regime(space, p):
        return _check("locally-closed", space, p, witness=_poly_witness(lhs, rhs), detail={"regime": "identity"})
    excess = lhs - rhs
    negative = [(e, c) for e, c in excess.items() if c < 0]
    if negative:
        e, c = negative[0]
        return _check("locally-closed", space, p, witness={"exponent": list(e), "excess": c})
    return _check(
        "locally-closed", space, p, detail={"regime": "inequality", "strict": _slots(excess)}
    )


SAME_WEIGHT_SLOTS = ((12, 4, 16), (9, 6, 16))


def check_weight_suite(m: int, n: int, p: int) -> Check:
    space = Space.general(m, n)
    if p >= n:
        return _check("weights", space, p, skipped=True, detail={"reason": "dense orbit"})
    wbm = inv.weight_bm_general(m, n, p)
    worb = inv.weight_orbit_general(m, n, p)
    tri = inv.weight_cdr_trivariate(m, n, p)
    lowest = inv.weight_bm_lowest_piece(m, n, p).substitute({"w": 1})
    ih = inv.ih_poincare(space, p).shift(2 * p * m)
    items: list[tuple[str, MPoly, MPoly]] = [
        ("bm-w1", wbm.substitute({"w": 1}), inv.bm_poincare(space, p)),
        ("orbit-w1", worb.substitute({"w": 1}), inv.orbit_cohomology(space, p)),
        ("trivariate-t1", tri.substitute({"t": 1}), inv.cdr_section_form(space, p)),
        ("lowest-piece", lowest, qbinom_at(n, p, mono(2)).shift(2 * p * m)),
        ("lowest-vs-ih", lowest, ih),
        ("tate-pipeline", inv.trivariate_to_weight_bm(tri, m, n), wbm),
    ]
    for label, lhs, rhs in items:
        w = _poly_witness(lhs, rhs)
        if w is not None:
            w["item"] = label
            return _check("weights", space, p, witness=w)
    for label, poly in (("bm", wbm), ("orbit", worb)):
        odd = [e for e, _ in poly.items() if e[1] % 2]
        if odd:
            return _check("weights", space, p, witness={"item": f"even-weights-{label}", "exponent": list(odd[0])})
    detail = None
    if (m, n, p) == (4, 4, 2):
        coeffs = {str(list(e)): tri.coeff(*e) for e in SAME_WEIGHT_SLOTS}
        if any(c != 1 for c in coeffs.values()):
            return _check("weights", space, p, witness={"item": "same-weight-slots", "coeffs": coeffs})
        detail = {"same_weight_slots": coeffs}
    return _check("weights", space, p, detail=detail)


def check_cartan(space: Space, p: int) -> Check:
    try:
        lhs = cartan_poincare(presentation_for(space, p))
    except PresentationError as exc:
        return _check("cartan", space, p, witness={"error": str(exc)})
    return _check("cartan", space, p, witness=_poly_witness(lhs, inv.orbit_cohomology(space, p)))


def check_closure(case: Case, n: int, p: int, radius: int | None = None) -> Check:
    radius = n + 3 if radius is None else radius
    report = closure_check(case, p, WeightBox.around(case, n, radius))
    detail = {"checked": report.checked, "box": [report.box.lo, report.box.hi]}
    if report.above_p:
        detail["above_p"] = len(report.above_p)
    witness = None
    if report.violations:
        witness = {"violation": report.violations[0], "count": len(report.violations)}
    elif report.unclassified:
        witness = {"unclassified": report.unclassified[0], "count": len(report.unclassified)}
    return Check("closure", case.value, n, None, p, witness=witness, detail=detail)


# -- q-binomial suite -----------------------------------------------------------

QCOMB_ORACLE_MAX = 12
QCOMB_RESCALE_MAX = 10
QCOMB_RESCALE_STEPS = (1, -1, 2, -2, 4, -4)
QCOMB_GAUSS_MAX = 10
GAUSS_A = (("q", mono(1)), ("q^2", mono(2)), ("q^4", mono(4)))
GAUSS_B = (("w", mono(0, 1)), ("qw", mono(1, 1)), ("wt", mono(0, 1, 1)))


def qcomb_checks() -> list[Check]:
    out = []
    for a in range(QCOMB_ORACLE_MAX + 1):
        for b in range(a + 1):
            w = _poly_witness(qbinom_at(a, b, mono(1)), qbinom_oracle(a, b))
            if w is not None:
                w["b"] = b
                break
        out.append(Check("oracle", "qcomb", a, witness=w))
    for a in range(QCOMB_RESCALE_MAX + 1):
        bad = [
            {"b": b, "step": s}
            for s in QCOMB_RESCALE_STEPS
            for b in range(a + 1)
            if not rescale_identity_check(a, b, s)
        ]
        out.append(Check("rescale", "qcomb", a, witness=bad[0] if bad else None))
    for n in range(QCOMB_GAUSS_MAX + 1):
        witness = None
        for an, a in GAUSS_A:
            for bn, b in GAUSS_B:
                w = _poly_witness(gauss_product(n, a, b), gauss_sum(n, a, b))
                if w is not None and witness is None:
                    witness = {**w, "a": an, "b": bn}
        out.append(Check("gauss-binomial", "qcomb", n, witness=witness))
    return out


# -- sweeps ------------------------------------------------------------------------

SPACE_SUITES: dict[str, Callable[[Space, int], Check]] = {
    "degeneration": check_degeneration,
    "reindex": check_reindex,
    "bm-forms": check_bm_forms,
    "les": check_les,
    "rho": check_rho_vanishing,
    "totals": check_totals,
    "locally-closed": check_locally_closed,
    "cartan": check_cartan,
}

SUITES = tuple(SPACE_SUITES) + ("weights", "qcomb", "closure")

CLOSURE_MAX_N = {Case.GENERAL: 5, Case.SKEW: 6, Case.SYMMETRIC: 5}


def spaces_within(max_n: int, max_m: int) -> Iterable[Space]:
    for n in range(1, max_n + 1):
        for m in range(n, max_m + 1):
            yield Space.general(m, n)
    for n in range(2, max_n + 1):
        yield Space.skew(n)
    for n in range(1, max_n + 1):
        yield Space.symmetric(n)


def resolve_suites(suites) -> list[str]:
    if suites is None or suites == "all":
        return list(SUITES)
    if isinstance(suites, str):
        suites = [suites]
    chosen = []
    for s in suites:
        if s == "all":
            return list(SUITES)
        if s not in SUITES:
            raise ValueError(f"unknown suite {s!r}; expected all or one of {', '.join(SUITES)}")
        if s not in chosen:
            chosen.append(s)
    return chosen


def run_all(max_n: int, max_m: int, suites=None) -> VerificationReport:
    if max_n < 1 or max_m < 1:
        raise ValueError(f"bounds must be >= 1, got max_n={max_n}, max_m={max_m}")
    chosen = resolve_suites(suites)
    start = time.perf_counter()
    checks: list[Check] = []
    spaces = list(spaces_within(max_n, max_m))
    for name in chosen:
        fn = SPACE_SUITES.get(name)
        if fn is None:
            continue
        for space in spaces:
            for p in space.orbits():
                checks.append(fn(space, p))
    if "weights" in chosen:
        for space in spaces:
            if space.case is Case.GENERAL:
                for p in space.orbits():
                    checks.append(check_weight_suite(space.m, space.n, p))
    if "qcomb" in chosen:
        checks.extend(qcomb_checks())
    if "closure" in chosen:
        for case, cap in CLOSURE_MAX_N.items():
            for n in range(1, min(max_n, cap) + 1):
                if case is Case.SKEW and n % 2:
                    continue
                for p in class_range(case, n):
                    checks.append(check_closure(case, n, p))
    checks.sort(key=Check.sort_key)
    return VerificationReport(checks, time.perf_counter() - start)
