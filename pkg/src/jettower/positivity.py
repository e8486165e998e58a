"""Weighted line bundles on the tower and the Morse-inequality quantity on Z_2.

For nef F, G on an n-dimensional variety, (F - G)^m has sections for large m
once F^n - n F^{n-1} G > 0.  Here the variety is the divisor Z_2 in X_2
(n = 8), so the quantity is the integral of (F^8 - 8 F^7 G) [Z_2] over X_2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .charclass import HypersurfaceData, chern_form_to_poly
from .core import DegreePoly, GradedClass, GradedRing, Number, as_fraction
from .tower import Tower, tower_for

ORDERINGS = ("standard", "reversed")
EXPANSIONS = ("exact", "capped")

# Terms of the formal expansion whose u_2-degree exceeds this are discarded
# under the "capped" expansion; see MorseReport.expansion.
U2_CAP = 5


@dataclass(frozen=True)
class WeightTuple:
    """sum_j a_j u_j + h_twist h + delta_twist K_X, plus delta K_X if ``delta``.

    ``delta`` marks a symbolic multiple of K_X = -c_1; the Morse quantity is
    linear in it.
    """

    a: tuple[int, ...] = ()
    h_twist: Fraction = Fraction(0)
    delta_twist: Fraction = Fraction(0)
    delta: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "h_twist", as_fraction(self.h_twist))
        object.__setattr__(self, "delta_twist", as_fraction(self.delta_twist))

    def __add__(self, other: "WeightTuple") -> "WeightTuple":
        n = max(len(self.a), len(other.a))
        a = tuple(
            (self.a[i] if i < len(self.a) else 0) + (other.a[i] if i < len(other.a) else 0)
            for i in range(n)
        )
        if self.delta and other.delta:
            raise ValueError("at most one symbolic delta summand")
        return WeightTuple(
            a, self.h_twist + other.h_twist, self.delta_twist + other.delta_twist, self.delta or other.delta
        )

    def __str__(self) -> str:
        parts = [f"{c}*u{j}" for j, c in enumerate(self.a, start=1) if c]
        if self.h_twist:
            parts.append(f"{self.h_twist}*h")
        if self.delta_twist:
            parts.append(f"{self.delta_twist}*K")
        if self.delta:
            parts.append("delta*K")
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {
            "a": list(self.a),
            "h_twist": str(self.h_twist),
            "delta_twist": str(self.delta_twist),
            "delta": self.delta,
        }


def weight_to_b(a: WeightTuple | Sequence[int]) -> tuple[int, ...]:
    a = a.a if isinstance(a, WeightTuple) else tuple(a)
    out, s = [], 0
    for x in a:
        s += x
        out.append(s)
    return tuple(out)


def is_effective_weight(a: WeightTuple | Sequence[int]) -> bool:
    return all(b >= 0 for b in weight_to_b(a))


@dataclass(frozen=True)
class NefWeights:
    weights: WeightTuple
    ell: int  # h-twist that makes O_{X_k}(a) (x) pi^* O_X(ell) nef


def nef_recursion(p: int, k: int, variant: str = "B") -> NefWeights:
    """Unroll L_k = O_{X_k}(p^2+1) (x) pi^* L_{k-1}^{p^2+2} with L_0 = O_X(2p) (A) or O_X (B).

    The result describes O_{X_k}(1) (x) pi^* L_{k-1}: weight 1 on u_k, the
    unrolled weights below it, and for variant A the h-twist carried from L_0.
    """
    if p < 1 or k < 1:
        raise ValueError("p and k must be positive")
    if variant not in ("A", "B"):
        raise ValueError("variant must be 'A' or 'B'")
    # weights of L_j on u_1..u_j and its h-twist
    a: list[int] = []
    h = 2 * p if variant == "A" else 0
    for _ in range(1, k):
        a = [x * (p * p + 2) for x in a] + [p * p + 1]
        h *= p * p + 2
    return NefWeights(WeightTuple(tuple(a) + (1,), h), 2 * p * (p * p + 2) ** (k - 1))


@dataclass(frozen=True)
class MorseReport:
    F: WeightTuple
    G: WeightTuple
    d: int | None
    ordering_used: str
    expansion: str
    chern_form: dict[str, Fraction] | None  # symbolic mode, delta-free part
    chern_form_delta: dict[str, Fraction] | None  # symbolic mode, coefficient of delta
    value: Fraction | None  # numeric mode without delta
    degree_poly: DegreePoly | None
    threshold: int | None = None
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        def form(f):
            return None if f is None else {k: str(v) for k, v in f.items()}

        return {
            "F": self.F.to_dict(),
            "G": self.G.to_dict(),
            "d": self.d,
            "ordering_used": self.ordering_used,
            "expansion": self.expansion,
            "chern_form": form(self.chern_form),
            "chern_form_delta": form(self.chern_form_delta),
            "value": None if self.value is None else str(self.value),
            "degree_poly": None if self.degree_poly is None else str(self.degree_poly),
            "threshold": self.threshold,
            "notes": list(self.notes),
        }


CHERN_LABELS = ("h^3", "h^2*c1", "h*c1^2", "h*c2", "c1^3", "c1*c2", "c3")


def _realize(w: WeightTuple, tower: Tower, ring: GradedRing, ordering: str) -> tuple[GradedClass, GradedClass]:
    """(fixed part, coefficient of delta) of the class of ``w`` in ``ring``."""
    k = len(w.a)
    if k > 2:
        raise ValueError("only weights on u_1, u_2 are supported")
    us = [ring.pullback(tower.u(j)) for j in range(1, 3)]
    K = ring.pullback(tower.canonical())
    x = ring.gen("h") * w.h_twist + K * w.delta_twist
    for j, c in enumerate(w.a):
        target = j if ordering == "standard" else k - 1 - j
        x = x + us[target] * c
    return x, (K if w.delta else ring.zero())


def _cut(x: GradedClass, cap: int) -> dict:
    t = x.ring.table
    return {m: c for m, c in x.terms.items() if t.level_degree(m, 2) <= cap}


def _integrate(tower: Tower, terms: dict):
    return tower.integrate_total(GradedClass(tower.ring, terms))


def _form_dict(form: GradedClass) -> dict[str, Fraction]:
    out = {}
    for lab in CHERN_LABELS:
        out[lab] = form.coefficient(lab)
    return out


def morse_quantity(
    F: WeightTuple,
    G: WeightTuple,
    d: int | None = None,
    ordering: str = "standard",
    expansion: str = "exact",
    convention: str = "printed",
    Z: bool = True,
) -> MorseReport:
    """Integral of (F^8 - 8 F^7 G) [Z_2] over X_2.

    ``expansion="exact"`` is the intersection number.  ``"capped"`` first
    expands the product formally in u_1, u_2, h, c_1 and drops every term of
    u_2-degree above 5 before reducing; this is the bookkeeping that reproduces
    the published Morse polynomial.
    """
    if ordering not in ORDERINGS:
        raise ValueError(f"ordering must be one of {ORDERINGS}")
    if expansion not in EXPANSIONS:
        raise ValueError(f"expansion must be one of {EXPANSIONS}")
    if F.delta:
        raise ValueError("F cannot carry a symbolic delta")
    tower = tower_for(d, convention)
    ring = GradedRing(tower.ring.table) if expansion == "capped" else tower.ring
    f, _ = _realize(F, tower, ring, ordering)
    g0, g1 = _realize(G, tower, ring, ordering)
    z = ring.pullback(tower.z2_class().z) if Z else ring.one()
    f7 = f**7
    base = f7 * (f - g0 * 8) * z
    lin = f7 * g1 * (-8) * z
    cap = U2_CAP if expansion == "capped" else 10**6
    q0 = _integrate(tower, _cut(base, cap))
    q1 = _integrate(tower, _cut(lin, cap)) if G.delta else None
    dd = DegreePoly.delta()
    if d is None:
        poly = chern_form_to_poly(q0)
        if q1 is not None:
            poly = poly + dd * chern_form_to_poly(q1)
        return MorseReport(
            F, G, None, ordering, expansion, _form_dict(q0), None if q1 is None else _form_dict(q1), None, poly
        )
    value = None if G.delta else q0
    poly = DegreePoly.const(q0) + (dd * q1 if q1 is not None else DegreePoly())
    return MorseReport(F, G, d, ordering, expansion, None, None, value, poly)


def morse_poly_by_interpolation(
    F: WeightTuple, G: WeightTuple, samples: Sequence[int] = tuple(range(20, 31)), degree_bound: int = 10, **kw
) -> DegreePoly:
    """Degree polynomial from numeric towers at the sample degrees."""
    from .core import interpolate

    parts = []
    for j in (0, 1) if G.delta else (0,):
        pts = []
        for d in samples:
            rep = morse_quantity(F, G, d, **kw)
            pts.append((d, rep.degree_poly.coefficient(0, j)))
        parts.append(interpolate(pts, degree_bound))
    out = parts[0]
    if len(parts) > 1:
        out = out + DegreePoly.delta() * parts[1]
    return out


# ---------------------------------------------------------------------------
# thresholds


def _root_bound(poly: DegreePoly) -> int:
    """An integer beyond which a univariate polynomial with positive lead is positive."""
    n = poly.degree()
    lead = poly.coefficient(n)
    if n < 0 or lead <= 0:
        raise ValueError(f"{poly} is not eventually positive")
    m = max((abs(poly.coefficient(i) / lead) for i in range(n)), default=Fraction(0))
    return int(m) + 2


def threshold_search(poly: DegreePoly, window: int = 50) -> int:
    """Least d >= 1 with poly > 0 on [d, infinity) (confirmed on [d, d+window])."""
    if poly.part(1) != DegreePoly():
        raise ValueError("polynomial depends on delta")
    bound = _root_bound(poly)
    last_bad = 0
    for d in range(1, bound + 1):
        if poly(d) <= 0:
            last_bad = d
    d0 = last_bad + 1
    assert all(poly(x) > 0 for x in range(d0, d0 + window + 1))
    return d0


POLE_ORDER = 7
DIFFERENTIATION_BOUND = 12


def delta_lower_bound(d: int, pole_order: int = POLE_ORDER, bound: int = DIFFERENTIATION_BOUND) -> Fraction:
    """Smallest delta with pole_order*bound*m - delta*m*(d-5) <= 0 (strictness is the caller's)."""
    if d <= 5:
        raise ValueError("needs d > 5")
    return Fraction(pole_order * bound, d - 5)


def alpha_feasible(alpha: DegreePoly, d: int, **kw) -> bool:
    """Is there delta > 84/(d-5) with alpha(d, delta) > 0?"""
    if not alpha.is_linear_in_delta():
        raise ValueError("alpha is not linear in delta")
    d0 = delta_lower_bound(d, **kw)
    A = alpha.part(0)(d)
    B = alpha.part(1)(d, 1)
    if B > 0:
        return True
    if B == 0:
        return A > 0
    return A + B * d0 > 0


def effective_bound(alpha: DegreePoly, **kw) -> int:
    """Least d > 5 such that every d' >= d admits an admissible delta."""
    if not alpha.is_linear_in_delta():
        raise ValueError("alpha is not linear in delta")
    A, B = alpha.part(0), alpha.part(1)
    num = kw.get("pole_order", POLE_ORDER) * kw.get("bound", DIFFERENTIATION_BOUND)
    if B.degree() >= 0 and B.coefficient(B.degree()) > 0:
        limit = _root_bound(B)
    else:
        # B(d) < 0 from some point on; then feasibility is (d-5) A(d) + 84 B(d) > 0
        edge = (DegreePoly.d() - 5) * A + B * num
        limit = max(_root_bound(edge), _root_bound(-B) if B.degree() >= 0 else 6)
    last_bad = 5
    for d in range(6, limit + 1):
        if not alpha_feasible(alpha, d, **kw):
            last_bad = d
    return last_bad + 1
