"""Chern classes, Chern characters and Todd classes over a :class:`GradedRing`.

Conversions go through power sums: ``ch_k = p_k / k!`` where ``p_k`` is the
k-th power sum of the Chern roots, related to the elementary symmetric
functions ``c_k`` by Newton's identities.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .core import DegreePoly, GeneratorTable, GradedClass, GradedRing, Number, as_fraction


@dataclass(frozen=True)
class BundleData:
    rank: int
    chern: tuple[GradedClass, ...]  # c_1 .. c_N

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        for i, c in enumerate(self.chern, start=1):
            if not c.is_homogeneous(i):
                raise ValueError(f"c_{i} is not homogeneous of degree {i}: {c}")

    @property
    def ring(self) -> GradedRing:
        return self.chern[0].ring

    def c(self, i: int) -> GradedClass:
        if i == 0:
            return self.ring.one()
        if i <= len(self.chern):
            return self.chern[i - 1]
        return self.ring.zero()

    def total(self) -> GradedClass:
        out = self.ring.one()
        for c in self.chern:
            out = out + c
        return out

    def in_ring(self, ring: GradedRing) -> "BundleData":
        return BundleData(self.rank, tuple(ring.pullback(c) for c in self.chern))


@dataclass(frozen=True)
class ChernCharacter:
    components: tuple[GradedClass, ...]  # ch_0 .. ch_N

    def __post_init__(self) -> None:
        for i, c in enumerate(self.components):
            if not c.is_homogeneous(i):
                raise ValueError(f"ch_{i} is not homogeneous of degree {i}")

    @property
    def ring(self) -> GradedRing:
        return self.components[0].ring

    @property
    def top(self) -> int:
        return len(self.components) - 1

    def __getitem__(self, k: int) -> GradedClass:
        if k < len(self.components):
            return self.components[k]
        return self.ring.zero()

    def total(self) -> GradedClass:
        out = self.ring.zero()
        for c in self.components:
            out = out + c
        return out

    def truncated(self, k: int) -> "ChernCharacter":
        """Drop the components above degree ``k`` (kept as zeros up to ``top``)."""
        z = self.ring.zero()
        return ChernCharacter(tuple(c if i <= k else z for i, c in enumerate(self.components)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChernCharacter):
            return NotImplemented
        n = max(self.top, other.top)
        return all(self[k] == other[k] for k in range(n + 1))

    def __hash__(self) -> int:
        return hash(tuple(self.components))


def _top(ring: GradedRing, top: int | None) -> int:
    return ring.table.truncation if top is None else top


def chern_to_ch(E: BundleData, top: int | None = None) -> ChernCharacter:
    ring = E.ring
    n = _top(ring, top)
    e = [E.c(k) for k in range(n + 1)]
    p: list[GradedClass] = [ring.scalar(E.rank)]
    for k in range(1, n + 1):
        s = e[k] * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            s = s + e[i] * p[k - i] * (-1) ** (i - 1)
        p.append(s)
    return ChernCharacter(tuple(p[k] / factorial(k) for k in range(n + 1)))


def ch_to_chern(ch: ChernCharacter) -> BundleData:
    ring = ch.ring
    c0 = ch[0]
    if set(c0.terms) - {ring.table.unit()}:
        raise ValueError("ch_0 is not a scalar")
    rank = c0.constant()
    if rank.denominator != 1 or rank < 0:
        raise ValueError(f"ch_0 = {rank} is not a nonnegative integer")
    p = [ch[k] * factorial(k) for k in range(ch.top + 1)]
    e = [ring.one()]
    for k in range(1, ch.top + 1):
        s = ring.zero()
        for i in range(1, k + 1):
            s = s + e[k - i] * p[i] * (-1) ** (i - 1)
        e.append(s / k)
    return BundleData(int(rank), tuple(e[1:]))


def _same(x: ChernCharacter, y: ChernCharacter) -> None:
    if x.ring.table != y.ring.table:
        from .core import ContextMismatch

        raise ContextMismatch("Chern characters over different rings")


def ch_sum(x: ChernCharacter, y: ChernCharacter) -> ChernCharacter:
    _same(x, y)
    n = max(x.top, y.top)
    return ChernCharacter(tuple(x[k] + y[k] for k in range(n + 1)))


def ch_difference(x: ChernCharacter, y: ChernCharacter) -> ChernCharacter:
    return ch_sum(x, ch_scale(y, -1))


def ch_scale(x: ChernCharacter, q: Number) -> ChernCharacter:
    return ChernCharacter(tuple(c * as_fraction(q) for c in x.components))


def ch_tensor(x: ChernCharacter, y: ChernCharacter, top: int | None = None) -> ChernCharacter:
    _same(x, y)
    n = max(x.top, y.top) if top is None else top
    return ChernCharacter(
        tuple(
            sum((x[i] * y[k - i] for i in range(k + 1)), x.ring.zero()) for k in range(n + 1)
        )
    )


def ch_dual(x: ChernCharacter) -> ChernCharacter:
    return ChernCharacter(tuple(c * (-1) ** k for k, c in enumerate(x.components)))


def line_bundle(c1: GradedClass, top: int | None = None) -> BundleData:
    n = _top(c1.ring, top)
    z = c1.ring.zero()
    return BundleData(1, (c1,) + (z,) * (n - 1))


def todd(E: BundleData) -> GradedClass:
    """Todd class through degree 3."""
    c1, c2 = E.c(1), E.c(2)
    return E.ring.one() + c1 / 2 + (c1 * c1 + c2) / 12 + c1 * c2 / 24


def whitney_sum(E: BundleData, F: BundleData) -> BundleData:
    """Chern classes of ``E + F`` from the product of total Chern classes."""
    tot = E.total() * F.total()
    n = min(E.rank + F.rank, E.ring.table.truncation)
    return BundleData(E.rank + F.rank, tuple(tot.component(k) for k in range(1, n + 1)))


# ---------------------------------------------------------------------------
# hypersurfaces in P^4

SYMBOLIC_BASE = (("h", 1), ("c1", 1), ("c2", 2), ("c3", 3))
NUMERIC_BASE = (("h", 1),)


def chern_polys() -> tuple[DegreePoly, DegreePoly, DegreePoly]:
    """Coefficients of h, h^2, h^3 in c_1, c_2, c_3 of a degree-d hypersurface."""
    d = DegreePoly.d()
    return (-(d - 5), d * d - 5 * d + 10, -(d**3 - 5 * d * d + 10 * d - 10))


@dataclass(frozen=True)
class HypersurfaceData:
    """A smooth hypersurface X of degree d in P^4 (``d=None`` keeps c_i symbolic).

    In symbolic mode the base ring has independent generators h, c1, c2, c3;
    in numeric mode it has h alone and ``c_i`` are fixed multiples of ``h^i``.
    """

    d: int | None = None

    def __post_init__(self) -> None:
        if self.d is not None and self.d < 1:
            raise ValueError("degree must be positive")

    @property
    def symbolic(self) -> bool:
        return self.d is None

    @property
    def generators(self) -> tuple[tuple[str, int], ...]:
        return SYMBOLIC_BASE if self.symbolic else NUMERIC_BASE

    def base_ring(self) -> GradedRing:
        return GradedRing(GeneratorTable.build(self.generators, 3))

    def chern(self, ring: GradedRing) -> tuple[GradedClass, GradedClass, GradedClass]:
        if self.symbolic:
            return ring.gens("c1", "c2", "c3")
        h = ring.gen("h")
        polys = chern_polys()
        return tuple(h**i * polys[i - 1](self.d) for i in (1, 2, 3))  # type: ignore[return-value]

    def tangent_bundle(self, ring: GradedRing) -> BundleData:
        return BundleData(3, self.chern(ring))

    def integrate(self, x: GradedClass) -> Fraction | GradedClass:
        """Degree-3 part on the point class: a number (numeric d) or a Chern form."""
        top = x.component(3)
        if self.symbolic:
            base = self.base_ring()
            return base.pullback(top)
        if set(top.terms) - {_h3(top.ring)}:
            raise ValueError(f"numeric top class must be a multiple of h^3, got {top}")
        return top.coefficient(_h3(top.ring)) * self.d


def _h3(ring: GradedRing):
    e = list(ring.table.unit())
    e[ring.table.index("h")] = 3
    return tuple(e)


def hypersurface_data(d: int | None = None) -> HypersurfaceData:
    return HypersurfaceData(d)


def chern_form_to_poly(form: GradedClass) -> DegreePoly:
    """Evaluate a degree-3 class in h, c1, c2, c3 on a degree-d hypersurface."""
    table = form.ring.table
    polys = chern_polys()
    names = ("h", "c1", "c2", "c3")
    out = DegreePoly()
    for mono, coeff in form.terms.items():
        if table.degree(mono) != 3:
            raise ValueError(f"monomial {table.format_monomial(mono)} is not of degree 3")
        term = DegreePoly.d() * coeff  # h^3 = d
        for name, e in zip(table.names, mono):
            if e and name not in names:
                raise ValueError(f"unexpected generator {name} in a Chern form")
            if e and name != "h":
                term = term * polys[names.index(name) - 1] ** e
        out = out + term
    return out


def chern_form_monomials(ring: GradedRing) -> list[tuple[str, GradedClass]]:
    """The seven degree-3 monomials h^3, h^2c1, hc1^2, hc2, c1^3, c1c2, c3."""
    labels = ("h^3", "h^2*c1", "h*c1^2", "h*c2", "c1^3", "c1*c2", "c3")
    return [(lab, ring.parse(lab)) for lab in labels]


def euler_characteristic(d: int) -> int:
    """Topological Euler characteristic of a degree-d hypersurface in P^4."""
    val = chern_polys()[2](d) * d
    return int(val)


def substitute_numeric(x: GradedClass, d: int, target: GradedRing | None = None) -> GradedClass:
    """Map a class over (h, c1, c2, c3, ...) to the numeric ring with c_i = c_i(X_d)."""
    hs = HypersurfaceData(d)
    if target is None:
        names = [n for n in x.ring.table.names if n not in ("c1", "c2", "c3")]
        src = x.ring.table
        gens = [(n, src.degrees[src.index(n)], src.levels[src.index(n)]) for n in names]
        caps = dict(src.caps)
        target = GradedRing(GeneratorTable.build(gens, src.truncation, caps))
    c = hs.chern(target)
    return x.substitute(target, {"c1": c[0], "c2": c[1], "c3": c[2]})
