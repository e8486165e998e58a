"""Grassmannian-bundle towers X <- X_1 = G(p, V_0) <- X_2 = G(p, V_1).

Each floor adjoins the Chern classes ``a_1..a_p`` of the tautological
subbundle, solves the Whitney identities for the quotient classes and turns
the vanishing of the quotient classes above its rank into rewrite rules.  The
rule set is completed by critical pairs so that normal forms are unique; the
standard monomials then form a basis of the cohomology of the floor as a free
module over the floor below, and fiber integration reads off the coefficient
of the unique standard monomial of top fiber degree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterable, Sequence

from .charclass import (
    BundleData,
    HypersurfaceData,
    ch_dual,
    ch_sum,
    ch_tensor,
    ch_to_chern,
    chern_to_ch,
    ch_scale,
)
from .core import GeneratorTable, GradedClass, GradedRing, Monomial, RewriteRule

MAX_RANK = 6
MAX_P = 3

DEFAULT_NAMES = {1: ("a", "b"), 2: ("d", "e")}


class UnsupportedLevel(ValueError):
    pass


class ConfluenceError(RuntimeError):
    """The completed rule set does not give a free module of the expected rank."""


def dim_Xk(n: int, r: int, p: int, k: int) -> int:
    """Dimension of the k-th floor over an n-fold with a rank-r directed bundle."""
    return n + sum(p**j * (r - p) for j in range(1, k + 1))


def rank_Vk(r: int, p: int, k: int) -> int:
    return p**k * (r - p) + p


@dataclass(eq=False)
class TowerLevel:
    index: int
    p: int
    V: BundleData
    base: GradedRing
    ring: GradedRing
    free_ring: GradedRing
    sub_names: tuple[str, ...]
    quotient: tuple[GradedClass, ...]
    conditions: tuple[GradedClass, ...]
    relations: tuple[RewriteRule, ...]
    fiber_basis: tuple[Monomial, ...]
    top: Monomial
    top_value: Fraction
    quot_names: tuple[str, ...] = ()
    below: "TowerLevel | None" = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return self.V.rank

    @property
    def fiber_dim(self) -> int:
        return self.p * (self.rank - self.p)

    @property
    def dim(self) -> int:
        return self.ring.table.truncation

    def sub(self, i: int) -> GradedClass:
        if i == 0:
            return self.ring.one()
        if i > self.p:
            return self.ring.zero()
        return self.ring.gen(self.sub_names[i - 1])

    def quot(self, j: int) -> GradedClass:
        if j == 0:
            return self.ring.one()
        if j > len(self.quotient):
            return self.ring.zero()
        return self.quotient[j - 1]

    @property
    def u(self) -> GradedClass:
        """First Chern class of O(1) = (det S)^{-1}."""
        return -self.sub(1)

    def S(self, ring: GradedRing | None = None) -> BundleData:
        ring = ring or self.ring
        return BundleData(self.p, tuple(ring.gen(n) for n in self.sub_names))

    def fiber_indices(self) -> tuple[int, ...]:
        t = self.ring.table
        return tuple(t.index(n) for n in self.sub_names)

    def fiber_integrate(self, x: GradedClass) -> GradedClass:
        """Push a class forward to the floor below."""
        x = self.ring.pullback(x) if x.ring is not self.ring else x
        idx = self.fiber_indices()
        src = self.ring.table
        out: dict[Monomial, Fraction] = {}
        for mono, c in x.terms.items():
            if tuple(mono[i] for i in idx) != self.top:
                continue
            rest = list(mono)
            for i in idx:
                rest[i] = 0
            key = src.translate(tuple(rest), self.base.table)
            out[key] = out.get(key, Fraction(0)) + c * self.top_value
        return GradedClass(self.base, out)

    def whitney_defects(self) -> list[GradedClass]:
        """``sum_i a_i b_{k-i} - c_k(V)`` for k = 1..r, reduced in the floor's ring."""
        V = self.V.in_ring(self.ring)
        out = []
        for k in range(1, self.rank + 1):
            s = sum((self.sub(i) * self.quot(k - i) for i in range(0, k + 1)), self.ring.zero())
            out.append(s - V.c(k))
        return out

    def free_rank(self) -> int:
        return len(self.fiber_basis)

    def eliminated_relations(self) -> list[GradedClass]:
        """The new rules written as relations ``leading - replacement = 0``."""
        return [r.as_relation(self.free_ring) for r in self.relations]


def _fiber_part(mono: Monomial, idx: Sequence[int]) -> tuple[int, ...]:
    return tuple(mono[i] for i in idx)


def _shift(terms: dict[Monomial, Fraction], by: Monomial) -> dict[Monomial, Fraction]:
    return {tuple(a + b for a, b in zip(m, by)): c for m, c in terms.items()}


def _relation_terms(rule: RewriteRule) -> dict[Monomial, Fraction]:
    out = {rule.leading: Fraction(1)}
    for m, c in rule.replacement:
        out[m] = out.get(m, Fraction(0)) - c
    return out


def _orient(ring: GradedRing, terms: dict[Monomial, Fraction], idx: Sequence[int]) -> RewriteRule:
    rel = GradedClass(ring, terms, normalize=False)
    rule = RewriteRule.from_relation(rel)
    lead = rule.leading
    if any(e for i, e in enumerate(lead) if i not in idx):
        raise UnsupportedLevel(
            f"leading monomial {ring.table.format_monomial(lead)} is not a pure fiber monomial"
        )
    fp = _fiber_part(lead, idx)
    if any(_fiber_part(m, idx) == fp for m, _ in rule.replacement):
        raise UnsupportedLevel("leading fiber coefficient is not a unit")
    return rule


def complete_rules(
    base_ring: GradedRing, relations: Iterable[GradedClass], fiber: Sequence[str]
) -> tuple[RewriteRule, ...]:
    """Critical-pair completion for relations with unit leading fiber coefficients.

    ``base_ring`` carries the lifted rules of the lower floors.  Only pairs of
    new rules are formed: new leading monomials are pure in the fiber
    generators, hence coprime to every lower leading monomial and to every
    lower truncation, and the homogeneous degree truncation is closed under
    the pair construction.
    """
    table = base_ring.table
    idx = [table.index(n) for n in fiber]
    rules: list[RewriteRule] = []
    current = base_ring
    pending = [dict(r.terms) for r in relations]
    while pending:
        terms = current.normal_form(pending.pop(0))
        if not terms:
            continue
        new = _orient(current, terms, idx)
        for old in rules:
            lcm = tuple(max(a, b) for a, b in zip(new.leading, old.leading))
            if table.killed(lcm):
                continue
            s = _shift(_relation_terms(new), tuple(a - b for a, b in zip(lcm, new.leading)))
            for m, c in _shift(
                _relation_terms(old), tuple(a - b for a, b in zip(lcm, old.leading))
            ).items():
                s[m] = s.get(m, Fraction(0)) - c
            pending.append({m: c for m, c in s.items() if c})
        rules.append(new)
        current = base_ring.with_rules(rules)
    # drop redundant rules and tail-reduce the rest
    kept = [
        r
        for r in rules
        if not any(
            o is not r and all(a <= b for a, b in zip(o.leading, r.leading)) and o.leading != r.leading
            for o in rules
        )
    ]
    final = base_ring.with_rules(kept)
    out = []
    for r in kept:
        repl = final.normal_form(dict(r.replacement))
        out.append(RewriteRule(r.leading, tuple(sorted(repl.items())), table))
    return tuple(out)


def _base_of(base) -> tuple[GradedRing, "TowerLevel | None"]:
    if isinstance(base, TowerLevel):
        return base.ring, base
    if isinstance(base, HypersurfaceData):
        return base.base_ring(), None
    if isinstance(base, GradedRing):
        return base, None
    raise TypeError(f"cannot build a floor over {type(base).__name__}")


def grassmann_level(
    base: "GradedRing | TowerLevel | HypersurfaceData",
    V: BundleData,
    p: int,
    names: Sequence[str] | None = None,
    quot_names: Sequence[str] | None = None,
) -> TowerLevel:
    """The Grassmannian bundle G(p, V) of p-planes in V over ``base``."""
    base_ring, below = _base_of(base)
    r = V.rank
    if not (1 <= p < r <= MAX_RANK and p <= MAX_P):
        raise UnsupportedLevel(f"unsupported Grassmannian G({p}, rank {r})")
    level = max(base_ring.table.levels) + 1
    letters = DEFAULT_NAMES.get(level, (f"s{level}_", f"q{level}_"))
    names = tuple(names) if names else tuple(f"{letters[0]}{i}" for i in range(1, p + 1))
    quot_names = tuple(quot_names) if quot_names else tuple(f"{letters[1]}{j}" for j in range(1, r - p + 1))
    # highest Chern class first: lex ties are broken in favour of a_p
    new_gens = [(names[i - 1], i) for i in range(p, 0, -1)]
    btab = base_ring.table
    table = btab.extend(new_gens, level, btab.truncation + p * (r - p), cap_below=btab.truncation)
    free = GradedRing(table, [GradedRing(table).lift_rule(rule) for rule in base_ring.rules])

    a = [free.one()] + [free.gen(n) for n in names]
    Vf = V.in_ring(free)
    b = [free.one()]
    for k in range(1, r + 1):
        s = Vf.c(k)
        for i in range(1, min(k, p) + 1):
            s = s - a[i] * b[k - i]
        b.append(s)
    conditions = tuple(b[r - p + 1 :])
    rules = complete_rules(free, conditions, names)
    ring = free.with_rules(rules)

    idx = [table.index(n) for n in names]
    fdim = p * (r - p)
    basis = []
    for exps in product(*(range(fdim // deg + 1) for deg in range(1, p + 1))):
        if sum(e * deg for e, deg in zip(exps, range(1, p + 1))) > fdim:
            continue
        mono = [0] * len(table)
        for i, e in zip(idx, exps):
            mono[i] = e
        if ring.reducer(tuple(mono)) is None:
            basis.append(tuple(exps))
    if len(basis) != comb(r, p):
        raise ConfluenceError(f"free rank {len(basis)} != binom({r},{p}) = {comb(r, p)}")
    tops = [m for m in basis if sum(e * deg for e, deg in zip(m, range(1, p + 1))) == fdim]
    if len(tops) != 1:
        raise ConfluenceError(f"expected one top standard monomial, found {len(tops)}")
    top = tops[0]
    # integral of c_p(S)^{r-p} over G(p, r) is (-1)^{p(r-p)}
    anchor = ring.gen(names[p - 1]) ** (r - p)
    top_mono = [0] * len(table)
    for i, e in zip(idx, top):
        top_mono[i] = e
    kappa = anchor.coefficient(tuple(top_mono))
    if not kappa:
        raise ConfluenceError("top class does not appear in c_p(S)^(r-p)")
    top_value = Fraction((-1) ** fdim) / kappa

    quotient = tuple(ring.embed(bj) for bj in b[1 : r - p + 1])
    return TowerLevel(
        index=level,
        p=p,
        V=V,
        base=base_ring,
        ring=ring,
        free_ring=free,
        sub_names=names,
        quotient=quotient,
        conditions=conditions,
        relations=rules,
        fiber_basis=tuple(basis),
        top=top,
        top_value=top_value,
        quot_names=quot_names,
        below=below,
    )


def fiber_integrate(level: TowerLevel, x: GradedClass) -> GradedClass:
    return level.fiber_integrate(x)


CONVENTIONS = ("printed", "exact")


def compute_V1(level: TowerLevel, convention: str = "printed", ring: GradedRing | None = None) -> BundleData:
    """Chern classes of V_1 from ch(V_1) = ch(S_1) + ch(V_0 (x) S_1^*) - ch(S_1 (x) S_1^*).

    ``"exact"`` uses the full Chern characters.  ``"printed"`` truncates
    ch(S_1) after degree 2 and ch(V_0) after degree 3 before multiplying,
    which is the expansion behind the published Chern classes of V_1.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    ring = ring or level.ring
    r = level.rank
    rank = rank_Vk(r, level.p, 1)
    top = rank
    chS = chern_to_ch(level.S(ring), top)
    chV = chern_to_ch(level.V.in_ring(ring), top)
    if convention == "printed":
        chS = chS.truncated(level.p)
        chV = chV.truncated(r)
    chSd = ch_dual(chS)
    total = ch_sum(ch_sum(chS, ch_tensor(chV, chSd, top)), ch_scale(ch_tensor(chS, chSd, top), -1))
    c = ch_to_chern(total)
    if c.rank != rank:
        raise AssertionError(f"rank of V_1 came out as {c.rank}")
    return BundleData(rank, c.chern[:rank])


def ch_V1(level: TowerLevel, convention: str = "printed", ring: GradedRing | None = None, top: int | None = None):
    """The untruncated product expansion of ch(V_1) (for comparison with printed displays)."""
    ring = ring or level.ring
    top = top if top is not None else ring.table.truncation
    chS = chern_to_ch(level.S(ring), top)
    chV = chern_to_ch(level.V.in_ring(ring), top)
    if convention == "printed":
        chS = chS.truncated(level.p)
        chV = chV.truncated(level.rank)
    chSd = ch_dual(chS)
    return ch_sum(ch_sum(chS, ch_tensor(chV, chSd, top)), ch_scale(ch_tensor(chS, chSd, top), -1))


def formal_ring(level: TowerLevel, truncation: int | None = None) -> GradedRing:
    """Same generators as ``level`` with no relations and no block caps."""
    t = level.ring.table
    return GradedRing(GeneratorTable(t.names, t.degrees, truncation or t.truncation, t.levels))


# ---------------------------------------------------------------------------
# the p = 2 tower over a hypersurface of P^4


@dataclass(frozen=True)
class EffectiveLocusClass:
    z: GradedClass


class Tower:
    """X <- X_1 = G(2, T_X) <- X_2 = G(2, V_1) for a hypersurface X of P^4."""

    def __init__(self, hyper: HypersurfaceData, convention: str = "printed", p: int = 2):
        self.hyper = hyper
        self.convention = convention
        base = hyper.base_ring()
        self.base = base
        self.V0 = hyper.tangent_bundle(base)
        self.level1 = grassmann_level(base, self.V0, p, names=[f"a{i}" for i in range(1, p + 1)])
        self.V1 = compute_V1(self.level1, convention)
        self.level2 = grassmann_level(self.level1, self.V1, p, names=[f"d{i}" for i in range(1, p + 1)])

    @property
    def ring(self) -> GradedRing:
        return self.level2.ring

    def u(self, k: int) -> GradedClass:
        if k == 1:
            return self.ring.pullback(self.level1.u)
        if k == 2:
            return self.level2.u
        raise ValueError("only u_1 and u_2 exist")

    def h(self) -> GradedClass:
        return self.ring.gen("h")

    def c1(self) -> GradedClass:
        return self.hyper.chern(self.ring)[0]

    def canonical(self) -> GradedClass:
        """c_1(K_X) = -c_1(X)."""
        return -self.c1()

    def z2_class(self) -> EffectiveLocusClass:
        return EffectiveLocusClass(self.u(2) + self.u(1) + self.c1())

    def push_to_base(self, x: GradedClass) -> GradedClass:
        x1 = self.level2.fiber_integrate(x)
        return self.level1.fiber_integrate(x1)

    def integrate_total(self, x: GradedClass):
        """Integral over X_2: a rational number, or a Chern form in symbolic mode."""
        return self.hyper.integrate(self.push_to_base(x))


def z2_class(tower: Tower) -> EffectiveLocusClass:
    return tower.z2_class()


def integrate_total(tower: Tower, x: GradedClass):
    return tower.integrate_total(x)


_TOWERS: dict[tuple[int | None, str], Tower] = {}


def tower_for(d: int | None = None, convention: str = "printed") -> Tower:
    """Cached tower for ``d`` (``None`` = symbolic Chern classes)."""
    key = (d, convention)
    if key not in _TOWERS:
        _TOWERS[key] = Tower(HypersurfaceData(d), convention)
    return _TOWERS[key]


def formal_grassmann(r: int, p: int, names: Sequence[str] = ("d1", "d2"), prefix: str = "f") -> TowerLevel:
    """G(p, V) over a ring whose only generators are the Chern classes of V (named f1..fr)."""
    gens = [(f"{prefix}{i}", i) for i in range(1, r + 1)]
    base = GradedRing(GeneratorTable.build(gens, r * (r + 1) // 2 + p * (r - p)))
    V = BundleData(r, base.gens(*(g for g, _ in gens)))
    return grassmann_level(base, V, p, names=names)
