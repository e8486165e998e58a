"""Counting jet differentials, Schur module dimensions and vanishing criteria.

Also the Euler characteristic of the Schur power with shape (m, m, 0) of the
cotangent bundle of a hypersurface in P^4, by Hirzebruch-Riemann-Roch.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .charclass import BundleData, HypersurfaceData, todd
from .core import DegreePoly, GradedClass, interpolate

MAX_P, MAX_K, MAX_M = 3, 3, 12


def multi_indices(p: int, l: int) -> list[tuple[int, ...]]:
    """I_l: multi-indices in N^p of length l, in lexicographic order (largest first)."""
    return [c for c in product(range(l, -1, -1), repeat=p) if sum(c) == l]


def derivative_indices(p: int, k: int) -> list[tuple[int, ...]]:
    return [i for l in range(1, k + 1) for i in multi_indices(p, l)]


@dataclass(frozen=True)
class CompositionTable:
    p: int
    k: int
    m: int
    indices: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[int, ...], ...]  # q_i for i in ``indices``

    def __len__(self) -> int:
        return len(self.entries)

    def as_maps(self) -> list[dict[tuple[int, ...], int]]:
        return [{i: q for i, q in zip(self.indices, e) if q} for e in self.entries]

    def check(self) -> None:
        target = (self.m,) * self.p
        for e in self.entries:
            tot = tuple(sum(q * i[c] for q, i in zip(e, self.indices)) for c in range(self.p))
            if tot != target:
                raise AssertionError(f"{e} sums to {tot}")


def enumerate_compositions(p: int, k: int, m: int) -> CompositionTable:
    """All q with sum_{l<=k} sum_{i in I_l} q_i^l i = (m, ..., m)."""
    if not (1 <= p <= MAX_P and 1 <= k <= MAX_K and 0 <= m <= MAX_M):
        raise ValueError(f"parameters out of range: p={p}, k={k}, m={m}")
    for l in range(1, k + 1):
        assert len(multi_indices(p, l)) == comb(l + p - 1, p - 1)
    idx = derivative_indices(p, k)
    assert len(idx) == comb(p + k, p) - 1
    out: list[tuple[int, ...]] = []

    def rec(pos: int, rest: tuple[int, ...], acc: list[int]) -> None:
        if pos == len(idx):
            if not any(rest):
                out.append(tuple(acc))
            return
        i = idx[pos]
        bound = min((r // c for r, c in zip(rest, i) if c), default=0)
        for q in range(bound + 1):
            acc.append(q)
            rec(pos + 1, tuple(r - q * c for r, c in zip(rest, i)), acc)
            acc.pop()

    rec(0, (m,) * p, [])
    table = CompositionTable(p, k, m, tuple(idx), tuple(out))
    table.check()
    return table


def rank_EGG(p: int, k: int, m: int, n: int) -> int:
    """Rank of the Green-Griffiths bundle: a product of symmetric powers per composition."""
    table = enumerate_compositions(p, k, m)
    return sum(prod(comb(q + n - 1, n - 1) for q in e) for e in table.entries)


def rank_EGG_bruteforce(p: int, k: int, m: int, n: int) -> int:
    """Count monomials in xi_j^(i) (j <= n) of multi-weight (m, ..., m) directly."""
    weights = [i for i in derivative_indices(p, k) for _ in range(n)]
    counts: Counter[tuple[int, ...]] = Counter({(0,) * p: 1})
    for w in weights:
        new: Counter[tuple[int, ...]] = Counter()
        for vec, c in counts.items():
            v = vec
            while all(x <= m for x in v):
                new[v] += c
                v = tuple(a + b for a, b in zip(v, w))
        counts = new
    return counts[(m,) * p]


# ---------------------------------------------------------------------------
# Schur modules


@dataclass(frozen=True)
class YoungShape:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not a partition")
        object.__setattr__(self, "parts", parts)

    @property
    def columns(self) -> tuple[int, ...]:
        """Column heights t_1 >= t_2 >= ... ."""
        top = self.parts[0] if self.parts else 0
        return tuple(sum(1 for x in self.parts if x >= i) for i in range(1, top + 1))

    def size(self) -> int:
        return sum(self.parts)


def _shape(lam: YoungShape | Sequence[int]) -> YoungShape:
    return lam if isinstance(lam, YoungShape) else YoungShape(tuple(lam))


def schur_dim(lam: YoungShape | Sequence[int], r: int) -> int:
    """Weyl dimension formula for the Schur module of shape ``lam`` on a rank-r space."""
    lam = _shape(lam)
    parts = [x for x in lam.parts if x]
    if len(parts) > r:
        return 0
    parts = parts + [0] * (r - len(parts))
    num = Fraction(1)
    for i in range(r):
        for j in range(i + 1, r):
            num *= Fraction(parts[i] - parts[j] + j - i, j - i)
    assert num.denominator == 1
    return int(num)


def semistandard_tableaux(lam: YoungShape | Sequence[int], r: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Fillings with entries 1..r, weakly increasing in rows, strictly down columns."""
    rows = [x for x in _shape(lam).parts if x]

    def fill(i: int, done: list[tuple[int, ...]]):
        if i == len(rows):
            yield tuple(done)
            return
        above = done[-1] if done else None
        for row in combinations_with_replacement(range(1, r + 1), rows[i]):
            if above is not None and any(row[c] <= above[c] for c in range(len(row))):
                continue
            yield from fill(i + 1, done + [row])

    yield from fill(0, [])


def tableau_count(lam: YoungShape | Sequence[int], r: int) -> int:
    return sum(1 for _ in semistandard_tableaux(lam, r))


def schur_weights(lam: YoungShape | Sequence[int], r: int) -> Counter[tuple[int, ...]]:
    """Weight multiset: content vectors of the semistandard tableaux."""
    out: Counter[tuple[int, ...]] = Counter()
    for t in semistandard_tableaux(lam, r):
        c = Counter(x for row in t for x in row)
        out[tuple(c[j] for j in range(1, r + 1))] += 1
    return out


def sym_twisted_weights(m: int, r: int = 3) -> Counter[tuple[int, ...]]:
    """Weights of Sym^m(E^*) (x) (det E)^m in the Chern-root coordinates of E."""
    out: Counter[tuple[int, ...]] = Counter()
    for w in product(range(m + 1), repeat=r):
        if sum(w) == m:
            out[tuple(m - x for x in w)] += 1
    return out


def character_identity_holds(m: int) -> bool:
    """Shape (m, m, 0) on a rank-3 space equals Sym^m of the dual twisted by det^m."""
    return schur_weights((m, m, 0), 3) == sym_twisted_weights(m, 3)


def br_vanishing(lam: YoungShape | Sequence[int], n: int, N: int) -> bool:
    """Vanishing for complete intersections of dimension n in P^N: sum of the first N-n column heights < n."""
    if N <= n:
        raise ValueError("need N > n")
    t = _shape(lam).columns
    return sum(t[: N - n]) < n


def order_k_vanishing(p: int, k: int, n: int, codim: int) -> bool:
    return Fraction(comb(k + p, p) - 1) < Fraction(n, codim)


def coefficient_space_dim(d: int) -> int:
    """N_d: projective dimension of degree-d forms in five variables."""
    if d < 1:
        raise ValueError("d must be positive")
    return comb(d + 4, 4) - 1


# ---------------------------------------------------------------------------
# Euler characteristic by Hirzebruch-Riemann-Roch

# monomial symmetric functions of three variables through degree 3, in e_1, e_2, e_3
_PARTITIONS = {
    1: ((1,),),
    2: ((2,), (1, 1)),
    3: ((3,), (2, 1), (1, 1, 1)),
}


def _m_in_e(lam: tuple[int, ...], e: Sequence[GradedClass]) -> GradedClass:
    e1, e2, e3 = e
    table = {
        (1,): e1,
        (2,): e1 * e1 - e2 * 2,
        (1, 1): e2,
        (3,): e1**3 - e1 * e2 * 3 + e3 * 3,
        (2, 1): e1 * e2 - e3 * 3,
        (1, 1, 1): e3,
    }
    return table[lam]


def _ch_from_weights(weights: Counter[tuple[int, ...]], e: Sequence[GradedClass]) -> GradedClass:
    """sum over weights w of exp(w . y), through degree 3, with e_i the elementary functions of y."""
    ring = e[0].ring
    total = ring.scalar(sum(weights.values()))
    for k, parts in _PARTITIONS.items():
        for lam in parts:
            padded = lam + (0,) * (3 - len(lam))
            coeff = sum(
                c * Fraction(prod(w[j] ** padded[j] for j in range(3)), prod(factorial(x) for x in padded))
                for w, c in weights.items()
            )
            if coeff:
                total = total + _m_in_e(lam, e) * coeff
    return total


ROUTES = ("schur", "sym")


def euler_char_mm0(d: int | None, m: int, route: str = "schur"):
    """chi(X, Schur^{(m,m,0)} of the cotangent bundle) on a degree-d hypersurface in P^4.

    ``route="schur"`` sums over tableau weights in the roots of the cotangent
    bundle; ``route="sym"`` uses Sym^m(T_X) (x) K_X^m in the roots of T_X.
    Returns a rational number, or a Chern form when ``d`` is None.
    """
    if route not in ROUTES:
        raise ValueError(f"route must be one of {ROUTES}")
    hyp = HypersurfaceData(d)
    ring = hyp.base_ring()
    c1, c2, c3 = hyp.chern(ring)
    if route == "schur":
        ch = _ch_from_weights(schur_weights((m, m, 0), 3), (-c1, c2, -c3))
    else:
        weights = Counter()
        for w in product(range(m + 1), repeat=3):
            if sum(w) == m:
                weights[tuple(x - m for x in w)] += 1
        ch = _ch_from_weights(weights, (c1, c2, c3))
    td = todd(BundleData(3, (c1, c2, c3)))
    return hyp.integrate(ch * td)


def leading_term_form(d: int | None = None):
    """(1/120) of the integral of 4 c_1^3 - 3 c_1 c_2 - c_3."""
    hyp = HypersurfaceData(d)
    ring = hyp.base_ring()
    c1, c2, c3 = hyp.chern(ring)
    return hyp.integrate((c1**3 * 4 - c1 * c2 * 3 - c3) / 120)


@dataclass(frozen=True)
class LeadingCoefficientReport:
    d: int
    chi: DegreePoly  # in the variable m
    degree: int
    leading: Fraction
    expected: Fraction

    @property
    def ok(self) -> bool:
        return self.degree == 5 and self.leading == self.expected


def leading_coefficient_check(d: int, samples: Sequence[int] = tuple(range(9)), degree_bound: int = 7) -> LeadingCoefficientReport:
    """Interpolate chi(m) with surplus points and compare its m^5 coefficient."""
    pts = [(m, euler_char_mm0(d, m)) for m in samples]
    poly = interpolate(pts, degree_bound)
    deg = poly.degree()
    return LeadingCoefficientReport(d, poly, deg, poly.coefficient(5), leading_term_form(d))
