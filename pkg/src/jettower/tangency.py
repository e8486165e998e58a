"""Vector fields on the vertical 2-jet space of the universal hypersurface in P^4.

Affine chart: the hypersurface is z_1^d + sum a_alpha z^alpha = 0 with
alpha in N^4, |alpha| <= d, alpha != (d,0,0,0).  A 2-jet through a point is
recorded by first derivatives xi^(i) (i = 1, 2) and second derivatives
xi^(i,l) (i <= l), each a vector in C^4.

Variables are strings: ``z1..z4``, ``a0120`` for a_alpha, ``x1_3`` for
xi_3^(1), ``y12_3`` for xi_3^(1,2).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Mapping, Sequence

from .core import Number, as_fraction

N = 4
FIRST = (1, 2)
SECOND = ((1, 1), (1, 2), (2, 2))
MIN_D, MAX_D, MAX_SOLVE_D = 3, 6, 4

Mono = tuple[tuple[str, int], ...]


def zv(j: int) -> str:
    return f"z{j}"


def av(alpha: Sequence[int]) -> str:
    return "a" + "".join(str(x) for x in alpha)


def xv(i: int, j: int) -> str:
    return f"x{i}_{j}"


def yv(i: int, l: int, j: int) -> str:
    i, l = min(i, l), max(i, l)
    return f"y{i}{l}_{j}"


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class JetPoly:
    """Sparse polynomial with rational coefficients in named variables."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, Number] | None = None):
        self.terms: dict[Mono, Fraction] = {}
        for m, c in (terms or {}).items():
            c = as_fraction(c)
            if c:
                key = tuple(sorted((v, e) for v, e in m if e))
                self.terms[key] = self.terms.get(key, Fraction(0)) + c
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def var(cls, name: str) -> "JetPoly":
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c: Number) -> "JetPoly":
        return cls({(): c})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], c: Number = 1) -> "JetPoly":
        return cls({tuple(sorted(exps.items())): c})

    def _lift(self, other) -> "JetPoly":
        if isinstance(other, JetPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return JetPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> "JetPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        p = JetPoly()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self) -> "JetPoly":
        p = JetPoly()
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other) -> "JetPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "JetPoly":
        return (-self) + other

    def __mul__(self, other) -> "JetPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        p = JetPoly()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "JetPoly":
        out = JetPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def diff(self, name: str) -> "JetPoly":
        out: dict[Mono, Fraction] = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(name, 0)
            if not e:
                continue
            if e == 1:
                del d[name]
            else:
                d[name] = e - 1
            key = tuple(sorted(d.items()))
            out[key] = out.get(key, 0) + c * e
        return JetPoly(out)

    def degree_in(self, prefix_test) -> int:
        return max((sum(e for v, e in m if prefix_test(v)) for m in self.terms), default=-1)

    def split(self, test) -> dict[Mono, "JetPoly"]:
        """Group terms by their part in the variables selected by ``test``."""
        out: dict[Mono, dict[Mono, Fraction]] = {}
        for m, c in self.terms.items():
            key = tuple((v, e) for v, e in m if test(v))
            rest = tuple((v, e) for v, e in m if not test(v))
            out.setdefault(key, {})[rest] = c
        return {k: JetPoly(v) for k, v in out.items()}

    def evaluate(self, values: Mapping[str, Number]) -> "JetPoly":
        out = JetPoly()
        for m, c in self.terms.items():
            coeff = c
            rest = {}
            for v, e in m:
                if v in values:
                    coeff *= as_fraction(values[v]) ** e
                else:
                    rest[v] = e
            out = out + JetPoly.monomial(rest, coeff)
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    __repr__ = __str__


def z_monomial(alpha: Sequence[int]) -> JetPoly:
    return JetPoly.monomial({zv(j + 1): e for j, e in enumerate(alpha) if e})


def _is_z(v: str) -> bool:
    return v[0] == "z"


def _is_a(v: str) -> bool:
    return v[0] == "a"


def _is_first(v: str) -> bool:
    return v[0] == "x"


def _is_second(v: str) -> bool:
    return v[0] == "y"


# ---------------------------------------------------------------------------
# the ideal


def affine_indices(d: int) -> list[tuple[int, ...]]:
    """alpha in N^4 with |alpha| <= d, without the normalized (d,0,0,0)."""
    out = [a for a in product(range(d + 1), repeat=N) if sum(a) <= d]
    out.remove((d, 0, 0, 0))
    return sorted(out, key=lambda a: (sum(a), a))


def hypersurface_poly(d: int) -> JetPoly:
    P = z_monomial((d, 0, 0, 0))
    for alpha in affine_indices(d):
        P = P + JetPoly.var(av(alpha)) * z_monomial(alpha)
    return P


def first_order(P: JetPoly, i: int) -> JetPoly:
    out = JetPoly()
    for j in range(1, N + 1):
        out = out + P.diff(zv(j)) * JetPoly.var(xv(i, j))
    return out


def second_order(P: JetPoly, i: int, l: int) -> JetPoly:
    out = JetPoly()
    for j in range(1, N + 1):
        dj = P.diff(zv(j))
        out = out + dj * JetPoly.var(yv(i, l, j))
        for k in range(1, N + 1):
            out = out + dj.diff(zv(k)) * JetPoly.var(xv(i, j)) * JetPoly.var(xv(l, k))
    return out


@dataclass(frozen=True)
class JetIdeal:
    d: int
    labels: tuple[str, ...]
    generators: tuple[JetPoly, ...]

    def __iter__(self):
        return iter(zip(self.labels, self.generators))


def build_jet_ideal(d: int) -> JetIdeal:
    if not (MIN_D <= d <= MAX_D):
        raise ValueError(f"d must lie in [{MIN_D}, {MAX_D}]")
    P = hypersurface_poly(d)
    labels = ["P"] + [f"D{i}" for i in FIRST] + [f"D{i}{l}" for i, l in SECOND]
    gens = [P] + [first_order(P, i) for i in FIRST] + [second_order(P, i, l) for i, l in SECOND]
    return JetIdeal(d, tuple(labels), tuple(gens))


# ---------------------------------------------------------------------------
# vector fields


@dataclass
class VectorFieldSym:
    components: dict[str, JetPoly] = field(default_factory=dict)
    label: str = ""

    def __add__(self, other: "VectorFieldSym") -> "VectorFieldSym":
        comp = dict(self.components)
        for v, p in other.components.items():
            comp[v] = comp.get(v, JetPoly()) + p
        return VectorFieldSym({v: p for v, p in comp.items() if not p.is_zero()})


def apply_field(V: VectorFieldSym, f: JetPoly) -> JetPoly:
    out = JetPoly()
    present = f.variables()
    for v, comp in V.components.items():
        if v in present:
            out = out + comp * f.diff(v)
    return out


PATTERNS = {"300": (3, 0, 0, 0), "210": (2, 1, 0, 0), "111": (1, 1, 1, 0)}


def pattern_terms(e: Sequence[int]) -> list[tuple[Fraction, tuple[int, ...]]]:
    """Expand prod_j (w_j - z_j)^{e_j}: pairs (coefficient, gamma) for c z^gamma w^{e-gamma}."""
    from math import comb

    out = []
    for gamma in product(*(range(x + 1) for x in e)):
        c = 1
        for x, g in zip(e, gamma):
            c *= comb(x, g) * (-1) ** g
        out.append((Fraction(c), tuple(gamma)))
    return out


def coefficient_field(alpha: Sequence[int], e: Sequence[int], drop_last: bool = False) -> VectorFieldSym:
    """sum over the expansion of prod (w - z)^e of c z^gamma d/da_{alpha - gamma}."""
    terms = pattern_terms(e)
    if drop_last:
        terms = terms[:-1]
    comp: dict[str, JetPoly] = {}
    for c, gamma in terms:
        target = tuple(a - g for a, g in zip(alpha, gamma))
        comp[av(target)] = comp.get(av(target), JetPoly()) + z_monomial(gamma) * c
    name = "".join(str(x) for x in e)
    return VectorFieldSym(comp, f"V[{name}]_{av(alpha)}")


def pattern_directions(kind: str) -> list[tuple[int, ...]]:
    return sorted(set(permutations(PATTERNS[kind])), reverse=True)


def coefficient_fields(d: int, kinds: Iterable[str] = ("300", "210", "111")) -> list[VectorFieldSym]:
    """All fields of the given kinds, over every coordinate permutation and admissible alpha."""
    out, seen = [], set()
    indices = affine_indices(d)
    for kind in kinds:
        for e in pattern_directions(kind):
            for alpha in indices:
                if all(a >= x for a, x in zip(alpha, e)) and (e, alpha) not in seen:
                    seen.add((e, alpha))
                    out.append(coefficient_field(alpha, e))
    return out


@dataclass(frozen=True)
class TangencyReport:
    label: str
    images: tuple[tuple[str, str], ...]  # (generator, "zero" | residue summary)

    @property
    def ok(self) -> bool:
        return all(s == "zero" for _, s in self.images)


def check_tangency(V: VectorFieldSym, ideal: JetIdeal) -> TangencyReport:
    """Tangency by identical vanishing of V(g) for every generator g."""
    images = []
    for label, g in ideal:
        img = apply_field(V, g)
        images.append((label, "zero" if img.is_zero() else f"nonzero ({len(img)} terms)"))
    return TangencyReport(V.label, tuple(images))


def corrupted_field(d: int) -> VectorFieldSym:
    """A 300-type field with its last term removed (must fail)."""
    alpha = (0, d, 0, 0)
    V = coefficient_field(alpha, (0, 3, 0, 0), drop_last=True)
    V.label += " (corrupted)"
    return V


# ---------------------------------------------------------------------------
# fields lifting a linear action on the derivatives


def linear_jet_part(A: Sequence[Sequence[Number]]) -> VectorFieldSym:
    """w^(k) = A xi^(k) and w^(i,k) = A xi^(i,k) as a vector field."""
    A = [[as_fraction(x) for x in row] for row in A]
    comp: dict[str, JetPoly] = {}
    for i in FIRST:
        for j in range(1, N + 1):
            comp[xv(i, j)] = sum(
                (JetPoly.var(xv(i, k)) * A[j - 1][k - 1] for k in range(1, N + 1)), JetPoly()
            )
    for i, l in SECOND:
        for j in range(1, N + 1):
            comp[yv(i, l, j)] = sum(
                (JetPoly.var(yv(i, l, k)) * A[j - 1][k - 1] for k in range(1, N + 1)), JetPoly()
            )
    return VectorFieldSym({v: p for v, p in comp.items() if not p.is_zero()}, "linear part")


@dataclass
class LinearSystem:
    """Sparse exact elimination with several right-hand sides."""

    ncols: int
    pivots: dict[int, tuple[dict[int, Fraction], dict[object, Fraction]]] = field(default_factory=dict)
    inconsistent: list[dict[object, Fraction]] = field(default_factory=list)

    def add_row(self, row: dict[int, Fraction], rhs: dict[object, Fraction]) -> None:
        row, rhs = dict(row), dict(rhs)
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                c = row[col]
                row = {k: v / c for k, v in row.items()}
                rhs = {k: v / c for k, v in rhs.items()}
                self.pivots[col] = (row, rhs)
                return
            c = row[col]
            prow, prhs = piv
            for k, v in prow.items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
            for k, v in prhs.items():
                nv = rhs.get(k, 0) - c * v
                if nv:
                    rhs[k] = nv
                else:
                    rhs.pop(k, None)
        if rhs:
            self.inconsistent.append(rhs)

    def solve(self, key) -> dict[int, Fraction]:
        """One solution for right-hand side ``key`` (free unknowns set to 0)."""
        sol: dict[int, Fraction] = {}
        for col in sorted(self.pivots, reverse=True):
            row, rhs = self.pivots[col]
            v = rhs.get(key, Fraction(0))
            for k, c in row.items():
                if k != col and k in sol:
                    v -= c * sol[k]
            if v:
                sol[col] = v
        return sol


@dataclass(frozen=True)
class SolveResult:
    field: VectorFieldSym | None
    certificate: tuple | None  # right-hand sides left inconsistent
    unknowns: int
    equations: int

    @property
    def feasible(self) -> bool:
        return self.field is not None


def z_monomials(max_degree: int) -> list[tuple[int, ...]]:
    return sorted((b for b in product(range(max_degree + 1), repeat=N) if sum(b) <= max_degree), key=lambda b: (sum(b), b))


def solve_A_field(A: Sequence[Sequence[Number]], d: int, z_degree: int = 3) -> SolveResult:
    """Find v_alpha (degree <= 3 in z, <= 1 in a) completing the linear part to a tangent field.

    The images V(g) must vanish identically.  The generators are affine
    linear in the a-variables, so the conditions split by a-monomial into
    systems that share one coefficient matrix.
    """
    if not (MIN_D <= d <= MAX_SOLVE_D):
        raise ValueError(f"d must lie in [{MIN_D}, {MAX_SOLVE_D}]")
    ideal = build_jet_ideal(d)
    lin = linear_jet_part(A)
    alphas = affine_indices(d)
    betas = z_monomials(z_degree)
    unknowns = [(alpha, beta) for alpha in alphas for beta in betas]
    # columns: z^beta * dg/da_alpha
    system = LinearSystem(len(unknowns))
    rows: dict[tuple[str, Mono], dict[int, Fraction]] = {}
    for col, (alpha, beta) in enumerate(unknowns):
        zb = z_monomial(beta)
        for label, g in ideal:
            for m, c in (zb * g.diff(av(alpha))).terms.items():
                rows.setdefault((label, m), {})[col] = c
    rhs: dict[tuple[str, Mono], dict[object, Fraction]] = {}
    for label, g in ideal:
        img = apply_field(lin, g)
        for m, c in img.terms.items():
            a_part = tuple((v, e) for v, e in m if _is_a(v))
            rest = tuple((v, e) for v, e in m if not _is_a(v))
            key = a_part[0][0] if a_part else 1
            rhs.setdefault((label, rest), {})[key] = -c
    for eq in set(rows) | set(rhs):
        system.add_row(rows.get(eq, {}), rhs.get(eq, {}))
    if system.inconsistent:
        return SolveResult(None, tuple(system.inconsistent), len(unknowns), len(rows))
    keys = {k for r in rhs.values() for k in r}
    comp: dict[str, JetPoly] = {}
    for key in sorted(keys, key=str):
        factor = JetPoly.const(1) if key == 1 else JetPoly.var(key)
        for col, val in system.solve(key).items():
            alpha, beta = unknowns[col]
            comp[av(alpha)] = comp.get(av(alpha), JetPoly()) + z_monomial(beta) * factor * val
    V = lin + VectorFieldSym({v: p for v, p in comp.items() if not p.is_zero()})
    V.label = "A-field"
    return SolveResult(V, None, len(unknowns), len(rows))


def explicit_A_field(A: Sequence[Sequence[Number]], d: int) -> VectorFieldSym:
    """Closed-form solution: v from R(w) = -sum_k (A(w - z))_k dP/dw_k (w) plus a cubic correction.

    R vanishes to order 3 along w = z after the linear part is accounted for;
    the correction removes the w_1^d coefficient, which has no a-variable.
    """
    A = [[as_fraction(x) for x in row] for row in A]
    w = [JetPoly.var(f"w{j}") for j in range(1, N + 1)]
    z = [JetPoly.var(zv(j)) for j in range(1, N + 1)]
    P = hypersurface_poly(d)
    Pw = JetPoly({tuple((("w" + v[1:]) if _is_z(v) else v, e) for v, e in m): c for m, c in P.terms.items()})
    R = JetPoly()
    for k in range(N):
        Ak = sum(((w[j] - z[j]) * A[k][j] for j in range(N)), JetPoly())
        R = R - Ak * Pw.diff(f"w{k + 1}")
    top = (("w1", d),)
    c = R.split(lambda v: v[0] == "w").get(top, JetPoly())
    R = R - c * (w[0] - z[0]) ** 3 * w[0] ** (d - 3)
    comp: dict[str, JetPoly] = {}
    for wm, coeff in R.split(lambda v: v[0] == "w").items():
        exps = dict(wm)
        alpha = tuple(exps.get(f"w{j}", 0) for j in range(1, N + 1))
        if alpha == (d, 0, 0, 0):
            assert coeff.is_zero()
            continue
        comp[av(alpha)] = coeff
    V = linear_jet_part(A) + VectorFieldSym({v: p for v, p in comp.items() if not p.is_zero()})
    V.label = "explicit A-field"
    return V


# ---------------------------------------------------------------------------
# the singular locus and the pole audit


def wedge_minors(u: Sequence[Number], v: Sequence[Number]) -> list[Fraction]:
    u = [as_fraction(x) for x in u]
    v = [as_fraction(x) for x in v]
    return [u[a] * v[b] - u[b] * v[a] for a in range(len(u)) for b in range(a + 1, len(u))]


def in_sigma(point: Mapping[str, Number]) -> bool:
    """xi^(i) and xi^(i,k) are parallel for every i, k."""
    for i in FIRST:
        for k in FIRST:
            u = [point[xv(i, j)] for j in range(1, N + 1)]
            v = [point[yv(i, k, j)] for j in range(1, N + 1)]
            if any(wedge_minors(u, v)):
                return False
    return True


ORDER_WEIGHTS = {"z": 1, "x": 2, "y": 3}


def order_weight(m: Mono) -> int:
    return sum(ORDER_WEIGHTS[v[0]] * e for v, e in m)


def _det3(M: Sequence[Sequence[JetPoly]]) -> JetPoly:
    return (
        M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
        - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
        + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])
    )


@dataclass(frozen=True)
class PoleAuditReport:
    pair: tuple[int, int]
    denominator: JetPoly
    denominator_is_W12: bool
    profiles: tuple[tuple[int, int, int], ...]  # (deg z, deg first-order, deg second-order)
    violations: tuple[str, ...]
    max_order: int

    @property
    def ok(self) -> bool:
        return self.denominator_is_W12 and not self.violations


def profile_allowed(z: int, first: int, second: int) -> bool:
    return (z <= 2 and first <= 1 and second <= 1) or (z <= 1 and first <= 3 and second == 0)


def cramer_pole_audit(d: int, i: int = 1, l: int = 1) -> PoleAuditReport:
    """Solve the three constraints on v_alpha (|alpha| <= 2) for v_0000, v_1000, v_0100."""
    if d < MIN_D:
        raise ValueError("d >= 3 required")
    e1, e2 = (1, 0, 0, 0), (0, 1, 0, 0)
    zero = (0, 0, 0, 0)
    solved = [zero, e1, e2]

    def rows(alpha) -> list[JetPoly]:
        za = z_monomial(alpha)
        r0 = za
        r1 = sum((za.diff(zv(j)) * JetPoly.var(xv(i, j)) for j in range(1, N + 1)), JetPoly())
        r2 = JetPoly()
        for j in range(1, N + 1):
            dj = za.diff(zv(j))
            r2 = r2 + dj * JetPoly.var(yv(i, l, j))
            for k in range(1, N + 1):
                r2 = r2 + dj.diff(zv(k)) * JetPoly.var(xv(i, j)) * JetPoly.var(xv(l, k))
        return [r0, r1, r2]

    cols = [rows(a) for a in solved]
    M = [[cols[c][r] for c in range(3)] for r in range(3)]
    den = _det3(M)
    W12 = JetPoly.var(xv(i, 1)) * JetPoly.var(yv(i, l, 2)) - JetPoly.var(yv(i, l, 1)) * JetPoly.var(xv(i, 2))
    others = [a for a in product(range(3), repeat=N) if sum(a) <= 2 and a not in solved]
    profiles, violations, top = set(), [], 0
    for alpha in others:
        rhs = [-x for x in rows(alpha)]
        for c in range(3):
            Mc = [[rhs[r] if cc == c else M[r][cc] for cc in range(3)] for r in range(3)]
            num = _det3(Mc)
            for m in num.terms:
                prof = (
                    sum(e for v, e in m if _is_z(v)),
                    sum(e for v, e in m if _is_first(v)),
                    sum(e for v, e in m if _is_second(v)),
                )
                profiles.add(prof)
                top = max(top, order_weight(m))
                if not profile_allowed(*prof):
                    violations.append(f"v_{''.join(map(str, solved[c]))} / alpha={alpha}: {prof}")
    return PoleAuditReport((i, l), den, den == W12, tuple(sorted(profiles)), tuple(violations), top)
