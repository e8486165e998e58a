"""Exact truncated graded polynomial algebra.

A :class:`GradedRing` is a polynomial ring over the rationals whose generators
carry positive weights, quotiented by

* monomial truncations (every monomial whose weighted degree, restricted to a
  block of generators, exceeds a cap is zero), and
* a finite set of :class:`RewriteRule` objects ``leading -> replacement``.

Elements (:class:`GradedClass`) are always stored in normal form.  All
coefficients are :class:`fractions.Fraction`; nothing is ever converted to a
float.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

Monomial = tuple[int, ...]
Number = Union[int, Fraction]


class ContextMismatch(ValueError):
    """Operands live in different generator tables."""


class NonTerminatingRules(ValueError):
    """A rule set that cannot be applied to a fixpoint."""


class InterpolationError(ValueError):
    """Surplus sample points disagree with the interpolant."""


def as_fraction(x: Number | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(x)


# ---------------------------------------------------------------------------
# generator tables


@dataclass(frozen=True)
class GeneratorTable:
    """Ordered generators with weights, a global truncation and block caps.

    ``levels`` assigns every generator to a block (0 = base).  ``caps`` maps a
    block index ``k`` to the largest weighted degree allowed for the part of a
    monomial built from generators of level ``<= k``.  The global
    ``truncation`` caps the full weighted degree.
    """

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    truncation: int
    levels: tuple[int, ...] = ()
    caps: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator names in {self.names}")
        if len(self.degrees) != len(self.names):
            raise ValueError("one degree per generator is required")
        if any(d <= 0 for d in self.degrees):
            raise ValueError("generator degrees must be positive")
        if any(d > self.truncation for d in self.degrees):
            raise ValueError("generator degree exceeds truncation")
        if not self.levels:
            object.__setattr__(self, "levels", (0,) * len(self.names))
        if len(self.levels) != len(self.names):
            raise ValueError("one level per generator is required")
        masks = []
        for level, bound in self.caps:
            masks.append((tuple(i for i, lv in enumerate(self.levels) if lv <= level), bound))
        object.__setattr__(self, "_masks", tuple(masks))
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    @classmethod
    def build(
        cls,
        gens: Sequence[tuple[str, int]] | Sequence[tuple[str, int, int]],
        truncation: int,
        caps: Mapping[int, int] | None = None,
    ) -> "GeneratorTable":
        names = tuple(g[0] for g in gens)
        degrees = tuple(g[1] for g in gens)
        levels = tuple(g[2] if len(g) > 2 else 0 for g in gens)
        return cls(names, degrees, truncation, levels, tuple(sorted((caps or {}).items())))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]  # type: ignore[attr-defined]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}; have {self.names}") from None

    def degree(self, mono: Monomial) -> int:
        return sum(d * e for d, e in zip(self.degrees, mono))

    def level_degree(self, mono: Monomial, level: int) -> int:
        return sum(d * e for d, e, lv in zip(self.degrees, mono, self.levels) if lv == level)

    def killed(self, mono: Monomial) -> bool:
        degs = self.degrees
        if sum(d * e for d, e in zip(degs, mono)) > self.truncation:
            return True
        for mask, bound in self._masks:  # type: ignore[attr-defined]
            if sum(degs[i] * mono[i] for i in mask) > bound:
                return True
        return False

    def order_key(self, mono: Monomial) -> tuple:
        """Block order: highest level first, weighted degree then lex inside a block."""
        key: list = []
        for level in sorted(set(self.levels), reverse=True):
            idx = [i for i, lv in enumerate(self.levels) if lv == level]
            key.append(sum(self.degrees[i] * mono[i] for i in idx))
            key.extend(mono[i] for i in idx)
        return tuple(key)

    def unit(self) -> Monomial:
        return (0,) * len(self.names)

    def extend(
        self, gens: Sequence[tuple[str, int]], level: int, truncation: int, cap_below: int | None = None
    ) -> "GeneratorTable":
        """Append generators at ``level``; optionally cap everything below it."""
        caps = dict(self.caps)
        if cap_below is not None:
            caps[level - 1] = cap_below
        return GeneratorTable(
            self.names + tuple(g[0] for g in gens),
            self.degrees + tuple(g[1] for g in gens),
            truncation,
            self.levels + (level,) * len(gens),
            tuple(sorted(caps.items())),
        )

    def translate(self, mono: Monomial, target: "GeneratorTable") -> Monomial:
        """Re-index an exponent vector by generator name."""
        out = [0] * len(target.names)
        for name, e in zip(self.names, mono):
            if e:
                out[target.index(name)] = e
        return tuple(out)

    def generator(self, name: str) -> Monomial:
        e = [0] * len(self.names)
        e[self.index(name)] = 1
        return tuple(e)

    def format_monomial(self, mono: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# rewrite rules


@dataclass(frozen=True)
class RewriteRule:
    """``leading -> replacement`` with both sides homogeneous of one degree."""

    leading: Monomial
    replacement: tuple[tuple[Monomial, Fraction], ...]
    table: GeneratorTable = field(repr=False, compare=False)

    def __post_init__(self) -> None:
        deg = self.table.degree(self.leading)
        for mono, _ in self.replacement:
            if mono == self.leading:
                raise NonTerminatingRules("leading monomial occurs in its own replacement")
            if self.table.degree(mono) != deg:
                raise NonTerminatingRules(
                    f"rule for {self.table.format_monomial(self.leading)} is not homogeneous"
                )
            if self.table.order_key(mono) >= self.table.order_key(self.leading):
                raise NonTerminatingRules(
                    f"replacement term {self.table.format_monomial(mono)} is not smaller than "
                    f"{self.table.format_monomial(self.leading)}"
                )

    @property
    def degree(self) -> int:
        return self.table.degree(self.leading)

    @classmethod
    def from_relation(cls, relation: "GradedClass") -> "RewriteRule":
        """Solve ``relation = 0`` for its leading monomial."""
        table = relation.ring.table
        if relation.is_zero():
            raise ValueError("cannot orient the zero relation")
        lead = max(relation.terms, key=table.order_key)
        c = relation.terms[lead]
        repl = tuple((m, -v / c) for m, v in relation.terms.items() if m != lead)
        return cls(lead, repl, table)

    def as_relation(self, ring: "GradedRing") -> "GradedClass":
        terms = {self.leading: Fraction(1)}
        for m, v in self.replacement:
            terms[m] = terms.get(m, Fraction(0)) - v
        return GradedClass(ring, terms, normalize=False)


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _add(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# rings and classes


class GradedRing:
    """A generator table together with a (possibly empty) rule set."""

    def __init__(self, table: GeneratorTable, rules: Iterable[RewriteRule] = ()):
        self.table = table
        self.rules: tuple[RewriteRule, ...] = tuple(rules)
        for r in self.rules:
            if r.table != table:
                raise ContextMismatch("rule built over a different generator table")
        self._cache: dict[Monomial, dict[Monomial, Fraction]] = {}

    def __repr__(self) -> str:
        return f"GradedRing({', '.join(self.table.names)}; {len(self.rules)} rules)"

    def with_rules(self, rules: Iterable[RewriteRule]) -> "GradedRing":
        return GradedRing(self.table, tuple(self.rules) + tuple(rules))

    # construction helpers
    def zero(self) -> "GradedClass":
        return GradedClass(self, {}, normalize=False)

    def one(self) -> "GradedClass":
        return self.scalar(1)

    def scalar(self, q: Number) -> "GradedClass":
        return GradedClass(self, {self.table.unit(): as_fraction(q)})

    def gen(self, name: str) -> "GradedClass":
        return GradedClass(self, {self.table.generator(name): Fraction(1)})

    def gens(self, *names: str) -> tuple["GradedClass", ...]:
        return tuple(self.gen(n) for n in names)

    def monomial(self, mono: Monomial, coeff: Number = 1) -> "GradedClass":
        return GradedClass(self, {tuple(mono): as_fraction(coeff)})

    def embed(self, x: "GradedClass") -> "GradedClass":
        """Re-read a class from another ring over the same table."""
        if x.ring.table != self.table:
            raise ContextMismatch("cannot embed across generator tables")
        return GradedClass(self, x.terms)

    def pullback(self, x: "GradedClass") -> "GradedClass":
        """Read a class over another table in this ring, matching generators by name."""
        src = x.ring.table
        if src == self.table:
            return self.embed(x)
        return GradedClass(self, {src.translate(m, self.table): c for m, c in x.terms.items()})

    def lift_rule(self, rule: RewriteRule) -> RewriteRule:
        src = rule.table
        return RewriteRule(
            src.translate(rule.leading, self.table),
            tuple((src.translate(m, self.table), c) for m, c in rule.replacement),
            self.table,
        )

    def parse(self, text: str) -> "GradedClass":
        return parse_expression(self, text)

    # normal form
    def reducer(self, mono: Monomial) -> RewriteRule | None:
        for r in self.rules:
            if _divides(r.leading, mono):
                return r
        return None

    def reduce_monomial(self, mono: Monomial) -> dict[Monomial, Fraction]:
        cached = self._cache.get(mono)
        if cached is not None:
            return cached
        if self.table.killed(mono):
            out: dict[Monomial, Fraction] = {}
        else:
            rule = self.reducer(mono)
            if rule is None:
                out = {mono: Fraction(1)}
            else:
                q = _sub(mono, rule.leading)
                out = {}
                for m, c in rule.replacement:
                    for mm, cc in self.reduce_monomial(_add(q, m)).items():
                        v = out.get(mm, 0) + c * cc
                        if v:
                            out[mm] = v
                        else:
                            out.pop(mm, None)
        self._cache[mono] = out
        return out

    def normal_form(self, terms: Mapping[Monomial, Fraction]) -> dict[Monomial, Fraction]:
        out: dict[Monomial, Fraction] = {}
        for mono, c in terms.items():
            if not c:
                continue
            for mm, cc in self.reduce_monomial(mono).items():
                v = out.get(mm, 0) + c * cc
                if v:
                    out[mm] = v
                else:
                    out.pop(mm, None)
        return out

    def is_standard(self, mono: Monomial) -> bool:
        return not self.table.killed(mono) and self.reducer(mono) is None


class GradedClass:
    """An element of a :class:`GradedRing`, kept in normal form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GradedRing, terms: Mapping[Monomial, Number], normalize: bool = True):
        n = len(ring.table)
        clean: dict[Monomial, Fraction] = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != n:
                raise ValueError(f"exponent vector {m} has wrong length for {ring.table.names}")
            if any(e < 0 for e in m):
                raise ValueError("negative exponent")
            c = as_fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
        self.ring = ring
        self.terms = ring.normal_form(clean) if normalize else {m: c for m, c in clean.items() if c}

    # -- helpers
    def _check(self, other: "GradedClass") -> None:
        if self.ring.table != other.ring.table:
            raise ContextMismatch(
                f"classes over {self.ring.table.names} and {other.ring.table.names}"
            )

    def _coerce(self, other) -> "GradedClass":
        if isinstance(other, GradedClass):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other)
        return NotImplemented

    # -- arithmetic
    def __add__(self, other) -> "GradedClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return GradedClass(self.ring, terms, normalize=self.ring is not other.ring)

    __radd__ = __add__

    def __neg__(self) -> "GradedClass":
        return GradedClass(self.ring, {m: -c for m, c in self.terms.items()}, normalize=False)

    def __sub__(self, other) -> "GradedClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "GradedClass":
        return (-self) + other

    def __mul__(self, other) -> "GradedClass":
        if isinstance(other, (int, Fraction)):
            q = as_fraction(other)
            return GradedClass(self.ring, {m: c * q for m, c in self.terms.items()}, normalize=False)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        table = self.ring.table
        raw: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _add(m1, m2)
                if table.killed(m):
                    continue
                raw[m] = raw.get(m, 0) + c1 * c2
        return GradedClass(self.ring, raw)

    __rmul__ = __mul__

    def __truediv__(self, q: Number) -> "GradedClass":
        return self * (1 / as_fraction(q))

    def __pow__(self, k: int) -> "GradedClass":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.scalar(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        if self.ring.table != other.ring.table:
            return False
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- inspection
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {self.ring.table.degree(m) for m in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def component(self, k: int) -> "GradedClass":
        t = self.ring.table
        return GradedClass(self.ring, {m: c for m, c in self.terms.items() if t.degree(m) == k}, normalize=False)

    def coefficient(self, mono: Monomial | str) -> Fraction:
        if isinstance(mono, str):
            mono = parse_monomial(self.ring.table, mono)
        return self.terms.get(tuple(mono), Fraction(0))

    def constant(self) -> Fraction:
        return self.terms.get(self.ring.table.unit(), Fraction(0))

    def in_ring(self, ring: GradedRing) -> "GradedClass":
        return ring.embed(self)

    def substitute(self, target: GradedRing, images: Mapping[str, "GradedClass"]) -> "GradedClass":
        """Ring map sending generator ``name`` to ``images[name]`` (missing names map to themselves)."""
        table = self.ring.table
        gens = []
        for name in table.names:
            if name in images:
                img = images[name]
                if isinstance(img, (int, Fraction)):
                    img = target.scalar(img)
                gens.append(img)
            else:
                gens.append(target.gen(name))
        out = target.zero()
        powers: dict[tuple[int, int], GradedClass] = {}
        for m, c in self.terms.items():
            term = target.scalar(c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = gens[i] ** e
                    term = term * powers[key]
            out = out + term
        return out

    def __repr__(self) -> str:
        return f"GradedClass({self})"

    def __str__(self) -> str:
        return format_terms(self.ring.table, self.terms)


def format_terms(table: GeneratorTable, terms: Mapping[Monomial, Fraction]) -> str:
    if not terms:
        return "0"
    parts = []
    for m in sorted(terms, key=lambda x: (table.degree(x), table.order_key(x)), reverse=True):
        c = terms[m]
        mono = table.format_monomial(m)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


# ---------------------------------------------------------------------------
# expression parsing (formulas in the usual computer-algebra syntax)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+\d*)|(\*\*|[-+*/^(){}]))")


def _tokenize(text: str) -> list[str]:
    # LaTeX leftovers such as "{d_{1}}^{6}", "d_{{1}}" or "\," are accepted
    text = text.replace("\\,", " ").replace("\\", "")
    text = re.sub(r"([A-Za-z])_\{\{?(\d+)\}?\}", r"\1\2", text)
    text = re.sub(r"([A-Za-z])_(\d)", r"\1\2", text)
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse {text[pos:pos + 20]!r}")
        tok = m.group(0).strip()
        tokens.append("^" if tok == "**" else tok)
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, ring: GradedRing, tokens: list[str], variables: Mapping[str, object] | None):
        self.ring = ring
        self.tokens = tokens
        self.i = 0
        self.variables = variables or {}

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        acc = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.power()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                acc = acc * self.power()
            elif tok == "/":
                self.take()
                den = self.power()
                if isinstance(den, GradedClass):
                    if set(den.terms) != {self.ring.table.unit()}:
                        raise ValueError("division by a non-scalar")
                    den = den.constant()
                acc = acc / den if isinstance(acc, GradedClass) else Fraction(acc) / den
            elif tok is not None and (tok == "(" or tok == "{" or tok[0].isalnum() or tok[0] == "_"):
                acc = acc * self.power()  # implicit multiplication
            else:
                return acc

    def power(self):
        base = self.atom()
        while self.peek() == "^":
            self.take()
            exp = self.atom()
            if isinstance(exp, GradedClass):
                exp = exp.constant()
            if Fraction(exp).denominator != 1:
                raise ValueError("non-integer exponent")
            base = base ** int(exp)
        return base

    def atom(self):
        tok = self.take()
        if tok in ("(", "{"):
            val = self.expr()
            self.take(")" if tok == "(" else "}")
            return val
        if tok == "-":
            return -self.atom()
        if tok.isdigit():
            return Fraction(int(tok))
        if tok in self.variables:
            return self.variables[tok]
        return self.ring.gen(tok)


def parse_expression(ring: GradedRing, text: str, variables: Mapping[str, object] | None = None) -> GradedClass:
    p = _Parser(ring, _tokenize(text), variables)
    val = p.expr()
    if p.peek() is not None:
        raise ValueError(f"trailing input at token {p.peek()!r}")
    if not isinstance(val, GradedClass):
        val = ring.scalar(val)
    return val


def parse_monomial(table: GeneratorTable, text: str) -> Monomial:
    ring = GradedRing(GeneratorTable(table.names, table.degrees, 10**6))
    val = parse_expression(ring, text)
    if len(val.terms) != 1:
        raise ValueError(f"{text!r} is not a monomial")
    return next(iter(val.terms))


# ---------------------------------------------------------------------------
# polynomials in the hypersurface degree


class DegreePoly:
    """Exact polynomial in ``d``, at most linear in ``delta``.

    Stored as ``{(i, j): coeff}`` for the monomial ``d^i * delta^j``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], Number] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j not in (0, 1):
                raise ValueError(f"unsupported monomial d^{i} delta^{j}")
            c = as_fraction(c)
            if c:
                clean[(i, j)] = clean.get((i, j), Fraction(0)) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def from_list(cls, coeffs: Sequence[Number], delta_coeffs: Sequence[Number] = ()) -> "DegreePoly":
        terms = {(i, 0): c for i, c in enumerate(coeffs)}
        terms.update({(i, 1): c for i, c in enumerate(delta_coeffs)})
        return cls(terms)

    @classmethod
    def d(cls) -> "DegreePoly":
        return cls({(1, 0): 1})

    @classmethod
    def delta(cls) -> "DegreePoly":
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c: Number) -> "DegreePoly":
        return cls({(0, 0): c})

    def _lift(self, other) -> "DegreePoly":
        if isinstance(other, DegreePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return DegreePoly.const(other)
        return NotImplemented

    def __add__(self, other) -> "DegreePoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return DegreePoly(out)

    __radd__ = __add__

    def __neg__(self) -> "DegreePoly":
        return DegreePoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other) -> "DegreePoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "DegreePoly":
        return (-self) + other

    def __mul__(self, other) -> "DegreePoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                if j1 + j2 > 1:
                    raise ValueError("product is not linear in delta")
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return DegreePoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "DegreePoly":
        out = DegreePoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def coefficient(self, i: int, j: int = 0) -> Fraction:
        return self.coeffs.get((i, j), Fraction(0))

    def degree(self) -> int:
        return max((i for i, _ in self.coeffs), default=-1)

    def part(self, j: int) -> "DegreePoly":
        """Coefficient of ``delta^j`` as a polynomial in ``d``."""
        return DegreePoly({(i, 0): c for (i, jj), c in self.coeffs.items() if jj == j})

    def is_linear_in_delta(self) -> bool:
        return all(j <= 1 for _, j in self.coeffs)

    def __call__(self, d: Number, delta: Number = 0) -> Fraction:
        d = as_fraction(d)
        delta = as_fraction(delta)
        return sum((c * d**i * delta**j for (i, j), c in self.coeffs.items()), Fraction(0))

    evaluate = __call__

    def __repr__(self) -> str:
        return f"DegreePoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for (i, j) in sorted(self.coeffs, key=lambda k: (k[1], k[0]), reverse=True):
            c = self.coeffs[(i, j)]
            mono = "*".join(
                x for x in (("d" if i == 1 else f"d^{i}") if i else "", "delta" if j else "") if x
            )
            a = abs(c)
            body = (str(a) if a != 1 or not mono else "") + ("*" if a != 1 and mono else "") + mono
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out


def interpolate(points: Sequence[tuple[Number, Number]], degree_bound: int) -> DegreePoly:
    """Exact interpolant of degree <= ``degree_bound`` through ``points``.

    The first ``degree_bound + 1`` points determine the polynomial (Newton
    divided differences); every surplus point must lie on it.
    """
    pts = [(as_fraction(x), as_fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("abscissae must be distinct")
    need = degree_bound + 1
    if len(pts) < need:
        raise ValueError(f"need at least {need} points, got {len(pts)}")
    base = pts[:need]
    coef = [y for _, y in base]
    for j in range(1, need):
        for i in range(need - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (base[i][0] - base[i - j][0])
    # expand Newton form into the monomial basis
    poly = [coef[-1]]
    for k in range(need - 2, -1, -1):
        xk = base[k][0]
        shifted = [Fraction(0)] + poly
        for i, c in enumerate(poly):
            shifted[i] -= xk * c
        shifted[0] += coef[k]
        poly = shifted
    result = DegreePoly.from_list(poly)
    for x, y in pts[need:]:
        if result(x) != y:
            raise InterpolationError(
                f"point ({x}, {y}) is off the degree-{degree_bound} interpolant (value {result(x)})"
            )
    return result


def sample_and_interpolate(
    f: Callable[[int], Number], xs: Iterable[int], degree_bound: int
) -> DegreePoly:
    return interpolate([(x, f(x)) for x in xs], degree_bound)
