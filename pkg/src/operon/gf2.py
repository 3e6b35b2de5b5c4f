"""Multivariate polynomials over GF(2) in the quotient ring where x*x = x.

A monomial is a squarefree product of variables, stored as an integer bitmask
(bit i set = variable i present, mask 0 = the constant 1).  A polynomial is a
set of monomials: every present monomial has coefficient 1, addition is
symmetric difference and multiplication joins masks with bitwise or, cancelling
pairs that collide.  This keeps every element of the ring in canonical form.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from . import logic
from .errors import ParseError

MAX_VARS = 64  # one machine word per monomial

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class VarSet:
    """Immutable ordered collection of distinct variable names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("variable set must not be empty")
        if len(names) > MAX_VARS:
            raise ValueError(f"at most {MAX_VARS} variables are supported, got {len(names)}")
        index = {}
        for i, name in enumerate(names):
            if not _NAME.match(name):
                raise ValueError(f"invalid variable name {name!r}")
            if name in index:
                raise ValueError(f"duplicate variable name {name!r}")
            index[name] = i
        self.names = names
        self._index = index

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown identifier '{name}'") from None

    def __eq__(self, other):
        return isinstance(other, VarSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarSet({', '.join(self.names)})"


def _bit_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _bitrev(x: int, n: int) -> int:
    r = 0
    for _ in range(n):
        r = (r << 1) | (x & 1)
        x >>= 1
    return r


class MonomialOrder:
    """lex or degrevlex with an explicit variable priority permutation.

    key(mask) is monotone for the order: bigger key = bigger monomial.  The
    constant monomial (mask 0) is minimal under both kinds.
    """

    __slots__ = ("kind", "priority", "_lexbit", "_n", "_full", "_cache")

    KINDS = ("lex", "degrevlex")

    def __init__(self, kind: str, priority: tuple[int, ...]):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}")
        priority = tuple(priority)
        if sorted(priority) != list(range(len(priority))):
            raise ValueError("priority must be a permutation of the variable indices")
        self.kind = kind
        self.priority = priority
        n = len(priority)
        self._n = n
        self._full = (1 << n) - 1
        # priority position 0 is most significant
        lexbit = [0] * n
        for pos, var in enumerate(priority):
            lexbit[var] = 1 << (n - 1 - pos)
        self._lexbit = lexbit
        self._cache: dict[int, object] = {}

    @classmethod
    def lex(cls, vars: VarSet, priority_names: Iterable[str] | None = None) -> "MonomialOrder":
        return cls("lex", _priority(vars, priority_names))

    @classmethod
    def degrevlex(cls, vars: VarSet, priority_names: Iterable[str] | None = None) -> "MonomialOrder":
        return cls("degrevlex", _priority(vars, priority_names))

    def key(self, mask: int):
        cached = self._cache.get(mask)
        if cached is None:
            lexint = 0
            for i in _bit_indices(mask):
                lexint |= self._lexbit[i]
            if self.kind == "lex":
                cached = lexint
            else:
                # degree first; ties by reverse lexicographic comparison, where
                # the monomial missing the least significant differing variable
                # is the larger one
                cached = (mask.bit_count(), _bitrev(self._full ^ lexint, self._n))
            self._cache[mask] = cached
        return cached

    def __repr__(self):
        return f"MonomialOrder({self.kind}, priority={self.priority})"


def _priority(vars: VarSet, priority_names) -> tuple[int, ...]:
    if priority_names is None:
        return tuple(range(len(vars)))
    names = list(priority_names)
    if sorted(names) != sorted(vars.names):
        raise ValueError("priority must list every variable exactly once")
    return tuple(vars.index(n) for n in names)


class BoolPoly:
    """Canonical polynomial in the squarefree quotient ring over GF(2)."""

    __slots__ = ("vars", "monomials")

    def __init__(self, vars: VarSet, monomials: Iterable[int] = ()):
        self.vars = vars
        self.monomials = frozenset(monomials)

    @classmethod
    def zero(cls, vars: VarSet) -> "BoolPoly":
        return cls(vars)

    @classmethod
    def one(cls, vars: VarSet) -> "BoolPoly":
        return cls(vars, (0,))

    @classmethod
    def variable(cls, vars: VarSet, name: str) -> "BoolPoly":
        return cls(vars, (1 << vars.index(name),))

    def __bool__(self):
        return bool(self.monomials)

    @property
    def is_zero(self) -> bool:
        return not self.monomials

    @property
    def is_one(self) -> bool:
        return self.monomials == frozenset((0,))

    def _check(self, other):
        if not isinstance(other, BoolPoly):
            raise TypeError(f"expected BoolPoly, got {type(other).__name__}")
        if other.vars != self.vars:
            raise ValueError("polynomials use different variable sets")

    def __add__(self, other):
        self._check(other)
        return BoolPoly(self.vars, self.monomials ^ other.monomials)

    def __mul__(self, other):
        self._check(other)
        acc: set[int] = set()
        for a in self.monomials:
            for b in other.monomials:
                m = a | b
                if m in acc:
                    acc.discard(m)
                else:
                    acc.add(m)
        return BoolPoly(self.vars, acc)

    def multiply_monomial(self, mask: int) -> "BoolPoly":
        acc: set[int] = set()
        for a in self.monomials:
            m = a | mask
            if m in acc:
                acc.discard(m)
            else:
                acc.add(m)
        return BoolPoly(self.vars, acc)

    def support_mask(self) -> int:
        s = 0
        for m in self.monomials:
            s |= m
        return s

    def evaluate(self, values: Mapping[str, int]) -> int:
        """Value at a 0/1 point; every variable occurring in self must be set."""
        sigma = 0
        for i in _bit_indices(self.support_mask()):
            name = self.vars.names[i]
            if name not in values:
                raise ValueError(f"no value for identifier '{name}'")
            if values[name] & 1:
                sigma |= 1 << i
        return self.evaluate_mask(sigma)

    def evaluate_mask(self, sigma: int) -> int:
        # a squarefree monomial evaluates to 1 exactly when all its variables do
        count = 0
        for m in self.monomials:
            if m & ~sigma == 0:
                count ^= 1
        return count

    def substitute(self, name: str, value: int) -> "BoolPoly":
        return self.substitute_index(self.vars.index(name), value)

    def substitute_index(self, i: int, value: int) -> "BoolPoly":
        bit = 1 << i
        acc: set[int] = set()
        for m in self.monomials:
            if m & bit and not value & 1:
                continue
            mm = m & ~bit
            if mm in acc:
                acc.discard(mm)
            else:
                acc.add(mm)
        return BoolPoly(self.vars, acc)

    def leading_monomial(self, order: MonomialOrder) -> int:
        if not self.monomials:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.monomials, key=order.key)

    def degree(self) -> int:
        return max((m.bit_count() for m in self.monomials), default=-1)

    def __eq__(self, other):
        return (
            isinstance(other, BoolPoly)
            and self.vars == other.vars
            and self.monomials == other.monomials
        )

    def __hash__(self):
        return hash((self.vars, self.monomials))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"BoolPoly({format_poly(self)})"


def translate_expr(expr: logic.Expr, vars: VarSet) -> BoolPoly:
    """Rewrite a Boolean expression as its unique squarefree GF(2) polynomial.

    Uses not a = a + 1, a and b = a*b, a or b = a + b + a*b and native
    addition for xor.  Unknown identifiers raise a ValueError naming them.
    """
    if isinstance(expr, logic.Const):
        return BoolPoly.one(vars) if expr.value else BoolPoly.zero(vars)
    if isinstance(expr, logic.Var):
        return BoolPoly.variable(vars, expr.name)
    if isinstance(expr, logic.Not):
        return translate_expr(expr.arg, vars) + BoolPoly.one(vars)
    a = translate_expr(expr.left, vars)
    b = translate_expr(expr.right, vars)
    if isinstance(expr, logic.And):
        return a * b
    if isinstance(expr, logic.Or):
        return a + b + a * b
    if isinstance(expr, logic.Xor):
        return a + b
    raise TypeError(f"unsupported expression node {type(expr).__name__}")


def monomial_str(mask: int, vars: VarSet) -> str:
    if mask == 0:
        return "1"
    return "*".join(vars.names[i] for i in _bit_indices(mask))


def format_poly(p: BoolPoly, order: MonomialOrder | None = None) -> str:
    """Render with terms in descending monomial order (degrevlex by default)."""
    if not p.monomials:
        return "0"
    if order is None:
        order = MonomialOrder.degrevlex(p.vars)
    terms = sorted(p.monomials, key=order.key, reverse=True)
    return " + ".join(monomial_str(m, p.vars) for m in terms)


_POLY_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|([01])|([+*]))")


def parse_poly(text: str, vars: VarSet, line: int | None = None) -> BoolPoly:
    """Parse ``x1*x5 + x4 + 1`` syntax; whitespace is insignificant."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _POLY_TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} in polynomial", line)
        tokens.append(m.groups())
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial", line)

    monomials: set[int] = set()
    # split on '+', then fold '*'-separated factors into one mask
    idx = 0

    def next_term(idx):
        mask = 0
        annihilated = False
        expect_factor = True
        while idx < len(tokens):
            ident, const, op = tokens[idx]
            if op == "+":
                if expect_factor:
                    raise ParseError("dangling operator in polynomial", line)
                return mask, annihilated, idx + 1, True
            if op == "*":
                if expect_factor:
                    raise ParseError("dangling operator in polynomial", line)
                expect_factor = True
                idx += 1
                continue
            if not expect_factor:
                raise ParseError("missing '+' or '*' between terms", line)
            if ident is not None:
                if ident not in vars:
                    raise ParseError(f"unknown identifier '{ident}'", line)
                mask |= 1 << vars.index(ident)
            elif const == "0":
                annihilated = True
            expect_factor = False
            idx += 1
        if expect_factor:
            raise ParseError("dangling operator in polynomial", line)
        return mask, annihilated, idx, False

    more = True
    while more:
        mask, annihilated, idx, more = next_term(idx)
        if annihilated:
            continue
        if mask in monomials:
            monomials.discard(mask)
        else:
            monomials.add(mask)
    return BoolPoly(vars, monomials)
