"""Real-root counting and isolation for rational univariate polynomials.

Everything here is exact: root counts come from Sturm chains, isolating
intervals are bisected Fractions, and a root is reported as `exact` only
when a rational value satisfying the polynomial was actually found.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactpoly import (
    Poly,
    clear_content,
    derivative,
    divrem,
    pgcd,
    substitute,
)


@dataclass(frozen=True)
class RootBox:
    """Certified interval holding exactly one real root.

    A non-degenerate box is half-open, (lo, hi].  A rational root that was
    recovered exactly is stored with lo == hi.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("root box needs lo <= hi")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be at least 1")

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def exact(self) -> Optional[Fraction]:
        return self.lo if self.lo == self.hi else None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        if self.is_exact:
            return x == self.lo
        return self.lo < x <= self.hi

    def representative(self) -> Fraction:
        if self.is_exact:
            return self.lo
        return (self.lo + self.hi) / 2

    def __str__(self):
        if self.is_exact:
            return f"root {self.lo} (multiplicity {self.multiplicity})"
        return f"root in ({self.lo}, {self.hi}] (multiplicity {self.multiplicity})"


def _require_univariate(p: Poly) -> None:
    if not isinstance(p, Poly):
        raise TypeError("expected a polynomial")
    for c in p.coeffs:
        if isinstance(c, Poly) and c.degree > 0:
            raise ValueError("real-root routines need rational coefficients")


def squarefree_part(p: Poly) -> Poly:
    """p with repeated factors collapsed to multiplicity one (content cleared)."""
    _require_univariate(p)
    if not p:
        raise ValueError("the zero polynomial has no squarefree part")
    if p.degree == 0:
        return Poly(p.var, (1,))
    g = pgcd(p, derivative(p))
    q = divrem(p, g)[0] if g.degree > 0 else p
    return clear_content(q)


def yun_factors(p: Poly) -> list[tuple[Poly, int]]:
    """Squarefree decomposition: pairwise-coprime monic factors with exponents.

    The product of factor**exponent recovers p up to a rational constant.
    """
    _require_univariate(p)
    if not p:
        raise ValueError("cannot decompose the zero polynomial")
    if p.degree == 0:
        return []
    d = pgcd(p, derivative(p))
    if d.degree == 0:
        return [(p * (Fraction(1) / p.lc), 1)]
    b = divrem(p, d)[0]
    w = divrem(derivative(p), d)[0] - derivative(b)
    out = []
    k = 1
    while b.degree > 0:
        a = pgcd(b, w)
        if a.degree > 0:
            out.append((a, k))
            b = divrem(b, a)[0]
            w = divrem(w, a)[0]
        w = w - derivative(b)
        k += 1
    return out


def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm sequence of p, each entry scaled to small integer coefficients."""
    _require_univariate(p)
    if not p:
        raise ValueError("no Sturm chain for the zero polynomial")
    chain = [clear_content(p)]
    if p.degree == 0:
        return chain
    chain.append(clear_content(derivative(p)))
    while chain[-1].degree > 0:
        rem = divrem(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(clear_content(-rem))
    return chain


def _sign(x) -> int:
    return -1 if x < 0 else (1 if x > 0 else 0)


def _variations(signs) -> int:
    count = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def _chain_variations(chain: list[Poly], x: Fraction) -> int:
    return _variations(_sign(substitute(q, q.var, x)) for q in chain)


def cauchy_root_bound(p: Poly) -> Fraction:
    """B with every real root of p strictly inside (-B, B)."""
    _require_univariate(p)
    if not p:
        raise ValueError("the zero polynomial has no root bound")
    if p.degree == 0:
        return Fraction(1)
    lead = abs(p.coeffs[-1])
    biggest = max(abs(c) for c in p.coeffs[:-1])
    return 1 + biggest / lead


def count_real_roots(p: Poly, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    Either bound may be None, meaning unbounded on that side.
    """
    _require_univariate(p)
    if not p:
        raise ValueError("the zero polynomial has infinitely many roots")
    if p.degree == 0:
        return 0
    q = squarefree_part(p)
    bound = cauchy_root_bound(q)
    a = Fraction(lo) if lo is not None else -bound
    b = Fraction(hi) if hi is not None else bound
    if b <= a:
        return 0
    chain = sturm_chain(q)
    return _chain_variations(chain, a) - _chain_variations(chain, b)


def simplest_rational(a: Fraction, b: Fraction) -> Fraction:
    """The smallest-denominator rational in the closed interval [a, b]."""
    a = Fraction(a)
    b = Fraction(b)
    if a > b:
        raise ValueError("need a <= b")
    if a <= 0 <= b:
        return Fraction(0)
    if b < 0:
        return -simplest_rational(-b, -a)
    # 0 < a <= b
    floor_a = a.numerator // a.denominator
    if a == floor_a:
        return Fraction(floor_a)
    if floor_a + 1 <= b:
        return Fraction(floor_a + 1)
    return floor_a + 1 / simplest_rational(1 / (b - floor_a), 1 / (a - floor_a))


class _IntervalOracle:
    """Sturm-chain root counting on (a, b] with cached endpoint evaluations."""

    def __init__(self, q: Poly):
        self.q = q
        self.chain = sturm_chain(q)
        self._cache: dict[Fraction, int] = {}

    def variations(self, x: Fraction) -> int:
        v = self._cache.get(x)
        if v is None:
            v = _chain_variations(self.chain, x)
            self._cache[x] = v
        return v

    def count(self, a: Fraction, b: Fraction) -> int:
        return self.variations(a) - self.variations(b)

    def value(self, x: Fraction):
        return substitute(self.q, self.q.var, x)


def _find_exact(oracle: _IntervalOracle, lo: Fraction, hi: Fraction) -> Optional[Fraction]:
    """Try to name the single root in (lo, hi] exactly; None when not found."""
    if oracle.value(hi) == 0:
        return hi
    mid = (lo + hi) / 2
    if oracle.value(mid) == 0:
        return mid
    probe = simplest_rational(lo, hi)
    if lo < probe <= hi and oracle.value(probe) == 0:
        return probe
    return None


def _multiplicity(p: Poly, box_lo: Fraction, box_hi: Fraction,
                  exact: Optional[Fraction],
                  factors: list[tuple[Poly, int]]) -> int:
    if exact is not None:
        for f, k in factors:
            if substitute(f, f.var, exact) == 0:
                return k
    else:
        for f, k in factors:
            if f.degree == 0:
                continue
            if count_real_roots(f, box_lo, box_hi) == 1:
                return k
    raise ArithmeticError("isolated root matched no squarefree factor")


def isolate_real_roots(p: Poly, region: str = "all",
                       precision: Fraction = Fraction(1, 10 ** 6)) -> list[RootBox]:
    """Disjoint isolating intervals for the distinct real roots of p.

    region selects which roots to report: "all", or "positive" for roots
    strictly greater than zero.  Intervals are narrowed below `precision`
    and returned in increasing order.  Multiplicities refer to p itself.
    """
    _require_univariate(p)
    if not p:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if region not in ("all", "positive"):
        raise ValueError(f"unknown region {region!r}")
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    if p.degree == 0:
        return []
    q = squarefree_part(p)
    factors = yun_factors(p)
    oracle = _IntervalOracle(q)
    bound = cauchy_root_bound(q)
    lo = Fraction(0) if region == "positive" else -bound
    hi = bound
    if hi <= lo:
        return []
    boxes = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = oracle.count(a, b)
        if n == 0:
            continue
        if n == 1:
            boxes.append(_refine(oracle, a, b, precision))
            continue
        mid = (a + b) / 2
        stack.append((mid, b))
        stack.append((a, mid))
    boxes.sort(key=lambda iv: iv[0])
    out = []
    for a, b in boxes:
        exact = _find_exact(oracle, a, b)
        if exact is not None:
            a = b = exact
        out.append(RootBox(a, b, _multiplicity(p, a, b, exact, factors)))
    return out


def _refine(oracle: _IntervalOracle, a: Fraction, b: Fraction,
            precision: Fraction) -> tuple[Fraction, Fraction]:
    # also push `a` off any neighboring root it may sit on, so a box that is
    # not an exact hit always brackets a strict sign change
    while b - a > precision or oracle.value(a) == 0:
        mid = (a + b) / 2
        if oracle.count(a, mid) == 1:
            b = mid
        else:
            a = mid
    return a, b


def refine_root_box(p: Poly, box: RootBox, precision: Fraction) -> RootBox:
    """Narrow an existing isolating box for p to the requested width.

    Exact boxes pass through unchanged; otherwise bisection continues and
    the exact-root probe is retried on the tighter interval.
    """
    if box.is_exact:
        return box
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    oracle = _IntervalOracle(squarefree_part(p))
    a, b = _refine(oracle, box.lo, box.hi, precision)
    exact = _find_exact(oracle, a, b)
    if exact is not None:
        a = b = exact
    return RootBox(a, b, box.multiplicity)


def decimal_str(x: Fraction, digits: int = 5) -> str:
    """Fixed-point decimal string, rounded half-even to `digits` places."""
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    x = Fraction(x)
    scale = 10 ** digits
    scaled = round(x * scale)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
