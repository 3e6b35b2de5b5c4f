"""Groebner bases and solving for GF(2) polynomial systems.

Buchberger's algorithm runs directly in the squarefree quotient ring: besides
the usual S-polynomial for each pair of generators, every generator g
contributes one extra candidate per variable x dividing lm(g), namely the
quotient-ring product x*g.  Those extra candidates stand in for the pairs with
the field relations x*x + x, which otherwise never appear explicitly.
"""

from __future__ import annotations

import heapq
from itertools import product
from typing import Iterable, Sequence

from .errors import ParseError
from .gf2 import BoolPoly, MonomialOrder, VarSet, _bit_indices, parse_poly

ENUMERATE_CAP = 24


class PolySystem:
    """A finite generating set over one variable set; zero generators are dropped."""

    __slots__ = ("vars", "generators")

    def __init__(self, vars: VarSet, generators: Iterable[BoolPoly]):
        gens = []
        for g in generators:
            if not isinstance(g, BoolPoly):
                raise TypeError("generators must be BoolPoly instances")
            if g.vars != vars:
                raise ValueError("generator uses a different variable set")
            if g:
                gens.append(g)
        self.vars = vars
        self.generators = tuple(gens)

    def __repr__(self):
        return f"PolySystem({len(self.generators)} generators over {self.vars!r})"


class GroebnerBasis:
    """Reduced basis, sorted by leading monomial in descending order."""

    __slots__ = ("vars", "order", "polys")

    def __init__(self, vars: VarSet, order: MonomialOrder, polys: Sequence[BoolPoly]):
        self.vars = vars
        self.order = order
        self.polys = tuple(polys)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.polys == other.polys

    def __repr__(self):
        return f"GroebnerBasis({len(self.polys)} polynomials)"


def reduce(p: BoolPoly, basis: Sequence[BoolPoly], order: MonomialOrder) -> BoolPoly:
    """Full normal form of p: no remaining monomial is divisible by any lm.

    Divisibility of squarefree monomials is mask containment, and the cofactor
    of a reduction step is disjoint from the divisor's leading monomial, so the
    rewritten monomial is cancelled exactly and everything introduced is
    strictly smaller.
    """
    gens = [(g.leading_monomial(order), g) for g in basis if g]
    if not gens or not p:
        return p
    remainder: set[int] = set()
    work = set(p.monomials)
    key = order.key
    while work:
        m = max(work, key=key)
        work.discard(m)
        for lm, g in gens:
            if lm & ~m == 0:
                cof = m & ~lm
                for t in g.monomials:
                    mm = cof | t
                    if mm == m:
                        continue
                    if mm in work:
                        work.discard(mm)
                    else:
                        work.add(mm)
                break
        else:
            remainder.add(m)
    return BoolPoly(p.vars, remainder)


def s_polynomial(f: BoolPoly, g: BoolPoly, order: MonomialOrder) -> BoolPoly:
    """lcm-cancelling combination of f and g in the quotient ring."""
    if not f or not g:
        raise ValueError("S-polynomial of the zero polynomial is undefined")
    lf = f.leading_monomial(order)
    lg = g.leading_monomial(order)
    lcm = lf | lg
    return f.multiply_monomial(lcm & ~lf) + g.multiply_monomial(lcm & ~lg)


def buchberger_reduced(system: PolySystem, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the system's ideal in the quotient ring.

    Pair selection follows the normal strategy (smallest lcm first) and pairs
    with disjoint leading monomials are skipped; an ideal containing 1 yields
    the basis {1}.  The result is deterministic for a given order.
    """
    vars = system.vars
    if order is None:
        order = MonomialOrder.degrevlex(vars)
    one = BoolPoly.one(vars)

    basis: list[BoolPoly] = []
    lms: list[int] = []
    heap: list[tuple] = []

    def push_candidates(k: int):
        lk = lms[k]
        for i in range(k):
            if lms[i] & lk == 0:
                continue  # coprime leading terms: S-polynomial reduces to zero
            lcm = lms[i] | lk
            heapq.heappush(heap, (order.key(lcm), 0, i, k, -1))
        for x in _bit_indices(lk):
            heapq.heappush(heap, (order.key(lk), 1, k, k, x))

    def insert(p: BoolPoly) -> bool:
        r = reduce(p, basis, order)
        if not r:
            return False
        if r.is_one:
            return True
        basis.append(r)
        lms.append(r.leading_monomial(order))
        push_candidates(len(basis) - 1)
        return False

    for f in system.generators:
        if insert(f):
            return GroebnerBasis(vars, order, (one,))

    while heap:
        _, kind, i, j, x = heapq.heappop(heap)
        if kind == 0:
            s = s_polynomial(basis[i], basis[j], order)
        else:
            s = basis[i].multiply_monomial(1 << x)
        if insert(s):
            return GroebnerBasis(vars, order, (one,))

    # minimalize: drop polynomials whose lead is a multiple of another lead
    by_lm = sorted(basis, key=lambda g: order.key(g.leading_monomial(order)))
    minimal: list[BoolPoly] = []
    kept_lms: list[int] = []
    for g in by_lm:
        lm = g.leading_monomial(order)
        if any(l & ~lm == 0 for l in kept_lms):
            continue
        minimal.append(g)
        kept_lms.append(lm)

    # interreduce tails until stable
    changed = True
    while changed:
        changed = False
        for idx in range(len(minimal)):
            others = minimal[:idx] + minimal[idx + 1 :]
            r = reduce(minimal[idx], others, order)
            if r != minimal[idx]:
                minimal[idx] = r
                changed = True

    minimal.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return GroebnerBasis(vars, order, minimal)


def _mask_to_state(sigma: int, n: int) -> tuple[int, ...]:
    return tuple((sigma >> i) & 1 for i in range(n))


def solve_boolean_system(system: PolySystem, method: str = "groebner") -> list[tuple[int, ...]]:
    """All common 0/1 zeros of the system, as sorted tuples in variable order."""
    n = len(system.vars)
    if method == "enumerate":
        if n > ENUMERATE_CAP:
            raise ValueError(
                f"enumeration is capped at {ENUMERATE_CAP} variables "
                f"(got {n}); use method='groebner'"
            )
        gens = system.generators
        out = []
        for sigma in range(1 << n):
            if all(g.evaluate_mask(sigma) == 0 for g in gens):
                out.append(_mask_to_state(sigma, n))
        return sorted(out)
    if method != "groebner":
        raise ValueError(f"unknown method {method!r}")

    order = MonomialOrder.degrevlex(system.vars)
    base = buchberger_reduced(system, order)
    solutions: list[tuple[int, ...]] = []
    _split(list(base.polys), {}, system.vars, order, solutions)
    return sorted(solutions)


def _split(polys, assigned, vars, order, out):
    # recursively specialize the lowest-index variable still present, pruning
    # branches whose basis collapses to {1}
    if len(polys) == 1 and polys[0].is_one:
        return
    if not polys:
        free = [i for i in range(len(vars)) if i not in assigned]
        for bits in product((0, 1), repeat=len(free)):
            point = dict(assigned)
            point.update(zip(free, bits))
            out.append(tuple(point[i] for i in range(len(vars))))
        return
    support = 0
    for p in polys:
        support |= p.support_mask()
    x = (support & -support).bit_length() - 1
    for b in (0, 1):
        specialized = [p.substitute_index(x, b) for p in polys]
        sub = buchberger_reduced(PolySystem(vars, specialized), order)
        _split(list(sub.polys), {**assigned, x: b}, vars, order, out)


def parse_system(text: str) -> PolySystem:
    """Read the polynomial-system file format.

    First meaningful line is ``vars: x1 x2 ... xn``; every following line is
    one polynomial in ``*``/``+`` syntax.  ``#`` starts a comment.
    """
    vars = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if vars is None:
            if not line.startswith("vars:"):
                raise ParseError("expected a 'vars:' header", lineno)
            names = line[len("vars:") :].split()
            if not names:
                raise ParseError("no variables declared", lineno)
            try:
                vars = VarSet(names)
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            continue
        polys.append(parse_poly(line, vars, line=lineno))
    if vars is None:
        raise ParseError("missing 'vars:' header")
    return PolySystem(vars, polys)


def load_system(path) -> PolySystem:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_system(fh.read())
