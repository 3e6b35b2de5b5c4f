"""Synchronous Boolean network models: parsing, dynamics, and algebra export.

States are 0/1 tuples in variable declaration order.  The canonical integer
code of a state puts the first declared variable in the most significant bit,
so sorting codes sorts the printed bit-strings lexicographically.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import logic
from .errors import ParseError
from .gf2 import BoolPoly, VarSet, translate_expr
from .groebner import PolySystem, solve_boolean_system

STATE_GRAPH_CAP = 24

_RULE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)\s*'\s*=\s*(.+)\Z")

State = tuple[int, ...]


@dataclass(frozen=True)
class BooleanNetwork:
    name: str
    vars: VarSet
    params: tuple[str, ...]
    rules: tuple[logic.Expr, ...]  # aligned with vars

    def rule(self, name: str) -> logic.Expr:
        return self.rules[self.vars.index(name)]

    def check_params(self, params: Mapping[str, int]) -> dict[str, int]:
        setting = {}
        for p in self.params:
            if p not in params:
                raise ValueError(f"missing value for parameter '{p}'")
            v = params[p]
            if v not in (0, 1):
                raise ValueError("parameter values must be 0 or 1")
            setting[p] = v
        for k in params:
            if k not in self.params:
                raise ValueError(f"unknown parameter '{k}'")
        return setting

    def check_state(self, state: Sequence[int]) -> State:
        state = tuple(state)
        if len(state) != len(self.vars):
            raise ValueError(f"state must have {len(self.vars)} coordinates, got {len(state)}")
        if any(b not in (0, 1) for b in state):
            raise ValueError("state coordinates must be 0 or 1")
        return state

    def step(self, state: Sequence[int], params: Mapping[str, int]) -> State:
        """One synchronous update: every rule is evaluated on the old state."""
        state = self.check_state(state)
        env = dict(zip(self.vars.names, state))
        env.update(self.check_params(params))
        return tuple(logic.evaluate(r, env) for r in self.rules)

    def trajectory(self, state, params, max_steps: int | None = None) -> "Trajectory":
        state = self.check_state(state)
        setting = self.check_params(params)
        if max_steps is None:
            max_steps = (1 << len(self.vars)) + 1
        if max_steps < 1:
            raise ValueError("max_steps must be at least 1")
        states = [state]
        seen = {state: 0}
        for _ in range(max_steps):
            nxt = self.step(states[-1], setting)
            if nxt in seen:
                return Trajectory(tuple(states), seen[nxt], False)
            seen[nxt] = len(states)
            states.append(nxt)
        return Trajectory(tuple(states), None, True)

    def to_polynomial_system(self, params: Mapping[str, int]) -> PolySystem:
        """Fixed-point system: one generator per variable, update rule plus x.

        Parameter values are substituted into the rules before translation, so
        the generators live over the state variables only.  Rules that reduce
        to the identity contribute nothing.
        """
        setting = self.check_params(params)
        gens = []
        for name, rule in zip(self.vars.names, self.rules):
            expr = logic.substitute(rule, setting)
            poly = translate_expr(expr, self.vars) + BoolPoly.variable(self.vars, name)
            gens.append(poly)
        return PolySystem(self.vars, gens)

    def fixed_points(self, params, method: str = "groebner") -> list[State]:
        """States equal to their successor, via exhaustive stepping or algebra."""
        if method == "enumerate":
            setting = self.check_params(params)
            n = len(self.vars)
            if n > STATE_GRAPH_CAP:
                raise ValueError(f"enumeration is capped at {STATE_GRAPH_CAP} variables")
            out = []
            for code in range(1 << n):
                s = decode_state(code, n)
                if self.step(s, setting) == s:
                    out.append(s)
            return sorted(out)
        if method != "groebner":
            raise ValueError(f"unknown method {method!r}")
        return solve_boolean_system(self.to_polynomial_system(params), "groebner")

    def state_graph(self, params) -> "StateGraph":
        setting = self.check_params(params)
        n = len(self.vars)
        if n > STATE_GRAPH_CAP:
            raise ValueError(f"state graphs are capped at {STATE_GRAPH_CAP} variables")
        succ = []
        for code in range(1 << n):
            succ.append(encode_state(self.step(decode_state(code, n), setting)))
        attractors, attr_id = _attractors(succ)
        # canonical presentation: short cycles first, then smallest member
        ranked = sorted(range(len(attractors)), key=lambda a: (len(attractors[a]), attractors[a][0]))
        remap = {old: new for new, old in enumerate(ranked)}
        attractors = [attractors[a] for a in ranked]
        basin = [0] * len(attractors)
        for code in range(1 << n):
            attr_id[code] = remap[attr_id[code]]
            basin[attr_id[code]] += 1
        return StateGraph(self.vars, tuple(succ), tuple(tuple(c) for c in attractors),
                          tuple(basin), tuple(attr_id))


@dataclass(frozen=True)
class Trajectory:
    """Synchronous orbit up to the first repeated state.

    states holds the distinct visited states; cycle_start is the index where
    the eventual cycle begins (None when the walk was truncated).
    """

    states: tuple[State, ...]
    cycle_start: int | None
    truncated: bool

    @property
    def transient_length(self) -> int:
        if self.cycle_start is None:
            raise ValueError("trajectory was truncated before a cycle appeared")
        return self.cycle_start

    @property
    def cycle(self) -> tuple[State, ...]:
        if self.cycle_start is None:
            raise ValueError("trajectory was truncated before a cycle appeared")
        return self.states[self.cycle_start :]


@dataclass(frozen=True)
class StateGraph:
    """Complete successor map on all 2^n states (out-degree one everywhere)."""

    vars: VarSet
    successors: tuple[int, ...]
    attractors: tuple[tuple[int, ...], ...]  # state codes, smallest member first
    basin_sizes: tuple[int, ...]
    attractor_of: tuple[int, ...]

    def bitstring(self, code: int) -> str:
        n = len(self.vars)
        return format(code, f"0{n}b")

    def attractor_states(self, idx: int) -> tuple[State, ...]:
        n = len(self.vars)
        return tuple(decode_state(c, n) for c in self.attractors[idx])

    def to_dot(self) -> str:
        lines = ["digraph states {"]
        for code, nxt in enumerate(self.successors):
            lines.append(f'  "{self.bitstring(code)}" -> "{self.bitstring(nxt)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def adjacency_json(self) -> str:
        adj = {self.bitstring(c): self.bitstring(nxt) for c, nxt in enumerate(self.successors)}
        return json.dumps(adj, indent=2)

    def attractor_report_json(self) -> str:
        report = [
            {"cycle": [self.bitstring(c) for c in cyc], "basin_size": size}
            for cyc, size in zip(self.attractors, self.basin_sizes)
        ]
        return json.dumps(report, indent=2)


def encode_state(state: Sequence[int]) -> int:
    code = 0
    for b in state:
        code = (code << 1) | (b & 1)
    return code


def decode_state(code: int, n: int) -> State:
    return tuple((code >> (n - 1 - i)) & 1 for i in range(n))


def _attractors(succ):
    """Cycle detection in a functional graph; every state flows to one cycle."""
    n = len(succ)
    attr_id = [-1] * n
    attractors: list[list[int]] = []
    for start in range(n):
        if attr_id[start] != -1:
            continue
        path: list[int] = []
        pos: dict[int, int] = {}
        cur = start
        while True:
            if attr_id[cur] != -1:
                aid = attr_id[cur]
                break
            if cur in pos:
                cycle = path[pos[cur] :]
                low = cycle.index(min(cycle))
                cycle = cycle[low:] + cycle[:low]
                aid = len(attractors)
                attractors.append(cycle)
                break
            pos[cur] = len(path)
            path.append(cur)
            cur = succ[cur]
        for c in path:
            attr_id[c] = aid
    return attractors, attr_id


def fixed_points_json(points: Sequence[State]) -> str:
    return json.dumps(["".join(map(str, s)) for s in sorted(points)])


def parse_network(text: str) -> BooleanNetwork:
    """Read the network file format.

    Layout: a ``network <name>`` line, a ``vars:`` line, an optional
    ``params:`` line, then one ``X' = <expr>`` rule per variable.  ``#``
    starts a comment; blank lines are ignored.
    """
    name = None
    vars: VarSet | None = None
    params: tuple[str, ...] = ()
    seen_params_line = False
    rules: dict[str, logic.Expr] = {}
    rule_lines: dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if name is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "network":
                raise ParseError("expected 'network <name>'", lineno)
            name = parts[1]
            continue
        if vars is None:
            if not line.startswith("vars:"):
                raise ParseError("expected a 'vars:' line", lineno)
            names = _split_names(line[len("vars:") :], lineno)
            try:
                vars = VarSet(names)
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            continue
        if not seen_params_line and line.startswith("params:"):
            seen_params_line = True
            names = _split_names(line[len("params:") :], lineno)
            dup = _first_duplicate(names)
            if dup is not None:
                raise ParseError(f"duplicate parameter name {dup!r}", lineno)
            for p in names:
                if not re.match(r"[A-Za-z_][A-Za-z0-9_]*\Z", p):
                    raise ParseError(f"invalid parameter name {p!r}", lineno)
                if p in vars:
                    raise ParseError(f"'{p}' is declared both as variable and parameter", lineno)
            params = tuple(names)
            continue
        seen_params_line = True
        m = _RULE.match(line)
        if m is None:
            raise ParseError("expected an update rule of the form \"X' = <expr>\"", lineno)
        target, body = m.groups()
        if vars is None or target not in vars:
            raise ParseError(f"update rule for undeclared variable '{target}'", lineno)
        if target in rules:
            raise ParseError(
                f"duplicate update rule for '{target}' (first on line {rule_lines[target]})",
                lineno,
            )
        expr = logic.parse_expr(body, line=lineno)
        for ident in sorted(logic.variables(expr)):
            if ident not in vars and ident not in params:
                raise ParseError(f"undeclared identifier '{ident}'", lineno)
        rules[target] = expr
        rule_lines[target] = lineno

    if name is None:
        raise ParseError("empty network file")
    if vars is None:
        raise ParseError("missing 'vars:' line")
    missing = [v for v in vars.names if v not in rules]
    if missing:
        raise ParseError(f"missing update rule for: {', '.join(missing)}")
    return BooleanNetwork(name, vars, params, tuple(rules[v] for v in vars.names))


def _split_names(rest: str, lineno: int) -> list[str]:
    names = [piece.strip() for piece in rest.split(",")]
    if names == [""]:
        raise ParseError("empty name list", lineno)
    if any(not n for n in names):
        raise ParseError("empty name in list", lineno)
    return names


def _first_duplicate(names):
    seen = set()
    for n in names:
        if n in seen:
            return n
        seen.add(n)
    return None


def load_network(path) -> BooleanNetwork:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_network(fh.read())
