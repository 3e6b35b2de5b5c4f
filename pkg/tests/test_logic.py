"""Parser and evaluator for Boolean expressions."""

import pytest

from operon import logic
from operon.errors import ParseError
from operon.logic import And, Const, Not, Or, Var, Xor, evaluate, parse_expr

from conftest import all_assignments, random_expr


def test_precedence_not_and_xor_or():
    # NOT binds tightest, then AND, XOR, OR.
    assert parse_expr("a | b & c") == Or(Var("a"), And(Var("b"), Var("c")))
    assert parse_expr("!a & b") == And(Not(Var("a")), Var("b"))
    assert parse_expr("!a ^ b & c | d") == Or(
        Xor(Not(Var("a")), And(Var("b"), Var("c"))), Var("d")
    )


def test_left_associativity():
    assert parse_expr("a ^ b ^ c") == Xor(Xor(Var("a"), Var("b")), Var("c"))
    assert parse_expr("a | b | c") == Or(Or(Var("a"), Var("b")), Var("c"))
    assert parse_expr("a & b & c") == And(And(Var("a"), Var("b")), Var("c"))


def test_parentheses_and_constants():
    assert parse_expr("(a | b) & c") == And(Or(Var("a"), Var("b")), Var("c"))
    assert parse_expr("!(a)") == Not(Var("a"))
    assert parse_expr("1 ^ 0") == Xor(Const(1), Const(0))
    assert parse_expr("!!x") == Not(Not(Var("x")))


@pytest.mark.parametrize(
    "text",
    ["", "a &", "& a", "(a", "a)", "a b", "a $ b", "a !b"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_expr(text)


def test_parse_error_carries_line_number():
    with pytest.raises(ParseError, match="line 7"):
        parse_expr("a &", line=7)
    err = None
    try:
        parse_expr("(a", line=7)
    except ParseError as exc:
        err = exc
    assert err is not None and err.line == 7


def test_evaluate_golden():
    expr = parse_expr("!R & C")
    assert evaluate(expr, {"R": 0, "C": 1}) == 1
    assert evaluate(expr, {"R": 1, "C": 1}) == 0
    assert evaluate(expr, {"R": 0, "C": 0}) == 0


def test_evaluate_truncates_to_bit():
    assert evaluate(Var("a"), {"a": 3}) == 1
    assert evaluate(Var("a"), {"a": 2}) == 0


def test_evaluate_missing_identifier():
    with pytest.raises(ValueError, match="no value for identifier 'q'"):
        evaluate(Var("q"), {})


def test_variables():
    expr = parse_expr("!g & (L | a) ^ 1")
    assert logic.variables(expr) == {"g", "L", "a"}
    assert logic.variables(Const(0)) == set()


def test_substitute_matches_evaluation(rng):
    names = ["a", "b", "c", "d"]
    for _ in range(50):
        expr = random_expr(rng, names)
        bound = {n: rng.randrange(2) for n in rng.sample(names, rng.randint(0, 4))}
        partial = logic.substitute(expr, bound)
        assert logic.variables(partial) <= set(names) - set(bound)
        for env in all_assignments(names):
            assert evaluate(partial, env | bound) == evaluate(expr, env | bound)


def test_substitute_full_binding_leaves_constants(rng):
    names = ["p", "q"]
    expr = parse_expr("p & !q | p ^ q")
    for env in all_assignments(names):
        reduced = logic.substitute(expr, env)
        assert logic.variables(reduced) == set()
        assert evaluate(reduced, {}) == evaluate(expr, env)
