"""Evaluator for closed-form expression trees in prefix JSON.

A node is either a rational literal (int, or a string ``"num/den"``) or a list
whose head names the operation:

    ["add", e...]  ["mul", e...]  ["sub", a, b]  ["div", a, b]  ["neg", a]
    ["pow", a, "p/q"]      real-branch rational power
    ["sqrt", a]  ["cbrt", a]  ["root", a, k]
    ["cos", "r"]  ["sin", "r"]          cos(r*pi), sin(r*pi)
    ["pi"]  ["gamma", "1/4"]
    ["phi", "n"]            phi(exp(-pi*sqrt(n)))
    ["G", "n"]              class invariant G_n
    ["var", "name"]
    ["let", {"name": e, ...}, body]   bindings evaluated in order

See docs/expression-schema.md for the full description.
"""

from __future__ import annotations

from typing import Mapping

from .hpreal import GUARD_DIGITS, HighPrecisionReal, cos_pi, hp, sin_pi
from .puiseux import frac


class ExpressionError(ValueError):
    pass


def evaluate(node, ctx, env: Mapping[str, HighPrecisionReal] | None = None) -> HighPrecisionReal:
    """Evaluate ``node`` as a ball in ``ctx``."""
    env = {} if env is None else env
    if isinstance(node, (int, str)) and not isinstance(node, bool):
        return hp(frac(node), ctx)
    if not isinstance(node, list) or not node:
        raise ExpressionError(f"malformed node: {node!r}")
    head, args = node[0], node[1:]
    handler = _OPS.get(head)
    if handler is None:
        raise ExpressionError(f"unknown operation {head!r}")
    return handler(args, ctx, env)


def evaluate_defs(defs: Mapping[str, object], ctx, env=None) -> dict:
    """Evaluate an ordered mapping of named expressions; later names see earlier ones."""
    scope = dict(env or {})
    for name, sub in defs.items():
        scope[name] = evaluate(sub, ctx, scope)
    return scope


def _digits(ctx) -> int:
    return max(int(ctx.dps) - GUARD_DIGITS, 1)


def _fold(fn):
    def op(args, ctx, env):
        if not args:
            raise ExpressionError("empty argument list")
        acc = evaluate(args[0], ctx, env)
        for a in args[1:]:
            acc = fn(acc, evaluate(a, ctx, env))
        return acc
    return op


def _binary(fn):
    def op(args, ctx, env):
        if len(args) != 2:
            raise ExpressionError("binary operation needs two arguments")
        return fn(evaluate(args[0], ctx, env), evaluate(args[1], ctx, env))
    return op


def _unary(fn):
    def op(args, ctx, env):
        if len(args) != 1:
            raise ExpressionError("unary operation needs one argument")
        return fn(evaluate(args[0], ctx, env))
    return op


def _pow(args, ctx, env):
    base, exponent = args
    return evaluate(base, ctx, env) ** frac(exponent)


def _root(args, ctx, env):
    base, k = args
    return evaluate(base, ctx, env).root(int(k))


def _var(args, ctx, env):
    (name,) = args
    if name not in env:
        raise ExpressionError(f"unbound variable {name!r}")
    return env[name]._in(ctx)


def _let(args, ctx, env):
    defs, body = args
    return evaluate(body, ctx, evaluate_defs(defs, ctx, env))


def _phi(args, ctx, env):
    from .numeric import phi_exp

    (n,) = args
    return phi_exp(frac(n), _digits(ctx))._in(ctx)


def _g(args, ctx, env):
    from .numeric import class_invariant

    (n,) = args
    return class_invariant(frac(n), _digits(ctx), check=False).value._in(ctx)


def _gamma(args, ctx, env):
    from .numeric import gamma_constant

    (x,) = args
    return gamma_constant(frac(x), ctx)


_OPS = {
    "add": _fold(lambda a, b: a + b),
    "mul": _fold(lambda a, b: a * b),
    "sub": _binary(lambda a, b: a - b),
    "div": _binary(lambda a, b: a / b),
    "neg": _unary(lambda a: -a),
    "sqrt": _unary(lambda a: a.sqrt()),
    "cbrt": _unary(lambda a: a.cbrt()),
    "pow": _pow,
    "root": _root,
    "cos": lambda args, ctx, env: cos_pi(frac(args[0]), ctx),
    "sin": lambda args, ctx, env: sin_pi(frac(args[0]), ctx),
    "pi": lambda args, ctx, env: HighPrecisionReal.pi(ctx),
    "gamma": _gamma,
    "phi": _phi,
    "G": _g,
    "var": _var,
    "let": _let,
}

OPERATIONS = tuple(sorted(_OPS))
