"""Python bindings for the pga kernel."""

from ._core import *  # noqa: F401,F403
from ._core import PgaError, Signature, Multivector, Evaluator, LinFunc  # noqa: F401


def mv(text, n, side="dual"):
    return Multivector.parse(text, n, side)


def evaluate(expr, n=2, metric="euclidean"):
    return Evaluator(n, metric).run(expr)
