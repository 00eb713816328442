"""Expression language and command-line front end."""

from .evaluate import EvalError, eval_expr, evaluate, render_literal, render_value
from .main import run_command
from .parser import ExprTypeError, ParseError, parse_expr

__all__ = [
    "EvalError",
    "ExprTypeError",
    "ParseError",
    "eval_expr",
    "evaluate",
    "parse_expr",
    "render_literal",
    "render_value",
    "run_command",
]
