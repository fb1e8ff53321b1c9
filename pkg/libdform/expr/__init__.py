from .dual import Dual
from .parser import (Expr, Num, Var, Neg, BinOp, Pow, Call, Token, Parser,
                     tokenize, parse, as_expr, VARIABLES, FUNCTIONS, ZERO, ONE)

__all__ = ['Dual', 'Expr', 'Num', 'Var', 'Neg', 'BinOp', 'Pow', 'Call', 'Token',
           'Parser', 'tokenize', 'parse', 'as_expr', 'VARIABLES', 'FUNCTIONS',
           'ZERO', 'ONE']
