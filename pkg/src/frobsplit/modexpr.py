"""Tiny expression language for modules, used by the command line.

    nabla(2)  delta(3)  L(2)  lambda(-1)  St  triv
    twist(M)  contract(M)  dual(M)  borel(M)  tensor(M, N)  sum(M, N)

Weights with several coordinates are written nabla(1, 2).
"""
import re

from . import gmod

_TOKEN = re.compile(r"\s*(?:(-?\d+)|([A-Za-z_]+)|([(),]))")


class ExpressionError(ValueError):
    pass


def _tokenize(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionError(f"unexpected character at {pos}: {text[pos:]!r}")
        num, name, punct = m.groups()
        out.append(("num", int(num)) if num is not None else ("name", name) if name else ("punct", punct))
        pos = m.end()
    return out


_WEIGHTED = {"nabla": gmod.dual_weyl, "delta": gmod.weyl_module, "L": gmod.simple,
             "lambda": lambda lam, p: gmod.line(lam, p)}
_UNARY = {"twist": gmod.frobenius_twist, "contract": gmod.contract, "dual": gmod.dual,
          "borel": gmod.borel_restriction}
_BINARY = {"tensor": gmod.tensor, "sum": gmod.direct_sum}


def parse_module(text, p, rank=1):
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def expect(value):
        nonlocal pos
        if peek() != ("punct", value):
            raise ExpressionError(f"expected {value!r} in {text!r}")
        pos += 1

    def module():
        nonlocal pos
        kind, name = peek()
        if kind != "name":
            raise ExpressionError(f"expected a module name in {text!r}")
        pos += 1
        if name == "St":
            return gmod.steinberg(p, rank)
        if name == "triv":
            return gmod.trivial(p, rank)
        expect("(")
        if name in _WEIGHTED:
            coords = [number()]
            while peek() == ("punct", ","):
                pos += 1
                coords.append(number())
            expect(")")
            try:
                return _WEIGHTED[name](tuple(coords), p)
            except gmod.ModuleError as exc:
                raise ExpressionError(str(exc)) from exc
        if name in _UNARY:
            m = module()
            expect(")")
            return _UNARY[name](m)
        if name in _BINARY:
            a = module()
            expect(",")
            b = module()
            expect(")")
            try:
                return _BINARY[name](a, b)
            except gmod.ModuleError as exc:
                raise ExpressionError(str(exc)) from exc
        raise ExpressionError(f"unknown module {name!r}")

    def number():
        nonlocal pos
        kind, value = peek()
        if kind != "num":
            raise ExpressionError(f"expected an integer in {text!r}")
        pos += 1
        return value

    out = module()
    if pos != len(tokens):
        raise ExpressionError(f"trailing input in {text!r}")
    return out
