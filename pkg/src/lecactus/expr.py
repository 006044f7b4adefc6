"""Parser for poset constructor expressions.

Grammar (``>`` binds looser than ``+``)::

    expr  := sum ( ">" sum )*
    sum   := atom ( "+" atom )*
    atom  := "C" INT | "A" INT | "D[" INT ("," INT)* "]" | "(" expr ")"

``C<k>`` is a chain, ``A<k>`` an antichain, ``D[λ]`` a disjoint union of
chains, ``+`` the disjoint union and ``>`` the ordinal sum (left operand at
the bottom). Parentheses are an extension for grouping.
"""

from __future__ import annotations

import re

from .poset import Poset, antichain, chain, chain_union, disjoint_union, ordinal_sum, PosetError

_TOKEN = re.compile(r"\s*(?:(C\d+|A\d+)|(D\[\s*\d+(?:\s*,\s*\d+)*\s*\])|([+>()]))")


class ExpressionError(PosetError):
    pass


def tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(f"unexpected input at position {pos}: {text[pos:]!r}")
        tokens.append(re.sub(r"\s+", "", m.group(m.lastindex)))
        pos = m.end()
    return tokens


def parse_partition(token: str) -> tuple[int, ...]:
    return tuple(int(x) for x in token[2:-1].split(","))


def parse_expression(text: str) -> Poset:
    tokens = tokenize(text)
    if not tokens:
        raise ExpressionError("empty poset expression")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = peek()
        if tok is None:
            raise ExpressionError("unexpected end of expression")
        pos += 1
        return tok

    def atom() -> Poset:
        tok = take()
        if tok == "(":
            P = expr()
            if take() != ")":
                raise ExpressionError("expected ')'")
            return P
        if tok[0] == "C":
            return chain(int(tok[1:]))
        if tok[0] == "A":
            return antichain(int(tok[1:]))
        if tok[0] == "D":
            return chain_union(parse_partition(tok))
        raise ExpressionError(f"unexpected token {tok!r}")

    def union() -> Poset:
        P = atom()
        while peek() == "+":
            take()
            P = disjoint_union(P, atom())
        return P

    def expr() -> Poset:
        P = union()
        while peek() == ">":
            take()
            P = ordinal_sum(P, union())
        return P

    result = expr()
    if pos != len(tokens):
        raise ExpressionError(f"trailing input starting at token {tokens[pos]!r}")
    return result


def parse_block(token: str) -> tuple[int, ...]:
    """One block of a block sequence: ``D[λ]``, ``C<k>`` or ``A<k>``, as a partition."""
    tokens = tokenize(token)
    if len(tokens) != 1:
        raise ExpressionError(f"not a single block: {token!r}")
    tok = tokens[0]
    if tok[0] == "D":
        return parse_partition(tok)
    if tok[0] == "C":
        return (int(tok[1:]),)
    if tok[0] == "A":
        return (1,) * int(tok[1:])
    raise ExpressionError(f"not a block: {token!r}")


def format_blocks(mus) -> str:
    return " > ".join("D[" + ",".join(map(str, mu)) + "]" for mu in mus)
