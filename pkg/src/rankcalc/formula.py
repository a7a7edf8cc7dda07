"""Parser for proposition formulas.

Grammar (lowest precedence first):

    expr   := term  ("or" term)*
    term   := factor ("and" factor)*
    factor := "not" factor | "(" expr ")" | IDENT "=" VALUE

``and`` binds tighter than ``or``; ``not`` binds tightest.  Atoms compare a
declared variable against one of its value labels (matched by string form).
"""

from __future__ import annotations

import re

from .errors import FormulaError

_TOKEN = re.compile(r"\s*(?:(?P<word>[A-Za-z0-9_][A-Za-z0-9_.+-]*)|(?P<eq>=)|(?P<lp>\()|(?P<rp>\)))")

_KEYWORDS = frozenset({"not", "and", "or"})


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise FormulaError("unexpected character %r" % stripped[0],
                               position=len(text) - len(stripped))
        kind = match.lastgroup
        value = match.group(kind)
        tokens.append((kind, value, match.start(kind)))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, space, text):
        self.space = space
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind, what):
        token = self.advance()
        if token[0] != kind:
            raise FormulaError("expected %s, found %r" % (what, token[1] or "end of input"),
                               position=token[2])
        return token

    def parse(self):
        mask = self.expr()
        token = self.peek()
        if token[0] != "end":
            raise FormulaError("unexpected %r" % token[1], position=token[2])
        return mask

    def expr(self):
        mask = self.term()
        while self.peek()[:2] == ("word", "or"):
            self.advance()
            mask |= self.term()
        return mask

    def term(self):
        mask = self.factor()
        while self.peek()[:2] == ("word", "and"):
            self.advance()
            mask &= self.factor()
        return mask

    def factor(self):
        kind, value, position = self.peek()
        if kind == "word" and value == "not":
            self.advance()
            return self.space.full_mask & ~self.factor()
        if kind == "lp":
            self.advance()
            mask = self.expr()
            self.expect("rp", "')'")
            return mask
        if kind == "word":
            if value in _KEYWORDS:
                raise FormulaError("unexpected keyword %r" % value, position=position)
            self.advance()
            self.expect("eq", "'='")
            vkind, vvalue, vpos = self.advance()
            if vkind != "word" or vvalue in _KEYWORDS:
                raise FormulaError("expected a value label", position=vpos)
            return self.atom_mask(value, vvalue, position, vpos)
        raise FormulaError("expected a formula", position=position)

    def atom_mask(self, name, label, name_pos, label_pos):
        space = self.space
        if name not in space.variable_index:
            raise FormulaError("unknown variable %r" % name, position=name_pos)
        digit = space.value_digit(name, label)
        if digit is None:
            raise FormulaError("unknown value %r for variable %r" % (label, name),
                               position=label_pos)
        return space.value_mask(name, digit)


def parse_formula(space, text) -> int:
    """Evaluate ``text`` against ``space``; returns the world bitmask."""
    return _Parser(space, text).parse()
