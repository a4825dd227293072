"""Group-expression parser.

    expr := term ("x" term)*
    term := "Z(" int ")" | "Q(" int ")" | "D(" int ")" | "@" path

Whitespace is ignored between tokens; "x" (either case) is a left-associative
direct product.  ``@path`` reads a Cayley table from a JSON file holding
``{"table": [[...], ...]}`` (optionally ``"name"``); the path runs to the next
whitespace unless quoted.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import GroupValidationError
from .groups import CayleyTable, Cyclic, Dihedral, DirectProduct, GroupSpec, Quaternion

__all__ = ["GroupExprSyntaxError", "parse_group_expr", "load_cayley"]

_KINDS = {"Z": Cyclic, "Q": Quaternion, "D": Dihedral}


class GroupExprSyntaxError(GroupValidationError):
    def __init__(self, message: str, text: str, offset: int):
        self.text = text
        self.offset = offset  # byte offset into the UTF-8 encoded input
        super().__init__(f"{message} at byte {offset}: {text!r}")


def load_cayley(path: str) -> CayleyTable:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise GroupValidationError(f"cannot read Cayley table {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise GroupValidationError(f"Cayley table {path!r} is not valid JSON: {exc}") from None
    table = data.get("table") if isinstance(data, dict) else data
    if not isinstance(table, list) or not table:
        raise GroupValidationError(f"Cayley table {path!r}: expected a non-empty 'table' list")
    name = data.get("name", Path(path).stem) if isinstance(data, dict) else Path(path).stem
    try:
        rows = tuple(tuple(int(v) for v in row) for row in table)
    except (TypeError, ValueError):
        raise GroupValidationError(f"Cayley table {path!r}: entries must be integers") from None
    return CayleyTable(len(rows), rows, name=name)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def fail(self, msg: str, at: int | None = None):
        at = self.i if at is None else at
        raise GroupExprSyntaxError(msg, self.text, len(self.text[:at].encode()))

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.i += 1

    def integer(self) -> int:
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.fail("expected an integer")
        return int(self.text[start:self.i])

    def term(self) -> GroupSpec:
        ch = self.peek()
        if ch == "@":
            self.i += 1
            if self.peek() == '"':
                end = self.text.find('"', self.i + 1)
                if end < 0:
                    self.fail("unterminated quoted path")
                path, self.i = self.text[self.i + 1:end], end + 1
            else:
                start = self.i
                while self.i < len(self.text) and not self.text[self.i].isspace():
                    self.i += 1
                path = self.text[start:self.i]
            if not path:
                self.fail("expected a path after '@'")
            return load_cayley(path)
        kind = _KINDS.get(ch.upper()) if ch else None
        if kind is None:
            self.fail("expected Z(n), Q(n), D(n) or @path" if ch else "unexpected end of input")
        self.i += 1
        self.expect("(")
        k = self.integer()
        self.expect(")")
        return kind(k)

    def parse(self) -> GroupSpec:
        spec = self.term()
        while self.peek() in ("x", "X"):
            self.i += 1
            spec = DirectProduct((spec, self.term()))
        if self.peek():
            self.fail(f"unexpected {self.peek()!r}")
        return spec


def parse_group_expr(text: str) -> GroupSpec:
    return _Parser(text).parse()
