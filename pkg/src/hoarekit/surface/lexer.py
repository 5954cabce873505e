from __future__ import annotations

from dataclasses import dataclass

# unicode input aliases, normalised to the ASCII token they stand for
ALIASES = {"¬": "!", "∧": "&", "∨": "|", "→": "->", "·": "*", "∀": "forall", "∃": "exists"}

PUNCT2 = ("->", ":=")
PUNCT1 = "(){}[]<>,:;=+*!&|`"


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int, expected=()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(sorted(set(expected)))
        text = f"{line}:{col}: {message}"
        if self.expected:
            text += f" (expected {', '.join(self.expected)})"
        super().__init__(text)


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # IDENT, NUM, S, EOF, or the punctuation itself
    value: str
    line: int
    col: int


def tokenize(src: str) -> list[Token]:
    out = []
    i, line, col = 0, 1, 1
    n = len(src)
    while i < n:
        c = src[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c.isspace():
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and src[i] != "\n":
                i += 1
            continue
        if c in ALIASES:
            a = ALIASES[c]
            kind = "IDENT" if a.isalpha() else a
            out.append(Token(kind, a, line, col))
            i += 1
            col += 1
            continue
        if c == "S":
            out.append(Token("S", "S", line, col))
            i += 1
            col += 1
            continue
        if c.isascii() and (c.isalpha() or c == "_"):
            j = i
            while j < n and src[j].isascii() and (src[j].isalnum() or src[j] == "_"):
                j += 1
            out.append(Token("IDENT", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            out.append(Token("NUM", src[i:j], line, col))
            col += j - i
            i = j
            continue
        two = src[i:i + 2]
        if two in PUNCT2:
            out.append(Token(two, two, line, col))
            i += 2
            col += 2
            continue
        if c in PUNCT1:
            out.append(Token(c, c, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {c!r}", line, col)
    out.append(Token("EOF", "", line, col))
    return out
