"""Index strings: parsing, rendering, and family classification.

Grammar (whitespace ignored between tokens):

    index  :=  [ term ("," term)* ]
    term   :=  atom  |  "{" index "}" "^" count
    atom   :=  digits  |  "-" digits

A negative atom marks an alternating-sign entry. Repetition groups expand
eagerly and may nest; a count of 0 expands to nothing and a bare group
without "^" means one copy. A zero entry is rejected (no such exponent
exists), as is an empty group body. Syntax errors carry the 0-based
offset where parsing failed.

Classification sorts an index into the evaluator families, most specific
first: all-twos, (3,1) repeats, (3,1) repeats with one trailing 2, the
mixed blocks ({2}^m, 3, {2}^m, 1)^d with m >= 1, the same with a trailing
{2}^(m+1), and finally "generic" for everything else (generic indices have
no closed form here and are served by the numerical oracle).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence


class IndexSyntaxError(ValueError):
    """Malformed index string; .position is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _parse_count(text: str, i: int):
    start = i
    while i < len(text) and text[i].isdigit():
        i += 1
    if i == start:
        raise IndexSyntaxError("expected a number", start)
    return int(text[start:i]), i


def _parse_term(text: str, i: int):
    i = _skip_ws(text, i)
    if i >= len(text):
        raise IndexSyntaxError("expected an entry or '{'", i)
    c = text[i]
    if c == "{":
        inner, i = _parse_seq(text, i + 1, allow_empty=False)
        i = _skip_ws(text, i)
        if i >= len(text) or text[i] != "}":
            raise IndexSyntaxError("expected '}'", i)
        i = _skip_ws(text, i + 1)
        if i < len(text) and text[i] == "^":
            i = _skip_ws(text, i + 1)
            count, i = _parse_count(text, i)
        else:
            count = 1    # bare {...} means one copy
        return inner * count, i
    if c == "-":
        pos = i
        i = _skip_ws(text, i + 1)
        value, i = _parse_count(text, i)
        if value == 0:
            raise IndexSyntaxError("zero entry", pos)
        return [-value], i
    if c.isdigit():
        pos = i
        value, i = _parse_count(text, i)
        if value == 0:
            raise IndexSyntaxError("zero entry", pos)
        return [value], i
    raise IndexSyntaxError("unexpected character %r" % c, i)


def _parse_seq(text: str, i: int, allow_empty: bool):
    entries = []
    i = _skip_ws(text, i)
    if i >= len(text) or text[i] == "}":
        if allow_empty:
            return entries, i
        raise IndexSyntaxError("empty group", i)
    while True:
        term, i = _parse_term(text, i)
        entries.extend(term)
        i = _skip_ws(text, i)
        if i < len(text) and text[i] == ",":
            i += 1
            continue
        return entries, i


def parse_index(text: str) -> list:
    """Parse an index string to a list of signed nonzero integers."""
    entries, i = _parse_seq(text, 0, allow_empty=True)
    i = _skip_ws(text, i)
    if i != len(text):
        raise IndexSyntaxError("unexpected trailing input", i)
    return entries


def render_index(entries: Sequence[int]) -> str:
    """Canonical string for an entry list; parse_index inverts it.

    Runs of one repeated entry of length >= 2 compress to {a}^r; nothing
    else does, so mixed blocks render flat: [3,1,3,1] -> "3,1,3,1" while
    [2,2,-2] -> "{2}^2,-2".
    """
    out = []
    i = 0
    n = len(entries)
    while i < n:
        e = int(entries[i])
        if e == 0:
            raise ValueError("zero entry at position %d" % i)
        j = i
        while j < n and entries[j] == e:
            j += 1
        run = j - i
        out.append("{%d}^%d" % (e, run) if run >= 2 else str(e))
        i = j
    return ",".join(out)


@dataclass(frozen=True)
class Classification:
    family: str
    d: Optional[int] = None
    m: Optional[int] = None


def _block(m: int) -> list:
    return [2] * m + [3] + [2] * m + [1]


def classify(entries: Sequence[int]) -> Classification:
    """Sort an index into its evaluator family, most specific first."""
    e = [int(x) for x in entries]
    n = len(e)
    if all(x == 2 for x in e):
        return Classification("twos", d=n)
    if n >= 2 and n % 2 == 0 and e == [3, 1] * (n // 2):
        return Classification("31", d=n // 2)
    if n >= 3 and n % 2 == 1 and e[-1] == 2 \
            and e[:-1] == [3, 1] * (n // 2):
        return Classification("31_2", d=n // 2)
    # ({2}^m, 3, {2}^m, 1)^d, m >= 1: block length 2m+2
    for m in range(1, (n - 2) // 2 + 1):
        length = 2 * m + 2
        if n % length == 0:
            d = n // length
            if d >= 1 and e == _block(m) * d:
                return Classification("2321", d=d, m=m)
    # the same with a trailing {2}^(m+1)
    for m in range(1, n):
        length = 2 * m + 2
        rest = n - (m + 1)
        if rest >= length and rest % length == 0:
            d = rest // length
            if e == _block(m) * d + [2] * (m + 1):
                return Classification("2321_tail", d=d, m=m)
    return Classification("generic")
