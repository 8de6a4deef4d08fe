"""Text syntax for group elements and cells.

    element     a<int>b<int>            a2b-3
    bar cell    [g1|g2|...]             [a1b0|a0b1], [] is the 0-cell
    fib cell    [<eta>||g1|g2|...]      [s||a1b0|a0b1], [b||]
                eta in * a b s

``str()`` of every cell type produces this syntax, so parsing round-trips.
"""

from __future__ import annotations

import re
from typing import Union

from kleintc.bar import BarCell
from kleintc.fibrewise import BaseCell, FibCell
from kleintc.group import GroupElement

_ELEMENT = re.compile(r"a([+-]?\d+)b([+-]?\d+)")
_FIB = re.compile(r"\[([*abs])\|\|(.*)\]")
_BAR = re.compile(r"\[(.*)\]")


class LiteralError(ValueError):
    pass


def parse_element(text: str) -> GroupElement:
    s = text.strip()
    match = _ELEMENT.fullmatch(s)
    if not match:
        raise LiteralError(f"bad group element {text!r}; expected a<int>b<int>, e.g. a2b-3")
    return GroupElement(int(match[1]), int(match[2]))


def _parse_entries(body: str, whole: str) -> tuple[GroupElement, ...]:
    if not body.strip():
        return ()
    try:
        return tuple(parse_element(part) for part in body.split("|"))
    except LiteralError as exc:
        raise LiteralError(f"in {whole!r}: {exc}") from None


def parse_cell(text: str) -> Union[BarCell, FibCell]:
    s = re.sub(r"\s+", "", text)
    match = _FIB.fullmatch(s)
    if match:
        return FibCell(BaseCell.from_symbol(match[1]), BarCell(_parse_entries(match[2], text)))
    match = _BAR.fullmatch(s)
    if match and "||" not in s:
        return BarCell(_parse_entries(match[1], text))
    raise LiteralError(
        f"bad cell literal {text!r}; expected [g1|g2|...] or [eta||g1|...] with eta in * a b s"
    )
