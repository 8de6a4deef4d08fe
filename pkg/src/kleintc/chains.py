"""Finite formal sums of cells with coefficients in F_2."""

from __future__ import annotations

from typing import Hashable, Iterable, Iterator


class Chain:
    """A mod-2 chain, stored as the set of cells with coefficient 1.

    Adding a cell that is already present removes it.
    """

    __slots__ = ("_cells",)

    def __init__(self, cells: Iterable[Hashable] = ()):
        support: set = set()
        for c in cells:
            support ^= {c}
        self._cells = frozenset(support)

    @classmethod
    def _from_support(cls, support) -> "Chain":
        new = cls.__new__(cls)
        new._cells = frozenset(support)
        return new

    def __add__(self, other: "Chain") -> "Chain":
        if not isinstance(other, Chain):
            return NotImplemented
        return Chain._from_support(self._cells ^ other._cells)

    __sub__ = __add__

    def __iter__(self) -> Iterator:
        return iter(sorted(self._cells))

    def __contains__(self, cell) -> bool:
        return cell in self._cells

    def __len__(self) -> int:
        return len(self._cells)

    def __bool__(self) -> bool:
        return bool(self._cells)

    def __eq__(self, other) -> bool:
        if isinstance(other, Chain):
            return self._cells == other._cells
        if other == 0:
            return not self._cells
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._cells)

    def __str__(self) -> str:
        if not self._cells:
            return "0"
        return " + ".join(str(c) for c in self)

    def __repr__(self) -> str:
        return f"Chain({sorted(self._cells)!r})"

    @property
    def support(self) -> frozenset:
        return self._cells

    def map(self, f) -> "Chain":
        """Apply a linear map given on cells (``f`` returns a Chain)."""
        out: set = set()
        for c in self._cells:
            out ^= f(c).support
        return Chain._from_support(out)


ZERO = Chain()
