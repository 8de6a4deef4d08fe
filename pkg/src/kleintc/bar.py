"""Cells of the bar construction and their face operators.

An n-cell is a tuple ``[g_1|...|g_n]`` of group elements.  The resolution is
not normalized: entries equal to the identity are allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from kleintc.chains import Chain
from kleintc.group import GroupElement, conjugate_tuple, multiply


@dataclass(frozen=True, order=True)
class BarCell:
    entries: tuple[GroupElement, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(GroupElement(*g) for g in self.entries))

    @classmethod
    def of(cls, *pairs) -> "BarCell":
        return cls(tuple(pairs))

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def ks(self) -> tuple[int, ...]:
        return tuple(g.k for g in self.entries)

    @property
    def ls(self) -> tuple[int, ...]:
        return tuple(g.l for g in self.entries)

    def conjugated(self, h: GroupElement) -> "BarCell":
        return BarCell(conjugate_tuple(self.entries, h))

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "[" + "|".join(str(g) for g in self.entries) + "]"


def face(omega: BarCell, i: int) -> BarCell:
    n = omega.dim
    if n < 1 or not 0 <= i <= n:
        raise IndexError(f"face index {i} out of range for a {n}-cell")
    g = omega.entries
    if i == 0:
        return BarCell(g[1:])
    if i == n:
        return BarCell(g[:-1])
    return BarCell(g[: i - 1] + (multiply(g[i - 1], g[i]),) + g[i + 1 :])


def faces(omega: BarCell) -> Iterable[BarCell]:
    if omega.dim == 0:
        return ()
    return (face(omega, i) for i in range(omega.dim + 1))


def boundary(omega: BarCell) -> Chain:
    """Mod-2 sum of all faces; the boundary of a 0-cell is zero."""
    return Chain(faces(omega))
