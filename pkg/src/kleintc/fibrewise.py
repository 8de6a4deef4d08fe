"""Product cells ``<eta||omega>`` over the Klein bottle and their boundaries.

The base is the minimal CW structure of the Klein bottle: one 0-cell ``*``,
1-cells ``a`` and ``b`` and a 2-cell ``sigma``.  The fibre is a bar cell; the
cell lies in the m-th fibrewise projective space when its fibre has length
at most m.

Boundary formulas, mod 2::

    d<*||w>     = <*||dw>
    d<t||w>     = <*||w> + <*||t w t^-1> + <t||dw>                 (t = a, b)
    d<sigma||w> = <a||w> + <a||(ba) w (ba)^-1> + <b||w> + <b||a w a^-1>
                  + <sigma||dw>
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from kleintc.bar import BarCell, faces
from kleintc.chains import Chain
from kleintc.group import A, B, GroupElement, multiply


class BaseCell(enum.IntEnum):
    STAR = 0
    A = 1
    B = 2
    SIGMA = 3

    @property
    def dim(self) -> int:
        return _BASE_DIM[self]

    @property
    def symbol(self) -> str:
        return _BASE_SYMBOL[self]

    @classmethod
    def from_symbol(cls, s: str) -> "BaseCell":
        try:
            return _SYMBOL_BASE[s]
        except KeyError:
            raise ValueError(f"unknown base cell {s!r}; expected one of * a b s") from None


_BASE_DIM = {BaseCell.STAR: 0, BaseCell.A: 1, BaseCell.B: 1, BaseCell.SIGMA: 2}
_BASE_SYMBOL = {BaseCell.STAR: "*", BaseCell.A: "a", BaseCell.B: "b", BaseCell.SIGMA: "s"}
_SYMBOL_BASE = {v: k for k, v in _BASE_SYMBOL.items()}
_SYMBOL_BASE["sigma"] = BaseCell.SIGMA

BA = multiply(B, A)

# conjugators attached to the edges of each base cell
EDGE_CONJUGATOR = {BaseCell.A: A, BaseCell.B: B}
SIGMA_EDGES = ((BaseCell.A, None), (BaseCell.A, BA), (BaseCell.B, None), (BaseCell.B, A))


class NotInComplexError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class FibCell:
    base: BaseCell
    fibre: BarCell = BarCell()

    def __post_init__(self):
        object.__setattr__(self, "base", BaseCell(self.base))
        if not isinstance(self.fibre, BarCell):
            object.__setattr__(self, "fibre", BarCell(tuple(self.fibre)))

    @property
    def dim(self) -> int:
        return self.base.dim + self.fibre.dim

    @property
    def filtration(self) -> int:
        return self.base.dim

    def __str__(self) -> str:
        return f"[{self.base.symbol}||" + "|".join(str(g) for g in self.fibre.entries) + "]"


def _over(base: BaseCell, fibres: Iterable[BarCell]) -> Iterator[FibCell]:
    return (FibCell(base, f) for f in fibres)


def boundary_terms(c: FibCell) -> list[FibCell]:
    """All boundary terms of ``c``, with repetition (sum them mod 2)."""
    w = c.fibre
    terms = list(_over(c.base, faces(w)))
    if c.base in EDGE_CONJUGATOR:
        h = EDGE_CONJUGATOR[c.base]
        terms += [FibCell(BaseCell.STAR, w), FibCell(BaseCell.STAR, w.conjugated(h))]
    elif c.base is BaseCell.SIGMA:
        for edge, h in SIGMA_EDGES:
            terms.append(FibCell(edge, w if h is None else w.conjugated(h)))
    return terms


def boundary_fib(c: FibCell, m: int) -> Chain:
    if c.fibre.dim > m:
        raise NotInComplexError(
            f"{c} has fibre length {c.fibre.dim} > m={m}; it is not a cell of P^{m}"
        )
    return Chain(boundary_terms(c))


def grid_elements(k_values: Iterable[int], l_values: Iterable[int]) -> list[GroupElement]:
    return [GroupElement(k, l) for k in sorted(set(k_values)) for l in sorted(set(l_values))]


def fibre_tuples(n: int, k_values: Iterable[int], l_values: Iterable[int]) -> Iterator[BarCell]:
    elements = grid_elements(k_values, l_values)
    if not elements:
        return
    for entries in itertools.product(elements, repeat=n):
        yield BarCell(entries)


def enumerate_cells(
    base: BaseCell, n: int, k_values: Iterable[int], l_values: Iterable[int]
) -> Iterator[FibCell]:
    """Every cell over ``base`` whose fibre has ``n`` entries drawn from the grid.

    Order is lexicographic in the fibre entries.
    """
    if n < 0:
        raise ValueError(f"fibre length must be non-negative, got {n}")
    return _over(BaseCell(base), fibre_tuples(n, k_values, l_values))


def cells_of_dim(d: int, m: int, k_values, l_values) -> Iterator[FibCell]:
    """Cells of dimension ``d`` in the m-th complex over the given grid."""
    k_values, l_values = list(k_values), list(l_values)
    for base in BaseCell:
        n = d - base.dim
        if 0 <= n <= m:
            yield from enumerate_cells(base, n, k_values, l_values)
