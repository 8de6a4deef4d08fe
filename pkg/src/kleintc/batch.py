"""Vectorized evaluation of cochains and coboundaries over whole cell families.

A family is every cell over one base cell whose fibre entries range over a
grid of group elements.  Fibres are held column-wise: ``ks[i]`` and ``ls[i]``
are arrays with one entry per cell.  Group operations and face maps are
re-implemented here on arrays; :mod:`kleintc.fibrewise` is the scalar
reference they are tested against.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from kleintc.bar import BarCell
from kleintc.cochains import Cochain
from kleintc.fibrewise import BaseCell, FibCell, grid_elements
from kleintc.group import GroupElement

# beyond this the quartic exponent products may leave int64
_INT64_SAFE = 1000

Columns = tuple  # tuple of 1-d arrays, one per fibre entry


def _mul(k1, l1, k2, l2):
    return k1 + (1 - 2 * (l1 % 2)) * k2, l1 + l2


def _conj(k, l, h: GroupElement):
    # h g h^-1 with h fixed: the b-part of h flips k, the a-part shifts by 2*eps(l)
    hk, hl = h
    sign = -1 if hl % 2 else 1
    return hk + sign * k - (1 - 2 * (l % 2)) * hk, l


def faces(ks: Columns, ls: Columns) -> list[tuple[Columns, Columns]]:
    n = len(ks)
    if n == 0:
        return []
    out = [(ks[1:], ls[1:])]
    for i in range(1, n):
        k, l = _mul(ks[i - 1], ls[i - 1], ks[i], ls[i])
        out.append((ks[: i - 1] + (k,) + ks[i + 1 :], ls[: i - 1] + (l,) + ls[i + 1 :]))
    out.append((ks[:-1], ls[:-1]))
    return out


def conjugated(ks: Columns, ls: Columns, h: GroupElement) -> tuple[Columns, Columns]:
    pairs = [_conj(k, l, h) for k, l in zip(ks, ls)]
    return tuple(p[0] for p in pairs), tuple(p[1] for p in pairs)


_A, _B, _BA = GroupElement(1, 0), GroupElement(0, 1), GroupElement(-1, 1)


def boundary_terms(base, ks: Columns, ls: Columns) -> list[tuple]:
    """Boundary terms ``(base, ks, ls)`` of a family, with repetition."""
    terms = [(base, fk, fl) for fk, fl in faces(ks, ls)]
    if base is None or base is BaseCell.STAR:
        return terms
    if base in (BaseCell.A, BaseCell.B):
        h = _A if base is BaseCell.A else _B
        return terms + [(BaseCell.STAR, ks, ls), (BaseCell.STAR, *conjugated(ks, ls, h))]
    return terms + [
        (BaseCell.A, ks, ls),
        (BaseCell.A, *conjugated(ks, ls, _BA)),
        (BaseCell.B, ks, ls),
        (BaseCell.B, *conjugated(ks, ls, _A)),
    ]


def evaluate(c: Cochain, base, ks: Columns, ls: Columns, size: int) -> np.ndarray:
    value = c.rule_for(base)(ks, ls)
    return np.broadcast_to(np.asarray(value) % 2, (size,)).astype(np.int8)


def coboundary(c: Cochain, base, ks: Columns, ls: Columns, size: int) -> np.ndarray:
    total = np.zeros(size, dtype=np.int64)
    for b, tk, tl in boundary_terms(base, ks, ls):
        total += (np.asarray(c.rule_for(b)(tk, tl)) % 2).astype(np.int64)
    return (total % 2).astype(np.int8)


@dataclass
class Family:
    """All cells over ``base`` (None for bar cells) with ``n`` fibre entries from a grid."""

    base: BaseCell | None
    n: int
    elements: list[GroupElement]

    @classmethod
    def over_grid(cls, base, n: int, k_values, l_values) -> "Family":
        return cls(base, n, grid_elements(k_values, l_values))

    def __len__(self) -> int:
        return len(self.elements) ** self.n if self.elements else 0

    def index_rows(self) -> np.ndarray:
        """(cells, n) array of element indices in lexicographic order."""
        e = len(self.elements)
        if e == 0:
            return np.zeros((0, self.n), dtype=np.int64)
        if self.n == 0:
            return np.zeros((1, 0), dtype=np.int64)
        return np.indices((e,) * self.n, dtype=np.int64).reshape(self.n, -1).T

    def columns(self, rows: np.ndarray) -> tuple[Columns, Columns]:
        big = max((max(abs(g.k), abs(g.l)) for g in self.elements), default=0) > _INT64_SAFE
        dtype = object if big else np.int64
        ek = np.array([g.k for g in self.elements], dtype=dtype)
        el = np.array([g.l for g in self.elements], dtype=dtype)
        return tuple(ek[rows[:, i]] for i in range(self.n)), tuple(el[rows[:, i]] for i in range(self.n))

    def cell(self, row: Sequence[int]):
        fibre = BarCell(tuple(self.elements[i] for i in row))
        return fibre if self.base is None else FibCell(self.base, fibre)


def _chunks(rows: np.ndarray, jobs: int) -> list[np.ndarray]:
    if jobs <= 1 or len(rows) < 2 * jobs:
        return [rows]
    return np.array_split(rows, jobs)


def compare(family: Family, lhs, rhs, jobs: int = 1, limit: int | None = None):
    """Evaluate ``lhs`` and ``rhs`` on every cell of ``family``.

    ``lhs``/``rhs`` are callables ``(base, ks, ls, size) -> int8 array``.
    Returns ``(cases, mismatch_count, [(cell, expected, got), ...])`` with
    expected taken from ``rhs``.  At most ``limit`` witnesses are kept, in
    enumeration order.
    """
    rows = family.index_rows()

    def run(chunk):
        ks, ls = family.columns(chunk)
        size = len(chunk)
        got = lhs(family.base, ks, ls, size)
        expected = rhs(family.base, ks, ls, size)
        bad = np.nonzero(got != expected)[0]
        kept = bad if limit is None else bad[:limit]
        return len(bad), [(chunk[i], int(expected[i]), int(got[i])) for i in kept]

    chunks = _chunks(rows, jobs)
    if len(chunks) == 1:
        results = [run(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run, chunks))
    count = sum(n for n, _ in results)
    witnesses = [w for _, part in results for w in part]
    if limit is not None:
        witnesses = witnesses[:limit]
    failures = [(family.cell(row), e, g) for row, e, g in witnesses]
    return len(rows), count, failures
