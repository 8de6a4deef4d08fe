"""Cochains given by exponent formulas, their coboundaries and cup products.

The complexes have infinitely many cells, so a cochain is a rule rather than a
table.  A rule receives the exponent sequences ``k = (k_1, ..., k_n)`` and
``l = (l_1, ..., l_n)`` of the fibre and returns an integer, which is reduced
mod 2 on evaluation.  Rules only use ``+``, ``*`` and ``//``, so they accept
either tuples of ints or tuples of numpy columns (see :mod:`kleintc.batch`).

Fibrewise cochains carry one rule per base cell; bar cochains carry one rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence, Union

from kleintc.bar import BarCell, boundary
from kleintc.fibrewise import BaseCell, FibCell, boundary_fib
from kleintc.parity import Bit, t

Rule = Callable[[Sequence, Sequence], object]

BAR = "bar"
FIBREWISE = "fibrewise"


def zero_rule(k, l):
    return 0


class CochainDomainError(ValueError):
    pass


@dataclass(frozen=True)
class Cochain:
    name: str
    degree: int
    carrier: str
    rules: Mapping[Optional[BaseCell], Rule] = field(default_factory=dict, compare=False)

    @classmethod
    def bar(cls, name: str, degree: int, rule: Rule) -> "Cochain":
        return cls(name, degree, BAR, {None: rule})

    @classmethod
    def fibrewise(cls, name: str, degree: int, *, star: Rule = zero_rule, a: Rule = zero_rule,
                  b: Rule = zero_rule, sigma: Rule = zero_rule) -> "Cochain":
        rules = {BaseCell.STAR: star, BaseCell.A: a, BaseCell.B: b, BaseCell.SIGMA: sigma}
        return cls(name, degree, FIBREWISE, rules)

    def rule_for(self, base: Optional[BaseCell]) -> Rule:
        return self.rules[None if self.carrier == BAR else base]

    def __call__(self, cell) -> Bit:
        return evaluate(self, cell)


def _carrier_of(cell) -> str:
    if isinstance(cell, BarCell):
        return BAR
    if isinstance(cell, FibCell):
        return FIBREWISE
    raise TypeError(f"not a cell: {cell!r}")


def _check_domain(c: Cochain, cell, degree: int, what: str) -> None:
    carrier = _carrier_of(cell)
    if carrier != c.carrier:
        raise CochainDomainError(f"{c.name} is a {c.carrier} cochain but {cell} is a {carrier} cell")
    if cell.dim != degree:
        raise CochainDomainError(
            f"{what} of {c.name} needs a cell of degree {degree}, got {cell} of degree {cell.dim}"
        )


def _value(c: Cochain, cell) -> Bit:
    if isinstance(cell, FibCell):
        rule, fibre = c.rules[cell.base], cell.fibre
    else:
        rule, fibre = c.rules[None], cell
    return int(rule(fibre.ks, fibre.ls)) % 2


def evaluate(c: Cochain, cell) -> Bit:
    _check_domain(c, cell, c.degree, "evaluation")
    return _value(c, cell)


def cup(p: Cochain, q: Cochain) -> Cochain:
    """Alexander-Whitney cup product of two bar cochains."""
    if p.carrier != BAR or q.carrier != BAR:
        raise CochainDomainError(f"cup needs two bar cochains, got {p.carrier} and {q.carrier}")
    front, back, d = p.rules[None], q.rules[None], p.degree

    def rule(k, l):
        return front(k[:d], l[:d]) * back(k[d:], l[d:])

    return Cochain.bar(f"({p.name}*{q.name})", p.degree + q.degree, rule)


def coboundary_eval(c: Cochain, cell, m: Optional[int] = None) -> Bit:
    """``(delta c)(cell) = c(boundary cell)``, mod 2.

    For fibrewise cochains ``m`` selects the complex the cell lives in.
    """
    _check_domain(c, cell, c.degree + 1, "coboundary")
    if isinstance(cell, FibCell):
        if m is None:
            m = cell.fibre.dim
        chain = boundary_fib(cell, m)
    else:
        chain = boundary(cell)
    return sum(_value(c, face) for face in chain) % 2


def coboundary(c: Cochain, m: Optional[int] = None) -> Cochain:
    """``delta c`` as a cochain of one degree higher (evaluated through the boundary)."""
    if c.carrier == BAR:
        return Cochain.bar(f"d{c.name}", c.degree + 1, lambda k, l: coboundary_eval(c, BarCell(tuple(zip(k, l)))))

    def over(base):
        return lambda k, l: coboundary_eval(c, FibCell(base, BarCell(tuple(zip(k, l)))), m)

    return Cochain(f"d{c.name}", c.degree + 1, FIBREWISE, {base: over(base) for base in BaseCell})


# ---- named cochains -------------------------------------------------------

def _u_star(k, l):
    return k[0] * t(k[1]) * l[2] * k[2] + k[0] * (l[1] * k[2] + k[1] * l[2] + k[1]) * t(k[2])


def _u0_star(k, l):
    return t(k[0]) * l[1] * k[1] + (l[0] * k[1] + k[0] * l[1] + k[0]) * t(k[1])


def _build() -> dict[str, Cochain]:
    x = Cochain.bar("x", 1, lambda k, l: k[0])
    y = Cochain.bar("y", 1, lambda k, l: l[0])
    z = cup(x, y)
    z = Cochain.bar("z", 2, z.rules[None])
    tk = Cochain.bar("tk", 1, lambda k, l: t(k[0]))
    k1tk2 = Cochain.bar("k1tk2", 2, lambda k, l: k[0] * t(k[1]))
    w = Cochain.fibrewise("w", 4, sigma=z.rules[None])
    u = Cochain.fibrewise("u", 3, star=_u_star, b=k1tk2.rules[None])
    w0 = Cochain.fibrewise("w0", 3, sigma=y.rules[None])
    u0 = Cochain.fibrewise("u0", 2, star=_u0_star, b=tk.rules[None])
    return {c.name: c for c in (x, y, z, w, u, w0, u0, tk, k1tk2)}


NAMED = _build()
NAMES = tuple(NAMED)


def named(name: str) -> Cochain:
    try:
        return NAMED[name]
    except KeyError:
        raise KeyError(f"unknown cochain {name!r}; valid names: {', '.join(NAMES)}") from None


CochainLike = Union[str, Cochain]


def as_cochain(c: CochainLike) -> Cochain:
    return named(c) if isinstance(c, str) else c
