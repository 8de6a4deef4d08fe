"""The Klein bottle group ``<a, b | aba = b>`` in normal form ``a^k b^l``.

Elements are pairs ``(k, l)``.  Pushing ``a^k`` past ``b^l`` flips the sign of
``k`` when ``l`` is odd (``ba = a^-1 b``), so the product is::

    (k1, l1) * (k2, l2) = (k1 + (-1)**l1 * k2, l1 + l2)

Also here: surface words for the genus-q group
``<b, b_1, ..., b_{q-1} | b_1^2 ... b_{q-1}^2 = b^2>`` and the homomorphism
onto the Klein bottle group sending ``b -> b``, ``b_1 -> ab``, ``b_i -> 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, NamedTuple, Sequence


class GroupElement(NamedTuple):
    k: int  # exponent of a
    l: int  # exponent of b

    def __str__(self) -> str:
        return f"a{self.k}b{self.l}"


IDENTITY = GroupElement(0, 0)
A = GroupElement(1, 0)
B = GroupElement(0, 1)


def _sign(l: int) -> int:
    return -1 if l % 2 else 1


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    return GroupElement(g.k + _sign(g.l) * h.k, g.l + h.l)


def product(elements: Iterable[GroupElement]) -> GroupElement:
    return reduce(multiply, elements, IDENTITY)


def inverse(g: GroupElement) -> GroupElement:
    return GroupElement(-_sign(g.l) * g.k, -g.l)


def power(g: GroupElement, n: int) -> GroupElement:
    base = g if n >= 0 else inverse(g)
    return product([base] * abs(n))


def conjugate(g: GroupElement, h: GroupElement) -> GroupElement:
    """Return ``h g h^-1``."""
    return multiply(multiply(h, g), inverse(h))


def conjugate_tuple(omega: Sequence[GroupElement], h: GroupElement) -> tuple[GroupElement, ...]:
    return tuple(conjugate(g, h) for g in omega)


class InvalidWordError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceWord:
    """A word in the generators of the genus-q group.

    ``letters`` holds ``(index, exponent)`` pairs; index 0 is ``b`` and
    index ``i >= 1`` is ``b_i``.
    """

    q: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.q < 2:
            raise InvalidWordError(f"genus must be at least 2, got q={self.q}")
        object.__setattr__(self, "letters", tuple((int(i), int(e)) for i, e in self.letters))
        for i, _ in self.letters:
            if not 0 <= i < self.q:
                raise InvalidWordError(
                    f"generator index {i} is not valid for genus {self.q}; "
                    f"expected 0 (b) or 1..{self.q - 1} (b_i)"
                )

    @classmethod
    def relator(cls, q: int) -> "SurfaceWord":
        """``b_1^2 ... b_{q-1}^2 b^-2``."""
        return cls(q, tuple((i, 2) for i in range(1, q)) + ((0, -2),))


def _generator_image(index: int) -> GroupElement:
    if index == 0:
        return B
    if index == 1:
        return multiply(A, B)
    return IDENTITY


def phi(word: SurfaceWord) -> GroupElement:
    return product(power(_generator_image(i), e) for i, e in word.letters)


def phi_well_defined(q: int) -> bool:
    if q < 2:
        raise InvalidWordError(f"genus must be at least 2, got q={q}")
    return phi(SurfaceWord.relator(q)) == IDENTITY
