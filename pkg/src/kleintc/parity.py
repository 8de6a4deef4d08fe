"""Mod-2 arithmetic helpers.

Every quantity in the chain-level computations is eventually reduced mod 2;
the two integer functions below are the only non-polynomial pieces.
"""

Bit = int  # 0 or 1


def epsilon(l: int) -> Bit:
    """Parity indicator: 0 for even ``l``, 1 for odd ``l``."""
    return l % 2


def t(m: int) -> int:
    """floor(m / 2), rounding toward minus infinity for negative ``m``."""
    return m // 2


def t_mod2(m: int) -> Bit:
    # depends only on m mod 4
    return (m // 2) % 2
