"""Chain-level machinery for the Klein bottle group and machine checks of the
coboundary certificates behind ``tc(K) = 4``."""

from kleintc.bar import BarCell, boundary, face
from kleintc.chains import Chain
from kleintc.cochains import Cochain, coboundary_eval, cup, evaluate, named
from kleintc.fibrewise import BaseCell, FibCell, boundary_fib, enumerate_cells
from kleintc.group import GroupElement, SurfaceWord, conjugate, conjugate_tuple, inverse, multiply, phi, phi_well_defined
from kleintc.literals import parse_cell, parse_element
from kleintc.parity import epsilon, t, t_mod2
from kleintc.verifier import (
    Config,
    Report,
    run_all,
    verify_boundary_squared,
    verify_cocycles,
    verify_group_and_phi,
    verify_identities,
    verify_main_certificate,
    verify_periodicity,
    verify_remark_certificate,
)

__version__ = "0.1.0"
