"""Exhaustive checks of the coboundary certificates and their supporting identities.

Every formula involved (group law, conjugation, ``t``, parity, products of
exponents) reduces mod 2 through ``k mod 4`` and ``l mod 2``.  A check that
passes on the residue grid ``k in {0..3}``, ``l in {0, 1}`` therefore holds
for all integer exponents; :func:`verify_periodicity` tests that reduction
instead of assuming it.
"""

from __future__ import annotations

import itertools
import logging
import random
import time
from dataclasses import dataclass, field, fields
from typing import Any, Callable, Iterable, Mapping, Optional, Sequence

from kleintc import batch
from kleintc.bar import BarCell
from kleintc.cochains import NAMES, BAR, Cochain, CochainLike, as_cochain, coboundary_eval, evaluate
from kleintc.fibrewise import BaseCell, FibCell, boundary_fib, cells_of_dim
from kleintc.group import (
    A,
    B,
    IDENTITY,
    GroupElement,
    conjugate,
    inverse,
    multiply,
    phi_well_defined,
)
from kleintc.parity import epsilon, t_mod2

log = logging.getLogger(__name__)

RESIDUE_K = tuple(range(4))
RESIDUE_L = tuple(range(2))
WIDE_K = tuple(range(-6, 7))
WIDE_L = tuple(range(-3, 4))
DEFAULT_MAX_FAILURES = 50


@dataclass(frozen=True)
class Failure:
    cell: Any
    expected: int
    got: int

    def to_json(self) -> dict:
        return {"cell": str(self.cell), "expected": self.expected, "got": self.got}


@dataclass
class Report:
    check_name: str
    parameters: dict
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    failure_count: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "check": self.check_name,
            "parameters": self.parameters,
            "cases": self.cases,
            "failures": [f.to_json() for f in self.failures],
            "failure_count": self.failure_count,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
            "pass": self.passed,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.check_name}: {self.cases - self.failure_count}/{self.cases} cases ({self.elapsed * 1000:.0f} ms)"
        if self.failures:
            f = self.failures[0]
            line += f"; first witness {f.cell}: expected {f.expected}, got {f.got}"
        return line


class _Recorder:
    """Accumulates cases and failures for one report."""

    def __init__(self, name: str, parameters: dict, limit: Optional[int]):
        self.report = Report(name, parameters)
        self.limit = limit
        self._start = time.perf_counter()

    def add(self, cases: int, count: int, failures: Iterable[tuple]):
        self.report.cases += cases
        self.report.failure_count += count
        for cell, expected, got in failures:
            if self.limit is None or len(self.report.failures) < self.limit:
                self.report.failures.append(Failure(cell, expected, got))

    def check(self, cell, expected: int, got: int):
        self.report.cases += 1
        if expected != got:
            self.add(0, 1, [(cell, expected, got)])

    def done(self) -> Report:
        self.report.elapsed = time.perf_counter() - self._start
        log.debug(self.report.summary())
        return self.report


def _grid_params(k_values, l_values) -> dict:
    return {"k_values": sorted(set(k_values)), "l_values": sorted(set(l_values))}


def _require_grid(k_values, l_values):
    if not list(k_values) or not list(l_values):
        raise ValueError("k_values and l_values must be non-empty")


def _delta(c: Cochain):
    return lambda base, ks, ls, size: batch.coboundary(c, base, ks, ls, size)


def _value(c: Cochain):
    return lambda base, ks, ls, size: batch.evaluate(c, base, ks, ls, size)


def _formula(f: Callable):
    return lambda base, ks, ls, size: batch.evaluate(Cochain.bar("", 0, f), None, ks, ls, size)


def _certificate(name, u: Cochain, w: Cochain, m: int, k_values, l_values, jobs, max_failures) -> Report:
    _require_grid(k_values, l_values)
    rec = _Recorder(name, {**_grid_params(k_values, l_values), "m": m, "u": u.name, "w": w.name}, max_failures)
    # top-dimensional families of P^m, sigma first
    for base in (BaseCell.SIGMA, BaseCell.A, BaseCell.B, BaseCell.STAR):
        n = w.degree - base.dim
        if 0 <= n <= m:
            family = batch.Family.over_grid(base, n, k_values, l_values)
            rec.add(*batch.compare(family, _delta(u), _value(w), jobs, max_failures))
    return rec.done()


def verify_main_certificate(
    k_values: Sequence[int] = RESIDUE_K,
    l_values: Sequence[int] = RESIDUE_L,
    *,
    u: CochainLike = "u",
    w: CochainLike = "w",
    jobs: int = 1,
    max_failures: Optional[int] = DEFAULT_MAX_FAILURES,
) -> Report:
    """``delta u == w`` on every 4-cell of P^3 over the grid."""
    return _certificate("main", as_cochain(u), as_cochain(w), 3, k_values, l_values, jobs, max_failures)


def verify_remark_certificate(
    k_values: Sequence[int] = RESIDUE_K,
    l_values: Sequence[int] = RESIDUE_L,
    *,
    u0: CochainLike = "u0",
    w0: CochainLike = "w0",
    jobs: int = 1,
    max_failures: Optional[int] = DEFAULT_MAX_FAILURES,
) -> Report:
    """``delta u0 == w0`` on every 3-cell of P^2 over the grid."""
    return _certificate("remark", as_cochain(u0), as_cochain(w0), 2, k_values, l_values, jobs, max_failures)


_ZERO = _formula(lambda k, l: 0)


def verify_cocycles(
    k_values: Sequence[int] = RESIDUE_K,
    l_values: Sequence[int] = RESIDUE_L,
    *,
    jobs: int = 1,
    max_failures: Optional[int] = DEFAULT_MAX_FAILURES,
) -> Report:
    """x, y and z are cocycles, and z agrees with its closed form ``k1*l2``."""
    _require_grid(k_values, l_values)
    rec = _Recorder("cocycles", _grid_params(k_values, l_values), max_failures)
    two = batch.Family.over_grid(None, 2, k_values, l_values)
    three = batch.Family.over_grid(None, 3, k_values, l_values)
    for name, family in (("x", two), ("y", two), ("z", three)):
        rec.add(*batch.compare(family, _delta(as_cochain(name)), _ZERO, jobs, max_failures))
    closed = _formula(lambda k, l: k[0] * l[1])
    rec.add(*batch.compare(two, _value(as_cochain("z")), closed, jobs, max_failures))
    return rec.done()


def verify_identities(
    lo: int = -20,
    hi: int = 20,
    k_values: Sequence[int] = RESIDUE_K,
    l_values: Sequence[int] = RESIDUE_L,
    *,
    jobs: int = 1,
    max_failures: Optional[int] = DEFAULT_MAX_FAILURES,
) -> Report:
    """The two mod-2 identities of ``t`` over ``[lo, hi]`` and the two
    coboundary formulas they imply, over bar cells from the grid."""
    if lo > hi:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    _require_grid(k_values, l_values)
    rec = _Recorder("identities", {"interval": [lo, hi], **_grid_params(k_values, l_values)}, max_failures)
    span = range(lo, hi + 1)
    for m in span:
        rec.check(f"t(-m) at m={m}", (t_mod2(m) + m) % 2, t_mod2(-m))
    for m, n, l in itertools.product(span, repeat=3):
        rec.check(f"t(m+n+2l) at m={m} n={n} l={l}", (t_mod2(m) + t_mod2(n) + m * n + l) % 2, t_mod2(m + n + 2 * l))
    two = batch.Family.over_grid(None, 2, k_values, l_values)
    three = batch.Family.over_grid(None, 3, k_values, l_values)
    rec.add(*batch.compare(two, _delta(as_cochain("tk")), _formula(lambda k, l: (l[0] + k[0]) * k[1]), jobs, max_failures))
    rec.add(*batch.compare(
        three, _delta(as_cochain("k1tk2")), _formula(lambda k, l: k[0] * (l[1] + k[1]) * k[2]), jobs, max_failures
    ))
    return rec.done()


def verify_boundary_squared(
    max_dim: int = 4,
    m: int = 3,
    k_values: Sequence[int] = RESIDUE_K,
    l_values: Sequence[int] = RESIDUE_L,
    *,
    max_failures: Optional[int] = DEFAULT_MAX_FAILURES,
) -> Report:
    """``d(d c) == 0`` mod 2 for every cell of dimension <= max_dim in P^m."""
    if max_dim > m + 2:
        raise ValueError(f"max_dim={max_dim} exceeds m+2={m + 2}")
    _require_grid(k_values, l_values)
    rec = _Recorder("ddzero", {"max_dim": max_dim, "m": m, **_grid_params(k_values, l_values)}, max_failures)
    k_values, l_values = list(k_values), list(l_values)
    for d in range(max_dim + 1):
        for cell in cells_of_dim(d, m, k_values, l_values):
            dd = boundary_fib(cell, m).map(lambda c: boundary_fib(c, m))
            rec.check(cell, 0, 1 if dd else 0)
    return rec.done()


# complex used for each fibrewise cochain's coboundary
_AMBIENT_M = {"u": 3, "w": 5, "u0": 2, "w0": 2}


def _random_cell(rng: random.Random, c: Cochain, degree: int, k_span: int, l_span: int):
    if c.carrier == BAR:
        n, base = degree, None
    else:
        m = _AMBIENT_M.get(c.name, degree)
        bases = [b for b in BaseCell if 0 <= degree - b.dim <= m]
        base = rng.choice(bases)
        n = degree - base.dim
    fibre = BarCell(tuple(
        GroupElement(rng.randint(-k_span, k_span), rng.randint(-l_span, l_span)) for _ in range(n)
    ))
    return fibre if base is None else FibCell(base, fibre)


def _shifted(cell, i: int, dk: int, dl: int):
    fibre = cell.fibre if isinstance(cell, FibCell) else cell
    entries = list(fibre.entries)
    g = entries[i]
    entries[i] = GroupElement(g.k + dk, g.l + dl)
    new = BarCell(tuple(entries))
    return FibCell(cell.base, new) if isinstance(cell, FibCell) else new


_SHIFTS = ((4, 0), (-4, 0), (0, 2), (0, -2))


def verify_periodicity(
    samples: int = 10_000,
    seed: int = 0,
    *,
    names: Sequence[str] = NAMES,
    k_span: int = 40,
    l_span: int = 20,
    max_failures: Optional[int] = DEFAULT_MAX_FAILURES,
) -> Report:
    """Random shift-invariance samples: k_i -> k_i +- 4 or l_i -> l_i +- 2
    leaves every named cochain value and coboundary value unchanged."""
    if samples <= 0:
        raise ValueError(f"samples must be positive, got {samples}")
    rng = random.Random(seed)
    rec = _Recorder("periodicity", {"samples": samples, "seed": seed, "k_span": k_span, "l_span": l_span}, max_failures)
    cochains = [as_cochain(n) for n in names]
    for _ in range(samples):
        c = rng.choice(cochains)
        delta = rng.random() < 0.5
        degree = c.degree + 1 if delta else c.degree
        cell = _random_cell(rng, c, degree, k_span, l_span)
        if cell.dim == 0 or (isinstance(cell, FibCell) and cell.fibre.dim == 0):
            # nothing to shift; still a valid (trivial) sample
            rec.check(cell, 0, 0)
            continue
        n = cell.fibre.dim if isinstance(cell, FibCell) else cell.dim
        dk, dl = rng.choice(_SHIFTS)
        other = _shifted(cell, rng.randrange(n), dk, dl)
        if delta:
            m = _AMBIENT_M.get(c.name)
            before, after = coboundary_eval(c, cell, m), coboundary_eval(c, other, m)
            label = f"d{c.name} {cell} vs {other}"
        else:
            before, after = evaluate(c, cell), evaluate(c, other)
            label = f"{c.name} {cell} vs {other}"
        rec.check(label, before, after)
    return rec.done()


def _special_conjugations(g: GroupElement) -> list[tuple[str, GroupElement, GroupElement]]:
    k, l = g
    b_image = GroupElement(-k, l)
    return [
        ("b", conjugate(g, B), b_image),
        ("b^-1", conjugate(g, inverse(B)), b_image),
        ("a", conjugate(g, A), GroupElement(k + 2 * epsilon(l), l)),
        ("a^-1", conjugate(g, inverse(A)), GroupElement(k - 2 * epsilon(l), l)),
    ]


def verify_group_and_phi(
    q_max: int = 10,
    k_values: Sequence[int] = RESIDUE_K,
    l_values: Sequence[int] = RESIDUE_L,
    *,
    random_samples: int = 1000,
    seed: int = 0,
    max_failures: Optional[int] = DEFAULT_MAX_FAILURES,
) -> Report:
    if q_max < 2:
        raise ValueError(f"q_max must be at least 2, got {q_max}")
    _require_grid(k_values, l_values)
    rec = _Recorder("group", {"q_max": q_max, **_grid_params(k_values, l_values), "seed": seed}, max_failures)
    grid = [GroupElement(k, l) for k in sorted(set(k_values)) for l in sorted(set(l_values))]
    rng = random.Random(seed)
    wide = [GroupElement(rng.randint(-50, 50), rng.randint(-50, 50)) for _ in range(3 * random_samples)]
    triples = list(itertools.product(grid, repeat=3)) + [tuple(wide[3 * i : 3 * i + 3]) for i in range(random_samples)]

    def same(label, lhs, rhs):
        rec.check(label, 0, 0 if lhs == rhs else 1)

    for g, h, f in triples:
        same(f"assoc {g} {h} {f}", multiply(multiply(g, h), f), multiply(g, multiply(h, f)))
    same("aba = b", multiply(multiply(A, B), A), B)
    same("(ab)^2 = b^2", multiply(multiply(A, B), multiply(A, B)), multiply(B, B))
    for g in grid + wide[:random_samples]:
        same(f"g g^-1 at {g}", multiply(g, inverse(g)), IDENTITY)
        same(f"g^-1 g at {g}", multiply(inverse(g), g), IDENTITY)
        for which, got, expected in _special_conjugations(g):
            same(f"conjugation by {which} at {g}", got, expected)
    for g, h in itertools.product(grid, repeat=2):
        printed = g.k + h.k + 2 * epsilon(g.l) * h.k
        same(f"a-exponent parity {g} {h}", multiply(g, h).k % 2, printed % 2)
    for q in range(2, q_max + 1):
        same(f"phi_{q} kills the relator", phi_well_defined(q), True)
    return rec.done()


REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["check", "parameters", "cases", "failures", "elapsed_ms", "pass"],
    "properties": {
        "check": {"type": "string"},
        "parameters": {"type": "object"},
        "cases": {"type": "integer", "minimum": 0},
        "failures": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["cell", "expected", "got"],
                "properties": {
                    "cell": {"type": "string"},
                    "expected": {"enum": [0, 1]},
                    "got": {"enum": [0, 1]},
                },
                "additionalProperties": False,
            },
        },
        "failure_count": {"type": "integer", "minimum": 0},
        "elapsed_ms": {"type": "number", "minimum": 0},
        "pass": {"type": "boolean"},
    },
    "additionalProperties": False,
}


# ---- orchestration ---------------------------------------------------------

CHECKS = ("main", "remark", "cocycles", "ddzero", "identities", "periodicity", "group")
DDZERO_M = (2, 3, 5)


class ConfigError(ValueError):
    pass


@dataclass
class Config:
    checks: Sequence[str] = CHECKS
    k_values: Sequence[int] = RESIDUE_K
    l_values: Sequence[int] = RESIDUE_L
    wide: bool = True
    m: Optional[int] = None
    interval: tuple[int, int] = (-20, 20)
    samples: int = 10_000
    seed: int = 0
    q_max: int = 10
    jobs: int = 1
    max_failures: Optional[int] = DEFAULT_MAX_FAILURES
    cochains: Mapping[str, Cochain] = field(default_factory=dict)

    def __post_init__(self):
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ConfigError(f"unknown checks {unknown}; valid: {', '.join(CHECKS)}")
        if not list(self.k_values) or not list(self.l_values):
            raise ConfigError("k_values and l_values must be non-empty")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "Config":
        if not isinstance(data, Mapping):
            raise ConfigError(f"config must be a mapping, got {type(data).__name__}")
        allowed = {f.name for f in fields(cls)} - {"cochains"}
        extra = set(data) - allowed
        if extra:
            raise ConfigError(f"unknown config keys: {sorted(extra)}")
        kwargs = dict(data)
        try:
            if "interval" in kwargs:
                lo, hi = kwargs["interval"]
                kwargs["interval"] = (int(lo), int(hi))
            for key in ("k_values", "l_values", "checks"):
                if key in kwargs and isinstance(kwargs[key], (str, bytes)):
                    raise TypeError(f"{key} must be a list")
            return cls(**kwargs)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(str(exc)) from exc


def _grids(config: Config) -> list[tuple[str, Sequence[int], Sequence[int]]]:
    grids = [("", config.k_values, config.l_values)]
    is_residue = tuple(config.k_values) == RESIDUE_K and tuple(config.l_values) == RESIDUE_L
    if config.wide and is_residue:
        grids.append(("[wide]", WIDE_K, WIDE_L))
    return grids


def run_checks(config: Config) -> list[Report]:
    kw = {"jobs": config.jobs, "max_failures": config.max_failures}
    ov = config.cochains
    reports: list[Report] = []
    for check in config.checks:
        if check in ("main", "remark"):
            for suffix, ks, ls in _grids(config):
                if check == "main":
                    r = verify_main_certificate(ks, ls, u=ov.get("u", "u"), w=ov.get("w", "w"), **kw)
                else:
                    r = verify_remark_certificate(ks, ls, u0=ov.get("u0", "u0"), w0=ov.get("w0", "w0"), **kw)
                r.check_name += suffix
                reports.append(r)
        elif check == "cocycles":
            reports.append(verify_cocycles(config.k_values, config.l_values, **kw))
        elif check == "ddzero":
            for m in (DDZERO_M if config.m is None else (config.m,)):
                r = verify_boundary_squared(min(4, m + 2), m, config.k_values, config.l_values,
                                            max_failures=config.max_failures)
                r.check_name += f"[m={m}]"
                reports.append(r)
        elif check == "identities":
            lo, hi = config.interval
            reports.append(verify_identities(lo, hi, config.k_values, config.l_values, **kw))
        elif check == "periodicity":
            reports.append(verify_periodicity(config.samples, config.seed, max_failures=config.max_failures))
        elif check == "group":
            reports.append(verify_group_and_phi(config.q_max, config.k_values, config.l_values,
                                                seed=config.seed, max_failures=config.max_failures))
    return reports


def run_all(config: Config | Mapping[str, Any] | None = None) -> tuple[list[Report], int]:
    """Run the configured checks in order; exit status 0 iff every report passes."""
    if config is None:
        config = Config()
    elif not isinstance(config, Config):
        config = Config.from_mapping(config)
    reports = run_checks(config)
    return reports, 0 if all(r.passed for r in reports) else 1
