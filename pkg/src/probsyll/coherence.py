"""Coherence of precise assessments and g-/t-coherence of box assessments.

A precise assessment P on a family F is coherent iff the linear system (S)

    sum_h q_hj lambda_h = p_j   (j = 1..n),   sum_h lambda_h = 1,   lambda >= 0

is solvable and, whenever the set I0 = {j : max Phi_j = 0} of antecedents that
every solution forces to zero probability is nonempty, the sub-assessment P0
restricted to those events is itself coherent (Phi_j is the total mass of the
constituents inside H_j).  I0 is always a strict subset of the indices when
solutions exist, so the recursion terminates.

The default check uses the subset variant of the criterion with the singleton
{phase-1 witness}: I0' = {j : Phi_j(witness) = 0}; the variant is an exact
characterization for any nonempty subset of the solution set, and avoids one
LP per index.  method="full" runs the literal max-based recursion instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional, Sequence

from .events import ConstituentTable, enumerate_constituents, points_for
from .infinitesimals import EPS, EpsRational
from .intervals import OpenInterval
from .simplex import feasible_point, solve_lp


class CoherenceError(Exception):
    pass


class InfeasibleSystem(CoherenceError):
    """System (S) has no solution; maxima M_j are undefined."""


@dataclass(frozen=True)
class LinearSystem:
    """Equality system (S): n assessment rows plus the normalization row."""

    rows: tuple  # (n+1) x m matrix; rows[j][h] = q_hj, last row all ones
    rhs: tuple  # (p_1, ..., p_n, 1)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])


@dataclass(frozen=True)
class I0Result:
    maxima: tuple  # M_j per assessment row
    zero_set: tuple  # sorted indices j with M_j = 0


def build_system(table: ConstituentTable, assessment) -> LinearSystem:
    """System (S) for (F, P): solution set {L : P = sum l_h Q_h, sum l_h = 1, l >= 0}."""
    points = points_for(table, assessment)
    n = len(table.family)
    rows = [tuple(q[j] for q in points) for j in range(n)]
    rows.append((1,) * table.m)
    return LinearSystem(tuple(rows), tuple(list(assessment) + [1]))


def solve_feasible(system: LinearSystem) -> Optional[list]:
    """A solution of (S), or None if infeasible (exact phase-1 simplex)."""
    return feasible_point(system.rows, ["="] * len(system.rows), system.rhs)


def _phi_columns(table: ConstituentTable, j: int) -> list:
    """Indicator over constituents of membership in H_j."""
    return [0 if c.cells[j] is None else 1 for c in table.constituents]


def compute_I0(system: LinearSystem, table: ConstituentTable) -> I0Result:
    """Maxima M_j of Phi_j over the solution set, and I0 = {j : M_j = 0}."""
    if solve_feasible(system) is None:
        raise InfeasibleSystem("system (S) is unsolvable")
    senses = ["="] * len(system.rows)
    maxima = []
    for j in range(len(table.family)):
        sol = solve_lp(_phi_columns(table, j), system.rows, senses, system.rhs,
                       maximize=True)
        maxima.append(sol.value)
    zero = tuple(j for j, mj in enumerate(maxima) if mj == 0)
    return I0Result(tuple(maxima), zero)


def check_coherence(family: Iterable, assessment: Sequence, method: str = "witness") -> bool:
    """Coherence of a precise assessment via the I0 reduction."""
    family = tuple(family)
    values = [Fraction(v) if not isinstance(v, EpsRational) else v for v in assessment]
    table = enumerate_constituents(family)
    system = build_system(table, values)
    witness = solve_feasible(system)
    if witness is None:
        return False
    if method == "witness":
        zero = [
            j for j in range(len(family))
            if sum(l for l, c in zip(witness, table.constituents)
                   if c.cells[j] is not None) == 0
        ]
    elif method == "full":
        zero = list(compute_I0(system, table).zero_set)
    else:
        raise ValueError(f"unknown method {method!r}")
    if not zero:
        return True
    sub_family = tuple(family[j] for j in zero)
    sub_values = [values[j] for j in zero]
    assert len(sub_family) < len(family)
    return check_coherence(sub_family, sub_values, method)


# ---------------------------------------------------------------------------
# Box assessments.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoxAssessment:
    """Interval bounds per component, with endpoint-openness flags."""

    lowers: tuple
    uppers: tuple
    lower_open: tuple
    upper_open: tuple

    def __post_init__(self):
        object.__setattr__(self, "lowers", tuple(Fraction(v) for v in self.lowers))
        object.__setattr__(self, "uppers", tuple(Fraction(v) for v in self.uppers))
        object.__setattr__(self, "lower_open", tuple(bool(b) for b in self.lower_open))
        object.__setattr__(self, "upper_open", tuple(bool(b) for b in self.upper_open))
        sizes = {len(self.lowers), len(self.uppers), len(self.lower_open), len(self.upper_open)}
        if len(sizes) != 1:
            raise ValueError("component lists have different lengths")
        for lo, hi, lo_o, hi_o in zip(self.lowers, self.uppers,
                                      self.lower_open, self.upper_open):
            if not 0 <= lo <= hi <= 1:
                raise ValueError(f"bad component bounds [{lo}, {hi}]")
            if lo == hi and (lo_o or hi_o):
                raise ValueError("degenerate component must be closed")

    @classmethod
    def from_intervals(cls, intervals: Sequence[OpenInterval]) -> "BoxAssessment":
        return cls(
            tuple(iv.lower for iv in intervals),
            tuple(iv.upper for iv in intervals),
            tuple(iv.lower_open for iv in intervals),
            tuple(iv.upper_open for iv in intervals),
        )

    @classmethod
    def point(cls, values) -> "BoxAssessment":
        vals = tuple(Fraction(v) for v in values)
        flags = (False,) * len(vals)
        return cls(vals, vals, flags, flags)

    def intervals(self) -> tuple:
        return tuple(
            OpenInterval(lo, hi, lo_o, hi_o)
            for lo, hi, lo_o, hi_o in zip(self.lowers, self.uppers,
                                          self.lower_open, self.upper_open)
        )

    @property
    def has_open_faces(self) -> bool:
        return any(self.lower_open) or any(self.upper_open)

    def __len__(self):
        return len(self.lowers)


def _relaxed_rows(table: ConstituentTable, lowers, uppers):
    """l_j Phi_j <= sum_{E_jH_j} lambda <= u_j Phi_j rows, plus normalization."""
    rows, senses, rhs = [], [], []
    for j, (lo, hi) in enumerate(zip(lowers, uppers)):
        a = [1 if c.cells[j] else 0 for c in table.constituents]
        phi = _phi_columns(table, j)
        rows.append([ai - lo * pi for ai, pi in zip(a, phi)])
        senses.append(">=")
        rhs.append(0)
        rows.append([ai - hi * pi for ai, pi in zip(a, phi)])
        senses.append("<=")
        rhs.append(0)
    rows.append([1] * table.m)
    senses.append("=")
    rhs.append(1)
    return rows, senses, rhs


def _g_coherent(family: tuple, lowers: list, uppers: list) -> bool:
    """Relaxed-system feasibility with the I0-style recursion on the sub-box."""
    table = enumerate_constituents(family)
    rows, senses, rhs = _relaxed_rows(table, lowers, uppers)
    if feasible_point(rows, senses, rhs) is None:
        return False
    zero = []
    for j in range(len(family)):
        mj = solve_lp(_phi_columns(table, j), rows, senses, rhs, maximize=True).value
        if mj == 0:
            zero.append(j)
    if not zero:
        return True
    assert len(zero) < len(family)
    return _g_coherent(
        tuple(family[j] for j in zero),
        [lowers[j] for j in zero],
        [uppers[j] for j in zero],
    )


def check_g_coherence(family: Iterable, box: BoxAssessment) -> bool:
    """True iff some precise point of the box (respecting openness) is coherent.

    Open faces are handled by shrinking them an infinitesimal amount and
    running the whole decision exactly over Q(eps); the box is g-coherent iff
    some eps-shrunk closed sub-box is, and signs in Q(eps) are the eventual
    signs for small real eps.
    """
    family = tuple(family)
    if not box.has_open_faces:
        return _g_coherent(family, list(box.lowers), list(box.uppers))
    lowers = [EpsRational(lo) + EPS if lo_o else EpsRational(lo)
              for lo, lo_o in zip(box.lowers, box.lower_open)]
    uppers = [EpsRational(hi) - EPS if hi_o else EpsRational(hi)
              for hi, hi_o in zip(box.uppers, box.upper_open)]
    return _g_coherent(family, lowers, uppers)


def grid_points(box: BoxAssessment, grid_density: int):
    """Cartesian rational grid inside the box, skipping open endpoints."""
    if grid_density < 2:
        raise ValueError("grid_density must be >= 2")
    axes = []
    for lo, hi, lo_o, hi_o in zip(box.lowers, box.uppers, box.lower_open, box.upper_open):
        if lo == hi:
            axes.append([lo])
            continue
        step = Fraction(hi - lo, grid_density - 1)
        vals = [lo + i * step for i in range(grid_density)]
        if lo_o:
            vals = vals[1:] if len(vals) > 1 else [lo + (hi - lo) / 2]
        if hi_o:
            vals = vals[:-1] if len(vals) > 1 else [lo + (hi - lo) / 2]
        axes.append(vals)
    yield from product(*axes)


def check_t_coherence_grid(family: Iterable, box: BoxAssessment, grid_density: int) -> bool:
    """True iff every grid point of the box passes check_coherence."""
    family = tuple(family)
    return all(check_coherence(family, point) for point in grid_points(box, grid_density))
