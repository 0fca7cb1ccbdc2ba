"""Coherent extension bounds for one further conditional event (Algorithm 1).

Given a coherent precise assessment P on F = (E_1|H_1, ..., E_n|H_n) and a
target E_{n+1}|H_{n+1}, the set of coherent values z for the target is a closed
interval [z', z''].  Each bound is found by probing z = 0 (resp. z = 1):

  Step 0  build system (6) over the constituents of the extended family, with
          every row in homogeneous form  sum_{E_jH_j} l  =  p_j sum_{H_j} l;
  Step 1  if the probe value solves the system, go to Step 3, else Step 2;
  Step 2  optimize  sum_{E_{n+1}H_{n+1}} l  subject to the premise rows and
          sum_{H_{n+1}} l = 1; the optimum is the bound;
  Step 3  compute the maxima M_j of the antecedent masses over the probe
          solutions: if M_{n+1} > 0 the probe value is the bound; if
          M_{n+1} = 0 but M_j > 0 for every premise, the probe value is the
          bound (no witness exists in this boundary case); otherwise the
          procedure restarts with the subfamily J = {j : M_j = 0}.

The restart strictly shrinks the premise family, so the number of cycles is
finite (at most n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .coherence import BoxAssessment, check_coherence, grid_points
from .events import ConditionalEvent, enumerate_constituents
from .intervals import ExtensionInterval
from .simplex import Infeasible, LPSolution, Unbounded, solve_lp

__all__ = [
    "IncoherentPremises", "LPProblem", "lp_optimize",
    "extension_bounds", "extension_union_sampled",
    "Infeasible", "Unbounded",
]


class IncoherentPremises(Exception):
    """The premise assessment is not coherent; no extension interval exists."""


@dataclass(frozen=True)
class LPProblem:
    """A Step-2 style program: optimize objective . lambda over the rows."""

    objective: tuple
    rows: tuple
    senses: tuple
    rhs: tuple
    maximize: bool = False


def lp_optimize(problem: LPProblem) -> LPSolution:
    """Exact optimum and deterministic witness (Bland's rule)."""
    return solve_lp(list(problem.objective), [list(r) for r in problem.rows],
                    list(problem.senses), list(problem.rhs),
                    maximize=problem.maximize)


def _indicator(table, j, member):
    """Column indicators over constituents: member=True -> inside E_jH_j."""
    if member:
        return [1 if c.cells[j] else 0 for c in table.constituents]
    return [0 if c.cells[j] is None else 1 for c in table.constituents]


def _premise_rows(table, values, n):
    """Homogeneous rows  sum_{E_jH_j} l - p_j sum_{H_j} l = 0  for j = 1..n."""
    rows = []
    for j in range(n):
        a = _indicator(table, j, True)
        phi = _indicator(table, j, False)
        rows.append([ai - values[j] * pi for ai, pi in zip(a, phi)])
    return rows


def _probe(family, values, target, probe, maximize):
    fam = list(family)
    vals = list(values)
    for _ in range(len(family) + 1):
        table = enumerate_constituents(tuple(fam) + (target,))
        n = len(fam)
        t = n  # target index in the extended family
        rows = _premise_rows(table, vals, n)
        a_t = _indicator(table, t, True)
        phi_t = _indicator(table, t, False)
        rows_with_target = rows + [
            [ai - probe * pi for ai, pi in zip(a_t, phi_t)],
            [1] * table.m,
        ]
        senses = ["="] * len(rows_with_target)
        rhs = [0] * (n + 1) + [1]
        try:
            # Step 1 solvability and the Step-3 maximum M_{n+1} in one solve.
            m_t = solve_lp(phi_t, rows_with_target, senses, rhs, maximize=True).value
        except Infeasible:
            m_t = None
        if m_t is not None:
            # Step 3.
            if m_t > 0:
                return Fraction(probe)
            zero = []
            for j in range(n):
                mj = solve_lp(_indicator(table, j, False), rows_with_target,
                              senses, rhs, maximize=True).value
                if mj == 0:
                    zero.append(j)
            if not zero:
                # Boundary case: the bound equals the probe value but admits
                # no witness with positive target-antecedent probability.
                return Fraction(probe)
            assert len(zero) < n, "restart must strictly shrink the family"
            fam = [fam[j] for j in zero]
            vals = [vals[j] for j in zero]
            continue
        # Step 2.
        problem = LPProblem(
            objective=tuple(a_t),
            rows=tuple(tuple(r) for r in rows) + (tuple(phi_t),),
            senses=("=",) * n + ("=",),
            rhs=(0,) * n + (1,),
            maximize=maximize,
        )
        try:
            return Fraction(lp_optimize(problem).value)
        except Infeasible as exc:  # pragma: no cover - excluded by coherence
            raise AssertionError("Step-2 program infeasible for coherent premises") from exc
    raise AssertionError("restart cycle bound exceeded")  # pragma: no cover


def extension_bounds(family: Iterable, assessment: Sequence,
                     target: ConditionalEvent, check: bool = True) -> ExtensionInterval:
    """The interval [z', z''] of coherent extension values for the target."""
    family = tuple(family)
    values = [Fraction(v) for v in assessment]
    if check and not check_coherence(family, values):
        raise IncoherentPremises(f"assessment {values} is incoherent on the family")
    lower = _probe(family, values, target, 0, maximize=False)
    upper = _probe(family, values, target, 1, maximize=True)
    return ExtensionInterval(lower, upper)


def extension_union_sampled(family: Iterable, box: BoxAssessment,
                            target: ConditionalEvent,
                            grid_density: int = 5) -> ExtensionInterval:
    """Hull of extension_bounds over the coherent grid points of the box.

    A sampling cross-check for the closed-form interval theorems, not a
    verdict source; incoherent grid points are skipped.
    """
    family = tuple(family)
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for point in grid_points(box, grid_density):
        values = list(point)
        if not check_coherence(family, values):
            continue
        bounds = extension_bounds(family, values, target, check=False)
        lo = bounds.lower if lo is None else min(lo, bounds.lower)
        hi = bounds.upper if hi is None else max(hi, bounds.upper)
    if lo is None:
        raise IncoherentPremises("no coherent grid point in the box")
    return ExtensionInterval(lo, hi)
