"""Region choice solvers: both counting rules, pinned kernels, add-1.

These couple the diagram geometry to the integer algebra.  Solvability for
every integral point vector is a theorem for valid knot projections, so a
failure of the underlying reduction to reach (I | 0 0) is reported as an
internal invariant violation rather than an input error.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import incidence, zlinalg
from .diagram import (CheckerboardColoring, ComponentSplit, FlatDiagram,
                      InternalInvariantError, arc_by_label, checkerboard,
                      is_knot, reducible_crossings, regions, splice)
from .incidence import DOUBLE, SINGLE, RegionChoiceMatrix
from .zlinalg import NotE00Error, SolutionFamily

ALGEBRAIC = "algebraic"
GEOMETRIC = "geometric"


@dataclass(frozen=True)
class Add1Certificate:
    """An assignment whose point change is +1 at one crossing, 0 elsewhere."""

    crossing: int
    rule: str
    assignment: tuple[int, ...]
    path: str
    residual: tuple[int, ...]


@dataclass(frozen=True)
class PinnedKernelRequest:
    """Ask for a kernel solution with fixed values beside one arc."""

    arc: int
    a: int
    b: int
    rule: str = DOUBLE


@dataclass(frozen=True)
class VerificationReport:
    """Residual of a proposed solution, with a per-crossing breakdown."""

    rule: str
    residual: tuple[int, ...]
    passed: bool
    per_crossing: tuple[tuple[str, int], ...]


def _matrix(diagram: FlatDiagram, rule: str) -> RegionChoiceMatrix:
    return incidence.build_matrix(diagram, rule)


def solve(diagram: FlatDiagram, rule: str, b) -> SolutionFamily:
    """All integral assignments u with ``A_rule u + b = o``."""
    if not is_knot(diagram):
        raise ValueError("solve requires a knot projection")
    matrix = _matrix(diagram, rule)
    try:
        family = zlinalg.solve_integral(matrix.entries, tuple(b))
    except NotE00Error as exc:
        raise InternalInvariantError(
            "region choice matrix failed to reduce to (I | 0 0); "
            "this contradicts the solvability theorem") from exc
    if any(incidence.residual(matrix, family.particular, tuple(b))):
        raise InternalInvariantError("solver returned a nonzero residual")
    return family


def kernel_basis(diagram: FlatDiagram, rule: str):
    matrix = _matrix(diagram, rule)
    try:
        return zlinalg.kernel_basis(matrix.entries)
    except NotE00Error as exc:
        raise InternalInvariantError(
            "region choice matrix failed to reduce to (I | 0 0)") from exc


def pinned_kernel(diagram: FlatDiagram, request: PinnedKernelRequest):
    """Kernel solution with prescribed values on the two sides of an arc."""
    if request.rule == SINGLE and not is_knot(diagram):
        raise ValueError("single-rule pinning requires a knot projection")
    arc = arc_by_label(diagram, request.arc)
    r1, r2 = arc.sides
    k1, k2 = kernel_basis(diagram, request.rule)
    u = _pin(k1, k2, r1, r2, request.a, request.b)
    matrix = _matrix(diagram, request.rule)
    if any(incidence.apply(matrix, u)):
        raise InternalInvariantError("pinned vector left the kernel")
    return u


def _pin(k1, k2, r1: int, r2: int, a: int, b: int):
    """Integer combination of the kernel basis hitting (a, b) on (r1, r2)."""
    det = k1[r1] * k2[r2] - k2[r1] * k1[r2]
    if det not in (1, -1):
        raise InternalInvariantError(
            f"kernel restriction determinant is {det}, expected +-1")
    c1 = (a * k2[r2] - b * k2[r1]) // det
    c2 = (b * k1[r1] - a * k1[r2]) // det
    return tuple(c1 * x + c2 * y for x, y in zip(k1, k2))


def arc_unimodularity_report(diagram: FlatDiagram, rule: str) -> dict[int, int]:
    """Per arc label, |det| of the kernel basis restricted to its sides."""
    k1, k2 = kernel_basis(diagram, rule)
    report = {}
    for arc in sorted({a.label for a in _arcs(diagram)}):
        sides = arc_by_label(diagram, arc).sides
        det = (k1[sides[0]] * k2[sides[1]] - k2[sides[0]] * k1[sides[1]])
        report[arc] = abs(det)
    return report


def _arcs(diagram: FlatDiagram):
    from .diagram import arcs
    return arcs(diagram)


def add1_algebraic(diagram: FlatDiagram, rule: str, crossing: int) -> Add1Certificate:
    """Assignment with unit residual at one crossing, by direct solving."""
    n = diagram.crossing_count
    if not 0 <= crossing < n:
        raise ValueError(f"no crossing v{crossing + 1}")
    b = tuple(-1 if i == crossing else 0 for i in range(n))
    family = solve(diagram, rule, b)
    u = family.particular
    res = incidence.apply(_matrix(diagram, rule), u)
    return Add1Certificate(crossing, rule, u, ALGEBRAIC, res)


def add1_geometric(diagram: FlatDiagram, crossing: int) -> Add1Certificate:
    """Assignment with unit residual at one crossing, by the splice and
    checkerboard construction (double rule only).

    Splice at the crossing; take a kernel solution on the component carrying
    the smaller darts, pinned to 0 and 1 beside the smoothed strand; flip its
    sign on the white regions of the other component's checkerboard coloring;
    merge back.  A single global negation absorbs the two-fold coloring and
    pin-order ambiguity.
    """
    split = splice(diagram, crossing)
    u1 = _component_pinned_kernel(split)
    sign2 = _component_checkerboard(split.second)
    u = tuple(u1[split.first.region_map[r]] * sign2[split.second.region_map[r]]
              for r in range(diagram.region_count))
    matrix = _matrix(diagram, DOUBLE)
    target = tuple(1 if i == crossing else 0
                   for i in range(diagram.crossing_count))
    res = incidence.apply(matrix, u)
    if res == target:
        return Add1Certificate(crossing, DOUBLE, u, GEOMETRIC, res)
    neg = tuple(-x for x in u)
    res = incidence.apply(matrix, neg)
    if res == target:
        return Add1Certificate(crossing, DOUBLE, neg, GEOMETRIC, res)
    raise InternalInvariantError(
        "geometric add-1 construction certified neither u nor -u")


def _component_pinned_kernel(split: ComponentSplit):
    comp = split.first
    r1, r2 = comp.strand_sides
    if comp.diagram is None:
        values = [0, 0]
        values[r1], values[r2] = 0, 1
        return tuple(values)
    k1, k2 = kernel_basis(comp.diagram, DOUBLE)
    return _pin(k1, k2, r1, r2, 0, 1)


def _component_checkerboard(comp) -> CheckerboardColoring:
    if comp.diagram is None:
        return CheckerboardColoring((1, -1))
    return checkerboard(comp.diagram)


def solve_single_via_double(diagram: FlatDiagram, b):
    """Single-rule solution built from a double-rule one plus add-1 fixes.

    The double-rule assignment overshoots by the region value at every
    (region, crossing) pair with two corners; each overshoot is cancelled by
    a single-rule add-1 certificate at that (necessarily reducible) crossing.
    """
    family = solve(diagram, DOUBLE, b)
    gaps = incidence.rule_gap_columns(diagram)
    certificates: dict[int, tuple[int, ...]] = {}
    u = list(family.particular)
    for region, crossings in gaps.items():
        coeff = family.particular[region]
        if coeff == 0:
            continue
        for v in crossings:
            if v not in certificates:
                certificates[v] = add1_algebraic(diagram, SINGLE, v).assignment
            cert = certificates[v]
            for i in range(len(u)):
                u[i] += coeff * cert[i]
    u = tuple(u)
    matrix = _matrix(diagram, SINGLE)
    if any(incidence.residual(matrix, u, tuple(b))):
        raise InternalInvariantError(
            "two-path single-rule construction has nonzero residual")
    return u


def solve_mod2(diagram: FlatDiagram, b) -> tuple[int, ...]:
    """Region subset solving the classical mod-2 problem; never unsolvable."""
    matrix = _matrix(diagram, SINGLE)
    bits = zlinalg.solve_gf2(incidence.mod2(matrix),
                             tuple(x % 2 for x in b))
    if bits is None:
        raise InternalInvariantError(
            "mod-2 region choice problem reported unsolvable for a knot "
            "projection")
    return tuple(r for r, bit in enumerate(bits) if bit)


def verify(diagram: FlatDiagram, rule: str, u, b) -> VerificationReport:
    """Recompute the matrix and check ``A u + b = o``."""
    matrix = _matrix(diagram, rule)
    res = incidence.residual(matrix, tuple(u), tuple(b))
    return VerificationReport(
        rule, res, not any(res),
        tuple((f"v{i + 1}", x) for i, x in enumerate(res)))
