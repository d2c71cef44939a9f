"""Translated Minkowski sums of segments with exact membership tests.

The polytopes here are half-scaled sums of segments [0, beta/2] over a
weight multiset, following the convention that membership at a given scale
means x - offset = sum c_beta * beta with c_beta in [0, scale/2].

Membership and minimal scaling are exact rational linear programs; collinear
generators are merged into per-line intervals first, which changes neither
question but keeps the programs small.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Union

from .generic import GenericReal
from .lattice import Cocharacter, GenericWeight, Weight, WeightMultiset, rep_weights
from .quiver import DimensionVector, Quiver
from .simplex import lp_solve

DIM_CAP = 8
DEFAULT_DIRECTION_CAP = 24


class ZonotopeError(ValueError):
    pass


def _direction_cap() -> int:
    return int(os.environ.get("QBPS_FACET_CAP", DEFAULT_DIRECTION_CAP))


def _primitive(vec: Sequence[Fraction]) -> Optional[tuple[int, ...]]:
    """Primitive integer vector along vec with canonical sign, or None if 0."""
    denom_lcm = 1
    for x in vec:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        return None
    ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(ints)


def _rref(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form; returns the nonzero rows."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        sel = next((r for r in range(pivot_row, len(rows)) if rows[r][col] != 0), None)
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        piv = rows[pivot_row][col]
        rows[pivot_row] = [x / piv for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [r for r in rows[:pivot_row]]


@dataclass(frozen=True)
class _Line:
    direction: tuple[int, ...]
    lo: Fraction  # <= 0, per unit scale
    hi: Fraction  # >= 0, per unit scale


@dataclass(frozen=True)
class Facet:
    normal: Cocharacter
    support: Fraction  # max of <normal, .> over the zonotope


@dataclass(frozen=True)
class Zonotope:
    offset: Weight
    generators: WeightMultiset
    half: bool = True
    _lines: tuple[_Line, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.generators.dims != self.offset.dims:
            raise ZonotopeError("offset and generators in different slot spaces")
        unit = Fraction(1, 2) if self.half else Fraction(1)
        acc: dict[tuple[int, ...], list[Fraction]] = {}
        order: list[tuple[int, ...]] = []
        for w, mult in self.generators.items:
            e = _primitive(w.coords)
            if e is None:
                continue
            pos = next(i for i, v in enumerate(e) if v != 0)
            t = w.coords[pos] / Fraction(e[pos])  # signed length along e
            if e not in acc:
                acc[e] = [Fraction(0), Fraction(0)]
                order.append(e)
            if t > 0:
                acc[e][1] += unit * t * mult
            else:
                acc[e][0] += unit * t * mult
        lines = tuple(_Line(e, acc[e][0], acc[e][1]) for e in order)
        object.__setattr__(self, "_lines", lines)

    @property
    def dims(self) -> DimensionVector:
        return self.offset.dims

    def directions(self) -> list[tuple[int, ...]]:
        return [ln.direction for ln in self._lines]

    def span_basis(self) -> list[list[Fraction]]:
        return _rref([[Fraction(v) for v in ln.direction] for ln in self._lines])

    def span_dim(self) -> int:
        return len(self.span_basis())

    def coordinate_box(self, scale: Fraction = Fraction(1)) -> list[tuple[Fraction, Fraction]]:
        """Per-slot [min, max] over the zonotope at the given scale."""
        unit = (Fraction(1, 2) if self.half else Fraction(1)) * scale
        n = self.dims.total
        lo = [Fraction(0)] * n
        hi = [Fraction(0)] * n
        for w, mult in self.generators.items:
            for s, x in enumerate(w.coords):
                if x > 0:
                    hi[s] += unit * x * mult
                elif x < 0:
                    lo[s] += unit * x * mult
        return [(self.offset.coords[s] + lo[s], self.offset.coords[s] + hi[s])
                for s in range(n)]


def w_zonotope(q: Quiver, d: DimensionVector) -> Zonotope:
    """Half-sum polytope over the weights of R(d); lives in the sum-zero
    hyperplane."""
    return Zonotope(Weight.zero(d), rep_weights(q, d, "R"))


def v_zonotope(q: Quiver, d: DimensionVector) -> Zonotope:
    """Window polytope for the framed stack: half-length segments over the
    weights of R(d) plus full-length segments over the framing weights (the
    framing direction carries the full window width, which is what makes the
    slope windows have length one)."""
    from .lattice import WeightMultiset
    gens = list(rep_weights(q, d, "R").items)
    for s in range(d.total):
        coords = [Fraction(0)] * d.total
        coords[s] = Fraction(1)
        gens.append((Weight(d, tuple(coords)), 2))  # doubled half-segments give [0, beta]
    return Zonotope(Weight.zero(d), WeightMultiset(d, tuple(gens)))


PointLike = Union[Weight, GenericWeight]


def _point_parts(x: PointLike) -> tuple[Weight, Optional[Weight]]:
    if isinstance(x, GenericWeight):
        return x.main, (None if x.eps_part.is_zero() else x.eps_part)
    return x, None


def contains(z: Zonotope, x: PointLike, scale: Fraction = Fraction(1)) -> bool:
    """Exact membership of x in the zonotope scaled about its offset."""
    scale = Fraction(scale)
    if scale < 0:
        raise ZonotopeError("scale must be non-negative")
    main, eps = _point_parts(x)
    if main.dims != z.dims:
        raise ZonotopeError("point in the wrong slot space")
    target = main - z.offset
    if scale == 0 or not z._lines:
        return target.is_zero() and (eps is None or eps.is_zero())

    lines = z._lines
    n = len(lines)
    nslots = z.dims.total
    # variables: shifted line coefficients z_L, then slack s_L per bound row
    A: list[list[Fraction]] = []
    b: list[GenericReal] = []
    for s in range(nslots):
        row = [Fraction(ln.direction[s]) for ln in lines] + [Fraction(0)] * n
        rhs = target.coords[s] - scale * sum(
            (ln.lo * ln.direction[s] for ln in lines), Fraction(0))
        b.append(GenericReal(rhs, eps.coords[s] if eps is not None else Fraction(0)))
        A.append(row)
    for k, ln in enumerate(lines):
        row = [Fraction(0)] * (2 * n)
        row[k] = Fraction(1)
        row[n + k] = Fraction(1)
        A.append(row)
        b.append(GenericReal(scale * (ln.hi - ln.lo)))
    status, _, _ = lp_solve(A, b, [Fraction(0)] * (2 * n))
    return status == "optimal"


def r_invariant(q: Quiver, d: DimensionVector, x: Weight) -> Fraction:
    """Smallest r >= 0 with x in the r-fold coefficient expansion of the
    half-sum polytope (x = sum c_beta * beta, 0 <= c_beta <= r)."""
    z = w_zonotope(q, d)
    return zonotope_min_scale(z, x)


def zonotope_min_scale(z: Zonotope, x: Weight) -> Fraction:
    """Minimal r with x - offset = sum c_beta*beta, c_beta in [0, r] per
    multiplicity (the half flag is ignored here: coefficients are capped by
    r itself)."""
    if x.dims != z.dims:
        raise ZonotopeError("point in the wrong slot space")
    target = x - z.offset
    if target.is_zero():
        return Fraction(0)
    # per-line interval at coefficient cap r is r*[2*lo, 2*hi] of the unit
    # (half) intervals, since the half convention builds in a factor 1/2
    lines = z._lines
    if not lines:
        raise ZonotopeError("point outside the span of the generators")
    factor = Fraction(2) if z.half else Fraction(1)
    n = len(lines)
    nslots = z.dims.total
    # variables: z_L (shifted), slack s_L, r
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for s in range(nslots):
        row = [Fraction(ln.direction[s]) for ln in lines] + [Fraction(0)] * n
        row.append(sum((factor * ln.lo * ln.direction[s] for ln in lines), Fraction(0)))
        A.append(row)
        b.append(target.coords[s])
    for k, ln in enumerate(lines):
        row = [Fraction(0)] * (2 * n + 1)
        row[k] = Fraction(1)
        row[n + k] = Fraction(1)
        row[2 * n] = -factor * (ln.hi - ln.lo)
        A.append(row)
        b.append(Fraction(0))
    costs = [Fraction(0)] * (2 * n) + [Fraction(1)]
    status, _, value = lp_solve(A, b, costs)
    if status != "optimal":
        raise ZonotopeError("point outside the span of the generators")
    assert value is not None and value.is_rational()
    return value.q


def facets(z: Zonotope) -> list[Facet]:
    """All facet normals (primitive, both orientations) of the zonotope
    within its span, with exact support values."""
    dirs = z.directions()
    cap = _direction_cap()
    if len(dirs) > cap:
        raise ZonotopeError(f"facet enumeration cap exceeded: {len(dirs)} > {cap} directions")
    basis = z.span_basis()
    m = len(basis)
    if m > DIM_CAP:
        raise ZonotopeError(f"facet enumeration cap exceeded: span dimension {m} > {DIM_CAP}")
    if m == 0:
        return []

    unit = Fraction(1, 2) if z.half else Fraction(1)

    def support(normal: tuple[int, ...]) -> Fraction:
        total = sum((Fraction(v) * c for v, c in zip(normal, z.offset.coords)), Fraction(0))
        for w, mult in z.generators.items:
            p = sum(Fraction(v) * c for v, c in zip(normal, w.coords))
            if p > 0:
                total += unit * p * mult
        return total

    seen: set[tuple[int, ...]] = set()
    out: list[Facet] = []

    def consider(normal_vec: list[Fraction]):
        prim = _primitive(normal_vec)
        if prim is None or prim in seen:
            return
        seen.add(prim)
        for sign in (1, -1):
            nu = tuple(sign * v for v in prim)
            cochar = Cocharacter(z.dims, nu)
            out.append(Facet(cochar, support(nu)))

    if m == 1:
        consider([Fraction(v) for v in basis[0]])
        return out

    from itertools import combinations
    for subset in combinations(dirs, m - 1):
        # solve for y with (y . basis) orthogonal to every subset direction
        rows = []
        for svec in subset:
            rows.append([sum(Fraction(bi[s] * svec[s]) for s in range(len(svec)))
                         for bi in basis])
        red = _rref(rows)
        if len(red) != m - 1:
            continue  # subset does not span a hyperplane of the span
        # one-dimensional nullspace of red in Q^m
        pivots = []
        for r in red:
            pivots.append(next(j for j, v in enumerate(r) if v != 0))
        free = next(j for j in range(m) if j not in pivots)
        y = [Fraction(0)] * m
        y[free] = Fraction(1)
        for r, p in zip(red, pivots):
            y[p] = -r[free]
        normal = [sum((y[i] * basis[i][s] for i in range(m)), Fraction(0))
                  for s in range(z.dims.total)]
        consider(normal)
    return out


def on_boundary(z: Zonotope, x: Weight) -> bool:
    """Whether x (already inside z) lies on the boundary of z within its
    span; a zero-dimensional zonotope has empty boundary."""
    if not contains(z, x):
        raise ZonotopeError("point is not inside the zonotope")
    for f in facets(z):
        value = sum((Fraction(v) * c for v, c in zip(f.normal.values, x.coords)), Fraction(0))
        if value == f.support:
            return True
    return False
