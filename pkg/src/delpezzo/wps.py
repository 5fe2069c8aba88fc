"""Weighted projective spaces, nodal hypersurfaces and their defect.

The defect of a nodal hypersurface X inside a weighted projective fourfold
W measures Weil-minus-Cartier divisor classes.  It is computed from linear
algebra only:

    delta = mu - rank(evaluation of H^0(W, L) at the nodes),

where mu is the node count and L is the adjoint twist of degree
deg(L) = -sum(weights) + 2 deg(X).  Because L is basepoint free away from
the singular points of W and the nodes avoid those, the evaluation matrix
has rank at least 1 whenever mu >= 1, so delta < mu for the hypersurface
del Pezzo cases (degrees 6, 4, 3 on the three standard ambients).

A point of the ambient space counts as singular when the weights of its
nonvanishing coordinates have a common factor; coordinate points of weight
larger than one are the typical case.  Nodality (rank-4 Hessian) is
certified in an affine chart at a nonvanishing weight-1 coordinate; points
without such a coordinate are rejected rather than guessed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import lattice
from .errors import (InvariantViolation, NegativeLDegree, NoSolution,
                     NodalityFailed, NodeAtAmbientSingularity,
                     UnsupportedChart)

Mono = tuple[int, ...]
Point = tuple[Fraction, ...]
Poly = dict[Mono, Fraction]


@dataclass(frozen=True)
class WeightedSpace:
    """P(w_0, ..., w_n); all weights >= 1 with overall gcd 1."""

    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) < 2:
            raise ValueError("need at least two weights")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")
        if gcd(*self.weights) != 1:
            raise ValueError("weights must have gcd 1")

    @property
    def dim(self) -> int:
        return len(self.weights) - 1

    def is_singular_point(self, point: Point) -> bool:
        """Flagged singular when the weights of the nonvanishing coordinates
        have gcd > 1.  Sufficient for the coordinate-point checks needed
        here; documented as a partial test."""
        active = [w for w, c in zip(self.weights, point) if c != 0]
        if not active:
            raise ValueError("the zero tuple is not a point")
        return gcd(*active) > 1

    def chart_index(self, point: Point) -> int | None:
        """First weight-1 coordinate that does not vanish, if any."""
        for i, (w, c) in enumerate(zip(self.weights, point)):
            if w == 1 and c != 0:
                return i
        return None

    def normalize(self, point: Point) -> Point:
        """Scale so the chart coordinate equals 1 (weights scale as c * t^w)."""
        j = self.chart_index(point)
        if j is None:
            raise UnsupportedChart(
                "point has no nonvanishing weight-1 coordinate")
        t = 1 / Fraction(point[j])
        return tuple(Fraction(c) * t ** w for w, c in zip(self.weights, point))


def enumerate_monomials(space: WeightedSpace, degree: int) -> list[Mono]:
    """All exponent vectors e with sum(e_i * w_i) = degree, ascending lex."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    weights = space.weights
    out: list[Mono] = []

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == len(weights) - 1:
            if remaining % weights[i] == 0:
                out.append(prefix + (remaining // weights[i],))
            return
        for e in range(remaining // weights[i] + 1):
            rec(i + 1, remaining - e * weights[i], prefix + (e,))

    rec(0, degree, ())
    return out


# -- exact polynomial helpers ---------------------------------------------

def _poly_from_vector(monos: list[Mono], coeffs) -> Poly:
    return {m: Fraction(c) for m, c in zip(monos, coeffs) if c != 0}

def _mono_eval(e: Mono, p: Point) -> Fraction:
    v = Fraction(1)
    for ei, pi in zip(e, p):
        if ei:
            v *= Fraction(pi) ** ei
    return v

def poly_eval(poly: Poly, p: Point) -> Fraction:
    return sum((c * _mono_eval(e, p) for e, c in poly.items()), Fraction(0))

def poly_partial(poly: Poly, i: int) -> Poly:
    out: Poly = {}
    for e, c in poly.items():
        if e[i]:
            d = list(e)
            d[i] -= 1
            out[tuple(d)] = out.get(tuple(d), Fraction(0)) + c * e[i]
    return {e: c for e, c in out.items() if c != 0}

def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c != 0}

def _poly_pow(a: Poly, n: int, nvars: int) -> Poly:
    out: Poly = {(0,) * nvars: Fraction(1)}
    for _ in range(n):
        out = _poly_mul(out, a)
    return out


def hessian_rank(space: WeightedSpace, poly: Poly, point: Point) -> int:
    """Rank of the Hessian of the affine-chart dehomogenization at a
    normalized point (chart coordinate equal to 1)."""
    j = space.chart_index(point)
    if j is None:
        raise UnsupportedChart("point has no nonvanishing weight-1 coordinate")
    others = [i for i in range(len(space.weights)) if i != j]
    firsts = {i: poly_partial(poly, i) for i in others}
    rows = [[poly_eval(poly_partial(firsts[a], b), point) for b in others]
            for a in others]
    return lattice.rank(lattice.from_rational_rows(rows))


@dataclass(frozen=True)
class NodalHypersurface:
    """Hypersurface of given weighted degree with a list of declared nodes.

    Coefficients are exact rationals indexed by the lex-ordered monomial
    basis of the degree.  At every node the form and its gradient vanish,
    the chart Hessian has rank 4, and the ambient space is smooth.
    """

    ambient: WeightedSpace
    degree: int
    coefficients: tuple[Fraction, ...]
    nodes: tuple[Point, ...]

    def __post_init__(self):
        n = len(enumerate_monomials(self.ambient, self.degree))
        if len(self.coefficients) != n:
            raise ValueError(f"expected {n} coefficients")

    def monomials(self) -> list[Mono]:
        return enumerate_monomials(self.ambient, self.degree)

    def polynomial(self) -> Poly:
        return _poly_from_vector(self.monomials(), self.coefficients)

    @property
    def mu(self) -> int:
        return len(self.nodes)

    @classmethod
    def checked(cls, ambient: WeightedSpace, degree: int, coefficients,
                nodes) -> "NodalHypersurface":
        """Validating constructor: normalizes the nodes and verifies every
        declared invariant, raising on the first violation."""
        norm = _prepare_nodes(ambient, nodes)
        coeffs = tuple(Fraction(c) for c in coefficients)
        hyp = cls(ambient, degree, coeffs, norm)
        poly = hyp.polynomial()
        if not poly:
            raise InvariantViolation("the zero form is not a hypersurface")
        for p in norm:
            if poly_eval(poly, p) != 0:
                raise InvariantViolation(f"form does not vanish at {p}")
            for i in range(len(ambient.weights)):
                if poly_eval(poly_partial(poly, i), p) != 0:
                    raise InvariantViolation(f"gradient does not vanish at {p}")
            if hessian_rank(ambient, poly, p) != ambient.dim:
                raise InvariantViolation(f"Hessian is degenerate at {p}")
        return hyp


def _prepare_nodes(space: WeightedSpace, nodes) -> tuple[Point, ...]:
    norm: list[Point] = []
    for raw in nodes:
        p = tuple(Fraction(c) for c in raw)
        if all(c == 0 for c in p):
            raise ValueError("the zero tuple is not a point")
        if space.is_singular_point(p):
            raise NodeAtAmbientSingularity(
                "hypersurfaces with at worst nodes cannot pass through "
                "singular points of the ambient space")
        norm.append(space.normalize(p))
    if len(set(norm)) != len(norm):
        raise ValueError("nodes must be pairwise distinct")
    return tuple(norm)


def _node_constraint_rows(space: WeightedSpace, monos: list[Mono],
                          nodes: tuple[Point, ...]) -> list[list[Fraction]]:
    rows = []
    nvars = len(space.weights)
    for p in nodes:
        rows.append([_mono_eval(e, p) for e in monos])
        for i in range(nvars):
            row = []
            for e in monos:
                if e[i] == 0:
                    row.append(Fraction(0))
                else:
                    d = list(e)
                    d[i] -= 1
                    row.append(e[i] * _mono_eval(tuple(d), p))
            rows.append(row)
    return rows


def build_nodal_hypersurface(space: WeightedSpace, degree: int, nodes,
                             seed: int = 0,
                             max_tries: int = 64) -> NodalHypersurface:
    """Solve for a form with prescribed nodes.

    Vanishing of the form and its gradient at each node is an exact linear
    system on the coefficients; a seeded pseudo-random element of its
    solution space is drawn and redrawn (bounded retries) until the chart
    Hessian has full rank at every node.
    """
    norm = _prepare_nodes(space, nodes)
    monos = enumerate_monomials(space, degree)
    if not monos:
        raise NoSolution(f"no monomials of degree {degree}")
    if norm:
        constraints = lattice.from_rational_rows(
            _node_constraint_rows(space, monos, norm))
    else:
        constraints = lattice.IntMatrix(0, len(monos), ())
    kernel = lattice.rational_nullspace(constraints)
    if not kernel:
        raise NoSolution("node constraints force the zero form")
    rng = random.Random(seed)
    for _ in range(max_tries):
        mix = [rng.randint(-9, 9) for _ in kernel]
        if not any(mix):
            continue
        coeffs = [sum((m * v[k] for m, v in zip(mix, kernel)), Fraction(0))
                  for k in range(len(monos))]
        if not any(coeffs):
            continue
        poly = _poly_from_vector(monos, coeffs)
        if all(hessian_rank(space, poly, p) == space.dim for p in norm):
            return NodalHypersurface(space, degree, tuple(coeffs), norm)
    raise NodalityFailed(
        f"no draw out of {max_tries} gave rank-{space.dim} Hessians at all "
        "nodes; choose different nodes")


@dataclass(frozen=True)
class DefectReport:
    mu: int
    h0_L: int
    eval_rank: int
    delta: int


def adjoint_degree(space: WeightedSpace, degree: int) -> int:
    """Degree of the adjoint twist L: -sum(weights) + 2 * degree."""
    return 2 * degree - sum(space.weights)


def defect(x: NodalHypersurface) -> DefectReport:
    """Defect via the node evaluation matrix on sections of the adjoint twist.

    delta = mu - rank, where rank counts the independent linear conditions
    the nodes impose on forms of the adjoint degree; 0 <= delta <= mu.
    """
    l_deg = adjoint_degree(x.ambient, x.degree)
    if l_deg < 0:
        raise NegativeLDegree(
            f"adjoint twist has degree {l_deg}; formula does not apply")
    monos = enumerate_monomials(x.ambient, l_deg)
    h0 = len(monos)
    if x.mu == 0:
        return DefectReport(0, h0, 0, 0)
    rows = [[_mono_eval(e, p) for e in monos] for p in x.nodes]
    eval_rank = lattice.rank(lattice.from_rational_rows(rows))
    delta = x.mu - eval_rank
    assert 0 <= delta <= x.mu
    return DefectReport(x.mu, h0, eval_rank, delta)


def apply_linear_change(x: NodalHypersurface,
                        matrix: list[list[Fraction | int]]) -> NodalHypersurface:
    """Re-coordinatize by an invertible weight-preserving linear substitution.

    Entry (i, j) may only be nonzero when the weights of variables i and j
    agree; the substituted form is g(x) = f(A x) and the nodes move by the
    inverse matrix.  The defect report is invariant under such changes.
    """
    weights = x.ambient.weights
    n = len(weights)
    mat = [[Fraction(matrix[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if mat[i][j] != 0 and weights[i] != weights[j]:
                raise ValueError("substitution must preserve weights")
    inv = lattice.invert_rational(mat)

    monos = x.monomials()
    nvars = n
    forms = [{tuple(int(k == j) for k in range(nvars)): mat[i][j]
              for j in range(nvars) if mat[i][j] != 0} for i in range(nvars)]
    new_poly: Poly = {}
    for e, c in zip(monos, x.coefficients):
        if c == 0:
            continue
        term: Poly = {(0,) * nvars: Fraction(1)}
        for i, ei in enumerate(e):
            if ei:
                term = _poly_mul(term, _poly_pow(forms[i], ei, nvars))
        for m, v in term.items():
            new_poly[m] = new_poly.get(m, Fraction(0)) + c * v
    index = {m: k for k, m in enumerate(monos)}
    coeffs = [Fraction(0)] * len(monos)
    for m, v in new_poly.items():
        if v != 0:
            coeffs[index[m]] = v
    new_nodes = [tuple(sum((inv[i][j] * p[j] for j in range(n)), Fraction(0))
                       for i in range(n)) for p in x.nodes]
    return NodalHypersurface.checked(x.ambient, x.degree, coeffs, new_nodes)
