"""Independent oracles used to freeze expected values in the tests.

These deliberately avoid the code paths they check: monomial counting by
raw exponent search, Smith invariants through minor gcds, determinants by
Laplace expansion, and quiver dimensions by a forbidden-factor automaton.
"""

from __future__ import annotations

import itertools
from math import gcd


def brute_force_monomials(weights, degree):
    """All exponent tuples with the given weighted degree, by raw search."""
    ranges = [range(degree // w + 1) for w in weights]
    return sorted(e for e in itertools.product(*ranges)
                  if sum(ei * wi for ei, wi in zip(e, weights)) == degree)


def det_int(rows):
    """Integer determinant by Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, head in enumerate(rows[0]):
        if head == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        total += (-1) ** j * head * det_int(minor)
    return total


def minors_gcd(rows, k):
    """gcd of all k x k minors (0 when all vanish)."""
    nr, nc = len(rows), len(rows[0])
    g = 0
    for ri in itertools.combinations(range(nr), k):
        for ci in itertools.combinations(range(nc), k):
            minor = [[rows[i][j] for j in ci] for i in ri]
            g = gcd(g, det_int(minor))
    return g


def smith_diagonal_from_minors(rows):
    """Smith diagonal d_i = gcd_i / gcd_{i-1} from minor gcds."""
    n = min(len(rows), len(rows[0]))
    gcds = [1] + [minors_gcd(rows, k) for k in range(1, n + 1)]
    diag = []
    for k in range(1, n + 1):
        if gcds[k] == 0:
            diag.append(0)
        else:
            diag.append(gcds[k] // gcds[k - 1])
    return tuple(diag)


def transfer_dimension(vertices, arrows, relations, cap=64):
    """Path algebra dimension by a forbidden-factor automaton walk.

    States are (vertex, recent arrow names); weights count surviving words
    per length.  Returns None when the reachable transition graph can feed
    itself past the cap (infinite dimensional), else the total count.
    """
    relations = {tuple(r) for r in relations}
    memory = max((len(r) for r in relations), default=1) - 1
    by_name = {name: (s, t) for s, t, name in arrows}

    def step(state, name):
        vertex, recent = state
        src, dst = by_name[name]
        if src != vertex:
            return None
        word = recent + (name,)
        if any(word[-len(r):] == r for r in relations if len(r) <= len(word)):
            return None
        return (dst, word[-memory:] if memory else ())

    weights = {(v, ()): 1 for v in vertices}
    total = sum(weights.values())
    for _ in range(cap):
        nxt = {}
        for state, w in weights.items():
            for name in by_name:
                out = step(state, name)
                if out is not None:
                    nxt[out] = nxt.get(out, 0) + w
        if not nxt:
            return total
        total += sum(nxt.values())
        weights = nxt
    return None
