"""Path algebras of quivers with monomial relations.

Paths are written left to right in travel order: in the three-vertex
quiver below, "a b" is the path 1 -> 2 -> 3.  Only monomial relations are
supported; a path is zero exactly when some relation occurs in it as a
contiguous subword.

The two built-in quivers model the residual components that appear for
nodal degenerations: a pair of vertices with back-and-forth arrows whose
length-2 round trips vanish (dimension 4), and its three-vertex chain
analogue (dimension 9).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfiniteDimensional, MalformedRelation

Arrow = tuple[str, str, str]  # (source, target, name)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: frozenset[tuple[str, ...]]

    def __post_init__(self):
        names = [a[2] for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex ids must be unique")
        for s, t, _ in self.arrows:
            if s not in self.vertices or t not in self.vertices:
                raise ValueError("arrow endpoint is not a vertex")

    @classmethod
    def build(cls, vertices, arrows, relations=()) -> "Quiver":
        return cls(tuple(str(v) for v in vertices),
                   tuple((str(s), str(t), str(n)) for s, t, n in arrows),
                   frozenset(tuple(w) for w in relations))


def single_burban() -> Quiver:
    return Quiver.build(
        ["1", "2"],
        [("1", "2", "a"), ("2", "1", "a*")],
        [("a", "a*"), ("a*", "a")],
    )


def double_burban() -> Quiver:
    return Quiver.build(
        ["1", "2", "3"],
        [("1", "2", "a"), ("2", "1", "a*"), ("2", "3", "b"), ("3", "2", "b*")],
        [("a", "a*"), ("a*", "a"), ("b", "b*"), ("b*", "b")],
    )


@dataclass(frozen=True)
class PathAlgebraReport:
    """Basis data of a path algebra; dimension None means infinite."""

    dimension: int | None
    basis: tuple[str, ...]
    cartan: tuple[tuple[int, ...], ...] | None
    k0_rank: int


@dataclass(frozen=True)
class _Path:
    source: str
    target: str
    word: tuple[str, ...]

    def text(self) -> str:
        return f"e_{self.source}" if not self.word else ".".join(self.word)


def _arrow_map(q: Quiver) -> dict[str, Arrow]:
    return {name: (s, t, name) for s, t, name in q.arrows}


def _check_relations(q: Quiver) -> None:
    arrows = _arrow_map(q)
    for word in q.relations:
        if not word:
            raise MalformedRelation("empty relation word")
        for name in word:
            if name not in arrows:
                raise MalformedRelation(f"unknown arrow {name!r} in relation")
        for u, v in zip(word, word[1:]):
            if arrows[u][1] != arrows[v][0]:
                raise MalformedRelation(
                    f"relation word {' '.join(word)} is not composable")


def _has_relation_suffix(word: tuple[str, ...], relations) -> bool:
    return any(len(r) <= len(word) and word[-len(r):] == r for r in relations)


def k0_rank(q: Quiver) -> int:
    """Vertex count: rank of K_0 of a finite-dimensional basic algebra."""
    return len(q.vertices)


def path_basis(q: Quiver) -> PathAlgebraReport:
    """Enumerate nonzero paths by increasing length.

    Words are pruned as soon as a relation appears as a contiguous subword
    (checking suffixes suffices since shorter prefixes already survived).
    If survivors persist past length |vertices| x |arrows| + 1 and a
    surviving word revisits a (vertex, recent-arrows) state, the repeated
    loop pumps to arbitrarily long nonzero paths and the algebra is
    declared infinite dimensional.
    """
    _check_relations(q)
    arrows = _arrow_map(q)
    max_rel = max((len(w) for w in q.relations), default=1)
    memory = max(max_rel - 1, 0)
    floor_bound = len(q.vertices) * max(len(q.arrows), 1) + 1

    survivors = [_Path(v, v, ()) for v in q.vertices]
    basis: list[_Path] = list(survivors)
    length = 0
    while survivors:
        length += 1
        nxt = []
        for p in survivors:
            for s, t, name in q.arrows:
                if s != p.target:
                    continue
                word = p.word + (name,)
                if _has_relation_suffix(word, q.relations):
                    continue
                nxt.append(_Path(p.source, t, word))
        survivors = nxt
        if survivors and length >= floor_bound:
            for p in survivors:
                if _repeatable_cycle(p, arrows, memory):
                    return PathAlgebraReport(None, (), None, k0_rank(q))
        basis.extend(survivors)

    basis.sort(key=lambda p: (len(p.word), p.word, p.source))
    index = {v: i for i, v in enumerate(q.vertices)}
    n = len(q.vertices)
    cartan = [[0] * n for _ in range(n)]
    for p in basis:
        cartan[index[p.source]][index[p.target]] += 1
    return PathAlgebraReport(
        dimension=len(basis),
        basis=tuple(p.text() for p in basis),
        cartan=tuple(tuple(row) for row in cartan),
        k0_rank=k0_rank(q),
    )


def _repeatable_cycle(p: _Path, arrows: dict[str, Arrow], memory: int) -> bool:
    # state after step t: (current vertex, last `memory` arrow names); a
    # repeated state bounds a loop whose powers stay relation free, because
    # every forbidden-factor window of the pumped word already occurs in p
    states = []
    vertex = p.source
    recent: tuple[str, ...] = ()
    states.append((vertex, recent))
    for name in p.word:
        vertex = arrows[name][1]
        recent = (recent + (name,))[-memory:] if memory else ()
        state = (vertex, recent)
        if state in states:
            return True
        states.append(state)
    return False


def cartan_matrix(q: Quiver) -> tuple[tuple[int, ...], ...]:
    """Entry (i, j) counts nonzero basis paths from vertex i to vertex j."""
    report = path_basis(q)
    if report.dimension is None:
        raise InfiniteDimensional("path algebra is infinite dimensional")
    return report.cartan
