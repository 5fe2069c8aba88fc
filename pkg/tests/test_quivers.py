import pytest

from delpezzo.errors import InfiniteDimensional, MalformedRelation
from delpezzo.quivers import (Quiver, cartan_matrix, double_burban, k0_rank,
                              path_basis, single_burban)
from oracles import transfer_dimension


def test_single_burban_dimension():
    report = path_basis(single_burban())
    assert report.dimension == 4
    assert set(report.basis) == {"e_1", "e_2", "a", "a*"}
    assert report.cartan == ((1, 1), (1, 1))
    assert report.k0_rank == 2


def test_double_burban_dimension():
    report = path_basis(double_burban())
    assert report.dimension == 9
    assert set(report.basis) == {"e_1", "e_2", "e_3", "a", "a*", "b", "b*",
                                 "a.b", "b*.a*"}
    assert report.cartan == ((1, 1, 1), (1, 1, 1), (1, 1, 1))
    assert report.k0_rank == 3


def test_one_vertex_quiver():
    q = Quiver.build(["1"], [])
    report = path_basis(q)
    assert report.dimension == 1
    assert report.cartan == ((1,),)
    assert k0_rank(q) == 1


def test_empty_quiver():
    q = Quiver.build([], [])
    assert k0_rank(q) == 0
    assert path_basis(q).dimension == 0


@pytest.mark.parametrize("builder", [single_burban, double_burban])
def test_dimension_matches_transfer_oracle(builder):
    q = builder()
    assert path_basis(q).dimension == \
        transfer_dimension(q.vertices, q.arrows, q.relations)


def test_burban_paths_of_length_three_vanish():
    # exhaust all composable length-3 words and check each hits a relation
    for q in (single_burban(), double_burban()):
        arrows = {n: (s, t) for s, t, n in q.arrows}
        words = []
        for n1 in arrows:
            for n2 in arrows:
                if arrows[n1][1] != arrows[n2][0]:
                    continue
                for n3 in arrows:
                    if arrows[n2][1] == arrows[n3][0]:
                        words.append((n1, n2, n3))
        assert words
        for w in words:
            assert any(w[i:i + len(r)] == tuple(r)
                       for r in q.relations for i in range(len(w)))


def test_loop_quiver_is_infinite():
    q = Quiver.build(["1"], [("1", "1", "a")])
    report = path_basis(q)
    assert report.dimension is None
    with pytest.raises(InfiniteDimensional):
        cartan_matrix(q)
    assert transfer_dimension(q.vertices, q.arrows, q.relations) is None


def test_loop_with_square_zero_is_finite():
    q = Quiver.build(["1"], [("1", "1", "a")], [("a", "a")])
    report = path_basis(q)
    assert report.dimension == 2
    assert report.cartan == ((2,),)


def test_kronecker_quiver():
    q = Quiver.build(["1", "2"], [("1", "2", "x"), ("1", "2", "y")])
    report = path_basis(q)
    assert report.dimension == 4
    assert report.cartan == ((1, 2), (0, 1))


def test_malformed_relations():
    q = Quiver.build(["1", "2"], [("1", "2", "a")], [("a", "a")])
    with pytest.raises(MalformedRelation):
        path_basis(q)
    q2 = Quiver.build(["1", "2"], [("1", "2", "a")], [("zz",)])
    with pytest.raises(MalformedRelation):
        path_basis(q2)


def test_relabeling_gives_isomorphic_report():
    base = double_burban()
    perm = {"1": "3", "2": "2", "3": "1"}
    renamed = Quiver.build(
        [perm[v] for v in base.vertices],
        [(perm[s], perm[t], n + "'") for s, t, n in base.arrows],
        [tuple(n + "'" for n in rel) for rel in base.relations],
    )
    a, b = path_basis(base), path_basis(renamed)
    assert a.dimension == b.dimension
    assert a.k0_rank == b.k0_rank
    # Cartan matrices agree up to the simultaneous vertex permutation
    order = [renamed.vertices.index(perm[v]) for v in base.vertices]
    permuted = tuple(tuple(b.cartan[order[i]][order[j]]
                           for j in range(3)) for i in range(3))
    assert permuted == a.cartan


def test_random_monomial_quivers_match_oracle():
    import random
    rng = random.Random(5)
    for _ in range(25):
        nv = rng.randint(1, 3)
        vertices = [str(i) for i in range(1, nv + 1)]
        arrows = []
        for k in range(rng.randint(0, 4)):
            arrows.append((rng.choice(vertices), rng.choice(vertices),
                           f"a{k}"))
        names = [a[2] for a in arrows]
        by_name = {n: (s, t) for s, t, n in arrows}
        relations = []
        for _ in range(rng.randint(0, 3)):
            n1 = rng.choice(names) if names else None
            if n1 is None:
                break
            options = [n2 for n2 in names if by_name[n1][1] == by_name[n2][0]]
            if options:
                relations.append((n1, rng.choice(options)))
        q = Quiver.build(vertices, arrows, relations)
        report = path_basis(q)
        assert report.dimension == \
            transfer_dimension(q.vertices, q.arrows, q.relations)
        if report.dimension is not None:
            assert report.dimension == sum(sum(row) for row in report.cartan)
