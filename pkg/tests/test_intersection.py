import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from delpezzo.errors import (NoRelationsForDegree, OutOfRangeDegree,
                             UnknownBasis)
from delpezzo.intersection import (BASIS_HE, BASIS_hD, BlowupGeometry,
                                   DivisorClass, E, H, canonical_class,
                                   class_text, he, hd, iskovskikh_degree,
                                   rewrite, triple)

coords = st.tuples(st.integers(-9, 9), st.integers(-9, 9))
degrees = st.sampled_from([4, 5])


def test_degree_validation():
    with pytest.raises(OutOfRangeDegree):
        BlowupGeometry(3)
    with pytest.raises(OutOfRangeDegree):
        iskovskikh_degree(7)
    with pytest.raises(OutOfRangeDegree):
        canonical_class(2)


def test_polarization_cube():
    assert triple(BlowupGeometry(5), H, H, H) == 5


def test_projection_image_degree():
    hme = H - E
    assert triple(BlowupGeometry(5), hme, hme, hme) == 2
    assert triple(BlowupGeometry(4), hme, hme, hme) == 1


def test_mixed_product_vanishes():
    # the pullback polarization squared restricts trivially to the
    # exceptional divisor: it comes from a curve class downstairs
    assert triple(BlowupGeometry(5), H, H, E) == 0


@pytest.mark.parametrize("d,expected", [(4, 1), (5, 2), (6, 3)])
def test_iskovskikh_degree(d, expected):
    assert iskovskikh_degree(d) == expected


@given(degrees, coords, coords, coords)
def test_triple_symmetric(d, a, b, c):
    geom = BlowupGeometry(d)
    classes = [DivisorClass(BASIS_HE, a), DivisorClass(BASIS_HE, b),
               DivisorClass(BASIS_HE, c)]
    values = {triple(geom, *perm) for perm in itertools.permutations(classes)}
    assert len(values) == 1


@given(degrees, coords, coords, coords, st.integers(-5, 5), st.integers(-5, 5))
def test_triple_multilinear(d, a, b, c, m, n):
    geom = BlowupGeometry(d)
    ca, cb, cc = (DivisorClass(BASIS_HE, v) for v in (a, b, c))
    assert triple(geom, m * ca + n * cb, cb, cc) == \
        m * triple(geom, ca, cb, cc) + n * triple(geom, cb, cb, cc)


def test_rewrite_examples():
    assert rewrite(H - E, BASIS_hD, 5) == hd(1, 0)
    assert rewrite(he(-2, 1), BASIS_hD, 4) == hd(-4, 1)
    assert rewrite(he(-2, 1), BASIS_hD, 5) == hd(-3, 1)
    # generators themselves
    assert rewrite(E, BASIS_hD, 4) == hd(2, -1)
    assert rewrite(E, BASIS_hD, 5) == hd(1, -1)


def test_canonical_class():
    for d in (4, 5, 6):
        assert canonical_class(d) == he(-2, 1)
    assert canonical_class(4, BASIS_hD) == hd(-4, 1)
    assert canonical_class(5, BASIS_hD) == hd(-3, 1)
    with pytest.raises(NoRelationsForDegree):
        canonical_class(6, BASIS_hD)


@given(degrees, coords)
def test_rewrite_round_trip(d, v):
    cls = DivisorClass(BASIS_HE, v)
    assert rewrite(rewrite(cls, BASIS_hD, d), BASIS_HE, d) == cls
    other = DivisorClass(BASIS_hD, v)
    assert rewrite(rewrite(other, BASIS_HE, d), BASIS_hD, d) == other


def test_no_relations_for_degree_six():
    with pytest.raises(NoRelationsForDegree):
        rewrite(H, BASIS_hD, 6)
    # the identity rewrite never needs relations
    assert rewrite(H, BASIS_HE, 6) == H


def test_unknown_basis():
    with pytest.raises(UnknownBasis):
        DivisorClass("XY", (1, 0))
    with pytest.raises(UnknownBasis):
        rewrite(H, "XY", 4)
    with pytest.raises(UnknownBasis):
        H + hd(1, 0)


def test_class_text():
    assert class_text(he(2, -1)) == "2H-E"
    assert class_text(hd(-2, 1)) == "D-2h"
    assert class_text(he(0, 0)) == "0"
    assert class_text(hd(-1, 0)) == "-h"
    assert class_text(he(1, 1)) == "H+E"
