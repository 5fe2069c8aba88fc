from fractions import Fraction

import pytest

from delpezzo.dsl import (builtin_script_names, load_builtin_script,
                          parse_class, parse_instance, parse_intersection_expr,
                          parse_node, parse_quiver, parse_script,
                          render_instance, render_script)
from delpezzo.errors import InstanceFormatError, ScriptSyntaxError
from delpezzo.intersection import BASIS_hD, he, hd
from delpezzo.quivers import path_basis
from delpezzo.sod import LineBundle, Opaque, TwistedStructureSheaf
from delpezzo.wps import WeightedSpace, build_nodal_hypersurface


def test_builtin_scripts_present():
    assert builtin_script_names() == [
        "prop-Y-to-V", "prop-Y-to-V-4", "prop-Y-to-W-4", "prop-Y-to-W-5"]


def test_line_side_script_has_nine_rules():
    script = load_builtin_script("prop-Y-to-V")
    assert len(script.rules) == 9
    assert script.d == 5
    assert script.ambient == "Y5"


def test_parse_class_forms():
    assert parse_class("2H-E") == he(2, -1)
    assert parse_class("-h") == hd(-1, 0)
    assert parse_class("D-2h") == hd(-2, 1)
    assert parse_class("0") == he(0, 0)
    assert parse_class("H+E") == he(1, 1)
    with pytest.raises(ScriptSyntaxError):
        parse_class("H+q")
    with pytest.raises(ScriptSyntaxError):
        parse_class("H+h")


def test_parse_node_forms():
    assert parse_node("O(E-H)", 5) == LineBundle(he(-1, 1))
    assert parse_node("O_E(2H)", 5) == TwistedStructureSheaf("E", he(2, 0))
    # the projection-side twisted sheaf lands in canonical coordinates
    assert parse_node("O_D(D-h)", 5) == TwistedStructureSheaf("D", he(0, -1))
    node = parse_node("CAT(A_C)", 5)
    assert isinstance(node, Opaque) and node.name == "A_C"
    with pytest.raises(ScriptSyntaxError):
        parse_node("Q(H)", 5)


def test_misspelled_keyword_reports_position():
    text = "ambient Y d=5\naxiom <CAT(DbY)>\nswap att 3\nexpect <CAT(DbY)>\n"
    with pytest.raises(ScriptSyntaxError) as err:
        parse_script(text)
    assert err.value.line == 3
    assert err.value.col == 6


def test_empty_script_is_rejected():
    with pytest.raises(ScriptSyntaxError) as err:
        parse_script("")
    assert err.value.line == 1
    with pytest.raises(ScriptSyntaxError):
        parse_script("# only a comment\n")


def test_header_is_required_first():
    with pytest.raises(ScriptSyntaxError):
        parse_script("axiom <CAT(DbY)>\n")


def test_expect_must_be_last():
    text = ("ambient Y d=5\naxiom <CAT(DbY)>\n"
            "expect <CAT(DbY)>\nswap at 1\n")
    with pytest.raises(ScriptSyntaxError):
        parse_script(text)


def test_round_trip_print_parse():
    for name in builtin_script_names():
        script = load_builtin_script(name)
        text = render_script(script)
        again = parse_script(text, name=script.name)
        assert again == script
        assert render_script(again) == text


def test_display_basis_detection():
    assert load_builtin_script("prop-Y-to-W-4").display_basis == BASIS_hD
    assert load_builtin_script("prop-Y-to-V").display_basis == "HE"


def test_instance_round_trip():
    space = WeightedSpace((1, 1, 1, 1, 1))
    hyp = build_nodal_hypersurface(space, 3, [(0, 0, 0, 0, 1)])
    text = render_instance(hyp)
    space2, degree, nodes, coeffs = parse_instance(text)
    assert space2 == space
    assert degree == 3
    assert [tuple(map(Fraction, n)) for n in nodes] == list(hyp.nodes)
    assert tuple(coeffs) == hyp.coefficients


def test_instance_errors():
    with pytest.raises(InstanceFormatError):
        parse_instance("degree 3\n")
    with pytest.raises(InstanceFormatError):
        parse_instance("weights 1 1 1 1 1\ndegree 3\nnode 1 0\n")
    with pytest.raises(InstanceFormatError):
        parse_instance("weights 1 1\ndegree 1\ncoeffs 1\n")
    with pytest.raises(InstanceFormatError):
        parse_instance("weights 1 1\ndegree 1\nnode 1 1/0\n")


def test_parse_quiver_file():
    text = """
    vertices 1 2
    arrow a 1 2
    arrow a* 2 1
    relation a a*
    relation a* a
    """
    q = parse_quiver(text)
    assert path_basis(q).dimension == 4
    with pytest.raises(InstanceFormatError):
        parse_quiver("arrow a 1 2\n")


def test_parse_intersection_expr():
    cube = parse_intersection_expr("(H-E)^3")
    assert cube == [he(1, -1)] * 3
    mixed = parse_intersection_expr("H^2*E")
    assert mixed == [he(1, 0), he(1, 0), he(0, 1)]
    assert parse_intersection_expr("(h)^2*(D)") == [hd(1, 0), hd(1, 0), hd(0, 1)]
    with pytest.raises(InstanceFormatError):
        parse_intersection_expr("(H-E)^2")
    with pytest.raises(InstanceFormatError):
        parse_intersection_expr("(H-E")
