"""Complex construction: shift/tensor/cone algebra and the beta recursion."""

import pytest

from qhammock import (
    ZVertex,
    all_orientations,
    build_quiver,
    default_height,
    positive_roots,
    translate_base,
)
from qhammock.complexes import (
    Complex,
    Component,
    FractionComplex,
    build_complex,
    complex_to_json,
    cone,
    euler_char,
    initial_ghost_complex,
    initial_hammock_complex,
    initial_kr_complex,
    shift,
    single_complex,
    tensor_complex,
    unit_complex,
    validate_components,
    verify_d_squared,
    verify_exactness_smallrank,
)
from qhammock.errors import (
    InconsistentConnector,
    NegativeDegree,
    NotDominant,
    NotInSupport,
)
from qhammock.laurent import LaurentPoly, mono_from_dict, mono_key_str
from qhammock.objects import hammock_object, kr_object, serre_tilt, unit_obj


def a2():
    q = build_quiver("A", 2, [(1, 2)])
    return q, default_height(q)


def Y(i, p, e=1):
    return LaurentPoly.variable(("Y", i, p), e)


# ------------------------------------------------------------ raw algebra


def test_complex_container_checks():
    q, xi = a2()
    y = hammock_object(q, xi, ZVertex(1, 1))
    with pytest.raises(NegativeDegree):
        Complex({-1: [y]})
    with pytest.raises(NegativeDegree):
        single_complex(y, -2)
    with pytest.raises(InconsistentConnector):
        Complex({0: [y], 1: [y]}, {0: [Component(0, 1, ("eta", 1), 1)]})
    c = Complex({0: [y], 2: [y]})
    assert c.degrees() == [0, 2]
    assert c.summand_count() == 2
    assert not c.is_zero() and Complex().is_zero()


def test_shift_degrees_and_signs():
    q, xi = a2()
    x = ZVertex(1, 1)
    y = hammock_object(q, xi, x)
    t = serre_tilt(q, y, [x])
    c = Complex({0: [y], 1: [t]}, {0: [Component(0, 0, ("eta", 1), 1)]})
    s = shift(c, 2)
    assert s.degrees() == [2, 3]
    assert s.diffs[2][0].sign == 1  # even shift keeps signs
    s1 = shift(c, 1)
    assert s1.diffs[1][0].sign == -1  # odd shift flips
    assert shift(shift(c, 1), 1).diffs[2][0].sign == 1
    with pytest.raises(NegativeDegree):
        shift(c, -1)
    assert shift(Complex(), 5).is_zero()


def test_tensor_unit_and_counts():
    q, xi = a2()
    k = initial_kr_complex(q, xi, 1)
    assert tensor_complex(k, unit_complex()).summand_count() == 1
    g = initial_ghost_complex(q, xi, 1)
    prod = tensor_complex(k, g)
    assert prod.degrees() == [1]
    assert tensor_complex(k, Complex()).is_zero()


def test_tensor_koszul_sign():
    q, xi = a2()
    x = ZVertex(1, 1)
    y = hammock_object(q, xi, x)
    t = serre_tilt(q, y, [x])
    c = Complex({0: [y], 1: [t]}, {0: [Component(0, 0, ("eta", 1), 1)]})
    # put a degree-1 term on the left; the right factor's differential
    # must pick up the Koszul twist
    left = single_complex(y, 1)
    prod = tensor_complex(left, c)
    assert [comp.sign for comp in prod.diffs[1]] == [-1]
    prod0 = tensor_complex(single_complex(y, 0), c)
    assert [comp.sign for comp in prod0.diffs[0]] == [1]


def test_cone_blocks_and_guards():
    # connectors are tagged by label; with ctx the target must be the tilt
    # of the source at that label's translated base vertex
    q, xi = a2()
    k1 = kr_object(q, xi, 1)
    t = serre_tilt(q, k1, [translate_base(xi, 1)])
    dom = single_complex(k1, 1)
    cod = single_complex(t, 1)
    e = cone(dom, cod, {1: [(0, 0, ("eta", 1), 1)]}, ctx=(q, xi))
    assert e.degrees() == [0, 1]
    assert e.diffs[0][0] == Component(0, 0, ("eta", 1), 1)
    # cod block sign negation
    codd = Complex({0: [k1], 1: [t]}, {0: [Component(0, 0, ("eta", 1), 1)]})
    e2 = cone(Complex(), codd)
    assert e2.diffs[0][0].sign == -1
    with pytest.raises(NegativeDegree):
        cone(single_complex(k1, 0), Complex())
    with pytest.raises(InconsistentConnector):
        # target is not the tilt of the source
        cone(dom, single_complex(k1, 1), {1: [(0, 0, ("eta", 1), 1)]}, ctx=(q, xi))
    with pytest.raises(InconsistentConnector):
        cone(dom, cod, {1: [(0, 5, ("eta", 1), 1)]})


# ----------------------------------------------------------- the recursion


A2_SHAPES = {
    # beta -> (denominator, kclass keys per degree)
    (1, 0): ({1: 1}, [["Y:1:-1^1 Y:1:1^1"], ["Y:2:0^1 f:1^1"]]),
    (0, 1): (
        {2: 1},
        [["Y:1:1^1 Y:2:-2^1 Y:2:0^1"], ["Y:1:-1^1 Y:1:1^1 f:2^1"]],
    ),
    (1, 1): (
        {1: 1, 2: 1},
        [
            ["Y:1:1^1 Y:2:-2^1 Y:2:0^1"],
            ["Y:1:-1^1 Y:1:1^1 f:2^1"],
            ["Y:2:0^1 f:1^1 f:2^1"],
        ],
    ),
}


def test_a2_complex_shapes_frozen():
    q, xi = a2()
    for beta, (den, rows) in A2_SHAPES.items():
        fc = build_complex(q, xi, beta)
        assert fc.den == den
        got = [
            [mono_key_str(o.kclass) for o in fc.num.terms[n]]
            for n in fc.num.degrees()
        ]
        assert got == rows, beta


def test_a2_euler_characteristics_golden():
    q, xi = a2()
    chi = {
        beta: euler_char(q, xi, build_complex(q, xi, beta), specialize_f=-1)
        for beta in positive_roots(q)
    }
    assert chi[(1, 0)] == Y(1, -1) + Y(2, 0) * Y(1, 1, -1)
    assert chi[(0, 1)] == Y(1, -1) * Y(1, 1) * Y(2, 0, -1) + Y(1, 1) * Y(2, -2)
    assert chi[(1, 1)] == Y(1, -1) * Y(2, 0, -1) + Y(1, 1, -1) + Y(2, -2)


def test_euler_requires_classes():
    q, xi = a2()
    y = hammock_object(q, xi, ZVertex(1, 3))  # classless object
    fc = FractionComplex(single_complex(y, 0), {})
    with pytest.raises(ValueError):
        euler_char(q, xi, fc)


def test_pivot_invariance_and_guard():
    q, xi = a2()
    a = euler_char(q, xi, build_complex(q, xi, (1, 1), pivot=1), specialize_f=-1)
    b = euler_char(q, xi, build_complex(q, xi, (1, 1), pivot=2), specialize_f=-1)
    assert a == b
    with pytest.raises(NotInSupport):
        build_complex(q, xi, (1, 0), pivot=2)
    with pytest.raises(NotDominant):
        build_complex(q, xi, (1, -1))


def test_negative_simple_base_case():
    # a negative simple root bottoms out at the base hammock object, whose
    # class is the plain base-section variable
    q, xi = a2()
    fc = build_complex(q, xi, (0, -1))
    assert fc.den == {}
    assert fc.num.degrees() == [0]
    assert euler_char(q, xi, fc) == Y(2, 0)
    assert euler_char(q, xi, build_complex(q, xi, (-1, 0))) == Y(1, 1)


def test_zero_vector_gives_unit():
    q, xi = a2()
    fc = build_complex(q, xi, (0, 0))
    assert fc.num.degrees() == [0]
    assert euler_char(q, xi, fc) == LaurentPoly.one()


def test_structure_checks_over_a3_roots():
    for q in all_orientations("A", 3):
        xi = default_height(q)
        for beta in positive_roots(q):
            fc = build_complex(q, xi, beta)
            rep = verify_d_squared(q, fc.num)
            assert rep["ok"], (q.arrows, beta, rep["violations"][:2])
            assert validate_components(q, xi, fc.num)
            exact = verify_exactness_smallrank(q, xi, fc, beta)
            assert exact["ok"], (q.arrows, beta, exact["failures"][:2])


def test_complex_json_schema():
    q, xi = a2()
    j = complex_to_json(build_complex(q, xi, (1, 1)))
    assert set(j) == {"denominator", "terms", "differentials"}
    assert j["denominator"] == {"1": 1, "2": 1}
    assert set(j["terms"]) == {"0", "1", "2"}
    for row in j["terms"].values():
        for obj in row:
            assert {"multiset", "gens", "deltas"} <= set(obj)
    assert j["differentials"] == {
        "0": [[0, 0, "eta_2", 1]],
        "1": [[0, 0, "eta_1", -1]],
    }
