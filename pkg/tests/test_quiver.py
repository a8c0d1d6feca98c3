"""Dynkin quiver layer: shape validation, heights, roots, support data."""

import pytest

from qhammock import (
    all_orientations,
    beta_combinatorics,
    build_quiver,
    coxeter_number,
    default_height,
    height_from_values,
    nakayama_involution,
    positive_roots,
    sample_orientations,
    simple_root,
)
from qhammock.errors import EmptySupport, ParityViolation, Reorientation, WrongShape
from qhammock.quiver import (
    expected_edges,
    is_nonneg,
    root_add,
    root_height,
    root_sub,
    root_support,
)


def A(n, arrows=None):
    if arrows is None:
        arrows = [(i, i + 1) for i in range(1, n)]
    return build_quiver("A", n, arrows)


def D(n, arrows=None):
    if arrows is None:
        arrows = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    return build_quiver("D", n, arrows)


# ---------------------------------------------------------------- shape


def test_tree_shapes():
    assert sorted(tuple(sorted(e)) for e in expected_edges("A", 3)) == [(1, 2), (2, 3)]
    assert sorted(tuple(sorted(e)) for e in expected_edges("D", 4)) == [
        (1, 2),
        (2, 3),
        (2, 4),
    ]
    # E-series forks at vertex 3 off the chain
    e6 = sorted(tuple(sorted(e)) for e in expected_edges("E", 6))
    assert len(e6) == 5


def test_shape_rejections():
    with pytest.raises(Reorientation):
        build_quiver("A", 3, [(1, 2), (2, 3), (1, 3)])
    with pytest.raises(Reorientation):
        build_quiver("A", 3, [(1, 2), (1, 2)])
    with pytest.raises(WrongShape):
        build_quiver("B", 3, [(1, 2), (2, 3)])
    with pytest.raises(WrongShape):
        build_quiver("D", 3, [(1, 2), (2, 3)])
    with pytest.raises(WrongShape):
        expected_edges("E", 9)


def test_orientation_enumeration():
    for n in (2, 3, 4):
        qs = list(all_orientations("A", n))
        assert len(qs) == 2 ** (n - 1)
        assert len({q.arrows for q in qs}) == len(qs)
    assert len(list(all_orientations("D", 4))) == 8


def test_sample_orientations_deterministic():
    a = sample_orientations("D", 5, 8, seed=7)
    b = sample_orientations("D", 5, 8, seed=7)
    assert [q.arrows for q in a] == [q.arrows for q in b]
    assert len({q.arrows for q in a}) == 8
    # asking for more than exist caps at the total
    small = sample_orientations("A", 2, 99, seed=0)
    assert len(small) == 2


def test_quiver_navigation():
    q = A(3, [(1, 2), (3, 2)])
    assert q.arrows_from(1) == (2,)
    assert q.arrows_to(2) == (1, 3)
    assert q.sinks() == (2,)
    assert q.neighbors(2) == (1, 3)
    assert q.has_path(1, 2) and not q.has_path(1, 3)
    assert q.distance(1, 3) == 2


# ---------------------------------------------------------------- heights


def test_parity_class_is_tree_two_coloring():
    q = A(4)
    assert [q.parity_class(i) for i in q.vertices] == [1, 0, 1, 0]
    d = D(4)
    assert [d.parity_class(i) for i in d.vertices] == [1, 0, 1, 1]


def test_default_height_is_adapted():
    for q in all_orientations("A", 4):
        xi = default_height(q)
        for (a, b) in q.arrows:
            assert xi.ht(b) == xi.ht(a) - 1
        for i in q.vertices:
            assert xi.ht(i) % 2 == q.parity_class(i)


def test_default_height_pinned_values():
    assert default_height(A(2)).values == (1, 0)
    assert default_height(A(2, [(2, 1)])).values == (1, 2)


def test_height_from_values_validation():
    q = A(2)
    assert height_from_values(q, {1: 3, 2: 2}).values == (3, 2)
    with pytest.raises(ParityViolation):
        height_from_values(q, {1: 0, 2: 1})  # not adapted to the arrow
    with pytest.raises(ParityViolation):
        height_from_values(q, {1: 2, 2: 1})  # wrong parity coset


def test_coxeter_numbers():
    assert coxeter_number(A(2)) == 3
    assert coxeter_number(A(4)) == 5
    assert coxeter_number(D(4)) == 6
    assert coxeter_number(D(5)) == 8


def test_nakayama_involution():
    assert [nakayama_involution(A(4), i) for i in range(1, 5)] == [4, 3, 2, 1]
    assert [nakayama_involution(D(4), i) for i in range(1, 5)] == [1, 2, 3, 4]
    assert [nakayama_involution(D(5), i) for i in range(1, 6)] == [1, 2, 3, 5, 4]
    # is an involution on every family we ship
    for q in (A(5), D(5)):
        for i in q.vertices:
            assert nakayama_involution(q, nakayama_involution(q, i)) == i


# ---------------------------------------------------------------- roots


def test_positive_root_counts():
    assert len(positive_roots(A(2))) == 3
    assert len(positive_roots(A(3))) == 6
    assert len(positive_roots(A(5))) == 15
    assert len(positive_roots(D(4))) == 12
    assert len(positive_roots(D(5))) == 20


def test_positive_roots_a2_exact():
    assert positive_roots(A(2)) == ((0, 1), (1, 0), (1, 1))


def test_positive_roots_are_orientation_free():
    want = set(positive_roots(A(3)))
    for q in all_orientations("A", 3):
        assert set(positive_roots(q)) == want


def test_d4_highest_root():
    # D4 highest root has coefficient 2 at the node
    roots = positive_roots(D(4))
    assert (1, 2, 1, 1) in roots
    assert max(root_height(r) for r in roots) == 5


def test_root_helpers():
    q = A(3)
    a1 = simple_root(q, 1)
    assert a1 == (1, 0, 0)
    assert root_add(a1, simple_root(q, 2)) == (1, 1, 0)
    assert root_sub((1, 1, 0), a1) == (0, 1, 0)
    assert is_nonneg((0, 1, 0)) and not is_nonneg((1, -1, 0))
    assert root_height((1, 2, 1)) == 4
    assert root_support((0, 2, 1)) == (2, 3)


# ------------------------------------------------------- support data


def test_beta_combinatorics_theta_a2():
    q = A(2)
    xi = default_height(q)
    bd = beta_combinatorics(q, xi, (1, 1))
    assert bd.support == (1, 2)
    assert bd.out_closure == {1: frozenset({1, 2}), 2: frozenset({2})}
    assert bd.in_closure == {1: frozenset({1}), 2: frozenset({1, 2})}
    assert bd.dim_proj == {1: (1, 1), 2: (0, 1)}
    assert bd.dim_inj == {1: (1, 0), 2: (1, 1)}
    assert bd.min_coeff_vertices == (1, 2)
    # pivot selection is a policy choice (any support vertex gives the same
    # character; invariance is covered by the complex-level tests), but it
    # must be deterministic and drawn from the candidates
    assert bd.pivot in bd.pivot_candidates
    assert set(bd.pivot_candidates) <= set(bd.support)


def test_beta_combinatorics_closures_respect_orientation():
    q = A(3, [(2, 1), (2, 3)])  # source in the middle
    xi = default_height(q)
    bd = beta_combinatorics(q, xi, (1, 1, 1))
    assert bd.out_closure[2] == frozenset({1, 2, 3})
    assert bd.in_closure[2] == frozenset({2})
    assert bd.dim_proj[2] == (1, 1, 1)
    assert bd.dim_inj[2] == (0, 1, 0)


def test_beta_combinatorics_support_subquiver_only():
    # support {1, 3} of A3 is disconnected: closures stay inside components
    q = A(3)
    xi = default_height(q)
    bd = beta_combinatorics(q, xi, (2, 0, 1))
    assert bd.support == (1, 3)
    assert bd.out_closure[1] == frozenset({1})
    assert bd.dim_proj[1] == (1, 0, 0)


def test_beta_combinatorics_rejects_bad_input():
    q = A(2)
    xi = default_height(q)
    with pytest.raises(EmptySupport):
        beta_combinatorics(q, xi, (0, 0))
    with pytest.raises(EmptySupport):
        beta_combinatorics(q, xi, (1, -1))
