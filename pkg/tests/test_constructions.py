import itertools
import math

import numpy as np
import pytest

from qdrg.constructions import (
    OUT_OF_SCOPE,
    REGISTRY,
    GF4Element,
    LinearCode,
    binary_golay,
    gq22_graph,
    grid_3x3,
    hermitian_dual_polar,
    maximal_isotropic_subspaces,
    ternary_golay,
)
from qdrg.constructions import codes, gf4
from qdrg.errors import CodeVerificationFailed, DiameterUnsupported
from qdrg.graphs import (
    all_idempotents,
    cosine_spot_check,
    idempotent_completeness,
    intersection_numbers,
    kite_free,
    local_structure,
    theorem_conditions_graph,
)
from qdrg.params import ArrayAnalysis

F = GF4Element.elements()
ZERO, ONE = F[0], F[1]


# --- GF(4) ---------------------------------------------------------------------

def test_gf4_field_axioms():
    for x, y, z in itertools.product(F, repeat=3):
        assert x + y == y + x and x * y == y * x
        assert (x + y) + z == x + (y + z) and (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
    for x in F:
        assert x + ZERO == x and x * ONE == x and x + x == ZERO
        if x != ZERO:
            assert x * x.inverse() == ONE


def test_gf4_omega_relation():
    w = GF4Element(2)
    assert w * w == w + ONE
    assert w * w * w == ONE


def test_gf4_conjugation_is_involutive_automorphism():
    for x, y in itertools.product(F, repeat=2):
        assert x.conjugate().conjugate() == x
        assert (x + y).conjugate() == x.conjugate() + y.conjugate()
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert [x for x in F if x.conjugate() == x] == [ZERO, ONE]


def test_gf4_rejects_bad_values():
    with pytest.raises(ValueError):
        GF4Element(4)
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_hermitian_form_is_hermitian():
    for x, y in itertools.product(itertools.product(range(4), repeat=2), repeat=2):
        assert gf4.hermitian(x, y) == gf4.CONJ[gf4.hermitian(y, x)]


# --- codes -------------------------------------------------------------------

def test_ternary_golay():
    code = ternary_golay()
    assert (code.length, code.dimension, code.minimum_distance) == (12, 6, 6)
    assert code.weight_enumerator == {0: 1, 6: 264, 9: 440, 12: 24}
    H = code.parity_check()
    assert not np.any(code.generator @ H.T % 3)


def test_binary_golay():
    code = binary_golay()
    assert (code.length, code.dimension, code.minimum_distance) == (24, 12, 8)
    assert code.weight_enumerator == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def test_linear_code_checks():
    with pytest.raises(CodeVerificationFailed):
        LinearCode(2, [[1, 1, 0], [1, 1, 0]])
    with pytest.raises(CodeVerificationFailed):
        LinearCode(2, [[1, 1, 0], [0, 1, 1]], declared_distance=3).verify()


def test_wrong_generator_polynomial_is_caught(monkeypatch):
    monkeypatch.setattr(codes, "TERNARY_GOLAY_POLY", (1, 1, 0, 0, 0, 1))
    with pytest.raises(CodeVerificationFailed):
        ternary_golay()


# --- builders ----------------------------------------------------------------

def test_grid_and_gq22():
    assert local_structure(grid_3x3()).order == (2, 1)
    g = gq22_graph()
    assert g.n == 15 and set(g.degrees.tolist()) == {6}
    assert ArrayAnalysis(intersection_numbers(g)).spectrum.minimal.exact == -3


@pytest.mark.parametrize("D", [2, 3])
def test_isotropic_subspaces(D):
    spaces = maximal_isotropic_subspaces(D)
    assert len(spaces) == math.prod(1 + 2 ** (2 * i - 1) for i in range(1, D + 1))
    assert len(set(spaces)) == len(spaces)
    for basis in spaces[:50]:
        assert all(gf4.hermitian(u, v) == 0 for u in basis for v in basis)


@pytest.mark.parametrize("D", [1, 4, 0])
def test_dual_polar_diameter_cap(D):
    with pytest.raises(DiameterUnsupported):
        hermitian_dual_polar(D)


def test_dual_polar_count_matches_array(built):
    for name, D in (("dual-polar-a3", 2), ("dual-polar-a5", 3)):
        g = built(name)
        assert g.n == intersection_numbers(g).n == math.prod(1 + 2 ** (2 * i - 1) for i in range(1, D + 1))


@pytest.mark.parametrize("name", list(REGISTRY))
def test_builder_declared_array(built, name):
    assert str(intersection_numbers(built(name))) == REGISTRY[name].array


@pytest.mark.parametrize("name,n,k", [("golay3-coset", 729, 24), ("octad", 759, 30)])
def test_code_graph_sizes(built, name, n, k):
    g = built(name)
    assert g.n == n and set(g.degrees.tolist()) == {k}


@pytest.mark.parametrize("name", list(REGISTRY))
def test_other_q_polynomial_eigenvalues_fail_all_six(built, name):
    g = built(name)
    arr = intersection_numbers(g)
    an = ArrayAnalysis(arr)
    minimal = an.spectrum.minimal.exact
    for theta in an.e1_candidates():
        rep = theorem_conditions_graph(g, theta, arr=arr, analysis=an)
        assert rep.all_hold if theta == minimal else rep.none_hold


@pytest.mark.parametrize("name", list(REGISTRY))
def test_idempotents_complete_and_cosines_consistent(built, name):
    g = built(name)
    arr = intersection_numbers(g)
    idems = all_idempotents(g, arr)
    assert idempotent_completeness(idems)
    for E in idems:
        assert cosine_spot_check(g, E, samples=100, seed=len(name)) == []


@pytest.mark.parametrize("name", list(REGISTRY))
def test_near_polygon_iff_kite_free(built, name):
    g = built(name)
    arr = intersection_numbers(g)
    order = local_structure(g).order
    assert (order is not None and order[0] == 2) == (kite_free(g).free and arr.a[1] == 1)
    assert order == (2, arr.k // 2 - 1)


def test_gh28_is_out_of_scope():
    assert "gh2-8" in OUT_OF_SCOPE and "gh2-8" not in REGISTRY
