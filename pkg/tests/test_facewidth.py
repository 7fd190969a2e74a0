import pytest

from z2lab.corpus import CATALOG, load_witness, projective_grid_scheme, projective_wall_scheme
from z2lab.embedding import SchemeError, delete_face_vertices, euler_genus_of_scheme, trace_faces
from z2lab.facewidth import facewidth_projective, is_one_sided_free, radial_graph, shortest_odd_closed_walk

from oracles import shortest_one_sided_radial_cycle

PROJECTIVE = sorted(n for n, w in CATALOG.items() if w.euler_genus == 1 and not w.orientable)


def test_grid_and_wall_examples():
    assert facewidth_projective(load_witness("pgrid-5")) == 5
    assert facewidth_projective(load_witness("pwall-5")) == 5


@pytest.mark.parametrize("t", range(3, 7))
def test_facewidth_of_grids_and_walls(t):
    assert facewidth_projective(projective_grid_scheme(t, t)) == t
    assert facewidth_projective(projective_wall_scheme(t)) == t


def test_rectangular_grid_facewidth_is_the_short_side():
    assert facewidth_projective(projective_grid_scheme(3, 5)) == 3
    assert facewidth_projective(projective_grid_scheme(5, 3)) == 3


@pytest.mark.parametrize("name", ["k5-projective", "k33e-projective", "k34-projective", "pgrid-3", "pwall-3"])
def test_facewidth_matches_brute_force(name):
    s = load_witness(name)
    fw = facewidth_projective(s)
    brute = shortest_one_sided_radial_cycle(radial_graph(s))
    assert brute is not None and fw == brute // 2


def test_projective_k5_facewidth_bracket():
    fw = facewidth_projective(load_witness("k5-projective"))
    assert 1 <= fw <= 3


def test_orientable_schemes_are_rejected():
    with pytest.raises(SchemeError):
        facewidth_projective(load_witness("k5-torus"))
    assert is_one_sided_free(load_witness("k5-torus"))
    assert not is_one_sided_free(load_witness("k5-projective"))


@pytest.mark.parametrize("name", PROJECTIVE)
def test_face_deletion_loses_at_most_two(name):
    s = load_witness(name)
    fw = facewidth_projective(s)
    for k in range(len(trace_faces(s))):
        s2, _ = delete_face_vertices(s, k)
        length = shortest_odd_closed_walk(radial_graph(s2))
        kept = 0 if length is None else length // 2
        assert kept >= fw - 2


@pytest.mark.parametrize("t", range(3, 7))
def test_face_deletion_keeps_a_projective_embedding(t):
    s = projective_grid_scheme(t, t)
    for k in range(len(trace_faces(s))):
        s2, _ = delete_face_vertices(s, k)
        if s2.graph.is_connected():
            assert euler_genus_of_scheme(s2) <= 1
