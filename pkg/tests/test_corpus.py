import pytest

from z2lab.corpus import (
    CATALOG,
    DRAWINGS,
    WITNESS_ENV,
    amalgam_k33_scheme,
    load_drawing,
    load_witness,
    projective_grid_scheme,
    witness_dir,
    write_corpus,
)
from z2lab.embedding import euler_genus_of_scheme
from z2lab.families import (
    complete_bipartite_3t,
    complete_graph,
    gen_kuratowski,
    gen_projective_grid,
    gen_projective_wall,
    k33,
)

FAMILY = {
    "k5-torus": complete_graph(5),
    "k33-torus": k33(),
    "k5-projective": complete_graph(5),
    "k33e-projective": k33().add_edge(0, 1),
    "k34-projective": complete_bipartite_3t(4),
    "k35-torus": complete_bipartite_3t(5),
    "k36-torus": complete_bipartite_3t(6),
    "amalg-k33-2": gen_kuratowski("h", 2),
    "amalg-k33-3": gen_kuratowski("h", 3),
}
for _t in range(3, 7):
    FAMILY[f"pgrid-{_t}"] = gen_projective_grid(_t, _t)
    FAMILY[f"pwall-{_t}"] = gen_projective_wall(_t)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_witness_graph_is_the_family_graph(name):
    g = load_witness(name).graph
    assert (g.n, g.edges) == (FAMILY[name].n, FAMILY[name].edges)


@pytest.mark.parametrize("name", DRAWINGS)
def test_drawings_ship_with_schemes(name):
    d = load_drawing(name)
    assert d.graph.edges == load_witness(name).graph.edges


def test_regenerated_corpus_is_byte_identical(tmp_path):
    written = write_corpus(tmp_path)
    shipped = witness_dir()
    assert len(written) == len(CATALOG) + len(DRAWINGS)
    for p in written:
        assert p.read_bytes() == (shipped / p.name).read_bytes(), p.name


def test_env_var_overrides_location(tmp_path, monkeypatch):
    monkeypatch.setenv(WITNESS_ENV, str(tmp_path))
    assert witness_dir() == tmp_path
    with pytest.raises(FileNotFoundError):
        load_witness("k5-torus")


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_amalgam_scheme_has_euler_genus_t(t):
    assert euler_genus_of_scheme(amalgam_k33_scheme(t)) == t


def test_rectangular_grid_scheme_is_projective():
    s = projective_grid_scheme(3, 6)
    assert euler_genus_of_scheme(s) == 1 and not s.is_orientable()
