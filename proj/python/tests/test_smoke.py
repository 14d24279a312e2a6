import pytest

import fockcrystal as fc


def test_partitions():
    assert fc.conjugate((4, 3, 1)) == (3, 2, 2, 1)
    assert fc.regular_partitions(5, 2) == [(5,), (4, 1), (3, 2)]
    assert fc.n_core((7, 5, 4, 4), 3) == ((4, 2, 1, 1), 4)
    assert fc.inv_phi(5) == [1, 1, 2, 3, 5, 7]


def test_fock_and_crystal():
    assert fc.f(2, 1, (1,)) == {(2,): "1", (1, 1): "q"}
    assert fc.signature((16, 13, 11, 10, 9, 8, 7, 5, 2), 3, 0)[1] == "A1A3R16"
    assert fc.e_tilde((), 3, 0) is None
    nodes, edges = fc.crystal_graph(2, 5)
    assert len(nodes) == 10
    assert fc.relation_check(2, 3)[0]


def test_canonical():
    d = fc.canonical_basis(2, 5)
    assert d["cols"] == [(5,), (4, 1), (3, 2)]
    row = d["rows"].index((3, 1, 1))
    assert d["entries"][row] == ["q", "0", "q"]
    h = fc.decomposition_matrix(2, 5)
    assert h["entries"][h["rows"].index((2, 2, 1))] == [0, 0, 1]
    assert fc.js_canonical((3, 2), 3)


def test_paths_and_series():
    gamma = [0, 0, 0, 1, 1, 0, 1, 1, 1, 0]
    assert fc.to_partition(2, gamma) == (10, 8, 7, 4, 2, 1)
    assert fc.to_path((10, 8, 7, 4, 2, 1), 2) == gamma
    assert fc.fow_classify((13, 13, 10, 6, 5, 4, 1, 1), 3) == 2
    assert fc.fow_classify((), 3) == "all"
    assert fc.js_set(3, (1,), 2) == [(7,), (4, 3)]
    for src in ("paths", "crystal", "fermionic"):
        assert fc.branching_series(3, 0, 1, 2, 3, src) == [0, 1, 2, 2]
    assert fc.chi_js(3, (), 2) == [1, 2, 5]
    assert fc.chi_js_direct(3, (1, 1), 2) == [1, 1, 2]
    assert fc.abf_sum(4, 1, 1, 2, 6) == fc.abf_closed(4, 1, 1, 2, 6) == "1 + q^2 + q^3 + q^4"


def test_specht():
    assert fc.standard_tableaux((3, 2)) == ["135/24", "125/34", "134/25", "124/35", "123/45"]
    assert fc.rep_matrix((3, 2), 1)[0] == ["-1", "-v^2", "0", "0", "v^4"]
    assert fc.straighten("213/45") == {"123/45": "v", "134/25": "-v^3", "135/24": "v^4"}
    coeffs = [c for _, c in fc.garnir("1,2,3,10,4,12/6,8,5/9,11,7/13", 2, 2)]
    assert coeffs == ["1", "-v", "v^2", "v^2", "-v^3", "v^4"]
    assert fc.hecke_relation_check((2, 2))[0]
    assert fc.jm_annihilation((3, 1))


def test_errors():
    with pytest.raises(fc.InvalidArgument):
        fc.to_path((1, 1), 2)
    with pytest.raises(ValueError):
        fc.parse_partition("1,2")
    with pytest.raises(fc.ResourceLimit):
        fc.crystal_graph(2, 60, False)


def test_cli():
    code, out, _ = fc.cli("js-list", "--n", 3, "--core", 1, "--weight", 2)
    assert code == 0
    assert out == "7\n4,3\n"
    assert fc.cli("decomp-matrix", "--n", 1)[0] == 2
