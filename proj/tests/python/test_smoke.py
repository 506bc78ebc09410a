import pytest

import nesto

AS3 = {(1, 1, 1, 1): 24, (2, 1, 1): 6, (1, 2, 1): 4}


def test_routes_agree_on_path():
    g = nesto.Graph.family("path", 4)
    for route in ("splitting", "trees", "colorings", "recurrence"):
        assert nesto.F(g, route).terms == AS3


def test_fundamental_and_antipode():
    b = nesto.BuildingSet.from_graph(nesto.Graph.family("path", 4))
    assert nesto.F_fundamental(b).terms == {(1, 1, 1, 1): 14, (2, 1, 1): 6, (1, 2, 1): 4}
    assert nesto.F_star(b).terms == {(4,): 14, (3, 1): 6, (2, 2): 4}
    assert nesto.QSym.parse("L[1,1,1,1]").antipode() == nesto.QSym({(4,): 1}, "L")


def test_qsym_product_matches_power_series():
    x = nesto.QSym({(1,): 1})
    assert (x * x).terms == {(1, 1): 2, (2,): 1}
    f = nesto.QSym({(2, 1): 3, (1,): -1})
    assert nesto.QSym.parse(str(f)) == f
    assert f.to_L().to_M() == f


def test_buildset_operations():
    b = nesto.BuildingSet(4, [[1, 2], [2, 3], [3, 4], [1, 2, 3], [2, 3, 4], [1, 2, 3, 4]])
    assert str(b) == "{1,2,3,4,12,23,34,123,234,1234}"
    l3 = nesto.BuildingSet.from_graph(nesto.Graph.family("path", 3))
    assert b.restriction([1, 2, 3]) == l3
    assert b.contraction([2]) == l3
    assert nesto.face_vector(b) == [14, 21, 9, 1]
    assert len(nesto.maximal_nested_sets(l3)) == 5


def test_invalid_buildset_raises():
    with pytest.raises(nesto.InvalidInput, match="12 and 23 intersect"):
        nesto.BuildingSet(3, [[1, 2], [2, 3]])
    with pytest.raises(ValueError):
        nesto.BuildingSet(2, [[3]])


def test_capacity_error():
    with pytest.raises(nesto.CapacityError):
        nesto.F(nesto.Graph.family("complete", 12))


def test_chromatic_and_collisions():
    assert nesto.chromatic_symmetric(nesto.Graph.family("complete", 2)) == {(1, 1): 2}
    f5 = nesto.collisions(5, "F")
    assert f5["classes"] == 34 and f5["distinct_values"] == 34
    x5 = nesto.collisions(5, "X")
    assert x5["collisions"] and x5["x_groups_split_by_F"] == x5["collisions"]


def test_principal_specialization():
    f = nesto.F(nesto.Graph.family("path", 4))
    assert f.ps(-1) == 14
    assert f.ps(3) == 10


def test_families_and_trees():
    assert nesto.family_vertex_counts(4) == [24, 14, 20, 16]
    assert nesto.vertex_count(nesto.family_F("as", 5), 5) == 42
    k = nesto.tree_kernel(5)
    assert len(k["shapes"]) == 9 and k["rank"] == 8 and len(k["kernel"]) == 1


def test_cli_exit_codes():
    code, out, _ = nesto.cli(["polytope", "--family", "as", "--n", "4", "--vertices"])
    assert (code, out) == (0, "14\n")
    assert nesto.cli(["invariant"])[0] == 2
    assert nesto.cli(["invariant", "--graph", "complete:12"])[0] == 3
    assert nesto.cli(["verify", "--criterion", "2"])[0] == 1


def test_criterion_reports():
    r = nesto.run_criterion(1)
    assert r["pass"] and r["id"] == 1
