import pytest

from kfour.cohom import closed_form_dim, rel_cohom_dim, table_labels, to_csv, verify_tables, CohomRow
from kfour.homspace import fixed_points
from kfour.kgmod import CHI, Proj, Subgroup, VEven, VMinus, VPlus, build_indecomposable, trivial

from oracles import fixed_point_count


def test_examples(F2):
    assert rel_cohom_dim(trivial(F2), CHI, 2) == 1
    P = build_indecomposable(Proj(), F2)
    assert rel_cohom_dim(P, CHI, 5) == 0
    assert rel_cohom_dim(P, CHI, 0) == 1
    assert rel_cohom_dim(build_indecomposable(VMinus(3), F2), CHI, 1) == 2


def test_degree_zero_is_fixed_points(F2):
    for lab in table_labels(3, F2):
        m = build_indecomposable(lab, F2)
        assert 2 ** rel_cohom_dim(m, CHI, 0) == fixed_point_count(m.X, m.Y)


def test_closed_forms():
    assert [closed_form_dim(VPlus(0), i) for i in range(5)] == [1, 0, 1, 3, 5]
    assert closed_form_dim(VEven.of((0, 1), 2), 1) == 1
    assert all(closed_form_dim(VEven.of((1, 1, 1)), i) == 2 for i in range(6))
    assert closed_form_dim(VMinus(2), 1) == 1
    assert closed_form_dim(VMinus(2), 3) == 1
    with pytest.raises(ValueError):
        closed_form_dim(VPlus(1), -1)


def test_single_cells(F2):
    vm5 = build_indecomposable(VMinus(2), F2)
    assert rel_cohom_dim(vm5, CHI, 1) == 1
    assert rel_cohom_dim(vm5, CHI, 3) == 1


def test_verify_tables_small(F2):
    table = verify_tables(4, 4, CHI, F2)
    assert table.passed and not table.mismatches()
    assert len(table.rows) == 2 * len(table.cells)


def test_verify_tables_gf4(F4):
    table = verify_tables(3, 3, CHI, F4)
    assert table.passed


def test_other_chi(F2):
    k = trivial(F2)
    # chi = {H1}: every relative cohomology group of k is one-dimensional
    assert [rel_cohom_dim(k, {Subgroup.H1}, i) for i in range(5)] == [1] * 5
    # ordinary cohomology of the Klein four-group: dim H^i = i + 1
    assert [rel_cohom_dim(k, {Subgroup.TRIV}, i) for i in range(6)] == [1, 2, 3, 4, 5, 6]
    with pytest.raises(ValueError):
        verify_tables(2, 2, {Subgroup.H1})
    with pytest.raises(ValueError):
        rel_cohom_dim(k, frozenset(), 1)


def test_csv():
    text = to_csv([CohomRow("V-7", 1, 2, "resolution")])
    assert text == "module,degree,dim,method\nV-7,1,2,resolution\n"
