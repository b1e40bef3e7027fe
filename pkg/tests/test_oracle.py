import pytest

from bsassign.assignmod import BasisMatrix, assignment_basis, cohomology_basis
from bsassign.bsgraph import build_graph
from bsassign.oracle import assignment_slice_dim, completeness_table, module_slice_dim
from bsassign.rootsys import RootSystem

A2 = RootSystem.parse("A2")


def test_point_and_single_letter():
    assert [r.brute_force for r in completeness_table(A2, (), 3)] == [1, 3, 6, 10]
    rows = completeness_table(A2, (1,), 2)
    assert all(r.agrees for r in rows)


def test_known_dimensions_212():
    rows = completeness_table(A2, (2, 1, 2), 4)
    assert [r.brute_force for r in rows] == [1, 6, 19, 40, 69]
    assert all(r.agrees for r in rows)


def test_oracle_detects_a_missing_generator():
    # H spans a proper submodule for a non-GKM word, so some degree must disagree
    H = cohomology_basis(A2, (2, 1, 2))
    g = build_graph(A2, (2, 1, 2))
    dims = [(assignment_slice_dim(g, k), module_slice_dim(H, k)) for k in range(4)]
    assert any(a != b for a, b in dims)


def test_oracle_detects_a_dropped_column():
    A = assignment_basis(A2, (2, 1))
    cut = BasisMatrix(A.kind, A.graph, [row[:3] + [row[0] * 0] for row in A.matrix])
    assert module_slice_dim(cut, 2) < assignment_slice_dim(A.graph, 2)


@pytest.mark.parametrize("name, word", [("G2", (1, 2, 1)), ("A3", (1, 2, 1)), ("C2", (2, 1, 2))])
def test_other_types(name, word):
    assert all(r.agrees for r in completeness_table(RootSystem.parse(name), word, 3))
