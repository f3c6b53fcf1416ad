from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permutomino import boundary, oracles, perms
from permutomino.boundary import (
    ALPHA, BETA, DELTA, GAMMA, EMPTY, LabeledMatrix,
    boundary_points, from_boundary_word, permutomino_from_matrix,
    reentrant_matrix, reflect_x, reflect_y, transpose, validate_matrix,
    vertex_permutations, word_from_cells,
)
from permutomino.errors import InvalidMatrix, NotClosed, NotConvex, NotPermutomino, SelfIntersecting


def test_single_cell():
    p = from_boundary_word("NESW")
    assert p.size == 2
    assert vertex_permutations(p) == ((1, 2), (2, 1))
    sal, ree = boundary_points(p)
    assert len(sal) == 4 and ree == []


def test_l_shape():
    p = from_boundary_word("NENESSWW")
    assert p.size == 3
    assert vertex_permutations(p) == ((1, 2, 3), (2, 3, 1))
    assert p.vertices == ((1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 1))
    sal, ree = boundary_points(p)
    assert len(sal) == 5
    assert ree == [((2, 2), ALPHA)]


def test_mirror_l_gamma_variant():
    p = permutomino_from_matrix(LabeledMatrix(1, frozenset({(2, 2, GAMMA)})), 3)
    assert vertex_permutations(p) == ((1, 2, 3), (3, 1, 2))
    assert p.reentrant == (((2, 2), GAMMA),)


def test_bad_words():
    with pytest.raises(NotClosed):
        from_boundary_word("NES")
    with pytest.raises(SelfIntersecting):
        from_boundary_word("NESWNESW")
    with pytest.raises(ValueError):
        from_boundary_word("ENWS")  # counterclockwise orientation
    with pytest.raises(ValueError):
        from_boundary_word("NXSW")
    exc = pytest.raises(NotPermutomino, from_boundary_word, "NNEESSWW").value
    assert (exc.axis, exc.coordinate, exc.count) == ("x", 2, 0)


def test_word_round_trip_on_oracle_listings():
    for n in range(2, 6):
        for p in oracles.enumerate_convex(n):
            assert from_boundary_word(p.word) == p
            assert word_from_cells(p.cells) == p.word


@given(st.permutations(list(range(1, 8))))
def test_word_round_trip_property(values):
    from permutomino.membership import is_associated, canonical_permutomino

    p = tuple(values)
    if not is_associated(p):
        return
    shape = canonical_permutomino(p)
    assert from_boundary_word(shape.word).word == shape.word
    assert word_from_cells(shape.cells) == shape.word


def test_salient_reentrant_budget():
    # salient - reentrant == 4 for every permutomino, convex or not
    for n in range(2, 6):
        for p in oracles.enumerate_column_convex(n):
            assert len(p.salient) - len(p.reentrant) == 4
    # and the convex ones use exactly n+2 / n-2 with boundary length 4(n-1)
    for n in range(2, 7):
        for p in oracles.enumerate_convex(n):
            assert len(p.word) == 4 * (n - 1)
            assert len(p.salient) == n + 2
            assert len(p.reentrant) == n - 2


def test_reentrant_matrix_examples():
    assert reentrant_matrix(from_boundary_word("NESW")) == LabeledMatrix(0, frozenset())
    L = from_boundary_word("NENESSWW")
    assert reentrant_matrix(L) == LabeledMatrix(1, frozenset({(2, 2, ALPHA)}))


def test_reentrant_matrix_requires_convex():
    # a column-convex but not convex shape
    bumpy = next(p for p in oracles.enumerate_column_convex(4) if not p.is_convex)
    with pytest.raises(NotConvex):
        reentrant_matrix(bumpy)
    with pytest.raises(ValueError):
        reentrant_matrix(EMPTY)


def test_from_matrix_examples():
    assert permutomino_from_matrix(LabeledMatrix(0, frozenset()), 2) == from_boundary_word("NESW")
    four = {
        permutomino_from_matrix(LabeledMatrix(1, frozenset({(2, 2, lab)})), 3)
        for lab in boundary.LABELS
    }
    assert len(four) == 4
    assert four == set(oracles.enumerate_convex(3))


def test_matrix_on_anti_diagonal_is_valid():
    # beta and delta points may lie on x + y = size + 1 (non-strict bound)
    beta_shape = permutomino_from_matrix(LabeledMatrix(1, frozenset({(2, 2, BETA)})), 3)
    assert beta_shape.pi1 == (1, 3, 2)
    delta_shape = permutomino_from_matrix(LabeledMatrix(1, frozenset({(2, 2, DELTA)})), 3)
    assert delta_shape.pi1 == (2, 1, 3)


def test_invalid_matrices_report_conditions():
    with pytest.raises(InvalidMatrix) as exc:
        validate_matrix(LabeledMatrix(2, frozenset({(2, 2, ALPHA), (3, 3, ALPHA)})), 6)
    assert exc.value.condition == "dimension"
    with pytest.raises(InvalidMatrix) as exc:
        validate_matrix(LabeledMatrix(2, frozenset({(2, 2, ALPHA), (3, 2, ALPHA)})), 4)
    assert exc.value.condition == "permutation-matrix"
    with pytest.raises(InvalidMatrix) as exc:
        validate_matrix(LabeledMatrix(2, frozenset({(2, 2, BETA), (3, 3, ALPHA)})), 4)
    assert exc.value.condition in ("corner-order", "diagonal")
    with pytest.raises(InvalidMatrix) as exc:
        validate_matrix(LabeledMatrix(1, frozenset({(1, 2, ALPHA)})), 3)
    assert exc.value.condition in ("range", "dimension")
    with pytest.raises(InvalidMatrix) as exc:
        validate_matrix(LabeledMatrix(1, frozenset({(2, 2, "omega")})), 3)
    assert exc.value.condition == "label"


def _all_labeled_matrices(size):
    coords = range(2, size)
    dim = size - 2
    for cols in permutations(coords):
        points = list(zip(coords, cols))
        for labels in product(boundary.LABELS, repeat=dim):
            yield LabeledMatrix(dim, frozenset(
                (x, y, lab) for (x, y), lab in zip(points, labels)
            ))


@pytest.mark.parametrize("size", [2, 3, 4, 5, 6])
def test_matrix_bijection_exhaustive(size):
    """Valid labeled matrices correspond one-to-one to convex permutominoes."""
    enumerated = set(oracles.enumerate_convex(size))
    rebuilt = set()
    for matrix in _all_labeled_matrices(size):
        try:
            validate_matrix(matrix, size)
        except InvalidMatrix:
            continue
        p = permutomino_from_matrix(matrix, size)
        assert reentrant_matrix(p) == matrix
        rebuilt.add(p)
    assert rebuilt == enumerated
    for p in enumerated:
        assert permutomino_from_matrix(reentrant_matrix(p), size) == p


@pytest.mark.parametrize("size", [3, 4, 5, 6])
def test_diagonal_bounds_on_extracted_matrices(size):
    for p in oracles.enumerate_convex(size):
        for x, y, lab in reentrant_matrix(p).points:
            if lab == ALPHA:
                assert y >= x
            elif lab == GAMMA:
                assert y <= x
            elif lab == BETA:
                assert x + y >= size + 1
            else:
                assert x + y <= size + 1


def test_classify_examples():
    L = from_boundary_word("NENESSWW")
    assert L.flags == {
        "column_convex": True, "row_convex": True, "convex": True,
        "directed": True, "parallelogram": True, "symmetric_xy": False,
    }
    cell = from_boundary_word("NESW")
    assert all(cell.flags.values())
    assert all(EMPTY.flags.values())


def test_classify_implication_chain():
    for n in range(2, 6):
        for p in oracles.enumerate_column_convex(n):
            f = p.flags
            assert not f["parallelogram"] or f["directed"]
            assert not f["directed"] or f["convex"]
            assert f["convex"] == (f["column_convex"] and f["row_convex"])


def test_symmetric_implies_involutions():
    for n in range(2, 7):
        for p in oracles.enumerate_convex(n):
            if p.flags["symmetric_xy"]:
                for q in vertex_permutations(p):
                    inverse = tuple(q.index(v) + 1 for v in range(1, n + 1))
                    assert q == inverse
    # the converse fails: an involution whose permutomino is not symmetric
    from permutomino.membership import canonical_permutomino

    p = canonical_permutomino((2, 1, 3, 4, 5))
    assert p.pi1 == (2, 1, 3, 4, 5)  # an involution
    assert not p.flags["symmetric_xy"]


def test_symmetric_involution_worked_example():
    from permutomino.membership import fiber

    shapes = fiber((3, 2, 1, 7, 6, 5, 4))
    assert len(shapes) == 1
    assert next(iter(shapes)).flags["symmetric_xy"]


def test_transpose_matches_symmetry_flag():
    for p in oracles.enumerate_convex(5):
        assert (transpose(p) == p) == p.flags["symmetric_xy"]


def test_reflections():
    for n in range(1, 6):
        for p in oracles.enumerate_convex(n):
            assert reflect_y(reflect_y(p)) == p
            assert reflect_x(reflect_x(p)) == p
            assert reflect_y(p).pi1 == perms.reversal(p.pi2)
            assert reflect_x(p).pi1 == perms.complement(p.pi2)
