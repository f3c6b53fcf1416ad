import pytest

from permutomino import formulas
from permutomino.formulas import NonIntegerResult, OutOfRange, closed_form


@pytest.mark.parametrize(
    "family,start,terms",
    [
        ("convex", 1, [1, 1, 4, 18, 84, 394, 1836, 8468]),
        ("ctilde", 1, [1, 1, 3, 13, 62, 301, 1450, 6882]),
        ("square", 1, [1, 2, 6, 24, 104, 464, 2088, 9392]),
        ("decomposable", 1, [0, 1, 3, 11, 42, 163, 638, 2510]),
        ("directed", 1, [1, 1, 3, 10, 35, 126, 462]),
        ("parallelogram", 1, [1, 1, 2, 5, 14, 42, 132]),
        ("symmetric", 1, [1, 1, 2, 4, 10, 22, 54]),
        ("centered", 1, [1, 1, 4, 16, 64, 256]),
        ("bicentered", 1, [1, 1, 4, 14, 48, 164]),
        ("stacks", 1, [1, 1, 2, 4, 8, 16, 32]),
        ("convex-polyomino", 0, [1, 2, 7, 28, 120, 528, 2344, 10416]),
        ("central-binomial", 0, [1, 2, 6, 20, 70, 252]),
        ("catalan", 0, [1, 1, 2, 5, 14, 42, 132]),
        ("asym-surplus", 4, [1, 10, 69, 406, 2186, 11124]),
    ],
)
def test_published_first_terms(family, start, terms):
    assert [closed_form(family, n) for n in range(start, start + len(terms))] == terms


def test_all_families_integral_up_to_12():
    for family, fn in formulas.FAMILIES.items():
        if family in ("half-diff-printed", "intersection-printed"):
            continue  # known discrepant forms, non-integral at some sizes
        start = 0 if family in ("convex-polyomino", "central-binomial", "catalan") else 1
        if family in ("fixed-point-surplus", "asym-surplus"):
            start = 2
        for n in range(start, 13):
            assert isinstance(fn(n), int)


def test_fixed_point_surplus():
    assert [closed_form("fixed-point-surplus", n) for n in range(2, 7)] == [0, 1, 5, 22, 93]


def test_printed_forms_behave_as_documented():
    # the printed one-direction form is non-integral at size 4 ...
    with pytest.raises(NonIntegerResult):
        formulas.half_diff_printed(4)
    # ... and where integral it still disagrees with the definitional sequence
    assert formulas.half_diff_printed(3) == -2 != formulas.asym_surplus(3)
    assert formulas.intersection_printed(4) == 22
    with pytest.raises(OutOfRange):
        formulas.half_diff_printed(1)


def test_out_of_range():
    for family in ("convex", "ctilde", "square", "stacks"):
        with pytest.raises(OutOfRange):
            closed_form(family, 0)
    with pytest.raises(OutOfRange):
        formulas.catalan(-1)


def test_unknown_family():
    with pytest.raises(KeyError):
        closed_form("octagon", 3)


def test_closed_forms_satisfy_the_identities_at_scale():
    # the intertwined forms must agree far beyond the enumerable range
    from math import comb

    for n in range(2, 30):
        assert closed_form("ctilde", n) == closed_form("square", n) - closed_form("decomposable", n)
        assert closed_form("convex", n) == closed_form("ctilde", n) + closed_form("fixed-point-surplus", n)
        assert closed_form("square", n) == closed_form("convex", n) + comb(2 * (n - 2), n - 2)
        assert closed_form("asym-surplus", n) == closed_form("ctilde", n) - closed_form("square", n) // 2
