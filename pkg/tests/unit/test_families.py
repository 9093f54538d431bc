from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest

from src.carving.heuristic import heuristic_carving
from src.diagram.embedding import subdivide_to_simple
from src.families.braids import bridge_sphere_decomposition, closed_braid, torus_diagram
from src.families.connect_sum import trefoil_connect_sum
from src.families.corpus import build_family, is_reduced, random_knot_corpus, standard_corpus
from src.families.lower_bounds import tw_lower_bound_report
from src.families.pretzel import pretzel_diagram
from src.families.spec import FamilyError, FamilyKind, parse_family_spec
from src.families.two_bridge import (
    continued_fraction_value,
    odd_length_fraction,
    two_bridge_diagram,
    two_bridge_word,
)

"""Generated knot families, family specs and the seeded corpus."""


@pytest.mark.parametrize(("p", "q"), [(3, 2), (5, 2), (4, 3), (5, 3)])
def test_torus_crossing_count(p: int, q: int) -> None:
    assert torus_diagram(p, q).crossing_count == p * (q - 1)


def test_torus_link_rejected() -> None:
    with pytest.raises(FamilyError, match="link"):
        torus_diagram(4, 2)


def test_split_braid_rejected() -> None:
    with pytest.raises(FamilyError, match="meets no crossing"):
        closed_braid([1, 1, 1], 3)


@pytest.mark.parametrize(("params", "crossings"), [((-2, 3, 7), 12), ((1, 1, 1), 3)])
def test_pretzel_crossings_and_width(params: tuple[int, int, int], crossings: int) -> None:
    d, sd = pretzel_diagram(*params)
    assert d.crossing_count == crossings
    assert sd.width_list() == (4, 4, 4)


def test_pretzel_link_rejected() -> None:
    # all even -> three components
    with pytest.raises(FamilyError):
        pretzel_diagram(2, 2, 2)


def test_connect_sum_crossings() -> None:
    assert trefoil_connect_sum(1).crossing_count == 3
    assert trefoil_connect_sum(4).crossing_count == 12


def test_connect_sum_width_plateau() -> None:
    widths = {
        heuristic_carving(subdivide_to_simple(trefoil_connect_sum(n))).width for n in range(2, 7)
    }
    assert len(widths) == 1


def test_two_bridge_word_and_value() -> None:
    assert two_bridge_word([3]) == [2, 2, 2]
    assert two_bridge_word([2, 2]) == [2, 2, -1, 2]
    assert continued_fraction_value([2, 2]) == Fraction(5, 2)


def test_two_bridge_trefoil() -> None:
    d = two_bridge_diagram([3])
    assert d.crossing_count == 3
    assert d.name == "two-bridge[3]"


def test_plat_bridge_sphere() -> None:
    sd = bridge_sphere_decomposition(3)
    assert sd.width_list() == (6,)


@pytest.mark.parametrize(
    ("text", "kind", "params"),
    [
        ("torus:9,7", FamilyKind.TORUS, (9, 7)),
        ("pretzel:-2,3,7", FamilyKind.PRETZEL, (-2, 3, 7)),
        ("SUM:5", FamilyKind.SUM, (5,)),
        ("two-bridge:2,1,2", FamilyKind.TWO_BRIDGE, (2, 1, 2)),
        ("plat:2", FamilyKind.PLAT, (2,)),
    ],
)
def test_parse_family_spec(text: str, kind: FamilyKind, params: tuple[int, ...]) -> None:
    fs = parse_family_spec(text)
    assert (fs.kind, fs.params) == (kind, params)


@pytest.mark.parametrize(
    ("text", "fragment"),
    [
        ("torus", "family:params"),
        ("knot:3", "unknown family"),
        ("torus:6,4", "gives a link"),
        ("torus:3,x", "non-integer"),
        ("pretzel:1,0,1", "nonzero"),
        ("sum:0", ">= 1"),
    ],
)
def test_bad_family_spec(text: str, fragment: str) -> None:
    with pytest.raises(FamilyError, match=fragment):
        parse_family_spec(text)


def test_build_family_templates() -> None:
    assert build_family(parse_family_spec("pretzel:-2,3,7")).template is not None
    assert build_family(parse_family_spec("plat:2")).template is not None
    assert build_family(parse_family_spec("torus:3,2")).template is None


@pytest.mark.parametrize(
    ("p", "q", "k"), [(3, 2, 0), (5, 4, 0), (9, 7, 1), (13, 11, 2), (101, 100, 24)]
)
def test_torus_lower_bound(p: int, q: int, k: int) -> None:
    report = tw_lower_bound_report(p, q)
    assert report.bridge_number == min(p, q)
    assert report.k_min == k
    assert f"T({p},{q})" in report.to_text()


def test_random_corpus_is_seeded() -> None:
    a = [e.name for e in random_knot_corpus(5, seed=7)]
    b = [e.name for e in random_knot_corpus(5, seed=7)]
    assert a == b
    assert len(a) == 5


def test_standard_corpus_entries_are_reduced() -> None:
    entries = standard_corpus(seed=0, random_count=3)
    names = [e.name for e in entries]
    assert names[:2] == ["trefoil", "figure-eight"]
    assert "pretzel:-2,3,7" in names
    for e in entries:
        if e.template is None:
            assert is_reduced(e.diagram)


@pytest.mark.parametrize(
    ("cf", "odd"),
    [
        ([3], [3]),
        ([2, 2], [2, 1, 1]),
        ([2, -2], [2, -1, -1]),
        ([2, 1], [3]),
        ([3, -1], [2]),
        ([1, 2, 3, 2], [1, 2, 3, 1, 1]),
    ],
)
def test_odd_length_fraction_keeps_value(cf: list[int], odd: list[int]) -> None:
    assert odd_length_fraction(cf) == odd
    assert continued_fraction_value(odd) == continued_fraction_value(cf)


def test_odd_length_fraction_degenerate() -> None:
    with pytest.raises(FamilyError, match="degenerate"):
        odd_length_fraction([1, -1])


def _fractions_up_to_three() -> list[tuple[int, ...]]:
    out = []
    for n in (1, 2, 3):
        for cf in product((1, 2, 3, -2), repeat=n):
            try:
                value = continued_fraction_value(cf)
                odd_length_fraction(cf)
            except FamilyError:
                continue
            if value != 0:
                out.append(cf)
    return out


@pytest.mark.parametrize("cf", _fractions_up_to_three())
def test_two_bridge_knot_iff_odd_numerator(cf: tuple[int, ...]) -> None:
    # p/q は p が奇数のとき結び目、偶数のとき 2 成分絡み目
    knot = continued_fraction_value(cf).numerator % 2 == 1
    if knot:
        expected = sum(abs(a) for a in odd_length_fraction(cf))
        assert two_bridge_diagram(cf).crossing_count == expected
    else:
        with pytest.raises(FamilyError, match="component"):
            two_bridge_diagram(cf)


def test_figure_eight_from_even_length_fraction() -> None:
    d = two_bridge_diagram([2, 2])
    assert d.crossing_count == 4
    assert d.name == "two-bridge[2,2]"
