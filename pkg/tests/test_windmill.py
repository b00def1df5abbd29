import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from windmills.errors import MalformedLabelling
from windmills.windmill import (
    GRACEFUL,
    Labelling,
    NEAR_GRACEFUL,
    WindmillSpec,
    edge_multiset,
    expected_mode,
    from_json,
    to_dot,
    to_json,
    verify,
)

FIGURE_STYLE = Labelling(
    spec=WindmillSpec.of((3, 4), (4, 3)),
    vanes=(
        (0, 18, 20),
        (0, 23, 24),
        (0, 17, 21),
        (0, 22, 19),
        (0, 15, 1, 7),
        (0, 11, 2, 12),
        (0, 16, 3, 8),
    ),
    mode=GRACEFUL,
)


def test_spec_invariants():
    spec = WindmillSpec.of((4, 3), (3, 4))
    assert spec.vanes == ((3, 4), (4, 3))  # sorted by cycle length
    assert spec.edge_count == 24
    assert spec.count_of(5) == 0
    with pytest.raises(MalformedLabelling):
        WindmillSpec.of((2, 1))
    with pytest.raises(MalformedLabelling):
        WindmillSpec(((3, 1), (3, 2)))  # duplicate length


def test_spec_parse():
    assert WindmillSpec.parse("c3=4,c4=3").vanes == ((3, 4), (4, 3))
    assert WindmillSpec.parse("c3=1").edge_count == 3
    with pytest.raises(MalformedLabelling):
        WindmillSpec.parse("c7=1")
    with pytest.raises(MalformedLabelling):
        WindmillSpec.parse("nonsense")


def test_verify_figure_labelling():
    report = verify(FIGURE_STYLE)
    assert report.ok and report.m == 24


def test_verify_single_triangle():
    lab = Labelling(WindmillSpec.of((3, 1)), ((0, 1, 3),), GRACEFUL)
    report = verify(lab)
    assert report.ok
    assert edge_multiset(lab) == {1: 1, 2: 1, 3: 1}


def test_verify_near_five_cycles():
    lab = Labelling(
        WindmillSpec.of((5, 2)), ((0, 11, 2, 9, 1), (0, 6, 3, 7, 5)), NEAR_GRACEFUL
    )
    report = verify(lab)
    assert report.ok
    assert sorted(edge_multiset(lab)) == list(range(1, 10)) + [11]


def test_verify_mixed_triangle_pentagon():
    lab = Labelling(
        WindmillSpec.of((3, 1), (5, 1)), ((0, 5, 7), (0, 8, 4, 3, 6)), GRACEFUL
    )
    assert verify(lab).ok


def test_verify_reports_failures():
    bad = Labelling(WindmillSpec.of((3, 2)), ((0, 1, 3), (0, 1, 3)), GRACEFUL)
    report = verify(bad)
    assert not report.ok
    assert report.duplicate_vertices == (1, 3)
    assert report.missing_edges == (4, 5, 6)
    assert report.extra_edges == (1, 2, 3)


def test_verify_out_of_range_vertices():
    report = verify(Labelling(WindmillSpec.of((3, 1)), ((0, 9, 3),), GRACEFUL))
    assert not report.ok
    assert 9 in report.out_of_range_vertices


def test_verify_permissive_near_variant():
    # edges [1, m] with a vertex at m+1: rejected strictly, allowed permissively
    lab = Labelling(WindmillSpec.of((4, 1)), ((0, 4, 5, 2),), NEAR_GRACEFUL)
    assert not verify(lab).ok
    permissive = verify(lab, permissive_near=True)
    assert permissive.ok and "permissive" in permissive.note


def test_edge_multiset_examples():
    lab4 = Labelling(WindmillSpec.of((4, 1)), ((0, 4, 1, 2),), GRACEFUL)
    assert sorted(edge_multiset(lab4).elements()) == [1, 2, 3, 4]
    hexv = (0, 6, 1, 4, 3, 7)
    lab6 = Labelling(WindmillSpec.of((6, 1)), (hexv,), NEAR_GRACEFUL)
    assert sorted(edge_multiset(lab6).elements()) == [1, 3, 4, 5, 6, 7]
    assert sum(edge_multiset(FIGURE_STYLE).values()) == 24


@pytest.mark.parametrize(
    "groups,mode",
    [
        ((( 3, 4), (4, 3)), GRACEFUL),
        (((3, 2),), NEAR_GRACEFUL),
        (((5, 3),), GRACEFUL),
        (((3, 1), (6, 1)), NEAR_GRACEFUL),
        (((3, 9), (5, 4)), GRACEFUL),
    ],
)
def test_expected_mode(groups, mode):
    assert expected_mode(WindmillSpec.of(*groups)) == mode


def test_labelling_structural_checks():
    spec = WindmillSpec.of((3, 1))
    with pytest.raises(MalformedLabelling):
        Labelling(spec, ((1, 2, 3),), GRACEFUL)  # must start at 0
    with pytest.raises(MalformedLabelling):
        Labelling(spec, ((0, 1, 2, 3),), GRACEFUL)  # wrong length
    with pytest.raises(MalformedLabelling):
        Labelling(spec, ((0, 1, 3),), "sort-of-graceful")


def test_verifier_total_on_weird_labels():
    # verification reports rather than crashes on wild but well-shaped input
    lab = Labelling(WindmillSpec.of((3, 1)), ((0, 1000, 3),), GRACEFUL)
    report = verify(lab)
    assert not report.ok


def _scramble(lab: Labelling, rng: random.Random) -> Labelling:
    vanes = list(lab.vanes)
    rng.shuffle(vanes)
    flipped = []
    for vane in vanes:
        if rng.random() < 0.5:
            flipped.append((0,) + tuple(reversed(vane[1:])))
        else:
            flipped.append(vane)
    return Labelling(lab.spec, tuple(flipped), lab.mode)


def test_verdict_invariant_under_vane_symmetries():
    rng = random.Random(7)
    for _ in range(25):
        assert verify(_scramble(FIGURE_STYLE, rng)).ok


@settings(max_examples=25, deadline=None)
@given(st.randoms(use_true_random=False))
def test_verdict_invariant_property(rnd):
    assert verify(_scramble(FIGURE_STYLE, rnd)).ok


def test_json_roundtrip():
    text = to_json(FIGURE_STYLE)
    again = from_json(text)
    assert again == FIGURE_STYLE
    obj = json.loads(text)
    assert obj["spec"] == [{"cycle": 3, "count": 4}, {"cycle": 4, "count": 3}]
    assert obj["mode"] == "graceful"
    with pytest.raises(MalformedLabelling):
        from_json("{not json")
    with pytest.raises(MalformedLabelling):
        from_json('{"spec": [], "mode": "graceful"}')


def test_dot_export():
    dot = to_dot(FIGURE_STYLE)
    assert dot.startswith("graph windmill {")
    assert dot.count('v0 [label="0"];') == 1  # central vertex emitted once
    assert 'v0 -- v18 [label="18"];' in dot
    assert 'v18 -- v20 [label="2"];' in dot
    # one node line per distinct label, one edge line per edge
    assert dot.count(" -- ") == 24
