"""Presentations and Knuth-Bendix string rewriting."""

import pytest

from tiedbox.presentations import (
    PRESET_NAMES,
    Presentation,
    build_preset,
    kb_complete,
    normal_forms,
    presentation_check,
    word_equiv,
)


def test_bicyclic_style_toy_system():
    # x^2 = x, y^2 = y, yx = xy: the free commutative band on two letters
    pres = Presentation(["x", "y"], [((0, 0), (0,)), ((1, 1), (1,)),
                                     ((1, 0), (0, 1))])
    rs = kb_complete(pres)
    assert rs is not None
    nfs = normal_forms(rs)
    # normal forms: empty, x, y, xy
    assert len(nfs) == 4


def test_word_equivalence():
    pres = Presentation(["a", "b"], [((0, 1), ()), ((1, 0), ())])
    rs = kb_complete(pres)
    assert rs is not None
    assert word_equiv(rs, (0, 1, 0), (0,))
    assert not word_equiv(rs, (0,), (1,))


def test_symmetric_group_presentation_normal_forms():
    report = presentation_check(*build_preset("brauer", 2))
    assert report["status"] == "pass"


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_all_presets_at_n3(name):
    report = presentation_check(*build_preset(name, 3))
    assert report["status"] == "pass", report
    assert report["relations_hold"]
    assert report["surjective"]


EXPECTED_N3 = {
    "pn": 5,
    "brauer": 15,
    "rsn": 30,
    "brsn": 11,
    "brsn-z": 11,
    "brjn": 10,
    "brbrn": 22,
    "brbrn-abstract": 22,
    "srsn": 25,
}


@pytest.mark.parametrize("name", sorted(EXPECTED_N3))
def test_normal_form_counts_n3(name):
    report = presentation_check(*build_preset(name, 3))
    assert report["normal_forms"] == EXPECTED_N3[name]


@pytest.mark.parametrize("name,n,count", [
    ("brauer", 4, 105),
    ("brsn", 4, 47),
    ("brsn-z", 4, 47),
    ("brjn", 4, 35),
])
def test_larger_presets(name, n, count):
    report = presentation_check(*build_preset(name, n))
    assert report["status"] == "pass"
    assert report["normal_forms"] == count


def test_broken_relation_is_detected():
    pres, gens, identity, target = build_preset("brjn", 3)
    relations = list(pres.relations) + [((0,), ())]  # claim a generator is 1
    broken = Presentation(pres.generators, relations, name="broken")
    report = presentation_check(broken, gens, identity, target)
    assert report["status"] == "fail"


def test_presentation_text_format():
    pres, _, _, _ = build_preset("brjn", 3)
    text = pres.format_text()
    lines = [line for line in text.splitlines() if line.strip()]
    assert all(" = " in line for line in lines)
    assert len(lines) == len(pres.relations)
