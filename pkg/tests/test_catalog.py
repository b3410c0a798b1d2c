import pytest

from hsskernel.catalog import (
    LabelError, SpaceLabel, SpaceParams, catalog, check_invariants, known_dimension,
    space_from_label, space_from_params,
)


@pytest.mark.parametrize("rab, n, p", [
    ((1, 2, 0), 1, 2),
    ((2, 2, 0), 4, 4),
    ((2, 1, 0), 3, 3),
])
def test_space_from_params(rab, n, p):
    sp = space_from_params(*rab)
    assert (sp.n, sp.p) == (n, p)


@pytest.mark.parametrize("bad", [(0, 2, 0), (1, -1, 0), (2, 2, -3)])
def test_space_from_params_rejects(bad):
    with pytest.raises(ValueError):
        space_from_params(*bad)


@pytest.mark.parametrize("label, rabnp", [
    ("I(2,2)", (2, 2, 0, 4, 4)),
    ("IV(5)", (2, 3, 0, 5, 5)),
    ("EVII", (3, 8, 0, 27, 18)),
    ("EIII", (2, 6, 4, 16, 12)),
    ("II(5)", (2, 4, 2, 10, 8)),
    ("II(6)", (3, 4, 0, 15, 10)),
    ("III(3)", (3, 1, 0, 6, 4)),
    ("I(1,4)", (1, 2, 3, 4, 5)),
])
def test_space_from_label(label, rabnp):
    sp = space_from_label(label)
    assert (sp.r, sp.a, sp.b, sp.n, sp.p) == rabnp


@pytest.mark.parametrize("text, expect", [
    ("I(2,4)", SpaceLabel("I", (2, 4))),
    ("iii(3)", SpaceLabel("III", (3,))),
    (" IV( 6 ) ", SpaceLabel("IV", (6,))),
    ("II(5)", SpaceLabel("II", (5,))),
    ("evii", SpaceLabel("EVII")),
    ("EIII", SpaceLabel("EIII")),
])
def test_parse(text, expect):
    assert SpaceLabel.parse(text) == expect
    assert SpaceLabel.parse(str(expect)) == expect


@pytest.mark.parametrize("text", ["I(3,2)", "II(4)", "IV(2)", "III(0)", "V(3)", "I(2)", "EVII(1)", "I(a,b)"])
def test_parse_rejects(text):
    with pytest.raises(LabelError):
        SpaceLabel.parse(text)


def test_catalog_invariants():
    labels = list(catalog(max_l=None))
    assert len(labels) > 50
    for label in labels:
        sp = space_from_label(label)
        assert sp.n == known_dimension(label)
        assert all(check_invariants(label).values())
        assert space_from_params(sp.r, sp.a, sp.b) == sp
        assert (2 * sp.n) % sp.r == 0
        if label.family == "I" and label.args[0] == 1:
            assert sp.p == sp.n + 1


def test_catalog_filters():
    assert [str(x) for x in catalog("I", max_l=4)] == ["I(1,1)", "I(1,2)", "I(1,3)", "I(2,2)"]
    assert [str(x) for x in catalog("III")] == [f"III({m})" for m in range(1, 7)]
    with pytest.raises(LabelError):
        list(catalog("VI"))


def test_frozen():
    sp = SpaceParams(2, 2, 0)
    with pytest.raises(AttributeError):
        sp.n = 3
