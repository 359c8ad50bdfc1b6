import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinlab.diagram import canonical_key, diagram_stats
from skeinlab.errors import (ArcCountError, GeneratorOutOfRange, MalformedToken,
                             NotationError, OrientationError)
from skeinlab.notation import (BraidWord, parse_braid, parse_notation, parse_pd,
                               serialize_diagram)

from conftest import LEFT_TREFOIL


def test_parse_trefoil():
    d = parse_pd(LEFT_TREFOIL)
    st_ = diagram_stats(d)
    assert (d.c, st_.link_components, st_.g) == (3, 1, 1)


def test_parse_whitespace_and_loops():
    d = parse_pd(" X[1, 4,2,5] ;X[3,6,4,1];\nX[5,2,6,3] ; O*2 ")
    assert d.c == 3 and d.free_loops == 2
    assert parse_pd("O*1").free_loops == 1 and parse_pd("O*1").c == 0


@pytest.mark.parametrize("text, err", [
    ("X[1,4,2,5];X[3,6,4,2]", ArcCountError),
    ("X[1,4,2,5", MalformedToken),
    ("Y[1,2,3,4]", MalformedToken),
    ("", MalformedToken),
    ("X[0,1,1,0]", MalformedToken),
    ("X[1,2,3,4];;X[3,4,1,2]", MalformedToken),
])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_pd(text)


def test_inconsistent_orientation():
    # arc 1 would be the incoming under-strand at both of its ends
    with pytest.raises(OrientationError):
        parse_pd("X[1,2,3,4];X[1,4,3,2]")


def test_braid_trefoil():
    d = parse_braid("braid:2|1 1 1")
    assert d.c == 3 and d.writhe == 3
    assert diagram_stats(d).link_components == 1


def test_braid_errors():
    with pytest.raises(GeneratorOutOfRange):
        parse_braid("braid:2|3")
    with pytest.raises(GeneratorOutOfRange):
        BraidWord(3, (0,))
    with pytest.raises(MalformedToken):
        parse_braid("braid:2|1,1")


def test_braid_untouched_strands_become_loops():
    d = parse_braid("braid:3|1")
    assert d.c == 1 and d.free_loops == 1
    assert diagram_stats(d).link_components == 2


def test_serialize_examples():
    assert serialize_diagram(parse_notation("O*2")) == "O*2"
    d = parse_pd(LEFT_TREFOIL)
    text = serialize_diagram(d)
    assert text.count("X[") == 3
    assert canonical_key(parse_pd(text)) == canonical_key(d)
    b = parse_braid("braid:2|1 1 1")
    assert canonical_key(parse_pd(serialize_diagram(b))) == canonical_key(b)


def test_census_round_trip(census_diagrams):
    for row, d in census_diagrams:
        again = parse_pd(serialize_diagram(d))
        assert canonical_key(again) == canonical_key(d), row["name"]


def test_census_braid_writhe(census_rows):
    for row in census_rows:
        if row["notation"].startswith("braid:"):
            letters = [int(v) for v in row["notation"].split("|")[1].split()]
            d = parse_braid(row["notation"])
            assert d.writhe == sum(1 if v > 0 else -1 for v in letters)
            assert d.c == len(letters)


@settings(max_examples=300)
@given(st.text(alphabet="X[]0123456789,;O* -", max_size=40))
def test_fuzzed_strings_never_give_broken_diagrams(text):
    try:
        d = parse_pd(text)
    except NotationError:
        return
    # anything accepted must be fully valid
    assert all(len(x.arcs) == 4 for x in d.crossings)
    assert canonical_key(parse_pd(serialize_diagram(d))) == canonical_key(d)


@settings(max_examples=100)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(1, n - 1).flatmap(
        lambda g: st.sampled_from([g, -g])), min_size=1, max_size=7))))
def test_random_braids_round_trip(data):
    n, letters = data
    d = parse_braid(f"braid:{n}|" + " ".join(map(str, letters)))
    assert d.writhe == sum(1 if v > 0 else -1 for v in letters)
    assert canonical_key(parse_pd(serialize_diagram(d))) == canonical_key(d)
