import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mubar.diagram import parse_braid
from mubar.errors import InputError
from mubar.freegroup import IDENTITY, GroupWord
from mubar.magnus import TruncatedSeries, psi_word
from mubar.skein import (
    MarkedBraid,
    Strand,
    check_skein,
    family_of,
    self_crossing_parity,
    strand_longitudes,
    variants,
)
from oracles import artin_longitudes, random_braid_text


def _mu1(word, k, strands):
    m = {Strand(s): TruncatedSeries.one_plus_variable(s, 2, strands) for s in range(strands)}
    return psi_word(word, m).coefficient((k,))


def test_virtual_hopf_mark():
    mb = MarkedBraid(parse_braid("v1 S1", 2), 1)
    v = variants(mb)
    assert mb.case == 2 and v.over == 0 and v.under == 1
    assert v.minus == GroupWord.gen(Strand(0), -1)
    assert (_mu1(v.plus, 0, 2), _mu1(v.minus, 0, 2)) == (0, -1)
    report = check_skein(mb, 2)
    assert [str(c) for c in report.checks] == ["PASS lhs=1 rhs=1 family=base J=a"]


def test_three_twist_marks():
    b = parse_braid("s1 s1 s1 v1", 2)
    v0 = variants(MarkedBraid(b, 0))
    assert (_mu1(v0.plus, 0, 2), _mu1(v0.minus, 0, 2)) == (2, 1)
    v1 = variants(MarkedBraid(b, 1))
    assert v1.under == 0 and (_mu1(v1.plus, 1, 2), _mu1(v1.minus, 1, 2)) == (1, 0)
    assert check_skein(MarkedBraid(b, 1), 3).passed


def test_single_crossing_has_empty_pieces():
    v = variants(MarkedBraid(parse_braid("s1", 2), 0))
    assert v.zero == IDENTITY and v.infinity == IDENTITY


def test_mark_errors():
    b = parse_braid("s1 v1", 2)
    with pytest.raises(InputError):
        MarkedBraid(b, 1)
    with pytest.raises(InputError):
        MarkedBraid(b, 5)
    with pytest.raises(ValueError):
        check_skein(MarkedBraid(b, 0), 1)


def test_family_names():
    assert family_of((2,), 2) == "base"
    assert family_of((0, 2), 2) == "terminal"
    assert family_of((2, 0), 2) == "leading"
    assert family_of((0, 2, 1), 2) == "interior"


@given(st.integers(0, 10_000), st.integers(2, 4))
def test_strand_longitudes_match_oracle(seed, strands):
    rng = random.Random(seed)
    text = random_braid_text(rng, strands, 12)
    mine = strand_longitudes(parse_braid(text, strands))
    ref = artin_longitudes(text, strands)
    for w, r in zip(mine, ref):
        assert w == GroupWord(tuple((Strand(g), e) for g, e in r))


@given(st.integers(0, 10_000), st.sampled_from([3, 4]))
def test_random_marks_all_families(seed, cap):
    rng = random.Random(seed)
    text = random_braid_text(rng, 3, 9) + " s1"
    b = parse_braid(text, 3)
    marks = [i for i, x in enumerate(b.letters) if x.classical]
    report = check_skein(MarkedBraid(b, rng.choice(marks)), cap)
    assert report.passed, report.render()
    fams = {c.family for c in report.checks}
    assert {"base", "terminal", "leading"} <= fams
    if cap == 4:
        assert "interior" in fams


@given(st.integers(0, 10_000))
def test_self_crossing_parity_random(seed):
    rng = random.Random(seed)
    b = parse_braid(random_braid_text(rng, 3, 9) + " S2", 3)
    for m in (i for i, x in enumerate(b.letters) if x.classical):
        p = self_crossing_parity(MarkedBraid(b, m))
        assert p is None or p.passed


def test_parity_none_for_mixed_crossing():
    assert self_crossing_parity(MarkedBraid(parse_braid("s1 s1", 2), 0)) is None
    p = self_crossing_parity(MarkedBraid(parse_braid("s1", 2), 0))
    assert p.component == 0 and str(p).startswith("PASS")


def test_report_render():
    text = check_skein(MarkedBraid(parse_braid("s1 s2 S1", 3), 2), 3).render()
    assert text.startswith("# mark=2 case=2")
