import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mubar.diagram import close_braid, linking_matrix, parse_braid, unlink
from mubar.errors import InputError
from mubar.freegroup import IDENTITY
from mubar.milnor import (
    MuEntry,
    classicality_obstruction,
    linking_consistency,
    mu_from_longitudes,
    mu_table,
    parse_longitudes,
    records_from_json,
    records_to_json,
    reduce_mod_D,
)
from oracles import artin_longitudes, naive_psi, random_braid_text, random_pure_braid_text

BORROMEAN_MOD = "w_a = b^-1 c^-1 b c\nw_b = c a c^-1 a^-1\nw_c = b^2 a^-1 b^-1 a\n"
SECTION_64 = "w_a = b^-1 a b a^-1 b a b a^-1 b^-2\nw_b = a b a^-1\n"


def test_longitude_goldens():
    t = mu_from_longitudes(parse_longitudes("w_a = 1\nw_b = a^-1"), 2)
    assert (t.mubar("b", "a"), t.mubar("a", "b")) == (0, -1)
    t = mu_from_longitudes(parse_longitudes(BORROMEAN_MOD), 3)
    assert t.mu("bc", "a") == 1 and t.mu("cb", "a") == -1
    # direct expansion of c a c^-1 a^-1 gives +x_c x_a - x_a x_c
    assert t.mu("ca", "b") == 1 and t.mu("ac", "b") == -1
    ref = naive_psi(parse_longitudes(BORROMEAN_MOD)[1].letters, lambda g: g.component, 3)
    assert ref[(2, 0)] == 1 and ref[(0, 2)] == -1
    assert t.mu("ab", "c") == 1 and t.mu("ba", "c") == -1
    assert t.mu("b", "c") == 1
    # Delta(a,b,w_c) = gcd(mu(a,w_c), mu(b,w_c)) = 1 collapses mu-bar there
    assert t.delta("ab", "c") == 1 and t.mubar("ab", "c") == 0
    assert t.entry("ab", "c").mubar_agrees(1)


def test_section_64_reduction():
    t = mu_from_longitudes(parse_longitudes(SECTION_64), 2)
    assert t.mu("b", "b") == 1 and t.mubar("b", "b") == 0
    assert reduce_mod_D(t, "a") == 1
    assert classicality_obstruction(t) == [(1, 1)]


def test_all_identity_longitudes():
    t = mu_from_longitudes([IDENTITY, IDENTITY, IDENTITY])
    assert t.cap == 4
    assert all(e.mu == 0 and e.mubar == 0 for e in t.rows())


def test_longitude_file_errors():
    with pytest.raises(InputError):
        parse_longitudes("w_a = b\nw_c = a\n")
    with pytest.raises(InputError):
        parse_longitudes("w_a = b\nw_a = b\n")
    with pytest.raises(InputError):
        parse_longitudes("w_a = b\nw_b = c\n")
    with pytest.raises(InputError):
        parse_longitudes("v_a = b\n")
    with pytest.raises(InputError):
        parse_longitudes("w_a = b2\nw_b = a\n")
    with pytest.raises(InputError):
        parse_longitudes("w_a = b %\nw_b = a\n")
    assert parse_longitudes("# comment\n\nw_a = 1  # trailing\n") == [IDENTITY]
    with pytest.raises(InputError):
        mu_from_longitudes({"a": IDENTITY, "c": IDENTITY})
    with pytest.raises(ValueError):
        mu_from_longitudes([IDENTITY], 1)
    with pytest.raises(ValueError):
        mu_table(unlink(1), 3, delta_mode="nope")


def test_mapping_input_and_render():
    t = mu_from_longitudes({"b": parse_longitudes("w_a = a")[0], "a": IDENTITY}, 2)
    assert t.mu("a", "b") == 1
    text = t.render()
    assert text.splitlines()[0].split() == ["J", "i", "mu", "delta", "mubar", "flags"]
    assert "mubar" in t.render(mubar_only=True)


def test_records_roundtrip():
    t = mu_from_longitudes(parse_longitudes(BORROMEAN_MOD), 3)
    recs = records_from_json(records_to_json(t))
    assert recs == json.loads(json.dumps(t.to_records()))
    assert set(recs[0]) == {"target", "sequence", "mu", "delta", "mubar", "flags"}
    for r, e in zip(recs, t.rows()):
        assert MuEntry(ord(r["target"]) - 97, tuple(ord(x) - 97 for x in r["sequence"]),
                       r["mu"], r["delta"], r["mubar"]) == e


def test_flags():
    e = MuEntry(0, (0, 1, 1), 3, 0, 0)
    assert e.flags == ["repeated", "target", "basepoint"]
    assert MuEntry(0, (1,), 3, 0, 3).flags == []


def _check_table_invariants(t):
    for e in t.rows():
        if e.contains_target:
            assert e.mubar == 0
        elif e.delta:
            assert 0 <= e.mubar < e.delta and (e.mu - e.mubar) % e.delta == 0
        else:
            assert e.mubar == e.mu
        assert e.delta >= 0


@given(st.integers(0, 10_000), st.integers(2, 4), st.sampled_from(["subsequence", "cyclic"]))
def test_table_invariants_random(seed, strands, mode):
    rng = random.Random(seed)
    d = close_braid(parse_braid(random_braid_text(rng, strands, 10), strands))
    t = mu_table(d, 3, delta_mode=mode)
    _check_table_invariants(t)
    assert all(c.passed for c in linking_consistency(d, t))
    m = linking_matrix(d)
    # the self coefficient is the signed count of self under-crossings
    for i in range(d.n_components):
        assert t.mu((i,), i) == m[i][i]


@given(st.integers(0, 10_000), st.integers(2, 4))
def test_pure_braids_against_artin_words(seed, strands):
    rng = random.Random(seed)
    text = random_pure_braid_text(rng, strands, 10)
    d = close_braid(parse_braid(text, strands))
    assert d.n_components == strands
    t = mu_table(d, 2)
    longs = artin_longitudes(text, strands)
    for i in range(strands):
        ref = naive_psi(longs[i], lambda g: g, 2)
        for j in range(strands):
            assert t.mu((j,), i) == ref.get((j,), 0)
    assert classicality_obstruction(t) == []


def test_cyclic_delta_mode():
    t = mu_from_longitudes(parse_longitudes(BORROMEAN_MOD), 3, delta_mode="cyclic")
    # cyclic rotations of (a,b,c) bring in mu(b,w_c) = 1
    assert t.delta("bc", "a") == 1
    assert t.delta_mode == "cyclic"
    _check_table_invariants(t)


def test_reduce_mod_D_kills_target_and_divisible_terms():
    t = mu_from_longitudes(parse_longitudes(BORROMEAN_MOD), 3)
    red = reduce_mod_D(t, "c")
    assert red.terms == {(): 1, (1,): 1}
    red_a = reduce_mod_D(t, "a")
    assert red_a.terms == {(): 1, (1, 2): 1, (2, 1): -1}


def test_linking_consistency_strings():
    d = close_braid(parse_braid("s1 s1 s1 v1", 2))
    checks = linking_consistency(d, mu_table(d))
    assert [str(c) for c in checks] == [
        "PASS mu(b,w_a)=1 link(b,a)=1",
        "PASS mu(a,w_b)=2 link(a,b)=2",
    ]
    assert all(c.passed for c in linking_consistency(unlink(2), mu_table(unlink(2))))
