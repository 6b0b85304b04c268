import pytest

import diophantine_forge as df

ETA_58_4 = 1681043235226619916301182624511918527834137733707408448335539840
ETA_32_12 = 950817549694171759711025515571236610412597656252821888


def test_eta_pairs():
    assert df.eta(58, 4) == ETA_58_4
    assert df.universal_pair(32, 12) == (11, ETA_32_12)
    assert df.eta(1, 1) == 6564448


def test_eta_rejects_zero():
    with pytest.raises(ValueError):
        df.eta(0, 4)


def test_parse_round_trip():
    text = df.parse_poly("3*a^2*z1 - 2*z1^3")
    assert df.parse_poly(text) == text
    terms = {tuple(sorted(e.items())): c for e, c in df.poly_terms("a + 1 - z1")}
    assert terms == {(("a", 1),): 1, (): 1, (("z1", 1),): -1}


def test_parse_error_position():
    with pytest.raises(df.ParseError, match="line 1, column 5"):
        df.parse_poly("a + b")


def test_three_squares():
    for n in range(200):
        x, y, z = df.three_squares(n)
        assert min(x, y, z) >= 0 and x * x + y * y + z * z + z == n


def test_degree_report_linear():
    rep = df.degree_report("a + 1 - z1")
    assert rep["all_match"]
    assert rep["unknowns"] == 11
    assert df.degree_q_tilde("a + 1 - z1") == df.eta(1, 1)


def test_construct_json():
    doc = df.construct("a + 1 - z1")
    assert isinstance(doc, dict) and doc


def test_m_q_eval_example():
    assert df.m_q_eval(1, [4], 1, 0, 1, 15) == 0
    assert df.m_q_eval(1, [4], 1, 0, 1, 0) == 285


def test_eval_and_unbound_error():
    point = dict(a=0, f=1, g=2, h=3, k=4, l=5, w=6, x=7, y=8, z9=1, z10=2, z11=3)
    assert df.eval_q_tilde("a + 1 - z1", point) > 0
    with pytest.raises(ValueError):
        df.eval_q_tilde("a + 1 - z1", {"a": 0})


def test_verify_bitarith():
    rep = df.verify("bitarith", max=1024)
    assert rep["pass"]
    assert {c["suite"] for c in rep["cases"]} == {"bitarith"}
    assert "construct" in df.suite_names()
