import pytest

import dwmds


def test_twisted_weight_class_coefficient():
    c = dwmds.coefficient(4, [0, 1, 2, 0], 2, [10, 10, 17, 10])
    assert c["text"] == "-p^36*(p^3 - 2*p^2 + 2*p - 1)*g1^3"
    assert (c["patterns"], c["nonstrict"], c["nonzero"]) == (27, 6, 2)


def test_rank_two_local_part():
    part = dwmds.local_part(2, [0, 0])
    assert [rec["lambda"] for rec in part["coefficients"]] == [[0, 0], [0, 1], [1, 0], [1, 1]]


def test_parallel_matches_sequential():
    assert dwmds.local_part(3, [1, 0, 1], n=2) == dwmds.local_part(3, [1, 0, 1], n=2, jobs=3)


def test_counts_and_dimension():
    assert dwmds.count_patterns(4, [0, 0, 0, 0]) == {"total": 4096, "nonstrict": 2216, "strict": 1880}
    assert dwmds.weyl_dimension([1, 1, 1, 1]) == 4096
    assert len(dwmds.list_patterns(2, [1, 1])) == 9
    assert len(dwmds.positive_roots(4)) == 12


def test_explain():
    info = dwmds.explain("0,0,0,0,0,0;0,0,0,0;0,0", [0, 0, 0, 0])
    assert info["strict"] and info["total"] == "1"
    assert all(f["rule"] == "zero-component -> 1" for f in info["factors"])


def test_verify():
    report = dwmds.verify("example2")
    assert report["summary"]["failed"] == 0


def test_bad_input_raises():
    with pytest.raises(ValueError):
        dwmds.local_part(3, [0, 0])
    with pytest.raises(ValueError):
        dwmds.verify("nope")
