import json

import pytest

import lieconf


def test_roots():
    g2 = lieconf.dump_roots("G2")
    assert g2["label"] == "G2"
    assert len(g2["positives"]) == 6
    assert len(lieconf.dump_constants("A2")) == 12


def test_bad_system():
    with pytest.raises(lieconf.LieConfError):
        lieconf.dump_roots("D2")
    with pytest.raises(ValueError):
        lieconf.dump_roots("Q3")


def test_classify_rank2():
    r = lieconf.classify(max_rank=2)
    assert r["comparison"]["match"] is True
    assert len(r["survivors"]) == 8
    assert lieconf.classify(max_rank=2, threads=2) == r


def test_solve():
    cfg = {"system": "B3", "case": "Parabolic", "delta": ["-2", "0", "0"], "alpha": [1, -1, 0]}
    s = lieconf.solve(cfg)
    assert s["dimension"] == 1
    assert s["feasible"] is True
    assert s["unique_class"] is True
    assert lieconf.solve(json.dumps(cfg)) == s
    with pytest.raises(lieconf.LieConfError):
        lieconf.solve("{not json")


def test_examples():
    assert lieconf.check_examples("sp", n=2, trials=5)["ok"] is True
    assert lieconf.check_examples("g2")["ok"] is True
    assert lieconf.check_examples("so")["ok"] is False


def test_run():
    code, out, _ = lieconf.run(["dump-roots", "--system", "A1xA1"])
    assert code == 0
    assert json.loads(out)["rank"] == 2
    assert lieconf.run(["classify", "--max-rank", "1"])[0] == 2
