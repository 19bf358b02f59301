import json

import pytest

import sdecomp


def test_field_49():
    f = sdecomp.field(49)
    assert (f["p"], f["n"], f["q"]) == (7, 2, 49)
    assert f["modulus"] == [1, 0, 1]


def test_lucas():
    assert sdecomp.lucas_binom(5, 4, 13) == 5
    assert sdecomp.lucas_binom(10, 3, 2) == 0


def test_stepanov_fixture():
    c = sdecomp.stepanov(13, 3, [0, 7], [1, 5])
    assert c["coefficients"] == [11, 2]
    assert c["deg_f"] == 4
    assert c["bound"] == 4 and c["tight"]


def test_classify_169():
    pc = sdecomp.classify(2, 169)
    assert pc["digits"] == [6, 6]
    assert pc["is_good"]


def test_search_13_3():
    v = sdecomp.search(13, 3)
    assert v["status"] == "EXISTS"
    for w in v["witnesses"]:
        assert sdecomp.verify_witness(13, 3, w["parts"])


def test_search_prime_quadratic_residues():
    assert sdecomp.search(13, 2)["status"] == "NONE_EXHAUSTIVE"


def test_verify_rejects_bad_parts():
    assert not sdecomp.verify_witness(13, 3, [[0, 1], [1, 5]])


def test_errors_raise():
    with pytest.raises(sdecomp.SdecompError, match="NotADivisor"):
        sdecomp.classify(5, 13)
    with pytest.raises(ValueError):
        sdecomp.field(12)


def test_cli_in_process():
    code, out, _ = sdecomp.run_cli(["field", "--q", "49", "--json"])
    assert code == 0
    assert json.loads(out)["field"]["generator"] == sdecomp.field(49)["generator"]
    code, _, err = sdecomp.run_cli(["search", "--q", "13"])
    assert code == 2 and err
