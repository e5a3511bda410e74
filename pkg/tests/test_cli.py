import json
from fractions import Fraction

import pytest

from selfoverlap import __version__
from selfoverlap.cli import run
from selfoverlap.serialize import dumps, rational, to_decimal


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def as_json(capsys, *argv):
    code, out, _ = call(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


def fractions(coeffs):
    return [f"{c['coefficient']['num']}/{c['coefficient']['den']}" for c in coeffs]


def test_detect(capsys):
    env = as_json(capsys, "detect", "214365")
    assert env["command"] == "detect" and env["tool_version"] == __version__
    assert env["results"]["ranges"] == ["2", "4"]
    assert env["results"]["minimal"] == "2"


def test_detect_spaced_and_convention(capsys):
    env = as_json(capsys, "detect", "3", "4", "1", "2", "--convention", "myers")
    assert env["results"]["is_self_overlapping"] is True
    assert env["results"]["ranges"] == []
    assert env["results"]["reverse_ranges"] == ["2"]


def test_decompose(capsys):
    res = as_json(capsys, "decompose", "124356879")["results"]
    assert res["prefix"] == ["1", "1 3 2"] and res["middle"] == "1" and res["block_count"] == "5"


@pytest.mark.parametrize("family,expected", [
    ("nso", ["1", "1", "5", "21", "113", "689", "4909", "39545", "357669", "3587485"]),
    ("so", ["0", "1", "1", "3", "7", "31", "131", "775", "5211", "41315"]),
])
def test_count(capsys, family, expected):
    assert as_json(capsys, "count", "--family", family, "--max-n", "10")["results"]["values"] == expected


def test_count_m(capsys):
    assert as_json(capsys, "count", "--family", "so-m", "--max-n", "4", "--m", "2")["results"]["values"] == \
        ["0", "0", "0", "1"]
    res = as_json(capsys, "count", "--family", "nso-m", "--max-n", "4", "--m", "2")["results"]
    assert res["start"] == "0" and res["values"] == ["0", "0", "1", "2", "11"]


def test_count_csv(capsys):
    code, out, _ = call(capsys, "--format", "csv", "count", "--family", "so", "--max-n", "3")
    assert code == 0 and out == "n,value\n1,0\n2,1\n3,1\n"
    code, out2, _ = call(capsys, "count", "--family", "so", "--max-n", "3", "--format", "csv")
    assert out2 == out


def test_big_integers_are_strings(capsys):
    vals = as_json(capsys, "count", "--family", "nso", "--max-n", "30")["results"]["values"]
    assert all(isinstance(v, str) for v in vals)
    assert int(vals[-1]) > 2 ** 63


def test_coeffs(capsys):
    res = as_json(capsys, "coeffs", "--p", "3", "--m", "0", "--r", "8", "--cross-check")["results"]
    assert fractions(res["coefficients"]) == ["1/1", "-1/1", "3/2", "-13/6", "61/24", "-147/40",
                                              "3031/720", "-28813/5040"]
    assert res["cross_check"]["agree"] is True


def test_expand_so(capsys):
    res = as_json(capsys, "expand", "--target", "so", "--n", "100", "--r", "3")["results"]
    d = res["remainder_diagnostic"]
    assert abs(int(d["num"]) / int(d["den"]) - 5) < 0.05


def test_expand_so_m_and_pattern(capsys):
    res = as_json(capsys, "expand", "--target", "so-m", "--n", "4", "--r", "3", "--m", "1")["results"]
    assert res["exact"] == res["truncation"] == rational(Fraction(1, 12))
    res = as_json(capsys, "expand", "--target", "pattern", "--p", "3", "--n", "4", "--r", "3")["results"]
    assert (res["exact"]["num"], res["exact"]["den"]) == ("5", "6")
    assert res["truncation_first_form"] == rational(Fraction(5, 6))


def test_pattern(capsys):
    res = as_json(capsys, "pattern", "--pi", "132", "--n", "4")["results"]
    assert res["counts"] == {"0": "20", "1": "4", "2": "0"} and res["method"] == "closed-form"
    brute = as_json(capsys, "pattern", "--pi", "132", "--n", "4", "--brute")["results"]
    assert brute["counts"] == {"0": "20", "1": "4"}
    one = as_json(capsys, "pattern", "--pi", "132", "--n", "4", "--m", "1")["results"]
    assert one["counts"] == {"1": "4"} and (one["probability"]["num"], one["probability"]["den"]) == ("1", "6")


def test_pattern_ineligible_warns(capsys, caplog):
    code, out, _ = call(capsys, "pattern", "--pi", "123", "--n", "5")
    assert code == 0 and "not eligible" in caplog.text
    assert json.loads(out)["results"]["method"] == "scan"


def test_pattern_csv(capsys):
    code, out, _ = call(capsys, "pattern", "--pi", "132", "--n", "3", "--format", "csv")
    assert out.splitlines() == ["n,m,count", "3,0,5", "3,1,1"]


def test_sample(capsys):
    res = as_json(capsys, "sample", "--event", "so", "--n", "6", "--samples", "20000", "--seed", "4")["results"]
    assert float(res["z_score"]) < 5
    res2 = as_json(capsys, "sample", "--event", "so", "--n", "6", "--samples", "20000", "--seed", "4")["results"]
    assert res == res2
    res = as_json(capsys, "sample", "--event", "pattern", "--pi", "132", "--m", "0", "--n", "4",
                  "--samples", "20000", "--seed", "4")["results"]
    assert float(res["z_score"]) < 5
    res = as_json(capsys, "sample", "--event", "blocks", "--m", "1", "--n", "5",
                  "--samples", "20000", "--seed", "4")["results"]
    assert (res["exact"]["num"], res["exact"]["den"]) == ("1", "20")


def test_families(capsys):
    rows = as_json(capsys, "families", "--max-n", "6")["results"]["rows"]
    assert [r["simple"] for r in rows] == ["0", "0", "0", "2", "6", "46"]
    assert [r["indecomposable"] for r in rows] == ["1", "1", "3", "13", "71", "461"]
    assert isinstance(rows[5]["simple_truncation_float"], float)


@pytest.mark.parametrize("suite,max_n", [("core", 5), ("genfunc", 6), ("families", 6), ("patterns", 5)])
def test_verify(capsys, suite, max_n):
    code, out, _ = call(capsys, "verify", "--suite", suite, "--max-n", str(max_n))
    assert code == 0 and json.loads(out)["results"]["passed"] is True
    code, out, _ = call(capsys, "verify", "--suite", suite, "--max-n", str(max_n), "--inject-mismatch")
    assert code == 1 and json.loads(out)["results"]["passed"] is False


@pytest.mark.parametrize("argv", [
    ["detect", "1", "3", "3"],
    ["detect", "12x"],
    ["pattern", "--pi", "123", "--n", "4", "--m", "0", "--max-n", "14", "--brute"],
    ["expand", "--target", "so", "--n", "3", "--r", "4"],
    ["coeffs", "--p", "2", "--m", "0", "--r", "3"],
])
def test_domain_errors(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 3 and out == "" and err


@pytest.mark.parametrize("argv", [[], ["count", "--family", "so-m", "--max-n", "4"], ["bogus"],
                                  ["count", "--family", "so", "--max-n", "x"]])
def test_usage_errors(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_out_file(capsys, tmp_path):
    path = tmp_path / "o.json"
    code, out, _ = call(capsys, "count", "--family", "so", "--max-n", "4", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["results"]["values"] == ["0", "1", "1", "3"]


@pytest.mark.parametrize("argv", [
    ["detect", "214365"],
    ["coeffs", "--p", "4", "--m", "1", "--r", "6", "--cross-check"],
    ["expand", "--target", "so", "--n", "30", "--r", "3"],
    ["families", "--max-n", "7"],
])
def test_json_round_trip(capsys, argv):
    code, out, _ = call(capsys, *argv)
    assert code == 0
    assert dumps(json.loads(out)) == out


def test_decimal_rendering():
    assert to_decimal(Fraction(1, 3)) == "0.333333333333"
    assert to_decimal(Fraction(5, 2), digits=1) == "2"  # half-even
    assert to_decimal(Fraction(7, 2), digits=1) == "4"
